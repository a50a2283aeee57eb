//! The generalized quadrangle GQ(2,2) and its spreads and hyperplanes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::polar::catalog::{IsotropicLine, PolarSpace};

/// 15 points, 15 lines, three points per line and three lines per point,
/// with the quadrangle axiom.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Doily {
    points: PointSet,
    lines: Vec<IsotropicLine>,
}

/// Five pairwise disjoint doily lines covering the 15 points.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Spread {
    lines: [IsotropicLine; 5],
}

impl Spread {
    pub fn lines(&self) -> &[IsotropicLine; 5] {
        &self.lines
    }

    pub fn points(&self) -> PointSet {
        self.lines.iter().fold(PointSet::EMPTY, |acc, l| acc.union(l.mask()))
    }
}

/// Shape of a geometric hyperplane of the doily.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DoilyHyperplaneKind {
    /// Five pairwise non-collinear points.
    Ovoid,
    /// A point together with its six neighbours.
    Perp,
    /// Nine points, a 3×3 grid.
    Grid,
}

impl Doily {
    pub fn new(points: PointSet, mut lines: Vec<IsotropicLine>) -> Result<Doily> {
        lines.sort();
        lines.dedup();
        if points.len() != 15 || lines.len() != 15 {
            return Err(Error::InvalidDoily(format!(
                "{} points and {} lines",
                points.len(),
                lines.len()
            )));
        }
        if let Some(l) = lines.iter().find(|l| !l.mask().is_subset(points)) {
            return Err(Error::InvalidDoily(format!("line {l:?} leaves the point set")));
        }
        for x in points {
            let k = lines.iter().filter(|l| l.contains(x)).count();
            if k != 3 {
                return Err(Error::InvalidDoily(format!("{x} lies on {k} lines")));
            }
        }
        for l in &lines {
            for x in points.difference(l.mask()) {
                let collinear = l
                    .points()
                    .iter()
                    .filter(|&&y| lines.iter().any(|m| m.contains(x) && m.contains(y)))
                    .count();
                if collinear != 1 {
                    return Err(Error::InvalidDoily(format!(
                        "{x} is collinear with {collinear} points of {l:?}"
                    )));
                }
            }
        }
        Ok(Doily { points, lines })
    }

    /// The doily whose lines are the isotropic lines inside `core`.
    pub fn from_core(core: PointSet) -> Result<Doily> {
        Doily::new(core, PolarSpace::get().lines_within(core))
    }

    pub fn points(&self) -> PointSet {
        self.points
    }

    pub fn lines(&self) -> &[IsotropicLine] {
        &self.lines
    }

    /// Every partition of the points into lines, in canonical order.
    pub fn spreads(&self) -> Vec<Spread> {
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(5);
        self.extend_spread(PointSet::EMPTY, &mut chosen, &mut out);
        out.sort();
        out
    }

    fn extend_spread(&self, covered: PointSet, chosen: &mut Vec<IsotropicLine>, out: &mut Vec<Spread>) {
        let Some(next) = self.points.difference(covered).first() else {
            let mut lines: [IsotropicLine; 5] = chosen.as_slice().try_into().expect("five lines");
            lines.sort();
            out.push(Spread { lines });
            return;
        };
        for l in &self.lines {
            if l.contains(next) && l.mask().intersection(covered).is_empty() {
                chosen.push(*l);
                self.extend_spread(covered.union(l.mask()), chosen, out);
                chosen.pop();
            }
        }
    }

    /// (H1) relative to the doily's own lines, and proper.
    pub fn is_hyperplane(&self, set: PointSet) -> bool {
        set.is_subset(self.points)
            && set != self.points
            && self.lines.iter().all(|l| {
                let k = l.mask().intersection(set).len();
                k == 1 || k == 3
            })
    }

    /// All geometric hyperplanes of the doily by exhaustive search over
    /// subsets of its points.
    pub fn hyperplanes(&self) -> Vec<(DoilyHyperplaneKind, PointSet)> {
        let pts = self.points.to_vec();
        let mut out = Vec::new();
        for bits in 1u32..(1 << pts.len()) {
            let set: PointSet = (0..pts.len()).filter(|i| bits >> i & 1 == 1).map(|i| pts[i]).collect();
            if !self.is_hyperplane(set) {
                continue;
            }
            let kind = match set.len() {
                5 => DoilyHyperplaneKind::Ovoid,
                7 => DoilyHyperplaneKind::Perp,
                9 => DoilyHyperplaneKind::Grid,
                n => unreachable!("a doily hyperplane has 5, 7 or 9 points, found {n}"),
            };
            out.push((kind, set));
        }
        out.sort();
        out
    }

    /// The nine-point hyperplanes.
    pub fn grids(&self) -> Vec<PointSet> {
        self.hyperplanes()
            .into_iter()
            .filter(|(k, _)| *k == DoilyHyperplaneKind::Grid)
            .map(|(_, s)| s)
            .collect()
    }
}

pub fn doily_spreads(d: &Doily) -> Vec<Spread> {
    d.spreads()
}
