//! Points, totally isotropic lines and Lagrangian planes of W(5,2).

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::Pauli;
use crate::pointset::PointSet;
use crate::polar::hyperplane::Hyperplane;

/// A totally isotropic line `{u, v, u+v}`, points kept sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct IsotropicLine {
    points: [Pauli; 3],
}

impl IsotropicLine {
    pub fn new(u: Pauli, v: Pauli) -> Result<IsotropicLine> {
        if u.is_identity() || v.is_identity() || u == v {
            return Err(Error::Precondition(format!("{u} and {v} do not span a line")));
        }
        if u.symplectic(v) {
            return Err(Error::Precondition(format!("{u} and {v} anticommute")));
        }
        let mut points = [u, v, u + v];
        points.sort();
        Ok(IsotropicLine { points })
    }

    pub fn from_points(points: [Pauli; 3]) -> Result<IsotropicLine> {
        let line = IsotropicLine::new(points[0], points[1])?;
        if !line.contains(points[2]) {
            return Err(Error::Precondition(format!("{points:?} is not closed under addition")));
        }
        Ok(line)
    }

    pub fn points(&self) -> [Pauli; 3] {
        self.points
    }

    pub fn contains(&self, x: Pauli) -> bool {
        self.points.contains(&x)
    }

    pub fn mask(&self) -> PointSet {
        self.points.into_iter().collect()
    }
}

/// A maximal totally isotropic subspace: seven pairwise commuting points
/// carrying the seven lines of a Fano plane.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Lagrangian {
    points: [Pauli; 7],
}

impl Lagrangian {
    /// The span of three independent pairwise commuting vectors.
    pub fn span(u: Pauli, v: Pauli, w: Pauli) -> Result<Lagrangian> {
        let set = span(&[u, v, w]);
        if set.len() != 7 {
            return Err(Error::Precondition(format!("{u}, {v}, {w} are dependent")));
        }
        if u.symplectic(v) || u.symplectic(w) || v.symplectic(w) {
            return Err(Error::Precondition(format!("{u}, {v}, {w} do not commute")));
        }
        Ok(Lagrangian::from_mask_unchecked(set))
    }

    fn from_mask_unchecked(set: PointSet) -> Lagrangian {
        let mut points = [Pauli::IDENTITY; 7];
        for (slot, x) in points.iter_mut().zip(set.iter()) {
            *slot = x;
        }
        Lagrangian { points }
    }

    pub fn points(&self) -> [Pauli; 7] {
        self.points
    }

    pub fn mask(&self) -> PointSet {
        self.points.into_iter().collect()
    }

    pub fn contains(&self, x: Pauli) -> bool {
        self.points.contains(&x)
    }

    /// The seven lines of the plane in canonical order.
    pub fn lines(&self) -> Vec<IsotropicLine> {
        let mut out = BTreeSet::new();
        for (i, &u) in self.points.iter().enumerate() {
            for &v in &self.points[i + 1..] {
                out.insert(IsotropicLine::new(u, v).expect("points of a Lagrangian commute"));
            }
        }
        out.into_iter().collect()
    }
}

/// Nonzero vectors of the GF(2) span.
pub fn span(generators: &[Pauli]) -> PointSet {
    let mut members = vec![Pauli::IDENTITY];
    for &g in generators {
        if !members.contains(&g) {
            let shifted: Vec<Pauli> = members.iter().map(|&m| m + g).collect();
            members.extend(shifted);
        }
    }
    members.into_iter().filter(|x| !x.is_identity()).collect()
}

pub fn enumerate_points() -> Vec<Pauli> {
    Pauli::points().collect()
}

pub fn enumerate_isotropic_lines() -> Vec<IsotropicLine> {
    let mut lines = Vec::with_capacity(315);
    for u in Pauli::points() {
        for v in Pauli::points().filter(|&v| v > u) {
            if !u.symplectic(v) && (u + v) > v {
                lines.push(IsotropicLine::new(u, v).expect("commuting distinct points"));
            }
        }
    }
    lines.sort();
    lines
}

pub fn enumerate_lagrangians() -> Vec<Lagrangian> {
    let mut planes = BTreeSet::new();
    for line in enumerate_isotropic_lines() {
        let [u, v, _] = line.points();
        for w in Pauli::points() {
            if !line.contains(w) && !w.symplectic(u) && !w.symplectic(v) {
                planes.insert(Lagrangian::span(u, v, w).expect("extends an isotropic line"));
            }
        }
    }
    planes.into_iter().collect()
}

/// The immutable catalog of W(5,2) together with its 127 geometric
/// hyperplanes. Build it once with [`PolarSpace::get`].
pub struct PolarSpace {
    lines: Vec<IsotropicLine>,
    line_masks: Vec<u64>,
    lagrangians: Vec<Lagrangian>,
    hyperplanes: Vec<Hyperplane>,
    by_mask: HashMap<u64, usize>,
}

impl PolarSpace {
    pub fn build() -> PolarSpace {
        let lines = enumerate_isotropic_lines();
        let line_masks = lines.iter().map(|l| l.mask().mask()).collect();
        let lagrangians = enumerate_lagrangians();
        let mut hyperplanes: Vec<Hyperplane> = Pauli::points()
            .map(|p| Hyperplane::perp(p).expect("nonzero label"))
            .chain(Pauli::all().map(Hyperplane::quadric))
            .collect();
        hyperplanes.sort();
        let by_mask = hyperplanes
            .iter()
            .enumerate()
            .map(|(i, h)| (h.points().mask(), i))
            .collect();
        PolarSpace {
            lines,
            line_masks,
            lagrangians,
            hyperplanes,
            by_mask,
        }
    }

    /// Shared process-wide catalog.
    pub fn get() -> &'static PolarSpace {
        static SPACE: OnceLock<PolarSpace> = OnceLock::new();
        SPACE.get_or_init(PolarSpace::build)
    }

    pub fn lines(&self) -> &[IsotropicLine] {
        &self.lines
    }

    pub fn lagrangians(&self) -> &[Lagrangian] {
        &self.lagrangians
    }

    /// The 63 perp sets and 64 quadrics in canonical order.
    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// Lines contained in `set`.
    pub fn lines_within(&self, set: PointSet) -> Vec<IsotropicLine> {
        self.lines
            .iter()
            .zip(&self.line_masks)
            .filter(|(_, &m)| m & !set.mask() == 0)
            .map(|(l, _)| *l)
            .collect()
    }

    pub fn lagrangians_containing(&self, set: PointSet) -> impl Iterator<Item = &Lagrangian> + '_ {
        self.lagrangians.iter().filter(move |u| set.is_subset(u.mask()))
    }

    /// (H1) over every isotropic line and (H2).
    pub fn is_geometric_hyperplane(&self, set: PointSet) -> bool {
        set != PointSet::ALL_POINTS
            && self.line_masks.iter().all(|&m| {
                let k = (m & set.mask()).count_ones();
                k == 1 || k == 3
            })
    }

    /// Looks a point set up among the 127 hyperplanes.
    pub fn identify(&self, set: PointSet) -> Result<Hyperplane> {
        self.by_mask
            .get(&set.mask())
            .map(|&i| self.hyperplanes[i])
            .ok_or(Error::NotAHyperplane)
    }
}
