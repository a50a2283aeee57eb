//! Seven mutually anticommuting observables and the four blocks they cut
//! out of the 63 points.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::Pauli;
use crate::pointset::PointSet;

/// Generators `Γ_1 … Γ_7` of a seven-dimensional Clifford algebra, modulo
/// phases.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct CliffordFrame {
    gammas: [Pauli; 7],
}

impl CliffordFrame {
    pub fn new(gammas: [Pauli; 7]) -> Result<CliffordFrame> {
        for (i, a) in gammas.iter().enumerate() {
            if a.is_identity() {
                return Err(Error::InvalidFrame("identity among the generators".into()));
            }
            for b in &gammas[i + 1..] {
                if !a.symplectic(*b) {
                    return Err(Error::InvalidFrame(format!("{a} and {b} commute")));
                }
            }
        }
        let sum: Pauli = gammas.iter().sum();
        if !sum.is_identity() {
            return Err(Error::InvalidFrame(format!("generators sum to {sum}")));
        }
        Ok(CliffordFrame { gammas })
    }

    /// `(ZYI, YIX, XYI, IXY, YIZ, IZY, YYY)`.
    pub fn choice() -> CliffordFrame {
        "ZYI,YIX,XYI,IXY,YIZ,IZY,YYY".parse().expect("valid frame")
    }

    /// `(IXX, IYX, IZX, XIZ, YIZ, ZIZ, IIY)`.
    pub fn choicei7() -> CliffordFrame {
        "IXX,IYX,IZX,XIZ,YIZ,ZIZ,IIY".parse().expect("valid frame")
    }

    pub fn named(name: &str) -> Result<CliffordFrame> {
        match name {
            "choice" => Ok(CliffordFrame::choice()),
            "choicei7" => Ok(CliffordFrame::choicei7()),
            other => other.parse(),
        }
    }

    pub fn gammas(&self) -> [Pauli; 7] {
        self.gammas
    }

    /// Number of symmetric generators.
    pub fn symmetric_count(&self) -> usize {
        self.gammas.iter().filter(|g| g.is_symmetric()).count()
    }
}

/// Seven Pauli strings separated by commas or whitespace.
impl FromStr for CliffordFrame {
    type Err = Error;
    fn from_str(s: &str) -> Result<CliffordFrame> {
        let xs: Vec<Pauli> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        let gammas: [Pauli; 7] = xs
            .try_into()
            .map_err(|v: Vec<Pauli>| Error::InvalidFrame(format!("{} generators, need 7", v.len())))?;
        CliffordFrame::new(gammas)
    }
}

/// The four point sets `{Γ_μΓ_νΓ_ρ}`, `{Γ_μ, Γ_μΓ_7}`, `{Γ_μΓ_ν, Γ_7}`,
/// `{Γ_μΓ_νΓ_7}` with `1 ≤ μ < ν < ρ ≤ 6`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FramePartition {
    pub triples: PointSet,
    pub singles: PointSet,
    pub pairs: PointSet,
    pub pairs_with_seventh: PointSet,
}

impl FramePartition {
    pub fn sizes(&self) -> [usize; 4] {
        [self.triples, self.singles, self.pairs, self.pairs_with_seventh].map(PointSet::len)
    }

    /// The blocks are disjoint and cover all 63 points.
    pub fn is_partition(&self) -> bool {
        let blocks = [self.triples, self.singles, self.pairs, self.pairs_with_seventh];
        blocks.iter().map(|b| b.len()).sum::<usize>() == 63
            && blocks.iter().fold(PointSet::EMPTY, |acc, b| acc.union(*b)) == PointSet::ALL_POINTS
    }
}

pub fn clifford_frame_partition(fr: &CliffordFrame) -> FramePartition {
    let g = fr.gammas;
    let g7 = g[6];
    let mut out = FramePartition {
        triples: PointSet::EMPTY,
        singles: PointSet::EMPTY,
        pairs: PointSet::singleton(g7),
        pairs_with_seventh: PointSet::EMPTY,
    };
    for m in 0..6 {
        out.singles.insert(g[m]);
        out.singles.insert(g[m] + g7);
        for n in m + 1..6 {
            out.pairs.insert(g[m] + g[n]);
            out.pairs_with_seventh.insert(g[m] + g[n] + g7);
            for r in n + 1..6 {
                out.triples.insert(g[m] + g[n] + g[r]);
            }
        }
    }
    out
}

/// Counts of unordered frames.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FrameCensus {
    pub total: usize,
    /// Four symmetric and three antisymmetric generators.
    pub mixed: usize,
    /// Seven antisymmetric generators.
    pub antisymmetric: usize,
    /// Ordered 7-tuples divided by `7!`.
    pub ordered_over_factorial: usize,
}

fn extend(chosen: &mut Vec<Pauli>, from: Pauli, ordered: bool, out: &mut Vec<[Pauli; 7]>, count: &mut usize) {
    if chosen.len() == 7 {
        *count += 1;
        if !ordered {
            out.push(chosen.as_slice().try_into().expect("seven"));
        }
        return;
    }
    for x in Pauli::points() {
        if (!ordered && x <= from) || chosen.contains(&x) || chosen.iter().any(|c| !c.symplectic(x)) {
            continue;
        }
        chosen.push(x);
        extend(chosen, x, ordered, out, count);
        chosen.pop();
    }
}

/// Backtracks over all sets of seven pairwise anticommuting points and,
/// independently, over ordered tuples.
pub fn clifford_frame_census() -> Result<FrameCensus> {
    let frames: Vec<[Pauli; 7]> = Pauli::points()
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut n = 0;
            extend(&mut vec![first], first, false, &mut out, &mut n);
            out
        })
        .collect();
    let ordered: usize = Pauli::points()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|first| {
            let mut n = 0;
            extend(&mut vec![first], first, true, &mut Vec::new(), &mut n);
            n
        })
        .sum();
    let mut mixed = 0;
    let mut antisymmetric = 0;
    for f in &frames {
        let fr = CliffordFrame::new(*f)?;
        match fr.symmetric_count() {
            0 => antisymmetric += 1,
            4 => mixed += 1,
            k => return Err(Error::Invariant(format!("frame {f:?} has {k} symmetric generators"))),
        }
    }
    if !ordered.is_multiple_of(5040) {
        return Err(Error::Invariant(format!("{ordered} ordered frames is not a multiple of 7!")));
    }
    Ok(FrameCensus {
        total: frames.len(),
        mixed,
        antisymmetric,
        ordered_over_factorial: ordered / 5040,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polar::VeldkampLine;

    fn p(s: &str) -> Pauli {
        s.parse().unwrap()
    }

    #[test]
    fn frames_validate() {
        assert_eq!(CliffordFrame::choice().symmetric_count(), 0);
        assert_eq!(CliffordFrame::choicei7().symmetric_count(), 4);
        assert!("ZYI,YIX,XYI,IXY,YIZ,IZY".parse::<CliffordFrame>().is_err());
        assert!("ZYI,YIX,XYI,IXY,YIZ,IZY,YYI".parse::<CliffordFrame>().is_err());
        assert!(CliffordFrame::named("choice").is_ok());
    }

    #[test]
    fn choice_reproduces_the_canonical_blocks() {
        let part = clifford_frame_partition(&CliffordFrame::choice());
        assert_eq!(part.sizes(), [20, 12, 16, 15]);
        assert!(part.is_partition());
        let b = VeldkampLine::canonical().blocks().unwrap();
        assert_eq!(
            [part.triples, part.singles, part.pairs, part.pairs_with_seventh],
            [b.hyperbolic, b.elliptic, b.perp, b.core]
        );
        // 7 + 21 antisymmetric, 35 symmetric
        let antisym = part.singles.union(PointSet::singleton(p("YYY"))).union(part.pairs);
        assert!(antisym.iter().all(|x| x.q0()));
        assert!(part.triples.union(part.pairs_with_seventh).iter().all(|x| x.is_symmetric()));
    }

    #[test]
    fn choicei7_reproduces_the_transported_blocks() {
        let part = clifford_frame_partition(&CliffordFrame::choicei7());
        let b = VeldkampLine::mixed(p("YYI"), p("YYY")).unwrap().blocks().unwrap();
        assert_eq!(
            [part.triples, part.singles, part.pairs, part.pairs_with_seventh],
            [b.hyperbolic, b.elliptic, b.perp, b.core]
        );
    }
}
