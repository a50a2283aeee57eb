//! Mermin squares cut out of a double six by an apex.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::contextuality::doublesix::DoubleSix;
use crate::error::{Error, Result};
use crate::pauli::{product_phase, Pauli, SymplecticMap};
use crate::pointset::PointSet;
use crate::polar::PolarSpace;

/// A 3×3 grid of observables whose rows and columns are commuting triples
/// multiplying to ±III.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct MerminSquare {
    grid: [[Pauli; 3]; 3],
    row_signs: [i8; 3],
    col_signs: [i8; 3],
}

fn triple_sign(xs: [Pauli; 3]) -> Result<i8> {
    let (phase, v) = product_phase(xs);
    if !v.is_identity() {
        return Err(Error::Invariant(format!("{xs:?} do not sum to zero")));
    }
    phase
        .as_sign()
        .ok_or_else(|| Error::Invariant(format!("{xs:?} multiply to {phase}")))
}

impl MerminSquare {
    /// Arranges nine points into a grid from the isotropic lines they
    /// contain. Rows are the parallel class holding the least line.
    pub fn from_points(points: PointSet) -> Result<MerminSquare> {
        if points.len() != 9 {
            return Err(Error::Precondition(format!("{} points, a square has 9", points.len())));
        }
        let lines: Vec<PointSet> = PolarSpace::get()
            .lines_within(points)
            .iter()
            .map(|l| l.mask())
            .collect();
        if lines.len() != 6 {
            return Err(Error::Precondition(format!("{points:?} carries {} lines, a grid has 6", lines.len())));
        }
        let first = lines[0];
        let rows: Vec<PointSet> = lines.iter().copied().filter(|l| l.intersection(first).is_empty() || *l == first).collect();
        let cols: Vec<PointSet> = lines.iter().copied().filter(|l| !rows.contains(l)).collect();
        if rows.len() != 3 || cols.len() != 3 || cols.iter().any(|c| rows.iter().any(|r| r.intersection(*c).len() != 1)) {
            return Err(Error::Precondition(format!("lines of {points:?} do not form a grid")));
        }
        let mut grid = [[Pauli::IDENTITY; 3]; 3];
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in cols.iter().enumerate() {
                grid[i][j] = r.intersection(*c).first().expect("one meet");
            }
        }
        MerminSquare::new(grid)
    }

    pub fn new(grid: [[Pauli; 3]; 3]) -> Result<MerminSquare> {
        let mut row_signs = [0; 3];
        let mut col_signs = [0; 3];
        for i in 0..3 {
            row_signs[i] = triple_sign(grid[i])?;
            col_signs[i] = triple_sign([grid[0][i], grid[1][i], grid[2][i]])?;
        }
        Ok(MerminSquare {
            grid,
            row_signs,
            col_signs,
        })
    }

    pub fn grid(&self) -> [[Pauli; 3]; 3] {
        self.grid
    }

    pub fn row_signs(&self) -> [i8; 3] {
        self.row_signs
    }

    pub fn col_signs(&self) -> [i8; 3] {
        self.col_signs
    }

    pub fn points(&self) -> PointSet {
        self.grid.iter().flatten().copied().collect()
    }

    /// The three rows and three columns as point sets, sorted.
    pub fn lines(&self) -> BTreeSet<PointSet> {
        (0..3)
            .flat_map(|i| {
                [
                    self.grid[i].into_iter().collect(),
                    (0..3).map(|k| self.grid[k][i]).collect(),
                ]
            })
            .collect()
    }

    pub fn negative_lines(&self) -> usize {
        self.row_signs.iter().chain(&self.col_signs).filter(|&&s| s < 0).count()
    }

    pub fn transform(&self, s: &SymplecticMap) -> Result<MerminSquare> {
        MerminSquare::new(self.grid.map(|r| r.map(|x| s.apply(x))))
    }
}

/// Elevates `apex` to a highest weight: the nine other double-six points
/// commuting with it, each multiplied by `apex`.
pub fn mermin_squares_from_double_six(ds: &DoubleSix, apex: Pauli) -> Result<MerminSquare> {
    if !ds.points().contains(apex) {
        return Err(Error::ApexOutsideDoubleSix(apex.to_string()));
    }
    let block = ds.points().filter(|x| x != apex && !x.symplectic(apex));
    if block.len() != 9 {
        return Err(Error::Invariant(format!("{apex} commutes with {} double-six points", block.len())));
    }
    MerminSquare::from_points(block.map(|x| x + apex))
}

/// Tallies of the apex construction over a set of double sixes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SquareCensus {
    /// One per (double six, apex).
    pub constructions: usize,
    /// Distinct squares within each double six, summed over families.
    pub per_family: usize,
    /// Distinct nine-point sets over all families.
    pub point_sets: usize,
    /// How many families produce each point set, when that number is
    /// constant.
    pub families_per_square: Option<usize>,
}

pub fn mermin_square_census(families: &[DoubleSix]) -> Result<SquareCensus> {
    let mut owners: BTreeMap<PointSet, usize> = BTreeMap::new();
    let mut constructions = 0;
    let mut per_family = 0;
    for ds in families {
        let mut here = BTreeSet::new();
        for apex in ds.points() {
            here.insert(mermin_squares_from_double_six(ds, apex)?.points());
            constructions += 1;
        }
        per_family += here.len();
        for sq in here {
            *owners.entry(sq).or_default() += 1;
        }
    }
    let multiplicities: BTreeSet<usize> = owners.values().copied().collect();
    Ok(SquareCensus {
        constructions,
        per_family,
        point_sets: owners.len(),
        families_per_square: match multiplicities.len() {
            1 => multiplicities.first().copied(),
            _ => None,
        },
    })
}

/// Every 3×3 grid of isotropic lines in W(5,2), found from pairs of
/// disjoint lines matched by collinearity and closed by a third line.
pub fn enumerate_grids() -> Vec<PointSet> {
    let space = PolarSpace::get();
    let lines: Vec<PointSet> = space.lines().iter().map(|l| l.mask()).collect();
    let mut out = BTreeSet::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if !a.intersection(*b).is_empty() {
                continue;
            }
            let mut third = PointSet::EMPTY;
            let matched = a.iter().all(|x| {
                let partners = b.filter(|y| !x.symplectic(y));
                partners.len() == 1 && {
                    third.insert(x + partners.first().expect("one partner"));
                    true
                }
            });
            if matched && space.lines_within(third).len() == 1 {
                out.insert(a.union(*b).union(third));
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pauli {
        s.parse().unwrap()
    }

    fn lines(rows: [[&str; 3]; 3]) -> BTreeSet<PointSet> {
        MerminSquare::new(rows.map(|r| r.map(p))).unwrap().lines()
    }

    #[test]
    fn displayed_squares() {
        let ds = DoubleSix::from_labels(p("YYI"), p("YYY")).unwrap();
        let sq = mermin_squares_from_double_six(&ds, p("IIX")).unwrap();
        assert_eq!(
            sq.lines(),
            lines([["XXI", "YYI", "ZZI"], ["YZI", "ZXI", "XYI"], ["ZYI", "XZI", "YXI"]])
        );
        assert_eq!(sq.negative_lines() % 2, 1);
        let s = SymplecticMap::transvection(p("ZZX")) * SymplecticMap::transvection(p("XXX"));
        let back = sq.transform(&s).unwrap();
        let expected = lines([["XXI", "YYI", "ZZI"], ["XIX", "XZI", "IZX"], ["IXX", "ZXI", "ZIX"]]);
        assert_eq!(back.lines(), expected);
        let canonical = mermin_squares_from_double_six(&DoubleSix::canonical(), p("IIX")).unwrap();
        assert_eq!(canonical.lines(), expected);
    }

    #[test]
    fn apex_and_antipode_agree() {
        let ds = DoubleSix::canonical();
        let doily = ds.veldkamp_line().unwrap().doily().unwrap();
        let grids: BTreeSet<PointSet> = doily.grids().into_iter().collect();
        let mut seen = BTreeSet::new();
        for apex in ds.points() {
            let sq = mermin_squares_from_double_six(&ds, apex).unwrap();
            let opposite = mermin_squares_from_double_six(&ds, apex + ds.w()).unwrap();
            assert_eq!(sq.points(), opposite.points());
            assert!(grids.contains(&sq.points()));
            assert_eq!(sq.negative_lines() % 2, 1);
            seen.insert(sq.points());
        }
        assert_eq!(seen, grids);
    }

    #[test]
    fn apex_outside_is_rejected() {
        let ds = DoubleSix::canonical();
        assert_eq!(
            mermin_squares_from_double_six(&ds, p("XXI")),
            Err(Error::ApexOutsideDoubleSix("XXI".into()))
        );
    }
}
