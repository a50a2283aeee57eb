//! Context lines: four pairwise commuting observables multiplying to ±III.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pauli::{product_phase, Pauli, Phase};
use crate::pointset::PointSet;
use crate::polar::PolarSpace;

/// A Lagrangian plane minus one of its lines, with the sign of the product
/// of the four Hermitian strings.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContextLine {
    points: [Pauli; 4],
    negative: bool,
}

/// Sign of the product of the canonical Hermitian strings of a context
/// line, as ±1.
pub fn line_sign(points: &[Pauli; 4]) -> Result<i8> {
    check_quad(points)?;
    let (phase, v) = product_phase(points.iter().copied());
    debug_assert!(v.is_identity());
    phase
        .as_sign()
        .ok_or_else(|| Error::Invariant(format!("commuting product {points:?} has phase {phase}")))
}

fn check_quad(points: &[Pauli; 4]) -> Result<()> {
    let set: PointSet = points.iter().copied().collect();
    if set.len() != 4 || set.contains(Pauli::IDENTITY) {
        return Err(Error::InvalidContextLine(format!("{points:?} are not four distinct points")));
    }
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if a.symplectic(*b) {
                return Err(Error::InvalidContextLine(format!("{a} and {b} anticommute")));
            }
        }
    }
    if !points.iter().copied().sum::<Pauli>().is_identity() {
        return Err(Error::InvalidContextLine(format!("{points:?} do not sum to zero")));
    }
    Ok(())
}

impl ContextLine {
    pub fn new(mut points: [Pauli; 4]) -> Result<ContextLine> {
        let sign = line_sign(&points)?;
        points.sort();
        Ok(ContextLine {
            points,
            negative: sign < 0,
        })
    }

    pub fn from_set(set: PointSet) -> Result<ContextLine> {
        let v = set.to_vec();
        let points: [Pauli; 4] = v
            .as_slice()
            .try_into()
            .map_err(|_| Error::InvalidContextLine(format!("{} points", v.len())))?;
        ContextLine::new(points)
    }

    /// Same points with the opposite sign. Only meaningful as a test input
    /// for value-assignment checks.
    pub fn with_flipped_sign(self) -> ContextLine {
        ContextLine {
            negative: !self.negative,
            ..self
        }
    }

    pub fn points(&self) -> [Pauli; 4] {
        self.points
    }

    pub fn mask(&self) -> PointSet {
        self.points.into_iter().collect()
    }

    pub fn contains(&self, x: Pauli) -> bool {
        self.points.contains(&x)
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn phase(&self) -> Phase {
        if self.negative {
            Phase::MINUS_ONE
        } else {
            Phase::ONE
        }
    }

    /// The three pairwise sums, a line of W(5,2).
    pub fn complementary_line(&self) -> PointSet {
        let [a, b, c, _] = self.points;
        [a + b, b + c, a + c].into_iter().collect()
    }
}

impl fmt::Debug for ContextLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.points;
        write!(f, "{}{{{a} {b} {c} {d}}}", if self.negative { '-' } else { '+' })
    }
}

impl Serialize for ContextLine {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ContextLine", 2)?;
        s.serialize_field("points", &self.points)?;
        s.serialize_field("sign", &self.sign())?;
        s.end()
    }
}

/// All 945 context lines, each a Lagrangian with one of its lines removed.
pub fn enumerate_context_lines() -> Vec<ContextLine> {
    let mut out: Vec<ContextLine> = PolarSpace::get()
        .lagrangians()
        .iter()
        .flat_map(|u| {
            u.lines()
                .into_iter()
                .map(move |l| ContextLine::from_set(u.mask().difference(l.mask())).expect("plane minus a line"))
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::DenseMatrix;

    fn quad(xs: [&str; 4]) -> [Pauli; 4] {
        xs.map(|s| s.parse().unwrap())
    }

    #[test]
    fn sign_examples() {
        assert_eq!(line_sign(&quad(["XII", "IXI", "IIX", "XXX"])), Ok(1));
        assert_eq!(line_sign(&quad(["XXX", "YYX", "YXY", "XYY"])), Ok(-1));
        assert_eq!(line_sign(&quad(["ZII", "IZI", "IIZ", "ZZZ"])), Ok(1));
    }

    #[test]
    fn sign_rejects_bad_quads() {
        assert!(line_sign(&quad(["XII", "ZII", "IIX", "YIX"])).is_err());
        assert!(line_sign(&quad(["XII", "IXI", "IIX", "XXI"])).is_err());
        assert!(line_sign(&quad(["XII", "XII", "IXI", "IXI"])).is_err());
    }

    #[test]
    fn sign_matches_dense_products_and_is_order_free() {
        for l in enumerate_context_lines() {
            let [a, b, c, d] = l.points();
            let m = [a, b, c, d]
                .iter()
                .fold(DenseMatrix::identity(), |acc, &x| acc.mul(&DenseMatrix::hermitian(x)));
            let expected = if l.is_negative() { -1 } else { 1 };
            assert_eq!(m, DenseMatrix::identity().scale(num_complex::Complex::new(expected, 0)));
            assert_eq!(line_sign(&[d, b, a, c]), Ok(l.sign()));
        }
    }

    #[test]
    fn context_line_catalog() {
        let lines = enumerate_context_lines();
        assert_eq!(lines.len(), 945);
        assert_eq!(lines.iter().filter(|l| l.is_negative()).count(), 324);
        let space = PolarSpace::get();
        for l in &lines {
            assert_eq!(space.lagrangians_containing(l.mask()).count(), 1);
            assert!(space.lines_within(l.complementary_line()).len() == 1);
        }
        let mut direct = 0;
        let pts: Vec<Pauli> = Pauli::points().collect();
        for (i, &a) in pts.iter().enumerate() {
            for (j, &b) in pts.iter().enumerate().skip(i + 1) {
                for &c in &pts[j + 1..] {
                    let d = a + b + c;
                    if d > c && line_sign(&[a, b, c, d]).is_ok() {
                        direct += 1;
                    }
                }
            }
        }
        assert_eq!(direct, 945);
    }
}
