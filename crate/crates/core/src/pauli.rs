//! Three-qubit Pauli observables as vectors of GF(2)^6.
//!
//! A vector packs the X exponents `a1 a2 a3` into bits 0..3 and the Z
//! exponents `b1 b2 b3` into bits 3..6, qubit 1 being the leftmost
//! character of the Pauli string. The layout is frozen: every serialized
//! form goes through the three-character string, never the raw integer.

use std::fmt;
use std::ops::{Add, AddAssign, BitXor};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of qubits.
pub const QUBITS: usize = 3;

const X_MASK: u8 = 0b000_111;
const Z_MASK: u8 = 0b111_000;

/// A three-qubit Pauli observable modulo phase, i.e. a vector of V3 = GF(2)^6.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pauli(u8);

impl Pauli {
    pub const IDENTITY: Pauli = Pauli(0);

    /// Builds a vector from its packed value. Returns `None` above 63.
    pub const fn from_bits(bits: u8) -> Option<Pauli> {
        if bits < 64 {
            Some(Pauli(bits))
        } else {
            None
        }
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// X exponents, bit `k` for qubit `k + 1`.
    pub const fn x_part(self) -> u8 {
        self.0 & X_MASK
    }

    /// Z exponents, bit `k` for qubit `k + 1`.
    pub const fn z_part(self) -> u8 {
        (self.0 & Z_MASK) >> 3
    }

    pub const fn from_parts(x: u8, z: u8) -> Pauli {
        Pauli((x & X_MASK) | ((z & X_MASK) << 3))
    }

    pub const fn is_identity(self) -> bool {
        self.0 == 0
    }

    /// Single-qubit factor at position `qubit` (0-based) as one of `I X Y Z`.
    pub fn factor(self, qubit: usize) -> char {
        let a = (self.x_part() >> qubit) & 1;
        let b = (self.z_part() >> qubit) & 1;
        match (a, b) {
            (0, 0) => 'I',
            (1, 0) => 'X',
            (0, 1) => 'Z',
            _ => 'Y',
        }
    }

    /// All 64 vectors in packed order, zero included.
    pub fn all() -> impl Iterator<Item = Pauli> + Clone {
        (0u8..64).map(Pauli)
    }

    /// The 63 nonzero vectors (points of PG(5,2)) in packed order.
    pub fn points() -> impl Iterator<Item = Pauli> + Clone {
        (1u8..64).map(Pauli)
    }

    /// Number of `Y` factors.
    pub const fn y_count(self) -> u32 {
        (self.x_part() & self.z_part()).count_ones()
    }

    /// The symplectic form, `true` meaning the observables anticommute.
    pub const fn symplectic(self, other: Pauli) -> bool {
        let s = (self.x_part() & other.z_part()) ^ (self.z_part() & other.x_part());
        s.count_ones() & 1 == 1
    }

    pub const fn commutes_with(self, other: Pauli) -> bool {
        !self.symplectic(other)
    }

    /// Q0: parity of the number of `Y` factors. `true` for antisymmetric
    /// observables.
    pub const fn q0(self) -> bool {
        self.y_count() & 1 == 1
    }

    pub const fn is_symmetric(self) -> bool {
        !self.q0()
    }

    /// Q_p(x) = Q0(x) + <x, p>, evaluated at `self` with label `p`.
    pub const fn qp(self, p: Pauli) -> bool {
        self.q0() ^ self.symplectic(p)
    }

    /// Transvection T_p: x + <x, p> p, applied to `self`.
    pub const fn transvect(self, p: Pauli) -> Pauli {
        if self.symplectic(p) {
            Pauli(self.0 ^ p.0)
        } else {
            self
        }
    }
}

/// Free-function form of the symplectic product.
pub fn symplectic_product(x: Pauli, y: Pauli) -> bool {
    x.symplectic(y)
}

pub fn q0(x: Pauli) -> bool {
    x.q0()
}

/// Quadratic form Q_p evaluated at `x`.
pub fn qp(p: Pauli, x: Pauli) -> bool {
    x.qp(p)
}

pub fn transvection(p: Pauli, x: Pauli) -> Pauli {
    x.transvect(p)
}

impl BitXor for Pauli {
    type Output = Pauli;
    fn bitxor(self, rhs: Pauli) -> Pauli {
        Pauli(self.0 ^ rhs.0)
    }
}

impl Add for Pauli {
    type Output = Pauli;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Pauli) -> Pauli {
        self ^ rhs
    }
}

impl AddAssign for Pauli {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Pauli) {
        self.0 ^= rhs.0;
    }
}

impl std::iter::Sum for Pauli {
    fn sum<I: Iterator<Item = Pauli>>(iter: I) -> Pauli {
        iter.fold(Pauli::IDENTITY, |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Pauli> for Pauli {
    fn sum<I: Iterator<Item = &'a Pauli>>(iter: I) -> Pauli {
        iter.copied().sum()
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..QUBITS {
            write!(f, "{}", self.factor(q))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Pauli {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pauli> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != QUBITS {
            return Err(Error::ParsePauli {
                input: s.to_owned(),
                reason: format!("expected {QUBITS} characters, found {}", chars.len()),
            });
        }
        let (mut x, mut z) = (0u8, 0u8);
        for (q, c) in chars.into_iter().enumerate() {
            let (a, b) = match c {
                'I' => (0, 0),
                'X' => (1, 0),
                'Z' => (0, 1),
                'Y' => (1, 1),
                other => {
                    return Err(Error::ParsePauli {
                        input: s.to_owned(),
                        reason: format!("invalid character {other:?} at position {}", q + 1),
                    })
                }
            };
            x |= a << q;
            z |= b << q;
        }
        Ok(Pauli::from_parts(x, z))
    }
}

pub fn parse_pauli(s: &str) -> Result<Pauli> {
    s.parse()
}

pub fn format_pauli(x: Pauli) -> String {
    x.to_string()
}

impl Serialize for Pauli {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Pauli {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Pauli, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A power of the imaginary unit, `i^k` with `k` in 0..4.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub const fn from_exponent(k: u32) -> Phase {
        Phase((k % 4) as u8)
    }

    pub const fn exponent(self) -> u8 {
        self.0
    }

    /// `Some(±1)` for real phases.
    pub const fn as_sign(self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        })
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An element of the Pauli group P3 in the raw form
/// `i^t · X^a1 Z^b1 ⊗ X^a2 Z^b2 ⊗ X^a3 Z^b3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PhasedPauli {
    /// Exponent of `i`, taken mod 4, in the raw `X^a Z^b` form.
    pub raw_phase: u8,
    pub vector: Pauli,
}

impl PhasedPauli {
    pub const fn new(raw_phase: u8, vector: Pauli) -> PhasedPauli {
        PhasedPauli { raw_phase: raw_phase % 4, vector }
    }

    /// The Hermitian Pauli string for `v` with sign `+1`. Since `Y = iXZ`,
    /// its raw phase is the number of `Y` factors.
    pub const fn hermitian(v: Pauli) -> PhasedPauli {
        PhasedPauli::new((v.y_count() % 4) as u8, v)
    }

    /// The prefactor `s` in `s · A1 A2 A3` with `A1 A2 A3` the canonical
    /// Hermitian string of the same vector.
    pub const fn sign_relative_to_canonical(self) -> Phase {
        Phase::from_exponent(self.raw_phase as u32 + 4 - self.vector.y_count() % 4)
    }

    /// Exact group product. Moving `Z^b` past `X^a'` on each qubit costs
    /// `(-1)^(b·a')`, so the raw phase gains `2·(b·a')`.
    pub const fn multiply(self, rhs: PhasedPauli) -> PhasedPauli {
        let swaps = (self.vector.z_part() & rhs.vector.x_part()).count_ones();
        PhasedPauli::new(
            ((self.raw_phase as u32 + rhs.raw_phase as u32 + 2 * swaps) % 4) as u8,
            Pauli(self.vector.0 ^ rhs.vector.0),
        )
    }
}

impl std::ops::Mul for PhasedPauli {
    type Output = PhasedPauli;
    fn mul(self, rhs: PhasedPauli) -> PhasedPauli {
        self.multiply(rhs)
    }
}

pub fn multiply(a: PhasedPauli, b: PhasedPauli) -> PhasedPauli {
    a.multiply(b)
}

/// Phase of the ordered product of the canonical Hermitian strings, relative
/// to the canonical string of the resulting vector.
pub fn product_phase<I: IntoIterator<Item = Pauli>>(factors: I) -> (Phase, Pauli) {
    let p = factors
        .into_iter()
        .map(PhasedPauli::hermitian)
        .fold(PhasedPauli::hermitian(Pauli::IDENTITY), PhasedPauli::multiply);
    (p.sign_relative_to_canonical(), p.vector)
}

/// An ordered symplectic basis `(e1, e2, e3, f1, f2, f3)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticBasis {
    pub e: [Pauli; 3],
    pub f: [Pauli; 3],
}

impl SymplecticBasis {
    pub fn new(e: [Pauli; 3], f: [Pauli; 3]) -> Result<SymplecticBasis> {
        let vs = [e[0], e[1], e[2], f[0], f[1], f[2]];
        if !is_symplectic_basis(&vs) {
            return Err(Error::InvalidBasis(format!("{vs:?}")));
        }
        Ok(SymplecticBasis { e, f })
    }

    /// `(XII, IXI, IIX, ZII, IZI, IIZ)`.
    pub fn canonical() -> SymplecticBasis {
        let e = [Pauli(0b000_001), Pauli(0b000_010), Pauli(0b000_100)];
        let f = [Pauli(0b001_000), Pauli(0b010_000), Pauli(0b100_000)];
        SymplecticBasis { e, f }
    }

    pub fn vectors(&self) -> [Pauli; 6] {
        [self.e[0], self.e[1], self.e[2], self.f[0], self.f[1], self.f[2]]
    }

    /// Recovers a basis from six vectors in any order, provided the
    /// anticommuting pairs form a perfect matching. Pairs are ordered by
    /// their smaller member, and within a pair the smaller vector is `e`.
    pub fn from_unordered(vs: &[Pauli; 6]) -> Result<SymplecticBasis> {
        let mut sorted = *vs;
        sorted.sort();
        let mut used = [false; 6];
        let mut e = [Pauli::IDENTITY; 3];
        let mut f = [Pauli::IDENTITY; 3];
        let mut k = 0;
        for i in 0..6 {
            if used[i] {
                continue;
            }
            let partners: Vec<usize> = (0..6)
                .filter(|&j| j != i && sorted[i].symplectic(sorted[j]))
                .collect();
            let &[j] = partners.as_slice() else {
                return Err(Error::InvalidBasis(format!(
                    "{} anticommutes with {} of the other vectors",
                    sorted[i],
                    partners.len()
                )));
            };
            if used[j] || k == 3 {
                return Err(Error::InvalidBasis(format!("{sorted:?}")));
            }
            used[i] = true;
            used[j] = true;
            e[k] = sorted[i];
            f[k] = sorted[j];
            k += 1;
        }
        SymplecticBasis::new(e, f)
    }
}

/// Checks the pairing `<e_i,e_j> = <f_i,f_j> = 0`, `<e_i,f_j> = δ_ij` for
/// vectors ordered `(e1, e2, e3, f1, f2, f3)`.
pub fn is_symplectic_basis(vs: &[Pauli; 6]) -> bool {
    (0..3).all(|i| {
        (0..3).all(|j| {
            !vs[i].symplectic(vs[j])
                && !vs[i + 3].symplectic(vs[j + 3])
                && vs[i].symplectic(vs[j + 3]) == (i == j)
        })
    })
}

/// A 6×6 matrix over GF(2) acting on column vectors; row `i` holds the
/// coefficients of output bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymplecticMap {
    rows: [u8; 6],
}

impl SymplecticMap {
    pub const IDENTITY: SymplecticMap = SymplecticMap {
        rows: [1, 2, 4, 8, 16, 32],
    };

    /// The Gram matrix of the form in the canonical basis, `[[0, I], [I, 0]]`.
    pub const J: SymplecticMap = SymplecticMap {
        rows: [8, 16, 32, 1, 2, 4],
    };

    /// Wraps raw rows without checking the symplectic condition.
    pub const fn from_rows(rows: [u8; 6]) -> SymplecticMap {
        SymplecticMap {
            rows: [
                rows[0] & 63,
                rows[1] & 63,
                rows[2] & 63,
                rows[3] & 63,
                rows[4] & 63,
                rows[5] & 63,
            ],
        }
    }

    /// Rows must describe a matrix with `SᵀJS = J`.
    pub fn new(rows: [u8; 6]) -> Result<SymplecticMap> {
        let s = SymplecticMap::from_rows(rows);
        if s.is_symplectic() {
            Ok(s)
        } else {
            Err(Error::Precondition("matrix does not preserve the symplectic form".into()))
        }
    }

    pub const fn rows(&self) -> [u8; 6] {
        self.rows
    }

    /// Matrix of the transvection T_p. Column `j` is `T_p(e_j)`.
    pub fn transvection(p: Pauli) -> SymplecticMap {
        let mut cols = [0u8; 6];
        for (j, col) in cols.iter_mut().enumerate() {
            *col = Pauli(1 << j).transvect(p).0;
        }
        SymplecticMap::from_columns(cols)
    }

    pub fn from_columns(cols: [u8; 6]) -> SymplecticMap {
        let mut rows = [0u8; 6];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, col) in cols.iter().enumerate() {
                *row |= ((col >> i) & 1) << j;
            }
        }
        SymplecticMap { rows }
    }

    pub fn apply(&self, x: Pauli) -> Pauli {
        let mut out = 0u8;
        for (i, row) in self.rows.iter().enumerate() {
            out |= (((row & x.0).count_ones() & 1) as u8) << i;
        }
        Pauli(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SymplecticMap) -> SymplecticMap {
        let mut rows = [0u8; 6];
        for (i, row) in rows.iter_mut().enumerate() {
            for k in 0..6 {
                if (self.rows[i] >> k) & 1 == 1 {
                    *row ^= other.rows[k];
                }
            }
        }
        SymplecticMap { rows }
    }

    pub fn transpose(&self) -> SymplecticMap {
        SymplecticMap::from_columns(self.rows)
    }

    /// `SᵀJS = J`.
    pub fn is_symplectic(&self) -> bool {
        self.transpose().compose(&SymplecticMap::J).compose(self) == SymplecticMap::J
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self) == SymplecticMap::IDENTITY
    }
}

impl std::ops::Mul for SymplecticMap {
    type Output = SymplecticMap;
    fn mul(self, rhs: SymplecticMap) -> SymplecticMap {
        self.compose(&rhs)
    }
}

impl fmt::Debug for SymplecticMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("{r:06b}")).collect();
        write!(f, "SymplecticMap[{}]", rows.join(" "))
    }
}

pub fn transvection_matrix(p: Pauli) -> SymplecticMap {
    SymplecticMap::transvection(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pauli {
        s.parse().unwrap()
    }

    #[test]
    fn parses_documented_strings() {
        assert_eq!(p("XII").bits(), 0b000_001);
        assert_eq!(p("III"), Pauli::IDENTITY);
        // (a1,a2,a3,b1,b2,b3) = (1,1,0,0,1,1)
        assert_eq!(p("XYZ"), Pauli::from_parts(0b011, 0b110));
    }

    #[test]
    fn rejects_bad_strings() {
        let err = "XQZ".parse::<Pauli>().unwrap_err();
        assert!(err.to_string().contains("'Q'"), "{err}");
        assert!("XX".parse::<Pauli>().is_err());
        assert!("XXXX".parse::<Pauli>().is_err());
        assert!("xyz".parse::<Pauli>().is_err());
    }

    #[test]
    fn string_round_trip_covers_all_vectors() {
        for x in Pauli::all() {
            assert_eq!(x.to_string().parse::<Pauli>().unwrap(), x);
        }
    }

    #[test]
    fn symplectic_examples() {
        assert!(symplectic_product(p("XII"), p("ZII")));
        assert!(symplectic_product(p("XXX"), p("YYY")));
        for x in Pauli::all() {
            assert!(!x.symplectic(x));
        }
    }

    #[test]
    fn quadratic_form_examples() {
        assert!(q0(p("YYY")));
        assert!(!q0(p("XXZ")));
        assert!(!q0(p("III")));
        assert!(qp(p("YYY"), p("XYZ")));
        assert!(!qp(p("YYY"), p("XXI")));
        for x in Pauli::all() {
            assert_eq!(qp(Pauli::IDENTITY, x), q0(x));
        }
    }

    #[test]
    fn symmetric_label_counts() {
        assert_eq!(Pauli::all().filter(|x| !x.q0()).count(), 36);
        assert_eq!(Pauli::all().filter(|x| x.q0()).count(), 28);
    }

    #[test]
    fn bilinearity_is_exhaustive() {
        for x in Pauli::all() {
            for y in Pauli::all() {
                for z in Pauli::all() {
                    assert_eq!((x + y).symplectic(z), x.symplectic(z) ^ y.symplectic(z));
                }
            }
        }
    }

    #[test]
    fn polarization_for_every_label() {
        for l in Pauli::all() {
            for x in Pauli::all() {
                for y in Pauli::all() {
                    assert_eq!(x.symplectic(y), (x + y).qp(l) ^ x.qp(l) ^ y.qp(l));
                }
            }
        }
    }

    #[test]
    fn xz_is_minus_i_y() {
        let prod = PhasedPauli::hermitian(p("XII")) * PhasedPauli::hermitian(p("ZII"));
        assert_eq!(prod.vector, p("YII"));
        assert_eq!(prod.sign_relative_to_canonical(), Phase::MINUS_I);
    }

    #[test]
    fn hermitian_strings_square_to_identity() {
        for x in Pauli::all() {
            let h = PhasedPauli::hermitian(x);
            let sq = h * h;
            assert_eq!(sq.vector, Pauli::IDENTITY);
            assert_eq!(sq.sign_relative_to_canonical(), Phase::ONE);
        }
    }

    #[test]
    fn ghz_line_is_negative() {
        let (phase, v) = product_phase(["XXX", "YYX", "YXY", "XYY"].map(p));
        assert_eq!(v, Pauli::IDENTITY);
        assert_eq!(phase, Phase::MINUS_ONE);
    }

    #[test]
    fn transvection_examples() {
        assert_eq!(transvection(p("YYY"), p("XXX")), p("ZZZ"));
        // XXZ anticommutes with YYY, so it is swapped with its partner
        assert_eq!(transvection(p("YYY"), p("XXZ")), p("ZZX"));
        assert_eq!(transvection(p("YYY"), p("XXI")), p("XXI"));
        for q in Pauli::all() {
            for x in Pauli::all() {
                if !x.symplectic(q) {
                    assert_eq!(transvection(q, x), x);
                }
                assert_eq!(transvection(q, transvection(q, x)), x);
            }
        }
    }

    #[test]
    fn transvection_matrices() {
        assert_eq!(transvection_matrix(Pauli::IDENTITY), SymplecticMap::IDENTITY);
        for q in Pauli::all() {
            let t = transvection_matrix(q);
            assert!(t.is_symplectic());
            assert!(t.is_involution());
            for x in Pauli::all() {
                assert_eq!(t.apply(x), x.transvect(q));
            }
        }
        let s = transvection_matrix(p("ZZX")) * transvection_matrix(p("XXX"));
        assert_eq!(s.apply(p("IIX")), p("IIX"));
        assert_eq!(s.apply(p("YYZ")), p("IIZ"));
        assert!(s.is_symplectic());
    }

    #[test]
    fn non_symplectic_matrix_is_rejected() {
        // swaps a1 and b2 only
        let mut cols = [1u8, 2, 4, 8, 16, 32];
        cols.swap(0, 4);
        let m = SymplecticMap::from_columns(cols);
        assert!(!m.is_symplectic());
        assert!(SymplecticMap::new(m.rows()).is_err());
    }

    #[test]
    fn basis_checks() {
        let b = ["XII", "IXI", "IIX", "ZII", "IZI", "IIZ"].map(p);
        assert!(is_symplectic_basis(&b));
        assert!(!is_symplectic_basis(&["XII", "XII", "IIX", "ZII", "IZI", "IIZ"].map(p)));
        // IIY pairs with IIX exactly as IIZ does
        assert!(is_symplectic_basis(&["XII", "IXI", "IIX", "ZII", "IZI", "IIY"].map(p)));
        assert!(!is_symplectic_basis(&["XII", "IXI", "IIX", "ZII", "IZI", "IXZ"].map(p)));
        assert_eq!(SymplecticBasis::canonical().vectors(), b);
    }

    #[test]
    fn basis_from_unordered_vectors() {
        let shuffled = ["IIZ", "XII", "IZI", "IIX", "ZII", "IXI"].map(p);
        let b = SymplecticBasis::from_unordered(&shuffled).unwrap();
        assert!(is_symplectic_basis(&b.vectors()));
        let bad = ["IIZ", "XII", "IIY", "IIX", "ZII", "IXI"].map(p);
        assert!(SymplecticBasis::from_unordered(&bad).is_err());
    }

    #[test]
    fn serde_uses_pauli_strings() {
        let json = serde_json::to_string(&p("XYZ")).unwrap();
        assert_eq!(json, "\"XYZ\"");
        assert_eq!(serde_json::from_str::<Pauli>(&json).unwrap(), p("XYZ"));
        assert!(serde_json::from_str::<Pauli>("\"XYW\"").is_err());
    }
}
