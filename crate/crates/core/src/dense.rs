//! Dense 8×8 matrix model of the three-qubit Pauli group.
//!
//! This is the independent oracle for [`PhasedPauli::multiply`]: operators
//! are built as explicit Kronecker products of the 2×2 Pauli matrices with
//! Gaussian-integer entries and multiplied the schoolbook way.

use num_complex::Complex;

use crate::pauli::{Pauli, PhasedPauli, QUBITS};

type C = Complex<i32>;

const DIM: usize = 1 << QUBITS;

/// An 8×8 matrix over the Gaussian integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix(pub [[C; DIM]; DIM]);

fn i_pow(k: u8) -> C {
    match k % 4 {
        0 => C::new(1, 0),
        1 => C::new(0, 1),
        2 => C::new(-1, 0),
        _ => C::new(0, -1),
    }
}

fn single(c: char) -> [[C; 2]; 2] {
    let o = C::new(0, 0);
    let l = C::new(1, 0);
    let i = C::new(0, 1);
    match c {
        'I' => [[l, o], [o, l]],
        'X' => [[o, l], [l, o]],
        'Z' => [[l, o], [o, -l]],
        'Y' => [[o, -i], [i, o]],
        _ => unreachable!("Pauli factors are I, X, Y or Z"),
    }
}

impl DenseMatrix {
    pub fn identity() -> DenseMatrix {
        let mut m = [[C::new(0, 0); DIM]; DIM];
        for (k, row) in m.iter_mut().enumerate() {
            row[k] = C::new(1, 0);
        }
        DenseMatrix(m)
    }

    /// Kronecker product of the Hermitian factors named by the Pauli string,
    /// qubit 1 being the most significant tensor slot.
    pub fn hermitian(v: Pauli) -> DenseMatrix {
        let factors: Vec<[[C; 2]; 2]> = (0..QUBITS).map(|q| single(v.factor(q))).collect();
        let mut m = [[C::new(0, 0); DIM]; DIM];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                let mut acc = C::new(1, 0);
                for (q, f) in factors.iter().enumerate() {
                    let shift = QUBITS - 1 - q;
                    acc *= f[(r >> shift) & 1][(c >> shift) & 1];
                }
                *entry = acc;
            }
        }
        DenseMatrix(m)
    }

    /// `i^t X^a Z^b` on each tensor factor; built from explicit `X` and `Z`
    /// matrices, independent of the `Y` convention.
    pub fn raw(p: PhasedPauli) -> DenseMatrix {
        let mut m = DenseMatrix::identity().scale(i_pow(p.raw_phase));
        for q in 0..QUBITS {
            let a = (p.vector.x_part() >> q) & 1;
            let b = (p.vector.z_part() >> q) & 1;
            let xq = DenseMatrix::hermitian(Pauli::from_parts(a << q, 0));
            let zq = DenseMatrix::hermitian(Pauli::from_parts(0, b << q));
            m = m.mul(&xq.mul(&zq));
        }
        m
    }

    pub fn scale(&self, s: C) -> DenseMatrix {
        let mut out = self.clone();
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        out
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        let mut out = [[C::new(0, 0); DIM]; DIM];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = (0..DIM).map(|k| self.0[r][k] * rhs.0[k][c]).sum();
            }
        }
        DenseMatrix(out)
    }

    /// Finds `(k, v)` with `self = i^k · hermitian(v)`, if any.
    pub fn decompose(&self) -> Option<(u8, Pauli)> {
        for v in Pauli::all() {
            let h = DenseMatrix::hermitian(v);
            for k in 0..4u8 {
                if h.scale(i_pow(k)) == *self {
                    return Some((k, v));
                }
            }
        }
        None
    }
}

/// Multiplies two group elements as dense matrices and reports the result as
/// a power of `i` times a canonical Hermitian string.
pub fn dense_product(a: PhasedPauli, b: PhasedPauli) -> Option<(u8, Pauli)> {
    DenseMatrix::raw(a).mul(&DenseMatrix::raw(b)).decompose()
}

/// Precomputed Hermitian matrices for all 64 vectors; speeds up exhaustive
/// agreement checks.
pub struct DenseTable {
    hermitian: Vec<DenseMatrix>,
}

impl Default for DenseTable {
    fn default() -> Self {
        DenseTable::new()
    }
}

impl DenseTable {
    pub fn new() -> DenseTable {
        DenseTable {
            hermitian: Pauli::all().map(DenseMatrix::hermitian).collect(),
        }
    }

    /// A raw-form element as `i^(t - #Y)` times its Hermitian string.
    pub fn raw(&self, p: PhasedPauli) -> DenseMatrix {
        let k = (p.raw_phase + 4 - (p.vector.y_count() % 4) as u8) % 4;
        self.hermitian[p.vector.bits() as usize].scale(i_pow(k))
    }

    /// Product as `(k, v)` with the result `i^k` times Hermitian `v`.
    pub fn product(&self, a: PhasedPauli, b: PhasedPauli) -> Option<(u8, Pauli)> {
        let m = self.raw(a).mul(&self.raw(b));
        // locate the nonzero pattern in row 0 to find the vector quickly
        for v in Pauli::all() {
            let h = &self.hermitian[v.bits() as usize];
            let col = (0..DIM).find(|&c| h.0[0][c] != C::new(0, 0))?;
            if m.0[0][col] == C::new(0, 0) {
                continue;
            }
            for k in 0..4u8 {
                if h.scale(i_pow(k)) == m {
                    return Some((k, v));
                }
            }
        }
        None
    }
}
