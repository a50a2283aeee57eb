//! The A5 root system and the weights of its 20-dimensional irrep.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Simple roots `α_i = e_i − e_{i+1}` of A5 inside the hyperplane of R^6
/// orthogonal to `n = (1,…,1)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RootSystemA5 {
    pub simple_roots: [[i64; 6]; 5],
    pub cartan: [[i64; 5]; 5],
    /// `6·A^{-1}`.
    pub cartan_inverse_times_6: [[i64; 5]; 5],
    pub normal: [i64; 6],
}

impl Default for RootSystemA5 {
    fn default() -> Self {
        RootSystemA5::new()
    }
}

impl RootSystemA5 {
    pub fn new() -> RootSystemA5 {
        let simple_roots: [[i64; 6]; 5] = std::array::from_fn(|i| {
            let mut r = [0; 6];
            r[i] = 1;
            r[i + 1] = -1;
            r
        });
        let cartan = std::array::from_fn(|i| std::array::from_fn(|j| dot(&simple_roots[i], &simple_roots[j])));
        // 6·G_ij = 6·min(i,j)·(6 − max(i,j)) / 6 with 1-based indices
        let cartan_inverse_times_6 = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let (lo, hi) = (i.min(j) as i64 + 1, i.max(j) as i64 + 1);
                lo * (6 - hi)
            })
        });
        RootSystemA5 {
            simple_roots,
            cartan,
            cartan_inverse_times_6,
            normal: [1; 6],
        }
    }

    /// `A · 6G = 6·I`.
    pub fn inverse_is_exact(&self) -> bool {
        (0..5).all(|i| {
            (0..5).all(|j| {
                let s: i64 = (0..5).map(|k| self.cartan[i][k] * self.cartan_inverse_times_6[k][j]).sum();
                s == if i == j { 6 } else { 0 }
            })
        })
    }

    /// `G_ij` as exact rationals.
    pub fn inverse(&self) -> [[Rational; 5]; 5] {
        self.cartan_inverse_times_6
            .map(|row| row.map(|g| Rational::new(g, 6)))
    }
}

fn dot(a: &[i64; 6], b: &[i64; 6]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A weight stored as `2Λ` in the orthonormal basis of R^6.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Weight {
    pub coords2: [i64; 6],
}

impl Weight {
    pub fn new(coords2: [i64; 6]) -> Result<Weight> {
        let sum: i64 = coords2.iter().sum();
        if sum != 0 {
            return Err(Error::OffHyperplaneWeight(sum));
        }
        Ok(Weight { coords2 })
    }

    /// `(Λ, Λ′) = 2Λ·2Λ′ / 4`.
    pub fn scalar(&self, other: &Weight) -> Rational {
        Rational::new(dot(&self.coords2, &other.coords2), 4)
    }

    pub fn negate(&self) -> Weight {
        Weight {
            coords2: self.coords2.map(|c| -c),
        }
    }

    /// `Λ − α_i` for `i` in `1..=5`.
    pub fn minus_root(&self, i: usize) -> Weight {
        let mut c = self.coords2;
        c[i - 1] -= 2;
        c[i] += 2;
        Weight { coords2: c }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords2: std::array::from_fn(|k| self.coords2[k] + other.coords2[k]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords2 == [0; 6]
    }
}

/// `a_i = (Λ, α_i)`, integral for every weight of the lattice.
pub fn dynkin_labels(w: &Weight) -> Result<[i64; 5]> {
    Weight::new(w.coords2)?;
    let labels2: [i64; 5] = std::array::from_fn(|i| w.coords2[i] - w.coords2[i + 1]);
    if labels2.iter().any(|a| a % 2 != 0) {
        return Err(Error::InvalidWeight(format!("{:?} has half-integral Dynkin labels", w.coords2)));
    }
    Ok(labels2.map(|a| a / 2))
}

/// Components `λ_j` in the basis of simple roots: `λ = G·a`.
pub fn dual_components(w: &Weight) -> Result<[Rational; 5]> {
    let a = dynkin_labels(w)?;
    let g = RootSystemA5::new().inverse();
    Ok(std::array::from_fn(|j| (0..5).map(|i| g[j][i] * a[i]).sum()))
}

/// Rebuilds `2Λ = 2·Σ λ_j α_j`; fails unless the result is integral.
pub fn from_dual_components(lambda: &[Rational; 5]) -> Result<Weight> {
    let roots = RootSystemA5::new().simple_roots;
    let coords: [Rational; 6] =
        std::array::from_fn(|k| (0..5).map(|j| lambda[j] * roots[j][k] * 2).sum::<Rational>());
    if coords.iter().any(|c| !c.is_integer()) {
        return Err(Error::InvalidWeight(format!("{coords:?} is not integral")));
    }
    Weight::new(coords.map(|c| c.to_integer()))
}

/// `a′·G·a`.
pub fn scalar_from_labels(a: &[i64; 5], b: &[i64; 5]) -> Rational {
    let g = RootSystemA5::new().inverse();
    (0..5)
        .flat_map(|i| (0..5).map(move |j| (i, j)))
        .map(|(i, j)| g[i][j] * a[i] * b[j])
        .sum()
}

/// The highest weight with Dynkin labels `(0,0,1,0,0)`.
pub fn highest_weight() -> Weight {
    Weight {
        coords2: [1, 1, 1, -1, -1, -1],
    }
}

/// Walks down from the highest weight subtracting `α_i` while `a_i > 0`
/// and checks the result against the closed form: every vector with three
/// entries `+1` and three `−1`.
pub fn generate_irrep20() -> Result<Vec<Weight>> {
    let mut seen = BTreeSet::from([highest_weight()]);
    let mut frontier = vec![highest_weight()];
    while let Some(w) = frontier.pop() {
        let a = dynkin_labels(&w)?;
        for i in 1..=5 {
            // a_i > 0 means every string through w reaches w − α_i
            for k in 1..=a[i - 1] {
                let mut next = w;
                for _ in 0..k {
                    next = next.minus_root(i);
                }
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
    }
    let closed: BTreeSet<Weight> = (0u32..64)
        .filter(|m| m.count_ones() == 3)
        .map(|m| Weight {
            coords2: std::array::from_fn(|k| if m >> k & 1 == 1 { 1 } else { -1 }),
        })
        .collect();
    if seen != closed {
        return Err(Error::Invariant(format!(
            "subtraction walk found {} weights, closed form has {}",
            seen.len(),
            closed.len()
        )));
    }
    Ok(seen.into_iter().rev().collect())
}
