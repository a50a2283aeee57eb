//! Perp sets C_p, quadrics H_p and the ⊞ operation.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, SymplecticMap};
use crate::pointset::PointSet;
use crate::polar::catalog::PolarSpace;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HyperplaneKind {
    Perp,
    Quadric,
}

impl std::str::FromStr for HyperplaneKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "perp" | "C" => Ok(HyperplaneKind::Perp),
            "quadric" | "H" => Ok(HyperplaneKind::Quadric),
            other => Err(Error::Precondition(format!("unknown hyperplane kind {other:?}"))),
        }
    }
}

/// A geometric hyperplane of W(5,2), tagged by how it arises.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Hyperplane {
    kind: HyperplaneKind,
    label: Pauli,
    points: PointSet,
}

impl Hyperplane {
    pub fn new(kind: HyperplaneKind, label: Pauli) -> Result<Hyperplane> {
        match kind {
            HyperplaneKind::Perp => Hyperplane::perp(label),
            HyperplaneKind::Quadric => Ok(Hyperplane::quadric(label)),
        }
    }

    /// C_p: points commuting with `p`.
    pub fn perp(p: Pauli) -> Result<Hyperplane> {
        if p.is_identity() {
            return Err(Error::PerpOfIdentity);
        }
        Ok(Hyperplane {
            kind: HyperplaneKind::Perp,
            label: p,
            points: PointSet::ALL_POINTS.filter(|x| !x.symplectic(p)),
        })
    }

    /// H_p: zeros of Q_p. Hyperbolic for symmetric `p`, elliptic otherwise.
    pub fn quadric(p: Pauli) -> Hyperplane {
        Hyperplane {
            kind: HyperplaneKind::Quadric,
            label: p,
            points: PointSet::ALL_POINTS.filter(|x| !x.qp(p)),
        }
    }

    pub fn kind(&self) -> HyperplaneKind {
        self.kind
    }

    pub fn label(&self) -> Pauli {
        self.label
    }

    pub fn points(&self) -> PointSet {
        self.points
    }

    pub fn is_quadric(&self) -> bool {
        self.kind == HyperplaneKind::Quadric
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.is_quadric() && self.label.is_symmetric()
    }

    pub fn is_elliptic(&self) -> bool {
        self.is_quadric() && self.label.q0()
    }

    /// Complement of the symmetric difference, computed pointwise and then
    /// identified among the 127 hyperplanes.
    pub fn boxplus(&self, other: &Hyperplane) -> Result<Hyperplane> {
        if self.points == other.points {
            return Err(Error::EqualHyperplanes);
        }
        let pts = self.points.symmetric_difference(other.points).complement();
        PolarSpace::get().identify(pts)
    }

    /// ⊞ by label arithmetic alone: C_a⊞C_b = C_{a+b}, H_a⊞H_b = C_{a+b},
    /// C_a⊞H_b = H_{a+b}.
    pub fn boxplus_by_label(&self, other: &Hyperplane) -> Result<Hyperplane> {
        if self == other {
            return Err(Error::EqualHyperplanes);
        }
        let sum = self.label + other.label;
        if self.kind == other.kind {
            Hyperplane::perp(sum)
        } else {
            Ok(Hyperplane::quadric(sum))
        }
    }

    /// Image of the point set under a symplectic map.
    pub fn transform(&self, s: &SymplecticMap) -> Result<Hyperplane> {
        PolarSpace::get().identify(self.points.map(|x| s.apply(x)))
    }

    /// `C_p` / `H_p` short name.
    pub fn name(&self) -> String {
        match self.kind {
            HyperplaneKind::Perp => format!("C_{}", self.label),
            HyperplaneKind::Quadric => format!("H_{}", self.label),
        }
    }
}

impl fmt::Debug for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name(), self.points.len())
    }
}

pub fn hyperplane(kind: HyperplaneKind, p: Pauli) -> Result<Hyperplane> {
    Hyperplane::new(kind, p)
}

pub fn boxplus(a: &Hyperplane, b: &Hyperplane) -> Result<Hyperplane> {
    a.boxplus(b)
}

pub fn is_geometric_hyperplane(points: PointSet) -> bool {
    PolarSpace::get().is_geometric_hyperplane(points)
}
