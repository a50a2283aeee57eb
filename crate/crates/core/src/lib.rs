//! Finite geometry of the three-qubit Pauli group.
//!
//! Observables modulo phase are vectors of GF(2)^6 ([`Pauli`]); the
//! commuting structure is the symplectic polar space W(5,2) ([`polar`]).
//! On top of it sit Mermin pentagrams, their double-six families and Mermin
//! squares ([`contextuality`]), and the weight diagram of the 20 of A5 with
//! its observable labelling ([`weights`]). Every result is computed by
//! exhaustive, deterministic enumeration.

pub mod contextuality;
pub mod dense;
pub mod error;
pub mod pauli;
pub mod pointset;
pub mod polar;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use pauli::{Pauli, Phase, PhasedPauli, SymplecticBasis, SymplecticMap};
pub use pointset::PointSet;
