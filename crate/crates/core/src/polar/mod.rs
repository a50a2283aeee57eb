//! The symplectic polar space W(5,2): catalogs, geometric hyperplanes,
//! Veldkamp lines and the doily.

pub mod catalog;
pub mod doily;
pub mod hyperplane;
pub mod veldkamp;

pub use catalog::{
    enumerate_isotropic_lines, enumerate_lagrangians, enumerate_points, span, IsotropicLine, Lagrangian, PolarSpace,
};
pub use doily::{doily_spreads, Doily, DoilyHyperplaneKind, Spread};
pub use hyperplane::{boxplus, hyperplane, is_geometric_hyperplane, Hyperplane, HyperplaneKind};
pub use veldkamp::{
    enumerate_veldkamp_lines_mixed, swap_involution, transport_from_canonical, veldkamp_census, VeldkampBlocks,
    VeldkampClass, VeldkampLine, VeldkampLineKind,
};
