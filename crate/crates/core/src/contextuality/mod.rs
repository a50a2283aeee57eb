//! Mermin pentagrams and squares, double sixes and value-assignment checks.

pub mod doublesix;
pub mod ks;
pub mod line;
pub mod pentagram;
pub mod square;

pub use doublesix::{double_six_decomposition, double_six_invariants, DoubleSix};
pub use ks::ks_assignment_exists;
pub use line::{enumerate_context_lines, line_sign, ContextLine};
pub use pentagram::{
    conjugate, enumerate_pentagrams, enumerate_pentagrams_by_cliques, is_mermin_pentagram, negative_line_census,
    pentagrams_from_basis, pentagrams_from_spread, pentagrams_from_veldkamp_line, pentagrams_per_line, Pentagram,
    PentagramCatalog,
};
pub use square::{enumerate_grids, mermin_square_census, mermin_squares_from_double_six, MerminSquare, SquareCensus};
