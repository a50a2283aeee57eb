//! The 20 of A5, its trivector labels, and the dictionaries tying weights to
//! the observables of a double six.

pub mod clifford;
pub mod dictionary;
pub mod roots;
pub mod trivector;

pub use clifford::{clifford_frame_census, clifford_frame_partition, CliffordFrame, FrameCensus, FramePartition};
pub use dictionary::{
    dynkin_diagram_observables, quadruple_has_extreme_label, weight_observable_map, zero_sum_quadruples,
    DictionaryContext, WeightObservableMap,
};
pub use roots::{
    dual_components, dynkin_labels, from_dual_components, generate_irrep20, highest_weight, scalar_from_labels,
    Rational, RootSystemA5, Weight,
};
pub use trivector::TrivectorLabel;
