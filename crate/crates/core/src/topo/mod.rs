//! Posets, augmented covector posets, recursive coatom orderings, order
//! complexes with their homology, and flag counts.

pub mod augmented;
pub mod complex;
pub mod flags;
pub mod poset;
pub mod rco;

pub use augmented::{augment, tope_graph, tope_poset, AugmentedPoset, TopeGraph, TopePoset};
pub use complex::{homology_evidence, order_complex, HomologyReport, SimplicialComplex};
pub use flags::{flag_count, underlying_flat_embedding_checks};
pub use poset::FinitePoset;
pub use rco::{recursive_coatom_ordering, verify_rco, RcoNode, RcoViolation};
