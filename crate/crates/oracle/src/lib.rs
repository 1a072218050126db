//! Brute-force ground truth, deliberately independent of the main library.
//!
//! Everything here favors obviousness over speed: the interval test is the
//! textbook "chordal and asteroidal-triple-free" characterization, minima
//! are found by exhaustive subset enumeration, and modules are enumerated
//! directly from the definition. These routines freeze expected values for
//! the fast implementations and back the randomized cross-checks.

mod bitgraph;
mod cliques;
mod enumerate;
mod exact;
mod modules;

pub use bitgraph::BitGraph;
pub use cliques::maximal_cliques;
pub use enumerate::{
    all_graphs_up_to_iso, canonical_form, connected_graphs_up_to_iso, is_isomorphic,
    random_connected_graph,
};
pub use exact::{brute_minimum, oracle_is_interval, OracleError, OracleResult, Variant, Witness};
pub use modules::{enumerate_modules, enumerate_strong_modules};
