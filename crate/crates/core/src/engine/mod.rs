//! Decision procedures on `A^∞`.
//!
//! [`OmegaAcceptor`] handles every regular dictionary; [`SafetyAutomaton`]
//! is the deterministic acceptor used for finite dictionaries, where `A^∞`
//! is closed and inclusion reduces to reachability.

mod omega;
mod safety;

pub use omega::{greedy_decompose, member_lasso, member_positions, OmegaAcceptor};
pub use safety::{
    equivalent, included, is_universal, minimal_generator, run_safety, topo_class, topo_class_of,
    SafetyAutomaton, SafetyRun, TopoClass, DEFAULT_STATE_LIMIT,
};
