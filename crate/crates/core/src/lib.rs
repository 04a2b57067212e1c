pub mod classify;
pub mod corpus;
pub mod dict;
pub mod engine;
pub mod error;
mod graph;
#[cfg(any(test, feature = "oracles"))]
pub mod oracle;
pub mod rank;
pub mod reductions;
pub mod streams;
pub mod words;
