//! Dictionaries: regular expressions over word sets, their compiled
//! acceptors, explicit finite dictionaries and predicate-only dictionaries.

pub mod automaton;
pub mod expr;
pub mod finite;
pub mod oracle;
pub mod parse;

pub use automaton::WordAutomaton;
pub use expr::{DictionaryExpression, Expr};
pub use finite::FiniteDict;
pub use oracle::OracleDictionary;
pub use parse::parse_dictionary;
