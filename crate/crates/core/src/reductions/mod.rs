//! Constructive reductions: binary re-encoding of alphabets, the antichain
//! map from 0/1 sequences, and the coding of finite trees by dictionaries
//! evaluated along `α₀`.

mod encode;
mod phi_prime;
mod tree;

pub use encode::{encode_binary, BinaryCode};
pub use phi_prime::{is_alpha0_factor, phi_prime_member};
pub use tree::{
    alpha0_death_step, alpha0_rank, branch_check, m_code, phi_pf, phi_range, phi_word, psi,
    tree_dict, tree_ranges, FiniteTree, PhiWord, MATERIALIZE_LIMIT,
};
