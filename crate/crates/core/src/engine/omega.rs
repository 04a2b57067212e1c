use std::collections::HashMap;

use crate::dict::{DictionaryExpression, FiniteDict, WordAutomaton};
use crate::error::{Error, Result};
use crate::graph;
use crate::streams::{Lasso, OmegaStream};
use crate::words::Word;

/// Nondeterministic Büchi-style acceptor for `A^∞`.
///
/// Built on the word automaton of `A⁻`: from state `q` on letter `a` the
/// acceptor may continue the current word (`δ(q, a)`), or, when `δ(q, a)`
/// completes a word, restart at the initial state. Restarts are the
/// accepting transitions.
#[derive(Clone, Debug)]
pub struct OmegaAcceptor {
    words: WordAutomaton,
}

impl OmegaAcceptor {
    pub fn build(d: &DictionaryExpression) -> Self {
        OmegaAcceptor::from_automaton(&d.compile())
    }

    pub fn from_finite(d: &FiniteDict) -> Self {
        OmegaAcceptor::build(&DictionaryExpression::from(d))
    }

    pub fn from_automaton(a: &WordAutomaton) -> Self {
        OmegaAcceptor {
            words: a.without_empty_word(),
        }
    }

    /// The word automaton of `A⁻`.
    pub fn words(&self) -> &WordAutomaton {
        &self.words
    }

    /// `alpha ∈ A^∞`: some accepting transition lies on a cycle reachable
    /// in the product with the position classes of `alpha`.
    pub fn member_lasso(&self, alpha: &Lasso) -> bool {
        let a = &self.words;
        let classes = alpha.classes();
        let h = alpha.head().len();
        let node = |q: usize, c: usize| q * classes + c;
        let n = a.num_states() * classes;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut restarts: Vec<(usize, usize)> = Vec::new();
        for q in 0..a.num_states() {
            if !a.is_live(q) {
                continue;
            }
            for c in 0..classes {
                let letter = alpha.letter(c);
                let next = if c + 1 < classes { c + 1 } else { h };
                let r = a.step(q, letter);
                if a.is_live(r) {
                    adj[node(q, c)].push(node(r, next));
                }
                if a.is_accepting(r) {
                    let target = node(a.initial(), next);
                    adj[node(q, c)].push(target);
                    restarts.push((node(q, c), target));
                }
            }
        }
        let start = node(a.initial(), 0);
        let seen = graph::reachable(&adj, start);
        let comp = graph::scc(&adj);
        restarts
            .iter()
            .any(|&(from, to)| seen[from] && comp[from] == comp[to])
    }

    /// Leftmost-minimal decomposition: each chunk is the shortest word of
    /// `A⁻` prefixing the current suffix whose removal leaves a suffix still
    /// in `A^∞`. Returns the first `k` chunks.
    pub fn greedy_decompose(&self, alpha: &Lasso, k: usize) -> Result<Vec<Word>> {
        let mut memo: HashMap<Lasso, bool> = HashMap::new();
        let mut member = |l: &Lasso| *memo.entry(l.clone()).or_insert_with(|| self.member_lasso(l));
        if !member(alpha) {
            return Err(Error::NotMember(alpha.to_string()));
        }
        let a = &self.words;
        let mut current = alpha.clone();
        let mut chunks = Vec::with_capacity(k);
        for _ in 0..k {
            let bound = current.head().len() + a.num_states() * current.cycle().len() + 1;
            let mut q = a.initial();
            let mut found = None;
            for len in 1..=bound {
                q = a.step(q, current.letter(len - 1));
                if !a.is_live(q) {
                    break;
                }
                if a.is_accepting(q) && member(&current.shift(len)) {
                    found = Some(len);
                    break;
                }
            }
            let len = found.ok_or(Error::NoChunk(bound))?;
            chunks.push(current.prefix(len));
            current = current.shift(len);
        }
        Ok(chunks)
    }
}

/// `alpha ∈ A^∞` for a dictionary expression.
pub fn member_lasso(d: &DictionaryExpression, alpha: &Lasso) -> bool {
    OmegaAcceptor::build(d).member_lasso(alpha)
}

/// Same answer as [`member_lasso`], computed on the position graph instead.
pub fn member_positions(d: &DictionaryExpression, alpha: &Lasso) -> bool {
    crate::rank::PositionGraph::build(d, alpha).member()
}

pub fn greedy_decompose(d: &DictionaryExpression, alpha: &Lasso, k: usize) -> Result<Vec<Word>> {
    OmegaAcceptor::build(d).greedy_decompose(alpha, k)
}
