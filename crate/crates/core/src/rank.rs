//! Ranks of decomposition trees on lassos.
//!
//! For a lasso `α` the decomposition tree of `α` (finite sequences of words
//! of `A⁻` whose concatenation is a prefix of `α`) collapses onto the
//! finitely many position classes of `α`: two positions in one class have
//! the same suffix, hence isomorphic subtrees. The tree is ill-founded iff a
//! cycle is reachable from class 0, and otherwise its rank is the height of
//! class 0 in the resulting DAG plus one.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::dict::{DictionaryExpression, FiniteDict, WordAutomaton};
use crate::engine::{topo_class, TopoClass};
use crate::error::Result;
use crate::graph;
use crate::streams::{Lasso, OmegaStream};

/// Position classes of a lasso with an edge `p → p'` whenever some word of
/// `A⁻` read from position `p` ends at a position of class `p'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionGraph {
    alpha: Lasso,
    /// Per source class: `(target class, shortest matching word length)`.
    edges: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankResult {
    Member,
    Rank(usize),
}

impl Serialize for RankResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RankResult::Member => {
                let mut s = serializer.serialize_struct("RankResult", 1)?;
                s.serialize_field("result", "member")?;
                s.end()
            }
            RankResult::Rank(k) => {
                let mut s = serializer.serialize_struct("RankResult", 2)?;
                s.serialize_field("result", "rank")?;
                s.serialize_field("value", k)?;
                s.end()
            }
        }
    }
}

impl PositionGraph {
    pub fn build(d: &DictionaryExpression, alpha: &Lasso) -> Self {
        PositionGraph::from_automaton(&d.compile().without_empty_word(), alpha)
    }

    /// `words` must not accept the empty word.
    pub fn from_automaton(words: &WordAutomaton, alpha: &Lasso) -> Self {
        let classes = alpha.classes();
        let h = alpha.head().len();
        let next = |c: usize| if c + 1 < classes { c + 1 } else { h };
        let mut edges = Vec::with_capacity(classes);
        for source in 0..classes {
            let mut targets: BTreeMap<usize, usize> = BTreeMap::new();
            let mut seen = vec![false; words.num_states() * classes];
            let (mut q, mut c, mut len) = (words.initial(), source, 0);
            loop {
                q = words.step(q, alpha.letter(c));
                c = next(c);
                len += 1;
                if !words.is_live(q) {
                    break;
                }
                if words.is_accepting(q) {
                    targets.entry(c).or_insert(len);
                }
                let key = q * classes + c;
                if seen[key] {
                    break;
                }
                seen[key] = true;
            }
            edges.push(targets.into_iter().collect());
        }
        PositionGraph {
            alpha: alpha.clone(),
            edges,
        }
    }

    pub fn lasso(&self) -> &Lasso {
        &self.alpha
    }

    pub fn classes(&self) -> usize {
        self.edges.len()
    }

    /// `(target class, shortest word length)` pairs out of `class`.
    pub fn edges(&self, class: usize) -> &[(usize, usize)] {
        &self.edges[class]
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        self.edges
            .iter()
            .map(|out| out.iter().map(|&(t, _)| t).collect())
            .collect()
    }

    pub fn member(&self) -> bool {
        let adj = self.adjacency();
        let reach = graph::reachable(&adj, 0);
        graph::has_cycle(&adj, &reach)
    }

    /// Height of every class in the DAG reachable from class 0
    /// (`None` if that part of the graph has a cycle).
    fn heights(&self) -> Option<Vec<usize>> {
        if self.member() {
            return None;
        }
        let n = self.classes();
        let mut height: Vec<Option<usize>> = vec![None; n];
        let mut stack = vec![(0usize, false)];
        while let Some((v, expanded)) = stack.pop() {
            if height[v].is_some() {
                continue;
            }
            if expanded {
                let h = self.edges[v]
                    .iter()
                    .map(|&(t, _)| height[t].expect("children first") + 1)
                    .max()
                    .unwrap_or(0);
                height[v] = Some(h);
            } else {
                stack.push((v, true));
                for &(t, _) in &self.edges[v] {
                    if height[t].is_none() {
                        stack.push((t, false));
                    }
                }
            }
        }
        Some(height.into_iter().map(|h| h.unwrap_or(0)).collect())
    }

    pub fn rank(&self) -> RankResult {
        match self.heights() {
            None => RankResult::Member,
            Some(h) => RankResult::Rank(h[0] + 1),
        }
    }

    /// Whether `α ∈ E_k`, evaluated level by level on the classes.
    pub fn e_level(&self, k: usize) -> bool {
        let mut level: Vec<bool> = self.edges.iter().map(Vec::is_empty).collect();
        for _ in 0..k {
            level = self
                .edges
                .iter()
                .map(|out| out.iter().all(|&(t, _)| level[t]))
                .collect();
        }
        level[0]
    }
}

pub fn rank_lasso(d: &DictionaryExpression, alpha: &Lasso) -> RankResult {
    PositionGraph::build(d, alpha).rank()
}

pub fn e_level(d: &DictionaryExpression, alpha: &Lasso, k: usize) -> bool {
    PositionGraph::build(d, alpha).e_level(k)
}

/// Default lasso budget `|u| + |v|` for [`rank_summary`].
pub const DEFAULT_RANK_BUDGET: usize = 8;

/// Category of `R(A)` for a finite dictionary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "category", content = "lower_bound")]
pub enum RankSummary {
    Zero,
    One,
    /// Finite; the value is the largest rank seen on the sampled lassos.
    FiniteClopen(usize),
    Omega,
}

pub fn rank_summary(d: &FiniteDict) -> Result<RankSummary> {
    rank_summary_with_budget(d, DEFAULT_RANK_BUDGET)
}

pub fn rank_summary_with_budget(d: &FiniteDict, budget: usize) -> Result<RankSummary> {
    Ok(match topo_class(d)? {
        TopoClass::Full => RankSummary::Zero,
        TopoClass::Empty => RankSummary::One,
        TopoClass::ClosedNotOpen => RankSummary::Omega,
        TopoClass::Clopen => {
            let words = DictionaryExpression::from(d).compile().without_empty_word();
            let best = Lasso::enumerate_total(d.alphabet(), budget)
                .iter()
                .filter_map(|alpha| match PositionGraph::from_automaton(&words, alpha).rank() {
                    RankResult::Rank(r) => Some(r),
                    RankResult::Member => None,
                })
                .max()
                .unwrap_or(0);
            RankSummary::FiniteClopen(best)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dict::Expr;
    use crate::streams::lasso;
    use crate::words::w;

    fn fin(words: &[&str]) -> DictionaryExpression {
        DictionaryExpression::from(&FiniteDict::binary(words).unwrap())
    }

    fn a_p(p: usize) -> DictionaryExpression {
        let zeros = |k: usize| "0".repeat(k);
        let mut parts = vec![Expr::finite([w("00")])];
        parts.extend((0..=p).map(|q| Expr::Ext(w(&format!("{}1", zeros(2 * q))))));
        parts.push(Expr::Ext(w(&zeros(2 * p + 1))));
        DictionaryExpression::binary(Expr::union(parts)).unwrap()
    }

    #[test]
    fn small_graphs() {
        let g = PositionGraph::build(&fin(&["0"]), &lasso("(0)"));
        assert_eq!(g.classes(), 1);
        assert_eq!(g.edges(0), &[(0, 1)]);
        let g = PositionGraph::build(&fin(&["0"]), &lasso("1(0)"));
        assert!(g.edges(0).is_empty());
        assert_eq!(g.rank(), RankResult::Rank(1));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_lasso(&a_p(2), &lasso("000(1)")), RankResult::Rank(2));
        assert_eq!(rank_lasso(&fin(&["e"]), &lasso("(01)")), RankResult::Rank(1));
        assert_eq!(rank_lasso(&fin(&["0", "1"]), &lasso("1(0)")), RankResult::Member);
    }

    #[test]
    fn levels() {
        assert!(e_level(&fin(&["e"]), &lasso("(0)"), 0));
        assert!(e_level(&a_p(2), &lasso("000(1)"), 1));
        assert!(!e_level(&a_p(2), &lasso("000(1)"), 0));
        for k in 0..4 {
            assert!(!e_level(&fin(&["0", "1"]), &lasso("(01)"), k));
        }
    }

    #[test]
    fn summaries() {
        let fd = |ws: &[&str]| FiniteDict::binary(ws).unwrap();
        assert_eq!(rank_summary(&fd(&["0", "1"])).unwrap(), RankSummary::Zero);
        assert_eq!(rank_summary(&fd(&["e"])).unwrap(), RankSummary::One);
        assert_eq!(rank_summary(&fd(&["0"])).unwrap(), RankSummary::Omega);
    }

    #[test]
    fn json_shape() {
        let json = |r: RankResult| serde_json::to_string(&r).unwrap();
        assert_eq!(json(RankResult::Member), r#"{"result":"member"}"#);
        assert_eq!(json(RankResult::Rank(2)), r#"{"result":"rank","value":2}"#);
    }
}
