use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::dict::FiniteDict;
use crate::error::{Error, Result};
use crate::graph;
use crate::streams::OmegaStream;

/// Default cap on the number of subset states built for one dictionary.
pub const DEFAULT_STATE_LIMIT: usize = 1 << 20;

/// Deterministic acceptor of `A^∞` for finite `A`.
///
/// A state is the set of pending proper prefixes of words of `A⁻` (trie
/// nodes; the root stands for a fresh word). The empty set is the dead
/// state. An infinite word is accepted iff the run never dies.
#[derive(Clone, Debug)]
pub struct SafetyAutomaton {
    size: usize,
    delta: Vec<usize>,
    initial: usize,
    dead: usize,
    viable: Vec<bool>,
    universal: Vec<bool>,
}

/// Outcome of [`SafetyAutomaton::run`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SafetyRun {
    /// Still alive after this many letters.
    Alive(usize),
    /// Died on reading letter number `k` (1-based); `Dead(0)` if the
    /// initial state is already dead.
    Dead(usize),
}

struct Trie {
    children: Vec<Vec<Option<usize>>>,
    is_word: Vec<bool>,
}

impl Trie {
    fn new(d: &FiniteDict) -> Self {
        let n = d.alphabet().size();
        let mut t = Trie {
            children: vec![vec![None; n]],
            is_word: vec![false],
        };
        for w in d.nonempty().words() {
            let mut v = 0;
            for &a in w.letters() {
                v = match t.children[v][a as usize] {
                    Some(c) => c,
                    None => {
                        t.children.push(vec![None; n]);
                        t.is_word.push(false);
                        let c = t.children.len() - 1;
                        t.children[v][a as usize] = Some(c);
                        c
                    }
                };
            }
            t.is_word[v] = true;
        }
        t
    }

    fn has_children(&self, v: usize) -> bool {
        self.children[v].iter().any(Option::is_some)
    }
}

impl SafetyAutomaton {
    pub fn build(d: &FiniteDict) -> Result<Self> {
        SafetyAutomaton::build_with_limit(d, DEFAULT_STATE_LIMIT)
    }

    pub fn build_with_limit(d: &FiniteDict, limit: usize) -> Result<Self> {
        let size = d.alphabet().size();
        let trie = Trie::new(d);
        let root: Vec<usize> = if trie.has_children(0) { vec![0] } else { Vec::new() };
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut sets: Vec<Vec<usize>> = Vec::new();
        let mut intern = |s: Vec<usize>, sets: &mut Vec<Vec<usize>>| -> Result<usize> {
            if let Some(&id) = ids.get(&s) {
                return Ok(id);
            }
            if sets.len() >= limit {
                return Err(Error::StateLimit(limit));
            }
            ids.insert(s.clone(), sets.len());
            sets.push(s);
            Ok(sets.len() - 1)
        };
        let dead = intern(Vec::new(), &mut sets)?;
        let initial = intern(root, &mut sets)?;
        let mut delta = vec![dead; size];
        let mut i = 1;
        while i < sets.len() {
            for a in 0..size {
                let mut next = BTreeSet::new();
                for &v in &sets[i] {
                    if let Some(c) = trie.children[v][a] {
                        if trie.is_word[c] {
                            next.insert(0);
                        }
                        if trie.has_children(c) {
                            next.insert(c);
                        }
                    }
                }
                let id = intern(next.into_iter().collect(), &mut sets)?;
                delta.push(id);
            }
            i += 1;
        }
        let n = sets.len();
        let adj: Vec<Vec<usize>> = (0..n).map(|q| delta[q * size..(q + 1) * size].to_vec()).collect();

        let mut viable: Vec<bool> = (0..n).map(|q| q != dead).collect();
        loop {
            let mut changed = false;
            for q in 0..n {
                if viable[q] && !adj[q].iter().any(|&r| viable[r]) {
                    viable[q] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (q, out) in adj.iter().enumerate() {
            for &r in out {
                preds[r].push(q);
            }
        }
        let reaches_dead = graph::reachable(&preds, dead);
        let universal = reaches_dead.iter().map(|&b| !b).collect();
        Ok(SafetyAutomaton {
            size,
            delta,
            initial,
            dead,
            viable,
            universal,
        })
    }

    pub fn num_states(&self) -> usize {
        self.viable.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn dead(&self) -> usize {
        self.dead
    }

    pub fn step(&self, q: usize, a: u8) -> usize {
        let a = a as usize;
        if a >= self.size {
            self.dead
        } else {
            self.delta[q * self.size + a]
        }
    }

    /// Some infinite run from `q` never dies.
    pub fn is_viable(&self, q: usize) -> bool {
        self.viable[q]
    }

    /// No run from `q` ever dies.
    pub fn is_universal(&self, q: usize) -> bool {
        self.universal[q]
    }

    fn successors(&self, q: usize) -> &[usize] {
        &self.delta[q * self.size..(q + 1) * self.size]
    }

    fn reachable(&self) -> Vec<bool> {
        let adj: Vec<Vec<usize>> = (0..self.num_states()).map(|q| self.successors(q).to_vec()).collect();
        graph::reachable(&adj, self.initial)
    }

    /// Runs along `alpha` for at most `limit` letters.
    pub fn run<S: OmegaStream + ?Sized>(&self, alpha: &S, limit: usize) -> SafetyRun {
        let mut q = self.initial;
        if q == self.dead {
            return SafetyRun::Dead(0);
        }
        for k in 0..limit {
            q = self.step(q, alpha.letter(k));
            if q == self.dead {
                return SafetyRun::Dead(k + 1);
            }
        }
        SafetyRun::Alive(limit)
    }

    /// `A^∞ ⊆ B^∞` where `self` and `other` accept `A^∞` and `B^∞`.
    pub fn included_in(&self, other: &SafetyAutomaton) -> bool {
        if !self.viable[self.initial] {
            return true;
        }
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut stack = vec![(self.initial, other.initial)];
        seen.insert(stack[0]);
        while let Some((p, q)) = stack.pop() {
            if q == other.dead {
                return false;
            }
            for a in 0..self.size as u8 {
                let next = (self.step(p, a), other.step(q, a));
                if self.viable[next.0] && seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        true
    }
}

/// Topological class of `A^∞` for finite `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TopoClass {
    Empty,
    Full,
    Clopen,
    ClosedNotOpen,
}

pub fn run_safety<S: OmegaStream + ?Sized>(sa: &SafetyAutomaton, alpha: &S, limit: usize) -> SafetyRun {
    sa.run(alpha, limit)
}

/// `A^∞ = n^ω`, decided by checking that every word of length `L` (the
/// longest member length) has a nonempty prefix in `A`.
pub fn is_universal(d: &FiniteDict) -> bool {
    let d = d.nonempty();
    if d.is_empty() {
        return false;
    }
    let trie = Trie::new(&d);
    // Every path from the root meets a word node before falling off the trie.
    fn covered(t: &Trie, v: usize) -> bool {
        t.children[v].iter().all(|c| match c {
            Some(c) => t.is_word[*c] || covered(t, *c),
            None => false,
        })
    }
    covered(&trie, 0)
}

pub fn topo_class(d: &FiniteDict) -> Result<TopoClass> {
    if d.nonempty().is_empty() {
        return Ok(TopoClass::Empty);
    }
    if is_universal(d) {
        return Ok(TopoClass::Full);
    }
    let sa = SafetyAutomaton::build(d)?;
    Ok(topo_class_of(&sa))
}

/// Class read off a built automaton: open iff no reachable cycle runs
/// through viable, non-universal states.
pub fn topo_class_of(sa: &SafetyAutomaton) -> TopoClass {
    if !sa.is_viable(sa.initial) {
        return TopoClass::Empty;
    }
    if sa.is_universal(sa.initial) {
        return TopoClass::Full;
    }
    let reach = sa.reachable();
    let keep: Vec<bool> = (0..sa.num_states())
        .map(|q| reach[q] && sa.viable[q] && !sa.universal[q])
        .collect();
    let adj: Vec<Vec<usize>> = (0..sa.num_states()).map(|q| sa.successors(q).to_vec()).collect();
    if graph::has_cycle(&adj, &keep) {
        TopoClass::ClosedNotOpen
    } else {
        TopoClass::Clopen
    }
}

fn same_alphabet(a: &FiniteDict, b: &FiniteDict) -> Result<()> {
    if a.alphabet() == b.alphabet() {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch(a.alphabet().size(), b.alphabet().size()))
    }
}

/// `A^∞ ⊆ B^∞`.
pub fn included(a: &FiniteDict, b: &FiniteDict) -> Result<bool> {
    same_alphabet(a, b)?;
    Ok(SafetyAutomaton::build(a)?.included_in(&SafetyAutomaton::build(b)?))
}

/// `A^∞ = B^∞`.
pub fn equivalent(a: &FiniteDict, b: &FiniteDict) -> Result<bool> {
    same_alphabet(a, b)?;
    let (sa, sb) = (SafetyAutomaton::build(a)?, SafetyAutomaton::build(b)?);
    Ok(sa.included_in(&sb) && sb.included_in(&sa))
}

/// An inclusion-minimal `B ⊆ A⁻` with `B^∞ = A^∞`, removing words greedily
/// from the longest (shortlex-last) down.
pub fn minimal_generator(d: &FiniteDict) -> Result<FiniteDict> {
    let target = SafetyAutomaton::build(d)?;
    let mut keep: BTreeSet<_> = d.nonempty().words().clone();
    let candidates: Vec<_> = keep.iter().rev().cloned().collect();
    for w in candidates {
        keep.remove(&w);
        let trial = FiniteDict::new(d.alphabet(), keep.iter().cloned())?;
        let sa = SafetyAutomaton::build(&trial)?;
        // Removing words can only shrink the power, so one direction suffices.
        if !target.included_in(&sa) {
            keep.insert(w);
        }
    }
    FiniteDict::new(d.alphabet(), keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::streams::{alpha0, lasso};

    fn fd(words: &[&str]) -> FiniteDict {
        FiniteDict::binary(words).unwrap()
    }

    #[test]
    fn runs() {
        let zero = SafetyAutomaton::build(&fd(&["0"])).unwrap();
        assert_eq!(zero.run(&lasso("1(0)"), 10), SafetyRun::Dead(1));
        assert_eq!(zero.run(&lasso("(0)"), 10), SafetyRun::Alive(10));
        let all = SafetyAutomaton::build(&fd(&["0", "1"])).unwrap();
        assert_eq!(all.run(&alpha0(), 100), SafetyRun::Alive(100));
        let none = SafetyAutomaton::build(&fd(&["e"])).unwrap();
        assert_eq!(none.run(&alpha0(), 5), SafetyRun::Dead(0));
    }

    #[test]
    fn universality() {
        assert!(is_universal(&fd(&["0", "1"])));
        assert!(is_universal(&fd(&["0", "10", "11"])));
        assert!(!is_universal(&fd(&["0", "11"])));
        assert!(!is_universal(&fd(&["e"])));
        for words in [&["0", "1"][..], &["0", "10", "11"], &["0", "11"], &["01", "0", "1"]] {
            let d = fd(words);
            let sa = SafetyAutomaton::build(&d).unwrap();
            assert_eq!(sa.is_universal(sa.initial()), is_universal(&d));
        }
    }

    #[test]
    fn classes() {
        assert_eq!(topo_class(&fd(&["e"])).unwrap(), TopoClass::Empty);
        assert_eq!(topo_class(&fd(&[])).unwrap(), TopoClass::Empty);
        assert_eq!(topo_class(&fd(&["0", "1"])).unwrap(), TopoClass::Full);
        assert_eq!(topo_class(&fd(&["0"])).unwrap(), TopoClass::ClosedNotOpen);
    }

    #[test]
    fn inclusion() {
        assert!(included(&fd(&["01", "0"]), &fd(&["0", "10"])).unwrap());
        assert!(!included(&fd(&["0", "10"]), &fd(&["01", "0"])).unwrap());
        assert!(equivalent(&fd(&["0"]), &fd(&["0", "00"])).unwrap());
        assert!(!equivalent(&fd(&["0", "01"]), &fd(&["0", "10"])).unwrap());
        let three = FiniteDict::new(crate::words::Alphabet::new(3).unwrap(), []).unwrap();
        assert!(included(&fd(&["0"]), &three).is_err());
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(minimal_generator(&fd(&["0", "00"])).unwrap(), fd(&["0"]));
        assert_eq!(minimal_generator(&fd(&["0", "1"])).unwrap(), fd(&["0", "1"]));
        assert_eq!(minimal_generator(&fd(&["e"])).unwrap(), fd(&[]));
    }
}
