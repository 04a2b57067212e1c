use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::dict::expr::{DictionaryExpression, Expr};
use crate::words::Word;

/// Complete deterministic acceptor over `{0, .., size-1}`.
///
/// There is always a dead state (a non-accepting sink from which nothing is
/// accepted); letters outside the alphabet lead there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordAutomaton {
    size: usize,
    delta: Vec<usize>,
    accepting: Vec<bool>,
    initial: usize,
    dead: usize,
    live: Vec<bool>,
}

impl WordAutomaton {
    pub fn compile(d: &DictionaryExpression) -> WordAutomaton {
        WordAutomaton::from_expr(d.alphabet().size(), d.expr())
    }

    pub(crate) fn from_expr(size: usize, expr: &Expr) -> WordAutomaton {
        let mut nfa = Nfa {
            size,
            eps: Vec::new(),
            edges: Vec::new(),
        };
        let (start, end) = nfa.build(expr);
        nfa.determinize(start, end).minimize()
    }

    fn from_parts(size: usize, delta: Vec<usize>, accepting: Vec<bool>, initial: usize) -> Self {
        let n = accepting.len();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for q in 0..n {
            for a in 0..size {
                preds[delta[q * size + a]].push(q);
            }
        }
        let mut live = accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| live[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        let mut aut = WordAutomaton {
            size,
            delta,
            accepting,
            initial,
            dead: 0,
            live,
        };
        match (0..n).find(|&q| !aut.live[q]) {
            Some(q) => aut.dead = q,
            None => {
                let d = n;
                aut.delta.extend(std::iter::repeat_n(d, size));
                aut.accepting.push(false);
                aut.live.push(false);
                aut.dead = d;
            }
        }
        aut
    }

    pub fn alphabet_size(&self) -> usize {
        self.size
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
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

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    /// Some word is accepted from `q`.
    pub fn is_live(&self, q: usize) -> bool {
        self.live[q]
    }

    pub fn run(&self, q: usize, letters: &[u8]) -> usize {
        letters.iter().fold(q, |q, &a| self.step(q, a))
    }

    pub fn accepts(&self, word: &Word) -> bool {
        self.accepting[self.run(self.initial, word.letters())]
    }

    /// Acceptor for the same language minus the empty word.
    pub fn without_empty_word(&self) -> WordAutomaton {
        if !self.accepting[self.initial] {
            return self.clone();
        }
        let mut delta = self.delta.clone();
        let mut accepting = self.accepting.clone();
        let fresh = accepting.len();
        let row: Vec<usize> = (0..self.size)
            .map(|a| self.delta[self.initial * self.size + a])
            .collect();
        delta.extend(row);
        accepting.push(false);
        WordAutomaton::from_parts(self.size, delta, accepting, fresh)
    }

    /// The accepted words, if there are finitely many.
    pub fn finite_language(&self) -> Option<BTreeSet<Word>> {
        // Reachable live states must form a DAG.
        let n = self.num_states();
        let mut color = vec![0u8; n];
        let mut words = BTreeSet::new();
        // Iterative DFS with explicit path word; detects back edges.
        let mut stack: Vec<(usize, usize)> = Vec::new();
        let mut path: Vec<u8> = Vec::new();
        if !self.live[self.initial] {
            return Some(words);
        }
        stack.push((self.initial, 0));
        color[self.initial] = 1;
        if self.accepting[self.initial] {
            words.insert(Word::empty());
        }
        while let Some(&mut (q, ref mut next)) = stack.last_mut() {
            if *next == self.size {
                stack.pop();
                path.pop();
                color[q] = 0;
                continue;
            }
            let a = *next as u8;
            *next += 1;
            let r = self.step(q, a);
            if !self.live[r] {
                continue;
            }
            if color[r] == 1 {
                return None;
            }
            color[r] = 1;
            path.push(a);
            if self.accepting[r] {
                words.insert(Word::new(path.clone()));
            }
            stack.push((r, 0));
        }
        Some(words)
    }

    /// Moore partition refinement; unreachable states are dropped first.
    fn minimize(&self) -> WordAutomaton {
        let reach = self.reachable();
        let index: HashMap<usize, usize> = reach.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let m = reach.len();
        let succ = |i: usize, a: usize| index[&self.delta[reach[i] * self.size + a]];
        let mut class: Vec<usize> = reach.iter().map(|&q| usize::from(self.accepting[q])).collect();
        let mut count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let next: Vec<usize> = (0..m)
                .map(|i| {
                    let mut sig = Vec::with_capacity(self.size + 1);
                    sig.push(class[i]);
                    sig.extend((0..self.size).map(|a| class[succ(i, a)]));
                    let len = ids.len();
                    *ids.entry(sig).or_insert(len)
                })
                .collect();
            let new_count = ids.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut delta = vec![0; count * self.size];
        let mut accepting = vec![false; count];
        for i in 0..m {
            accepting[class[i]] = self.accepting[reach[i]];
            for a in 0..self.size {
                delta[class[i] * self.size + a] = class[succ(i, a)];
            }
        }
        WordAutomaton::from_parts(self.size, delta, accepting, class[index[&self.initial]])
    }

    fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            i += 1;
            for a in 0..self.size {
                let r = self.delta[q * self.size + a];
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
        }
        order
    }

    /// Product automaton accepting where `keep(accept_self, accept_other)`.
    pub fn product(&self, other: &WordAutomaton, keep: impl Fn(bool, bool) -> bool) -> WordAutomaton {
        assert_eq!(self.size, other.size, "alphabet sizes differ");
        let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        ids.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            i += 1;
            for a in 0..self.size as u8 {
                let next = (self.step(p, a), other.step(q, a));
                let len = ids.len();
                let id = *ids.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    len
                });
                delta.push(id);
            }
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| keep(self.accepting[p], other.accepting[q]))
            .collect();
        WordAutomaton::from_parts(self.size, delta, accepting, 0).minimize()
    }
}

/// Thompson-style NFA with a single start and a single end per fragment.
struct Nfa {
    size: usize,
    eps: Vec<Vec<usize>>,
    edges: Vec<Vec<(u8, usize)>>,
}

impl Nfa {
    fn add(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.edges.push(Vec::new());
        self.eps.len() - 1
    }

    fn chain(&mut self, from: usize, letters: &[u8]) -> usize {
        letters.iter().fold(from, |q, &a| {
            let r = self.add();
            self.edges[q].push((a, r));
            r
        })
    }

    fn build(&mut self, expr: &Expr) -> (usize, usize) {
        let s = self.add();
        let e = self.add();
        match expr {
            Expr::Finite(words) => {
                for w in words {
                    let last = self.chain(s, w.letters());
                    self.eps[last].push(e);
                }
            }
            Expr::Ext(t) => {
                let last = self.chain(s, t.letters());
                for a in 0..self.size as u8 {
                    self.edges[last].push((a, last));
                }
                self.eps[last].push(e);
            }
            Expr::Letter(a) => self.edges[s].push((*a, e)),
            Expr::Epsilon => self.eps[s].push(e),
            Expr::Concat(parts) => {
                let mut cur = s;
                for p in parts {
                    let (ps, pe) = self.build(p);
                    self.eps[cur].push(ps);
                    cur = pe;
                }
                self.eps[cur].push(e);
            }
            Expr::Union(parts) => {
                for p in parts {
                    let (ps, pe) = self.build(p);
                    self.eps[s].push(ps);
                    self.eps[pe].push(e);
                }
            }
            Expr::Star(inner) | Expr::StarWords(inner) => {
                let (is, ie) = self.build(inner);
                self.eps[s].push(e);
                self.eps[s].push(is);
                self.eps[ie].push(is);
                self.eps[ie].push(e);
            }
            Expr::Diff(a, b) => {
                let da = WordAutomaton::from_expr(self.size, a);
                let db = WordAutomaton::from_expr(self.size, b);
                let d = da.product(&db, |x, y| x && !y);
                let base: Vec<usize> = (0..d.num_states()).map(|_| self.add()).collect();
                for q in 0..d.num_states() {
                    for a in 0..self.size as u8 {
                        self.edges[base[q]].push((a, base[d.step(q, a)]));
                    }
                    if d.is_accepting(q) {
                        self.eps[base[q]].push(e);
                    }
                }
                self.eps[s].push(base[d.initial()]);
            }
        }
        (s, e)
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &r in &self.eps[q] {
                if set.insert(r) {
                    stack.push(r);
                }
            }
        }
    }

    fn determinize(&self, start: usize, end: usize) -> WordAutomaton {
        let mut first = BTreeSet::from([start]);
        self.closure(&mut first);
        let mut ids: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        ids.insert(first.clone(), 0);
        let mut sets = vec![first];
        let mut delta = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            for a in 0..self.size as u8 {
                let mut next = BTreeSet::new();
                for &q in &sets[i] {
                    next.extend(self.edges[q].iter().filter(|(b, _)| *b == a).map(|&(_, r)| r));
                }
                self.closure(&mut next);
                let len = ids.len();
                let id = *ids.entry(next.clone()).or_insert_with(|| {
                    sets.push(next);
                    len
                });
                delta.push(id);
            }
            i += 1;
        }
        let accepting = sets.iter().map(|s| s.contains(&end)).collect();
        WordAutomaton {
            size: self.size,
            delta,
            accepting,
            initial: 0,
            dead: 0,
            live: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{w, Alphabet};

    fn compile(e: Expr) -> WordAutomaton {
        DictionaryExpression::binary(e).unwrap().compile()
    }

    #[test]
    fn finite_sets() {
        let a = compile(Expr::finite([w("010"), w("011")]));
        assert!(a.accepts(&w("010")));
        assert!(!a.accepts(&w("01")));
        assert_eq!(
            a.finite_language().unwrap(),
            BTreeSet::from([w("010"), w("011")])
        );
    }

    #[test]
    fn extension_sets() {
        let a = compile(Expr::Ext(w("11")));
        assert!(a.accepts(&w("11")));
        assert!(a.accepts(&w("110")));
        assert!(!a.accepts(&w("1")));
        assert!(a.finite_language().is_none());
    }

    #[test]
    fn differences() {
        let a0 = Expr::finite([w("010"), w("011")]);
        let a1 = Expr::finite(
            ["010", "011", "00", "000", "100", "110", "1000", "1100"].map(w),
        );
        let a = compile(Expr::diff(Expr::star_words(a1), Expr::star_words(a0)));
        assert!(!a.accepts(&w("010")));
        assert!(a.accepts(&w("01000")));
        assert!(!a.accepts(&w("e")));
    }

    #[test]
    fn empty_word_is_removed() {
        let a = compile(Expr::finite([w("e"), w("0")])).without_empty_word();
        assert!(!a.accepts(&w("e")));
        assert!(a.accepts(&w("0")));
        assert_eq!(a.finite_language().unwrap(), BTreeSet::from([w("0")]));
    }

    #[test]
    fn dead_state_exists_even_for_universal_languages() {
        let a = compile(Expr::star(Expr::union(vec![Expr::Letter(0), Expr::Letter(1)])));
        assert!(a.accepts(&w("0110")));
        assert!(!a.is_live(a.dead()));
        assert_eq!(a.step(a.initial(), 7), a.dead());
    }

    #[test]
    fn larger_alphabets() {
        let three = Alphabet::new(3).unwrap();
        let d = DictionaryExpression::new(three, Expr::Ext(w("2"))).unwrap();
        let a = d.compile();
        assert!(a.accepts(&w("21")));
        assert!(!a.accepts(&w("12")));
    }
}
