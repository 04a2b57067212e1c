//! Brute-force reference implementations used by the test suites.
//!
//! Nothing here shares code with the automata: membership of factors is
//! decided by direct lookup or structural evaluation, and search spaces are
//! enumerated explicitly.

use std::collections::BTreeSet;

use crate::dict::{DictionaryExpression, FiniteDict};
use crate::streams::{alpha0, Lasso, OmegaStream};
use crate::words::{Alphabet, Word};

/// `alpha ∈ A^∞` for finite `A`, by reachable cuts.
///
/// Cuts reachable from 0 by member words are computed up to
/// `N = |u| + |v|·2^L + L` (`L` the longest member). Past `|u|` the future
/// of the cut process depends only on the position class and on which of
/// the last `L` positions are cuts, so a cut at or beyond `N - L` implies a
/// repeated configuration and hence infinitely many cuts.
pub fn member_by_cuts(d: &FiniteDict, alpha: &Lasso) -> bool {
    let d = d.nonempty();
    let l = d.max_len();
    if l == 0 {
        return false;
    }
    let horizon = alpha.head().len() + alpha.cycle().len() * (1usize << l) + l;
    let letters = alpha.prefix(horizon + l);
    let mut cut = vec![false; horizon + l + 1];
    cut[0] = true;
    let mut furthest = 0;
    for c in 0..=horizon {
        if !cut[c] {
            continue;
        }
        furthest = c;
        for len in 1..=l {
            let w = Word::from(&letters.letters()[c..c + len]);
            if d.contains(&w) {
                cut[c + len] = true;
            }
        }
    }
    furthest + l >= horizon
}

/// Same as [`member_by_cuts`] but with factor membership decided by the
/// expression itself (for expressions denoting finite languages whose
/// words are at most `max_len` long).
pub fn member_by_cuts_expr(d: &DictionaryExpression, max_len: usize, alpha: &Lasso) -> bool {
    let words = d
        .alphabet()
        .words_up_to(max_len)
        .into_iter()
        .filter(|w| !w.is_empty() && d.contains(w));
    member_by_cuts(&FiniteDict::new(d.alphabet(), words).expect("same alphabet"), alpha)
}

/// Shortest `u` with `w = u^k`, by trying every prefix.
pub fn primitive_root(w: &Word) -> Word {
    (1..=w.len())
        .map(|p| w.prefix(p))
        .find(|u| u.pow(w.len() / u.len()) == *w)
        .expect("nonempty word")
}

/// Whether two lassos denote the same infinite word, by comparing a prefix
/// long enough to cover both heads and a common period twice.
pub fn same_omega_word(a: &Lasso, b: &Lasso) -> bool {
    fn gcd(x: usize, y: usize) -> usize {
        if y == 0 {
            x
        } else {
            gcd(y, x % y)
        }
    }
    let (p, q) = (a.cycle().len(), b.cycle().len());
    let n = a.head().len() + b.head().len() + 2 * (p / gcd(p, q) * q);
    a.prefix(n) == b.prefix(n)
}

/// Every word of length `L` has a nonempty prefix in `A`, by enumeration.
pub fn universal_by_enumeration(d: &FiniteDict) -> bool {
    let d = d.nonempty();
    if d.is_empty() {
        return false;
    }
    d.alphabet()
        .words_of_len(d.max_len())
        .iter()
        .all(|s| (1..=s.len()).any(|q| d.contains(&s.prefix(q))))
}

/// Whether some one-word dictionary `{w}` with `|w| <= max_len` generates
/// the same ω-power, using `equivalent` only as the final check.
pub fn g1_by_search(d: &FiniteDict, max_len: usize) -> bool {
    if d.nonempty().is_empty() {
        return true;
    }
    d.alphabet().words_up_to(max_len).into_iter().skip(1).any(|w| {
        let single = FiniteDict::new(d.alphabet(), [w]).unwrap();
        crate::engine::equivalent(d, &single).unwrap()
    })
}

/// Whether any pair of words of length at most `max_len` generates the same
/// ω-power (not restricted to prefixes of members).
pub fn g2_by_search(d: &FiniteDict, max_len: usize) -> bool {
    if d.nonempty().is_empty() {
        return true;
    }
    let target = crate::engine::SafetyAutomaton::build(d).unwrap();
    let pool: Vec<Word> = d.alphabet().words_up_to(max_len).into_iter().skip(1).collect();
    pool.iter().enumerate().any(|(i, s1)| {
        pool[i..].iter().any(|s2| {
            let cand = FiniteDict::new(d.alphabet(), [s1.clone(), s2.clone()]).unwrap();
            let sa = crate::engine::SafetyAutomaton::build(&cand).unwrap();
            target.included_in(&sa) && sa.included_in(&target)
        })
    })
}

/// Rank of the decomposition tree of `α₀` over `words`, by depth-first
/// exploration on the first `prefix_len` letters. Every word that could
/// match must end inside the prefix.
pub fn alpha0_rank_by_search(words: &FiniteDict, prefix_len: usize) -> usize {
    let a0 = alpha0().prefix(prefix_len);
    let words = words.nonempty();
    let list: Vec<&Word> = words.words().iter().collect();
    fn height(a0: &Word, list: &[&Word], cut: usize) -> usize {
        list.iter()
            .filter(|w| {
                let end = cut + w.len();
                assert!(end <= a0.len(), "prefix too short for the search");
                &a0.letters()[cut..end] == w.letters()
            })
            .map(|w| height(a0, list, cut + w.len()) + 1)
            .max()
            .unwrap_or(0)
    }
    height(&a0, &list, 0) + 1
}

/// All dictionaries of at most `max_words` words drawn from `pool`,
/// including the empty dictionary.
pub fn dictionaries_from(alphabet: Alphabet, pool: &[Word], max_words: usize) -> Vec<FiniteDict> {
    let mut out = BTreeSet::new();
    fn rec(pool: &[Word], from: usize, cur: &mut Vec<Word>, max: usize, out: &mut BTreeSet<Vec<Word>>) {
        out.insert(cur.clone());
        if cur.len() == max {
            return;
        }
        for i in from..pool.len() {
            cur.push(pool[i].clone());
            rec(pool, i + 1, cur, max, out);
            cur.pop();
        }
    }
    rec(pool, 0, &mut Vec::new(), max_words, &mut out);
    out.into_iter()
        .map(|ws| FiniteDict::new(alphabet, ws).unwrap())
        .collect()
}
