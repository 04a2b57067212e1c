//! Exhaustive search over small binary dictionaries for counterexamples to
//! two statements about two-word generators:
//!
//! * length: if `A` is not generated by one word and `A^∞ ⊆ {t1, t2}^∞` for
//!   a non-commuting pair, then `|t1| + |t2|` is at most the total length
//!   of `A`;
//! * uniqueness: a dictionary outside `G1` has at most one two-word
//!   generator, and `g2` finds it.

use std::fmt::Write as _;

use omega_power::classify::{g1, g2};
use omega_power::dict::FiniteDict;
use omega_power::engine::SafetyAutomaton;
use omega_power::words::{Alphabet, Word};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::{Outcome, Res};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
struct Counterexample {
    kind: &'static str,
    dictionary: String,
    pair: Option<(String, String)>,
}

struct Pair {
    words: (Word, Word),
    len: usize,
    sa: SafetyAutomaton,
}

fn subsets(pool: &[Word], max: usize) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(pool: &[Word], from: usize, max: usize, cur: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in from..pool.len() {
            cur.push(pool[i].clone());
            rec(pool, i + 1, max, cur, out);
            cur.pop();
        }
    }
    rec(pool, 0, max, &mut cur, &mut out);
    out
}

pub fn run(max_len: usize, max_words: usize) -> Res<Outcome> {
    let pool: Vec<Word> = Alphabet::BINARY.words_up_to(max_len).into_iter().skip(1).collect();
    let mut pairs = Vec::new();
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i + 1..] {
            if !a.commutes(b) {
                let d = FiniteDict::new(Alphabet::BINARY, [a.clone(), b.clone()])?;
                pairs.push(Pair { words: (a.clone(), b.clone()), len: a.len() + b.len(), sa: SafetyAutomaton::build(&d)? });
            }
        }
    }
    let dicts = subsets(&pool, max_words);

    let results: Vec<(bool, Vec<Counterexample>)> = dicts
        .par_iter()
        .map(|ws| -> Res<(bool, Vec<Counterexample>)> {
            let d = FiniteDict::new(Alphabet::BINARY, ws.iter().cloned())?;
            if g1(&d).0 {
                return Ok((false, Vec::new()));
            }
            let total: usize = ws.iter().map(Word::len).sum();
            let sa = SafetyAutomaton::build(&d)?;
            let mut found = Vec::new();
            let mut generators = Vec::new();
            for p in &pairs {
                if !sa.included_in(&p.sa) {
                    continue;
                }
                let pair = Some((p.words.0.to_string(), p.words.1.to_string()));
                if p.len > total {
                    found.push(Counterexample { kind: "length", dictionary: d.to_string(), pair: pair.clone() });
                }
                if p.sa.included_in(&sa) {
                    generators.push(pair);
                }
            }
            if generators.len() > 1 {
                found.push(Counterexample { kind: "uniqueness", dictionary: d.to_string(), pair: None });
            }
            if g2(&d)?.0 != !generators.is_empty() {
                found.push(Counterexample { kind: "g2-search", dictionary: d.to_string(), pair: None });
            }
            Ok((!generators.is_empty(), found))
        })
        .collect::<Res<_>>()?;

    let in_g2 = results.iter().filter(|(g, _)| *g).count();
    let mut found: Vec<Counterexample> = results.into_iter().flat_map(|(_, f)| f).collect();
    found.sort();

    let mut text = format!(
        "{} dictionaries (words of length <= {max_len}, at most {max_words} words), {} pairs, {in_g2} two-word generated outside G1\n",
        dicts.len(),
        pairs.len()
    );
    if found.is_empty() {
        text.push_str("no counterexamples\n");
    }
    for c in &found {
        write!(text, "{}: {}", c.kind, c.dictionary).unwrap();
        if let Some((a, b)) = &c.pair {
            write!(text, " with {{{a}, {b}}}").unwrap();
        }
        text.push('\n');
    }
    let ok = found.is_empty();
    Ok(Outcome::new(
        json!({
            "verb": "explore-conjecture",
            "max_len": max_len,
            "max_words": max_words,
            "dictionaries": dicts.len(),
            "pairs": pairs.len(),
            "two_word_generated": in_g2,
            "counterexamples": found,
        }),
        text,
        ok,
    ))
}
