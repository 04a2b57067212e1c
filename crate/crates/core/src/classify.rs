//! Finitely generated ω-powers: is `A^∞` generated by 0, 1, 2 (or `p`) words?

use serde::Serialize;

use crate::dict::FiniteDict;
use crate::engine::{topo_class, SafetyAutomaton, TopoClass};
use crate::error::Result;
use crate::rank::{rank_summary, RankSummary};
use crate::words::Word;

/// `A⁻ = ∅` or all members are powers of one word. The witness is the
/// shortest member (the empty word when `A⁻ = ∅`).
pub fn g1(d: &FiniteDict) -> (bool, Option<Word>) {
    let d = d.nonempty();
    let Some(shortest) = d.words().iter().next() else {
        return (true, Some(Word::empty()));
    };
    let root = shortest.primitive_root().expect("nonempty member");
    if d.words().iter().all(|w| w.is_power_of(&root)) {
        (true, Some(shortest.clone()))
    } else {
        (false, None)
    }
}

fn generates(target: &SafetyAutomaton, d: &FiniteDict, words: &[&Word]) -> Result<bool> {
    let cand = FiniteDict::new(d.alphabet(), words.iter().map(|w| (*w).clone()))?;
    let sa = SafetyAutomaton::build(&cand)?;
    Ok(target.included_in(&sa) && sa.included_in(target))
}

/// Whether two words generate `A^∞`. Outside the one-word case the
/// candidates are pairs of distinct nonempty prefixes of members, tried by
/// increasing total length and then shortlex.
pub fn g2(d: &FiniteDict) -> Result<(bool, Option<(Word, Word)>)> {
    if let (true, Some(w)) = g1(d) {
        return Ok((true, Some((w.clone(), w))));
    }
    let target = SafetyAutomaton::build(d)?;
    let prefixes: Vec<Word> = d.nonempty().prefixes().into_iter().collect();
    let mut pairs: Vec<(&Word, &Word)> = Vec::new();
    for (i, s1) in prefixes.iter().enumerate() {
        for s2 in &prefixes[i + 1..] {
            if !s1.commutes(s2) {
                pairs.push((s1, s2));
            }
        }
    }
    pairs.sort_by(|a, b| (a.0.len() + a.1.len(), a.0, a.1).cmp(&(b.0.len() + b.1.len(), b.0, b.1)));
    for (s1, s2) in pairs {
        if generates(&target, d, &[s1, s2])? {
            return Ok((true, Some((s1.clone(), s2.clone()))));
        }
    }
    Ok((false, None))
}

/// Result of a `p`-word generator search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GSearch {
    pub p: usize,
    pub found: bool,
    pub witness: Option<Vec<Word>>,
    /// False when the search came back empty for `p >= 3`, where prefix
    /// candidates are not known to be enough.
    pub conclusive: bool,
}

/// Searches for at most `p` generators among nonempty prefixes of members.
pub fn g_search(d: &FiniteDict, p: usize) -> Result<GSearch> {
    let (is_g1, w1) = g1(d);
    if is_g1 || p <= 1 {
        return Ok(GSearch {
            p,
            found: is_g1,
            witness: w1.map(|w| vec![w]),
            conclusive: true,
        });
    }
    let (is_g2, w2) = g2(d)?;
    if is_g2 || p == 2 {
        return Ok(GSearch {
            p,
            found: is_g2,
            witness: w2.map(|(a, b)| vec![a, b]),
            conclusive: true,
        });
    }
    let target = SafetyAutomaton::build(d)?;
    let prefixes: Vec<Word> = d.nonempty().prefixes().into_iter().collect();
    for size in 3..=p.min(prefixes.len()) {
        let mut sets: Vec<Vec<&Word>> = Vec::new();
        subsets(&prefixes, size, 0, &mut Vec::new(), &mut sets);
        sets.sort_by_key(|s| (s.iter().map(|w| w.len()).sum::<usize>(), s.clone()));
        for set in sets {
            if generates(&target, d, &set)? {
                return Ok(GSearch {
                    p,
                    found: true,
                    witness: Some(set.into_iter().cloned().collect()),
                    conclusive: true,
                });
            }
        }
    }
    Ok(GSearch {
        p,
        found: false,
        witness: None,
        conclusive: false,
    })
}

fn subsets<'a>(pool: &'a [Word], size: usize, from: usize, cur: &mut Vec<&'a Word>, out: &mut Vec<Vec<&'a Word>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for i in from..pool.len() {
        cur.push(&pool[i]);
        subsets(pool, size, i + 1, cur, out);
        cur.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GClassReport {
    pub g0: bool,
    pub g1: bool,
    pub g1_witness: Option<Word>,
    pub g2: bool,
    pub g2_witness: Option<(Word, Word)>,
    /// Largest `p` searched beyond 2 (2 when no deeper search was asked for).
    pub searched_p: usize,
    pub deeper: Option<GSearch>,
}

pub fn gclass_report(d: &FiniteDict, max_p: usize) -> Result<GClassReport> {
    let g0 = d.nonempty().is_empty();
    let (g1, g1_witness) = g1(d);
    let (g2, g2_witness) = g2(d)?;
    let deeper = if !g2 && max_p >= 3 {
        Some(g_search(d, max_p)?)
    } else {
        None
    };
    Ok(GClassReport {
        g0,
        g1,
        g1_witness,
        g2,
        g2_witness,
        searched_p: max_p.max(2),
        deeper,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    #[serde(flatten)]
    pub gclass: GClassReport,
    pub class: TopoClass,
    pub rank_summary: RankSummary,
}

pub fn classify_report(d: &FiniteDict) -> Result<ClassifyReport> {
    Ok(ClassifyReport {
        gclass: gclass_report(d, 2)?,
        class: topo_class(d)?,
        rank_summary: rank_summary(d)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    fn fd(words: &[&str]) -> FiniteDict {
        FiniteDict::binary(words).unwrap()
    }

    #[test]
    fn one_word() {
        assert_eq!(g1(&fd(&["00", "0000"])), (true, Some(w("00"))));
        assert_eq!(g1(&fd(&["0", "111"])), (false, None));
        assert_eq!(g1(&fd(&[])), (true, Some(w("e"))));
    }

    #[test]
    fn two_words() {
        assert_eq!(g2(&fd(&["0", "01", "001"])).unwrap(), (true, Some((w("0"), w("01")))));
        assert_eq!(g2(&fd(&["0", "1"])).unwrap(), (true, Some((w("0"), w("1")))));
        assert_eq!(g2(&fd(&["001", "010", "100"])).unwrap(), (false, None));
    }

    #[test]
    fn searches() {
        let s = g_search(&fd(&["0", "01", "001"]), 2).unwrap();
        assert!(s.found && s.conclusive);
        let s = g_search(&fd(&["001", "010", "100"]), 2).unwrap();
        assert!(!s.found && s.conclusive);
        let s = g_search(&fd(&["001", "010", "100"]), 3).unwrap();
        assert!(s.found);
        assert_eq!(s.witness.unwrap().len(), 3);
    }

    #[test]
    fn reports() {
        let r = classify_report(&fd(&["e"])).unwrap();
        assert!(r.gclass.g0);
        assert_eq!(r.class, TopoClass::Empty);
        let r = classify_report(&fd(&["0"])).unwrap();
        assert!(r.gclass.g1 && !r.gclass.g0);
        assert_eq!(r.class, TopoClass::ClosedNotOpen);
        let r = classify_report(&fd(&["0", "1"])).unwrap();
        assert!(r.gclass.g2 && !r.gclass.g1);
        assert_eq!(r.class, TopoClass::Full);
    }
}
