//! Built-in regression corpus: concrete dictionaries with executable facts.
//!
//! Every fact carries a [`Basis`]: `Claimed` facts restate a published
//! property of the example, `Computed` facts were produced by this crate's
//! engines and cross-checked before being frozen, `Definitional` facts hold
//! by construction.

use std::fmt;

use serde::Serialize;

use crate::classify::{g1, g2};
use crate::dict::{parse_dictionary, DictionaryExpression, FiniteDict, OracleDictionary};
use crate::engine::{equivalent, included, member_lasso, member_positions, topo_class, TopoClass};
use crate::error::Result;
use crate::rank::{rank_lasso, rank_summary, RankResult, RankSummary};
use crate::streams::{lasso, Lasso, OmegaStream};
use crate::words::{w, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Claimed,
    Computed,
    Definitional,
}

/// A set of infinite words, evaluated on lassos.
#[derive(Clone, Debug)]
pub enum OmegaSet {
    All,
    Power(DictionaryExpression),
    /// Words with some prefix in the language.
    Prefixed(DictionaryExpression),
    Points(Vec<Lasso>),
    Union(Vec<OmegaSet>),
    Diff(Box<OmegaSet>, Box<OmegaSet>),
}

impl OmegaSet {
    pub fn diff(a: OmegaSet, b: OmegaSet) -> OmegaSet {
        OmegaSet::Diff(Box::new(a), Box::new(b))
    }

    pub fn contains(&self, alpha: &Lasso) -> bool {
        match self {
            OmegaSet::All => true,
            OmegaSet::Power(d) => member_lasso(d, alpha),
            OmegaSet::Prefixed(d) => has_prefix_in(d, alpha),
            OmegaSet::Points(ps) => ps.contains(alpha),
            OmegaSet::Union(parts) => parts.iter().any(|p| p.contains(alpha)),
            OmegaSet::Diff(a, b) => a.contains(alpha) && !b.contains(alpha),
        }
    }
}

/// Runs the word automaton along `alpha` until a (state, class) pair must
/// have repeated.
fn has_prefix_in(d: &DictionaryExpression, alpha: &Lasso) -> bool {
    let a = d.compile();
    let bound = alpha.head().len() + alpha.cycle().len() * (a.num_states() + 1);
    let mut q = a.initial();
    for k in 0..=bound {
        if a.is_accepting(q) {
            return true;
        }
        if q == a.dead() {
            return false;
        }
        q = a.step(q, alpha.letter(k));
    }
    false
}

#[derive(Clone, Debug)]
pub enum Fact {
    Member { lasso: Lasso, expected: bool },
    /// Membership agrees with `set` on every lasso with `|u| + |v| <= budget`.
    Identity { set: OmegaSet, budget: usize, label: &'static str },
    Rank { lasso: Lasso, expected: RankResult },
    Class(TopoClass),
    Summary(RankSummary),
    G1(bool),
    G2(bool),
    Included { other: FiniteDict, expected: bool },
    Equivalent { other: FiniteDict, expected: bool },
    /// Word membership in an oracle dictionary.
    WordMember { word: Word, expected: bool },
    /// Whether `word` splits into oracle members of bounded length.
    Decomposes { word: Word, max_word_len: Option<usize>, expected: bool },
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Member { lasso, expected } => {
                write!(f, "{lasso} {} A^∞", if *expected { "∈" } else { "∉" })
            }
            Fact::Identity { budget, label, .. } => write!(f, "A^∞ = {label} (|u|+|v| <= {budget})"),
            Fact::Rank { lasso, expected } => match expected {
                RankResult::Member => write!(f, "rank at {lasso}: member"),
                RankResult::Rank(r) => write!(f, "rank at {lasso} = {r}"),
            },
            Fact::Class(c) => write!(f, "class {c:?}"),
            Fact::Summary(s) => write!(f, "rank summary {s:?}"),
            Fact::G1(b) => write!(f, "one-word generated: {b}"),
            Fact::G2(b) => write!(f, "two-word generated: {b}"),
            Fact::Included { other, expected } => {
                write!(f, "A^∞ ⊆ {other}^∞: {expected}")
            }
            Fact::Equivalent { other, expected } => {
                write!(f, "A^∞ = {other}^∞: {expected}")
            }
            Fact::WordMember { word, expected } => {
                write!(f, "{word} {} A", if *expected { "∈" } else { "∉" })
            }
            Fact::Decomposes { word, max_word_len, expected } => {
                let bound = max_word_len.map_or("unbounded".to_string(), |m| format!("<= {m}"));
                write!(f, "{word} splits into members of length {bound}: {expected}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum CorpusDictionary {
    Expression { source: String, dict: DictionaryExpression },
    Oracle(OracleDictionary),
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    /// What the example is about, in one line.
    pub about: &'static str,
    pub dictionary: CorpusDictionary,
    pub facts: Vec<(Fact, Basis)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactCheck {
    pub fact: String,
    pub basis: Basis,
    pub passed: bool,
    /// What was observed when the fact failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub passed: bool,
    pub facts: Vec<FactCheck>,
}

impl CorpusEntry {
    pub fn expression(&self) -> Option<&DictionaryExpression> {
        match &self.dictionary {
            CorpusDictionary::Expression { dict, .. } => Some(dict),
            CorpusDictionary::Oracle(_) => None,
        }
    }

    /// Dictionary file text, for expression entries.
    pub fn source(&self) -> Option<&str> {
        match &self.dictionary {
            CorpusDictionary::Expression { source, .. } => Some(source),
            CorpusDictionary::Oracle(_) => None,
        }
    }

    pub fn check(&self) -> EntryReport {
        let facts: Vec<FactCheck> = self
            .facts
            .iter()
            .map(|(fact, basis)| {
                let observed = match self.check_fact(fact) {
                    Ok(None) => None,
                    Ok(Some(obs)) => Some(obs),
                    Err(e) => Some(format!("error: {e}")),
                };
                FactCheck {
                    fact: fact.to_string(),
                    basis: *basis,
                    passed: observed.is_none(),
                    observed,
                }
            })
            .collect();
        EntryReport {
            name: self.name.to_string(),
            passed: facts.iter().all(|f| f.passed),
            facts,
        }
    }

    fn finite(&self) -> Result<FiniteDict> {
        match &self.dictionary {
            CorpusDictionary::Expression { dict, .. } => dict.to_finite(),
            CorpusDictionary::Oracle(_) => Err(crate::error::Error::NotFinite),
        }
    }

    /// `None` when the fact holds, otherwise a description of what was seen.
    fn check_fact(&self, fact: &Fact) -> Result<Option<String>> {
        let mismatch = |seen: String| Ok(Some(seen));
        if let CorpusDictionary::Oracle(o) = &self.dictionary {
            return match fact {
                Fact::WordMember { word, expected } => {
                    let seen = o.contains(word);
                    if seen == *expected { Ok(None) } else { mismatch(format!("{seen}")) }
                }
                Fact::Decomposes { word, max_word_len, expected } => {
                    let seen = o.decomposes(word, *max_word_len);
                    if seen == *expected { Ok(None) } else { mismatch(format!("{seen}")) }
                }
                _ => mismatch("fact not applicable to an oracle dictionary".into()),
            };
        }
        let d = self.expression().expect("expression entry");
        match fact {
            Fact::Member { lasso, expected } => {
                let (a, b) = (member_lasso(d, lasso), member_positions(d, lasso));
                if a == *expected && b == *expected {
                    Ok(None)
                } else {
                    mismatch(format!("acceptor {a}, position graph {b}"))
                }
            }
            Fact::Identity { set, budget, .. } => {
                for alpha in Lasso::enumerate_total(d.alphabet(), *budget) {
                    let lhs = member_lasso(d, &alpha);
                    if lhs != member_positions(d, &alpha) || lhs != set.contains(&alpha) {
                        return mismatch(format!("differs at {alpha}"));
                    }
                }
                Ok(None)
            }
            Fact::Rank { lasso, expected } => {
                let seen = rank_lasso(d, lasso);
                if seen == *expected { Ok(None) } else { mismatch(format!("{seen:?}")) }
            }
            Fact::WordMember { word, expected } => {
                let seen = d.contains(word);
                if seen == *expected { Ok(None) } else { mismatch(format!("{seen}")) }
            }
            Fact::Decomposes { .. } => mismatch("fact only applies to oracle dictionaries".into()),
            Fact::Class(expected) => {
                let seen = topo_class(&self.finite()?)?;
                if seen == *expected { Ok(None) } else { mismatch(format!("{seen:?}")) }
            }
            Fact::Summary(expected) => {
                let seen = rank_summary(&self.finite()?)?;
                if seen == *expected { Ok(None) } else { mismatch(format!("{seen:?}")) }
            }
            Fact::G1(expected) => {
                let seen = g1(&self.finite()?).0;
                if seen == *expected { Ok(None) } else { mismatch(format!("{seen}")) }
            }
            Fact::G2(expected) => {
                let seen = g2(&self.finite()?)?.0;
                if seen == *expected { Ok(None) } else { mismatch(format!("{seen}")) }
            }
            Fact::Included { other, expected } => {
                let seen = included(&self.finite()?, other)?;
                if seen == *expected { Ok(None) } else { mismatch(format!("{seen}")) }
            }
            Fact::Equivalent { other, expected } => {
                let seen = equivalent(&self.finite()?, other)?;
                if seen == *expected { Ok(None) } else { mismatch(format!("{seen}")) }
            }
        }
    }
}

fn expr(src: &str) -> DictionaryExpression {
    parse_dictionary(src).expect("corpus dictionary parses")
}

fn entry(name: &'static str, about: &'static str, source: String, facts: Vec<(Fact, Basis)>) -> CorpusEntry {
    let dict = expr(&source);
    CorpusEntry {
        name,
        about,
        dictionary: CorpusDictionary::Expression { source, dict },
        facts,
    }
}

fn member(l: &str, expected: bool, basis: Basis) -> (Fact, Basis) {
    (Fact::Member { lasso: lasso(l), expected }, basis)
}

fn binary(words: &[&str]) -> FiniteDict {
    FiniteDict::binary(words).expect("binary words")
}

/// `{00} ∪ Ext(1) ∪ Ext(001) ∪ … ∪ Ext(0^{2p}1) ∪ Ext(0^{2p+1})`.
pub fn a_p_source(p: usize) -> String {
    let mut parts = vec!["{00}".to_string()];
    parts.extend((0..=p).map(|q| format!("ext({}1)", "0".repeat(2 * q))));
    parts.push(format!("ext({})", "0".repeat(2 * p + 1)));
    format!("alphabet 2\nmain = {}\n", parts.join(" | "))
}

/// The lasso `0^{2p-1}(1)` on which `A_p` has rank `p`.
pub fn a_p_witness(p: usize) -> Lasso {
    Lasso::new(w(&"0".repeat(2 * p - 1)), w("1")).expect("nonempty cycle")
}

pub fn corpus() -> Vec<CorpusEntry> {
    use Basis::*;
    let mut out = vec![
        entry(
            "clopen-cylinders",
            "A = Ext(0) ∪ Ext(11); the ω-power is the clopen set N_0 ∪ N_11",
            "alphabet 2\nmain = ext(0) | ext(11)\n".into(),
            vec![
                member("(0)", true, Claimed),
                member("(1)", true, Claimed),
                member("1(0)", false, Claimed),
                member("10(1)", false, Claimed),
                member("0(1)", true, Claimed),
                (
                    Fact::Identity {
                        set: OmegaSet::Prefixed(expr("main = {0, 11}")),
                        budget: 7,
                        label: "N_0 ∪ N_11",
                    },
                    Claimed,
                ),
            ],
        ),
        entry(
            "open-one-hole",
            "A = Ext(0) ∪ 1 0* 1 1*; the ω-power misses exactly 10^∞",
            "alphabet 2\nmain = ext(0) | re(1 0* 1 1*)\n".into(),
            vec![
                member("1(0)", false, Claimed),
                member("(0)", true, Claimed),
                member("(10)", true, Claimed),
                member("11(0)", true, Claimed),
                (
                    Fact::Identity {
                        set: OmegaSet::diff(OmegaSet::All, OmegaSet::Points(vec![lasso("1(0)")])),
                        budget: 7,
                        label: "2^ω minus {10^∞}",
                    },
                    Claimed,
                ),
            ],
        ),
        entry(
            "open-plus-closed",
            "A = Ext(001) ∪ {00} ∪ Ext(1 0* 1): a clopen-separated union of an open and a closed set",
            "alphabet 2\nmain = ext(001) | {00} | re(1 0* 1 (0|1)*)\n".into(),
            vec![
                member("(0)", true, Claimed),
                member("1(0)", false, Claimed),
                member("0011(0)", true, Claimed),
                member("0(1)", false, Computed),
                member("0001(0)", false, Computed),
                (
                    Fact::Identity {
                        set: OmegaSet::Union(vec![
                            OmegaSet::Points(vec![lasso("(0)")]),
                            OmegaSet::Prefixed(expr("main = re(00(00)*1)")),
                            OmegaSet::diff(
                                OmegaSet::Prefixed(expr("main = {1}")),
                                OmegaSet::Points(vec![lasso("1(0)")]),
                            ),
                        ]),
                        budget: 7,
                        label: "{0^∞} ∪ ⋃_q N_{0^{2q+2}1} ∪ (N_1 minus {10^∞})",
                    },
                    Claimed,
                ),
            ],
        ),
        entry(
            "open-or-closed",
            "A = Ext(0) ∪ Ext((101)* 111) ∪ {100}: union of an open set and a closed set",
            "alphabet 2\nmain = ext(0) | re((101)* 111 (0|1)*) | {100}\n".into(),
            vec![
                member("(100)", true, Claimed),
                member("(110)", false, Computed),
                member("100(110)", false, Computed),
                member("100100(110)", false, Computed),
                member("100100100(110)", false, Computed),
                member("100100(101)", false, Computed),
                member("100101(1)", true, Computed),
                (
                    Fact::Identity {
                        set: OmegaSet::Union(vec![
                            OmegaSet::Prefixed(expr("main = re((100)* (0 | (101)* 111))")),
                            OmegaSet::Points(vec![lasso("(100)")]),
                        ]),
                        budget: 7,
                        label: "⋃_p [N_{(100)^p 0} ∪ ⋃_q N_{(100)^p (101)^q 111}] ∪ {(100)^∞}",
                    },
                    Claimed,
                ),
            ],
        ),
        entry(
            "difference-of-closed",
            "A = A1* minus A0* with A0 = {010, 011}; the ω-power is A1^∞ minus A0^∞",
            "alphabet 2\n\
             A0 = {010, 011}\n\
             A1 = {010, 011, 00, 000, 100, 110, 1000, 1100}\n\
             main = star(A1) \\ star(A0)\n"
                .into(),
            vec![
                member("(011)", false, Claimed),
                member("011(0)", true, Claimed),
                member("011011(0)", true, Claimed),
                member("011011011(0)", true, Claimed),
                member("(010)", false, Definitional),
                member("(1)", false, Computed),
                (
                    Fact::Identity {
                        set: OmegaSet::diff(
                            OmegaSet::Power(expr("main = {010, 011, 00, 000, 100, 110, 1000, 1100}")),
                            OmegaSet::Power(expr("main = {010, 011}")),
                        ),
                        budget: 7,
                        label: "A1^∞ minus A0^∞",
                    },
                    Claimed,
                ),
            ],
        ),
        entry(
            "three-level-difference",
            "A = (A2* minus A1*) ∪ A0* with A0 = {00}, A1 = {00, 01}, A2 = {00, 01, 10, 100}",
            "alphabet 2\n\
             A0 = {00}\n\
             A1 = {00, 01}\n\
             A2 = {00, 01, 10, 100}\n\
             main = (star(A2) \\ star(A1)) | star(A0)\n"
                .into(),
            vec![
                member("(0)", true, Claimed),
                member("(01)", false, Claimed),
                member("(10)", true, Claimed),
                member("(1)", false, Claimed),
                (
                    Fact::Identity {
                        set: OmegaSet::Union(vec![
                            OmegaSet::diff(
                                OmegaSet::Power(expr("main = {00, 01, 10, 100}")),
                                OmegaSet::Power(expr("main = {00, 01}")),
                            ),
                            OmegaSet::Power(expr("main = {00}")),
                        ]),
                        budget: 7,
                        label: "(A2^∞ minus A1^∞) ∪ A0^∞",
                    },
                    Claimed,
                ),
            ],
        ),
        entry(
            "double-one-or-zero",
            "A = Ext(11) ∪ {0}",
            "alphabet 2\nmain = ext(11) | {0}\n".into(),
            vec![
                member("(0)", true, Claimed),
                member("(01)", false, Computed),
                member("0(1)", true, Computed),
                member("011(0)", true, Claimed),
                member("(011)", true, Claimed),
                member("11(01)", false, Computed),
                member("1(0)", false, Claimed),
                member("0(110)", true, Claimed),
            ],
        ),
        CorpusEntry {
            name: "half-ones-oracle",
            about: "words whose every prefix is at least half ones; the ω-power needs unbounded words",
            dictionary: CorpusDictionary::Oracle(OracleDictionary::half_ones()),
            facts: {
                let mut facts = vec![
                    (Fact::WordMember { word: w("1"), expected: true }, Definitional),
                    (Fact::WordMember { word: w("10"), expected: true }, Definitional),
                    (Fact::WordMember { word: w("0"), expected: false }, Definitional),
                    (Fact::WordMember { word: w("100"), expected: false }, Definitional),
                    (Fact::WordMember { word: w("1100"), expected: true }, Definitional),
                ];
                for k in 1..=4 {
                    facts.push((
                        Fact::Decomposes { word: staircase(k), max_word_len: Some(2 * k), expected: true },
                        Claimed,
                    ));
                    facts.push((
                        Fact::Decomposes { word: staircase(k), max_word_len: Some(2 * k - 1), expected: false },
                        Claimed,
                    ));
                }
                facts
            },
        },
    ];

    for p in 1..=6 {
        out.push(entry(
            RANK_FAMILY_NAMES[p - 1],
            "A_p = {00} ∪ ⋃_{q<=p} Ext(0^{2q}1) ∪ Ext(0^{2p+1}); rank p at 0^{2p-1}1^∞",
            a_p_source(p),
            vec![
                (Fact::Rank { lasso: a_p_witness(p), expected: RankResult::Rank(p) }, Claimed),
                member("(0)", true, Computed),
            ],
        ));
    }

    out.extend([
        entry(
            "rank-not-monotone",
            "B = A_2 minus {00} has the same ω-power as A_2 but rank 1 at 0001^∞",
            "alphabet 2\nmain = ext(1) | ext(001) | ext(00001) | ext(00000)\n".into(),
            vec![
                (Fact::Rank { lasso: lasso("000(1)"), expected: RankResult::Rank(1) }, Claimed),
                (
                    Fact::Identity {
                        set: OmegaSet::Power(expr(&a_p_source(2))),
                        budget: 8,
                        label: "A_2^∞",
                    },
                    Claimed,
                ),
            ],
        ),
        entry(
            "inclusion-pair",
            "{0, 01}^∞ is strictly included in {0, 10}^∞",
            "alphabet 2\nmain = {0, 01}\n".into(),
            vec![
                (Fact::Included { other: binary(&["0", "10"]), expected: true }, Claimed),
                (Fact::Equivalent { other: binary(&["0", "10"]), expected: false }, Claimed),
                member("(01)", true, Definitional),
                member("(10)", false, Computed),
            ],
        ),
        entry(
            "full",
            "A = {0, 1}: every infinite word",
            "alphabet 2\nmain = {0, 1}\n".into(),
            vec![
                (Fact::Class(TopoClass::Full), Definitional),
                (Fact::Summary(RankSummary::Zero), Claimed),
                (Fact::G1(false), Claimed),
                (Fact::G2(true), Definitional),
            ],
        ),
        entry(
            "single-letter",
            "A = {0}: the single point 0^∞",
            "alphabet 2\nmain = {0}\n".into(),
            vec![
                (Fact::Class(TopoClass::ClosedNotOpen), Claimed),
                (Fact::Summary(RankSummary::Omega), Claimed),
                (Fact::G1(true), Definitional),
                member("(0)", true, Definitional),
                member("0(1)", false, Definitional),
            ],
        ),
        entry(
            "empty-word-only",
            "A = {∅}: the empty ω-power",
            "alphabet 2\nmain = {e}\n".into(),
            vec![
                (Fact::Class(TopoClass::Empty), Claimed),
                (Fact::Summary(RankSummary::One), Claimed),
                member("(0)", false, Definitional),
            ],
        ),
        entry(
            "finite-clopen",
            "A = {0, 01, 11, 111}: a finite dictionary whose ω-power is clopen and proper",
            "alphabet 2\nmain = {0, 01, 11, 111}\n".into(),
            vec![
                (Fact::Class(TopoClass::Clopen), Computed),
                member("1(0)", false, Computed),
                member("(0)", true, Computed),
                member("(1)", true, Computed),
                member("0(1)", true, Computed),
                (
                    Fact::Identity {
                        set: OmegaSet::diff(OmegaSet::All, OmegaSet::Prefixed(expr("main = {10}"))),
                        budget: 8,
                        label: "2^ω minus N_10",
                    },
                    Computed,
                ),
            ],
        ),
        entry(
            "two-generators",
            "A = {0, 01, 001} is generated by {0, 01}",
            "alphabet 2\nmain = {0, 01, 001}\n".into(),
            vec![
                (Fact::G1(false), Definitional),
                (Fact::G2(true), Computed),
                (Fact::Equivalent { other: binary(&["0", "01"]), expected: true }, Computed),
            ],
        ),
        entry(
            "no-two-generators",
            "A = {001, 010, 100} has no two-word generator",
            "alphabet 2\nmain = {001, 010, 100}\n".into(),
            vec![(Fact::G2(false), Computed), (Fact::Class(TopoClass::ClosedNotOpen), Computed)],
        ),
    ]);
    out
}

const RANK_FAMILY_NAMES: [&str; 6] =
    ["rank-family-1", "rank-family-2", "rank-family-3", "rank-family-4", "rank-family-5", "rank-family-6"];

/// `1 0 1² 0² … 1^k 0^k`.
pub fn staircase(k: usize) -> Word {
    Word::new((1..=k).flat_map(|j| std::iter::repeat(1).take(j).chain(std::iter::repeat(0).take(j))).collect())
}

/// Runs every entry.
pub fn run_all() -> Vec<EntryReport> {
    corpus().iter().map(CorpusEntry::check).collect()
}
