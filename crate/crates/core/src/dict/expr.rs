use std::collections::BTreeSet;
use std::fmt;

use crate::dict::automaton::WordAutomaton;
use crate::dict::finite::FiniteDict;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

/// Regular word-language expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// An explicit finite set of words.
    Finite(BTreeSet<Word>),
    /// `{s : t ≺ s}`: every extension of `t`, including `t` itself.
    Ext(Word),
    Letter(u8),
    /// The language `{∅}`.
    Epsilon,
    Concat(Vec<Expr>),
    Union(Vec<Expr>),
    Star(Box<Expr>),
    /// Set difference.
    Diff(Box<Expr>, Box<Expr>),
    /// All concatenations of finitely many member words (including none).
    StarWords(Box<Expr>),
}

impl Expr {
    pub fn finite<I: IntoIterator<Item = Word>>(words: I) -> Expr {
        Expr::Finite(words.into_iter().collect())
    }

    pub fn union(parts: Vec<Expr>) -> Expr {
        Expr::Union(parts)
    }

    pub fn diff(a: Expr, b: Expr) -> Expr {
        Expr::Diff(Box::new(a), Box::new(b))
    }

    pub fn star_words(a: Expr) -> Expr {
        Expr::StarWords(Box::new(a))
    }

    pub fn star(a: Expr) -> Expr {
        Expr::Star(Box::new(a))
    }

    /// Membership by direct recursion on the expression, independent of any
    /// automaton. Exponential in the worst case; meant for short words.
    pub fn matches(&self, word: &[u8]) -> bool {
        match self {
            Expr::Finite(set) => set.contains(&Word::from(word)),
            Expr::Ext(t) => word.starts_with(t.letters()),
            Expr::Letter(a) => word == [*a],
            Expr::Epsilon => word.is_empty(),
            Expr::Concat(parts) => concat_matches(parts, word),
            Expr::Union(parts) => parts.iter().any(|p| p.matches(word)),
            Expr::Star(inner) | Expr::StarWords(inner) => star_matches(inner, word),
            Expr::Diff(a, b) => a.matches(word) && !b.matches(word),
        }
    }

    fn words(&self) -> Vec<&Word> {
        let mut out = Vec::new();
        self.collect_words(&mut out);
        out
    }

    fn collect_words<'a>(&'a self, out: &mut Vec<&'a Word>) {
        match self {
            Expr::Finite(set) => out.extend(set.iter()),
            Expr::Ext(t) => out.push(t),
            Expr::Letter(_) | Expr::Epsilon => {}
            Expr::Concat(parts) | Expr::Union(parts) => {
                parts.iter().for_each(|p| p.collect_words(out))
            }
            Expr::Star(a) | Expr::StarWords(a) => a.collect_words(out),
            Expr::Diff(a, b) => {
                a.collect_words(out);
                b.collect_words(out);
            }
        }
    }

    fn max_letter(&self) -> Option<u8> {
        let from_words = self
            .words()
            .into_iter()
            .flat_map(|w| w.letters().iter().copied())
            .max();
        let from_letters = match self {
            Expr::Letter(a) => Some(*a),
            Expr::Concat(parts) | Expr::Union(parts) => {
                parts.iter().filter_map(Expr::max_letter).max()
            }
            Expr::Star(a) | Expr::StarWords(a) => a.max_letter(),
            Expr::Diff(a, b) => a.max_letter().max(b.max_letter()),
            _ => None,
        };
        from_words.max(from_letters)
    }
}

fn concat_matches(parts: &[Expr], word: &[u8]) -> bool {
    match parts.split_first() {
        None => word.is_empty(),
        Some((first, rest)) => {
            (0..=word.len()).any(|i| first.matches(&word[..i]) && concat_matches(rest, &word[i..]))
        }
    }
}

fn star_matches(inner: &Expr, word: &[u8]) -> bool {
    word.is_empty()
        || (1..=word.len()).any(|i| inner.matches(&word[..i]) && star_matches(inner, &word[i..]))
}

/// A dictionary `A ⊆ n^{<ω}` presented as a regular expression over a fixed
/// alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DictionaryExpression {
    alphabet: Alphabet,
    expr: Expr,
}

impl DictionaryExpression {
    pub fn new(alphabet: Alphabet, expr: Expr) -> Result<Self> {
        if let Some(a) = expr.max_letter() {
            if a as usize >= alphabet.size() {
                return Err(Error::LetterOutOfRange {
                    letter: a,
                    size: alphabet.size(),
                });
            }
        }
        Ok(DictionaryExpression { alphabet, expr })
    }

    pub fn binary(expr: Expr) -> Result<Self> {
        DictionaryExpression::new(Alphabet::BINARY, expr)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    /// Membership by structural recursion (the reference semantics).
    pub fn contains(&self, word: &Word) -> bool {
        self.alphabet.check(word).is_ok() && self.expr.matches(word.letters())
    }

    /// Deterministic acceptor for the denoted language.
    pub fn compile(&self) -> WordAutomaton {
        WordAutomaton::compile(self)
    }

    /// The denoted language as an explicit finite dictionary, when it is finite.
    pub fn to_finite(&self) -> Result<FiniteDict> {
        if let Expr::Finite(set) = &self.expr {
            return FiniteDict::new(self.alphabet, set.iter().cloned());
        }
        let words = self.compile().finite_language().ok_or(Error::NotFinite)?;
        FiniteDict::new(self.alphabet, words)
    }
}

impl From<&FiniteDict> for DictionaryExpression {
    fn from(d: &FiniteDict) -> Self {
        DictionaryExpression {
            alphabet: d.alphabet(),
            expr: Expr::Finite(d.words().clone()),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Finite(set) => {
                let items: Vec<String> = set.iter().map(ToString::to_string).collect();
                write!(f, "{{ {} }}", items.join(", "))
            }
            Expr::Ext(t) => write!(f, "ext({t})"),
            Expr::Letter(a) => write!(f, "re({})", Word::new(vec![*a])),
            Expr::Epsilon => write!(f, "{{ e }}"),
            Expr::Concat(parts) => {
                let items: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "({})", items.join(" . "))
            }
            Expr::Union(parts) => {
                let items: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "({})", items.join(" | "))
            }
            Expr::Star(a) | Expr::StarWords(a) => write!(f, "star({a})"),
            Expr::Diff(a, b) => write!(f, "({a} \\ {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    #[test]
    fn structural_membership() {
        let fin = Expr::finite([w("010"), w("011")]);
        assert!(fin.matches(w("010").letters()));
        assert!(!fin.matches(w("01").letters()));

        let ext = Expr::Ext(w("11"));
        assert!(ext.matches(w("11").letters()));
        assert!(ext.matches(w("110").letters()));
        assert!(!ext.matches(w("1").letters()));

        let star = Expr::star_words(Expr::finite([w("01"), w("0")]));
        assert!(star.matches(&[]));
        assert!(star.matches(w("0010").letters()));
        assert!(!star.matches(w("011").letters()));
    }

    #[test]
    fn letters_are_checked_against_the_alphabet() {
        assert!(DictionaryExpression::binary(Expr::finite([w("2")])).is_err());
        let three = Alphabet::new(3).unwrap();
        assert!(DictionaryExpression::new(three, Expr::finite([w("2")])).is_ok());
    }
}
