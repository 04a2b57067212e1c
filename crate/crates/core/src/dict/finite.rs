use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

/// An explicit finite dictionary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FiniteDict {
    alphabet: Alphabet,
    words: BTreeSet<Word>,
}

impl FiniteDict {
    pub fn new<I: IntoIterator<Item = Word>>(alphabet: Alphabet, words: I) -> Result<Self> {
        let words: BTreeSet<Word> = words.into_iter().collect();
        for w in &words {
            alphabet.check(w)?;
        }
        Ok(FiniteDict { alphabet, words })
    }

    /// A binary dictionary from word literals.
    pub fn binary(words: &[&str]) -> Result<Self> {
        let parsed = words.iter().map(|s| s.parse()).collect::<Result<Vec<Word>>>()?;
        FiniteDict::new(Alphabet::BINARY, parsed)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    /// `A⁻`: the dictionary without the empty word.
    pub fn nonempty(&self) -> FiniteDict {
        FiniteDict {
            alphabet: self.alphabet,
            words: self.words.iter().filter(|w| !w.is_empty()).cloned().collect(),
        }
    }

    /// Longest member length (0 for the empty dictionary).
    pub fn max_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    /// All nonempty prefixes of members, in shortlex order.
    pub fn prefixes(&self) -> BTreeSet<Word> {
        self.words
            .iter()
            .flat_map(|w| (1..=w.len()).map(move |k| w.prefix(k)))
            .collect()
    }

    /// No member is a strict prefix of another.
    pub fn is_antichain(&self) -> bool {
        let v: Vec<&Word> = self.words.iter().collect();
        v.iter()
            .enumerate()
            .all(|(i, a)| v[i + 1..].iter().all(|b| !a.is_compatible(b)))
    }

    /// Greedy partition into chains: words are taken in shortlex order and
    /// each joins the first part all of whose members it is compatible with.
    pub fn chain_decomposition(&self) -> Vec<BTreeSet<Word>> {
        let mut parts: Vec<BTreeSet<Word>> = Vec::new();
        for w in &self.words {
            match parts.iter_mut().find(|p| p.iter().all(|x| x.is_compatible(w))) {
                Some(p) => {
                    p.insert(w.clone());
                }
                None => parts.push(BTreeSet::from([w.clone()])),
            }
        }
        parts
    }

    /// Unique decipherability via the Sardinas-Patterson residual sets.
    pub fn is_code(&self) -> Result<bool> {
        if self.words.contains(&Word::empty()) {
            return Err(Error::EmptyWordInCode);
        }
        let code: Vec<&Word> = self.words.iter().collect();
        let residual = |x: &Word, y: &Word| -> Option<Word> {
            (x.is_strict_prefix_of(y)).then(|| Word::from(&y.letters()[x.len()..]))
        };
        let mut current: BTreeSet<Word> = BTreeSet::new();
        for x in &code {
            for y in &code {
                current.extend(residual(x, y));
            }
        }
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        while !current.is_empty() {
            if current.iter().any(|r| self.words.contains(r)) {
                return Ok(false);
            }
            seen.extend(current.iter().cloned());
            let mut next = BTreeSet::new();
            for s in &current {
                for x in &code {
                    next.extend(residual(s, x));
                    next.extend(residual(x, s));
                }
            }
            current = next.difference(&seen).cloned().collect();
        }
        Ok(true)
    }

    /// Renders the dictionary in the file format under binding `name`.
    pub fn to_file_string(&self, name: &str) -> String {
        let mut out = format!("alphabet {}\n{name} = {self}\n", self.alphabet);
        if name != "main" {
            out.push_str(&format!("main = {name}\n"));
        }
        out
    }
}

impl fmt::Display for FiniteDict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.words.iter().map(ToString::to_string).collect();
        if items.is_empty() {
            f.write_str("{}")
        } else {
            write!(f, "{{ {} }}", items.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    fn fd(words: &[&str]) -> FiniteDict {
        FiniteDict::binary(words).unwrap()
    }

    #[test]
    fn antichains() {
        assert!(fd(&["1", "001", "0001"]).is_antichain());
        assert!(!fd(&["0", "01"]).is_antichain());
        assert!(fd(&[]).is_antichain());
    }

    #[test]
    fn chain_decompositions() {
        assert_eq!(
            fd(&["0", "00", "01"]).chain_decomposition(),
            vec![BTreeSet::from([w("0"), w("00")]), BTreeSet::from([w("01")])]
        );
        assert_eq!(fd(&["0"]).chain_decomposition(), vec![BTreeSet::from([w("0")])]);
        assert_eq!(
            fd(&["1", "001"]).chain_decomposition(),
            vec![BTreeSet::from([w("1")]), BTreeSet::from([w("001")])]
        );
    }

    #[test]
    fn codes() {
        assert_eq!(fd(&["0", "01"]).is_code(), Ok(true));
        assert_eq!(fd(&["0", "10", "010"]).is_code(), Ok(false));
        assert_eq!(fd(&["01", "10"]).is_code(), Ok(true));
        assert_eq!(fd(&["e", "0"]).is_code(), Err(Error::EmptyWordInCode));
        // 0·10 = 01·0 is found in the second residual round.
        assert_eq!(fd(&["01", "0", "10"]).is_code(), Ok(false));
    }

    #[test]
    fn file_rendering_round_trips() {
        let d = fd(&["0", "01"]);
        let parsed = crate::dict::parse_dictionary(&d.to_file_string("A")).unwrap();
        assert_eq!(parsed.to_finite().unwrap(), d);
        assert_eq!(fd(&[]).to_string(), "{}");
    }
}
