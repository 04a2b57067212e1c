use std::fmt;
use std::sync::Arc;

use crate::words::{Alphabet, Word};

/// A dictionary known only through a decidable membership predicate.
#[derive(Clone)]
pub struct OracleDictionary {
    name: String,
    alphabet: Alphabet,
    predicate: Arc<dyn Fn(&[u8]) -> bool + Send + Sync>,
}

impl OracleDictionary {
    pub fn new(
        name: impl Into<String>,
        alphabet: Alphabet,
        predicate: impl Fn(&[u8]) -> bool + Send + Sync + 'static,
    ) -> Self {
        OracleDictionary {
            name: name.into(),
            alphabet,
            predicate: Arc::new(predicate),
        }
    }

    /// Words in which, at every cut `i <= |s|`, at least half of the first
    /// `i` letters are `1`.
    pub fn half_ones() -> Self {
        OracleDictionary::new("half-ones", Alphabet::BINARY, |s| {
            let mut ones = 0usize;
            for (i, &a) in s.iter().enumerate() {
                if a == 1 {
                    ones += 1;
                }
                if 2 * ones < i + 1 {
                    return false;
                }
            }
            true
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.alphabet.check(w).is_ok() && (self.predicate)(w.letters())
    }

    /// Whether `word` splits into nonempty members, each of length at most
    /// `max_word_len` when given.
    pub fn decomposes(&self, word: &Word, max_word_len: Option<usize>) -> bool {
        let s = word.letters();
        let n = s.len();
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for j in 1..=n {
            let lo = max_word_len.map_or(0, |m| j.saturating_sub(m));
            reach[j] = (lo..j).any(|i| reach[i] && (self.predicate)(&s[i..j]));
        }
        reach[n]
    }
}

impl fmt::Debug for OracleDictionary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OracleDictionary({})", self.name)
    }
}
