//! Finite words over a small alphabet `{0, .., n-1}` and the combinatorial
//! primitives the rest of the crate is built on: the (non-strict) prefix
//! order, meets, primitive roots and the splitting point of a two-word pair.
//!
//! Words are ordered shortlex (length first, then lexicographically), so any
//! ordered collection of words enumerates them in shortlex order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::streams::OmegaStream;

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 16;

/// The alphabet `{0, .., n-1}` with `2 <= n <= 16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Alphabet(u8);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);

    pub fn new(size: usize) -> Result<Self> {
        if (2..=MAX_ALPHABET).contains(&size) {
            Ok(Alphabet(size as u8))
        } else {
            Err(Error::AlphabetSize(size))
        }
    }

    pub fn size(self) -> usize {
        self.0 as usize
    }

    pub fn letters(self) -> impl Iterator<Item = u8> {
        0..self.0
    }

    pub fn check(self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|&&a| a >= self.0) {
            Some(&letter) => Err(Error::LetterOutOfRange {
                letter,
                size: self.size(),
            }),
            None => Ok(()),
        }
    }

    /// All words of length exactly `len`, in lexicographic order.
    pub fn words_of_len(self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| self.letters().map(move |a| w.append(a)))
                .collect();
        }
        out
    }

    /// All words of length at most `max_len`, in shortlex order.
    pub fn words_up_to(self, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|k| self.words_of_len(k)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word. The empty word is written `e`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn append(&self, letter: u8) -> Word {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// The prefix of length `len` (clamped to the word length).
    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.len())].to_vec())
    }

    /// `self ≺ other`, non-strict: every word is a prefix of itself.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_strict_prefix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && self.is_prefix_of(other)
    }

    /// Two words are compatible when one is a prefix of the other.
    pub fn is_compatible(&self, other: &Word) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    /// Longest common prefix.
    pub fn meet(&self, other: &Word) -> Word {
        let n = self
            .0
            .iter()
            .zip(&other.0)
            .take_while(|(a, b)| a == b)
            .count();
        self.prefix(n)
    }

    /// Shortest `u` with `self = u^k` for some `k >= 1`.
    pub fn primitive_root(&self) -> Result<Word> {
        let n = self.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let p = (1..=n)
            .find(|&p| n % p == 0 && (p..n).all(|i| self.0[i] == self.0[i - p]))
            .unwrap_or(n);
        Ok(self.prefix(p))
    }

    pub fn is_primitive(&self) -> bool {
        matches!(self.primitive_root(), Ok(r) if r.len() == self.len())
    }

    /// `xy = yx`.
    pub fn commutes(&self, other: &Word) -> bool {
        self.concat(other) == other.concat(self)
    }

    /// The point where `s1 s2` and `s2 s1` split: `meet(s1 s2, s2 s1)`.
    pub fn split_point(&self, other: &Word) -> Word {
        self.concat(other).meet(&other.concat(self))
    }

    /// Whether `self` is a power `u^k` (k >= 0) of `root`.
    pub fn is_power_of(&self, root: &Word) -> bool {
        if root.is_empty() {
            return self.is_empty();
        }
        self.len() % root.len() == 0 && self.0.chunks(root.len()).all(|c| c == root.letters())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn letter_char(a: u8) -> char {
    match a {
        0..=9 => (b'0' + a) as char,
        _ => (b'A' + a - 10) as char,
    }
}

pub(crate) fn parse_letter(c: char) -> Option<u8> {
    match c {
        '0'..='9' => Some(c as u8 - b'0'),
        'A'..='F' => Some(c as u8 - b'A' + 10),
        _ => None,
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &a in &self.0 {
            write!(f, "{}", letter_char(a))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Digits `0-9` and `A-F` for letters 10..15; `e` alone is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| parse_letter(c).ok_or_else(|| Error::parse(0, format!("bad letter {c:?} in word {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

/// Shorthand used throughout tests and the corpus. Panics on malformed input.
pub fn w(s: &str) -> Word {
    s.parse().expect("malformed word literal")
}

/// The `index`-th chunk of `alpha` under the cut sequence `cuts`.
///
/// Chunk 0 is `alpha(0..=cuts[0])`, so it has `cuts[0] + 1` letters; chunk
/// `q > 0` has `cuts[q]` letters and starts right after chunk `q - 1`.
pub fn pi_chunk<S: OmegaStream + ?Sized>(alpha: &S, cuts: &[usize], index: usize) -> Result<Word> {
    if index >= cuts.len() {
        return Err(Error::ChunkOutOfRange {
            index,
            cuts: cuts.len(),
        });
    }
    if let Some(q) = (1..=index).find(|&q| cuts[q] == 0) {
        return Err(Error::ZeroCut(q));
    }
    let (start, end) = if index == 0 {
        (0, cuts[0] + 1)
    } else {
        let start = 1 + cuts[..index].iter().sum::<usize>();
        (start, start + cuts[index])
    };
    Ok(Word((start..end).map(|k| alpha.letter(k)).collect()))
}
