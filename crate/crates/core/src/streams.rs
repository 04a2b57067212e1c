//! Computable infinite words: ultimately periodic lassos `u·v^ω` and the
//! run-length stream `1 0 1 0² 1 0³ …` used by the tree reductions.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{parse_letter, Word};

/// An infinite word given by its letter function.
pub trait OmegaStream {
    fn letter(&self, index: usize) -> u8;

    /// The first `len` letters.
    fn prefix(&self, len: usize) -> Word {
        Word::new((0..len).map(|k| self.letter(k)).collect())
    }
}

/// Ultimately periodic word `head · cycle^ω` in canonical form: the cycle is
/// primitive and the head is as short as possible. Equal lassos denote equal
/// infinite words and vice versa.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lasso {
    head: Word,
    cycle: Word,
}

impl Lasso {
    /// Canonical lasso for `head · cycle^ω`.
    pub fn new(head: Word, cycle: Word) -> Result<Self> {
        let cycle = cycle.primitive_root().map_err(|_| Error::EmptyCycle)?;
        let mut head = head.into_letters();
        let mut cycle = cycle.into_letters();
        while let (Some(&h), Some(&c)) = (head.last(), cycle.last()) {
            if h != c {
                break;
            }
            head.pop();
            cycle.rotate_right(1);
        }
        Ok(Lasso {
            head: Word::new(head),
            cycle: Word::new(cycle),
        })
    }

    /// `cycle^ω`.
    pub fn periodic(cycle: Word) -> Result<Self> {
        Lasso::new(Word::empty(), cycle)
    }

    pub fn head(&self) -> &Word {
        &self.head
    }

    pub fn cycle(&self) -> &Word {
        &self.cycle
    }

    /// Number of position classes: head positions individually, cycle
    /// positions modulo the cycle length.
    pub fn classes(&self) -> usize {
        self.head.len() + self.cycle.len()
    }

    /// Position class of an absolute position.
    pub fn class_of(&self, pos: usize) -> usize {
        let h = self.head.len();
        if pos < h {
            pos
        } else {
            h + (pos - h) % self.cycle.len()
        }
    }

    /// `alpha - alpha|k`: drop the first `k` letters.
    pub fn shift(&self, k: usize) -> Lasso {
        let h = self.head.len();
        if k <= h {
            return Lasso::new(Word::from(&self.head.letters()[k..]), self.cycle.clone())
                .expect("cycle is nonempty");
        }
        let r = (k - h) % self.cycle.len();
        let mut c = self.cycle.clone().into_letters();
        c.rotate_left(r);
        Lasso::new(Word::empty(), Word::new(c)).expect("cycle is nonempty")
    }

    /// All canonical lassos with `|head| <= max_head` and `1 <= |cycle| <= max_cycle`
    /// over `{0, .., n-1}`, deduplicated and sorted.
    pub fn enumerate(alphabet: crate::words::Alphabet, max_head: usize, max_cycle: usize) -> Vec<Lasso> {
        let heads = alphabet.words_up_to(max_head);
        let cycles: Vec<Word> = alphabet
            .words_up_to(max_cycle)
            .into_iter()
            .filter(|c| !c.is_empty())
            .collect();
        let mut out: Vec<Lasso> = heads
            .iter()
            .flat_map(|h| cycles.iter().map(move |c| Lasso::new(h.clone(), c.clone()).unwrap()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Canonical lassos with `|head| + |cycle| <= budget`.
    pub fn enumerate_total(alphabet: crate::words::Alphabet, budget: usize) -> Vec<Lasso> {
        let mut out: Vec<Lasso> = (1..=budget)
            .flat_map(|c| {
                let heads = alphabet.words_up_to(budget - c);
                let cycles = alphabet.words_of_len(c);
                heads
                    .into_iter()
                    .flat_map(move |h| {
                        cycles
                            .clone()
                            .into_iter()
                            .map(move |v| Lasso::new(h.clone(), v).unwrap())
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn map_letters(&self, f: impl Fn(u8) -> Word) -> Lasso {
        let map = |w: &Word| {
            Word::new(
                w.letters()
                    .iter()
                    .flat_map(|&a| f(a).into_letters())
                    .collect(),
            )
        };
        Lasso::new(map(&self.head), map(&self.cycle)).expect("letter images are nonempty")
    }
}

impl OmegaStream for Lasso {
    fn letter(&self, index: usize) -> u8 {
        let h = self.head.len();
        if index < h {
            self.head.letters()[index]
        } else {
            self.cycle.letters()[(index - h) % self.cycle.len()]
        }
    }
}

impl fmt::Display for Lasso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.head.is_empty() {
            write!(f, "{}", self.head)?;
        }
        write!(f, "({})", self.cycle)
    }
}

impl fmt::Debug for Lasso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lasso({self})")
    }
}

impl FromStr for Lasso {
    type Err = Error;

    /// `u(v)`, e.g. `0(10)` or `(1)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(0, format!("malformed lasso {s:?}; expected u(v)"));
        let open = s.find('(').ok_or_else(bad)?;
        let body = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let head: Word = s[..open].parse().map_err(|_| bad())?;
        if body.is_empty() || body.chars().any(|c| parse_letter(c).is_none()) {
            return Err(bad());
        }
        Lasso::new(head, body.parse()?)
    }
}

impl Serialize for Lasso {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Shorthand for lasso literals. Panics on malformed input.
pub fn lasso(s: &str) -> Lasso {
    s.parse().expect("malformed lasso literal")
}

/// The word `1 0 1 0² 1 0³ 1 0⁴ …`: block `b >= 1` is `1 0^b`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Alpha0;

impl Alpha0 {
    /// Position at which block `b` (>= 1) starts: `(b-1)(b+2)/2`.
    pub fn block_start(b: u128) -> u128 {
        debug_assert!(b >= 1);
        (b - 1) * (b + 2) / 2
    }

    /// Block containing `pos`, together with the offset inside the block.
    pub fn block_at(pos: u128) -> (u128, u128) {
        // Largest b with block_start(b) <= pos.
        let mut b = ((2.0 * pos as f64).sqrt() as u128).max(1);
        while Alpha0::block_start(b) > pos {
            b -= 1;
        }
        while Alpha0::block_start(b + 1) <= pos {
            b += 1;
        }
        (b, pos - Alpha0::block_start(b))
    }

    pub fn letter_at(pos: u128) -> u8 {
        u8::from(Alpha0::block_at(pos).1 == 0)
    }
}

impl OmegaStream for Alpha0 {
    fn letter(&self, index: usize) -> u8 {
        Alpha0::letter_at(index as u128)
    }
}

/// The stream `alpha0 = 1 0 1 0² 1 0³ …`.
pub fn alpha0() -> Alpha0 {
    Alpha0
}
