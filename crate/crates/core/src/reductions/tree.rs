//! Trees to dictionaries: sequence codes `M_s`, the φ-words, and the run of
//! `φ[T]` along `α₀ = 1 0 1 0² 1 0³ …`.
//!
//! φ-words are concatenations of consecutive blocks `1 0^b` of `α₀`, so they
//! are represented by their block range and only materialized on demand.
//! Codes of deep sequences make the words astronomically long; everything
//! that does not need letters works on ranges in `u128`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dict::FiniteDict;
use crate::error::{Error, Result};
use crate::streams::{Alpha0, OmegaStream};
use crate::words::{Alphabet, Word};

/// Largest φ-word (in letters) that [`PhiWord::materialize`] will build.
pub const MATERIALIZE_LIMIT: u128 = 1 << 24;

/// A finite prefix-closed set of sequences of naturals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteTree(BTreeSet<Vec<u32>>);

impl FiniteTree {
    pub fn new<I: IntoIterator<Item = Vec<u32>>>(nodes: I) -> Result<Self> {
        let nodes: BTreeSet<Vec<u32>> = nodes.into_iter().collect();
        for t in &nodes {
            if let Some((_, parent)) = t.split_last() {
                if !nodes.contains(parent) {
                    return Err(Error::NotPrefixClosed(fmt_seq(parent)));
                }
            }
        }
        Ok(FiniteTree(nodes))
    }

    pub fn empty() -> Self {
        FiniteTree(BTreeSet::new())
    }

    pub fn nodes(&self) -> &BTreeSet<Vec<u32>> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Classical rank: leaves have height 0, the rank is the root's height
    /// plus one, and the empty tree has rank 0.
    pub fn rank(&self) -> usize {
        if self.0.is_empty() {
            return 0;
        }
        let mut height: BTreeMap<&[u32], usize> = BTreeMap::new();
        // Longer sequences first, so children precede parents.
        let mut order: Vec<&Vec<u32>> = self.0.iter().collect();
        order.sort_by_key(|t| std::cmp::Reverse(t.len()));
        for t in order {
            let h = *height.get(t.as_slice()).unwrap_or(&0);
            if let Some((_, parent)) = t.split_last() {
                let e = height.entry(parent).or_insert(0);
                *e = (*e).max(h + 1);
            } else {
                height.insert(t, h);
            }
        }
        height[&[][..]] + 1
    }

    /// All trees with at most `max_nodes` nodes and labels below `labels`,
    /// including the empty tree.
    pub fn enumerate(max_nodes: usize, labels: u32) -> Vec<FiniteTree> {
        let mut all: BTreeSet<FiniteTree> = BTreeSet::from([FiniteTree::empty()]);
        if max_nodes == 0 {
            return all.into_iter().collect();
        }
        let mut frontier = vec![FiniteTree(BTreeSet::from([Vec::new()]))];
        all.insert(frontier[0].clone());
        for _ in 1..max_nodes {
            let mut next = BTreeSet::new();
            for t in &frontier {
                for node in &t.0 {
                    for l in 0..labels {
                        let mut child = node.clone();
                        child.push(l);
                        if !t.0.contains(&child) {
                            let mut grown = t.0.clone();
                            grown.insert(child);
                            next.insert(FiniteTree(grown));
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next.into_iter().collect();
        }
        all.into_iter().collect()
    }
}

fn fmt_seq(t: &[u32]) -> String {
    if t.is_empty() {
        "()".to_string()
    } else {
        t.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for FiniteTree {
    /// One node per line, in the file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            writeln!(f, "{}", fmt_seq(t))?;
        }
        Ok(())
    }
}

impl FromStr for FiniteTree {
    type Err = Error;

    /// One sequence per line, comma-separated; `()` is the root. Blank
    /// lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut nodes = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line == "()" {
                nodes.push(Vec::new());
                continue;
            }
            let seq = line
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::parse(idx + 1, format!("bad sequence {line:?}")))?;
            nodes.push(seq);
        }
        FiniteTree::new(nodes)
    }
}

/// `0^{t(0)} 1 0^{t(1)} 1 …`.
pub fn psi(t: &[u32]) -> Word {
    Word::new(
        t.iter()
            .flat_map(|&k| std::iter::repeat_n(0, k as usize).chain([1]))
            .collect(),
    )
}

fn primes(count: usize) -> Vec<u128> {
    let mut out: Vec<u128> = Vec::with_capacity(count);
    let mut c = 2u128;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= c).all(|&p| c % p != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// `M_s = 2^{s(0)+1} 3^{s(1)+1} … + 1` for nonempty `s`, and `M_∅ = 1`.
pub fn m_code(s: &[u32]) -> Result<u128> {
    if s.is_empty() {
        return Ok(1);
    }
    let mut acc: u128 = 1;
    for (p, &e) in primes(s.len()).into_iter().zip(s) {
        let power = p.checked_pow(e.checked_add(1).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
        acc = acc.checked_mul(power).ok_or(Error::Overflow)?;
    }
    acc.checked_add(1).ok_or(Error::Overflow)
}

/// The blocks `lo..=hi` of `α₀` (block `b` is `1 0^b`), as one word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PhiWord {
    pub lo: u128,
    pub hi: u128,
}

impl PhiWord {
    /// Position of `α₀` where the word sits.
    pub fn start(&self) -> u128 {
        Alpha0::block_start(self.lo)
    }

    pub fn len(&self) -> u128 {
        Alpha0::block_start(self.hi + 1) - Alpha0::block_start(self.lo)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn materialize(&self) -> Result<Word> {
        let len = self.len();
        if len > MATERIALIZE_LIMIT {
            return Err(Error::TooLong(len));
        }
        let mut v = Vec::with_capacity(len as usize);
        for b in self.lo..=self.hi {
            v.push(1);
            v.extend(std::iter::repeat_n(0, b as usize));
        }
        Ok(Word::new(v))
    }
}

/// Block range of `φ(s)`: `φ(∅) = 1 0 1 0²` and
/// `φ(s m) = 1 0^{2M_s+1} 1 0^{2M_s+2} … 1 0^{2M_{sm}}`.
pub fn phi_range(s: &[u32]) -> Result<PhiWord> {
    match s.split_last() {
        None => Ok(PhiWord { lo: 1, hi: 2 }),
        Some((_, parent)) => {
            let lo = m_code(parent)?.checked_mul(2).ok_or(Error::Overflow)? + 1;
            let hi = m_code(s)?.checked_mul(2).ok_or(Error::Overflow)?;
            // Keeps block_start(hi + 1) representable.
            if hi > 1 << 62 {
                return Err(Error::Overflow);
            }
            Ok(PhiWord { lo, hi })
        }
    }
}

pub fn phi_word(s: &[u32]) -> Result<Word> {
    phi_range(s)?.materialize()
}

/// Block ranges of `φ[T]`, keyed by first block.
pub fn tree_ranges(t: &FiniteTree) -> Result<Vec<PhiWord>> {
    let mut out = t.nodes().iter().map(|s| phi_range(s)).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `Φ(T) = φ[T]` as an explicit dictionary (fails if a word is too long).
pub fn tree_dict(t: &FiniteTree) -> Result<FiniteDict> {
    let words = tree_ranges(t)?
        .iter()
        .map(PhiWord::materialize)
        .collect::<Result<Vec<_>>>()?;
    FiniteDict::new(Alphabet::BINARY, words)
}

/// Whether `φ(∅) φ(γ↾1) … φ(γ↾L)` is a prefix of `α₀`. Block ranges must
/// tile `1..`; short concatenations are also compared letter by letter.
pub fn branch_check(gamma: &[u32], len: usize) -> Result<bool> {
    let ranges = (0..=len.min(gamma.len()))
        .map(|k| phi_range(&gamma[..k]))
        .collect::<Result<Vec<_>>>()?;
    let mut expected = 1u128;
    for r in &ranges {
        if r.lo != expected || r.hi < r.lo {
            return Ok(false);
        }
        expected = r.hi + 1;
    }
    let total: u128 = ranges.iter().map(PhiWord::len).sum();
    if total <= 1 << 16 {
        let mut letters = Vec::new();
        for r in &ranges {
            letters.extend(r.materialize()?.into_letters());
        }
        let prefix = crate::streams::alpha0().prefix(letters.len());
        return Ok(prefix.letters() == letters.as_slice());
    }
    Ok(true)
}

/// Cuts of `α₀` reachable by concatenating words of `φ[T]`, as block
/// numbers. Every φ-word has at least two blocks, so it fits `α₀` at a block
/// cut `b` exactly when its first block is `b`.
fn reachable_blocks(ranges: &[PhiWord]) -> BTreeMap<u128, Vec<PhiWord>> {
    let mut by_lo: BTreeMap<u128, Vec<PhiWord>> = BTreeMap::new();
    for r in ranges {
        by_lo.entry(r.lo).or_default().push(*r);
    }
    let mut reach: BTreeMap<u128, Vec<PhiWord>> = BTreeMap::new();
    let mut stack = vec![1u128];
    while let Some(b) = stack.pop() {
        if reach.contains_key(&b) {
            continue;
        }
        let fits = by_lo.get(&b).cloned().unwrap_or_default();
        for r in &fits {
            stack.push(r.hi + 1);
        }
        reach.insert(b, fits);
    }
    reach
}

/// Number of letters of `α₀` the safety automaton of `φ[T]` reads before
/// dying (the `k` of `Dead(k)`), computed on block ranges.
///
/// From a reachable cut at block `b`, a word starting with block `b` keeps
/// the run alive for `|w| - 1` letters (after which the next cut takes
/// over); any other word `[lo, hi]` agrees with `α₀` on `1 + min(lo, b)`
/// letters.
pub fn alpha0_death_step(t: &FiniteTree) -> Result<u128> {
    let ranges = tree_ranges(t)?;
    if ranges.is_empty() {
        return Ok(0);
    }
    let reach = reachable_blocks(&ranges);
    let mut last = 0u128;
    for &b in reach.keys() {
        let cover = ranges
            .iter()
            .map(|r| {
                if r.lo == b {
                    r.len() - 1
                } else {
                    1 + r.lo.min(b)
                }
            })
            .max()
            .unwrap_or(0);
        last = last.max(Alpha0::block_start(b) + cover);
    }
    Ok(last + 1)
}

/// Rank of the decomposition tree of `α₀` over `φ[T]`.
pub fn alpha0_rank(t: &FiniteTree) -> Result<usize> {
    let ranges = tree_ranges(t)?;
    let reach = reachable_blocks(&ranges);
    // Cuts only move forward, so heights can be filled from the back.
    let mut height: BTreeMap<u128, usize> = BTreeMap::new();
    for (&b, fits) in reach.iter().rev() {
        let h = fits.iter().map(|r| height[&(r.hi + 1)] + 1).max().unwrap_or(0);
        height.insert(b, h);
    }
    Ok(height[&1] + 1)
}

/// `{0^k 1 : γ(k) = 1}` for a finite 0/1 prefix of `γ`.
pub fn phi_pf(gamma: &[u8]) -> FiniteDict {
    let words = gamma
        .iter()
        .enumerate()
        .filter(|&(_, &g)| g == 1)
        .map(|(k, _)| Word::new([vec![0; k], vec![1]].concat()));
    FiniteDict::new(Alphabet::BINARY, words).expect("binary words")
}
