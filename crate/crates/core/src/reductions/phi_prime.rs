use crate::error::Result;
use crate::reductions::tree::{tree_ranges, FiniteTree};
use crate::streams::{alpha0, OmegaStream};
use crate::words::Word;

/// Whether `t` occurs somewhere inside `α₀ = 1 0 1 0² 1 0³ …`.
///
/// Write `t = 0^a (1 0^{r_1}) … (1 0^{r_j})`. With at most one `1` it always
/// occurs (runs of `0` grow without bound). Otherwise the inner runs
/// `r_1 .. r_{j-1}` are complete runs of `α₀`, so they must be consecutive
/// lengths `m, m+1, …` with `m >= 1`; the last run and the leading zeros are
/// only bounded by their neighbours.
pub fn is_alpha0_factor(t: &Word) -> bool {
    let s = t.letters();
    let Some(first_one) = s.iter().position(|&x| x == 1) else {
        return true;
    };
    if s.iter().any(|&x| x > 1) {
        return false;
    }
    let lead = first_one;
    let runs: Vec<usize> = s[first_one + 1..].split(|&x| x == 1).map(<[u8]>::len).collect();
    let j = runs.len();
    if j == 1 {
        return true;
    }
    let m = runs[0];
    m >= 1
        && lead < m
        && runs[..j - 1].iter().enumerate().all(|(i, &r)| r == m + i)
        && runs[j - 1] <= m + j - 1
}

/// Membership in `Φ′(T) = φ[T] ∪ {s : some t ∈ E ∪ F is a prefix of s}`
/// where `E` holds the one-letter deviations `(α₀↾p) r` from `α₀` at
/// positions `p ≠ 2`, and `F` the concatenations of φ-words that do not
/// occur in `α₀`.
pub fn phi_prime_member(t: &FiniteTree, s: &Word) -> Result<bool> {
    let ranges = tree_ranges(t)?;
    let fitting: Vec<Word> = ranges
        .iter()
        .filter(|r| r.len() <= s.len() as u128)
        .map(|r| r.materialize())
        .collect::<Result<_>>()?;
    if fitting.contains(s) {
        return Ok(true);
    }

    let a0 = alpha0().prefix(s.len());
    if let Some(d) = (0..s.len()).find(|&k| s.letters()[k] != a0.letters()[k]) {
        if d != 2 {
            return Ok(true);
        }
    }

    // Positions of s reachable as a concatenation of φ-words; only prefixes
    // of s can witness membership through F.
    let n = s.len();
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for pos in 0..n {
        if !reach[pos] {
            continue;
        }
        for w in &fitting {
            let end = pos + w.len();
            if end <= n && &s.letters()[pos..end] == w.letters() && !reach[end] {
                if !is_alpha0_factor(&s.prefix(end)) {
                    return Ok(true);
                }
                reach[end] = true;
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    #[test]
    fn factors() {
        let a0 = alpha0().prefix(300);
        for len in 0..9 {
            for start in 0..200 {
                let f = Word::from(&a0.letters()[start..start + len]);
                assert!(is_alpha0_factor(&f), "{f}");
            }
        }
        for s in ["11", "0101", "1001001", "001001", "10110"] {
            assert!(!is_alpha0_factor(&w(s)), "{s}");
        }
        for s in ["0", "000", "0100", "001000", "101", "1", "1001", "01001", "100100"] {
            assert!(is_alpha0_factor(&w(s)), "{s}");
        }
    }

    #[test]
    fn membership() {
        let t: FiniteTree = "()".parse().unwrap();
        assert!(phi_prime_member(&t, &w("0110")).unwrap());
        assert!(phi_prime_member(&t, &w("10100")).unwrap());
        assert!(!phi_prime_member(&t, &w("1010")).unwrap());
        // The deviation at position 2 alone is not enough.
        assert!(!phi_prime_member(&t, &w("100")).unwrap());
        // φ(∅)φ(∅) leaves α₀ at position 7.
        assert!(phi_prime_member(&t, &w("1010010100")).unwrap());
    }
}
