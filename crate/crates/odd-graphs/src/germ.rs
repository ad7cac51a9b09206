//! Restricted-growth germs.
//!
//! A *k-germ* is a `(k-1)`-digit string `a_{k-1} a_{k-2} ... a_1` with
//! `a_{k-1} <= 1` and `a_{i-1} <= a_i + 1`. There are exactly `catalan(k)`
//! of them and they index the rotation classes of the vertices of the odd
//! graph `O_k`. The digits compare lexicographically from `a_{k-1}` down,
//! which is the *natural enumeration*; `successor`, `rank` and `from_rank`
//! all follow it. Each non-root germ has a parent obtained by decrementing
//! its first nonzero digit (scanning `a_1, a_2, ...`), which arranges all
//! germs of a given `k` into an ordered tree rooted at `0^{k-1}`.

use crate::digits::{digit_char, digit_value};
use crate::{Error, Result};
use std::fmt;

/// Largest `k` for which `catalan(k)` (and every rank computation) is
/// guaranteed to fit in the integer types used here.
pub const MAX_K: usize = 30;

/// Exact k-th Catalan number, `k <= 30`.
pub fn catalan(k: usize) -> Result<u64> {
    if k > MAX_K {
        return Err(Error::KOutOfRange(k, MAX_K));
    }
    Ok((binomial(2 * k as u64, k as u64) / (k as u128 + 1)) as u64)
}

/// Exact binomial coefficient; callers stay well below u128 overflow
/// (largest use is C(62,31)).
pub fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for d in 1..=r {
        acc = acc * (n - r + d) as u128 / d as u128;
    }
    acc
}

/// A k-germ. `digits[0]` is `a_{k-1}` (the most significant digit for the
/// natural order) and `digits[k-2]` is `a_1`; the vector is empty for `k=1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Germ {
    k: usize,
    digits: Vec<u8>,
}

impl Germ {
    /// The all-zero germ `0^{k-1}`, root of the germ tree.
    pub fn root(k: usize) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return Err(Error::KOutOfRange(k, MAX_K));
        }
        Ok(Germ { k, digits: vec![0; k - 1] })
    }

    /// Builds a germ from digits `a_{k-1}..a_1`, validating the growth rule.
    pub fn new(k: usize, digits: Vec<u8>) -> Result<Self> {
        if k == 0 || k > MAX_K {
            return Err(Error::KOutOfRange(k, MAX_K));
        }
        let valid = digits.len() == k - 1
            && digits.first().is_none_or(|&d| d <= 1)
            && digits.windows(2).all(|w| w[1] <= w[0] + 1);
        if !valid {
            return Err(Error::InvalidGerm { k, digits });
        }
        Ok(Germ { k, digits })
    }

    /// Parses the rendering produced by `Display`: one character per digit,
    /// `-` (or the empty string) for the unique 1-germ.
    pub fn parse(k: usize, s: &str) -> Result<Self> {
        if k == 1 && (s.is_empty() || s == "-") {
            return Germ::root(1);
        }
        let digits = s
            .chars()
            .map(|c| digit_value(c).ok_or_else(|| Error::Parse(format!("bad germ digit {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Germ::new(k, digits)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Digits `a_{k-1}..a_1` in display order.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Digit `a_i`, `1 <= i <= k-1`.
    pub fn digit(&self, i: usize) -> u8 {
        self.digits[self.k - 1 - i]
    }

    pub fn is_root(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// Next germ in the natural enumeration, or `None` after `12...k`... that
    /// is, after the maximum germ `12...(k-1)`.
    pub fn successor(&self) -> Option<Germ> {
        let mut digits = self.digits.clone();
        // Odometer: find the least significant digit that can still grow.
        for idx in (0..digits.len()).rev() {
            let bound = if idx == 0 { 1 } else { digits[idx - 1] + 1 };
            if digits[idx] < bound {
                digits[idx] += 1;
                for d in digits[idx + 1..].iter_mut() {
                    *d = 0;
                }
                return Some(Germ { k: self.k, digits });
            }
        }
        None
    }

    /// Parent in the germ tree together with the index `i` of the decremented
    /// digit. Errors on the root.
    pub fn parent(&self) -> Result<(Germ, usize)> {
        for idx in (0..self.digits.len()).rev() {
            if self.digits[idx] > 0 {
                let mut digits = self.digits.clone();
                digits[idx] -= 1;
                let i = self.k - 1 - idx;
                return Ok((Germ { k: self.k, digits }, i));
            }
        }
        Err(Error::NoParent)
    }

    /// Position of this germ in the natural enumeration, starting at 0.
    pub fn rank(&self) -> u64 {
        let counts = completion_table(self.k);
        let mut rank: u64 = 0;
        for (idx, &d) in self.digits.iter().enumerate() {
            let i = self.k - 1 - idx;
            for w in 0..d {
                rank += counts[i][w as usize];
            }
        }
        rank
    }

    /// Inverse of `rank`.
    pub fn from_rank(k: usize, m: u64) -> Result<Self> {
        let count = catalan(k)?;
        if m >= count {
            return Err(Error::RankOutOfRange { k, rank: m, count });
        }
        let counts = completion_table(k);
        let mut digits = Vec::with_capacity(k - 1);
        let mut rest = m;
        let mut bound = 1u8;
        for idx in 0..k.saturating_sub(1) {
            let i = k - 1 - idx;
            let mut d = 0u8;
            while d <= bound {
                let c = counts[i][d as usize];
                if rest < c {
                    break;
                }
                rest -= c;
                d += 1;
            }
            digits.push(d);
            bound = d + 1;
        }
        debug_assert_eq!(rest, 0);
        Ok(Germ { k, digits })
    }

    /// All germs of a given `k` in natural order.
    pub fn all(k: usize) -> Result<Vec<Germ>> {
        let mut out = Vec::with_capacity(catalan(k)? as usize);
        let mut cur = Some(Germ::root(k)?);
        while let Some(g) = cur {
            cur = g.successor();
            out.push(g);
        }
        Ok(out)
    }
}

/// `table[i][v]` = number of ways to fill digits `a_{i-1}..a_1` given
/// `a_i = v`; row 0 is unused. Summing row `k-1` over `v in {0,1}` gives
/// `catalan(k)`.
fn completion_table(k: usize) -> Vec<Vec<u64>> {
    let mut table = vec![vec![0u64; k + 2]; k.max(2)];
    for v in 0..k + 2 {
        table[1][v] = 1;
    }
    for i in 2..k.max(2) {
        for v in 0..k + 1 {
            table[i][v] = (0..=v + 1).map(|w| table[i - 1][w]).sum();
        }
    }
    table
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return f.write_str("-");
        }
        for &d in &self.digits {
            write!(f, "{}", digit_char(d))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Germ(k={}, {})", self.k, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0).unwrap(), 1);
        assert_eq!(catalan(1).unwrap(), 1);
        assert_eq!(catalan(4).unwrap(), 14);
        assert_eq!(catalan(10).unwrap(), 16796);
        assert_eq!(catalan(30).unwrap(), 3_814_986_502_092_304);
        assert!(catalan(31).is_err());
    }

    #[test]
    fn natural_enumeration_k4() {
        let want = [
            "000", "001", "010", "011", "012", "100", "101", "110", "111", "112", "120", "121",
            "122", "123",
        ];
        let got: Vec<String> = Germ::all(4).unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn successor_examples() {
        let g = Germ::parse(4, "012").unwrap();
        assert_eq!(g.successor().unwrap().to_string(), "100");
        let g = Germ::parse(4, "123").unwrap();
        assert!(g.successor().is_none());
        let g = Germ::parse(3, "00").unwrap();
        assert_eq!(g.successor().unwrap().to_string(), "01");
    }

    #[test]
    fn germ_count_matches_catalan() {
        for k in 1..=9 {
            assert_eq!(Germ::all(k).unwrap().len() as u64, catalan(k).unwrap(), "k={k}");
        }
    }

    #[test]
    fn rank_unrank_roundtrip() {
        for k in 1..=8 {
            for (m, g) in Germ::all(k).unwrap().into_iter().enumerate() {
                assert_eq!(g.rank(), m as u64);
                assert_eq!(Germ::from_rank(k, m as u64).unwrap(), g);
            }
        }
        assert!(Germ::from_rank(4, 14).is_err());
    }

    #[test]
    fn rank_of_root_is_zero() {
        for k in 1..=12 {
            assert_eq!(Germ::root(k).unwrap().rank(), 0);
        }
    }

    #[test]
    fn parent_examples() {
        let (p, i) = Germ::parse(4, "121").unwrap().parent().unwrap();
        assert_eq!((p.to_string().as_str(), i), ("120", 1));
        let (p, i) = Germ::parse(4, "100").unwrap().parent().unwrap();
        assert_eq!((p.to_string().as_str(), i), ("000", 3));
        let (p, i) = Germ::parse(3, "01").unwrap().parent().unwrap();
        assert_eq!((p.to_string().as_str(), i), ("00", 1));
        assert!(Germ::root(5).unwrap().parent().is_err());
    }

    #[test]
    fn parent_has_smaller_rank() {
        for g in Germ::all(6).unwrap() {
            if !g.is_root() {
                let (p, _) = g.parent().unwrap();
                assert!(p.rank() < g.rank());
            }
        }
    }

    #[test]
    fn validation_rejects_bad_digits() {
        assert!(Germ::new(4, vec![2, 0, 0]).is_err());
        assert!(Germ::new(4, vec![0, 2, 0]).is_err());
        assert!(Germ::new(4, vec![1, 2, 3]).is_ok());
        assert!(Germ::new(4, vec![1, 2]).is_err());
    }
}
