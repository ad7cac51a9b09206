//! Fixed-length bitstrings and Dyck words.
//!
//! Position 0 is the leftmost character. Bit `p` of the backing mask holds
//! the character at position `p`, so the integer value of a mask reads the
//! string right-to-left; all text renderings go through `Display`, which
//! restores the left-to-right convention.

use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A bitstring of explicit length (at most 63 bits).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitstring {
    len: usize,
    mask: u64,
}

impl Bitstring {
    pub fn new(len: usize, mask: u64) -> Self {
        assert!(len <= 63, "bitstring too long");
        assert_eq!(mask & !low_bits(len), 0, "mask has bits beyond len");
        Bitstring { len, mask }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Character at position `p` (true = 1-bit).
    pub fn bit(&self, p: usize) -> bool {
        debug_assert!(p < self.len);
        self.mask >> p & 1 == 1
    }

    /// Number of 1-bits.
    pub fn weight(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Positions of the 1-bits, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&p| self.bit(p))
    }

    pub fn complement(&self) -> Bitstring {
        Bitstring { len: self.len, mask: !self.mask & low_bits(self.len) }
    }

    /// String rotated left by `j`: the result at position `q` holds the
    /// character from position `(q + j) mod len`.
    pub fn rotate_left(&self, j: usize) -> Bitstring {
        Bitstring { len: self.len, mask: rotate_mask_left(self.mask, self.len, j) }
    }

    pub fn reverse(&self) -> Bitstring {
        let mut mask = 0u64;
        for p in 0..self.len {
            if self.bit(p) {
                mask |= 1 << (self.len - 1 - p);
            }
        }
        Bitstring { len: self.len, mask }
    }

    pub fn concat(&self, other: &Bitstring) -> Bitstring {
        Bitstring::new(self.len + other.len, self.mask | other.mask << self.len)
    }

    /// True when the string is a 0-bit followed by a Dyck word — the unique
    /// form a rotation class representative takes. Implies odd length
    /// `2k + 1` and weight `k`.
    pub fn is_canonical_vertex_form(&self) -> bool {
        if self.len % 2 == 0 || self.len == 0 || self.bit(0) {
            return false;
        }
        let k = (self.len - 1) / 2;
        self.weight() == k as u32 && is_dyck(self.mask >> 1, self.len - 1)
    }

    /// The rotation of this string that is in canonical vertex form,
    /// together with the index `j` such that `self = canonical.rotate_left(j)`.
    /// The weight must be `k` for length `2k + 1`; the cycle lemma then
    /// guarantees exactly one such rotation.
    pub fn canonical_shift(&self) -> Result<(Bitstring, usize)> {
        let n = self.len;
        if n % 2 == 0 || self.weight() != ((n - 1) / 2) as u32 {
            return Err(Error::WrongWeight { got: self.weight(), want: ((n.max(1) - 1) / 2) as u32 });
        }
        for s in 0..n {
            let cand = self.rotate_left(s);
            if cand.is_canonical_vertex_form() {
                return Ok((cand, (n - s) % n));
            }
        }
        unreachable!("cycle lemma: some rotation of a weight-k (2k+1)-bitstring is canonical")
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.len {
            write!(f, "{}", if self.bit(p) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bitstring({self})")
    }
}

impl FromStr for Bitstring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > 63 {
            return Err(Error::Parse("bitstring longer than 63".into()));
        }
        let mut mask = 0u64;
        for (p, c) in s.chars().enumerate() {
            match c {
                '1' => mask |= 1 << p,
                '0' => {}
                _ => return Err(Error::Parse(format!("bad bitstring character {c:?}"))),
            }
        }
        Ok(Bitstring { len: s.len(), mask })
    }
}

/// A Dyck word: a balanced bitstring of even length in which every prefix
/// has at least as many 0-bits as 1-bits. The empty word is allowed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord(Bitstring);

impl DyckWord {
    pub fn new(bits: Bitstring) -> Result<Self> {
        if bits.len() % 2 != 0 || !is_dyck(bits.mask(), bits.len()) {
            return Err(Error::NotDyck(bits.to_string()));
        }
        Ok(DyckWord(bits))
    }

    pub fn empty() -> Self {
        DyckWord(Bitstring::new(0, 0))
    }

    pub fn bits(&self) -> &Bitstring {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Half length: the number of 1-bits.
    pub fn ell(&self) -> usize {
        self.0.len() / 2
    }

    /// Complement of the reversal. Maps Dyck words to Dyck words and is an
    /// involution.
    pub fn conjugate(&self) -> DyckWord {
        DyckWord(self.0.reverse().complement())
    }

    /// The vertex form `0 . word` of length `2k + 1`.
    pub fn vertex_form(&self) -> Bitstring {
        Bitstring::new(self.0.len() + 1, self.0.mask() << 1)
    }

    /// All Dyck words of half length `ell`, in lexicographic order of their
    /// text rendering (0 before 1).
    pub fn enumerate(ell: usize) -> Vec<DyckWord> {
        let mut out = Vec::new();
        let mut cur = Bitstring::new(2 * ell, 0);
        gen_dyck(&mut out, &mut cur, 0, 0, ell);
        out
    }

    /// `(01)^m`.
    pub fn alternating(m: usize) -> DyckWord {
        let mut bits = Bitstring::new(0, 0);
        for _ in 0..m {
            bits = bits.concat(&Bitstring::from_str("01").unwrap());
        }
        DyckWord(bits)
    }
}

fn gen_dyck(out: &mut Vec<DyckWord>, cur: &mut Bitstring, pos: usize, depth: i32, ell: usize) {
    if pos == 2 * ell {
        out.push(DyckWord(*cur));
        return;
    }
    let zeros_left = 2 * ell - pos - depth as usize;
    if zeros_left > 0 {
        gen_dyck(out, cur, pos + 1, depth + 1, ell);
    }
    if depth > 0 {
        let mut next = *cur;
        next = Bitstring::new(next.len(), next.mask() | 1 << pos);
        let saved = *cur;
        *cur = next;
        gen_dyck(out, cur, pos + 1, depth - 1, ell);
        *cur = saved;
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckWord({self})")
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckWord::new(s.parse()?)
    }
}

pub(crate) fn low_bits(len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        u64::MAX >> (64 - len)
    }
}

pub(crate) fn rotate_mask_left(mask: u64, len: usize, j: usize) -> u64 {
    let j = j % len.max(1);
    if j == 0 {
        return mask;
    }
    (mask >> j | mask << (len - j)) & low_bits(len)
}

fn is_dyck(mask: u64, len: usize) -> bool {
    let mut depth: i32 = 0;
    for p in 0..len {
        depth += if mask >> p & 1 == 1 { -1 } else { 1 };
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let b: Bitstring = "0001011".parse().unwrap();
        assert_eq!(b.len(), 7);
        assert_eq!(b.weight(), 3);
        assert_eq!(b.to_string(), "0001011");
        assert_eq!(b.support().collect::<Vec<_>>(), vec![3, 5, 6]);
    }

    #[test]
    fn rotation_convention() {
        let b: Bitstring = "00101".parse().unwrap();
        assert_eq!(b.rotate_left(2).to_string(), "10100");
        assert_eq!(b.rotate_left(0), b);
        assert_eq!(b.rotate_left(2).rotate_left(3), b);
    }

    #[test]
    fn canonical_shift_examples() {
        let b: Bitstring = "10100".parse().unwrap();
        let (canon, j) = b.canonical_shift().unwrap();
        assert_eq!(canon.to_string(), "00101");
        assert_eq!(j, 2);
        assert_eq!(canon.rotate_left(j), b);

        let b: Bitstring = "0000111".parse().unwrap();
        let (canon, j) = b.canonical_shift().unwrap();
        assert_eq!(canon, b);
        assert_eq!(j, 0);

        assert!("1100".parse::<Bitstring>().unwrap().canonical_shift().is_err());
        assert!("11000".parse::<Bitstring>().unwrap().canonical_shift().is_ok());
        assert!("11100".parse::<Bitstring>().unwrap().canonical_shift().is_err());
    }

    #[test]
    fn canonical_rotation_is_unique() {
        // every weight-k (2k+1)-bitstring has exactly one canonical rotation
        for k in 1..=5usize {
            let n = 2 * k + 1;
            for mask in 0..1u64 << n {
                if mask.count_ones() != k as u32 {
                    continue;
                }
                let b = Bitstring::new(n, mask);
                let hits = (0..n).filter(|&s| b.rotate_left(s).is_canonical_vertex_form()).count();
                assert_eq!(hits, 1, "mask {b}");
            }
        }
    }

    #[test]
    fn dyck_enumeration_counts() {
        let catalans = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (ell, &c) in catalans.iter().enumerate() {
            assert_eq!(DyckWord::enumerate(ell).len(), c, "ell={ell}");
        }
        assert_eq!(
            DyckWord::enumerate(2).iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            vec!["0011", "0101"]
        );
    }

    #[test]
    fn conjugate_examples() {
        let w: DyckWord = "010011".parse().unwrap();
        assert_eq!(w.conjugate().to_string(), "001101");
        assert_eq!(w.conjugate().conjugate(), w);
        let s: DyckWord = "000111".parse().unwrap();
        assert_eq!(s.conjugate(), s);
        for d in DyckWord::enumerate(5) {
            assert_eq!(d.conjugate().conjugate(), d);
        }
    }

    #[test]
    fn vertex_form() {
        let w: DyckWord = "001011".parse().unwrap();
        assert_eq!(w.vertex_form().to_string(), "0001011");
        assert!(w.vertex_form().is_canonical_vertex_form());
    }
}
