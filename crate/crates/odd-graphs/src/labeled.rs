//! Labeled strings.
//!
//! Every germ `alpha` owns a length-`n` string `F(alpha)` over the numbers
//! `0..=k` (once each) and `k` `=`-signs. Its bit form `f(alpha)` (numbers
//! to 0, signs to 1) is the canonical representative of one rotation class
//! of `V(O_k)`, and the number entries are the departing arc colors of that
//! vertex. Two independent constructions are provided and tested against
//! each other: the parent-path transform ([`string_of_germ`]) and the
//! direct height-band labeling of the lattice path ([`label_bitstring`]).
//!
//! The underlined variant `F̲(alpha)` replaces each `=`-sign by the
//! underlined copy of the number at its matching 0-bit, where matching is
//! the parenthesis matching of the Dyck part of `f(alpha)`.

use crate::bits::Bitstring;
use crate::digits::digit_char;
use crate::germ::Germ;
use crate::{Error, Result};
use std::fmt;

/// One entry of a labeled string: a number in `[0, k]` or an `=`-sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Entry {
    Num(u8),
    Eq,
}

impl Entry {
    pub fn num(&self) -> Option<u8> {
        match self {
            Entry::Num(v) => Some(*v),
            Entry::Eq => None,
        }
    }
}

/// A length-`2k+1` sequence of entries. Rotations of canonical strings are
/// represented by the same type; invariants below refer to the canonical
/// (unrotated) form.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledString {
    k: usize,
    entries: Vec<Entry>,
}

impl LabeledString {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn entry(&self, p: usize) -> Entry {
        self.entries[p]
    }

    pub fn rotated_left(&self, j: usize) -> LabeledString {
        let n = self.entries.len();
        let j = j % n;
        let mut entries = Vec::with_capacity(n);
        entries.extend_from_slice(&self.entries[j..]);
        entries.extend_from_slice(&self.entries[..j]);
        LabeledString { k: self.k, entries }
    }

    /// Bit form: numbers to 0-bits, signs to 1-bits.
    pub fn to_bitstring(&self) -> Bitstring {
        let mut mask = 0u64;
        for (p, e) in self.entries.iter().enumerate() {
            if matches!(e, Entry::Eq) {
                mask |= 1 << p;
            }
        }
        Bitstring::new(self.entries.len(), mask)
    }

    /// Checks the shape every canonical `F(alpha)` must have: each number
    /// once, `k` signs, numbers ascend left to right when adjacent, `k=`
    /// occurs and `=k` does not.
    pub fn check_canonical_shape(&self) -> Result<()> {
        let k = self.k;
        let n = 2 * k + 1;
        let mut seen = vec![0usize; k + 1];
        let mut eqs = 0;
        for e in &self.entries {
            match e {
                Entry::Num(v) if (*v as usize) <= k => seen[*v as usize] += 1,
                Entry::Num(_) => return Err(Error::Parse(format!("number out of range in {self}"))),
                Entry::Eq => eqs += 1,
            }
        }
        if self.entries.len() != n || eqs != k || seen.iter().any(|&c| c != 1) {
            return Err(Error::Parse(format!("not a labeled n-string: {self}")));
        }
        for w in self.entries.windows(2) {
            if let (Entry::Num(a), Entry::Num(b)) = (w[0], w[1]) {
                if b <= a {
                    return Err(Error::Parse(format!("adjacent numbers not ascending in {self}")));
                }
            }
            if let (Entry::Eq, Entry::Num(b)) = (w[0], w[1]) {
                if b as usize == k {
                    return Err(Error::Parse(format!("\"=k\" occurs in {self}")));
                }
            }
        }
        let has_k_eq = self
            .entries
            .windows(2)
            .any(|w| matches!((w[0], w[1]), (Entry::Num(a), Entry::Eq) if a as usize == k));
        if !has_k_eq {
            return Err(Error::Parse(format!("\"k=\" missing in {self}")));
        }
        Ok(())
    }
}

impl fmt::Display for LabeledString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match e {
                Entry::Num(v) => write!(f, "{}", digit_char(*v))?,
                Entry::Eq => write!(f, "=")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LabeledString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledString({self})")
    }
}

/// `F(alpha)` by the tree transform: start from the root string
/// `012...k=...=` and re-concatenate `W|X|Y|Z -> W|Y|X|Z` once per edge of
/// the path from the root, where the edge decrementing digit `a_i` fixes the
/// length-`i` prefix `W` and suffix `Z`, and the middle splits at the number
/// following the middle's first entry.
pub fn string_of_germ(g: &Germ) -> LabeledString {
    let k = g.k();
    let n = 2 * k + 1;
    // Path of digit indices from g up to the root, applied root-down.
    let mut path = Vec::new();
    let mut cur = g.clone();
    while !cur.is_root() {
        let (parent, i) = cur.parent().expect("non-root has a parent");
        path.push(i);
        cur = parent;
    }
    let mut entries: Vec<Entry> = (0..=k as u8).map(Entry::Num).collect();
    entries.extend(std::iter::repeat_n(Entry::Eq, k));
    for &i in path.iter().rev() {
        entries = transform_step(&entries, i, n);
    }
    LabeledString { k, entries }
}

fn transform_step(parent: &[Entry], i: usize, n: usize) -> Vec<Entry> {
    let middle = &parent[i..n - i];
    let gamma = middle[0].num().expect("middle starts with a number");
    debug_assert!(gamma > 0);
    let split = middle
        .iter()
        .position(|e| *e == Entry::Num(gamma + 1))
        .expect("middle contains gamma + 1");
    let mut next = Vec::with_capacity(n);
    next.extend_from_slice(&parent[..i]);
    next.extend_from_slice(&middle[split..]);
    next.extend_from_slice(&middle[..split]);
    next.extend_from_slice(&parent[n - i..]);
    next
}

/// Bit form `f(alpha)` of the germ's labeled string; always canonical.
pub fn bitstring_of_germ(g: &Germ) -> Bitstring {
    string_of_germ(g).to_bitstring()
}

/// Direct labeling of a canonical bitstring.
///
/// Reading 0-bits as up-steps and 1-bits as down-steps of a lattice path,
/// the signs go to the down-steps and the numbers `k..0` go to the up-steps
/// ordered by height band from top to bottom and left to right within a
/// band. Agrees with `string_of_germ` composed with `germ_of_bitstring`.
pub fn label_bitstring(b: &Bitstring) -> Result<LabeledString> {
    if !b.is_canonical_vertex_form() {
        return Err(Error::NotCanonical(b.to_string()));
    }
    let n = b.len();
    let k = (n - 1) / 2;
    let mut entries = vec![Entry::Eq; n];
    // (band bottom height, position) per up-step
    let mut ups: Vec<(i32, usize)> = Vec::with_capacity(k + 1);
    let mut h = 0i32;
    for p in 0..n {
        if b.bit(p) {
            h -= 1;
        } else {
            ups.push((h, p));
            h += 1;
        }
    }
    debug_assert_eq!(h, 1);
    ups.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut label = k as u8;
    for (_, p) in ups {
        entries[p] = Entry::Num(label);
        label = label.wrapping_sub(1);
    }
    Ok(LabeledString { k, entries })
}

/// One entry of an underlined string.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UnderEntry {
    Num(u8),
    Under(u8),
}

/// `F̲(alpha)`: numbers as in `F(alpha)`, each sign replaced by the
/// underlined number of its matching 0-bit.
#[derive(Clone, PartialEq, Eq)]
pub struct UnderlinedString {
    k: usize,
    entries: Vec<UnderEntry>,
}

impl UnderlinedString {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[UnderEntry] {
        &self.entries
    }

    pub fn rotated_left(&self, j: usize) -> UnderlinedString {
        let n = self.entries.len();
        let j = j % n;
        let mut entries = Vec::with_capacity(n);
        entries.extend_from_slice(&self.entries[j..]);
        entries.extend_from_slice(&self.entries[..j]);
        UnderlinedString { k: self.k, entries }
    }
}

impl fmt::Display for UnderlinedString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match e {
                UnderEntry::Num(v) => write!(f, "{}", digit_char(*v))?,
                UnderEntry::Under(v) => write!(f, "_{}", digit_char(*v))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UnderlinedString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnderlinedString({self})")
    }
}

/// Underlined form of the germ's labeled string, via parenthesis matching
/// on the Dyck part of `f(alpha)`; the leading 0-bit (always the number 0)
/// stays unmatched.
pub fn underline_string(g: &Germ) -> UnderlinedString {
    let labeled = string_of_germ(g);
    let bits = labeled.to_bitstring();
    let n = bits.len();
    let mut entries: Vec<UnderEntry> = labeled
        .entries()
        .iter()
        .map(|e| match e {
            Entry::Num(v) => UnderEntry::Num(*v),
            Entry::Eq => UnderEntry::Under(0), // filled below
        })
        .collect();
    let mut stack: Vec<usize> = Vec::new();
    for p in 1..n {
        if bits.bit(p) {
            let open = stack.pop().expect("Dyck part balances");
            let v = labeled.entry(open).num().expect("0-bit holds a number");
            entries[p] = UnderEntry::Under(v);
        } else {
            stack.push(p);
        }
    }
    debug_assert!(stack.is_empty());
    UnderlinedString { k: g.k(), entries }
}
