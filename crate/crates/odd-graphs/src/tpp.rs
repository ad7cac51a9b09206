//! Tightly parenthesized permutations and the supplementation order.
//!
//! Dropping the leading 0-bit of `f(alpha)` and inserting parentheses and
//! commas between adjacent bit pairs (`00 -> 0(0`, `01 -> 0,1`, `10 -> 1)(0`,
//! `11 -> 1)1`, plus an outer pair) turns the bitstring into a concatenation
//! of tightly parenthesized permutations once the bits are numbered 1..2k.
//! Recursively reversing the number content of every parenthesized group,
//! outermost first, reaches a fixpoint whose reading is the permutation `p`;
//! its inverse `pi`, consumed from position `2k` down to 1, prescribes where
//! each supplementation step of the vertical list happens.

use crate::digits::digit_char;
use crate::germ::Germ;
use crate::labeled::bitstring_of_germ;
use crate::{Error, Result};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tok {
    Open,
    Close,
    Num(u16),
}

/// A properly nested numbering, kept as a token sequence; commas are
/// implied between adjacent numbers.
#[derive(Clone, PartialEq, Eq)]
pub struct ParenthesizedNumbering {
    k: usize,
    toks: Vec<Tok>,
}

/// The permutation `p` of `[1, 2k]` read off the reversal fixpoint, together
/// with its inverse `pi`. Index 0 holds the image of 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupplementationOrder {
    pub p: Vec<u16>,
    pub pi: Vec<u16>,
}

impl SupplementationOrder {
    /// `pi(j)` for `1 <= j <= 2k`.
    pub fn pi_at(&self, j: usize) -> usize {
        self.pi[j - 1] as usize
    }
}

/// Builds the numbered parenthesization `h_0(alpha)` of `f'(alpha)`.
pub fn parenthesize(g: &Germ) -> ParenthesizedNumbering {
    let f = bitstring_of_germ(g);
    let two_k = f.len() - 1;
    let bit = |i: usize| f.bit(i + 1); // skip the leading 0-bit
    let mut toks = Vec::with_capacity(3 * two_k);
    toks.push(Tok::Open);
    for i in 0..two_k {
        toks.push(Tok::Num(i as u16 + 1));
        if i + 1 < two_k {
            match (bit(i), bit(i + 1)) {
                (false, false) => toks.push(Tok::Open),
                (false, true) => {}
                (true, false) => {
                    toks.push(Tok::Close);
                    toks.push(Tok::Open);
                }
                (true, true) => toks.push(Tok::Close),
            }
        }
    }
    toks.push(Tok::Close);
    ParenthesizedNumbering { k: g.k(), toks }
}

impl ParenthesizedNumbering {
    pub fn k(&self) -> usize {
        self.k
    }

    fn check_balanced(&self) -> Result<()> {
        let mut depth = 0i32;
        for t in &self.toks {
            match t {
                Tok::Open => depth += 1,
                Tok::Close => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(Error::MalformedNumbering(self.to_string()));
                    }
                }
                Tok::Num(_) => {}
            }
        }
        if depth != 0 {
            return Err(Error::MalformedNumbering(self.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for ParenthesizedNumbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut prev_num = false;
        for t in &self.toks {
            match t {
                Tok::Open => {
                    f.write_str("(")?;
                    prev_num = false;
                }
                Tok::Close => {
                    f.write_str(")")?;
                    prev_num = false;
                }
                Tok::Num(v) => {
                    if prev_num {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", digit_char(*v as u8))?;
                    prev_num = true;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParenthesizedNumbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParenthesizedNumbering({self})")
    }
}

/// Runs the recursive reversal to its fixpoint and reads off `p` and `pi`.
pub fn reversal_fixpoint(h: &ParenthesizedNumbering) -> Result<SupplementationOrder> {
    h.check_balanced()?;
    let mut toks = h.toks.clone();
    let matching = match_parens(&toks)?;
    // Group spans at the top level, then recursively inside each group:
    // reverse the numbers of the whole group, then recurse one level down.
    let mut spans: Vec<(usize, usize)> = top_level_groups(&toks, &matching, 0, toks.len());
    while let Some((open, close)) = spans.pop() {
        reverse_numbers(&mut toks, open, close);
        spans.extend(top_level_groups(&toks, &matching, open + 1, close));
    }
    let p: Vec<u16> = toks
        .iter()
        .filter_map(|t| match t {
            Tok::Num(v) => Some(*v),
            _ => None,
        })
        .collect();
    let two_k = p.len();
    let mut pi = vec![0u16; two_k];
    for (idx, &v) in p.iter().enumerate() {
        if v == 0 || v as usize > two_k || pi[v as usize - 1] != 0 {
            return Err(Error::MalformedNumbering(h.to_string()));
        }
        pi[v as usize - 1] = idx as u16 + 1;
    }
    Ok(SupplementationOrder { p, pi })
}

/// Composition: parenthesize, then reverse to the fixpoint.
pub fn pi_of_germ(g: &Germ) -> SupplementationOrder {
    reversal_fixpoint(&parenthesize(g)).expect("parenthesize() output is well formed")
}

fn match_parens(toks: &[Tok]) -> Result<Vec<usize>> {
    let mut matching = vec![usize::MAX; toks.len()];
    let mut stack = Vec::new();
    for (i, t) in toks.iter().enumerate() {
        match t {
            Tok::Open => stack.push(i),
            Tok::Close => {
                let open = stack.pop().ok_or_else(|| Error::MalformedNumbering("unbalanced".into()))?;
                matching[open] = i;
                matching[i] = open;
            }
            Tok::Num(_) => {}
        }
    }
    Ok(matching)
}

fn top_level_groups(
    toks: &[Tok],
    matching: &[usize],
    start: usize,
    end: usize,
) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = start;
    while i < end {
        if matches!(toks[i], Tok::Open) {
            out.push((i, matching[i]));
            i = matching[i] + 1;
        } else {
            i += 1;
        }
    }
    out
}

fn reverse_numbers(toks: &mut [Tok], open: usize, close: usize) {
    let positions: Vec<usize> =
        (open..=close).filter(|&i| matches!(toks[i], Tok::Num(_))).collect();
    let values: Vec<Tok> = positions.iter().rev().map(|&i| toks[i]).collect();
    for (&i, &v) in positions.iter().zip(values.iter()) {
        toks[i] = v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pn(k: usize, germ: &str) -> String {
        parenthesize(&Germ::parse(k, germ).unwrap()).to_string()
    }

    #[test]
    fn parenthesize_examples() {
        assert_eq!(pn(2, "0"), "(1(2,3)4)");
        assert_eq!(pn(3, "10"), "(1(2,3)(4,5)6)");
        assert_eq!(pn(1, "-"), "(1,2)");
        assert_eq!(pn(2, "1"), "(1,2)(3,4)");
        let g = crate::canon::germ_of_bitstring(&"000011010001111010011".parse().unwrap()).unwrap();
        assert_eq!(
            parenthesize(&g).to_string(),
            "(1(2(3,4)5)(6,7)(8(9(a,b)c)d)e)(f,g)(h(i,j)k)"
        );
    }

    #[test]
    fn reversal_small() {
        let so = pi_of_germ(&Germ::parse(2, "0").unwrap());
        assert_eq!(so.p, vec![4, 2, 3, 1]);
        assert_eq!(so.pi, vec![4, 2, 3, 1]);
        let so = pi_of_germ(&Germ::parse(1, "-").unwrap());
        assert_eq!(so.p, vec![2, 1]);
        assert_eq!(so.pi, vec![2, 1]);
        let so = pi_of_germ(&Germ::parse(3, "00").unwrap());
        assert_eq!(so.p, vec![6, 2, 4, 3, 5, 1]);
        assert_eq!(so.pi, vec![6, 2, 4, 3, 5, 1]);
    }

    #[test]
    fn reversal_paper_scale() {
        let g = crate::canon::germ_of_bitstring(&"000011010001111010011".parse().unwrap()).unwrap();
        let so = pi_of_germ(&g);
        assert_eq!(
            so.pi,
            vec![14, 8, 12, 10, 11, 9, 13, 6, 7, 2, 4, 3, 5, 1, 16, 15, 20, 18, 19, 17]
        );
        // the printed source drops the entry 1 from p; the inverse of pi is
        // the authoritative value
        assert_eq!(
            so.p,
            vec![14, 10, 12, 11, 13, 8, 9, 2, 6, 4, 5, 3, 7, 1, 16, 15, 20, 18, 19, 17]
        );
    }

    #[test]
    fn always_a_permutation() {
        for k in 1..=8 {
            for g in Germ::all(k).unwrap() {
                let so = pi_of_germ(&g);
                assert_eq!(so.p.len(), 2 * k);
                // p o pi = identity
                for j in 1..=2 * k {
                    assert_eq!(so.p[so.pi_at(j) - 1] as usize, j, "k={k} germ {g}");
                }
            }
        }
    }
}
