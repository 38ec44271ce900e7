//! Finite binary strings and the string calculus used throughout the crate:
//! complements, prefixes, concatenation, incompatibility, p-strings and
//! d-strings.
//!
//! Bit `i` of a string is the membership bit of player `i`, so a string of
//! length `k` doubles as the `k`-initial segment of a coalition.

use alloc::string::String;
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A finite 0/1 string.
///
/// Ordering is lexicographic with `0 < 1` and a proper prefix sorting before
/// its extensions.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub const fn new() -> Self {
        BitString(Vec::new())
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    /// Parses a string of ASCII `0`/`1`. Panics on any other character; use
    /// [`str::parse`] for fallible parsing.
    pub fn lit(s: &str) -> Self {
        s.parse().expect("bit string literal")
    }

    /// The first `len` bits of the characteristic sequence of `set`, where
    /// `set` lists members in any order.
    pub fn from_members(len: usize, members: &[usize]) -> Self {
        let mut bits = alloc::vec![false; len];
        for &m in members {
            if m < len {
                bits[m] = true;
            }
        }
        BitString(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, i: usize) -> Option<bool> {
        self.0.get(i).copied()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.0
    }

    pub fn push(&mut self, b: bool) {
        self.0.push(b);
    }

    pub fn complement(&self) -> BitString {
        BitString(self.0.iter().map(|b| !b).collect())
    }

    /// `self * other`.
    pub fn concat(&self, other: &BitString) -> BitString {
        let mut bits = Vec::with_capacity(self.len() + other.len());
        bits.extend_from_slice(&self.0);
        bits.extend_from_slice(&other.0);
        BitString(bits)
    }

    /// `self * "s"` for a literal suffix.
    pub fn with_suffix(&self, suffix: &str) -> BitString {
        self.concat(&BitString::lit(suffix))
    }

    /// `1 * self` and friends.
    pub fn with_prefix_bit(&self, b: bool) -> BitString {
        let mut bits = Vec::with_capacity(self.len() + 1);
        bits.push(b);
        bits.extend_from_slice(&self.0);
        BitString(bits)
    }

    /// `self[k]`, the prefix of length `k`. Saturates at the full string.
    pub fn prefix(&self, k: usize) -> BitString {
        BitString(self.0[..k.min(self.len())].to_vec())
    }

    /// Drops the last `n` bits (`α⁻` for `n = 1`, `α⁻⁻` for `n = 2`).
    pub fn drop_last(&self, n: usize) -> BitString {
        self.prefix(self.len().saturating_sub(n))
    }

    /// `self ⊆ other`: `self` is an initial segment of `other`.
    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn starts_with(&self, prefix: &str) -> bool {
        prefix.len() <= self.len()
            && prefix
                .bytes()
                .zip(self.0.iter())
                .all(|(c, &b)| (c == b'1') == b)
    }

    /// True iff the strings differ at some index below both lengths.
    pub fn incompatible(&self, other: &BitString) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a != b)
    }

    /// Even length and every pair `x(2k) x(2k+1)` is `10` or `01`.
    pub fn is_p_string(&self) -> bool {
        self.len().is_multiple_of(2) && self.0.chunks(2).all(|p| p[0] != p[1])
    }

    /// A p-string followed by `00` or `11`.
    pub fn is_d_string(&self) -> bool {
        let n = self.len();
        n >= 2
            && n.is_multiple_of(2)
            && self.0[n - 2] == self.0[n - 1]
            && self.drop_last(2).is_p_string()
    }

    /// The shortest prefix of `self` that is a d-string, if any.
    pub fn d_string_prefix(&self) -> Option<BitString> {
        self.0
            .chunks_exact(2)
            .position(|p| p[0] == p[1])
            .map(|k| self.prefix(2 * k + 2))
    }

    /// Indices holding a 1: the finite coalition this string denotes.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }

    /// Bitwise `self ≤ other` over `self`'s length with at least one strict
    /// inequality ("`other` properly contains `self`"). Requires
    /// `self.len() <= other.len()`.
    pub fn properly_contained_in(&self, other: &BitString) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut strict = false;
        for (&a, &b) in self.0.iter().zip(other.0.iter()) {
            if a && !b {
                return false;
            }
            strict |= !a && b;
        }
        strict
    }

    /// All strings of length `n` in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = BitString> {
        assert!(n < 64, "exhaustive enumeration limited to lengths below 64");
        (0u64..(1u64 << n))
            .map(move |v| BitString((0..n).map(|i| (v >> (n - 1 - i)) & 1 == 1).collect()))
    }
}

impl Borrow<[bool]> for BitString {
    fn borrow(&self) -> &[bool] {
        &self.0
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.bytes()
            .map(|c| match c {
                b'0' => Ok(false),
                b'1' => Ok(true),
                _ => Err(Error::BadBitString(String::from(s))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitString)
    }
}

/// True iff no two distinct members of `strings` are compatible. Runs in
/// `O(n log n)`: after sorting, a prefix pair always shows up between
/// neighbours.
pub fn pairwise_incompatible<'a, I>(strings: I) -> Result<(), (BitString, BitString)>
where
    I: IntoIterator<Item = &'a BitString>,
{
    let mut v: Vec<&BitString> = strings.into_iter().collect();
    v.sort();
    v.dedup();
    for w in v.windows(2) {
        if w[0].is_prefix_of(w[1]) {
            return Err((w[0].clone(), w[1].clone()));
        }
    }
    Ok(())
}
