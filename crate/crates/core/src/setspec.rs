//! Eventually constant sets of naturals and the coalition interface the
//! evaluators read from.

use core::fmt;

use crate::bitstr::BitString;

/// Read access to a coalition's characteristic sequence.
///
/// `None` means the bit is not available (for instance a machine-backed
/// coalition whose program did not answer within its step budget).
pub trait Coalition {
    fn bit(&self, i: usize) -> Option<bool>;

    /// The first `len` bits, or `None` if any is unavailable.
    fn initial_segment(&self, len: usize) -> Option<BitString> {
        let mut s = BitString::new();
        for i in 0..len {
            s.push(self.bit(i)?);
        }
        Some(s)
    }
}

/// A decidable set of naturals, used for the parameter `A` of the staged
/// construction.
pub trait RecursiveSet {
    fn contains(&self, n: u64) -> bool;
}

/// The set whose characteristic sequence is `prefix` followed by `tail`
/// repeated forever.
///
/// Always stored normalized (trailing prefix bits equal to `tail` are
/// trimmed), so derived equality is set equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetSpec {
    prefix: BitString,
    tail: bool,
}

impl SetSpec {
    pub fn new(prefix: BitString, tail: bool) -> Self {
        let mut bits = prefix.into_bits();
        while bits.last() == Some(&tail) {
            bits.pop();
        }
        SetSpec {
            prefix: BitString::from_bits(bits),
            tail,
        }
    }

    pub fn lit(prefix: &str, tail: bool) -> Self {
        SetSpec::new(BitString::lit(prefix), tail)
    }

    pub fn empty() -> Self {
        SetSpec::lit("", false)
    }

    pub fn naturals() -> Self {
        SetSpec::lit("", true)
    }

    /// The finite set `{i : s(i) = 1}`.
    pub fn finite(s: &BitString) -> Self {
        SetSpec::new(s.clone(), false)
    }

    pub fn prefix(&self) -> &BitString {
        &self.prefix
    }

    pub fn tail(&self) -> bool {
        self.tail
    }

    pub fn get(&self, i: usize) -> bool {
        self.prefix.bit(i).unwrap_or(self.tail)
    }

    /// `N \ self`.
    pub fn complement(&self) -> SetSpec {
        SetSpec {
            prefix: self.prefix.complement(),
            tail: !self.tail,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.tail
    }

    /// Index range past which every bit equals the tail.
    pub fn settled_after(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_subset_of(&self, other: &SetSpec) -> bool {
        let n = self.settled_after().max(other.settled_after()) + 1;
        (0..n).all(|i| !self.get(i) || other.get(i))
    }

    pub fn is_disjoint_from(&self, other: &SetSpec) -> bool {
        let n = self.settled_after().max(other.settled_after()) + 1;
        (0..n).all(|i| !(self.get(i) && other.get(i)))
    }

    pub fn intersection(&self, other: &SetSpec) -> SetSpec {
        let n = self.settled_after().max(other.settled_after());
        SetSpec::new(
            BitString::from_bits((0..n).map(|i| self.get(i) && other.get(i)).collect()),
            self.tail && other.tail,
        )
    }

    pub fn segment(&self, len: usize) -> BitString {
        BitString::from_bits((0..len).map(|i| self.get(i)).collect())
    }
}

impl Coalition for SetSpec {
    fn bit(&self, i: usize) -> Option<bool> {
        Some(self.get(i))
    }
}

impl RecursiveSet for SetSpec {
    fn contains(&self, n: u64) -> bool {
        usize::try_from(n).map_or(self.tail, |i| self.get(i))
    }
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})*", self.prefix, u8::from(self.tail))
    }
}

impl fmt::Debug for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{0, 2, 4, ...}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvenNumbers;

impl RecursiveSet for EvenNumbers {
    fn contains(&self, n: u64) -> bool {
        n.is_multiple_of(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_makes_equality_decidable() {
        assert_eq!(SetSpec::lit("1011", true), SetSpec::lit("10", true));
        assert_eq!(SetSpec::lit("000", false), SetSpec::empty());
        assert_ne!(SetSpec::lit("10", true), SetSpec::lit("10", false));
        assert_eq!(SetSpec::lit("1011", true).prefix(), &BitString::lit("10"));
    }

    #[test]
    fn complement_flips_every_bit() {
        let s = SetSpec::lit("0110", false);
        let c = s.complement();
        for i in 0..10 {
            assert_ne!(s.get(i), c.get(i));
        }
        assert_eq!(c.complement(), s);
        assert_eq!(SetSpec::empty().complement(), SetSpec::naturals());
    }

    #[test]
    fn subset_and_disjointness() {
        let a = SetSpec::lit("1000", false);
        let b = SetSpec::lit("1011", false);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert!(a.is_subset_of(&SetSpec::naturals()));
        assert!(SetSpec::lit("01", false).is_disjoint_from(&SetSpec::lit("10", true)));
        assert!(!SetSpec::lit("0", true).is_disjoint_from(&SetSpec::lit("", true)));
    }

    #[test]
    fn membership_past_the_prefix_is_the_tail() {
        let s = SetSpec::lit("10", true);
        let bits: alloc::vec::Vec<bool> = (0..6).map(|i| s.get(i)).collect();
        assert_eq!(bits, [true, false, true, true, true, true]);
        assert!(s.contains(u64::MAX));
    }
}
