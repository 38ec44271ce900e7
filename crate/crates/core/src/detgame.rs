//! Games given by sets of determining strings.
//!
//! A coalition wins when some initial segment of it lies in `T1` and loses
//! when some initial segment lies in `T0`. When every coalition has such a
//! segment in exactly one of the two sets, this defines a computable game
//! whose `T1` strings are winning determining and whose `T0` strings are
//! losing determining.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitstr::BitString;
use crate::error::Error;
use crate::setspec::Coalition;

/// Three-valued answer of a bounded evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Winning,
    Losing,
    /// A depth or stage budget ran out before a determining segment turned
    /// up.
    Undetermined,
}

impl Verdict {
    pub fn is_decided(self) -> bool {
        self != Verdict::Undetermined
    }

    pub fn from_bool(win: bool) -> Verdict {
        if win {
            Verdict::Winning
        } else {
            Verdict::Losing
        }
    }

    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Losing, _) | (_, Losing) => Losing,
            (Winning, Winning) => Winning,
            _ => Undetermined,
        }
    }

    pub fn or(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Winning, _) | (_, Winning) => Winning,
            (Losing, Losing) => Losing,
            _ => Undetermined,
        }
    }

    /// A later verdict may refine `Undetermined` but never flip a decision.
    pub fn consistent_refinement(self, later: Verdict) -> bool {
        self == Verdict::Undetermined || self == later
    }
}

/// Anything that can be asked about a coalition with a bounded effort.
pub trait Game {
    fn eval(&self, coalition: &dyn Coalition, depth: usize) -> Verdict;
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeterminingSets {
    pub t0: BTreeSet<BitString>,
    pub t1: BTreeSet<BitString>,
}

impl DeterminingSets {
    pub fn new<I0, I1>(t0: I0, t1: I1) -> Self
    where
        I0: IntoIterator<Item = BitString>,
        I1: IntoIterator<Item = BitString>,
    {
        DeterminingSets {
            t0: t0.into_iter().collect(),
            t1: t1.into_iter().collect(),
        }
    }

    pub fn from_lits(t0: &[&str], t1: &[&str]) -> Self {
        DeterminingSets::new(
            t0.iter().map(|s| BitString::lit(s)),
            t1.iter().map(|s| BitString::lit(s)),
        )
    }

    pub fn max_len(&self) -> usize {
        self.t0
            .iter()
            .chain(self.t1.iter())
            .map(BitString::len)
            .max()
            .unwrap_or(0)
    }

    /// The side holding some initial segment of `s` (`true` for `T1`).
    /// Checks `T1` first at each length.
    pub fn side_of_prefix(&self, s: &BitString) -> Option<bool> {
        (1..=s.len()).find_map(|n| {
            let p = &s.bits()[..n];
            if self.t1.contains(p) {
                Some(true)
            } else if self.t0.contains(p) {
                Some(false)
            } else {
                None
            }
        })
    }

    pub fn extends_t1(&self, s: &BitString) -> bool {
        (1..=s.len()).any(|n| self.t1.contains(&s.bits()[..n]))
    }

    pub fn extends_t0(&self, s: &BitString) -> bool {
        (1..=s.len()).any(|n| self.t0.contains(&s.bits()[..n]))
    }

    /// Strings of `self` that are initial segments of `s`, in length order.
    pub fn prefixes_in(&self, s: &BitString) -> Vec<(BitString, bool)> {
        (1..=s.len())
            .filter_map(|n| {
                let p = &s.bits()[..n];
                if self.t1.contains(p) {
                    Some((BitString::from_bits(p.to_vec()), true))
                } else if self.t0.contains(p) {
                    Some((BitString::from_bits(p.to_vec()), false))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_subset_of(&self, other: &DeterminingSets) -> bool {
        self.t0.is_subset(&other.t0) && self.t1.is_subset(&other.t1)
    }
}

/// Examines the coalition's first `depth` characteristic bits.
pub fn eval(sets: &DeterminingSets, coalition: &dyn Coalition, depth: usize) -> Verdict {
    let mut prefix: Vec<bool> = Vec::with_capacity(depth);
    for i in 0..depth {
        let Some(b) = coalition.bit(i) else {
            return Verdict::Undetermined;
        };
        prefix.push(b);
        if sets.t1.contains(prefix.as_slice()) {
            return Verdict::Winning;
        }
        if sets.t0.contains(prefix.as_slice()) {
            return Verdict::Losing;
        }
    }
    Verdict::Undetermined
}

impl Game for DeterminingSets {
    fn eval(&self, coalition: &dyn Coalition, depth: usize) -> Verdict {
        eval(self, coalition, depth)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionIssue {
    /// The string sits in both sets.
    Overlap(BitString),
    /// This string of the requested length has several initial segments in
    /// `T0 ∪ T1`.
    Multiple(BitString, Vec<BitString>),
    /// This string has no initial segment in `T0 ∪ T1`.
    Uncovered(BitString),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReport {
    /// No overlap and at most one determining segment per string.
    pub pass: bool,
    /// Every string of the length has exactly one determining segment.
    pub total: bool,
    pub counterexamples: Vec<PartitionIssue>,
}

/// Checks the partition hypothesis on every string of length `max_len`.
pub fn partition_check(sets: &DeterminingSets, max_len: usize) -> PartitionReport {
    let mut counterexamples: Vec<PartitionIssue> = sets
        .t0
        .intersection(&sets.t1)
        .cloned()
        .map(PartitionIssue::Overlap)
        .collect();
    let mut pass = counterexamples.is_empty();
    let mut total = pass;
    for s in BitString::all_of_length(max_len) {
        let hits = sets.prefixes_in(&s);
        match hits.len() {
            0 => {
                total = false;
                if counterexamples.len() < 16 {
                    counterexamples.push(PartitionIssue::Uncovered(s));
                }
            }
            1 => {}
            _ => {
                pass = false;
                total = false;
                if counterexamples.len() < 16 {
                    counterexamples.push(PartitionIssue::Multiple(
                        s,
                        hits.into_iter().map(|h| h.0).collect(),
                    ));
                }
            }
        }
    }
    PartitionReport {
        pass,
        total,
        counterexamples,
    }
}

/// Types with a finite example; the other five types contain no games.
pub const FINITE_TYPES: [u8; 11] = [1, 2, 3, 4, 5, 7, 9, 11, 12, 13, 15];
pub const EMPTY_TYPES: [u8; 5] = [6, 8, 10, 14, 16];

/// The determining sets of the finite example of `type_id`.
pub fn finite_example(type_id: u8) -> Result<DeterminingSets, Error> {
    let (t0, t1): (&[&str], &[&str]) = match type_id {
        1 => (&["00", "010", "100"], &["11", "011", "101"]),
        2 => (&["0"], &["1"]),
        3 => (
            &["00", "010", "0110", "100", "1010"],
            &["11", "1011", "0111"],
        ),
        4 => (&["0", "10"], &["11"]),
        5 => (&["00"], &["1", "01"]),
        7 => (
            &["00", "100", "0110", "0100"],
            &["11", "101", "0101", "0111"],
        ),
        9 => (&["1"], &["0"]),
        11 => (&["1", "01"], &["00"]),
        12 => (&["1", "00"], &["01"]),
        13 => (&["10"], &["0", "11"]),
        15 => (&["01", "10"], &["00", "11"]),
        t if EMPTY_TYPES.contains(&t) => return Err(Error::EmptyType(t)),
        t => return Err(Error::UnknownType(t)),
    };
    Ok(DeterminingSets::from_lits(t0, t1))
}

pub fn describe_issue(issue: &PartitionIssue) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    match issue {
        PartitionIssue::Overlap(x) => {
            let _ = write!(s, "{x} is in both T0 and T1");
        }
        PartitionIssue::Multiple(x, hits) => {
            let _ = write!(s, "{x} has initial segments {hits:?}");
        }
        PartitionIssue::Uncovered(x) => {
            let _ = write!(s, "{x} has no initial segment in T0 or T1");
        }
    }
    s
}
