//! Brute-force axiom analysis of games over a small explicit carrier.
//!
//! Coalitions are `k`-bit masks with bit `i` standing for player `i`.
//! Complements are taken within the carrier.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::bitstr::BitString;
use crate::detgame::{describe_issue, partition_check, DeterminingSets};
use crate::error::Error;

/// Largest carrier the bitmap representation holds.
pub const MAX_CARRIER: usize = 6;
pub const DEFAULT_CARRIER_BOUND: usize = 5;
pub const EXHAUSTIVE_CARRIER_BOUND: usize = 4;

pub type Mask = u32;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteGame {
    carrier: usize,
    /// Bit `m` is set iff coalition mask `m` is winning.
    winning: u64,
}

impl FiniteGame {
    pub fn new<I: IntoIterator<Item = Mask>>(carrier: usize, winning: I) -> Result<Self, Error> {
        if carrier > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                carrier,
                bound: MAX_CARRIER,
            });
        }
        let mut bits = 0u64;
        for m in winning {
            if (m as u64) >> carrier != 0 {
                return Err(Error::StringTooLong {
                    len: 32 - m.leading_zeros() as usize,
                    carrier,
                });
            }
            bits |= 1 << m;
        }
        Ok(FiniteGame {
            carrier,
            winning: bits,
        })
    }

    fn from_bitmap(carrier: usize, winning: u64) -> Self {
        FiniteGame { carrier, winning }
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn full(&self) -> Mask {
        ((1u64 << self.carrier) - 1) as Mask
    }

    pub fn is_winning(&self, m: Mask) -> bool {
        (self.winning >> m) & 1 == 1
    }

    pub fn winning(&self) -> impl Iterator<Item = Mask> + '_ {
        (0..=self.full()).filter(|&m| self.is_winning(m))
    }

    pub fn complement(&self, m: Mask) -> Mask {
        !m & self.full()
    }
}

impl fmt::Debug for FiniteGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGame")
            .field("carrier", &self.carrier)
            .field(
                "winning",
                &self
                    .winning()
                    .map(|m| mask_to_string(m, self.carrier))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

pub fn mask_to_string(m: Mask, carrier: usize) -> BitString {
    BitString::from_bits((0..carrier).map(|i| (m >> i) & 1 == 1).collect())
}

/// Inverse of [`mask_to_string`]; the string's length must equal the carrier.
pub fn string_to_mask(s: &BitString) -> Mask {
    s.ones().fold(0, |m, i| m | (1 << i))
}

/// The four axiom flags and the resulting type number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypeVerdict {
    pub monotonic: bool,
    pub proper: bool,
    pub strong: bool,
    pub weak: bool,
    pub type_id: u8,
}

impl TypeVerdict {
    pub fn from_flags(monotonic: bool, proper: bool, strong: bool, weak: bool) -> Self {
        TypeVerdict {
            monotonic,
            proper,
            strong,
            weak,
            type_id: type_id(monotonic, proper, strong, !weak),
        }
    }

    /// Sign vector over (monotonic, proper, strong, nonweak), e.g. `++-+`.
    pub fn signs(&self) -> [char; 4] {
        signs_of_type(self.type_id)
    }
}

/// Row number for a sign vector, with `+` ordered before `-` in each
/// position.
pub fn type_id(monotonic: bool, proper: bool, strong: bool, nonweak: bool) -> u8 {
    1 + 8 * u8::from(!monotonic)
        + 4 * u8::from(!proper)
        + 2 * u8::from(!strong)
        + u8::from(!nonweak)
}

/// Flags (monotonic, proper, strong, nonweak) of a type number in `1..=16`.
pub fn flags_of_type(t: u8) -> [bool; 4] {
    let r = t - 1;
    [r & 8 == 0, r & 4 == 0, r & 2 == 0, r & 1 == 0]
}

pub fn signs_of_type(t: u8) -> [char; 4] {
    flags_of_type(t).map(|f| if f { '+' } else { '-' })
}

pub fn analyze(g: &FiniteGame) -> Result<TypeVerdict, Error> {
    analyze_bounded(g, DEFAULT_CARRIER_BOUND)
}

pub fn analyze_bounded(g: &FiniteGame, bound: usize) -> Result<TypeVerdict, Error> {
    if g.carrier > bound {
        return Err(Error::CarrierTooLarge {
            carrier: g.carrier,
            bound,
        });
    }
    Ok(analyze_unchecked(g))
}

fn analyze_unchecked(g: &FiniteGame) -> TypeVerdict {
    let full = g.full();
    let mut monotonic = true;
    let mut proper = true;
    let mut strong = true;
    for s in 0..=full {
        let win = g.is_winning(s);
        let comp_win = g.is_winning(g.complement(s));
        if win {
            // Single-player additions suffice by induction on |T \ S|.
            monotonic &= (0..g.carrier).all(|i| g.is_winning(s | (1 << i)));
            proper &= !comp_win;
        } else {
            strong &= comp_win;
        }
    }
    let weak = g.winning == 0 || veto_players(g) != 0;
    TypeVerdict::from_flags(monotonic, proper, strong, weak)
}

/// Intersection of all winning coalitions; the whole carrier when nothing
/// wins.
pub fn veto_players(g: &FiniteGame) -> Mask {
    g.winning().fold(g.full(), |acc, m| acc & m)
}

pub fn is_dictatorial(g: &FiniteGame) -> bool {
    (0..g.carrier).any(|i| (0..=g.full()).all(|m| g.is_winning(m) == ((m >> i) & 1 == 1)))
}

/// The restriction to `carrier` of the game a set of determining strings
/// defines.
pub fn game_from_sets(sets: &DeterminingSets, carrier: usize) -> Result<FiniteGame, Error> {
    if carrier > MAX_CARRIER {
        return Err(Error::CarrierTooLarge {
            carrier,
            bound: MAX_CARRIER,
        });
    }
    if let Some(len) = sets
        .t0
        .iter()
        .chain(sets.t1.iter())
        .map(BitString::len)
        .find(|&l| l > carrier)
    {
        return Err(Error::StringTooLong { len, carrier });
    }
    let report = partition_check(sets, carrier);
    if !(report.pass && report.total) {
        let first = report
            .counterexamples
            .first()
            .map(describe_issue)
            .unwrap_or_default();
        return Err(Error::PartitionFailure(first));
    }
    let mut winning = 0u64;
    for m in 0..(1u32 << carrier) {
        if sets.extends_t1(&mask_to_string(m, carrier)) {
            winning |= 1 << m;
        }
    }
    Ok(FiniteGame::from_bitmap(carrier, winning))
}

/// Every game on `carrier` players, as bitmaps.
pub fn all_games(carrier: usize) -> Result<impl Iterator<Item = FiniteGame>, Error> {
    if carrier > EXHAUSTIVE_CARRIER_BOUND {
        return Err(Error::CarrierTooLarge {
            carrier,
            bound: EXHAUSTIVE_CARRIER_BOUND,
        });
    }
    let count = 1u64 << (1u32 << carrier);
    Ok((0..count).map(move |w| FiniteGame::from_bitmap(carrier, w)))
}

/// Type numbers realized by some game on `carrier` players.
pub fn exhaustive_search(carrier: usize) -> Result<BTreeSet<u8>, Error> {
    Ok(all_games(carrier)?
        .map(|g| analyze_unchecked(&g).type_id)
        .collect())
}

/// Games on `carrier` players that are weak but not proper.
pub fn weak_not_proper(carrier: usize) -> Result<Vec<FiniteGame>, Error> {
    Ok(all_games(carrier)?
        .filter(|g| {
            let v = analyze_unchecked(g);
            v.weak && !v.proper
        })
        .collect())
}

/// Games on `carrier` players where dictatorship and (strong ∧ weak)
/// disagree.
pub fn dictatorial_mismatch(carrier: usize) -> Result<Vec<FiniteGame>, Error> {
    Ok(all_games(carrier)?
        .filter(|g| {
            let v = analyze_unchecked(g);
            is_dictatorial(g) != (v.strong && v.weak)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detgame::{finite_example, FINITE_TYPES};

    fn dictator(carrier: usize, i: usize) -> FiniteGame {
        FiniteGame::new(
            carrier,
            (0..(1u32 << carrier)).filter(|m| (m >> i) & 1 == 1),
        )
        .unwrap()
    }

    #[test]
    fn type_numbering_matches_row_order() {
        assert_eq!(type_id(true, true, true, true), 1);
        assert_eq!(type_id(true, true, true, false), 2);
        assert_eq!(type_id(true, true, false, true), 3);
        assert_eq!(type_id(false, true, true, true), 9);
        assert_eq!(type_id(false, false, false, false), 16);
        for t in 1..=16 {
            let [m, p, s, n] = flags_of_type(t);
            assert_eq!(type_id(m, p, s, n), t);
        }
        assert_eq!(signs_of_type(12), ['-', '+', '-', '-']);
    }

    #[test]
    fn type_one_majority() {
        let g = game_from_sets(&finite_example(1).unwrap(), 3).unwrap();
        let winning: Vec<String> = g
            .winning()
            .map(|m| mask_to_string(m, 3).to_string())
            .collect();
        assert_eq!(winning, ["110", "101", "011", "111"]);
        let v = analyze(&g).unwrap();
        assert_eq!(
            (v.monotonic, v.proper, v.strong, v.weak),
            (true, true, true, false)
        );
        assert_eq!(v.type_id, 1);
        assert_eq!(veto_players(&g), 0);
        assert!(!is_dictatorial(&g));
    }

    use alloc::string::{String, ToString};

    #[test]
    fn dictator_on_one_player() {
        let g = dictator(1, 0);
        let v = analyze(&g).unwrap();
        assert_eq!(v.type_id, 2);
        assert!(v.weak);
        assert_eq!(veto_players(&g), 0b1);
        assert!(is_dictatorial(&g));
        assert_eq!(game_from_sets(&finite_example(2).unwrap(), 1).unwrap(), g);
    }

    #[test]
    fn swapped_dictator_is_type_nine() {
        let g = game_from_sets(&finite_example(9).unwrap(), 1).unwrap();
        assert_eq!(analyze(&g).unwrap().type_id, 9);
    }

    #[test]
    fn empty_game_conventions() {
        let g = FiniteGame::new(3, []).unwrap();
        assert_eq!(veto_players(&g), 0b111);
        assert!(!is_dictatorial(&g));
        assert!(analyze(&g).unwrap().weak);
    }

    #[test]
    fn type_four_unanimity_on_two() {
        let g = game_from_sets(&finite_example(4).unwrap(), 2).unwrap();
        assert_eq!(g.winning().collect::<Vec<_>>(), [0b11]);
    }

    #[test]
    fn finite_examples_realize_their_types() {
        for t in FINITE_TYPES {
            let sets = finite_example(t).unwrap();
            let g = game_from_sets(&sets, sets.max_len()).unwrap();
            assert_eq!(analyze(&g).unwrap().type_id, t, "{g:?}");
        }
    }

    #[test]
    fn one_player_sweep() {
        let types = exhaustive_search(1).unwrap();
        assert_eq!(types.into_iter().collect::<Vec<_>>(), [2, 4, 5, 9]);
    }

    #[test]
    fn carrier_bounds() {
        let g = FiniteGame::new(6, [0]).unwrap();
        assert!(matches!(analyze(&g), Err(Error::CarrierTooLarge { .. })));
        assert!(analyze_bounded(&g, 6).is_ok());
        assert!(exhaustive_search(5).is_err());
        assert!(FiniteGame::new(7, []).is_err());
        assert!(FiniteGame::new(2, [0b100]).is_err());
    }

    #[test]
    fn game_from_sets_rejects_bad_input() {
        let sets = finite_example(1).unwrap();
        assert!(matches!(
            game_from_sets(&sets, 2),
            Err(Error::StringTooLong { .. })
        ));
        let overlap = DeterminingSets::from_lits(&["0"], &["0", "1"]);
        assert!(matches!(
            game_from_sets(&overlap, 1),
            Err(Error::PartitionFailure(_))
        ));
    }

    #[test]
    fn mask_string_round_trip() {
        for m in 0..32 {
            assert_eq!(string_to_mask(&mask_to_string(m, 5)), m);
        }
        assert_eq!(mask_to_string(0b011, 3), BitString::lit("110"));
    }
}
