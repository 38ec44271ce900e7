//! The staged computable game `ω[A]`.
//!
//! Stage `s` takes the `s`-th admissible code `k_s` (one with
//! `φ_{k_s}(2k_s) ∈ {0, 1}`), the length `l_s = max(l_{s-1}, 2k_s + 2)`, and
//! the set `F_s` of p-strings of length `l_s` extending `10` that agree with
//! `φ_{k_s}(2k_s)` at position `2k_s` and disagree with `φ_{k_t}(2k_t)` at
//! `2k_t` for every earlier stage `t`. Numbering `F = ⋃ F_s` stage by stage
//! (lexicographically inside a stage) gives the bijection `f`.
//!
//! The determining sets are then generated from `F`:
//!
//! * for each `α ∈ F_s` and each p-string proper prefix `α'` of `α` with
//!   `|α'| ≥ l_{s-1}` (any length when `s = 0`), `α' * 11` goes to `T1` and
//!   `α' * 00` to `T0`;
//! * `α` itself goes to `T1` if `f(α) ∈ A` and to `T0` otherwise;
//! * the complement of everything above goes to the opposite side.
//!
//! The variant games reuse this generator with a modified [`Rules`] table.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bitstr::BitString;
use crate::detgame::{eval, DeterminingSets, Game, Verdict};
use crate::error::Error;
use crate::machine::{Dovetail, Numbering};
use crate::setspec::{Coalition, RecursiveSet, SetSpec};

/// Largest `F_s` that will be materialized.
pub const STAGE_SIZE_CAP: usize = 1 << 20;
pub const DEFAULT_STAGES: usize = 10;
pub const DEFAULT_BUDGET: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageData {
    pub s: usize,
    pub k: u64,
    /// `φ_{k_s}(2k_s)`.
    pub phi: bool,
    pub l: usize,
    /// `F_s`, sorted lexicographically.
    pub f: Vec<BitString>,
    /// `f` of the first member of `F_s`.
    pub f_offset: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shortfall {
    /// The dovetailer ran out of steps.
    Budget { steps_used: u64 },
    /// The next stage's `F_s` was too large to materialize.
    StageSize { stage: usize, size: u128 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stages {
    pub numbering: Numbering,
    pub stages: Vec<StageData>,
    /// Why fewer stages than requested were computed, if they were.
    pub shortfall: Option<Shortfall>,
}

/// Computes up to `s_max` stages, spending at most `budget` interpreter
/// steps on the dovetailed enumeration.
pub fn compute_stages(numbering: Numbering, s_max: usize, budget: u64) -> Stages {
    let mut dovetail = Dovetail::new(numbering);
    dovetail.run_until(s_max, budget);
    let mut stages: Vec<StageData> = Vec::new();
    let mut shortfall = None;
    let mut offset = 0u64;
    for (s, adm) in dovetail.found().iter().take(s_max).enumerate() {
        let l = match stages.last() {
            None => 2 * adm.k() + 2,
            Some(prev) => prev.l.max(2 * adm.k() + 2),
        };
        let pins = pins_through(&stages, adm.code, adm.value);
        let free = (l / 2).saturating_sub(1 + pins.len());
        let size = 1u128 << free.min(127);
        if free >= 127 || size > STAGE_SIZE_CAP as u128 {
            shortfall = Some(Shortfall::StageSize { stage: s, size });
            break;
        }
        let f = stage_members(l, &pins);
        let len = f.len() as u64;
        stages.push(StageData {
            s,
            k: adm.code,
            phi: adm.value,
            l,
            f,
            f_offset: offset,
        });
        offset += len;
    }
    if shortfall.is_none() && stages.len() < s_max {
        shortfall = Some(Shortfall::Budget {
            steps_used: dovetail.steps_used(),
        });
    }
    Stages {
        numbering,
        stages,
        shortfall,
    }
}

trait AdmissibleExt {
    fn k(&self) -> usize;
}

impl AdmissibleExt for crate::machine::Admissible {
    fn k(&self) -> usize {
        self.code as usize
    }
}

/// Pinned pair bits `(pair index, α(2·index))` for a stage with code `k`
/// and value `phi` following `earlier`.
fn pins_through(earlier: &[StageData], k: u64, phi: bool) -> Vec<(usize, bool)> {
    let mut pins: Vec<(usize, bool)> = earlier.iter().map(|st| (st.k as usize, !st.phi)).collect();
    pins.push((k as usize, phi));
    pins
}

/// All p-strings of length `l` extending `10` with the given pair pins, in
/// lexicographic order.
fn stage_members(l: usize, pins: &[(usize, bool)]) -> Vec<BitString> {
    let pairs = l / 2;
    let mut fixed: Vec<Option<bool>> = alloc::vec![None; pairs];
    fixed[0] = Some(true);
    for &(j, b) in pins {
        fixed[j] = Some(b);
    }
    let free: Vec<usize> = (0..pairs).filter(|&j| fixed[j].is_none()).collect();
    let n = free.len();
    (0u64..(1u64 << n))
        .map(|v| {
            let mut firsts = fixed.clone();
            for (idx, &j) in free.iter().enumerate() {
                firsts[j] = Some((v >> (n - 1 - idx)) & 1 == 1);
            }
            let mut bits = Vec::with_capacity(l);
            for b in firsts {
                let b = b.expect("every pair assigned");
                bits.push(b);
                bits.push(!b);
            }
            BitString::from_bits(bits)
        })
        .collect()
}

impl Stages {
    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    pub fn get(&self, s: usize) -> Option<&StageData> {
        self.stages.get(s)
    }

    pub fn max_len(&self) -> usize {
        self.stages.last().map_or(0, |st| st.l)
    }

    /// Total number of `F` members across computed stages.
    pub fn f_len(&self) -> u64 {
        self.stages
            .last()
            .map_or(0, |st| st.f_offset + st.f.len() as u64)
    }

    pub fn all_f(&self) -> impl Iterator<Item = &BitString> {
        self.stages.iter().flat_map(|st| st.f.iter())
    }

    /// Whether `alpha ∈ F_s`, decided from the pins rather than the list.
    pub fn in_stage(&self, alpha: &BitString, s: usize) -> bool {
        let Some(st) = self.stages.get(s) else {
            return false;
        };
        alpha.len() == st.l
            && alpha.is_p_string()
            && alpha.bit(0) == Some(true)
            && self.stages[..s]
                .iter()
                .all(|t| alpha.bit(2 * t.k as usize) == Some(!t.phi))
            && alpha.bit(2 * st.k as usize) == Some(st.phi)
    }

    pub fn in_f(&self, alpha: &BitString) -> bool {
        self.stages
            .iter()
            .any(|st| st.l == alpha.len() && self.in_stage(alpha, st.s))
    }

    /// `f(α)`: defined exactly on `F`.
    pub fn f_index(&self, alpha: &BitString) -> Option<u64> {
        self.stages
            .iter()
            .filter(|st| st.l == alpha.len())
            .find_map(|st| {
                st.f.binary_search(alpha)
                    .ok()
                    .map(|pos| st.f_offset + pos as u64)
            })
    }

    /// Inverse of [`Stages::f_index`].
    pub fn f_member(&self, n: u64) -> Option<&BitString> {
        self.stages
            .iter()
            .find(|st| n >= st.f_offset && n < st.f_offset + st.f.len() as u64)
            .map(|st| &st.f[(n - st.f_offset) as usize])
    }

    /// No initial segment of `x` is in `F` (among the computed stages).
    pub fn no_prefix_in_f(&self, x: &BitString) -> bool {
        self.stages
            .iter()
            .all(|st| st.l > x.len() || !self.in_stage(&x.prefix(st.l), st.s))
    }

    /// The largest stage with `l_s = len`, provided a later stage with a
    /// longer length has been computed (so no further members of length
    /// `len` can appear).
    pub fn closed_stage_of_length(&self, len: usize) -> Option<usize> {
        let last = self.stages.iter().rposition(|st| st.l == len)?;
        (last + 1 < self.stages.len()).then_some(last)
    }

    /// Stages `s` with `l_{s+1} > l_s`, both computed.
    pub fn increases(&self) -> impl Iterator<Item = usize> + '_ {
        self.stages
            .windows(2)
            .filter(|w| w[1].l > w[0].l)
            .map(|w| w[0].s)
    }

    /// The anti-diagonal p-string sequence `B ⊇ 10` with
    /// `B(2k_t) = 1 − φ_{k_t}(2k_t)` at every computed stage and `10` in
    /// every other pair, cut to length `len`. Only defined up to the
    /// longest computed stage length.
    pub fn b_sequence(&self, len: usize) -> Option<BitString> {
        if len > self.max_len() {
            return None;
        }
        let pairs = len.div_ceil(2);
        let mut firsts = alloc::vec![true; pairs];
        for st in &self.stages {
            if (st.k as usize) < pairs {
                firsts[st.k as usize] = !st.phi;
            }
        }
        let bits: Vec<bool> = firsts.into_iter().flat_map(|b| [b, !b]).take(len).collect();
        Some(BitString::from_bits(bits))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mirror {
    /// Complement everything enumerated into the opposite side.
    All,
    /// Complement only the strings produced by the prefix rule.
    PrefixRuleOnly,
    None,
}

/// Rule table for the generator. [`Rules::STANDARD`] is `ω[A]`; each
/// variant type changes a few fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rules {
    /// Whether the prefix rule fires for the empty prefix.
    pub empty_prefix: bool,
    /// When nonempty, the prefix rule only fires for prefixes extending one
    /// of these.
    pub prefix_filter: &'static [&'static str],
    pub extra_t0: &'static [&'static str],
    pub extra_t1: &'static [&'static str],
    /// Put `α^c` on the same side as `α` in the membership rule.
    pub member_with_complement: bool,
    pub mirror: Mirror,
    /// Strings never complemented by the mirror rule.
    pub mirror_exempt: &'static [&'static str],
    /// Prepend `1` to every generated string and place the extras
    /// unmirrored afterwards.
    pub shift_one: bool,
}

impl Rules {
    pub const STANDARD: Rules = Rules {
        empty_prefix: true,
        prefix_filter: &[],
        extra_t0: &[],
        extra_t1: &[],
        member_with_complement: false,
        mirror: Mirror::All,
        mirror_exempt: &[],
        shift_one: false,
    };
}

/// Enumerates `T0` and `T1` over all computed stages.
pub fn generate_t(stages: &Stages, a: &dyn RecursiveSet, rules: &Rules) -> DeterminingSets {
    let mut prefix_t0: BTreeSet<BitString> = BTreeSet::new();
    let mut prefix_t1: BTreeSet<BitString> = BTreeSet::new();
    let mut other = DeterminingSets::default();
    for (s, st) in stages.stages.iter().enumerate() {
        let from = if s == 0 { 0 } else { stages.stages[s - 1].l };
        let mut seen: BTreeSet<&[bool]> = BTreeSet::new();
        for alpha in &st.f {
            for m in (from..st.l).step_by(2) {
                let p = &alpha.bits()[..m];
                if !seen.insert(p) {
                    continue;
                }
                let p = BitString::from_bits(p.to_vec());
                if m == 0 && !rules.empty_prefix {
                    continue;
                }
                if !rules.prefix_filter.is_empty()
                    && !rules.prefix_filter.iter().any(|f| p.starts_with(f))
                {
                    continue;
                }
                prefix_t1.insert(p.with_suffix("11"));
                prefix_t0.insert(p.with_suffix("00"));
            }
        }
        for (i, alpha) in st.f.iter().enumerate() {
            let side = if a.contains(st.f_offset + i as u64) {
                &mut other.t1
            } else {
                &mut other.t0
            };
            side.insert(alpha.clone());
            if rules.member_with_complement {
                side.insert(alpha.complement());
            }
        }
    }
    if !rules.shift_one {
        other
            .t0
            .extend(rules.extra_t0.iter().map(|s| BitString::lit(s)));
        other
            .t1
            .extend(rules.extra_t1.iter().map(|s| BitString::lit(s)));
    }
    let exempt = |b: &BitString| rules.mirror_exempt.iter().any(|e| BitString::lit(e) == *b);
    let mirror_into = |src: &BTreeSet<BitString>, dst: &mut BTreeSet<BitString>| {
        dst.extend(src.iter().filter(|b| !exempt(b)).map(BitString::complement));
    };
    let mut sets = DeterminingSets::default();
    match rules.mirror {
        Mirror::All => {
            mirror_into(&prefix_t1, &mut sets.t0);
            mirror_into(&prefix_t0, &mut sets.t1);
            mirror_into(&other.t1, &mut sets.t0);
            mirror_into(&other.t0, &mut sets.t1);
        }
        Mirror::PrefixRuleOnly => {
            mirror_into(&prefix_t1, &mut sets.t0);
            mirror_into(&prefix_t0, &mut sets.t1);
        }
        Mirror::None => {}
    }
    sets.t0.extend(prefix_t0);
    sets.t1.extend(prefix_t1);
    sets.t0.extend(other.t0);
    sets.t1.extend(other.t1);
    if rules.shift_one {
        sets.t0 = sets
            .t0
            .into_iter()
            .map(|b| b.with_prefix_bit(true))
            .collect();
        sets.t1 = sets
            .t1
            .into_iter()
            .map(|b| b.with_prefix_bit(true))
            .collect();
        sets.t0
            .extend(rules.extra_t0.iter().map(|s| BitString::lit(s)));
        sets.t1
            .extend(rules.extra_t1.iter().map(|s| BitString::lit(s)));
    }
    sets
}

/// `ω[A]` as far as its stages have been computed.
#[derive(Clone, Debug)]
pub struct OmegaGame {
    pub a: SetSpec,
    pub stages: Arc<Stages>,
    pub snapshot: DeterminingSets,
}

impl OmegaGame {
    pub fn new(numbering: Numbering, a: SetSpec, stage_cap: usize, budget: u64) -> Self {
        let stages = Arc::new(compute_stages(numbering, stage_cap, budget));
        OmegaGame::with_stages(a, stages)
    }

    pub fn with_stages(a: SetSpec, stages: Arc<Stages>) -> Self {
        let snapshot = generate_t(&stages, &a, &Rules::STANDARD);
        OmegaGame {
            a,
            stages,
            snapshot,
        }
    }
}

pub fn eval_omega(game: &OmegaGame, coalition: &dyn Coalition, depth: usize) -> Verdict {
    eval(&game.snapshot, coalition, depth)
}

impl Game for OmegaGame {
    fn eval(&self, coalition: &dyn Coalition, depth: usize) -> Verdict {
        eval_omega(self, coalition, depth)
    }
}

/// Both sides of the three equivalences describing which strings of length
/// `l_s` extend a determining string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub alpha: BitString,
    pub stage: usize,
    pub extends_t1: bool,
    pub member_in_a: bool,
    pub d_string_11: bool,
    pub extends_t0: bool,
    pub member_not_in_a: bool,
    pub d_string_00: bool,
    /// `α` is a p-string with no initial segment in `F`.
    pub free_p_string: bool,
}

impl ExtensionReport {
    pub fn agrees(&self) -> bool {
        self.extends_t1 == (self.member_in_a || self.d_string_11)
            && self.extends_t0 == (self.member_not_in_a || self.d_string_00)
            && (!self.extends_t1 && !self.extends_t0) == self.free_p_string
    }
}

/// Compares the characterization of "`α` extends a string in `T1` / `T0` /
/// neither" against direct search in the snapshot of `ω[A]`. `α` must extend
/// `1` and have a closed stage length.
pub fn check_extension(
    alpha: &BitString,
    a: &dyn RecursiveSet,
    stages: &Stages,
    snapshot: &DeterminingSets,
) -> Result<ExtensionReport, Error> {
    if alpha.bit(0) != Some(true) {
        return Err(Error::BadBitString(alloc::format!(
            "{alpha} does not extend 1"
        )));
    }
    let s = stages
        .closed_stage_of_length(alpha.len())
        .ok_or(Error::NotAStageLength(alpha.len()))?;
    let members = stages.stages[..=s]
        .iter()
        .filter_map(|st| stages.f_index(&alpha.prefix(st.l)))
        .collect::<Vec<_>>();
    let d_string = |pair: bool| {
        (0..alpha.len().saturating_sub(1)).step_by(2).any(|j| {
            let head = alpha.prefix(j);
            alpha.bit(j) == Some(pair)
                && alpha.bit(j + 1) == Some(pair)
                && head.is_p_string()
                && stages.no_prefix_in_f(&head)
        })
    };
    Ok(ExtensionReport {
        alpha: alpha.clone(),
        stage: s,
        extends_t1: snapshot.extends_t1(alpha),
        member_in_a: members.iter().any(|&n| a.contains(n)),
        d_string_11: d_string(true),
        extends_t0: snapshot.extends_t0(alpha),
        member_not_in_a: members.iter().any(|&n| !a.contains(n)),
        d_string_00: d_string(false),
        free_p_string: alpha.is_p_string() && stages.no_prefix_in_f(alpha),
    })
}

/// For a p-string `α ⊇ 10` of closed stage length `l_s`: returns
/// ("no prefix of α is in F", "α anti-agrees with every `φ_{k_t}(2k_t)`,
/// `t ≤ s`"). The two should be equal.
pub fn check_no_prefix_in_f(alpha: &BitString, stages: &Stages) -> Result<(bool, bool), Error> {
    if !(alpha.is_p_string() && alpha.starts_with("10")) {
        return Err(Error::BadBitString(alloc::format!(
            "{alpha} is not a p-string extending 10"
        )));
    }
    let s = stages
        .closed_stage_of_length(alpha.len())
        .ok_or(Error::NotAStageLength(alpha.len()))?;
    let anti = stages.stages[..=s]
        .iter()
        .all(|t| alpha.bit(2 * t.k as usize) == Some(!t.phi));
    let none = stages.stages[..=s]
        .iter()
        .all(|t| stages.f_index(&alpha.prefix(t.l)).is_none());
    Ok((none, anti))
}

/// Three strings of `T1` whose coalitions have empty intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonweakWitness {
    pub w1: BitString,
    pub w2: BitString,
    pub w3: BitString,
    /// The member of `F_{s+1}` that produced `w2` and `w3`.
    pub source: BitString,
}

impl NonweakWitness {
    pub fn intersection_empty(&self) -> bool {
        let n = self.w1.len().max(self.w2.len()).max(self.w3.len());
        (0..n).all(|i| {
            !(self.w1.bit(i) == Some(true)
                && self.w2.bit(i) == Some(true)
                && self.w3.bit(i) == Some(true))
        })
    }

    pub fn all_in(&self, t1: &BTreeSet<BitString>) -> bool {
        t1.contains(&self.w1) && t1.contains(&self.w2) && t1.contains(&self.w3)
    }
}

/// Extensions of `B[l_s]` through the member of `F_{s+1}` that follows `B`,
/// for a stage `s` with `l_{s+1} > l_s`: `(α⁻⁻ * 11, α⁻⁻ * 00, α)`.
fn escape_at(stages: &Stages, s: usize) -> Option<(BitString, BitString, BitString)> {
    let next = stages.stages.get(s + 1)?;
    if next.l <= stages.stages[s].l {
        return None;
    }
    let head = stages.b_sequence(next.l - 2)?;
    let alpha = head.with_suffix(if next.phi { "10" } else { "01" });
    debug_assert!(stages.in_stage(&alpha, s + 1));
    Some((head.with_suffix("11"), head.with_suffix("00"), alpha))
}

pub fn nonweak_witnesses(stages: &Stages) -> Result<NonweakWitness, Error> {
    let s = stages.increases().next().ok_or_else(|| {
        Error::InsufficientStages(alloc::format!(
            "no l_(s+1) > l_s among {} stages",
            stages.len()
        ))
    })?;
    let (win, lose, source) = escape_at(stages, s).expect("increase found");
    Ok(NonweakWitness {
        w1: BitString::lit("11"),
        w2: win,
        w3: lose.complement(),
        source,
    })
}

/// Extensions of `B[l]` that are winning and losing determining.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarrierEscape {
    pub l: usize,
    pub b_prefix: BitString,
    pub win_ext: BitString,
    pub lose_ext: BitString,
    pub source: BitString,
}

pub fn carrier_escape(l: usize, stages: &Stages) -> Result<CarrierEscape, Error> {
    let s = stages
        .increases()
        .find(|&s| stages.stages[s].l >= l)
        .ok_or_else(|| {
            Error::InsufficientStages(alloc::format!(
                "no computed increase at or beyond length {l}"
            ))
        })?;
    let (win_ext, lose_ext, source) = escape_at(stages, s).expect("increase found");
    Ok(CarrierEscape {
        l,
        b_prefix: stages.b_sequence(l).expect("l below computed lengths"),
        win_ext,
        lose_ext,
        source,
    })
}

/// Largest `l` for which [`carrier_escape`] can succeed.
pub fn carrier_escape_limit(stages: &Stages) -> Option<usize> {
    stages.increases().last().map(|s| stages.stages[s].l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stages() -> Stages {
        compute_stages(Numbering::Curated, DEFAULT_STAGES, DEFAULT_BUDGET)
    }

    #[test]
    fn stage_lengths_follow_the_recurrence() {
        let st = stages();
        assert!(st.shortfall.is_none());
        assert_eq!(st.stages[0].l, 2 * st.stages[0].k as usize + 2);
        assert!(st.stages[0].l >= 4);
        for w in st.stages.windows(2) {
            assert_eq!(w[1].l, w[0].l.max(2 * w[1].k as usize + 2));
        }
        for (s, x) in st.stages.iter().enumerate() {
            assert_eq!(x.l % 2, 0);
            for y in &st.stages[..=s] {
                assert!(x.l > 2 * y.k as usize + 1);
            }
        }
    }

    #[test]
    fn first_stage_has_two_to_the_k_minus_one_members() {
        let st = stages();
        let s0 = &st.stages[0];
        assert_eq!(s0.f.len() as u64, 1 << (s0.k - 1));
    }

    #[test]
    fn equal_length_stage_exists_in_curated_run() {
        let st = stages();
        let w = st
            .stages
            .windows(2)
            .find(|w| 2 * w[1].k as usize + 2 <= w[0].l)
            .expect("non-increase");
        assert_eq!(w[1].l, w[0].l);
    }

    #[test]
    fn members_satisfy_the_pins() {
        let st = stages();
        for x in &st.stages {
            for alpha in &x.f {
                assert!(alpha.is_p_string() && alpha.starts_with("10"));
                assert_eq!(alpha.len(), x.l);
                assert!(st.in_stage(alpha, x.s));
            }
            assert!(x.f.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn f_is_a_bijection_onto_an_initial_segment() {
        let st = stages();
        let mut seen = Vec::new();
        for alpha in st.all_f() {
            seen.push(st.f_index(alpha).unwrap());
        }
        let n = seen.len() as u64;
        assert_eq!(seen, (0..n).collect::<Vec<_>>());
        assert_eq!(st.f_len(), n);
        assert_eq!(st.f_index(&st.stages[0].f[0]), Some(0));
        for i in 0..n {
            assert_eq!(st.f_index(st.f_member(i).unwrap()), Some(i));
        }
        assert_eq!(st.f_index(&BitString::lit("0110")), None);
        assert_eq!(st.f_index(&BitString::lit("1010")), None);
    }

    #[test]
    fn standard_numbering_is_too_large_to_materialize() {
        let st = compute_stages(Numbering::Standard, 1, DEFAULT_BUDGET);
        assert!(
            matches!(st.shortfall, Some(Shortfall::StageSize { stage: 0, .. })),
            "{:?}",
            st.shortfall
        );
    }

    #[test]
    fn small_budget_truncates() {
        let st = compute_stages(Numbering::Curated, 10, 30);
        assert!(st.len() < 10);
        assert!(matches!(st.shortfall, Some(Shortfall::Budget { .. })));
    }

    #[test]
    fn snapshot_basics() {
        let st = stages();
        for a in [SetSpec::empty(), SetSpec::naturals()] {
            let t = generate_t(&st, &a, &Rules::STANDARD);
            assert!(t.t1.contains(&BitString::lit("11")));
            assert!(t.t0.contains(&BitString::lit("00")));
            assert!(t.t0.is_disjoint(&t.t1));
            for alpha in &st.stages[0].f {
                let n = st.f_index(alpha).unwrap();
                let (here, there) = if a.contains(n) {
                    (&t.t1, &t.t0)
                } else {
                    (&t.t0, &t.t1)
                };
                assert!(here.contains(alpha));
                assert!(there.contains(&alpha.complement()));
            }
        }
    }

    #[test]
    fn b_sequence_is_anti_diagonal() {
        let st = stages();
        let b = st.b_sequence(st.max_len()).unwrap();
        assert!(b.is_p_string() && b.starts_with("10"));
        for x in &st.stages {
            assert_eq!(b.bit(2 * x.k as usize), Some(!x.phi));
        }
        assert!(st.b_sequence(st.max_len() + 2).is_none());
    }
}
