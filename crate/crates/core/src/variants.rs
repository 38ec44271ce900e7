//! Infinite computable games for the remaining nonempty types, built by
//! changing the generator rules of the staged construction or by combining
//! `ω[∅]` and `ω[ℕ]`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::axioms::flags_of_type;
use crate::bitstr::BitString;
use crate::detgame::{eval, DeterminingSets, Game, Verdict};
use crate::error::Error;
use crate::machine::Numbering;
use crate::omega::{compute_stages, generate_t, nonweak_witnesses, Mirror, Rules, Stages};
use crate::setspec::{Coalition, EvenNumbers, RecursiveSet, SetSpec};

pub const VARIANT_TYPES: [u8; 9] = [3, 4, 5, 7, 9, 11, 12, 13, 15];

const LONG_PREFIX: &[&str] = &["1010", "1001"];

/// The rule table of a generated variant, or `None` for the two composites.
pub fn variant_rules(type_id: u8) -> Result<Option<Rules>, Error> {
    let std = Rules::STANDARD;
    Ok(Some(match type_id {
        3 | 5 => return Ok(None),
        4 => Rules {
            extra_t0: &["0"],
            shift_one: true,
            ..std
        },
        7 => Rules {
            member_with_complement: true,
            mirror: Mirror::PrefixRuleOnly,
            ..std
        },
        9 => Rules {
            empty_prefix: false,
            extra_t1: &["00"],
            ..std
        },
        11 => Rules {
            empty_prefix: false,
            extra_t0: &["00", "11"],
            mirror_exempt: &["00", "11"],
            ..std
        },
        12 => Rules {
            prefix_filter: LONG_PREFIX,
            extra_t0: &["1011", "0"],
            extra_t1: &["11", "1000"],
            mirror: Mirror::None,
            ..std
        },
        13 => Rules {
            empty_prefix: false,
            extra_t1: &["00", "11"],
            mirror_exempt: &["00", "11"],
            ..std
        },
        15 => Rules {
            prefix_filter: LONG_PREFIX,
            extra_t0: &["00", "1000", "0111"],
            extra_t1: &["11", "1011", "0100"],
            mirror_exempt: &["00", "11", "1000", "0111", "1011", "0100"],
            ..std
        },
        t => return Err(Error::UnknownType(t)),
    }))
}

/// The set `A` a generated variant is built over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parameter {
    Set(SetSpec),
    Evens,
}

impl RecursiveSet for Parameter {
    fn contains(&self, n: u64) -> bool {
        match self {
            Parameter::Set(s) => s.contains(n),
            Parameter::Evens => EvenNumbers.contains(n),
        }
    }
}

impl core::fmt::Display for Parameter {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Parameter::Set(s) => write!(f, "{s}"),
            Parameter::Evens => f.write_str("evens"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Generated {
        a: Parameter,
        sets: DeterminingSets,
    },
    /// `ω[∅] ∩ ω[ℕ]`.
    Intersection {
        empty: DeterminingSets,
        full: DeterminingSets,
    },
    /// `ω[∅] ∪ ω[ℕ]`.
    Union {
        empty: DeterminingSets,
        full: DeterminingSets,
    },
}

#[derive(Clone, Debug)]
pub struct VariantGame {
    pub type_id: u8,
    pub stages: Arc<Stages>,
    pub body: Body,
}

/// Builds the variant of `type_id` over freshly computed stages.
pub fn build_variant(
    type_id: u8,
    numbering: Numbering,
    stage_cap: usize,
    budget: u64,
) -> Result<VariantGame, Error> {
    variant_rules(type_id)?;
    build_variant_on(
        type_id,
        Arc::new(compute_stages(numbering, stage_cap, budget)),
        None,
    )
}

/// Builds the variant over existing stages. `a` overrides the parameter of
/// the generated variants whose construction leaves it free (default `ℕ`).
pub fn build_variant_on(
    type_id: u8,
    stages: Arc<Stages>,
    a: Option<SetSpec>,
) -> Result<VariantGame, Error> {
    let body = match variant_rules(type_id)? {
        None => {
            let empty = generate_t(&stages, &SetSpec::empty(), &Rules::STANDARD);
            let full = generate_t(&stages, &SetSpec::naturals(), &Rules::STANDARD);
            if type_id == 3 {
                Body::Intersection { empty, full }
            } else {
                Body::Union { empty, full }
            }
        }
        Some(rules) => {
            let a = match type_id {
                7 => Parameter::Evens,
                12 => Parameter::Set(SetSpec::naturals()),
                _ => Parameter::Set(a.unwrap_or_else(SetSpec::naturals)),
            };
            let sets = generate_t(&stages, &a, &rules);
            Body::Generated { a, sets }
        }
    };
    Ok(VariantGame {
        type_id,
        stages,
        body,
    })
}

impl VariantGame {
    /// Longest determining string in the snapshot(s).
    pub fn max_len(&self) -> usize {
        match &self.body {
            Body::Generated { sets, .. } => sets.max_len(),
            Body::Intersection { empty, full } | Body::Union { empty, full } => {
                empty.max_len().max(full.max_len())
            }
        }
    }

    /// The determining sets of a generated variant.
    pub fn sets(&self) -> Option<&DeterminingSets> {
        match &self.body {
            Body::Generated { sets, .. } => Some(sets),
            _ => None,
        }
    }

    /// A depth that decides every eventually constant coalition the
    /// snapshot can decide.
    pub fn depth_for(&self, s: &SetSpec) -> usize {
        self.max_len().max(s.settled_after()) + 1
    }
}

pub fn eval_variant(g: &VariantGame, coalition: &dyn Coalition, depth: usize) -> Verdict {
    match &g.body {
        Body::Generated { sets, .. } => eval(sets, coalition, depth),
        Body::Intersection { empty, full } => {
            eval(empty, coalition, depth).and(eval(full, coalition, depth))
        }
        Body::Union { empty, full } => {
            eval(empty, coalition, depth).or(eval(full, coalition, depth))
        }
    }
}

impl Game for VariantGame {
    fn eval(&self, coalition: &dyn Coalition, depth: usize) -> Verdict {
        eval_variant(self, coalition, depth)
    }
}

/// A claim certifying one axiom flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `smaller ⊆ larger`, `smaller` winning, `larger` losing.
    NonMonotonic { smaller: SetSpec, larger: SetSpec },
    /// The coalition and its complement are both winning.
    NonProper { coalition: SetSpec },
    /// The coalition and its complement are both losing.
    NonStrong { coalition: SetSpec },
    /// Every winning determining string contains the player.
    Veto { player: usize },
    /// Winning coalitions with empty intersection.
    NonWeak { coalitions: Vec<SetSpec> },
}

impl Certificate {
    pub fn axiom(&self) -> &'static str {
        match self {
            Certificate::NonMonotonic { .. } => "nonmonotonic",
            Certificate::NonProper { .. } => "nonproper",
            Certificate::NonStrong { .. } => "nonstrong",
            Certificate::Veto { .. } => "weak",
            Certificate::NonWeak { .. } => "nonweak",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Verified,
    Failed(String),
    /// The witness has not surfaced within the computed stages.
    Undetermined(String),
}

impl CheckStatus {
    pub fn is_verified(&self) -> bool {
        *self == CheckStatus::Verified
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedCertificate {
    /// `None` when the witness could not be formed.
    pub certificate: Option<Certificate>,
    pub axiom: &'static str,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessBundle {
    pub type_id: u8,
    pub checks: Vec<CheckedCertificate>,
}

impl WitnessBundle {
    pub fn all_verified(&self) -> bool {
        self.checks.iter().all(|c| c.status.is_verified())
    }

    /// Axioms the type fails, each of which must carry a verified
    /// certificate.
    pub fn negative_flags(&self) -> Vec<&'static str> {
        negative_axioms(self.type_id)
    }

    pub fn covers_negative_flags(&self) -> bool {
        self.negative_flags().iter().all(|ax| {
            self.checks
                .iter()
                .any(|c| c.axiom == *ax && c.status.is_verified())
        })
    }
}

/// The names of the axioms failed by `type_id` (`"weak"` when the game is
/// weak rather than nonweak).
pub fn negative_axioms(type_id: u8) -> Vec<&'static str> {
    let [m, p, s, nw] = flags_of_type(type_id);
    let mut out = Vec::new();
    if !m {
        out.push("nonmonotonic");
    }
    if !p {
        out.push("nonproper");
    }
    if !s {
        out.push("nonstrong");
    }
    if !nw {
        out.push("weak");
    }
    out
}

fn coalition_of(s: &BitString) -> SetSpec {
    SetSpec::new(s.clone(), false)
}

/// Checks a certificate against the game's snapshot.
pub fn check_certificate(g: &VariantGame, c: &Certificate) -> CheckStatus {
    let verdict = |s: &SetSpec| eval_variant(g, s, g.depth_for(s));
    let expect = |s: &SetSpec, want: Verdict| -> Result<(), String> {
        match verdict(s) {
            v if v == want => Ok(()),
            Verdict::Undetermined => Err(format!("{s} undetermined")),
            v => Err(format!("{s} is {v:?}, expected {want:?}")),
        }
    };
    let result = match c {
        Certificate::NonMonotonic { smaller, larger } => {
            if !smaller.is_subset_of(larger) {
                Err(format!("{smaller} is not a subset of {larger}"))
            } else {
                expect(smaller, Verdict::Winning).and_then(|_| expect(larger, Verdict::Losing))
            }
        }
        Certificate::NonProper { coalition } => expect(coalition, Verdict::Winning)
            .and_then(|_| expect(&coalition.complement(), Verdict::Winning)),
        Certificate::NonStrong { coalition } => expect(coalition, Verdict::Losing)
            .and_then(|_| expect(&coalition.complement(), Verdict::Losing)),
        Certificate::Veto { player } => match g.sets() {
            None => Err("veto check needs a generated snapshot".into()),
            Some(sets) if sets.t1.is_empty() => Err("no winning determining strings".into()),
            Some(sets) => match sets.t1.iter().find(|b| b.bit(*player) != Some(true)) {
                Some(b) => Err(format!("{b} in T1 excludes player {player}")),
                None => Ok(()),
            },
        },
        Certificate::NonWeak { coalitions } => {
            let meet = coalitions
                .iter()
                .skip(1)
                .fold(coalitions[0].clone(), |acc, s| acc.intersection(s));
            if meet != SetSpec::empty() {
                Err(format!("intersection {meet} is nonempty"))
            } else {
                coalitions
                    .iter()
                    .try_for_each(|s| expect(s, Verdict::Winning))
            }
        }
    };
    match result {
        Ok(()) => CheckStatus::Verified,
        Err(e) if e.ends_with("undetermined") => CheckStatus::Undetermined(e),
        Err(e) => CheckStatus::Failed(e),
    }
}

fn first_f(stages: &Stages, pred: impl Fn(u64) -> bool) -> Result<BitString, String> {
    stages
        .all_f()
        .find(|a| stages.f_index(a).is_some_and(&pred))
        .cloned()
        .ok_or_else(|| format!("no suitable member of F among {} stages", stages.len()))
}

/// Nonweak triple for the types whose `T1` keeps the `11` and the
/// `α⁻⁻ * 11` / `(α^c)⁻⁻ * 11` pair of the standard construction.
fn standard_triple(stages: &Stages) -> Result<Certificate, String> {
    let w = nonweak_witnesses(stages).map_err(|e| format!("{e}"))?;
    Ok(Certificate::NonWeak {
        coalitions: [w.w1, w.w2, w.w3].iter().map(coalition_of).collect(),
    })
}

/// Triple avoiding `11`: a winning `β = B[l_{t+1} − 2] * 11` plus the pair
/// produced at a later increase.
fn shifted_triple(stages: &Stages) -> Result<Certificate, String> {
    let mut inc = stages.increases();
    let (Some(t), Some(s)) = (inc.next(), inc.next()) else {
        return Err("fewer than two strict length increases computed".into());
    };
    let head_t = stages
        .b_sequence(stages.stages[t + 1].l - 2)
        .ok_or("B not computed")?;
    let head_s = stages
        .b_sequence(stages.stages[s + 1].l - 2)
        .ok_or("B not computed")?;
    let beta = head_t.with_suffix("11");
    let second = head_s.with_suffix("11");
    let third = head_s.complement().with_suffix("11");
    Ok(Certificate::NonWeak {
        coalitions: [beta, second, third].iter().map(coalition_of).collect(),
    })
}

/// Certificates for every negative flag of the type, plus a nonweakness
/// certificate where the type is nonweak, each checked against the
/// snapshot.
pub fn witness(g: &VariantGame) -> WitnessBundle {
    let st = &g.stages;
    let singleton_0 = SetSpec::lit("1", false);
    let singleton_1 = SetSpec::lit("01", false);
    let pair_01 = SetSpec::lit("11", false);
    let set_of = |a: &BitString| SetSpec::new(a.clone(), false);
    let mut claims: Vec<(&'static str, Result<Certificate, String>)> = Vec::new();
    let evens = |n: u64| n.is_multiple_of(2);
    match g.type_id {
        3 => {
            claims.push((
                "nonstrong",
                first_f(st, |_| true).map(|a| Certificate::NonStrong {
                    coalition: set_of(&a),
                }),
            ));
            claims.push(("nonweak", standard_triple(st)));
        }
        4 => {
            claims.push((
                "nonstrong",
                Ok(Certificate::NonStrong {
                    coalition: singleton_0,
                }),
            ));
            claims.push(("weak", Ok(Certificate::Veto { player: 0 })));
        }
        5 => {
            let a = first_f(st, |_| true);
            claims.push((
                "nonproper",
                a.clone().map(|a| Certificate::NonProper {
                    coalition: set_of(&a),
                }),
            ));
            claims.push((
                "nonweak",
                a.map(|a| Certificate::NonWeak {
                    coalitions: Vec::from([set_of(&a), set_of(&a).complement()]),
                }),
            ));
        }
        7 => {
            let even = first_f(st, evens);
            claims.push((
                "nonproper",
                even.clone().map(|a| Certificate::NonProper {
                    coalition: set_of(&a),
                }),
            ));
            claims.push((
                "nonstrong",
                first_f(st, |n| !evens(n)).map(|a| Certificate::NonStrong {
                    coalition: set_of(&a),
                }),
            ));
            claims.push((
                "nonweak",
                even.map(|a| Certificate::NonWeak {
                    coalitions: Vec::from([set_of(&a), set_of(&a).complement()]),
                }),
            ));
        }
        9 => {
            claims.push((
                "nonmonotonic",
                Ok(Certificate::NonMonotonic {
                    smaller: SetSpec::empty(),
                    larger: SetSpec::naturals(),
                }),
            ));
            claims.push((
                "nonweak",
                Ok(Certificate::NonWeak {
                    coalitions: Vec::from([SetSpec::empty()]),
                }),
            ));
        }
        11 => {
            let triple = shifted_triple(st);
            let beta = triple.as_ref().map_err(Clone::clone).map(|c| match c {
                Certificate::NonWeak { coalitions } => coalitions[0].clone(),
                _ => unreachable!(),
            });
            claims.push((
                "nonmonotonic",
                beta.map(|b| Certificate::NonMonotonic {
                    smaller: b,
                    larger: SetSpec::naturals(),
                }),
            ));
            claims.push((
                "nonstrong",
                Ok(Certificate::NonStrong { coalition: pair_01 }),
            ));
            claims.push(("nonweak", triple));
        }
        12 => {
            claims.push((
                "nonmonotonic",
                Ok(Certificate::NonMonotonic {
                    smaller: singleton_0,
                    larger: SetSpec::lit("1011", false),
                }),
            ));
            claims.push((
                "nonstrong",
                Ok(Certificate::NonStrong {
                    coalition: singleton_1,
                }),
            ));
            claims.push(("weak", Ok(Certificate::Veto { player: 0 })));
        }
        13 => {
            let losing = g
                .sets()
                .and_then(|s| {
                    s.t0.iter()
                        .find(|b| b.len() > 2 && b.ones().next().is_some())
                        .cloned()
                })
                .ok_or_else(|| "no losing determining string with a member".into());
            claims.push((
                "nonmonotonic",
                losing.map(|b| Certificate::NonMonotonic {
                    smaller: SetSpec::empty(),
                    larger: set_of(&b),
                }),
            ));
            claims.push((
                "nonproper",
                Ok(Certificate::NonProper {
                    coalition: pair_01.clone(),
                }),
            ));
            claims.push((
                "nonweak",
                Ok(Certificate::NonWeak {
                    coalitions: Vec::from([SetSpec::empty()]),
                }),
            ));
        }
        15 => {
            claims.push((
                "nonmonotonic",
                Ok(Certificate::NonMonotonic {
                    smaller: singleton_1.clone(),
                    larger: SetSpec::lit("0111", false),
                }),
            ));
            claims.push((
                "nonproper",
                Ok(Certificate::NonProper {
                    coalition: singleton_1.clone(),
                }),
            ));
            claims.push((
                "nonstrong",
                Ok(Certificate::NonStrong {
                    coalition: singleton_0,
                }),
            ));
            claims.push((
                "nonweak",
                Ok(Certificate::NonWeak {
                    coalitions: Vec::from([singleton_1.clone(), singleton_1.complement()]),
                }),
            ));
        }
        _ => {}
    }
    let checks = claims
        .into_iter()
        .map(|(axiom, c)| match c {
            Ok(c) => CheckedCertificate {
                status: check_certificate(g, &c),
                certificate: Some(c),
                axiom,
            },
            Err(e) => CheckedCertificate {
                certificate: None,
                axiom,
                status: CheckStatus::Undetermined(e),
            },
        })
        .collect();
    WitnessBundle {
        type_id: g.type_id,
        checks,
    }
}

/// A sampled coalition pair or coalition contradicting a positive flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagViolation {
    pub axiom: &'static str,
    pub coalitions: Vec<SetSpec>,
}

/// Tests the positive axiom flags of `type_id` on the given coalitions:
/// monotonicity on every subset pair, properness and strongness on each
/// coalition and its complement. Undetermined verdicts are skipped.
pub fn spot_check_flags(
    verdict: &dyn Fn(&SetSpec) -> Verdict,
    type_id: u8,
    coalitions: &[SetSpec],
) -> Vec<FlagViolation> {
    let [m, p, s, _] = flags_of_type(type_id);
    let verdicts: Vec<(Verdict, Verdict)> = coalitions
        .iter()
        .map(|c| (verdict(c), verdict(&c.complement())))
        .collect();
    let mut out = Vec::new();
    for (i, c) in coalitions.iter().enumerate() {
        let (v, vc) = verdicts[i];
        if p && v == Verdict::Winning && vc == Verdict::Winning {
            out.push(FlagViolation {
                axiom: "proper",
                coalitions: Vec::from([c.clone()]),
            });
        }
        if s && v == Verdict::Losing && vc == Verdict::Losing {
            out.push(FlagViolation {
                axiom: "strong",
                coalitions: Vec::from([c.clone()]),
            });
        }
        if m && v == Verdict::Winning {
            for (j, d) in coalitions.iter().enumerate() {
                if verdicts[j].0 == Verdict::Losing && c.is_subset_of(d) {
                    out.push(FlagViolation {
                        axiom: "monotonic",
                        coalitions: Vec::from([c.clone(), d.clone()]),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::{DEFAULT_BUDGET, DEFAULT_STAGES};

    fn stages() -> Arc<Stages> {
        Arc::new(compute_stages(
            Numbering::Curated,
            DEFAULT_STAGES,
            DEFAULT_BUDGET,
        ))
    }

    fn b(s: &str) -> BitString {
        BitString::lit(s)
    }

    #[test]
    fn invalid_types_are_rejected() {
        for t in [0, 1, 2, 6, 8, 10, 14, 16, 17] {
            assert_eq!(variant_rules(t).unwrap_err(), Error::UnknownType(t));
        }
    }

    #[test]
    fn extra_strings_land_where_listed() {
        let st = stages();
        let sets = |t| {
            build_variant_on(t, st.clone(), None)
                .unwrap()
                .sets()
                .unwrap()
                .clone()
        };
        assert!(sets(4).t0.contains(&b("0")));
        let nine = sets(9);
        assert!(nine.t1.contains(&b("00")) && nine.t0.contains(&b("11")));
        assert!(!nine.t1.contains(&b("11")) && !nine.t0.contains(&b("00")));
        let fifteen = sets(15);
        assert!(fifteen.t1.contains(&b("1011")) && fifteen.t1.contains(&b("0100")));
        let eleven = sets(11);
        assert!(eleven.t0.contains(&b("00")) && eleven.t0.contains(&b("11")));
        let thirteen = sets(13);
        assert!(thirteen.t1.contains(&b("00")) && thirteen.t1.contains(&b("11")));
    }

    #[test]
    fn composite_examples() {
        let st = stages();
        let three = build_variant_on(3, st.clone(), None).unwrap();
        assert_eq!(
            eval_variant(&three, &SetSpec::naturals(), 2),
            Verdict::Winning
        );
        let five = build_variant_on(5, st.clone(), None).unwrap();
        let alpha = st.stages[0].f[0].clone();
        let s = SetSpec::new(alpha, false);
        assert_eq!(
            eval_variant(&five, &s, five.depth_for(&s)),
            Verdict::Winning
        );
        let twelve = build_variant_on(12, st, None).unwrap();
        assert_eq!(
            eval_variant(&twelve, &SetSpec::lit("0", true), 4),
            Verdict::Losing
        );
    }

    #[test]
    fn every_bundle_covers_its_negative_flags() {
        let st = stages();
        for t in VARIANT_TYPES {
            let g = build_variant_on(t, st.clone(), None).unwrap();
            let w = witness(&g);
            assert!(w.all_verified(), "type {t}: {w:?}");
            assert!(w.covers_negative_flags(), "type {t}: {w:?}");
        }
    }

    #[test]
    fn too_few_stages_leave_triples_undetermined() {
        let st = Arc::new(compute_stages(Numbering::Curated, 1, DEFAULT_BUDGET));
        let g = build_variant_on(11, st, None).unwrap();
        let w = witness(&g);
        assert!(w
            .checks
            .iter()
            .any(|c| matches!(c.status, CheckStatus::Undetermined(_))));
    }

    #[test]
    fn negative_axiom_names() {
        assert_eq!(negative_axioms(12), ["nonmonotonic", "nonstrong", "weak"]);
        assert_eq!(negative_axioms(3), ["nonstrong"]);
        assert!(negative_axioms(1).is_empty());
    }
}
