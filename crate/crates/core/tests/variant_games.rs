//! Variant snapshots compared against the standard construction they modify.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simple_games_core::bitstr::pairwise_incompatible;
use simple_games_core::machine::Numbering;
use simple_games_core::omega::{
    compute_stages, generate_t, OmegaGame, Rules, Stages, DEFAULT_BUDGET, DEFAULT_STAGES,
};
use simple_games_core::setspec::EvenNumbers;
use simple_games_core::variants::{
    build_variant, build_variant_on, eval_variant, spot_check_flags, witness, Certificate,
    CheckStatus, VARIANT_TYPES,
};
use simple_games_core::{BitString, SetSpec, Verdict};

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
fn generated_variants_are_prefix_free() {
    let st = stages();
    for t in VARIANT_TYPES {
        let g = build_variant_on(t, st.clone(), None).unwrap();
        if let Some(sets) = g.sets() {
            assert!(sets.t0.is_disjoint(&sets.t1), "type {t}");
            let all = sets.t0.iter().chain(sets.t1.iter());
            assert!(pairwise_incompatible(all).is_ok(), "type {t}");
        }
    }
}

#[test]
fn shifted_variant_mirrors_the_original_under_a_leading_one() {
    let st = stages();
    let original = generate_t(&st, &SetSpec::naturals(), &Rules::STANDARD);
    let g = build_variant_on(4, st, None).unwrap();
    let sets = g.sets().unwrap();
    for (shifted, plain) in [(&sets.t0, &original.t0), (&sets.t1, &original.t1)] {
        let stripped: std::collections::BTreeSet<BitString> = shifted
            .iter()
            .filter(|x| x.starts_with("1"))
            .map(|x| BitString::from_bits(x.bits()[1..].to_vec()))
            .collect();
        assert_eq!(&stripped, plain);
    }
    assert_eq!(
        sets.t0
            .iter()
            .filter(|x| x.starts_with("0"))
            .collect::<Vec<_>>(),
        [&b("0")]
    );
}

#[test]
fn even_parameter_variant_keeps_the_original_d_strings() {
    let st = stages();
    let original = generate_t(&st, &EvenNumbers, &Rules::STANDARD);
    let g = build_variant_on(7, st, None).unwrap();
    let sets = g.sets().unwrap();
    let d = |s: &std::collections::BTreeSet<BitString>| {
        s.iter()
            .filter(|x| x.is_d_string())
            .cloned()
            .collect::<Vec<_>>()
    };
    assert_eq!(d(&sets.t0), d(&original.t0));
    assert_eq!(d(&sets.t1), d(&original.t1));
    let p = |a: &std::collections::BTreeSet<BitString>,
             c: &std::collections::BTreeSet<BitString>| {
        a.iter()
            .chain(c.iter())
            .filter(|x| x.is_p_string())
            .cloned()
            .collect::<std::collections::BTreeSet<_>>()
    };
    assert_eq!(p(&sets.t0, &sets.t1), p(&original.t0, &original.t1));
}

#[test]
fn unanimity_variant_covers_every_short_string_outside_its_branches() {
    let st = stages();
    let g = build_variant_on(12, st, None).unwrap();
    let sets = g.sets().unwrap();
    for s in BitString::all_of_length(4) {
        if s.starts_with("1010") || s.starts_with("1001") {
            assert!(sets.prefixes_in(&s).len() <= 1, "{s}");
        } else {
            assert_eq!(sets.prefixes_in(&s).len(), 1, "{s}");
        }
    }
}

#[test]
fn composites_sit_between_their_parts() {
    let st = stages();
    let empty = OmegaGame::with_stages(SetSpec::empty(), st.clone());
    let full = OmegaGame::with_stages(SetSpec::naturals(), st.clone());
    let meet = build_variant_on(3, st.clone(), None).unwrap();
    let join = build_variant_on(5, st.clone(), None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let depth = st.max_len() + 1;
    for _ in 0..2000 {
        let c = random_coalition(&st, &mut rng);
        let (e, f) = (
            empty.snapshot.eval(&c, depth),
            full.snapshot.eval(&c, depth),
        );
        let (m, j) = (
            eval_variant(&meet, &c, depth),
            eval_variant(&join, &c, depth),
        );
        if m == Verdict::Winning {
            assert!(e == Verdict::Winning && f == Verdict::Winning);
        }
        if j == Verdict::Losing {
            assert!(e == Verdict::Losing && f == Verdict::Losing);
        }
        if e.is_decided() && f.is_decided() {
            assert!(m.is_decided() && j.is_decided());
        }
    }
}

trait EvalExt {
    fn eval(&self, c: &SetSpec, depth: usize) -> Verdict;
}

impl EvalExt for simple_games_core::DeterminingSets {
    fn eval(&self, c: &SetSpec, depth: usize) -> Verdict {
        simple_games_core::detgame::eval(self, c, depth)
    }
}

/// Coalitions near the members of `F` and the short special strings.
fn random_coalition(st: &Stages, rng: &mut ChaCha8Rng) -> SetSpec {
    let len = rng.gen_range(0..=st.max_len());
    let mut bits: Vec<bool> = match rng.gen_range(0..3) {
        0 => (0..len).map(|_| rng.gen_bool(0.5)).collect(),
        1 => {
            let f: Vec<&BitString> = st.all_f().collect();
            f[rng.gen_range(0..f.len())].bits().to_vec()
        }
        _ => st.b_sequence(len).unwrap().into_bits(),
    };
    for x in bits.iter_mut() {
        if rng.gen_bool(0.05) {
            *x = !*x;
        }
    }
    if rng.gen_bool(0.5) {
        bits = bits.into_iter().map(|x| !x).collect();
    }
    SetSpec::new(BitString::from_bits(bits), rng.gen_bool(0.5))
}

#[test]
fn positive_flags_hold_on_sampled_coalitions() {
    let st = stages();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let coalitions: Vec<SetSpec> = (0..400).map(|_| random_coalition(&st, &mut rng)).collect();
    for t in VARIANT_TYPES {
        let g = build_variant_on(t, st.clone(), None).unwrap();
        let verdict = |s: &SetSpec| eval_variant(&g, s, g.depth_for(s));
        let bad = spot_check_flags(&verdict, t, &coalitions);
        assert!(bad.is_empty(), "type {t}: {:?}", &bad[..bad.len().min(3)]);
    }
}

#[test]
fn bundles_name_the_expected_coalitions() {
    let st = stages();
    let twelve = witness(&build_variant_on(12, st.clone(), None).unwrap());
    assert!(twelve.checks.iter().any(|c| c.certificate
        == Some(Certificate::NonMonotonic {
            smaller: SetSpec::lit("1", false),
            larger: SetSpec::lit("1011", false)
        })));
    let thirteen = witness(&build_variant_on(13, st.clone(), None).unwrap());
    assert!(thirteen.checks.iter().any(|c| c.certificate
        == Some(Certificate::NonProper {
            coalition: SetSpec::lit("11", false)
        })));
    let four = witness(&build_variant_on(4, st, None).unwrap());
    assert!(four
        .checks
        .iter()
        .any(|c| c.certificate == Some(Certificate::Veto { player: 0 })));
    for w in [twelve, thirteen, four] {
        assert!(w.checks.iter().all(|c| c.status == CheckStatus::Verified));
    }
}

#[test]
fn a_forged_certificate_fails() {
    let g = build_variant_on(12, stages(), None).unwrap();
    let forged = Certificate::NonProper {
        coalition: SetSpec::lit("1", false),
    };
    assert!(matches!(
        simple_games_core::variants::check_certificate(&g, &forged),
        CheckStatus::Failed(_)
    ));
}

#[test]
fn build_from_scratch_matches_shared_stages() {
    for t in [3, 9] {
        let a = build_variant(t, Numbering::Curated, 4, DEFAULT_BUDGET).unwrap();
        let st = Arc::new(compute_stages(Numbering::Curated, 4, DEFAULT_BUDGET));
        let b = build_variant_on(t, st, None).unwrap();
        assert_eq!(a.body, b.body);
    }
    assert!(build_variant(2, Numbering::Curated, 4, DEFAULT_BUDGET).is_err());
}
