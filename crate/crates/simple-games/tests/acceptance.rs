//! The nine acceptance criteria, one pass/fail line each. Runs without the
//! test harness so the lines always reach the output.

use std::sync::Arc;
use std::time::{Duration, Instant};

use simple_games::verify::{
    bundle_checks, characterization_checks, containment_check, dictatorial_check, duality_check,
    exception_checks, exhaustive_check, f_incompatible_check, finite_examples_check, omega_games,
    snapshot_incompatible_check, stability_check, stage_summary_check, weak_proper_check,
    witness_checks, Check, VerifyOptions,
};
use simple_games_core::axioms::exhaustive_search;
use simple_games_core::detgame::EMPTY_TYPES;
use simple_games_core::noncomp::NONCOMP_TYPES;
use simple_games_core::variants::{build_variant_on, eval_variant};
use simple_games_core::{SetSpec, Verdict};

struct Outcome {
    criterion: u8,
    passed: bool,
    elapsed: Duration,
    limit: Option<Duration>,
    summary: String,
}

fn judge(criterion: u8, limit: Option<Duration>, run: impl FnOnce() -> Vec<Check>) -> Outcome {
    let start = Instant::now();
    let checks = run();
    let elapsed = start.elapsed();
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let mut summary = format!("{} checks, {} failed", checks.len(), failed.len());
    for c in &failed {
        summary += &format!("; {}: {} {:?}", c.tag, c.detail, c.counterexamples);
    }
    Outcome {
        criterion,
        passed: failed.is_empty() && in_time,
        elapsed,
        limit,
        summary,
    }
}

fn check(tag: &str, ok: bool, detail: String) -> Check {
    Check {
        tag: tag.into(),
        passed: ok,
        counterexamples: if ok { vec![] } else { vec![detail.clone()] },
        detail,
    }
}

fn main() {
    let opts = VerifyOptions::default();
    let secs = Duration::from_secs;
    let mut outcomes = Vec::new();

    outcomes.push(judge(1, Some(secs(1)), || vec![finite_examples_check()]));

    outcomes.push(judge(2, Some(secs(60)), || {
        let mut v = vec![exhaustive_check(3), exhaustive_check(4)];
        let three = exhaustive_search(3).unwrap();
        v.push(check(
            "finite/no-empty-type-on-3",
            EMPTY_TYPES.iter().all(|t| !three.contains(t)),
            format!("{three:?}"),
        ));
        v
    }));

    outcomes.push(judge(3, Some(secs(1)), || {
        vec![weak_proper_check(3), dictatorial_check(3)]
    }));

    let (st, games) = omega_games(&opts);
    outcomes.push(judge(4, Some(secs(120)), || {
        let mut v = vec![
            stage_summary_check(&st, opts.stages),
            f_incompatible_check(&st),
        ];
        for g in &games {
            v.push(snapshot_incompatible_check(g));
            v.push(duality_check(g));
            v.extend(characterization_checks(&st, g, &opts));
        }
        v
    }));

    outcomes.push(judge(5, None, || {
        games
            .iter()
            .map(|g| containment_check(&st, g, 10_000, opts.seed))
            .collect()
    }));

    outcomes.push(judge(6, None, || {
        games.iter().flat_map(|g| witness_checks(&st, g)).collect()
    }));

    outcomes.push(judge(7, None, || {
        let st = Arc::new((*st).clone());
        let mut v = bundle_checks(&st);
        let twelve = build_variant_on(12, st.clone(), None).unwrap();
        let verdict =
            |s: &str| eval_variant(&twelve, &SetSpec::lit(s, false), twelve.max_len() + 2);
        v.push(check(
            "variants/unanimity-branch-coalitions[type=12]",
            verdict("1000") == Verdict::Winning && verdict("1011") == Verdict::Losing,
            format!("1000 {:?}, 1011 {:?}", verdict("1000"), verdict("1011")),
        ));
        let thirteen = build_variant_on(13, st, None).unwrap();
        let pair = SetSpec::lit("11", false);
        let (a, b) = (
            eval_variant(&thirteen, &pair, thirteen.max_len() + 2),
            eval_variant(&thirteen, &pair.complement(), thirteen.max_len() + 2),
        );
        v.push(check(
            "variants/pair-and-complement-win[type=13]",
            a == Verdict::Winning && b == Verdict::Winning,
            format!("{{0,1}} {a:?}, complement {b:?}"),
        ));
        v
    }));

    outcomes.push(judge(8, None, || {
        NONCOMP_TYPES.iter().map(|&t| exception_checks(t)).collect()
    }));

    outcomes.push(judge(9, None, || vec![stability_check(&opts)]));

    for o in &outcomes {
        let limit = o
            .limit
            .map(|l| format!(" (limit {}s)", l.as_secs()))
            .unwrap_or_default();
        println!(
            "criterion {}: {} in {:.2}s{limit}: {}",
            o.criterion,
            if o.passed { "PASS" } else { "FAIL" },
            o.elapsed.as_secs_f64(),
            o.summary
        );
    }
    let failed: Vec<u8> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.criterion)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
