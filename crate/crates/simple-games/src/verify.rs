//! Property suites behind `verify`. Every check is deterministic given the
//! options, and reports appear in a fixed order.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use simple_games_core::axioms::{
    analyze, dictatorial_mismatch, exhaustive_search, game_from_sets, weak_not_proper,
};
use simple_games_core::bitstr::pairwise_incompatible;
use simple_games_core::detgame::{eval, finite_example, Verdict, EMPTY_TYPES, FINITE_TYPES};
use simple_games_core::machine::{MachineCoalition, Numbering};
use simple_games_core::noncomp::{
    base_counterexamples, build_noncomputable, check_noncomputability_precondition, eval_exception,
    transfer_holds, witnesses_finite_cofinite, Mode, NONCOMP_TYPES,
};
use simple_games_core::omega::{
    carrier_escape, carrier_escape_limit, check_extension, check_no_prefix_in_f, compute_stages,
    generate_t, nonweak_witnesses, OmegaGame, Rules, Stages,
};
use simple_games_core::setspec::EvenNumbers;
use simple_games_core::variants::{
    build_variant_on, eval_variant, spot_check_flags, witness, VARIANT_TYPES,
};
use simple_games_core::{BitString, Coalition, DeterminingSets, SetSpec};

use crate::sample;

const MAX_COUNTEREXAMPLES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Finite,
    Omega,
    Variants,
    Noncomp,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "lemmas-finite" => Suite::Finite,
            "lemmas-omega" => Suite::Omega,
            "variants" => Suite::Variants,
            "noncomp" => Suite::Noncomp,
            "all" => Suite::All,
            other => {
                return Err(format!(
                    "unknown suite {other:?} (expected lemmas-finite, lemmas-omega, variants, noncomp or all)"
                ))
            }
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub stages: usize,
    pub budget: u64,
    /// Random trials for each sampled property.
    pub samples: usize,
    pub numbering: Numbering,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            stages: simple_games_core::omega::DEFAULT_STAGES,
            budget: simple_games_core::omega::DEFAULT_BUDGET,
            samples: 10_000,
            numbering: Numbering::Curated,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Stable identifier, `area/property`.
    pub tag: String,
    pub passed: bool,
    pub detail: String,
    pub counterexamples: Vec<String>,
}

impl Check {
    fn new(tag: &str, detail: String, counterexamples: Vec<String>) -> Check {
        Check {
            tag: tag.to_string(),
            passed: counterexamples.is_empty(),
            detail,
            counterexamples,
        }
    }

    fn expect(tag: &str, ok: bool, detail: String) -> Check {
        let cx = if ok { Vec::new() } else { vec![detail.clone()] };
        Check::new(tag, detail, cx)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.tag,
                c.detail
            );
            for x in &c.counterexamples {
                let _ = writeln!(out, "    counterexample: {x}");
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

/// Collects up to [`MAX_COUNTEREXAMPLES`] failures while counting all.
#[derive(Default)]
struct Tally {
    trials: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_COUNTEREXAMPLES {
                self.examples.push(describe());
            }
        }
    }

    fn finish(self, tag: &str, what: &str) -> Check {
        Check::new(
            tag,
            format!("{} {what}, {} failures", self.trials, self.failures),
            self.examples,
        )
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Report {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Finite | Suite::All) {
        checks.extend(finite_suite());
    }
    if matches!(suite, Suite::Omega | Suite::All) {
        checks.extend(omega_suite(opts));
    }
    if matches!(suite, Suite::Variants | Suite::All) {
        checks.extend(variant_suite(opts));
    }
    if matches!(suite, Suite::Noncomp | Suite::All) {
        checks.extend(noncomp_suite(opts));
    }
    Report { checks }
}

pub fn players(n: usize) -> String {
    format!("{n} player{}", if n == 1 { "" } else { "s" })
}

pub fn finite_examples_check() -> Check {
    let mut t = Tally::default();
    for ty in FINITE_TYPES {
        let sets = finite_example(ty).expect("listed type");
        let got = game_from_sets(&sets, sets.max_len())
            .and_then(|g| analyze(&g))
            .map(|v| v.type_id);
        t.record(got == Ok(ty), || {
            format!("type {ty} example classified as {got:?}")
        });
    }
    t.finish("finite/examples-classify", "examples")
}

pub fn exhaustive_check(carrier: usize) -> Check {
    let found = exhaustive_search(carrier).expect("carrier within bound");
    let empty_hit: Vec<u8> = EMPTY_TYPES
        .iter()
        .copied()
        .filter(|t| found.contains(t))
        .collect();
    let mut cx: Vec<String> = empty_hit
        .iter()
        .map(|t| format!("type {t} realized"))
        .collect();
    if carrier >= 4 && found.iter().copied().ne(FINITE_TYPES) {
        cx.push(format!("realized {found:?}"));
    }
    Check::new(
        &format!("finite/exhaustive-{carrier}"),
        format!(
            "{} games on {} realize types {found:?}",
            1u64 << (1u32 << carrier),
            players(carrier)
        ),
        cx,
    )
}

pub fn weak_proper_check(carrier: usize) -> Check {
    let bad = weak_not_proper(carrier).expect("carrier within bound");
    Check::new(
        &format!("finite/weak-implies-proper-{carrier}"),
        format!("all games on {}", players(carrier)),
        bad.iter()
            .take(MAX_COUNTEREXAMPLES)
            .map(|g| format!("{g:?}"))
            .collect(),
    )
}

pub fn dictatorial_check(carrier: usize) -> Check {
    let bad = dictatorial_mismatch(carrier).expect("carrier within bound");
    Check::new(
        &format!("finite/dictatorial-iff-strong-weak-{carrier}"),
        format!("all games on {}", players(carrier)),
        bad.iter()
            .take(MAX_COUNTEREXAMPLES)
            .map(|g| format!("{g:?}"))
            .collect(),
    )
}

fn finite_suite() -> Vec<Check> {
    let mut v = vec![finite_examples_check()];
    for k in 1..=4 {
        v.push(exhaustive_check(k));
    }
    for k in 1..=4 {
        v.push(weak_proper_check(k));
        v.push(dictatorial_check(k));
    }
    let mut t = Tally::default();
    for ty in FINITE_TYPES {
        let sets = finite_example(ty).expect("listed type");
        for carrier in sets.max_len()..=5 {
            let got = game_from_sets(&sets, carrier)
                .and_then(|g| analyze(&g))
                .map(|v| v.type_id);
            t.record(got == Ok(ty), || {
                format!("type {ty} on {} gives {got:?}", players(carrier))
            });
        }
    }
    v.push(t.finish("finite/examples-stable-under-padding", "carriers"));
    v
}

/// The staged games the omega suite runs on.
pub fn omega_games(opts: &VerifyOptions) -> (Arc<Stages>, Vec<OmegaGame>) {
    let st = Arc::new(compute_stages(opts.numbering, opts.stages, opts.budget));
    let games = [SetSpec::empty(), SetSpec::naturals()]
        .into_iter()
        .map(|a| OmegaGame::with_stages(a, st.clone()))
        .collect();
    (st, games)
}

pub fn stage_summary_check(st: &Stages, wanted: usize) -> Check {
    let lens: Vec<usize> = st.stages.iter().map(|x| x.l).collect();
    let detail = format!(
        "{} of {wanted} stages, lengths {lens:?}, shortfall {:?}",
        st.len(),
        st.shortfall
    );
    Check::expect("omega/stages-computed", st.len() == wanted, detail)
}

pub fn f_incompatible_check(st: &Stages) -> Check {
    let r = pairwise_incompatible(st.all_f());
    Check::new(
        "omega/F-pairwise-incompatible",
        format!("{} members of F", st.f_len()),
        r.err()
            .map(|(a, b)| format!("{a} and {b}"))
            .into_iter()
            .collect(),
    )
}

pub fn snapshot_incompatible_check(g: &OmegaGame) -> Check {
    let mut cx: Vec<String> = g
        .snapshot
        .t0
        .intersection(&g.snapshot.t1)
        .map(|x| format!("{x} on both sides"))
        .collect();
    if let Err((a, b)) = pairwise_incompatible(g.snapshot.t0.iter().chain(g.snapshot.t1.iter())) {
        cx.push(format!("{a} and {b}"));
    }
    Check::new(
        &format!("omega/T-pairwise-incompatible[A={}]", g.a),
        format!("{} strings", g.snapshot.t0.len() + g.snapshot.t1.len()),
        cx,
    )
}

pub fn duality_check(g: &OmegaGame) -> Check {
    let mut t = Tally::default();
    for a in &g.snapshot.t0 {
        t.record(g.snapshot.t1.contains(&a.complement()), || {
            format!("{a} in T0 but complement not in T1")
        });
    }
    for a in &g.snapshot.t1 {
        t.record(g.snapshot.t0.contains(&a.complement()), || {
            format!("{a} in T1 but complement not in T0")
        });
    }
    t.finish(&format!("omega/duality[A={}]", g.a), "strings")
}

/// Strings tested at each closed stage length: all of them up to length
/// 12, otherwise an even share of `samples`.
fn strings_at(st: &Stages, l: usize, share: usize, rng: &mut ChaCha8Rng) -> Vec<BitString> {
    if l <= 12 {
        BitString::all_of_length(l)
            .filter(|a| a.starts_with("1"))
            .collect()
    } else {
        (0..share)
            .map(|_| sample::string_near(st, l, rng))
            .collect()
    }
}

fn closed_stages(st: &Stages) -> Vec<usize> {
    (0..st.len())
        .filter(|&s| st.closed_stage_of_length(st.stages[s].l) == Some(s))
        .collect()
}

/// The `F`-prefix criterion and the three-way extension characterization,
/// each compared with direct search.
pub fn characterization_checks(st: &Stages, g: &OmegaGame, opts: &VerifyOptions) -> [Check; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x0707);
    let closed = closed_stages(st);
    let large = closed
        .iter()
        .filter(|&&s| st.stages[s].l > 12)
        .count()
        .max(1);
    let share = opts.samples.div_ceil(large);
    let (mut no_prefix, mut ext) = (Tally::default(), Tally::default());
    for s in closed {
        for a in strings_at(st, st.stages[s].l, share, &mut rng) {
            if a.is_p_string() && a.starts_with("10") {
                match check_no_prefix_in_f(&a, st) {
                    Ok((none, anti)) => no_prefix
                        .record(none == anti, || format!("{a}: search {none}, pins {anti}")),
                    Err(e) => no_prefix.record(false, || format!("{a}: {e}")),
                }
            }
            match check_extension(&a, &g.a, st, &g.snapshot) {
                Ok(r) => ext.record(r.agrees(), || format!("{r:?}")),
                Err(e) => ext.record(false, || format!("{a}: {e}")),
            }
        }
    }
    [
        no_prefix.finish(
            &format!("omega/no-prefix-in-F-iff-anti-pinned[A={}]", g.a),
            "p-strings",
        ),
        ext.finish(
            &format!("omega/extension-characterization[A={}]", g.a),
            "strings",
        ),
    ]
}

pub fn pinned_strings_check(st: &Stages, g: &OmegaGame, opts: &VerifyOptions) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x0909);
    let share = opts.samples.div_ceil(st.len().max(1));
    let mut t = Tally::default();
    for x in &st.stages {
        for a in strings_at(st, x.l, share, &mut rng) {
            let mut bits = a.into_bits();
            bits[2 * x.k as usize] = x.phi;
            let a = BitString::from_bits(bits);
            t.record(g.snapshot.side_of_prefix(&a).is_some(), || {
                format!("{a} at stage {}", x.s)
            });
        }
    }
    t.finish(
        &format!("omega/pinned-strings-decided[A={}]", g.a),
        "strings",
    )
}

/// `α` extends `T1`, `β` properly contains `α`: `β` extends `T1`.
pub fn containment_check(st: &Stages, g: &OmegaGame, trials: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1111);
    let mut t = Tally::default();
    let mut attempts = 0usize;
    while t.trials < trials && attempts < 1000 * trials {
        attempts += 1;
        let l = st.stages[rng.gen_range(0..st.len())].l;
        let a = sample::string_near(st, l, &mut rng);
        if !g.snapshot.extends_t1(&a) {
            continue;
        }
        let extra = rng.gen_range(0..=(st.max_len() - l));
        let mut bits: Vec<bool> = a.bits().iter().map(|&x| x || rng.gen_bool(0.2)).collect();
        bits.extend((0..extra).map(|_| rng.gen_bool(0.5)));
        let b = BitString::from_bits(bits);
        if !a.properly_contained_in(&b) {
            continue;
        }
        t.record(g.snapshot.extends_t1(&b), || format!("{a} -> {b}"));
    }
    let short = t.trials < trials;
    let mut c = t.finish(
        &format!("omega/containment-keeps-winning[A={}]", g.a),
        "pairs",
    );
    if short {
        c.passed = false;
        c.counterexamples
            .push(format!("only {} pairs generated", c.detail));
    }
    c
}

pub fn witness_checks(st: &Stages, g: &OmegaGame) -> [Check; 2] {
    let nonweak = match nonweak_witnesses(st) {
        Ok(w) => {
            let ok = w.all_in(&g.snapshot.t1) && w.intersection_empty();
            Check::expect(
                &format!("omega/nonweak-triple[A={}]", g.a),
                ok,
                format!("{}, {}, {} (from {})", w.w1, w.w2, w.w3, w.source),
            )
        }
        Err(e) => Check::expect(
            &format!("omega/nonweak-triple[A={}]", g.a),
            false,
            e.to_string(),
        ),
    };
    let tag = format!("omega/carrier-escape[A={}]", g.a);
    let escape = match carrier_escape_limit(st) {
        None => Check::expect(&tag, false, "no strict length increase computed".into()),
        Some(limit) => {
            let mut t = Tally::default();
            for l in 1..=limit {
                match carrier_escape(l, st) {
                    Ok(e) => t.record(
                        e.b_prefix.is_prefix_of(&e.win_ext)
                            && e.b_prefix.is_prefix_of(&e.lose_ext)
                            && g.snapshot.t1.contains(&e.win_ext)
                            && g.snapshot.t0.contains(&e.lose_ext),
                        || format!("l = {l}: {e:?}"),
                    ),
                    Err(e) => t.record(false, || format!("l = {l}: {e}")),
                }
            }
            t.finish(&tag, &format!("lengths up to {limit}"))
        }
    };
    [nonweak, escape]
}

/// Coalitions computed by listed programs and containing player 0 are
/// decided by the length of their stage.
pub fn listed_coalitions_check(st: &Stages, g: &OmegaGame, numbering: Numbering) -> Check {
    let mut t = Tally::default();
    let mut skipped = 0;
    for x in &st.stages {
        let c = MachineCoalition::new(numbering, &x.k.into(), 10_000);
        let total = (0..x.l).all(|i| c.bit(i).is_some());
        if !(total && c.bit(0) == Some(true)) {
            skipped += 1;
            continue;
        }
        t.record(eval(&g.snapshot, &c, x.l).is_decided(), || {
            format!("code {} undecided at depth {}", x.k, x.l)
        });
    }
    let mut c = t.finish(
        &format!("omega/listed-coalitions-decided[A={}]", g.a),
        "coalitions",
    );
    c.detail.push_str(&format!(
        " ({skipped} without player 0 or not total, reported only)"
    ));
    c
}

pub fn nesting_check(opts: &VerifyOptions) -> Check {
    let mut t = Tally::default();
    let mut prev: Option<(Stages, DeterminingSets)> = None;
    for cap in 1..=opts.stages {
        let st = compute_stages(opts.numbering, cap, opts.budget);
        let sets = generate_t(&st, &SetSpec::naturals(), &Rules::STANDARD);
        if let Some((pst, psets)) = &prev {
            let same_prefix = st.stages.get(..pst.len()) == Some(&pst.stages[..]);
            t.record(same_prefix && psets.is_subset_of(&sets), || {
                format!("cap {} to {cap}", cap - 1)
            });
        }
        prev = Some((st, sets));
    }
    t.finish("omega/snapshots-nested", "cap increments")
}

fn omega_suite(opts: &VerifyOptions) -> Vec<Check> {
    let (st, games) = omega_games(opts);
    let mut v = vec![
        stage_summary_check(&st, opts.stages),
        f_incompatible_check(&st),
    ];
    for g in &games {
        v.push(snapshot_incompatible_check(g));
        v.push(duality_check(g));
        v.extend(characterization_checks(&st, g, opts));
        v.push(pinned_strings_check(&st, g, opts));
        v.push(containment_check(&st, g, opts.samples, opts.seed));
        v.extend(witness_checks(&st, g));
        v.push(listed_coalitions_check(&st, g, opts.numbering));
    }
    v.push(nesting_check(opts));
    v.push(stability_check(opts));
    v
}

pub fn bundle_checks(st: &Arc<Stages>) -> Vec<Check> {
    VARIANT_TYPES
        .iter()
        .map(|&t| {
            let g = build_variant_on(t, st.clone(), None).expect("variant type");
            let w = witness(&g);
            let mut cx: Vec<String> = w
                .checks
                .iter()
                .filter(|c| !c.status.is_verified())
                .map(|c| format!("{}: {:?}", c.axiom, c.status))
                .collect();
            if !w.covers_negative_flags() {
                cx.push(format!(
                    "negative flags {:?} not all certified",
                    w.negative_flags()
                ));
            }
            let detail = w
                .checks
                .iter()
                .map(|c| {
                    format!(
                        "{} {}",
                        c.axiom,
                        if c.status.is_verified() {
                            "verified"
                        } else {
                            "open"
                        }
                    )
                })
                .collect::<Vec<_>>()
                .join(", ");
            Check::new(&format!("variants/witnesses[type={t}]"), detail, cx)
        })
        .collect()
}

fn variant_suite(opts: &VerifyOptions) -> Vec<Check> {
    let st = Arc::new(compute_stages(opts.numbering, opts.stages, opts.budget));
    let mut v = bundle_checks(&st);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x3333);
    let coalitions: Vec<SetSpec> = (0..400).map(|_| sample::coalition(&st, &mut rng)).collect();
    for t in VARIANT_TYPES {
        let g = build_variant_on(t, st.clone(), None).expect("variant type");
        let verdict = |s: &SetSpec| eval_variant(&g, s, g.depth_for(s));
        let bad = spot_check_flags(&verdict, t, &coalitions);
        v.push(Check::new(
            &format!("variants/positive-flags-sampled[type={t}]"),
            format!("{} coalitions", coalitions.len()),
            bad.iter()
                .take(MAX_COUNTEREXAMPLES)
                .map(|b| format!("{} fails on {:?}", b.axiom, b.coalitions))
                .collect(),
        ));
        if let Some(sets) = g.sets() {
            let mut cx: Vec<String> = sets
                .t0
                .intersection(&sets.t1)
                .map(|x| format!("{x} on both sides"))
                .collect();
            if let Err((a, b)) = pairwise_incompatible(sets.t0.iter().chain(sets.t1.iter())) {
                cx.push(format!("{a} and {b}"));
            }
            v.push(Check::new(
                &format!("variants/prefix-free[type={t}]"),
                format!("{} strings", sets.t0.len() + sets.t1.len()),
                cx,
            ));
        }
    }
    let original = generate_t(&st, &SetSpec::naturals(), &Rules::STANDARD);
    let shifted = build_variant_on(4, st.clone(), None).expect("variant type");
    let sets = shifted.sets().expect("generated");
    let strip =
        |s: &std::collections::BTreeSet<BitString>| -> std::collections::BTreeSet<BitString> {
            s.iter()
                .filter(|x| x.starts_with("1"))
                .map(|x| BitString::from_bits(x.bits()[1..].to_vec()))
                .collect()
        };
    v.push(Check::expect(
        "variants/leading-one-correspondence[type=4]",
        strip(&sets.t0) == original.t0 && strip(&sets.t1) == original.t1,
        "1*β in T_i iff β in the original T_i".into(),
    ));
    let evens = generate_t(&st, &EvenNumbers, &Rules::STANDARD);
    let seven = build_variant_on(7, st.clone(), None).expect("variant type");
    let sets = seven.sets().expect("generated");
    let d = |s: &std::collections::BTreeSet<BitString>| {
        s.iter()
            .filter(|x| x.is_d_string())
            .cloned()
            .collect::<Vec<_>>()
    };
    v.push(Check::expect(
        "variants/d-strings-preserved[type=7]",
        d(&sets.t0) == d(&evens.t0) && d(&sets.t1) == d(&evens.t1),
        "d-strings of T0 and T1 match the even-parameter original".into(),
    ));
    let twelve = build_variant_on(12, st.clone(), None).expect("variant type");
    let sets = twelve.sets().expect("generated");
    let mut t = Tally::default();
    for s in BitString::all_of_length(4) {
        let hits = sets.prefixes_in(&s).len();
        let inside = s.starts_with("1010") || s.starts_with("1001");
        t.record(if inside { hits <= 1 } else { hits == 1 }, || {
            format!("{s} has {hits} determining prefixes")
        });
    }
    v.push(t.finish(
        "variants/short-strings-covered[type=12]",
        "strings of length 4",
    ));
    v
}

pub fn exception_checks(t: u8) -> Check {
    let g = build_noncomputable(t).expect("listed type");
    let d = g.depth() + 2;
    let mut cx = Vec::new();
    if eval_exception(&g, &g.a, d) != Verdict::Winning {
        cx.push(format!("A = {} not winning", g.a));
    }
    if g.mode == Mode::Standard && eval_exception(&g, &g.a.complement(), d) != Verdict::Losing {
        cx.push(format!("A^c = {} not losing", g.a.complement()));
    }
    let w = witnesses_finite_cofinite(&g);
    if w.finite_winning.is_infinite()
        || eval_exception(&g, &w.finite_winning, d) != Verdict::Winning
    {
        cx.push(format!("finite winning witness {} fails", w.finite_winning));
    }
    if w.cofinite_losing.complement().is_infinite()
        || eval_exception(&g, &w.cofinite_losing, d) != Verdict::Losing
    {
        cx.push(format!(
            "cofinite losing witness {} fails",
            w.cofinite_losing
        ));
    }
    let pre = check_noncomputability_precondition(&g);
    if !pre {
        cx.push("noncomputability precondition fails".into());
    }
    Check::new(
        &format!("noncomp/exception-game[type={t}]"),
        format!(
            "A = {}, mode {}, finite winning {}, cofinite losing {}, precondition {pre}",
            g.a,
            crate::format::mode_name(g.mode),
            w.finite_winning,
            w.cofinite_losing
        ),
        cx,
    )
}

fn noncomp_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut v: Vec<Check> = NONCOMP_TYPES.iter().map(|&t| exception_checks(t)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5555);
    for t in NONCOMP_TYPES {
        let g = build_noncomputable(t).expect("listed type");
        let mut tally = Tally::default();
        for _ in 0..opts.samples.min(2000) {
            let s = if rng.gen_bool(0.1) {
                g.a.clone()
            } else {
                sample::small_coalition(6, &mut rng)
            };
            let d = g.depth();
            let v = eval_exception(&g, &s, d);
            let expected = if s == g.a {
                Verdict::Winning
            } else if g.mode == Mode::Standard && s == g.a.complement() {
                Verdict::Losing
            } else {
                eval(&g.base, &s, d)
            };
            tally.record(v == expected && v.is_decided(), || {
                format!("{s}: {v:?}, expected {expected:?}")
            });
        }
        v.push(tally.finish(
            &format!("noncomp/agrees-off-exceptions[type={t}]"),
            "coalitions",
        ));
        let mut tally = Tally::default();
        for c in base_counterexamples(&g).expect("finite base") {
            tally.record(transfer_holds(&g, &c) != Some(false), || format!("{c:?}"));
        }
        v.push(tally.finish(
            &format!("noncomp/base-counterexamples-transfer[type={t}]"),
            "counterexamples",
        ));
    }
    v
}

/// One game of the stability check, rebuilt at every stage cap.
enum Family {
    Omega(SetSpec),
    Variant(u8),
    Exception(u8),
}

/// Random (game, coalition) queries replayed along a chain of growing
/// (stage cap, depth) budgets: a decided verdict never changes.
pub fn stability_check(opts: &VerifyOptions) -> Check {
    let caps: Vec<Arc<Stages>> = (1..=opts.stages)
        .map(|c| Arc::new(compute_stages(opts.numbering, c, opts.budget)))
        .collect();
    let mut families: Vec<Family> = vec![
        Family::Omega(SetSpec::empty()),
        Family::Omega(SetSpec::naturals()),
        Family::Omega(SetSpec::lit("0110", true)),
    ];
    families.extend(VARIANT_TYPES.iter().map(|&t| Family::Variant(t)));
    families.extend(NONCOMP_TYPES.iter().map(|&t| Family::Exception(t)));
    let games: Vec<Vec<crate::format::BuiltGame>> = families
        .iter()
        .map(|f| {
            caps.iter()
                .map(|st| match f {
                    Family::Omega(a) => crate::format::BuiltGame::Omega(OmegaGame::with_stages(
                        a.clone(),
                        st.clone(),
                    )),
                    Family::Variant(t) => crate::format::BuiltGame::Variant(
                        build_variant_on(*t, st.clone(), None).expect("type"),
                    ),
                    Family::Exception(t) => {
                        crate::format::BuiltGame::Exception(build_noncomputable(*t).expect("type"))
                    }
                })
                .collect()
        })
        .collect();
    let full = caps.last().expect("at least one cap").clone();
    let max_depth = full.max_len() + 2;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9999);
    let mut t = Tally::default();
    let mut resolved = 0usize;
    for _ in 0..opts.samples {
        let gi = rng.gen_range(0..games.len());
        let machine = rng.gen_bool(0.1);
        let set = sample::coalition(&full, &mut rng);
        let code = rng.gen_range(1..=20u64);
        let mc = MachineCoalition::new(opts.numbering, &code.into(), 10_000);
        let (mut cap, mut depth) = (0usize, 0usize);
        let mut prev = Verdict::Undetermined;
        let mut history = Vec::new();
        loop {
            let g = &games[gi][cap];
            let v = if machine {
                g.eval_stream(&mc, depth)
            } else {
                g.eval_set(&set, depth)
            };
            history.push((cap + 1, depth, v));
            if !prev.consistent_refinement(v) {
                break;
            }
            prev = v;
            if cap + 1 == caps.len() && depth >= max_depth {
                break;
            }
            if cap + 1 < caps.len() && (depth >= max_depth || rng.gen_bool(0.5)) {
                cap += 1;
            } else {
                depth = (depth + rng.gen_range(1..=4)).min(max_depth);
            }
        }
        let ok = history
            .windows(2)
            .all(|w| w[0].2.consistent_refinement(w[1].2));
        if ok && history.first().map(|h| h.2) == Some(Verdict::Undetermined) && prev.is_decided() {
            resolved += 1;
        }
        let who = if machine {
            format!("code {code}")
        } else {
            set.to_string()
        };
        t.record(ok, || format!("game #{gi}, {who}: {history:?}"));
    }
    let mut c = t.finish("stability/verdicts-never-flip", "queries");
    c.detail
        .push_str(&format!(", {resolved} resolved from undetermined"));
    c
}
