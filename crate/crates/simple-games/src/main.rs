use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use simple_games::format::{
    mode_name, parse_coalition, parse_setspec, program_mnemonics, BuildOptions, BuiltCoalition,
    FiniteGameJson, GameSpec, SetSpecJson, SnapshotJson,
};
use simple_games::table;
use simple_games::verify::{run_suite, Suite, VerifyOptions};
use simple_games_core::axioms::{analyze, game_from_sets, TypeVerdict};
use simple_games_core::machine::{index_of, run, CodeNumber, Numbering};
use simple_games_core::noncomp::{
    build_noncomputable, check_noncomputability_precondition, witnesses_finite_cofinite,
};
use simple_games_core::omega::{
    carrier_escape, carrier_escape_limit, compute_stages, nonweak_witnesses, OmegaGame, Shortfall,
    Stages, DEFAULT_BUDGET, DEFAULT_STAGES,
};
use simple_games_core::variants::{build_variant_on, witness, Body, CheckStatus, WitnessBundle};
use simple_games_core::{DeterminingSets, SetSpec, Verdict};

#[derive(Parser)]
#[command(
    name = "simple-games",
    version,
    about = "Simple games: classification, staged constructions and checks"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of stages of the staged construction.
    #[arg(long, global = true, default_value_t = DEFAULT_STAGES)]
    stages: usize,
    /// Step budget for the admissible-program search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = NumberingArg::Curated)]
    numbering: NumberingArg,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum NumberingArg {
    Curated,
    Standard,
}

impl From<NumberingArg> for Numbering {
    fn from(n: NumberingArg) -> Numbering {
        match n {
            NumberingArg::Curated => Numbering::Curated,
            NumberingArg::Standard => Numbering::Standard,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Axiom flags and type of a finite game ({"carrier":..,"winning":[..]} or a finite game spec).
    Classify {
        #[arg(long)]
        game: Option<PathBuf>,
        /// Carrier size for a game given by determining strings.
        #[arg(long)]
        carrier: Option<usize>,
    },
    /// Evaluate a coalition (PREFIX:TAIL or coalition JSON) in a game spec.
    Eval {
        coalition: String,
        #[arg(long)]
        game: Option<PathBuf>,
        /// Longest segment read; defaults to two past the longest determining string.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Determining sets of the staged game with parameter A.
    #[command(name = "gen-T")]
    GenT {
        #[arg(long = "A", default_value = ":1")]
        a: String,
    },
    /// Snapshot and witness bundle of a variant construction.
    Variant {
        #[arg(long = "type")]
        type_id: u8,
    },
    /// An exception game, its finite and cofinite witnesses, and the precondition verdict.
    Noncomp {
        #[arg(long = "type")]
        type_id: u8,
    },
    /// Witnesses extracted from the staged game.
    Witness {
        #[arg(value_enum)]
        kind: WitnessKind,
        #[arg(long = "A", default_value = ":1")]
        a: String,
        /// Carrier length for `carrier`; every length up to the limit when absent.
        #[arg(long)]
        carrier: Option<usize>,
    },
    /// The existence table for all sixteen types.
    Table {
        /// Largest carrier for exhaustive search (at most 4).
        #[arg(long, default_value_t = 4)]
        carrier: usize,
    },
    /// Run a verification suite: lemmas-finite, lemmas-omega, variants, noncomp or all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Decode a code number into a program and run it on small inputs, or find the index of a set.
    Program {
        /// Code number to decode.
        code: Option<String>,
        /// Eventually constant set whose program index is printed.
        #[arg(long)]
        set: Option<String>,
        /// Number of inputs to run.
        #[arg(long, default_value_t = 16)]
        inputs: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    Nonweak,
    Carrier,
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            Ok(s)
        }
    }
}

fn stages_of(c: &Common) -> Arc<Stages> {
    Arc::new(compute_stages(c.numbering.into(), c.stages, c.budget))
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Winning => "winning",
        Verdict::Losing => "losing",
        Verdict::Undetermined => "undetermined",
    }
}

fn emit(json: bool, value: Value, text: String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable")
        );
    } else {
        print!("{text}");
    }
}

fn stage_json(st: &Stages) -> Value {
    let rows: Vec<Value> = st
        .stages
        .iter()
        .map(|x| json!({"s": x.s, "k": x.k, "phi": u8::from(x.phi), "l": x.l, "F_size": x.f.len()}))
        .collect();
    let shortfall = st.shortfall.as_ref().map(|s| match s {
        Shortfall::Budget { steps_used } => {
            format!("step budget exhausted after {steps_used} steps")
        }
        Shortfall::StageSize { stage, size } => format!("stage {stage} would have {size} strings"),
    });
    json!({"stages": rows, "shortfall": shortfall})
}

fn stage_text(st: &Stages) -> String {
    let mut out = String::from("stages (s k phi l |F|):\n");
    for x in &st.stages {
        out += &format!(
            "  {} {} {} {} {}\n",
            x.s,
            x.k,
            u8::from(x.phi),
            x.l,
            x.f.len()
        );
    }
    if let Some(s) = &st.shortfall {
        out += &format!("  stopped early: {s:?}\n");
    }
    out
}

fn sets_text(sets: &DeterminingSets) -> String {
    let join = |s: &std::collections::BTreeSet<_>| {
        s.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "T0 ({}): {}\nT1 ({}): {}\n",
        sets.t0.len(),
        join(&sets.t0),
        sets.t1.len(),
        join(&sets.t1)
    )
}

fn flags_json(v: &TypeVerdict) -> Value {
    json!({
        "monotonic": v.monotonic,
        "proper": v.proper,
        "strong": v.strong,
        "weak": v.weak,
        "type": v.type_id,
        "signs": v.signs().iter().collect::<String>(),
    })
}

fn bundle_json(w: &WitnessBundle) -> Value {
    let checks: Vec<Value> = w
        .checks
        .iter()
        .map(|c| {
            json!({
                "axiom": c.axiom,
                "certificate": c.certificate.as_ref().map(|x| format!("{x:?}")),
                "status": status_text(&c.status),
            })
        })
        .collect();
    json!({"type": w.type_id, "all_verified": w.all_verified(), "checks": checks})
}

fn status_text(s: &CheckStatus) -> String {
    match s {
        CheckStatus::Verified => "verified".into(),
        CheckStatus::Failed(m) => format!("failed: {m}"),
        CheckStatus::Undetermined(m) => format!("undetermined: {m}"),
    }
}

fn run_cli(cli: Cli) -> Result<ExitCode> {
    let c = &cli.common;
    let numbering: Numbering = c.numbering.into();
    match &cli.command {
        Command::Classify { game, carrier } => {
            let text = read_input(game)?;
            let value: Value = serde_json::from_str(&text).context("game JSON")?;
            let g = if value.get("kind").is_some() {
                let spec: GameSpec = serde_json::from_value(value)?;
                let GameSpec::Finite { .. } = spec else {
                    bail!("classify needs a finite game")
                };
                let simple_games::format::BuiltGame::Sets(sets) = spec.build(&BuildOptions {
                    numbering,
                    stages: c.stages,
                    budget: c.budget,
                })?
                else {
                    unreachable!()
                };
                game_from_sets(&sets, carrier.unwrap_or(sets.max_len()))?
            } else {
                serde_json::from_value::<FiniteGameJson>(value)?.to_game()?
            };
            let v = analyze(&g)?;
            let text = format!(
                "monotonic: {}\nproper: {}\nstrong: {}\nweak: {}\ntype: {} ({})\n",
                v.monotonic,
                v.proper,
                v.strong,
                v.weak,
                v.type_id,
                v.signs().iter().collect::<String>()
            );
            emit(c.json, flags_json(&v), text);
        }
        Command::Eval {
            coalition,
            game,
            depth,
        } => {
            let spec: GameSpec = serde_json::from_str(&read_input(game)?).context("game JSON")?;
            let g = spec.build(&BuildOptions {
                numbering,
                stages: c.stages,
                budget: c.budget,
            })?;
            let d = depth.unwrap_or(g.max_len() + 2);
            let v = match parse_coalition(coalition)?.build(numbering, c.budget)? {
                BuiltCoalition::Set(s) => g.eval_set(&s, d),
                BuiltCoalition::Machine(m) => g.eval_stream(&m, d),
            };
            emit(
                c.json,
                json!({"verdict": verdict_name(v), "depth": d}),
                format!("{}\n", verdict_name(v)),
            );
        }
        Command::GenT { a } => {
            let a = parse_setspec(a)?;
            let st = stages_of(c);
            let g = OmegaGame::with_stages(a, st.clone());
            let snap = SnapshotJson::new(&g.snapshot, st.len());
            let mut value = serde_json::to_value(&snap)?;
            value["stage_data"] = stage_json(&st);
            let text = format!("A = {}\n{}{}", g.a, stage_text(&st), sets_text(&g.snapshot));
            emit(c.json, value, text);
        }
        Command::Variant { type_id } => {
            let st = stages_of(c);
            let g = build_variant_on(*type_id, st.clone(), None)?;
            let w = witness(&g);
            let (body, text) = match &g.body {
                Body::Generated { a, sets } => (
                    json!({"A": a.to_string(), "snapshot": SnapshotJson::new(sets, st.len())}),
                    format!("parameter A = {a}\n{}", sets_text(sets)),
                ),
                Body::Intersection { .. } => (
                    json!({"composite": "intersection of the A = empty and A = N games"}),
                    "intersection of the A = empty and A = N games\n".into(),
                ),
                Body::Union { .. } => (
                    json!({"composite": "union of the A = empty and A = N games"}),
                    "union of the A = empty and A = N games\n".into(),
                ),
            };
            let mut text = format!("type {type_id}\n{}{text}witnesses:\n", stage_text(&st));
            for ch in &w.checks {
                let cert = ch
                    .certificate
                    .as_ref()
                    .map(|x| format!("{x:?}"))
                    .unwrap_or_default();
                text += &format!("  {}: {} {}\n", ch.axiom, status_text(&ch.status), cert);
            }
            emit(
                c.json,
                json!({"type": type_id, "game": body, "witnesses": bundle_json(&w)}),
                text,
            );
            if !w.all_verified() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Noncomp { type_id } => {
            let g = build_noncomputable(*type_id)?;
            let w = witnesses_finite_cofinite(&g);
            let pre = check_noncomputability_precondition(&g);
            let value = json!({
                "kind": "exception",
                "type": type_id,
                "A": SetSpecJson::from(&g.a),
                "mode": mode_name(g.mode),
                "base": SnapshotJson::new(&g.base, 0),
                "finite_winning": SetSpecJson::from(&w.finite_winning),
                "cofinite_losing": SetSpecJson::from(&w.cofinite_losing),
                "precondition": pre,
            });
            let text = format!(
                "type {type_id}, mode {}\nA = {}\nbase game:\n{}finite winning coalition: {}\ncofinite losing coalition: {}\nnoncomputability precondition: {}\n",
                mode_name(g.mode),
                g.a,
                sets_text(&g.base),
                w.finite_winning,
                w.cofinite_losing,
                if pre { "holds" } else { "fails" }
            );
            emit(c.json, value, text);
        }
        Command::Witness { kind, a, carrier } => {
            let st = stages_of(c);
            let g = OmegaGame::with_stages(parse_setspec(a)?, st.clone());
            match kind {
                WitnessKind::Nonweak => {
                    let w = nonweak_witnesses(&st)?;
                    let ok = w.all_in(&g.snapshot.t1) && w.intersection_empty();
                    let value = json!({
                        "witnesses": [w.w1.to_string(), w.w2.to_string(), w.w3.to_string()],
                        "source": w.source.to_string(),
                        "verified": ok,
                    });
                    let text = format!(
                        "{}\n{}\n{}\nfrom {}\nverified: {ok}\n",
                        w.w1, w.w2, w.w3, w.source
                    );
                    emit(c.json, value, text);
                    if !ok {
                        return Ok(ExitCode::FAILURE);
                    }
                }
                WitnessKind::Carrier => {
                    let limit = carrier_escape_limit(&st)
                        .context("no strict stage-length increase computed")?;
                    let lens: Vec<usize> = match carrier {
                        Some(l) => vec![*l],
                        None => (1..=limit).collect(),
                    };
                    let mut rows = Vec::new();
                    let mut text = String::new();
                    let mut all_ok = true;
                    for l in lens {
                        let e = carrier_escape(l, &st)?;
                        let ok = g.snapshot.t1.contains(&e.win_ext)
                            && g.snapshot.t0.contains(&e.lose_ext);
                        all_ok &= ok;
                        rows.push(json!({
                            "l": l, "prefix": e.b_prefix.to_string(), "winning": e.win_ext.to_string(),
                            "losing": e.lose_ext.to_string(), "verified": ok,
                        }));
                        text += &format!(
                            "l = {l}: {} -> winning {} / losing {} ({})\n",
                            e.b_prefix,
                            e.win_ext,
                            e.lose_ext,
                            if ok { "verified" } else { "FAILED" }
                        );
                    }
                    emit(c.json, json!({"limit": limit, "escapes": rows}), text);
                    if !all_ok {
                        return Ok(ExitCode::FAILURE);
                    }
                }
            }
        }
        Command::Table { carrier } => {
            let rows = table::build_table(*carrier, &stages_of(c));
            emit(c.json, serde_json::to_value(&rows)?, table::render(&rows));
        }
        Command::Verify {
            suite,
            seed,
            samples,
        } => {
            let suite: Suite = suite.parse().map_err(anyhow::Error::msg)?;
            let opts = VerifyOptions {
                seed: *seed,
                stages: c.stages,
                budget: c.budget,
                samples: *samples,
                numbering,
            };
            let report = run_suite(suite, &opts);
            emit(c.json, serde_json::to_value(&report)?, report.render());
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Program { code, set, inputs } => {
            if let Some(s) = set {
                let spec: SetSpec = parse_setspec(s)?;
                let k = index_of(numbering, &spec);
                emit(
                    c.json,
                    json!({"set": spec.to_string(), "code": k.to_string()}),
                    format!("{k}\n"),
                );
            } else {
                let code = code.as_deref().context("give a code number or --set")?;
                let k = CodeNumber::parse_decimal(code).context("code number must be decimal")?;
                let p = numbering.decode(&k);
                let outputs: Vec<Option<u64>> = (0..*inputs)
                    .map(|n| run(numbering, &k, n, c.budget).value())
                    .collect();
                let shown: Vec<String> = outputs
                    .iter()
                    .map(|o| o.map_or("-".to_string(), |v| v.to_string()))
                    .collect();
                let text = format!(
                    "program: {}\noutputs: {}\n",
                    program_mnemonics(&p).join(" "),
                    shown.join(" ")
                );
                emit(
                    c.json,
                    json!({"code": code, "program": program_mnemonics(&p), "outputs": outputs}),
                    text,
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run_cli(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
