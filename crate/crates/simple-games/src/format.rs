//! JSON forms of games, coalitions, snapshots and programs.

use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use simple_games_core::axioms::{mask_to_string, string_to_mask, FiniteGame};
use simple_games_core::detgame::eval;
use simple_games_core::machine::{CodeNumber, Instr, MachineCoalition, Numbering, Program};
use simple_games_core::noncomp::{build_noncomputable, eval_exception, ExceptionGame, Mode};
use simple_games_core::omega::{compute_stages, OmegaGame, Stages};
use simple_games_core::variants::{build_variant_on, eval_variant, VariantGame};
use simple_games_core::{BitString, Coalition, DeterminingSets, SetSpec, Verdict};

pub fn parse_bits(s: &str) -> Result<BitString> {
    s.parse().map_err(|e| anyhow!("{e}"))
}

fn strings(set: &std::collections::BTreeSet<BitString>) -> Vec<String> {
    set.iter().map(ToString::to_string).collect()
}

fn bit_set(v: &[String]) -> Result<std::collections::BTreeSet<BitString>> {
    v.iter().map(|s| parse_bits(s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSpecJson {
    pub prefix: String,
    pub tail: u8,
}

impl SetSpecJson {
    pub fn to_spec(&self) -> Result<SetSpec> {
        let tail = match self.tail {
            0 => false,
            1 => true,
            t => bail!("tail must be 0 or 1, got {t}"),
        };
        Ok(SetSpec::new(parse_bits(&self.prefix)?, tail))
    }
}

impl From<&SetSpec> for SetSpecJson {
    fn from(s: &SetSpec) -> Self {
        SetSpecJson {
            prefix: s.prefix().to_string(),
            tail: u8::from(s.tail()),
        }
    }
}

/// Accepts `{"prefix":"10","tail":1}` or the shorthand `10:1`.
pub fn parse_setspec(arg: &str) -> Result<SetSpec> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        let j: SetSpecJson = serde_json::from_str(arg).context("set spec JSON")?;
        return j.to_spec();
    }
    let (prefix, tail) = arg
        .split_once(':')
        .ok_or_else(|| anyhow!("expected PREFIX:TAIL, got {arg:?}"))?;
    SetSpecJson {
        prefix: prefix.to_string(),
        tail: tail.parse().context("tail")?,
    }
    .to_spec()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGameJson {
    pub carrier: usize,
    pub winning: Vec<String>,
}

impl FiniteGameJson {
    pub fn to_game(&self) -> Result<FiniteGame> {
        let masks = self
            .winning
            .iter()
            .map(|s| {
                let b = parse_bits(s)?;
                if b.len() != self.carrier {
                    bail!("coalition {s} does not have {} bits", self.carrier);
                }
                Ok(string_to_mask(&b))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGame::new(self.carrier, masks)?)
    }
}

impl From<&FiniteGame> for FiniteGameJson {
    fn from(g: &FiniteGame) -> Self {
        FiniteGameJson {
            carrier: g.carrier(),
            winning: g
                .winning()
                .map(|m| mask_to_string(m, g.carrier()).to_string())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnapshotJson {
    #[serde(rename = "T0")]
    pub t0: Vec<String>,
    #[serde(rename = "T1")]
    pub t1: Vec<String>,
    pub stages: usize,
}

impl SnapshotJson {
    pub fn new(sets: &DeterminingSets, stages: usize) -> Self {
        SnapshotJson {
            t0: strings(&sets.t0),
            t1: strings(&sets.t1),
            stages,
        }
    }
}

/// A game description. Stage counts left out fall back to the caller's
/// defaults.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GameSpec {
    Finite {
        #[serde(rename = "T0")]
        t0: Vec<String>,
        #[serde(rename = "T1")]
        t1: Vec<String>,
    },
    Omega {
        #[serde(rename = "A")]
        a: SetSpecJson,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        stages: Option<usize>,
    },
    Variant {
        #[serde(rename = "type")]
        type_id: u8,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        stages: Option<usize>,
    },
    Exception {
        #[serde(rename = "type")]
        type_id: u8,
        /// Overrides the canonical `A` of the type.
        #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
        a: Option<SetSpecJson>,
    },
    Intersection {
        left: Box<GameSpec>,
        right: Box<GameSpec>,
    },
    Union {
        left: Box<GameSpec>,
        right: Box<GameSpec>,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub numbering: Numbering,
    pub stages: usize,
    pub budget: u64,
}

/// A game ready for evaluation.
#[derive(Clone, Debug)]
pub enum BuiltGame {
    Sets(DeterminingSets),
    Omega(OmegaGame),
    Variant(VariantGame),
    Exception(ExceptionGame),
    Intersection(Box<BuiltGame>, Box<BuiltGame>),
    Union(Box<BuiltGame>, Box<BuiltGame>),
}

impl GameSpec {
    pub fn build(&self, opts: &BuildOptions) -> Result<BuiltGame> {
        let stages = |n: Option<usize>| -> Arc<Stages> {
            Arc::new(compute_stages(
                opts.numbering,
                n.unwrap_or(opts.stages),
                opts.budget,
            ))
        };
        Ok(match self {
            GameSpec::Finite { t0, t1 } => BuiltGame::Sets(DeterminingSets {
                t0: bit_set(t0)?,
                t1: bit_set(t1)?,
            }),
            GameSpec::Omega { a, stages: n } => {
                BuiltGame::Omega(OmegaGame::with_stages(a.to_spec()?, stages(*n)))
            }
            GameSpec::Variant { type_id, stages: n } => {
                BuiltGame::Variant(build_variant_on(*type_id, stages(*n), None)?)
            }
            GameSpec::Exception { type_id, a } => {
                let mut g = build_noncomputable(*type_id)?;
                if let Some(a) = a {
                    g = ExceptionGame::new(a.to_spec()?, g.base, g.mode)?;
                }
                BuiltGame::Exception(g)
            }
            GameSpec::Intersection { left, right } => {
                BuiltGame::Intersection(Box::new(left.build(opts)?), Box::new(right.build(opts)?))
            }
            GameSpec::Union { left, right } => {
                BuiltGame::Union(Box::new(left.build(opts)?), Box::new(right.build(opts)?))
            }
        })
    }
}

impl BuiltGame {
    /// Evaluation of an eventually constant coalition; exact for exception
    /// games.
    pub fn eval_set(&self, s: &SetSpec, depth: usize) -> Verdict {
        match self {
            BuiltGame::Exception(g) => eval_exception(g, s, depth),
            BuiltGame::Intersection(l, r) => l.eval_set(s, depth).and(r.eval_set(s, depth)),
            BuiltGame::Union(l, r) => l.eval_set(s, depth).or(r.eval_set(s, depth)),
            _ => self.eval_stream(s, depth),
        }
    }

    pub fn eval_stream(&self, c: &dyn Coalition, depth: usize) -> Verdict {
        use simple_games_core::Game;
        match self {
            BuiltGame::Sets(s) => eval(s, c, depth),
            BuiltGame::Omega(g) => eval(&g.snapshot, c, depth),
            BuiltGame::Variant(g) => eval_variant(g, c, depth),
            BuiltGame::Exception(g) => g.eval(c, depth),
            BuiltGame::Intersection(l, r) => l.eval_stream(c, depth).and(r.eval_stream(c, depth)),
            BuiltGame::Union(l, r) => l.eval_stream(c, depth).or(r.eval_stream(c, depth)),
        }
    }

    /// Longest determining string involved.
    pub fn max_len(&self) -> usize {
        match self {
            BuiltGame::Sets(s) => s.max_len(),
            BuiltGame::Omega(g) => g.snapshot.max_len(),
            BuiltGame::Variant(g) => g.max_len(),
            BuiltGame::Exception(g) => g.depth(),
            BuiltGame::Intersection(l, r) | BuiltGame::Union(l, r) => l.max_len().max(r.max_len()),
        }
    }
}

/// A coalition given as a set spec, a program, or a code number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoalitionSpec {
    Set(SetSpecJson),
    Program {
        program: Vec<String>,
        #[serde(default)]
        budget: Option<u64>,
    },
    Code {
        code: String,
        #[serde(default)]
        budget: Option<u64>,
    },
}

pub enum BuiltCoalition {
    Set(SetSpec),
    Machine(MachineCoalition),
}

impl CoalitionSpec {
    pub fn build(&self, numbering: Numbering, default_budget: u64) -> Result<BuiltCoalition> {
        Ok(match self {
            CoalitionSpec::Set(s) => BuiltCoalition::Set(s.to_spec()?),
            CoalitionSpec::Program { program, budget } => {
                BuiltCoalition::Machine(MachineCoalition::from_program(
                    parse_program(program)?,
                    budget.unwrap_or(default_budget),
                ))
            }
            CoalitionSpec::Code { code, budget } => {
                let k = CodeNumber::parse_decimal(code)
                    .ok_or_else(|| anyhow!("bad code number {code:?}"))?;
                BuiltCoalition::Machine(MachineCoalition::new(
                    numbering,
                    &k,
                    budget.unwrap_or(default_budget),
                ))
            }
        })
    }
}

/// Accepts coalition JSON or the set-spec shorthand `10:1`.
pub fn parse_coalition(arg: &str) -> Result<CoalitionSpec> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        return serde_json::from_str(arg).context("coalition JSON");
    }
    Ok(CoalitionSpec::Set((&parse_setspec(arg)?).into()))
}

pub fn parse_program(mnemonics: &[String]) -> Result<Program> {
    let instrs = mnemonics
        .iter()
        .map(|m| m.parse::<Instr>().map_err(|e| anyhow!("{e}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Program(instrs))
}

pub fn program_mnemonics(p: &Program) -> Vec<String> {
    p.instructions().iter().map(ToString::to_string).collect()
}

/// Display name of an exception-game mode.
pub fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Standard => "standard",
        Mode::AOnly => "a-only",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_spec_forms() {
        assert_eq!(parse_setspec("10:1").unwrap(), SetSpec::lit("10", true));
        assert_eq!(
            parse_setspec(r#"{"prefix":"00","tail":1}"#).unwrap(),
            SetSpec::lit("00", true)
        );
        assert_eq!(parse_setspec(":0").unwrap(), SetSpec::empty());
        assert!(parse_setspec("10:2").is_err());
        assert!(parse_setspec("1x:0").is_err());
        assert!(parse_setspec("10").is_err());
    }

    #[test]
    fn game_spec_forms() {
        let g: GameSpec = serde_json::from_str(
            r#"{"kind":"finite","T0":["00","010","100"],"T1":["11","011","101"]}"#,
        )
        .unwrap();
        assert!(matches!(g, GameSpec::Finite { .. }));
        let g: GameSpec =
            serde_json::from_str(r#"{"kind":"exception","type":7,"A":{"prefix":"00","tail":1}}"#)
                .unwrap();
        assert_eq!(
            g,
            GameSpec::Exception {
                type_id: 7,
                a: Some(SetSpecJson {
                    prefix: "00".into(),
                    tail: 1
                })
            }
        );
        let g: GameSpec =
            serde_json::from_str(r#"{"kind":"variant","type":12,"stages":4}"#).unwrap();
        assert_eq!(
            g,
            GameSpec::Variant {
                type_id: 12,
                stages: Some(4)
            }
        );
        let back = serde_json::to_string(&g).unwrap();
        assert_eq!(back, r#"{"kind":"variant","type":12,"stages":4}"#);
    }

    #[test]
    fn finite_game_json_round_trip() {
        let j = FiniteGameJson {
            carrier: 3,
            winning: vec!["110".into(), "101".into(), "011".into(), "111".into()],
        };
        let g = j.to_game().unwrap();
        assert_eq!(FiniteGameJson::from(&g), j);
        let bad = FiniteGameJson {
            carrier: 3,
            winning: vec!["11".into()],
        };
        assert!(bad.to_game().is_err());
    }

    #[test]
    fn coalition_forms() {
        assert!(matches!(
            parse_coalition("1:0").unwrap(),
            CoalitionSpec::Set(_)
        ));
        let p = parse_coalition(r#"{"program":["inc 1","halt 1"]}"#).unwrap();
        assert!(matches!(p, CoalitionSpec::Program { .. }));
        let c = parse_coalition(r#"{"code":"3"}"#).unwrap();
        let BuiltCoalition::Machine(m) = c.build(Numbering::Curated, 1000).unwrap() else {
            panic!()
        };
        assert_eq!(m.bit(5), Some(true));
    }
}
