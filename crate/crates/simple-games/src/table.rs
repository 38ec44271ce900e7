//! The existence table: for each of the sixteen types, whether finite or
//! infinite, computable or noncomputable games of that type exist.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use simple_games_core::axioms::{
    analyze, exhaustive_search, game_from_sets, signs_of_type, EXHAUSTIVE_CARRIER_BOUND,
};
use simple_games_core::detgame::{finite_example, EMPTY_TYPES};
use simple_games_core::noncomp::{build_noncomputable, NONCOMP_TYPES};
use simple_games_core::omega::{OmegaGame, Stages};
use simple_games_core::variants::{build_variant_on, witness, VARIANT_TYPES};
use simple_games_core::SetSpec;

use crate::verify;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub exists: bool,
    pub note: String,
}

impl Cell {
    fn yes(note: impl Into<String>) -> Cell {
        Cell {
            exists: true,
            note: note.into(),
        }
    }

    fn no(note: impl Into<String>) -> Cell {
        Cell {
            exists: false,
            note: note.into(),
        }
    }

    fn text(&self) -> String {
        format!("{}: {}", if self.exists { "yes" } else { "no" }, self.note)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    #[serde(rename = "type")]
    pub type_id: u8,
    pub signs: String,
    pub finite_noncomputable: Cell,
    pub finite_computable: Cell,
    pub infinite_noncomputable: Cell,
    pub infinite_computable: Cell,
}

const WITNESSED: &str = "witnessed (bounded-depth)";

/// Builds all sixteen rows. Exhaustive search runs over every carrier size
/// up to `max_carrier` (at most 4).
pub fn build_table(max_carrier: usize, stages: &Arc<Stages>) -> Vec<Row> {
    let max_carrier = max_carrier.min(EXHAUSTIVE_CARRIER_BOUND);
    let found: Vec<_> = (1..=max_carrier)
        .map(|k| exhaustive_search(k).expect("carrier within bound"))
        .collect();
    let omega_ok = {
        let g = OmegaGame::with_stages(SetSpec::naturals(), stages.clone());
        verify::witness_checks(stages, &g).iter().all(|c| c.passed)
    };
    (1..=16u8)
        .map(|t| {
            let smallest = found.iter().position(|f| f.contains(&t)).map(|i| i + 1);
            let example = finite_example(t).ok().map(|sets| {
                game_from_sets(&sets, sets.max_len())
                    .and_then(|g| analyze(&g))
                    .map(|v| v.type_id)
                    == Ok(t)
            });
            let finite_computable = match (example, smallest) {
                (Some(true), Some(k)) => Cell::yes(format!(
                    "constructed example; exhaustive search finds one on {}",
                    verify::players(k)
                )),
                (Some(true), None) => Cell::yes("constructed example"),
                (_, Some(k)) => Cell::yes(format!(
                    "exhaustive search finds one on {}",
                    verify::players(k)
                )),
                (Some(false), None) => Cell::no("example failed to classify"),
                (None, None) => Cell::no(format!(
                    "theorem-only; none on up to {}",
                    verify::players(max_carrier)
                )),
            };
            let infinite_computable = if EMPTY_TYPES.contains(&t) || t == 2 {
                Cell::no("theorem-only")
            } else if t == 1 {
                if omega_ok {
                    Cell::yes(WITNESSED)
                } else {
                    Cell::no("witness checks failed")
                }
            } else if VARIANT_TYPES.contains(&t) {
                let ok = build_variant_on(t, stages.clone(), None)
                    .map(|g| witness(&g).all_verified())
                    .unwrap_or(false);
                if ok {
                    Cell::yes(WITNESSED)
                } else {
                    Cell::no("witness checks failed")
                }
            } else {
                Cell::no("no construction")
            };
            let infinite_noncomputable = if NONCOMP_TYPES.contains(&t) {
                let ok = build_noncomputable(t).is_ok() && verify::exception_checks(t).passed;
                if ok {
                    Cell::yes(WITNESSED)
                } else {
                    Cell::no("precondition checks failed")
                }
            } else {
                Cell::no("theorem-only")
            };
            Row {
                type_id: t,
                signs: signs_of_type(t).iter().collect(),
                finite_noncomputable: Cell::no("every finite game is computable"),
                finite_computable,
                infinite_noncomputable,
                infinite_computable,
            }
        })
        .collect()
}

pub fn render(rows: &[Row]) -> String {
    let header = [
        "type",
        "finite noncomputable",
        "finite computable",
        "infinite noncomputable",
        "infinite computable",
    ];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                format!("{} ({})", r.type_id, r.signs),
                r.finite_noncomputable.text(),
                r.finite_computable.text(),
                r.infinite_noncomputable.text(),
                r.infinite_computable.text(),
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, row: &[&str]| {
        let parts: Vec<String> = row
            .iter()
            .zip(width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", parts.join(" | ").trim_end());
    };
    line(&mut out, &header);
    let _ = writeln!(out, "{}", width.map(|w| "-".repeat(w)).join("-+-"));
    for row in &cells {
        line(&mut out, &row.each_ref().map(String::as_str));
    }
    out
}
