//! Games that agree with a finite determining-set game everywhere except on
//! a chosen infinite set `A` and its complement.
//!
//! In standard mode `S` wins iff `S = A`, or `S ≠ A^c` and `S` has an
//! initial segment in `T1`. In the alternative mode `S` wins iff `S = A` or
//! `S` has an initial segment in `T1`. When `A` is infinite and starts with
//! a `T0` string (or `A^c` is infinite and starts with a `T1` string), no
//! algorithm reading characteristic indices decides such a game; only that
//! precondition is checked here.

use alloc::vec::Vec;

use crate::axioms::{
    analyze_bounded, game_from_sets, mask_to_string, FiniteGame, Mask, MAX_CARRIER,
};
use crate::bitstr::BitString;
use crate::detgame::{eval, finite_example, partition_check, DeterminingSets, Game, Verdict};
use crate::error::Error;
use crate::setspec::{Coalition, SetSpec};

pub const NONCOMP_TYPES: [u8; 10] = [1, 3, 4, 5, 7, 9, 11, 12, 13, 15];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Exceptions at both `A` (winning) and `A^c` (losing).
    Standard,
    /// Exception at `A` only.
    AOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionGame {
    pub a: SetSpec,
    pub base: DeterminingSets,
    pub mode: Mode,
}

impl ExceptionGame {
    /// Rejects a base that does not partition the strings of its longest
    /// length.
    pub fn new(a: SetSpec, base: DeterminingSets, mode: Mode) -> Result<Self, Error> {
        let r = partition_check(&base, base.max_len());
        if base.t0.is_empty() || base.t1.is_empty() || !(r.pass && r.total) {
            return Err(Error::PartitionFailure(alloc::format!(
                "{:?}",
                r.counterexamples
            )));
        }
        Ok(ExceptionGame { a, base, mode })
    }

    /// Depth past which every eventually constant coalition is decided.
    pub fn depth(&self) -> usize {
        self.base.max_len()
    }
}

/// Exact evaluation on an eventually constant coalition.
pub fn eval_exception(g: &ExceptionGame, s: &SetSpec, depth: usize) -> Verdict {
    if *s == g.a {
        return Verdict::Winning;
    }
    if g.mode == Mode::Standard && *s == g.a.complement() {
        return Verdict::Losing;
    }
    eval(&g.base, s, depth)
}

/// Evaluation from a characteristic sequence alone. Equality with `A` or
/// `A^c` cannot be refuted while every examined bit agrees, so such
/// coalitions stay undetermined.
pub fn eval_exception_stream(g: &ExceptionGame, s: &dyn Coalition, depth: usize) -> Verdict {
    let agrees = |target: &SetSpec| (0..depth).all(|i| s.bit(i) == Some(target.get(i)));
    if agrees(&g.a) || (g.mode == Mode::Standard && agrees(&g.a.complement())) {
        return Verdict::Undetermined;
    }
    eval(&g.base, s, depth)
}

impl Game for ExceptionGame {
    fn eval(&self, coalition: &dyn Coalition, depth: usize) -> Verdict {
        eval_exception_stream(self, coalition, depth)
    }
}

/// The exception game for `type_id` over its finite example, with
/// `A = τ * 111…` for the lexicographically least eligible `τ ∈ T0`.
pub fn build_noncomputable(type_id: u8) -> Result<ExceptionGame, Error> {
    if !NONCOMP_TYPES.contains(&type_id) {
        return Err(Error::UnknownType(type_id));
    }
    let base = finite_example(type_id)?;
    let excluded = BitString::lit("0100");
    let tau = base
        .t0
        .iter()
        .find(|t| type_id != 7 || **t != excluded)
        .cloned()
        .expect("finite examples have nonempty T0");
    let mode = if type_id == 5 {
        Mode::AOnly
    } else {
        Mode::Standard
    };
    ExceptionGame::new(SetSpec::new(tau, true), base, mode)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCofinite {
    pub finite_winning: SetSpec,
    pub cofinite_losing: SetSpec,
}

/// A finite winning coalition `α * A(|α|)` for the least `α ∈ T1`, and a
/// cofinite losing one from `α * A^c(|α|)` for the least `α ∈ T0`.
pub fn witnesses_finite_cofinite(g: &ExceptionGame) -> FiniteCofinite {
    let win = g.base.t1.iter().next().expect("nonempty T1");
    let lose = g.base.t0.iter().next().expect("nonempty T0");
    let mut w = win.clone();
    w.push(g.a.get(win.len()));
    let mut l = lose.clone();
    l.push(!g.a.get(lose.len()));
    FiniteCofinite {
        finite_winning: SetSpec::new(w, false),
        cofinite_losing: SetSpec::new(l, true),
    }
}

/// `A` is infinite and starts with a `T0` string, or `A^c` is infinite and
/// starts with a `T1` string.
pub fn check_noncomputability_precondition(g: &ExceptionGame) -> bool {
    let n = g.base.max_len();
    let a = g.a.segment(n);
    let ac = g.a.complement().segment(n);
    (g.a.is_infinite() && g.base.extends_t0(&a))
        || (g.a.complement().is_infinite() && g.base.extends_t1(&ac))
}

/// A coalition relation observed in the finite base game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transferred {
    NonMonotonic { smaller: SetSpec, larger: SetSpec },
    NonProper(SetSpec),
    NonStrong(SetSpec),
}

fn lift(m: Mask, carrier: usize) -> SetSpec {
    SetSpec::new(mask_to_string(m, carrier), false)
}

/// Counterexamples to each axiom the finite base game fails, lifted to
/// finite coalitions. Those different from `A` and `A^c` keep their
/// verdicts in the exception game.
pub fn base_counterexamples(g: &ExceptionGame) -> Result<Vec<Transferred>, Error> {
    let carrier = g.base.max_len();
    let fg: FiniteGame = game_from_sets(&g.base, carrier)?;
    let v = analyze_bounded(&fg, MAX_CARRIER)?;
    let full = fg.full();
    let mut out = Vec::new();
    if !v.monotonic {
        let pair = (0..=full)
            .flat_map(|s| (0..=full).map(move |t| (s, t)))
            .find(|&(s, t)| s & !t == 0 && fg.is_winning(s) && !fg.is_winning(t));
        if let Some((s, t)) = pair {
            out.push(Transferred::NonMonotonic {
                smaller: lift(s, carrier),
                larger: lift(t, carrier),
            });
        }
    }
    if !v.proper {
        if let Some(s) = (0..=full).find(|&s| fg.is_winning(s) && fg.is_winning(fg.complement(s))) {
            out.push(Transferred::NonProper(lift(s, carrier)));
        }
    }
    if !v.strong {
        if let Some(s) = (0..=full).find(|&s| !fg.is_winning(s) && !fg.is_winning(fg.complement(s)))
        {
            out.push(Transferred::NonStrong(lift(s, carrier)));
        }
    }
    Ok(out)
}

/// Re-checks a lifted counterexample in the exception game. Returns `None`
/// when it touches `A` or `A^c` and so says nothing.
pub fn transfer_holds(g: &ExceptionGame, t: &Transferred) -> Option<bool> {
    let touches = |s: &SetSpec| *s == g.a || *s == g.a.complement();
    let v = |s: &SetSpec| eval_exception(g, s, g.depth().max(s.settled_after()) + 1);
    match t {
        Transferred::NonMonotonic { smaller, larger } => (!touches(smaller) && !touches(larger))
            .then(|| v(smaller) == Verdict::Winning && v(larger) == Verdict::Losing),
        Transferred::NonProper(s) => (!touches(s) && !touches(&s.complement()))
            .then(|| v(s) == Verdict::Winning && v(&s.complement()) == Verdict::Winning),
        Transferred::NonStrong(s) => (!touches(s) && !touches(&s.complement()))
            .then(|| v(s) == Verdict::Losing && v(&s.complement()) == Verdict::Losing),
    }
}
