//! Dovetailed listing of `{k : φ_k(2k) ∈ {0, 1}}`.
//!
//! Round `n` runs codes `0..=n` for `n` steps each. Rather than restarting,
//! a code's execution is resumed: at round `n` an old code gets one more
//! step and code `n` starts with `n` steps, which discovers exactly what a
//! from-scratch schedule would. Within a round, codes are published in
//! ascending order.

use alloc::vec::Vec;

use super::{CodeNumber, Execution, Numbering, Status};

/// One listed code together with `φ_k(2k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Admissible {
    pub code: u64,
    pub value: bool,
    /// Round at which the code was published.
    pub round: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub found: Vec<Admissible>,
    /// Set when the step budget ran out before enough codes were found.
    pub shortfall: bool,
    pub steps_used: u64,
}

/// Incremental dovetailer. Feeding it more budget never changes what it has
/// already published.
#[derive(Clone, Debug)]
pub struct Dovetail {
    numbering: Numbering,
    next_round: u64,
    live: Vec<(u64, Execution)>,
    found: Vec<Admissible>,
    steps_used: u64,
}

impl Dovetail {
    pub fn new(numbering: Numbering) -> Self {
        Dovetail {
            numbering,
            next_round: 0,
            live: Vec::new(),
            found: Vec::new(),
            steps_used: 0,
        }
    }

    pub fn found(&self) -> &[Admissible] {
        &self.found
    }

    pub fn steps_used(&self) -> u64 {
        self.steps_used
    }

    pub fn rounds_completed(&self) -> u64 {
        self.next_round
    }

    /// Worst-case step cost of the next round.
    fn next_round_cost(&self) -> u64 {
        self.live.len() as u64 + self.next_round
    }

    /// Runs one round if it fits within `budget` total steps.
    pub fn step_round(&mut self, budget: u64) -> bool {
        if self.steps_used + self.next_round_cost() > budget {
            return false;
        }
        let n = self.next_round;
        let program = self.numbering.decode(&CodeNumber::from(n));
        self.live.push((n, Execution::new(&program, 2 * n)));
        let mut kept = Vec::with_capacity(self.live.len());
        for (code, mut exec) in self.live.drain(..) {
            let want = if code == n { n } else { 1 };
            self.steps_used += exec.advance(want);
            match exec.status() {
                Status::Running => kept.push((code, exec)),
                Status::Halted(v @ (0 | 1)) => self.found.push(Admissible {
                    code,
                    value: v == 1,
                    round: n,
                }),
                Status::Halted(_) | Status::Stuck => {}
            }
        }
        self.live = kept;
        self.next_round += 1;
        true
    }

    /// Runs rounds until `count` codes are listed or the budget is spent.
    pub fn run_until(&mut self, count: usize, budget: u64) {
        while self.found.len() < count && self.step_round(budget) {}
    }
}

/// The first `stages` admissible codes reachable within `budget` steps.
pub fn enumerate_admissible(numbering: Numbering, stages: usize, budget: u64) -> Enumeration {
    let mut d = Dovetail::new(numbering);
    d.run_until(stages, budget);
    let mut found = d.found;
    found.truncate(stages);
    Enumeration {
        shortfall: found.len() < stages,
        found,
        steps_used: d.steps_used,
    }
}
