//! A small deterministic register machine standing in for the partial
//! recursive functions `φ_k`.
//!
//! Three instructions, all costing one step:
//!
//! * `inc r` adds one to register `r`;
//! * `decjz r t` jumps to `t` if register `r` is zero and otherwise
//!   decrements it and falls through;
//! * `halt r` stops with the contents of register `r` as output.
//!
//! Register 0 holds the input, every other register starts at zero. Control
//! that leaves the program (falling off the end, or jumping past it) never
//! halts.

mod dovetail;
mod numbering;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use dovetail::{enumerate_admissible, Admissible, Dovetail, Enumeration};
pub use numbering::{index_of, set_program, CodeNumber, Numbering, CURATED_TABLE_LEN};

use crate::setspec::Coalition;

pub type Register = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Instr {
    Inc(Register),
    DecJz(Register, u32),
    Halt(Register),
}

impl fmt::Display for Instr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Instr::Inc(r) => write!(f, "inc {r}"),
            Instr::DecJz(r, t) => write!(f, "decjz {r} {t}"),
            Instr::Halt(r) => write!(f, "halt {r}"),
        }
    }
}

impl FromStr for Instr {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut parts = s.split_whitespace();
        let op = parts
            .next()
            .ok_or_else(|| "empty instruction".to_string())?;
        let mut arg = || -> Result<u32, String> {
            parts
                .next()
                .ok_or_else(|| alloc::format!("missing operand in {s:?}"))?
                .parse::<u32>()
                .map_err(|e| alloc::format!("bad operand in {s:?}: {e}"))
        };
        let instr = match op {
            "inc" => Instr::Inc(arg()?),
            "decjz" => {
                let r = arg()?;
                Instr::DecJz(r, arg()?)
            }
            "halt" => Instr::Halt(arg()?),
            _ => return Err(alloc::format!("unknown mnemonic {op:?}")),
        };
        if parts.next().is_some() {
            return Err(alloc::format!("trailing operands in {s:?}"));
        }
        Ok(instr)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Program(pub Vec<Instr>);

impl Program {
    /// `decjz 0 0`: loops at zero, falls off the end otherwise. Diverges on
    /// every input.
    pub fn diverging() -> Program {
        Program(alloc::vec![Instr::DecJz(0, 0)])
    }

    pub fn instructions(&self) -> &[Instr] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunOutcome {
    Halted(u64),
    Running,
}

impl RunOutcome {
    pub fn value(self) -> Option<u64> {
        match self {
            RunOutcome::Halted(v) => Some(v),
            RunOutcome::Running => None,
        }
    }

    /// The output read as a characteristic bit.
    pub fn bit(self) -> Option<bool> {
        match self {
            RunOutcome::Halted(0) => Some(false),
            RunOutcome::Halted(1) => Some(true),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Inc(usize),
    DecJz(usize, usize),
    Halt(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Running,
    Halted(u64),
    /// Control left the program; no further step can halt.
    Stuck,
}

/// A resumable run of one program on one input.
#[derive(Clone, Debug)]
pub struct Execution {
    ops: Vec<Op>,
    regs: Vec<u64>,
    pc: usize,
    steps: u64,
    status: Status,
}

impl Execution {
    pub fn new(program: &Program, input: u64) -> Self {
        // Register names are renamed onto a dense file; register 0 keeps slot 0.
        let mut slots: BTreeMap<Register, usize> = BTreeMap::new();
        slots.insert(0, 0);
        let mut slot = |r: Register| {
            let next = slots.len();
            *slots.entry(r).or_insert(next)
        };
        let ops: Vec<Op> = program
            .0
            .iter()
            .map(|&i| match i {
                Instr::Inc(r) => Op::Inc(slot(r)),
                Instr::DecJz(r, t) => Op::DecJz(slot(r), t as usize),
                Instr::Halt(r) => Op::Halt(slot(r)),
            })
            .collect();
        let mut regs = alloc::vec![0u64; slots.len()];
        regs[0] = input;
        let status = if ops.is_empty() {
            Status::Stuck
        } else {
            Status::Running
        };
        Execution {
            ops,
            regs,
            pc: 0,
            steps: 0,
            status,
        }
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Executes up to `n` further steps. Returns the number executed.
    pub fn advance(&mut self, n: u64) -> u64 {
        let start = self.steps;
        while self.status == Status::Running && self.steps - start < n {
            self.steps += 1;
            match self.ops[self.pc] {
                Op::Inc(r) => {
                    self.regs[r] += 1;
                    self.pc += 1;
                }
                Op::DecJz(r, t) => {
                    if self.regs[r] == 0 {
                        self.pc = t;
                    } else {
                        self.regs[r] -= 1;
                        self.pc += 1;
                    }
                }
                Op::Halt(r) => {
                    self.status = Status::Halted(self.regs[r]);
                    continue;
                }
            }
            if self.pc >= self.ops.len() {
                self.status = Status::Stuck;
            }
        }
        self.steps - start
    }

    pub fn outcome(&self) -> RunOutcome {
        match self.status {
            Status::Halted(v) => RunOutcome::Halted(v),
            _ => RunOutcome::Running,
        }
    }
}

/// Runs `program` on `input` for at most `budget` steps.
pub fn run_program(program: &Program, input: u64, budget: u64) -> RunOutcome {
    let mut exec = Execution::new(program, input);
    exec.advance(budget);
    exec.outcome()
}

/// `φ_k(input)` within `budget` steps under `numbering`.
pub fn run(numbering: Numbering, k: &CodeNumber, input: u64, budget: u64) -> RunOutcome {
    run_program(&numbering.decode(k), input, budget)
}

/// A coalition given by a characteristic index, read through the
/// interpreter.
#[derive(Clone, Debug)]
pub struct MachineCoalition {
    program: Program,
    budget: u64,
}

impl MachineCoalition {
    pub fn new(numbering: Numbering, code: &CodeNumber, budget: u64) -> Self {
        MachineCoalition {
            program: numbering.decode(code),
            budget,
        }
    }

    pub fn from_program(program: Program, budget: u64) -> Self {
        MachineCoalition { program, budget }
    }
}

impl Coalition for MachineCoalition {
    fn bit(&self, i: usize) -> Option<bool> {
        run_program(&self.program, i as u64, self.budget).bit()
    }
}
