//! Gödel numberings of register-machine programs.
//!
//! The standard numbering writes a program as a bit string: a leading `1`
//! followed by the Elias-gamma code of `c + 1` for each instruction code `c`,
//! where
//!
//! ```text
//! decjz r t  ->  3 * pair(r, t)
//! inc r      ->  3 * r + 1
//! halt r     ->  3 * r + 2
//! ```
//!
//! and `pair` is the Cantor pairing. Code 0 is reserved for a diverging loop.
//! Numbers whose bits do not parse are undecodable and run as that loop.
//!
//! Under the standard numbering the smallest code with `φ_k(2k) ∈ {0, 1}` is
//! 38, which makes the stage lengths of the staged construction far too long
//! to enumerate. The curated numbering puts a fixed table of small programs
//! at codes `1..=CURATED_TABLE_LEN` and shifts the standard numbering up
//! behind it, so every program still has an index.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::{Instr, Program};
use crate::setspec::SetSpec;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeNumber(BigUint);

impl CodeNumber {
    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn parse_decimal(s: &str) -> Option<CodeNumber> {
        BigUint::parse_bytes(s.as_bytes(), 10).map(CodeNumber)
    }
}

impl From<u64> for CodeNumber {
    fn from(v: u64) -> Self {
        CodeNumber(BigUint::from(v))
    }
}

impl From<BigUint> for CodeNumber {
    fn from(v: BigUint) -> Self {
        CodeNumber(v)
    }
}

impl fmt::Display for CodeNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for CodeNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Numbering {
    Standard,
    #[default]
    Curated,
}

impl Numbering {
    pub fn decode(self, k: &CodeNumber) -> Program {
        match self {
            Numbering::Standard => standard_decode(&k.0).unwrap_or_else(Program::diverging),
            Numbering::Curated => match k.0.to_u64() {
                Some(0) => Program::diverging(),
                Some(i) if i <= CURATED_TABLE_LEN => curated_entry(i as usize),
                _ => {
                    let shifted = &k.0 - BigUint::from(CURATED_TABLE_LEN + 1);
                    standard_decode(&shifted).unwrap_or_else(Program::diverging)
                }
            },
        }
    }

    /// Injective; `decode(encode(p)) == p` for every program.
    pub fn encode(self, p: &Program) -> CodeNumber {
        match self {
            Numbering::Standard => CodeNumber(standard_encode(p)),
            Numbering::Curated => {
                if let Some(i) = (1..=CURATED_TABLE_LEN).find(|&i| curated_entry(i as usize) == *p)
                {
                    return CodeNumber::from(i);
                }
                CodeNumber(standard_encode(p) + BigUint::from(CURATED_TABLE_LEN + 1))
            }
        }
    }
}

fn pair(r: u32, t: u32) -> u64 {
    let s = u64::from(r) + u64::from(t);
    s * (s + 1) / 2 + u64::from(t)
}

fn unpair(z: u64) -> (u64, u64) {
    let mut w = ((8 * u128::from(z) + 1).isqrt() as u64 - 1) / 2;
    while w * (w + 1) / 2 > z {
        w -= 1;
    }
    let t = z - w * (w + 1) / 2;
    (w - t, t)
}

fn instr_code(i: Instr) -> u64 {
    match i {
        Instr::DecJz(r, t) => 3 * pair(r, t),
        Instr::Inc(r) => 3 * u64::from(r) + 1,
        Instr::Halt(r) => 3 * u64::from(r) + 2,
    }
}

fn instr_of_code(c: &BigUint) -> Option<Instr> {
    let c = c.to_u64()?;
    let q = c / 3;
    Some(match c % 3 {
        0 => {
            let (r, t) = unpair(q);
            Instr::DecJz(u32::try_from(r).ok()?, u32::try_from(t).ok()?)
        }
        1 => Instr::Inc(u32::try_from(q).ok()?),
        _ => Instr::Halt(u32::try_from(q).ok()?),
    })
}

fn standard_encode(p: &Program) -> BigUint {
    let mut bits: Vec<bool> = alloc::vec![true];
    for &i in &p.0 {
        let n = instr_code(i) + 1;
        let width = 64 - n.leading_zeros() as usize;
        bits.extend(core::iter::repeat_n(false, width - 1));
        bits.extend((0..width).rev().map(|j| (n >> j) & 1 == 1));
    }
    let mut v = BigUint::zero();
    for b in bits {
        v <<= 1u32;
        if b {
            v += 1u32;
        }
    }
    v
}

fn standard_decode(k: &BigUint) -> Option<Program> {
    if k.is_zero() {
        return Some(Program::diverging());
    }
    let len = k.bits();
    // Skip the sentinel bit.
    let mut pos = len - 1;
    let mut next = || -> Option<bool> {
        if pos == 0 {
            return None;
        }
        pos -= 1;
        Some(k.bit(pos))
    };
    let mut instrs = Vec::new();
    while let Some(first) = next() {
        let mut zeros = 0u64;
        let mut b = first;
        while !b {
            zeros += 1;
            b = next()?;
        }
        let mut n = BigUint::from(1u32);
        for _ in 0..zeros {
            n <<= 1u32;
            if next()? {
                n += 1u32;
            }
        }
        instrs.push(instr_of_code(&(n - 1u32))?);
    }
    Some(Program(instrs))
}

pub const CURATED_TABLE_LEN: u64 = 20;

fn curated_entry(i: usize) -> Program {
    use Instr::*;
    let p = |v: &[Instr]| Program(v.to_vec());
    match i {
        1 => p(&[Halt(1)]),
        2 => p(&[Halt(0)]),
        3 => p(&[Inc(1), Halt(1)]),
        // Parity loops: 1 on even inputs / on odd inputs.
        4 => p(&[
            DecJz(0, 3),
            DecJz(0, 5),
            DecJz(2, 0),
            Inc(1),
            Halt(1),
            Halt(1),
        ]),
        5 => p(&[Inc(1), DecJz(2, 0)]),
        6 => set_program(&SetSpec::lit("1", false)),
        7 => p(&[Inc(1), Inc(1), Halt(1)]),
        8 => set_program(&SetSpec::lit("10", true)),
        9 => p(&[DecJz(0, 4), DecJz(0, 3), DecJz(2, 0), Inc(1), Halt(1)]),
        10 => set_program(&SetSpec::lit("01", false)),
        // Halts on input 0 only.
        11 => p(&[DecJz(0, 2), DecJz(2, 1), Halt(1)]),
        12 => set_program(&SetSpec::lit("0", true)),
        13 => set_program(&SetSpec::lit("11", false)),
        14 => set_program(&SetSpec::lit("001", true)),
        15 => set_program(&SetSpec::lit("101", false)),
        // Constant 0, but only after counting the input down.
        16 => p(&[DecJz(0, 2), DecJz(2, 0), Halt(1)]),
        17 => set_program(&SetSpec::lit("0110", true)),
        18 => set_program(&SetSpec::lit("111", false)),
        19 => set_program(&SetSpec::lit("0011", false)),
        20 => set_program(&SetSpec::lit("1101", true)),
        _ => unreachable!("curated table has {CURATED_TABLE_LEN} entries"),
    }
}

/// A total program computing the characteristic function of `spec`.
///
/// One `decjz 0` per prefix bit peels the input down; reaching zero at
/// position `i` jumps to the block answering bit `i`, and surviving all of
/// them answers the tail.
pub fn set_program(spec: &SetSpec) -> Program {
    use Instr::*;
    let n = spec.prefix().len() as u32;
    let block = |b: bool| -> Vec<Instr> {
        if b {
            alloc::vec![Inc(1), Halt(1)]
        } else {
            alloc::vec![Halt(1)]
        }
    };
    let tail = spec.tail();
    let tail_block = block(tail);
    let other_at = n + tail_block.len() as u32;
    let uses_other = spec.prefix().bits().iter().any(|&b| b != tail);
    let mut instrs: Vec<Instr> = spec
        .prefix()
        .bits()
        .iter()
        .map(|&b| DecJz(0, if b == tail { n } else { other_at }))
        .collect();
    instrs.extend(tail_block);
    if uses_other {
        instrs.extend(block(!tail));
    }
    Program(instrs)
}

/// A characteristic index for `spec`.
pub fn index_of(numbering: Numbering, spec: &SetSpec) -> CodeNumber {
    numbering.encode(&set_program(spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{run, run_program, RunOutcome};

    #[test]
    fn pairing_round_trips() {
        for r in 0..40u32 {
            for t in 0..40u32 {
                let (a, b) = unpair(pair(r, t));
                assert_eq!((a, b), (u64::from(r), u64::from(t)));
            }
        }
        assert_eq!(pair(0, 0), 0);
        assert_eq!(pair(1, 0), 1);
        assert_eq!(pair(0, 1), 2);
    }

    #[test]
    fn code_zero_diverges_in_both_numberings() {
        for n in [Numbering::Standard, Numbering::Curated] {
            for input in 0..4 {
                assert_eq!(
                    run(n, &CodeNumber::from(0), input, 10_000),
                    RunOutcome::Running
                );
            }
        }
    }

    #[test]
    fn constant_zero_code_in_standard_numbering() {
        // "1" sentinel + gamma(6) = "00110".
        let p = Program(alloc::vec![Instr::Halt(1)]);
        assert_eq!(Numbering::Standard.encode(&p), CodeNumber::from(0b100110));
        assert_eq!(Numbering::Curated.encode(&p), CodeNumber::from(1));
    }

    #[test]
    fn undecodable_codes_diverge() {
        // "1" + "00" runs out of bits inside a gamma code.
        let k = CodeNumber::from(0b100);
        assert_eq!(Numbering::Standard.decode(&k), Program::diverging());
    }

    #[test]
    fn curated_table_programs_are_distinct() {
        for i in 1..=CURATED_TABLE_LEN as usize {
            for j in 1..i {
                assert_ne!(curated_entry(i), curated_entry(j), "entries {j} and {i}");
            }
        }
    }

    #[test]
    fn set_program_examples() {
        let outputs = |spec: SetSpec| -> Vec<u64> {
            let p = set_program(&spec);
            (0..6)
                .map(|i| run_program(&p, i, 100).value().unwrap())
                .collect()
        };
        assert_eq!(outputs(SetSpec::empty()), [0, 0, 0, 0, 0, 0]);
        assert_eq!(outputs(SetSpec::naturals()), [1, 1, 1, 1, 1, 1]);
        assert_eq!(outputs(SetSpec::lit("10", true)), [1, 0, 1, 1, 1, 1]);
        assert_eq!(outputs(SetSpec::lit("0110", false)), [0, 1, 1, 0, 0, 0]);
        assert_eq!(
            set_program(&SetSpec::empty()),
            Program(alloc::vec![Instr::Halt(1)])
        );
    }

    #[test]
    fn index_of_lands_on_table_entries() {
        let n = Numbering::Curated;
        assert_eq!(index_of(n, &SetSpec::empty()), CodeNumber::from(1));
        assert_eq!(index_of(n, &SetSpec::naturals()), CodeNumber::from(3));
        assert_eq!(index_of(n, &SetSpec::lit("10", true)), CodeNumber::from(8));
        let far = index_of(n, &SetSpec::lit("1110001", false));
        assert!(far.to_u64().is_none_or(|v| v > CURATED_TABLE_LEN));
    }
}
