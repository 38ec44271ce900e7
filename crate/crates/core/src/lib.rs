//! Simple games over the natural numbers: bit strings, determining-string
//! games, register machines, the staged computable game and its variants,
//! and finite axiom classification.

#![no_std]

extern crate alloc;

pub mod axioms;
pub mod bitstr;
pub mod detgame;
pub mod error;
pub mod machine;
pub mod noncomp;
pub mod omega;
pub mod setspec;
pub mod variants;

pub use bitstr::BitString;
pub use detgame::{DeterminingSets, Game, Verdict};
pub use error::Error;
pub use setspec::{Coalition, RecursiveSet, SetSpec};
