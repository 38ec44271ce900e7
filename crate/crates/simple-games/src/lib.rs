//! IO, file formats, verification suites and the classification table for
//! the simple-games toolkit.

pub mod format;
pub mod sample;
pub mod table;
pub mod verify;
