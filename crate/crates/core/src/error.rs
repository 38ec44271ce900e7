use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    BadBitString(String),
    /// Types 6, 8, 10, 14 and 16 contain no games at all.
    EmptyType(u8),
    UnknownType(u8),
    CarrierTooLarge {
        carrier: usize,
        bound: usize,
    },
    StringTooLong {
        len: usize,
        carrier: usize,
    },
    PartitionFailure(String),
    /// The length is not `l_s` for any computed stage, or the stage with that
    /// length may still be followed by an uncomputed stage of equal length.
    NotAStageLength(usize),
    /// The stage cap was reached before the requested object surfaced.
    InsufficientStages(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadBitString(s) => write!(f, "not a 0/1 string: {s:?}"),
            Error::EmptyType(t) => write!(f, "type {t} is provably empty"),
            Error::UnknownType(t) => write!(f, "no construction for type {t}"),
            Error::CarrierTooLarge { carrier, bound } => {
                write!(f, "carrier size {carrier} exceeds bound {bound}")
            }
            Error::StringTooLong { len, carrier } => {
                write!(
                    f,
                    "determining string of length {len} does not fit carrier {carrier}"
                )
            }
            Error::PartitionFailure(msg) => write!(f, "partition check failed: {msg}"),
            Error::NotAStageLength(l) => write!(f, "{l} is not a closed stage length"),
            Error::InsufficientStages(msg) => write!(f, "insufficient stages: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
