use alloc::string::String;
use core::fmt;

use crate::realform::ValidationReport;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug)]
pub enum Error {
    /// No root system of this series and rank.
    InvalidType {
        series: char,
        rank: usize,
        reason: &'static str,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    IndexOutOfRange {
        index: usize,
        bound: usize,
    },
    /// A set of roots does not satisfy an operation's precondition.
    NotAPositiveSystem(String),
    InvalidFunctional(String),
    /// The Satake datum failed one or more checks; the report carries them.
    InvalidSatake(ValidationReport),
    InvalidDatum(String),
    InvalidLattice(String),
    NotTotallyReal,
    NotARealRoot,
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    /// An internal postcondition failed. Indicates a bug, not a user error.
    Defect(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType { series, rank, reason } => write!(f, "no root system {}{}: {}", series, rank, reason),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {}, found {}", expected, found)
            }
            Error::IndexOutOfRange { index, bound } => write!(f, "index {} out of range 1..={}", index + 1, bound),
            Error::NotAPositiveSystem(s) => write!(f, "not a positive system: {}", s),
            Error::InvalidFunctional(s) => write!(f, "invalid functional: {}", s),
            Error::InvalidSatake(report) => {
                write!(f, "invalid Satake datum:")?;
                for c in report.failures() {
                    write!(f, " [{}: {}]", c.name, c.detail)?;
                }
                Ok(())
            }
            Error::InvalidDatum(s) => write!(f, "invalid Satake datum: {}", s),
            Error::InvalidLattice(s) => write!(f, "invalid lattice: {}", s),
            Error::NotTotallyReal => {
                f.write_str("parabolic is not totally real; use the general isotropy computation instead")
            }
            Error::NotARealRoot => f.write_str("root is not real"),
            Error::TooLarge { what, value, limit } => write!(f, "{} = {} exceeds the limit {}", what, value, limit),
            Error::Defect(s) => write!(f, "internal defect: {}", s),
        }
    }
}

impl core::error::Error for Error {}
