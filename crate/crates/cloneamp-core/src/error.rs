//! Error types shared by all modules.

use core::fmt;

/// Errors produced by parameter validation, truncation guards and the
/// LP solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A scalar parameter lies outside its admissible domain.
    InvalidParameter { name: &'static str, value: f64 },
    /// A photon-number index exceeds the truncation cutoff.
    IndexOutOfRange { index: usize, cutoff: usize },
    /// A truncated-space computation would exceed the dimension guard.
    ResourceLimit { requested: usize, max: usize },
    /// A state is outside the family the operation supports.
    UnsupportedState(&'static str),
    /// The linear-program solver could not produce an optimum.
    Solver(SolverFailure),
}

/// Terminal outcomes of a failed simplex run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverFailure {
    Infeasible,
    Unbounded,
    IterationLimit,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { name, value } => {
                write!(f, "parameter `{name}` = {value} is outside its domain")
            }
            Error::IndexOutOfRange { index, cutoff } => {
                write!(f, "index {index} exceeds cutoff {cutoff}")
            }
            Error::ResourceLimit { requested, max } => {
                write!(f, "requested dimension {requested} exceeds the guard {max}")
            }
            Error::UnsupportedState(reason) => write!(f, "unsupported state: {reason}"),
            Error::Solver(failure) => write!(f, "solver failure: {failure}"),
        }
    }
}

impl fmt::Display for SolverFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverFailure::Infeasible => write!(f, "infeasible"),
            SolverFailure::Unbounded => write!(f, "unbounded"),
            SolverFailure::IterationLimit => write!(f, "iteration limit reached"),
        }
    }
}

impl core::error::Error for Error {}
