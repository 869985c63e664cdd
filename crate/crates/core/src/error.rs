//! Error type shared by the whole workbench.

use thiserror::Error;

/// Everything that can go wrong, with enough payload to name a witness.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("scalars from different fields: {0} vs {1}")]
    MixedFields(String, String),

    #[error("linear system is infeasible{}", fmt_detail(.0))]
    Infeasible(Option<String>),

    #[error("not a complex: d∘d ≠ 0 at degree {degree}, basis element {witness}")]
    NotAComplex { degree: usize, witness: String },

    #[error("operands live in different truncation windows")]
    WindowMismatch,

    #[error("negative degree: {0}")]
    NegativeDegree(String),

    #[error("corestriction needs words of length > {cap} (from {witness})")]
    WordCapExceeded { cap: usize, witness: String },

    #[error("no homotopy of kind {kind} exists on the window")]
    NoHomotopy { kind: &'static str },

    #[error("constrained solve for the contracting homotopy on the cobar-bar resolution failed: {0}")]
    NoMunkholmHomotopy(String),

    #[error("not a homotopy: {0}")]
    NotAHomotopy(String),

    #[error("square does not commute at degree {degree}, basis element {witness}")]
    SquareNotCommuting { degree: usize, witness: String },

    #[error("not a chain map: fails at degree {degree}, basis element {witness}")]
    NotAChainMap { degree: usize, witness: String },

    #[error("induced map on homology is not invertible in degree {0}")]
    NotIso(usize),

    #[error("element is not a cycle in degree {0}")]
    NotACycle(usize),

    #[error("generator of degree {0} breaks simple connectivity or commutativity")]
    NotSimplyConnected(usize),

    #[error("bad configuration: {0}")]
    ConfigError(String),

    #[error("{0}")]
    Other(String),
}

fn fmt_detail(detail: &Option<String>) -> String {
    match detail {
        Some(d) => format!(": {d}"),
        None => String::new(),
    }
}
