use thiserror::Error;

use crate::diagram::Violation;
use crate::psyquandle::AxiomReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid diagram: {}", join_violations(.0))]
    InvalidDiagram(Vec<Violation>),

    #[error("diagram mixes singular crossings and precrossings")]
    MixedDiagram,

    #[error("diagram has singular crossings; a pseudolink diagram is required")]
    NotPseudolink,

    #[error("diagram is not classical")]
    NotClassical,

    #[error("psyquandle is not pI-adequate; precrossing colorings are undefined")]
    NotPiAdequate,

    #[error("unknown site {0}")]
    UnknownSite(String),

    #[error("move {0} cannot be applied: {1}")]
    MoveNotApplicable(String, String),

    #[error("table entry {value} out of range 1..={n} at {table}[{row}][{col}]")]
    OutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: i64,
        n: usize,
    },

    #[error("axioms failed: {0}")]
    Axioms(AxiomReport),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("empty input")]
    EmptyInput,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("polynomial parse error at offset {offset}: {message}")]
    PolyParse { offset: usize, message: String },

    #[error("{0}")]
    Corpus(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
