//! A small text language for q-series.
//!
//! ```text
//! expr    := term { ("+"|"-") term }
//! term    := factor { ("*"|"/") factor }
//! factor  := "-" factor | base [ "^" intatom ]
//! base    := integer | index | qpow | poch | sum | prod | "(" expr ")"
//! qpow    := "q" [ "^" intatom ]
//! poch    := "(" ["-"] qpow { "," ["-"] qpow } ";" qpow ")" "_" ( "inf" | intatom )
//! sum     := "sum" "(" index "=" ( "-inf" | intexp ) ".." ( "inf" | intexp ) "," expr ")"
//! prod    := "prod" "(" index "=" intexp ".." ( "inf" | intexp ) "," expr ")"
//! intexp  := integer arithmetic with "+", "-", "*" over literals and indices
//! intatom := integer | index | "-" intatom | "(" intexp ")"
//! ```
//!
//! Exponents and Pochhammer lengths are atoms, so `q^2*n` is `q^2` times
//! `n`; write `q^(2*n)` for the power. Open-ended sums stop once two
//! consecutive summands vanish to the working order, and open-ended
//! products once two consecutive factors are `1` to that order. Both give
//! up with [`EvalError::NonTerminatingSum`] after `10 (N + 2)` terms.

mod ast;
mod corpus;
mod eval;
mod lexer;
mod parser;
mod print;

use alloc::string::String;
use core::fmt;

pub use ast::{Bound, Expr, IntExpr, SignedQ};
pub use corpus::transcription;
pub use eval::evaluate;
pub use parser::parse;
pub use print::print;

use crate::series::{Series, SeriesError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax { line: usize, column: usize, expected: String, found: String },
    UnboundIndex { name: String, line: usize, column: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, column, expected, found } => {
                write!(f, "{line}:{column}: expected {expected}, found {found}")
            }
            ParseError::UnboundIndex { name, line, column } => {
                write!(f, "{line}:{column}: index `{name}` is not bound by an enclosing sum or product")
            }
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    Series(SeriesError),
    /// Also raised by open-ended products and oversized finite ranges.
    NonTerminatingSum {
        terms: usize,
    },
    NegativeQExponent {
        exponent: i64,
    },
    /// An infinite Pochhammer argument `±q^argument` with `argument < 1`,
    /// or a base `q^base` with `base < 1`.
    InvalidSpecialization {
        argument: i64,
        base: i64,
    },
    NegativeLength {
        length: i64,
    },
    /// A sum starting at `inf` or a product ending at `-inf`.
    InvalidBound,
    Overflow,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Series(e) => write!(f, "{e}"),
            EvalError::NonTerminatingSum { terms } => {
                write!(f, "open-ended sum or product did not settle within {terms} terms")
            }
            EvalError::NegativeQExponent { exponent } => write!(f, "negative power of q: q^{exponent}"),
            EvalError::InvalidSpecialization { argument, base } => write!(
                f,
                "invalid specialization: infinite Pochhammer needs q-exponents >= 1 (argument q^{argument}, base q^{base})"
            ),
            EvalError::NegativeLength { length } => write!(f, "negative Pochhammer length {length}"),
            EvalError::InvalidBound => f.write_str("sums cannot start at inf and products cannot end at -inf"),
            EvalError::Overflow => f.write_str("integer overflow in an exponent expression"),
        }
    }
}

impl core::error::Error for EvalError {}

impl From<SeriesError> for EvalError {
    fn from(e: SeriesError) -> Self {
        EvalError::Series(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DslError {
    Parse(ParseError),
    Eval(EvalError),
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DslError::Parse(e) => write!(f, "parse error at {e}"),
            DslError::Eval(e) => write!(f, "evaluation error: {e}"),
        }
    }
}

impl core::error::Error for DslError {}

/// Parses and evaluates in one step.
pub fn expand(src: &str, order: usize) -> Result<Series, DslError> {
    let e = parse(src).map_err(DslError::Parse)?;
    evaluate(&e, order).map_err(DslError::Eval)
}
