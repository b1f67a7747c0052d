use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

/// Integer arithmetic over literals and bound indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntExpr {
    Lit(i64),
    Var(String),
    Neg(Box<IntExpr>),
    Add(Box<IntExpr>, Box<IntExpr>),
    Sub(Box<IntExpr>, Box<IntExpr>),
    Mul(Box<IntExpr>, Box<IntExpr>),
}

/// `±q^exponent`, a Pochhammer argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedQ {
    pub negative: bool,
    pub exponent: IntExpr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Inf,
    At(IntExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    /// A bound index used as a constant.
    Index(String),
    QPow(IntExpr),
    /// `(a_1, ..., a_k; q^base)_length`; `None` length means infinite.
    Poch {
        args: Vec<SignedQ>,
        base: IntExpr,
        length: Option<IntExpr>,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, IntExpr),
    Sum {
        index: String,
        lower: Bound,
        upper: Bound,
        body: Box<Expr>,
    },
    Prod {
        index: String,
        lower: IntExpr,
        upper: Bound,
        body: Box<Expr>,
    },
}
