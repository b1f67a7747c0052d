use alloc::vec::Vec;

use super::ast::{Bound, Expr, IntExpr};
use super::EvalError;
use crate::qfactory::{finite_pochhammer, pochhammer, FinitePochSpec, PochSpec};
use crate::series::{Series, Sign};

/// Finite ranges longer than this are refused rather than ground through.
const FINITE_RANGE_LIMIT: i64 = 1_000_000;

pub fn evaluate(e: &Expr, order: usize) -> Result<Series, EvalError> {
    Evaluator { order, env: Vec::new() }.eval(e)
}

struct Evaluator<'a> {
    order: usize,
    env: Vec<(&'a str, i64)>,
}

impl<'a> Evaluator<'a> {
    fn lookup(&self, name: &str) -> i64 {
        self.env
            .iter()
            .rev()
            .find(|(n, _)| *n == name)
            .map(|&(_, v)| v)
            .expect("parser guarantees every index is bound")
    }

    fn int(&self, e: &IntExpr) -> Result<i64, EvalError> {
        let v = match e {
            IntExpr::Lit(n) => Some(*n),
            IntExpr::Var(name) => Some(self.lookup(name)),
            IntExpr::Neg(a) => self.int(a)?.checked_neg(),
            IntExpr::Add(a, b) => self.int(a)?.checked_add(self.int(b)?),
            IntExpr::Sub(a, b) => self.int(a)?.checked_sub(self.int(b)?),
            IntExpr::Mul(a, b) => self.int(a)?.checked_mul(self.int(b)?),
        };
        v.ok_or(EvalError::Overflow)
    }

    /// The cap after which an open-ended sum or product gives up.
    fn cap(&self) -> usize {
        10 * (self.order + 2)
    }

    fn eval(&mut self, e: &'a Expr) -> Result<Series, EvalError> {
        let order = self.order;
        Ok(match e {
            Expr::Int(n) => Series::constant(*n, order),
            Expr::Index(name) => Series::constant(self.lookup(name), order),
            Expr::QPow(k) => {
                let k = self.int(k)?;
                if k < 0 {
                    return Err(EvalError::NegativeQExponent { exponent: k });
                }
                Series::monomial(1, usize::try_from(k).unwrap_or(usize::MAX), order)
            }
            Expr::Poch { args, base, length } => {
                let step = self.int(base)?;
                let length = length.as_ref().map(|l| self.int(l)).transpose()?;
                let mut acc = Series::one(order);
                for arg in args {
                    let offset = self.int(&arg.exponent)?;
                    let sign = if arg.negative { Sign::Minus } else { Sign::Plus };
                    let factor = match length {
                        None => {
                            let spec = PochSpec::new(sign, offset, step, 1)
                                .map_err(|_| EvalError::InvalidSpecialization { argument: offset, base: step })?;
                            pochhammer(&spec, order)
                        }
                        Some(len) => {
                            if len < 0 {
                                return Err(EvalError::NegativeLength { length: len });
                            }
                            if offset < 0 {
                                return Err(EvalError::NegativeQExponent { exponent: offset });
                            }
                            let spec = FinitePochSpec::new(sign, offset, step, len as u64)
                                .map_err(|_| EvalError::InvalidSpecialization { argument: offset, base: step })?;
                            finite_pochhammer(&spec, order)
                        }
                    };
                    acc = &acc * &factor;
                }
                acc
            }
            Expr::Neg(a) => -&self.eval(a)?,
            Expr::Add(a, b) => &self.eval(a)? + &self.eval(b)?,
            Expr::Sub(a, b) => &self.eval(a)? - &self.eval(b)?,
            Expr::Mul(a, b) => &self.eval(a)? * &self.eval(b)?,
            Expr::Div(a, b) => self.eval(a)?.checked_div(&self.eval(b)?)?,
            Expr::Pow(a, k) => {
                let k = self.int(k)?;
                self.eval(a)?.pow(k)?
            }
            Expr::Sum { index, lower, upper, body } => self.sum(index, lower, upper, body)?,
            Expr::Prod { index, lower, upper, body } => {
                let lower = self.int(lower)?;
                let mut acc = Series::one(order);
                match upper {
                    Bound::At(u) => {
                        let upper = self.int(u)?;
                        check_range(lower, upper)?;
                        for n in lower..=upper {
                            acc = &acc * &self.with(index, n, body)?;
                        }
                    }
                    Bound::Inf => {
                        let one = Series::one(order);
                        let mut trivial_run = 0;
                        let mut n = lower;
                        for _ in 0..self.cap() {
                            let f = self.with(index, n, body)?;
                            trivial_run = if f == one { trivial_run + 1 } else { 0 };
                            acc = &acc * &f;
                            if trivial_run == 2 {
                                return Ok(acc);
                            }
                            n = n.checked_add(1).ok_or(EvalError::Overflow)?;
                        }
                        return Err(EvalError::NonTerminatingSum { terms: self.cap() });
                    }
                    Bound::NegInf => return Err(EvalError::InvalidBound),
                }
                acc
            }
        })
    }

    fn with(&mut self, index: &'a str, value: i64, body: &'a Expr) -> Result<Series, EvalError> {
        self.env.push((index, value));
        let out = self.eval(body);
        self.env.pop();
        out
    }

    fn sum(&mut self, index: &'a str, lower: &Bound, upper: &Bound, body: &'a Expr) -> Result<Series, EvalError> {
        let mut acc = Series::zero(self.order);
        match (lower, upper) {
            (Bound::At(l), Bound::At(u)) => {
                let (l, u) = (self.int(l)?, self.int(u)?);
                check_range(l, u)?;
                for n in l..=u {
                    acc = &acc + &self.with(index, n, body)?;
                }
            }
            (Bound::At(l), Bound::Inf) => {
                let l = self.int(l)?;
                acc = &acc + &self.tail(index, l, 1, body)?;
            }
            (Bound::NegInf, Bound::At(u)) => {
                let u = self.int(u)?;
                acc = &acc + &self.tail(index, u, -1, body)?;
            }
            (Bound::NegInf, Bound::Inf) => {
                acc = &acc + &self.tail(index, 0, 1, body)?;
                acc = &acc + &self.tail(index, -1, -1, body)?;
            }
            _ => return Err(EvalError::InvalidBound),
        }
        Ok(acc)
    }

    /// One-directional infinite sum from `start`, stopping once two
    /// consecutive summands vanish to the working order.
    fn tail(&mut self, index: &'a str, start: i64, dir: i64, body: &'a Expr) -> Result<Series, EvalError> {
        let mut acc = Series::zero(self.order);
        let mut zero_run = 0;
        let mut n = start;
        for _ in 0..self.cap() {
            let term = self.with(index, n, body)?;
            zero_run = if term.is_zero() { zero_run + 1 } else { 0 };
            acc = &acc + &term;
            if zero_run == 2 {
                return Ok(acc);
            }
            n = n.checked_add(dir).ok_or(EvalError::Overflow)?;
        }
        Err(EvalError::NonTerminatingSum { terms: self.cap() })
    }
}

fn check_range(lower: i64, upper: i64) -> Result<(), EvalError> {
    let len = upper.checked_sub(lower).ok_or(EvalError::Overflow)?;
    if len >= FINITE_RANGE_LIMIT {
        return Err(EvalError::NonTerminatingSum { terms: FINITE_RANGE_LIMIT as usize });
    }
    Ok(())
}
