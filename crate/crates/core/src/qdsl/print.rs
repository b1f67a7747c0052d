//! Source text from an AST, with only the parentheses the grammar needs.

use alloc::string::String;
use core::fmt::Write;

use super::ast::{Bound, Expr, IntExpr};

const SUM: u8 = 0;
const TERM: u8 = 1;
const FACTOR: u8 = 2;
const ATOM: u8 = 3;

pub fn print(e: &Expr) -> String {
    let mut out = String::new();
    expr(&mut out, e, SUM);
    out
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => SUM,
        Expr::Mul(..) | Expr::Div(..) => TERM,
        Expr::Neg(..) | Expr::Pow(..) => FACTOR,
        // `q^k` followed by `^` would merge into one exponent
        Expr::QPow(..) => FACTOR,
        _ => ATOM,
    }
}

fn expr(out: &mut String, e: &Expr, min: u8) {
    if prec(e) < min {
        out.push('(');
        expr(out, e, SUM);
        out.push(')');
        return;
    }
    match e {
        Expr::Int(n) => write!(out, "{n}").unwrap(),
        Expr::Index(name) => out.push_str(name),
        Expr::QPow(k) => qpow(out, k),
        Expr::Poch { args, base, length } => {
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                if a.negative {
                    out.push('-');
                }
                qpow(out, &a.exponent);
            }
            out.push(';');
            qpow(out, base);
            out.push_str(")_");
            match length {
                None => out.push_str("inf"),
                Some(l) => int_atom(out, l),
            }
        }
        Expr::Neg(a) => {
            out.push('-');
            expr(out, a, FACTOR);
        }
        Expr::Add(a, b) => binary(out, a, " + ", b, SUM),
        Expr::Sub(a, b) => binary(out, a, " - ", b, SUM),
        Expr::Mul(a, b) => binary(out, a, "*", b, TERM),
        Expr::Div(a, b) => binary(out, a, "/", b, TERM),
        Expr::Pow(a, k) => {
            expr(out, a, ATOM);
            out.push('^');
            int_atom(out, k);
        }
        Expr::Sum { index, lower, upper, body } => {
            write!(out, "sum({index}=").unwrap();
            bound(out, lower);
            out.push_str("..");
            bound(out, upper);
            out.push_str(", ");
            expr(out, body, SUM);
            out.push(')');
        }
        Expr::Prod { index, lower, upper, body } => {
            write!(out, "prod({index}=").unwrap();
            int_expr(out, lower, SUM);
            out.push_str("..");
            bound(out, upper);
            out.push_str(", ");
            expr(out, body, SUM);
            out.push(')');
        }
    }
}

fn binary(out: &mut String, a: &Expr, op: &str, b: &Expr, level: u8) {
    expr(out, a, level);
    out.push_str(op);
    expr(out, b, level + 1);
}

fn qpow(out: &mut String, k: &IntExpr) {
    out.push('q');
    if *k != IntExpr::Lit(1) {
        out.push('^');
        int_atom(out, k);
    }
}

fn bound(out: &mut String, b: &Bound) {
    match b {
        Bound::NegInf => out.push_str("-inf"),
        Bound::Inf => out.push_str("inf"),
        Bound::At(e) => int_expr(out, e, SUM),
    }
}

fn int_prec(e: &IntExpr) -> u8 {
    match e {
        IntExpr::Add(..) | IntExpr::Sub(..) => SUM,
        IntExpr::Mul(..) => TERM,
        IntExpr::Neg(..) => FACTOR,
        _ => ATOM,
    }
}

fn int_atom(out: &mut String, e: &IntExpr) {
    int_expr(out, e, ATOM);
}

fn int_expr(out: &mut String, e: &IntExpr, min: u8) {
    if int_prec(e) < min {
        out.push('(');
        int_expr(out, e, SUM);
        out.push(')');
        return;
    }
    match e {
        IntExpr::Lit(n) => write!(out, "{n}").unwrap(),
        IntExpr::Var(name) => out.push_str(name),
        IntExpr::Neg(a) => {
            out.push('-');
            int_expr(out, a, FACTOR);
        }
        IntExpr::Add(a, b) => {
            int_expr(out, a, SUM);
            out.push('+');
            int_expr(out, b, TERM);
        }
        IntExpr::Sub(a, b) => {
            int_expr(out, a, SUM);
            out.push('-');
            int_expr(out, b, TERM);
        }
        IntExpr::Mul(a, b) => {
            int_expr(out, a, TERM);
            out.push('*');
            int_expr(out, b, FACTOR);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    fn round_trip(src: &str) -> String {
        let e = parse(src).unwrap();
        let printed = print(&e);
        assert_eq!(parse(&printed).unwrap(), e, "{src} printed as {printed}");
        printed
    }

    #[test]
    fn canonical_spacing() {
        assert_eq!(round_trip("1/((q;q^2)_inf^2 * (q^2;q^2)_inf)"), "1/((q;q^2)_inf^2*(q^2;q^2)_inf)");
        assert_eq!(round_trip("(q , -q,q^2 ; q^2)_inf"), "(q,-q,q^2;q^2)_inf");
        assert_eq!(round_trip("q^(2*n+1)".replace('n', "3").as_str()), "q^(2*3+1)");
    }

    #[test]
    fn precedence_survives() {
        for src in [
            "1 - (q - q^2)",
            "1 - q - q^2",
            "(1 + q)*(1 - q)",
            "1/(q/2)",
            "-(1 + q)",
            "--q",
            "(q)^3",
            "(q^2)^3",
            "((1 + q)^2)^3",
            "(-1)^5",
            "q^(-1)",
            "q^(2-(1-1))",
            "q^(-(2*3))",
            "sum(n=-inf..inf, (-1)^n*q^(n*(3*n+1)))",
            "sum(n=-inf..-1, q^(n*n))",
            "prod(j=2*1..inf, 1 - q^(4*j+2))",
            "sum(n=0..inf, q^(2*n)/((q^2;q^2)_n*(q;q^2)_(n+1)^2))",
            "sum(n=0..inf, n*q^n)^2",
            "(q;q)_(-1)",
        ] {
            round_trip(src);
        }
    }
}
