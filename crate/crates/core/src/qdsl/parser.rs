//! Recursive descent over the token stream.
//!
//! The only ambiguity is `(`: it opens either a Pochhammer symbol or a
//! parenthesized expression. The parser tries the Pochhammer reading up to
//! the `;` and rewinds if that fails.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ast::{Bound, Expr, IntExpr, SignedQ};
use super::lexer::{tokenize, Spanned, Tok};
use super::ParseError;

const RESERVED: [&str; 4] = ["q", "inf", "sum", "prod"];

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0, scope: Vec::new() };
    let e = p.expr()?;
    p.expect(&Tok::End, "an operator or end of input")?;
    Ok(e)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    scope: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let s = &self.toks[self.pos];
        ParseError::Syntax { line: s.line, column: s.column, expected: expected.to_string(), found: s.tok.to_string() }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, expected: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == name)
    }

    fn expect_ident(&mut self, name: &str) -> Result<(), ParseError> {
        if self.is_ident(name) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&alloc::format!("`{name}`")))
        }
    }

    fn bound_name(&mut self) -> Result<String, ParseError> {
        let s = &self.toks[self.pos];
        let (line, column) = (s.line, s.column);
        match self.bump() {
            Tok::Ident(name) if self.scope.contains(&name) => Ok(name),
            Tok::Ident(name) if !RESERVED.contains(&name.as_str()) => {
                Err(ParseError::UnboundIndex { name, line, column })
            }
            _ => {
                self.pos -= 1;
                Err(self.error("an index name"))
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.eat(&Tok::Caret) {
            return Ok(Expr::Pow(Box::new(base), self.int_atom()?));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(name) => match name.as_str() {
                "q" => Ok(Expr::QPow(self.qpow()?)),
                "sum" => self.sum(),
                "prod" => self.prod(),
                _ => Ok(Expr::Index(self.bound_name()?)),
            },
            Tok::LParen => {
                let save = self.pos;
                self.bump();
                if let Ok(args) = self.poch_args() {
                    return self.poch_rest(args);
                }
                self.pos = save + 1;
                let e = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(self.error("an expression")),
        }
    }

    /// `q [^ intexp]`, returning the exponent.
    fn qpow(&mut self) -> Result<IntExpr, ParseError> {
        self.expect_ident("q")?;
        if self.eat(&Tok::Caret) {
            self.int_atom()
        } else {
            Ok(IntExpr::Lit(1))
        }
    }

    /// Signed q-powers up to and including the `;`.
    fn poch_args(&mut self) -> Result<Vec<SignedQ>, ParseError> {
        let mut args = Vec::new();
        loop {
            let negative = self.eat(&Tok::Minus);
            let exponent = self.qpow()?;
            args.push(SignedQ { negative, exponent });
            if self.eat(&Tok::Semi) {
                return Ok(args);
            }
            self.expect(&Tok::Comma, "`,` or `;`")?;
        }
    }

    fn poch_rest(&mut self, args: Vec<SignedQ>) -> Result<Expr, ParseError> {
        let base = self.qpow()?;
        self.expect(&Tok::RParen, "`)` closing the Pochhammer symbol")?;
        self.expect(&Tok::Underscore, "`_` and a length")?;
        let length = if self.is_ident("inf") {
            self.bump();
            None
        } else {
            Some(self.int_atom()?)
        };
        Ok(Expr::Poch { args, base, length })
    }

    /// `( ident = ` shared by sums and products; pushes the index.
    fn binder(&mut self) -> Result<String, ParseError> {
        self.expect(&Tok::LParen, "`(`")?;
        let name = match self.peek().clone() {
            Tok::Ident(name) if !RESERVED.contains(&name.as_str()) => {
                self.bump();
                name
            }
            _ => return Err(self.error("an index name")),
        };
        self.expect(&Tok::Eq, "`=`")?;
        Ok(name)
    }

    fn upper_and_body(&mut self, index: String) -> Result<(Bound, Expr), ParseError> {
        self.expect(&Tok::DotDot, "`..`")?;
        let upper = if self.is_ident("inf") {
            self.bump();
            Bound::Inf
        } else {
            Bound::At(self.int_expr()?)
        };
        self.expect(&Tok::Comma, "`,`")?;
        self.scope.push(index);
        let body = self.expr();
        self.scope.pop();
        let body = body?;
        self.expect(&Tok::RParen, "`)`")?;
        Ok((upper, body))
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        self.expect_ident("sum")?;
        let index = self.binder()?;
        let lower = if self.peek() == &Tok::Minus && matches!(self.peek_at(1), Tok::Ident(s) if s == "inf") {
            self.bump();
            self.bump();
            Bound::NegInf
        } else {
            Bound::At(self.int_expr()?)
        };
        let (upper, body) = self.upper_and_body(index.clone())?;
        Ok(Expr::Sum { index, lower, upper, body: Box::new(body) })
    }

    fn prod(&mut self) -> Result<Expr, ParseError> {
        self.expect_ident("prod")?;
        let index = self.binder()?;
        let lower = self.int_expr()?;
        let (upper, body) = self.upper_and_body(index.clone())?;
        Ok(Expr::Prod { index, lower, upper, body: Box::new(body) })
    }

    fn int_expr(&mut self) -> Result<IntExpr, ParseError> {
        let mut lhs = self.int_term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = IntExpr::Add(Box::new(lhs), Box::new(self.int_term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = IntExpr::Sub(Box::new(lhs), Box::new(self.int_term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn int_term(&mut self) -> Result<IntExpr, ParseError> {
        let mut lhs = self.int_atom()?;
        while self.eat(&Tok::Star) {
            lhs = IntExpr::Mul(Box::new(lhs), Box::new(self.int_atom()?));
        }
        Ok(lhs)
    }

    /// Literal, index, unary minus, or a parenthesized integer expression.
    fn int_atom(&mut self) -> Result<IntExpr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(IntExpr::Lit(n))
            }
            Tok::Minus => {
                self.bump();
                Ok(IntExpr::Neg(Box::new(self.int_atom()?)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.int_expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(_) => Ok(IntExpr::Var(self.bound_name()?)),
            _ => Err(self.error("an integer exponent")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(n: i64) -> IntExpr {
        IntExpr::Lit(n)
    }

    fn poch_inf(args: &[(bool, i64)], base: i64) -> Expr {
        Expr::Poch {
            args: args.iter().map(|&(negative, e)| SignedQ { negative, exponent: lit(e) }).collect(),
            base: lit(base),
            length: None,
        }
    }

    #[test]
    fn generating_function_tree() {
        let e = parse("1/((q;q^2)_inf^2 * (q^2;q^2)_inf)").unwrap();
        let expected = Expr::Div(
            Box::new(Expr::Int(1)),
            Box::new(Expr::Mul(
                Box::new(Expr::Pow(Box::new(poch_inf(&[(false, 1)], 2)), lit(2))),
                Box::new(poch_inf(&[(false, 2)], 2)),
            )),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn multi_argument_poch() {
        assert_eq!(parse("(q,-q,q^2;q^2)_inf").unwrap(), poch_inf(&[(false, 1), (true, 1), (false, 2)], 2));
    }

    #[test]
    fn sum_with_finite_pochhammers() {
        let e = parse("sum(n=0..inf, q^(2*n) / ((q^2;q^2)_n * (q;q^2)_n^2))").unwrap();
        let Expr::Sum { index, lower, upper, body } = e else { panic!("not a sum") };
        assert_eq!(index, "n");
        assert_eq!(lower, Bound::At(lit(0)));
        assert_eq!(upper, Bound::Inf);
        assert!(matches!(*body, Expr::Div(..)));
    }

    #[test]
    fn parenthesized_q_is_not_a_poch() {
        assert_eq!(parse("(q)").unwrap(), Expr::QPow(lit(1)));
        assert_eq!(parse("(-q^2)").unwrap(), Expr::Neg(Box::new(Expr::QPow(lit(2)))));
        assert!(matches!(parse("(q+1)^2").unwrap(), Expr::Pow(..)));
    }

    #[test]
    fn bilateral_and_products() {
        let e = parse("sum(n=-inf..inf, (-1)^n*q^(n*n))").unwrap();
        assert!(matches!(e, Expr::Sum { lower: Bound::NegInf, upper: Bound::Inf, .. }));
        let e = parse("prod(j=1..inf, 1-q^j)").unwrap();
        assert!(matches!(e, Expr::Prod { upper: Bound::Inf, .. }));
        let e = parse("sum(n=-3..3, q^(n*n))").unwrap();
        let Expr::Sum { lower: Bound::At(IntExpr::Neg(_)), .. } = e else { panic!("lower bound") };
    }

    #[test]
    fn unbound_index() {
        match parse("q^(2*m)") {
            Err(ParseError::UnboundIndex { name, line: 1, column: 6 }) => assert_eq!(name, "m"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("sum(n=0..inf, q^k)"), Err(ParseError::UnboundIndex { .. })));
        assert!(matches!(parse("sum(n=0..n, q)"), Err(ParseError::UnboundIndex { .. })));
        // the index goes out of scope after the sum
        assert!(matches!(parse("sum(n=0..2, q^n) + q^n"), Err(ParseError::UnboundIndex { .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("1 + ") {
            Err(ParseError::Syntax { line: 1, column: 5, found, .. }) => assert_eq!(found, "end of input"),
            other => panic!("{other:?}"),
        }
        match parse("(q;q)") {
            Err(ParseError::Syntax { expected, .. }) => assert!(expected.contains('_')),
            other => panic!("{other:?}"),
        }
        assert!(parse("(q;q)_inf)").is_err());
        assert!(parse("sum(q=0..inf, q)").is_err());
        assert!(parse("").is_err());
    }
}
