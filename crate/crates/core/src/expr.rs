//! Expressions over a generator alphabet.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := unary ('^' nat)?
//! unary  := '-' unary | atom
//! atom   := rational | ident | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! A rational literal may carry a sign when it sits where a factor starts, so
//! `-1/2*h` is the literal `-1/2` times `h`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::engine::{Element, Presentation};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(Scalar),
    Ident(String),
    Sum(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Commutator(Box<Expr>, Box<Expr>),
}

const PREC_SUM: u8 = 1;
const PREC_PRODUCT: u8 = 2;
const PREC_NEG: u8 = 3;
const PREC_POW: u8 = 4;
const PREC_ATOM: u8 = 5;

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(..) | Expr::Diff(..) => PREC_SUM,
            Expr::Product(..) => PREC_PRODUCT,
            Expr::Neg(_) => PREC_NEG,
            Expr::Rational(c) if c < &Scalar::zero() => PREC_NEG,
            Expr::Pow(..) => PREC_POW,
            _ => PREC_ATOM,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Rational(c) => write!(f, "{}", format_scalar(c)),
            Expr::Ident(s) => write!(f, "{s}"),
            Expr::Sum(a, b) | Expr::Diff(a, b) => {
                a.write_at(f, PREC_SUM)?;
                write!(f, " {} ", if matches!(self, Expr::Sum(..)) { '+' } else { '-' })?;
                b.write_at(f, PREC_PRODUCT)
            }
            Expr::Product(a, b) => {
                a.write_at(f, PREC_PRODUCT)?;
                write!(f, "*")?;
                b.write_at(f, PREC_NEG)
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                // `-` followed by a digit would lex as a signed literal
                if matches!(**a, Expr::Rational(_)) {
                    write!(f, "(")?;
                    a.write_at(f, 0)?;
                    write!(f, ")")
                } else {
                    a.write_at(f, PREC_NEG)
                }
            }
            Expr::Pow(a, n) => {
                a.write_at(f, PREC_ATOM)?;
                write!(f, "^{n}")
            }
            Expr::Commutator(a, b) => {
                write!(f, "[")?;
                a.write_at(f, 0)?;
                write!(f, ", ")?;
                b.write_at(f, 0)?;
                write!(f, "]")
            }
        }
    }

    pub fn idents(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_idents(&mut out);
        out
    }

    fn collect_idents<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Rational(_) => {}
            Expr::Ident(s) => out.push(s),
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_idents(out),
            Expr::Sum(a, b) | Expr::Diff(a, b) | Expr::Product(a, b) | Expr::Commutator(a, b) => {
                a.collect_idents(out);
                b.collect_idents(out);
            }
        }
    }

    /// Evaluates in `pres`; identifiers are generator names or aliases.
    pub fn eval(&self, pres: &Arc<Presentation>) -> Result<Element> {
        Ok(match self {
            Expr::Rational(c) => pres.scalar(c.clone()),
            Expr::Ident(name) => match pres.generator_index(name) {
                Some(g) => pres.gen(g),
                None => match pres.alias(name) {
                    Some(t) => Element::from_terms(pres.clone(), t.clone()),
                    None => return Err(Error::UnknownGenerator(name.clone())),
                },
            },
            Expr::Sum(a, b) => a.eval(pres)?.try_add(&b.eval(pres)?)?,
            Expr::Diff(a, b) => a.eval(pres)?.try_sub(&b.eval(pres)?)?,
            Expr::Product(a, b) => a.eval(pres)?.try_mul(&b.eval(pres)?)?,
            Expr::Neg(a) => a.eval(pres)?.scale(&-Scalar::one()),
            Expr::Pow(a, n) => a.eval(pres)?.pow(*n),
            Expr::Commutator(a, b) => a.eval(pres)?.commutator(&b.eval(pres)?)?,
        })
    }

    /// Evaluates as a polynomial in `var`. Commutators vanish.
    pub fn eval_poly(&self, var: &str) -> Result<Poly> {
        Ok(match self {
            Expr::Rational(c) => Poly::constant(c.clone()),
            Expr::Ident(name) if name == var => Poly::var(),
            Expr::Ident(name) => return Err(Error::UnknownGenerator(name.clone())),
            Expr::Sum(a, b) => a.eval_poly(var)? + b.eval_poly(var)?,
            Expr::Diff(a, b) => a.eval_poly(var)? - b.eval_poly(var)?,
            Expr::Product(a, b) => a.eval_poly(var)? * b.eval_poly(var)?,
            Expr::Neg(a) => a.eval_poly(var)?.scale(&-Scalar::one()),
            Expr::Pow(a, n) => a.eval_poly(var)?.pow(*n),
            Expr::Commutator(a, b) => {
                a.eval_poly(var)?;
                b.eval_poly(var)?;
                Poly::zero()
            }
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'/' {
                i += 1;
                let den = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if den == i {
                    return Err(parse_error(den, "expected a denominator"));
                }
            }
            if i < bytes.len() && bytes[i] == b'.' {
                return Err(parse_error(i, "decimal literals are not exact; use p/q"));
            }
            out.push((start, Tok::Num(text[start..i].to_string())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*^()[],".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(parse_error(i, &format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

fn parse_error(offset: usize, message: &str) -> Error {
    Error::Parse {
        offset,
        message: message.to_string(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(parse_error(self.offset(), &format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Sum(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Diff(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = Expr::Product(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            if let Some(Tok::Num(n)) = self.peek().cloned() {
                self.pos += 1;
                let lit = Expr::Rational(-self.literal(&n)?);
                return self.power(lit);
            }
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        self.power(base)
    }

    fn power(&mut self, base: Expr) -> Result<Expr> {
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) if !n.contains('/') => {
                self.pos += 1;
                let k = n
                    .parse::<u32>()
                    .map_err(|_| parse_error(at, "exponent out of range"))?;
                Ok(Expr::Pow(Box::new(base), k))
            }
            _ => Err(parse_error(at, "expected a natural-number exponent")),
        }
    }

    fn literal(&self, n: &str) -> Result<Scalar> {
        let at = self.toks[self.pos - 1].0;
        parse_scalar(n).map_err(|e| match e {
            Error::Parse { message, .. } => parse_error(at, &message),
            other => other,
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Rational(self.literal(&n)?))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Expr::Commutator(Box::new(a), Box::new(b)))
            }
            Some(Tok::Sym(c)) => Err(parse_error(at, &format!("unexpected '{c}'"))),
            None => Err(parse_error(at, "unexpected end of input")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(parse_error(p.offset(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and evaluates `text` in `pres`.
pub fn parse_element(text: &str, pres: &Arc<Presentation>) -> Result<Element> {
    parse(text)?.eval(pres)
}

/// Parses a polynomial in the Casimir, written with `Delta`.
pub fn parse_poly(text: &str) -> Result<Poly> {
    parse(text)?.eval_poly("Delta")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use crate::sl2::Hz;

    #[test]
    fn evaluates_t() {
        let hz = Hz::new(&Poly::var());
        let t = parse_element("e*y^2 + h*x*y - f*x^2", hz.presentation()).unwrap();
        assert_eq!(t, hz.t());
        assert_eq!(parse_element("t", hz.presentation()).unwrap(), hz.t());
    }

    #[test]
    fn commutator_syntax() {
        let e = parse("[Delta, x]").unwrap();
        assert!(matches!(e, Expr::Commutator(..)));
        let hz = Hz::new(&Poly::one());
        let v = e.eval(hz.presentation()).unwrap();
        let direct = hz.casimir().commutator(&hz.x()).unwrap();
        assert_eq!(v, direct);
    }

    #[test]
    fn syntax_error_offset() {
        assert_eq!(
            parse("e +* f").unwrap_err(),
            Error::Parse {
                offset: 3,
                message: "unexpected '*'".into()
            }
        );
        assert!(matches!(parse("e + 1.5"), Err(Error::Parse { offset: 5, .. })));
        assert!(matches!(parse("1/0"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse("(e"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse("e^x"), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn unknown_identifier() {
        let hz = Hz::new(&Poly::one());
        assert_eq!(
            parse_element("e + q", hz.presentation()).unwrap_err(),
            Error::UnknownGenerator("q".into())
        );
    }

    #[test]
    fn precedence_and_signs() {
        assert_eq!(
            parse_poly("Delta^2 - 2*Delta + 1").unwrap(),
            Poly::from_ints(&[1, -2, 1])
        );
        assert_eq!(parse_poly("-1/2").unwrap(), Poly::constant(frac(-1, 2)));
        assert_eq!(parse_poly("-Delta^2").unwrap(), Poly::from_ints(&[0, 0, -1]));
        assert_eq!(parse_poly("(1 - Delta)^2").unwrap(), Poly::from_ints(&[1, -2, 1]));
        assert_eq!(parse_poly("2 - 3 - 4").unwrap(), Poly::constant(int(-5)));
    }

    #[test]
    fn print_round_trip() {
        for s in ["-(-1/2)", "a - -b", "(a - b)*c", "-a^2", "(-a)^2", "a - (b + c)", "[a, b]^3"] {
            let e = parse(s).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{s} -> {e}");
        }
    }
}
