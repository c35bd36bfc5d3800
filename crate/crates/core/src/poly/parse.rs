//! Recursive-descent parser for the polynomial input language.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := base ('^' natural)?
//! base   := integer | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication. Division is only allowed by
//! nonzero constants, which covers `a/b` and `t`-rational coefficients.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{PolyRing, Polynomial};
use crate::coeff::{Field, FieldElem, UniPoly};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Point};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(text[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax { pos: start, msg: format!("unexpected character `{other}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

/// Parsed expression tree; positions are byte offsets into the input.
#[derive(Clone, Debug)]
pub(crate) enum Expr {
    Num(BigInt),
    Ident(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Expr::Neg(Box::new(self.term()?))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), pos);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Syntax { pos, msg: "exponent too large".into() })?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(Error::Syntax { pos, msg: "expected a natural number exponent".into() }),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::Ident(s)) => Ok(Expr::Ident(s, pos)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Syntax { pos: close, msg: "expected `)`".into() }),
                }
            }
            Some(t) => Err(Error::Syntax { pos, msg: format!("unexpected token {t:?}") }),
            None => Err(Error::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }
}

pub(crate) fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::Syntax { pos: p.pos(), msg: "trailing input".into() });
    }
    Ok(e)
}

/// Arithmetic needed to evaluate an [`Expr`] into some algebra.
pub(crate) trait ExprAlgebra: Sized {
    fn integer(&self, n: &BigInt) -> Self;
    fn atom(&self, name: &str, pos: usize) -> Result<Self>;
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn pow(&self, e: u32) -> Result<Self>;
    /// Division by a constant element of the algebra.
    fn div(&self, other: &Self, pos: usize) -> Result<Self>;
}

pub(crate) fn eval_expr<A: ExprAlgebra>(e: &Expr, ctx: &A) -> Result<A> {
    match e {
        Expr::Num(n) => Ok(ctx.integer(n)),
        Expr::Ident(s, pos) => ctx.atom(s, *pos),
        Expr::Neg(a) => Ok(eval_expr(a, ctx)?.neg()),
        Expr::Add(a, b) => eval_expr(a, ctx)?.add(&eval_expr(b, ctx)?),
        Expr::Sub(a, b) => eval_expr(a, ctx)?.sub(&eval_expr(b, ctx)?),
        Expr::Mul(a, b) => eval_expr(a, ctx)?.mul(&eval_expr(b, ctx)?),
        Expr::Div(a, b, pos) => eval_expr(a, ctx)?.div(&eval_expr(b, ctx)?, *pos),
        Expr::Pow(a, k) => eval_expr(a, ctx)?.pow(*k),
    }
}

impl ExprAlgebra for Polynomial {
    fn integer(&self, n: &BigInt) -> Self {
        Polynomial::from_integer(self.ring(), n)
    }

    fn atom(&self, name: &str, pos: usize) -> Result<Self> {
        let ring = self.ring();
        if let Some(i) = ring.var_index(name) {
            return Ok(Polynomial::var(ring, i));
        }
        if let Some(g) = ring.field().generator(name) {
            return Ok(Polynomial::constant(ring, g));
        }
        Err(Error::UnknownVariable { name: name.to_string(), pos })
    }

    fn add(&self, other: &Self) -> Result<Self> {
        Ok(Polynomial::add(self, other))
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Polynomial::sub(self, other))
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Polynomial::mul(self, other))
    }

    fn neg(&self) -> Self {
        Polynomial::neg(self)
    }

    fn pow(&self, e: u32) -> Result<Self> {
        Ok(Polynomial::pow(self, e))
    }

    fn div(&self, other: &Self, pos: usize) -> Result<Self> {
        if !other.is_constant() {
            return Err(Error::BadCoefficient { pos, msg: "division by a non-constant".into() });
        }
        let c = other.constant_coeff();
        let inv = c.inv().map_err(|_| Error::BadCoefficient { pos, msg: format!("{c} is zero in {}", self.field()) })?;
        Ok(self.scale(&inv))
    }
}

/// Parse a polynomial in `ring`. Identifiers resolve to ring variables
/// first, then to generators of the coefficient field.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let e = parse_expr(text)?;
    eval_expr(&e, &Polynomial::zero(ring))
}

/// Parse a constant of the ring's coefficient field (e.g. `3/2`, `t+1`).
pub fn parse_field_element(text: &str, field: &Field) -> Result<FieldElem> {
    let ring = PolyRing::new(field.clone(), Vec::new(), MonomialOrder::Grevlex)?;
    let p = parse_polynomial(text, &ring)?;
    Ok(p.constant_coeff())
}

/// Split at commas that are not nested inside parentheses. Returns each
/// piece with its byte offset.
pub fn split_top_level(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

/// Parse a comma-separated list of polynomials. An empty list is allowed.
pub fn parse_polynomial_list(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(text, ',')
        .into_iter()
        .map(|(off, piece)| parse_polynomial(piece, ring).map_err(|e| e.offset_by(off)))
        .collect()
}

/// Parse `(a_1, ..., a_n)` with coordinates in `field`.
pub fn parse_point(text: &str, field: &Field) -> Result<Point> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or(Error::Syntax { pos: lead, msg: "a point is written `(a, b, ...)`".into() })?;
    if inner.trim().is_empty() {
        return Ok(Point::new(Vec::new()));
    }
    let coords = split_top_level(inner, ',')
        .into_iter()
        .map(|(off, piece)| parse_field_element(piece, field).map_err(|e| e.offset_by(lead + 1 + off)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Point::new(coords))
}

/// Parse a field descriptor: `QQ`, `Fp(p)`, `<field>(t)`, `ext(<field>, u, <minpoly>)`.
pub fn parse_field(text: &str) -> Result<Field> {
    let lead = text.len() - text.trim_start().len();
    let s = text.trim();
    let (mut field, mut rest, mut off) = if let Some(r) = s.strip_prefix("QQ") {
        (Field::Rational, r, 2)
    } else if let Some(r) = s.strip_prefix("Fp(") {
        let close = r.find(')').ok_or(Error::Syntax { pos: lead + s.len(), msg: "unclosed `Fp(`".into() })?;
        let p: u64 = r[..close]
            .trim()
            .parse()
            .map_err(|_| Error::Syntax { pos: lead + 3, msg: "expected a prime modulus".into() })?;
        (Field::prime(p)?, &r[close + 1..], 3 + close + 1)
    } else if let Some(r) = s.strip_prefix("ext(") {
        let close = matching_paren(r).ok_or(Error::Syntax { pos: lead + s.len(), msg: "unclosed `ext(`".into() })?;
        let parts = split_top_level(&r[..close], ',');
        if parts.len() != 3 {
            return Err(Error::Syntax { pos: lead + 4, msg: "ext takes (base, generator, minimal polynomial)".into() });
        }
        let base = parse_field(parts[0].1).map_err(|e| e.offset_by(lead + 4))?;
        let var = parts[1].1.trim();
        if !is_identifier(var) {
            return Err(Error::Syntax { pos: lead + 4 + parts[1].0, msg: "expected a generator name".into() });
        }
        let ring = PolyRing::grevlex(base.clone(), &[var])?;
        let m = parse_polynomial(parts[2].1, &ring).map_err(|e| e.offset_by(lead + 4 + parts[2].0))?;
        let modulus = univariate_from(&m);
        (base.extension(var, modulus)?, &r[close + 1..], 4 + close + 1)
    } else {
        return Err(Error::Syntax { pos: lead, msg: format!("unknown field `{s}`") });
    };
    // trailing `(t)` suffixes adjoin transcendentals
    loop {
        let r = rest.trim_start();
        off += rest.len() - r.len();
        if r.is_empty() {
            return Ok(field);
        }
        let inner = r.strip_prefix('(').and_then(|x| x.find(')').map(|c| (&x[..c], &x[c + 1..])));
        match inner {
            Some((name, tail)) if is_identifier(name.trim()) => {
                field = field.functions(name.trim())?;
                off += r.len() - tail.len();
                rest = tail;
            }
            _ => return Err(Error::Syntax { pos: lead + off, msg: "expected `(name)`".into() }),
        }
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 1;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Dense univariate view of a polynomial in a one-variable ring.
pub fn univariate_from(p: &Polynomial) -> UniPoly {
    assert_eq!(p.ring().arity(), 1, "univariate ring expected");
    let field = p.field().clone();
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![field.zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponents()[0] as usize] = c.clone();
    }
    UniPoly::new(field, coeffs)
}

/// Inverse of [`univariate_from`].
pub fn from_univariate(u: &UniPoly, ring: &Arc<PolyRing>) -> Polynomial {
    assert_eq!(ring.arity(), 1, "univariate ring expected");
    Polynomial::from_terms(
        ring,
        u.coeffs().iter().enumerate().map(|(i, c)| (super::Monomial::new(vec![i as u32]), c.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qxy() -> Arc<PolyRing> {
        PolyRing::grevlex(Field::Rational, &["x", "y"]).unwrap()
    }

    #[test]
    fn parse_examples() {
        let r = qxy();
        let f = parse_polynomial("x^2 + 2*x*y", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "x^2 + 2*x*y");
        let g = parse_polynomial("(x+y)^2", &r).unwrap();
        assert_eq!(g.to_string(), "x^2 + 2*x*y + y^2");
        match parse_polynomial("x + z", &r) {
            Err(Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "z");
                assert_eq!(pos, 4);
            }
            other => panic!("expected unknown variable, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let r = qxy();
        assert!(matches!(parse_polynomial("2x", &r), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_polynomial("(x + y", &r), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse_polynomial("x^y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_polynomial("x $ y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_polynomial("x/y", &r), Err(Error::BadCoefficient { pos: 2, .. })));
    }

    #[test]
    fn coefficients_in_various_fields() {
        let f5 = PolyRing::grevlex(Field::prime(5).unwrap(), &["x"]).unwrap();
        assert_eq!(parse_polynomial("7*x + 1/2", &f5).unwrap().to_string(), "2*x + 3");
        assert!(matches!(parse_polynomial("1/5", &f5), Err(Error::BadCoefficient { .. })));
        let k = parse_field("Fp(3)(t)").unwrap();
        let r = PolyRing::grevlex(k, &["x"]).unwrap();
        let f = parse_polynomial("x^3 - t", &r).unwrap();
        assert_eq!(f.to_string(), "x^3 + 2*t");
        let g = parse_polynomial("t/(t+1)*x", &r).unwrap();
        assert_eq!(g.to_string(), "t/(t + 1)*x");
        assert_eq!(parse_polynomial(&g.to_string(), &r).unwrap(), g);
    }

    #[test]
    fn field_descriptors() {
        for s in ["QQ", "Fp(5)", "Fp(5)(t)", "QQ(t)", "ext(QQ, u, u^2 - 2)", "ext(Fp(5)(t), u, u^5 - t)"] {
            let f = parse_field(s).unwrap();
            assert_eq!(parse_field(&f.to_string()).unwrap(), f, "{s}");
        }
        assert_eq!(parse_field("QQ(t)").unwrap().to_string(), "QQ(t)");
        assert!(parse_field("Fp(4)").is_err());
        assert!(parse_field("RR").is_err());
        assert!(parse_field("ext(QQ, u, 2*u^2 - 1)").is_err());
    }

    #[test]
    fn points_and_lists() {
        let r = qxy();
        let p = parse_point("(1/2, -3)", r.field()).unwrap();
        assert_eq!(p.to_string(), "(1/2, -3)");
        let gens = parse_polynomial_list("x^2, (x+y)*(x-y), y", &r).unwrap();
        assert_eq!(gens.len(), 3);
        assert!(matches!(parse_polynomial_list("x, q", &r), Err(Error::UnknownVariable { pos: 3, .. })));
    }
}
