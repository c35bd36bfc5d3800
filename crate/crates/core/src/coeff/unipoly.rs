//! Dense univariate polynomials over a coefficient field. These back the
//! rational function fields and the simple algebraic extensions.

use std::fmt::Write as _;

use super::{Field, FieldElem};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients stored from degree 0 upwards
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    base: Field,
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(base: Field, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        UniPoly { base, coeffs }
    }

    pub fn zero(base: Field) -> Self {
        UniPoly { base, coeffs: Vec::new() }
    }

    pub fn constant(base: Field, c: FieldElem) -> Self {
        UniPoly::new(base, vec![c])
    }

    pub fn one(base: Field) -> Self {
        let one = base.one();
        UniPoly::constant(base, one)
    }

    /// The polynomial `t`.
    pub fn identity(base: Field) -> Self {
        UniPoly::new(base.clone(), vec![base.zero(), base.one()])
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(FieldElem::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        UniPoly::new(self.base.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        UniPoly { base: self.base.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        UniPoly::new(self.base.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.base.clone());
        }
        let mut out = vec![self.base.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.base.clone(), out)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = UniPoly::one(self.base.clone());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Euclidean division, `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.base.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem.pop().unwrap();
            if !c.is_zero() {
                let q = &c * &lc_inv;
                let shift = top - dd;
                for (k, d) in divisor.coeffs[..dd].iter().enumerate() {
                    rem[shift + k] = &rem[shift + k] - &(&q * d);
                }
                quot[shift] = q;
            }
        }
        Ok((UniPoly::new(self.base.clone(), quot), UniPoly::new(self.base.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs vanish).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s)` with `g = gcd(self, other)` monic and
    /// `s * self ≡ g (mod other)`.
    pub fn gcd_with_cofactor(&self, other: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(self.base.clone()), UniPoly::zero(self.base.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        match r0.leading_coeff() {
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                (r0.scale(&inv), s0.scale(&inv))
            }
            None => (r0, s0),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.base.from_u64(i as u64))
            .collect();
        UniPoly::new(self.base.clone(), coeffs)
    }

    /// Horner evaluation at a point of `field`, which must contain the base.
    pub fn eval(&self, at: &FieldElem) -> Result<FieldElem> {
        let field = at.field();
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(at)?.try_add(&field.embed(c)?)?;
        }
        Ok(acc)
    }

    /// Map every coefficient through `f` into polynomials over `base`.
    pub fn map_coeffs(&self, base: Field, f: impl Fn(&FieldElem) -> Result<FieldElem>) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(base, coeffs))
    }

    /// Render with the given variable name, highest degree first.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            write_term(&mut out, c, &mono);
        }
        out
    }
}

/// Append `coeff * mono` to a sum being rendered in `out`.
pub(crate) fn write_term(out: &mut String, coeff: &FieldElem, mono: &str) {
    let first = out.is_empty();
    let (negative, magnitude) = coeff.split_sign();
    let body = if magnitude.is_one() {
        if mono.is_empty() { "1".to_string() } else { mono.to_string() }
    } else {
        let s = magnitude.to_string();
        let s = if has_top_level_sum(&s) { format!("({s})") } else { s };
        if mono.is_empty() { s } else { format!("{s}*{mono}") }
    };
    match (first, negative) {
        (true, false) => out.push_str(&body),
        (true, true) => {
            let _ = write!(out, "-{body}");
        }
        (false, false) => {
            let _ = write!(out, " + {body}");
        }
        (false, true) => {
            let _ = write!(out, " - {body}");
        }
    }
}

fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(cs: &[i64]) -> UniPoly {
        let f = Field::Rational;
        UniPoly::new(f.clone(), cs.iter().map(|&c| f.from_i64(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let a = qpoly(&[-1, 0, 1]);
        let b = qpoly(&[1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, qpoly(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&qpoly(&[-2, 2])), qpoly(&[-1, 1]));
        assert!(qpoly(&[5]).gcd(&a).is_one());
    }

    #[test]
    fn cofactor_inverts_modulo() {
        let m = qpoly(&[-2, 0, 1]);
        let a = qpoly(&[3, 1]);
        let (g, s) = a.gcd_with_cofactor(&m);
        assert!(g.is_one());
        assert!(s.mul(&a).rem(&m).unwrap().is_one());
    }

    #[test]
    fn formatting() {
        assert_eq!(qpoly(&[1, -2, 1]).format_with("t"), "t^2 - 2*t + 1");
        assert_eq!(qpoly(&[0, 0, -1]).format_with("t"), "-t^2");
        assert_eq!(qpoly(&[]).format_with("t"), "0");
    }
}
