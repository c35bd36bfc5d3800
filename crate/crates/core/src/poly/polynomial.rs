use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::{Monomial, Point, PolyRing};
use crate::coeff::{write_term, Field, FieldElem};
use crate::error::{Error, Result};

/// Sparse polynomial. Terms are kept sorted in strictly descending order
/// for the ring's term order, with no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, FieldElem)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: FieldElem) -> Self {
        Polynomial::term(ring, Monomial::one(ring.arity()), c)
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Polynomial::term(ring, Monomial::var(ring.arity(), index), ring.field().one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, mono: Monomial) -> Self {
        Polynomial::term(ring, mono, ring.field().one())
    }

    pub fn term(ring: &Arc<PolyRing>, mono: Monomial, c: FieldElem) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(mono, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Build from arbitrary terms; repeated monomials are summed.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = (Monomial, FieldElem)>) -> Self {
        let mut acc: HashMap<Monomial, FieldElem> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ring.arity());
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant term, or zero.
    pub fn constant_coeff(&self) -> FieldElem {
        self.coeff(&Monomial::one(self.ring.arity()))
    }

    pub fn coeff(&self, mono: &Monomial) -> FieldElem {
        let order = self.ring.order();
        match self.terms.binary_search_by(|(m, _)| order.cmp(mono, m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field().zero(),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.terms.first().map(|(_, c)| c)
    }

    pub(crate) fn without_leading_term(mut self) -> Polynomial {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
        self
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(same_ring(&self.ring, &other.ring), "polynomials from different rings");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Multiply by the single term `c * mono`; the order is preserved.
    pub fn mul_term(&self, mono: &Monomial, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                products.push((ma.mul(mb), ca * cb));
            }
        }
        Polynomial::from_terms(&self.ring, products)
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scale so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        let n = self.ring.arity();
        if index >= n {
            return Err(Error::IndexOutOfRange { index, arity: n });
        }
        let field = self.field();
        let terms = self.terms.iter().filter(|(m, _)| m.exponents()[index] > 0).map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            let k = e[index];
            e[index] -= 1;
            (Monomial::new(e), c * &field.from_u64(k as u64))
        });
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Value at a point; coordinates may belong to an extension field, in
    /// which case the value lives there too.
    pub fn evaluate(&self, point: &Point) -> Result<FieldElem> {
        point.check_arity(&self.ring)?;
        let field = point.common_field(&self.ring)?;
        let coords: Vec<FieldElem> = point.coords().iter().map(|c| field.embed(c)).collect::<Result<_>>()?;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = field.embed(c)?;
            for (x, &e) in coords.iter().zip(m.exponents()) {
                if e > 0 {
                    v = &v * &x.pow(e as u64);
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// `f(x + alpha)`; the point must have coordinates in the ring's field.
    pub fn translate(&self, point: &Point) -> Result<Polynomial> {
        point.check_rational(&self.ring)?;
        if point.coords().iter().all(FieldElem::is_zero) {
            return Ok(self.clone());
        }
        let shifted: Vec<Polynomial> = point
            .coords()
            .iter()
            .enumerate()
            .map(|(i, a)| Polynomial::var(&self.ring, i).add(&Polynomial::constant(&self.ring, a.clone())))
            .collect();
        self.substitute(&shifted)
    }

    /// Replace variable `i` by `images[i]`; images may live in another ring
    /// with the same coefficient field.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::ArityMismatch { expected: self.ring.arity(), found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => self.ring.clone(),
        };
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, target.field().embed(c)?);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Sum of the terms of total degree `d`.
    pub fn graded_component(&self, d: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Terms of total degree at most `d`.
    pub fn truncate(&self, d: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() <= d).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Move into `ring`, which has the same variables and field but maybe a
    /// different order.
    pub fn reorder(&self, ring: &Arc<PolyRing>) -> Polynomial {
        assert_eq!(ring.vars(), self.ring.vars());
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    /// Pad exponent vectors with `k` leading zeros, landing in `ring`.
    pub fn lift_with_prefix(&self, ring: &Arc<PolyRing>, k: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; k];
            e.extend_from_slice(m.exponents());
            (Monomial::new(e), c.clone())
        });
        Polynomial::from_terms(ring, terms)
    }

    /// Drop `k` leading variables, which must not occur, landing in `ring`.
    pub fn drop_prefix(&self, ring: &Arc<PolyRing>, k: usize) -> Option<Polynomial> {
        if self.terms.iter().any(|(m, _)| m.exponents()[..k].iter().any(|&e| e > 0)) {
            return None;
        }
        Some(Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (m.drop_prefix(k), c.clone()))))
    }

    /// Embed coefficients into `ring`, whose field must contain this one.
    pub fn extend_field(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.arity() != self.ring.arity() {
            return Err(Error::ArityMismatch { expected: self.ring.arity(), found: ring.arity() });
        }
        let terms = self.terms.iter().map(|(m, c)| Ok((m.clone(), ring.field().embed(c)?))).collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Integer coefficient helper used by tests and the parser.
    pub fn from_integer(ring: &Arc<PolyRing>, n: &BigInt) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_bigint(n))
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .zip(self.ring.vars())
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            write_term(&mut out, c, &self.format_monomial(m));
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring(field: Field, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::grevlex(field, vars).unwrap()
    }

    #[test]
    fn derivative_examples() {
        let r = ring(Field::Rational, &["x", "y"]);
        let f = parse_polynomial("x^2*y", &r).unwrap();
        assert_eq!(f.partial_derivative(0).unwrap().to_string(), "2*x*y");
        assert!(parse_polynomial("7", &r).unwrap().partial_derivative(0).unwrap().is_zero());
        assert!(f.partial_derivative(2).is_err());
        let r2 = ring(Field::prime(2).unwrap(), &["x"]);
        assert!(parse_polynomial("x^2", &r2).unwrap().partial_derivative(0).unwrap().is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let r = ring(Field::Rational, &["x", "y"]);
        let q = Field::Rational;
        let f = parse_polynomial("x^2 + y", &r).unwrap();
        assert_eq!(f.evaluate(&Point::new(vec![q.from_i64(1), q.from_i64(2)])).unwrap(), q.from_i64(3));
        let g = parse_polynomial("x - 1", &r).unwrap();
        assert!(g.evaluate(&Point::new(vec![q.from_i64(1), q.zero()])).unwrap().is_zero());
        assert!(g.evaluate(&Point::new(vec![q.one()])).is_err());
    }

    #[test]
    fn evaluation_in_extension() {
        let k = Field::prime(2).unwrap().functions("t").unwrap();
        let l = crate::poly::parse_field("ext(Fp(2)(t), u, u^2 - t)").unwrap();
        let r = ring(k.clone(), &["x"]);
        let f = parse_polynomial("x^2", &r).unwrap();
        let u = l.generator("u").unwrap();
        let v = f.evaluate(&Point::new(vec![u])).unwrap();
        assert_eq!(v, l.generator("t").unwrap());
    }

    #[test]
    fn translation_examples() {
        let r1 = ring(Field::Rational, &["x"]);
        let q = Field::Rational;
        let f = parse_polynomial("(x-1)^2", &r1).unwrap();
        assert_eq!(f.translate(&Point::new(vec![q.one()])).unwrap().to_string(), "x^2");
        let x = parse_polynomial("x", &r1).unwrap();
        assert_eq!(x.translate(&Point::new(vec![q.zero()])).unwrap(), x);
        let r2 = ring(Field::Rational, &["x", "y"]);
        let xy = parse_polynomial("x*y", &r2).unwrap();
        let shifted = xy.translate(&Point::new(vec![q.one(), q.one()])).unwrap();
        assert_eq!(shifted, parse_polynomial("x*y + x + y + 1", &r2).unwrap());
    }

    #[test]
    fn graded_components() {
        let r = ring(Field::Rational, &["x", "y"]);
        let f = parse_polynomial("x^2 + x + 1", &r).unwrap();
        assert_eq!(f.graded_component(1).to_string(), "x");
        assert!(f.graded_component(3).is_zero());
        let g = parse_polynomial("x^2*y + y^3", &r).unwrap();
        assert_eq!(g.graded_component(3), g);
    }

    #[test]
    fn display_orders_terms_by_grevlex() {
        let r = ring(Field::Rational, &["x", "y", "z"]);
        let f = parse_polynomial("z + y^2 + x*z - 3/2*x^2", &r).unwrap();
        assert_eq!(f.to_string(), "-3/2*x^2 + y^2 + x*z + z");
    }
}
