//! Differential operators with polynomial coefficients, stored in the
//! normal form `sum c * x^a * d^b` (multiplications left of derivatives).

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub use parse::parse_diffop;

use crate::coeff::{write_term, FieldElem};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{parse_field_element, same_ring, Monomial, MonomialOrder, Point, PolyRing, Polynomial};

/// A differential operator on `K[x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    ring: Arc<PolyRing>,
    /// `(x exponent, d exponent) -> coefficient`, no zeros stored.
    terms: BTreeMap<(Monomial, Monomial), FieldElem>,
}

/// Serialized operator term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpTerm {
    pub xexp: Vec<u32>,
    pub dexp: Vec<u32>,
    pub coeff: String,
}

/// Where operator values are tested for vanishing.
#[derive(Clone, Debug)]
pub enum SolTarget {
    IntoRing,
    ModuloIdeal(Ideal),
    AtPoint(Point),
}

impl DiffOp {
    pub fn zero(ring: &Arc<PolyRing>) -> DiffOp {
        DiffOp { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn identity(ring: &Arc<PolyRing>) -> DiffOp {
        let n = ring.arity();
        DiffOp::term(ring, Monomial::one(n), Monomial::one(n), ring.field().one())
    }

    pub fn term(ring: &Arc<PolyRing>, x: Monomial, d: Monomial, c: FieldElem) -> DiffOp {
        let mut op = DiffOp::zero(ring);
        op.add_term(x, d, c);
        op
    }

    /// `d^beta`.
    pub fn derivative(ring: &Arc<PolyRing>, d: Monomial) -> DiffOp {
        DiffOp::term(ring, Monomial::one(ring.arity()), d, ring.field().one())
    }

    /// Multiplication by the polynomial `p`.
    pub fn multiplication(p: &Polynomial) -> DiffOp {
        let ring = p.ring();
        let mut op = DiffOp::zero(ring);
        for (m, c) in p.terms() {
            op.add_term(m.clone(), Monomial::one(ring.arity()), c.clone());
        }
        op
    }

    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = (Monomial, Monomial, FieldElem)>) -> DiffOp {
        let mut op = DiffOp::zero(ring);
        for (x, d, c) in terms {
            op.add_term(x, d, c);
        }
        op
    }

    fn add_term(&mut self, x: Monomial, d: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let key = (x, d);
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &FieldElem)> {
        self.terms.iter().map(|((x, d), c)| (x, d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Filtration degree: the largest `|beta|`, and `-1` for the zero operator.
    pub fn order(&self) -> i64 {
        self.terms.keys().map(|(_, d)| d.degree() as i64).max().unwrap_or(-1)
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for ((x, d), c) in &other.terms {
            out.add_term(x.clone(), d.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp { ring: self.ring.clone(), terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &FieldElem) -> DiffOp {
        let mut out = DiffOp::zero(&self.ring);
        for ((x, d), c) in &self.terms {
            out.add_term(x.clone(), d.clone(), c * s);
        }
        out
    }

    /// `delta(f)`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let field = self.ring.field();
        let mut acc = Vec::new();
        for ((x, d), c) in &self.terms {
            for (m, a) in f.terms() {
                if let Some((coef, rest)) = differentiate_monomial(m, d) {
                    let k = c * &(a * &field.from_bigint(&coef));
                    if !k.is_zero() {
                        acc.push((rest.mul(x), k));
                    }
                }
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc))
    }

    /// The commutator `[delta, r] = delta o r - r o delta`, expanded with
    /// the Leibniz rule `d^b o r = sum_{g <= b} C(b, g) d^g(r) d^(b-g)`.
    pub fn bracket(&self, r: &Polynomial) -> Result<DiffOp> {
        if !same_ring(r.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut out = DiffOp::zero(&self.ring);
        for ((x, d), c) in &self.terms {
            for g in sub_multi_indices(d) {
                if g.is_one() {
                    continue;
                }
                let dr = DiffOp::derivative(&self.ring, g.clone()).apply(r)?;
                let binom = self.ring.field().from_bigint(&multi_binomial(d, &g));
                let rest = g.quotient_of(d).expect("g <= d");
                for (m, a) in dr.terms() {
                    out.add_term(m.mul(x), rest.clone(), c * &(a * &binom));
                }
            }
        }
        Ok(out)
    }

    /// Weyl-algebra product `self o other`, normal ordered.
    pub(crate) fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero(&self.ring);
        for ((x1, d1), c1) in &self.terms {
            for ((x2, d2), c2) in &other.terms {
                for g in sub_multi_indices(d1) {
                    let Some((coef, xm)) = differentiate_monomial(x2, &g) else { continue };
                    let k = &(c1 * c2) * &self.ring.field().from_bigint(&(coef * multi_binomial(d1, &g)));
                    let rest = g.quotient_of(d1).expect("g <= d1");
                    out.add_term(x1.mul(&xm), rest.mul(d2), k);
                }
            }
        }
        out
    }

    pub fn to_json_terms(&self) -> Vec<OpTerm> {
        self.sorted_terms()
            .into_iter()
            .map(|(x, d, c)| OpTerm { xexp: x.exponents().to_vec(), dexp: d.exponents().to_vec(), coeff: c.to_string() })
            .collect()
    }

    pub fn from_json_terms(ring: &Arc<PolyRing>, terms: &[OpTerm]) -> Result<DiffOp> {
        let n = ring.arity();
        let mut op = DiffOp::zero(ring);
        for t in terms {
            if t.xexp.len() != n || t.dexp.len() != n {
                return Err(Error::ArityMismatch { expected: n, found: t.xexp.len().max(t.dexp.len()) });
            }
            let c = parse_field_element(&t.coeff, ring.field())?;
            op.add_term(Monomial::new(t.xexp.clone()), Monomial::new(t.dexp.clone()), c);
        }
        Ok(op)
    }

    /// Terms by descending derivative part, then descending multiplier.
    fn sorted_terms(&self) -> Vec<(&Monomial, &Monomial, &FieldElem)> {
        let mut v: Vec<_> = self.terms().collect();
        let o = MonomialOrder::Grevlex;
        v.sort_by(|a, b| o.cmp(b.1, a.1).then_with(|| o.cmp(b.0, a.0)));
        v
    }
}

/// `d^beta (x^gamma) = coef * x^(gamma - beta)`, or `None` when it vanishes
/// identically (some `beta_i > gamma_i`). `coef` is a product of falling
/// factorials and may still be zero in positive characteristic.
fn differentiate_monomial(m: &Monomial, d: &Monomial) -> Option<(BigInt, Monomial)> {
    let rest = d.quotient_of(m)?;
    let mut coef = BigInt::one();
    for (&g, &b) in m.exponents().iter().zip(d.exponents()) {
        for k in 0..b {
            coef *= g - k;
        }
    }
    Some((coef, rest))
}

/// All multi-indices `g <= b` componentwise.
fn sub_multi_indices(b: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &e in b.exponents() {
        out = out.into_iter().flat_map(|prefix: Vec<u32>| (0..=e).map(move |k| {
            let mut p = prefix.clone();
            p.push(k);
            p
        })).collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

fn multi_binomial(b: &Monomial, g: &Monomial) -> BigInt {
    let mut acc = BigInt::one();
    for (&n, &k) in b.exponents().iter().zip(g.exponents()) {
        acc *= num_integer::binomial(BigInt::from(n), BigInt::from(k));
    }
    acc
}

/// True iff every operator sends `f` to zero in the target: identically,
/// modulo the ideal, or after evaluation at the point.
pub fn sol_membership(ops: &[DiffOp], target: &SolTarget, f: &Polynomial) -> Result<bool> {
    if let SolTarget::AtPoint(p) = target {
        p.check_arity(f.ring())?;
        p.common_field(f.ring())?;
    }
    if let SolTarget::ModuloIdeal(i) = target {
        if !same_ring(i.ring(), f.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    for op in ops {
        let v = op.apply(f)?;
        let vanishes = match target {
            SolTarget::IntoRing => v.is_zero(),
            SolTarget::ModuloIdeal(i) => i.contains(&v)?,
            SolTarget::AtPoint(p) => v.evaluate(p)?.is_zero(),
        };
        if !vanishes {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        let mut out = String::new();
        for (x, d, c) in self.sorted_terms() {
            let mut parts = Vec::new();
            for (e, v) in x.exponents().iter().zip(vars) {
                match e {
                    0 => {}
                    1 => parts.push(v.clone()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            for (e, v) in d.exponents().iter().zip(vars) {
                match e {
                    0 => {}
                    1 => parts.push(format!("d{v}")),
                    _ => parts.push(format!("d{v}^{e}")),
                }
            }
            write_term(&mut out, c, &parts.join("*"));
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::poly::parse_polynomial;

    fn ring() -> Arc<PolyRing> {
        PolyRing::grevlex(Field::Rational, &["x", "y"]).unwrap()
    }

    fn op(s: &str, r: &Arc<PolyRing>) -> DiffOp {
        parse_diffop(s, r).unwrap()
    }

    fn poly(s: &str, r: &Arc<PolyRing>) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn apply_examples() {
        let r = ring();
        assert_eq!(op("dx^2", &r).apply(&poly("x^3", &r)).unwrap(), poly("6*x", &r));
        assert_eq!(op("x*dy", &r).apply(&poly("y^2", &r)).unwrap(), poly("2*x*y", &r));
        let f = poly("x^3*y + 7", &r);
        assert_eq!(DiffOp::identity(&r).apply(&f).unwrap(), f);
    }

    #[test]
    fn bracket_examples() {
        let r = ring();
        let x = poly("x", &r);
        assert_eq!(op("dx", &r).bracket(&x).unwrap(), DiffOp::identity(&r));
        assert_eq!(op("dx^2", &r).bracket(&x).unwrap(), op("2*dx", &r));
        assert_eq!(op("x*dx", &r).bracket(&x).unwrap(), op("x", &r));
    }

    #[test]
    fn bracket_of_second_derivative_matches_definition_on_monomials() {
        let r = ring();
        let d2 = op("dx^2", &r);
        let x = poly("x", &r);
        let br = d2.bracket(&x).unwrap();
        for m in Monomial::all_up_to_degree(2, 4) {
            let f = Polynomial::monomial(&r, m);
            let lhs = br.apply(&f).unwrap();
            let rhs = d2.apply(&x.mul(&f)).unwrap().sub(&x.mul(&d2.apply(&f).unwrap()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn orders() {
        let r = ring();
        assert_eq!(op("dx*dy + x", &r).order(), 2);
        assert_eq!(op("x^2*y", &r).order(), 0);
        assert_eq!(DiffOp::zero(&r).order(), -1);
    }

    #[test]
    fn sol_membership_examples() {
        let r = ring();
        let ops = vec![DiffOp::identity(&r), op("dx", &r)];
        let origin = SolTarget::AtPoint(Point::origin(&r));
        assert!(sol_membership(&ops, &origin, &poly("y", &r)).unwrap());
        assert!(!sol_membership(&ops, &origin, &poly("x", &r)).unwrap());
        assert!(sol_membership(&[], &origin, &poly("x + 1", &r)).unwrap());
        assert!(sol_membership(&[op("dx", &r)], &SolTarget::IntoRing, &poly("y^3", &r)).unwrap());
        let i = Ideal::new(&r, vec![poly("x", &r)]).unwrap();
        assert!(sol_membership(&[op("dx", &r)], &SolTarget::ModuloIdeal(i), &poly("x^2", &r)).unwrap());
    }

    #[test]
    fn incompatible_point_field_is_an_error() {
        let r = ring();
        let f5 = Field::prime(5).unwrap();
        let p = SolTarget::AtPoint(Point::new(vec![f5.zero(), f5.zero()]));
        assert!(matches!(sol_membership(&[DiffOp::identity(&r)], &p, &poly("x", &r)), Err(Error::IncompatibleFields(..))));
    }

    #[test]
    fn display_and_json() {
        let r = ring();
        let d = op("x*dx - dy + 1/2*dx^2", &r);
        assert_eq!(d.to_string(), "1/2*dx^2 + x*dx - dy");
        let json = d.to_json_terms();
        assert_eq!(json[0], OpTerm { xexp: vec![0, 0], dexp: vec![2, 0], coeff: "1/2".into() });
        assert_eq!(DiffOp::from_json_terms(&r, &json).unwrap(), d);
        assert_eq!(op(&d.to_string(), &r), d);
    }

    #[test]
    fn composition_normal_orders() {
        let r = ring();
        // dx o x = x dx + 1
        assert_eq!(op("dx*x", &r), op("x*dx + 1", &r));
        assert_eq!(op("dx^2*x^2", &r), op("x^2*dx^2 + 4*x*dx + 2", &r));
    }
}
