//! Truncated Macaulay dual spaces at a rational point and the Noetherian
//! operators they induce.
//!
//! A functional is written in the divided-power basis `e_b` at the point
//! `a`: it pairs with `f` through the coefficients of `f(x + a)`, so
//! `<x^g, e_b> = [g = b]` in translated coordinates. This pairing needs no
//! factorials and stays valid in every characteristic.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::{Field, FieldElem};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg;
use crate::poly::{Monomial, Point, PolyRing, Polynomial};
use crate::weyl::{sol_membership, DiffOp, SolTarget};

/// A linear functional on polynomials supported in bounded degree at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFunctional {
    coords: BTreeMap<Monomial, FieldElem>,
}

impl DualFunctional {
    pub fn new(coords: impl IntoIterator<Item = (Monomial, FieldElem)>) -> Self {
        DualFunctional { coords: coords.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// `e_b`.
    pub fn basis(b: Monomial, field: &Field) -> Self {
        DualFunctional::new([(b, field.one())])
    }

    pub fn coordinates(&self) -> &BTreeMap<Monomial, FieldElem> {
        &self.coords
    }

    pub fn coordinate(&self, b: &Monomial) -> Option<&FieldElem> {
        self.coords.get(b)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Largest `|b|` in the support.
    pub fn degree(&self) -> Option<u32> {
        self.coords.keys().map(Monomial::degree).max()
    }

    /// Pairing with a polynomial already written in translated coordinates.
    pub fn pair(&self, translated: &Polynomial) -> FieldElem {
        let mut acc = translated.field().zero();
        for (b, c) in &self.coords {
            acc = &acc + &(c * &translated.coeff(b));
        }
        acc
    }

    /// `Lambda(f)` for `f` in original coordinates.
    pub fn evaluate(&self, f: &Polynomial, point: &Point) -> Result<FieldElem> {
        Ok(self.pair(&f.translate(point)?))
    }

    /// `f -> Lambda((x_i - a_i) * f)`, which moves every coordinate down by `e_i`.
    pub fn shift_down(&self, i: usize) -> DualFunctional {
        DualFunctional::new(self.coords.iter().filter_map(|(b, c)| {
            let e = b.exponents();
            (e[i] > 0).then(|| {
                let mut lower = e.to_vec();
                lower[i] -= 1;
                (Monomial::new(lower), c.clone())
            })
        }))
    }

    /// The operator `sum c_b / b! * d^b`; evaluating it at the point
    /// reproduces the functional. Refused when some `b!` vanishes.
    pub fn to_operator(&self, ring: &Arc<PolyRing>) -> Result<DiffOp> {
        let field = ring.field();
        let mut terms = Vec::new();
        for (b, c) in &self.coords {
            let fact = field.from_bigint(&multi_factorial(b));
            if fact.is_zero() {
                return Err(Error::UnsupportedCharacteristic {
                    characteristic: field.characteristic(),
                    reason: format!("derivative of order {} needs a factorial that vanishes", b.degree()),
                });
            }
            terms.push((Monomial::one(ring.arity()), b.clone(), c * &fact.inv()?));
        }
        Ok(DiffOp::from_terms(ring, terms))
    }

    fn as_row(&self, columns: &[Monomial], field: &Field) -> Vec<FieldElem> {
        columns.iter().map(|m| self.coords.get(m).cloned().unwrap_or_else(|| field.zero())).collect()
    }
}

fn multi_factorial(b: &Monomial) -> BigInt {
    let mut acc = BigInt::one();
    for &e in b.exponents() {
        for k in 2..=e {
            acc *= k;
        }
    }
    acc
}

/// A basis of the degree-`k` truncated dual space of an ideal at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    ring: Arc<PolyRing>,
    point: Point,
    truncation_order: u32,
    functionals: Vec<DualFunctional>,
}

impl DualBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    pub fn truncation_order(&self) -> u32 {
        self.truncation_order
    }

    pub fn functionals(&self) -> &[DualFunctional] {
        &self.functionals
    }

    pub fn dimension(&self) -> usize {
        self.functionals.len()
    }

    /// True if `lambda` is a linear combination of the basis.
    pub fn spans(&self, lambda: &DualFunctional) -> bool {
        if lambda.degree().is_some_and(|d| d > self.truncation_order) {
            return false;
        }
        let columns = Monomial::all_up_to_degree(self.ring.arity(), self.truncation_order);
        let field = self.ring.field();
        let rows: Vec<Vec<FieldElem>> = self.functionals.iter().map(|l| l.as_row(&columns, field)).collect();
        linalg::in_row_space(&rows, &lambda.as_row(&columns, field))
    }

    /// Polynomials of degree at most the truncation order (in translated
    /// coordinates) killed by every functional, moved back to the original
    /// coordinates.
    pub fn annihilator(&self) -> Result<Vec<Polynomial>> {
        let columns = Monomial::all_up_to_degree(self.ring.arity(), self.truncation_order);
        let field = self.ring.field();
        let rows: Vec<Vec<FieldElem>> = self.functionals.iter().map(|l| l.as_row(&columns, field)).collect();
        let back = self.point.neg();
        linalg::kernel(&rows, columns.len(), field)
            .into_iter()
            .map(|v| Polynomial::from_terms(&self.ring, columns.iter().cloned().zip(v)).translate(&back))
            .collect()
    }
}

/// Basis of the functionals of degree at most `k` at `point` that vanish on
/// `x^g * h` for every generator `h` and every `|g| <= k`, in translated
/// coordinates. One functional per free column of the reduced Macaulay
/// matrix, columns ordered by ascending grevlex.
pub fn truncated_dual(ideal: &Ideal, point: &Point, k: u32) -> Result<DualBasis> {
    let ring = ideal.ring();
    point.check_rational(ring)?;
    let n = ring.arity();
    let field = ring.field();
    let columns = Monomial::all_up_to_degree(n, k);
    let index: BTreeMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let shifted: Vec<Polynomial> = ideal.generators().iter().map(|g| g.translate(point)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for g in &shifted {
        for gamma in &columns {
            let mut row = vec![field.zero(); columns.len()];
            let mut any = false;
            for (m, c) in g.terms() {
                let prod = m.mul(gamma);
                if let Some(&j) = index.get(&prod) {
                    row[j] = c.clone();
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    let functionals = linalg::kernel(&rows, columns.len(), field)
        .into_iter()
        .map(|v| DualFunctional::new(columns.iter().cloned().zip(v)))
        .collect();
    Ok(DualBasis { ring: ring.clone(), point: point.clone(), truncation_order: k, functionals })
}

/// Default stabilization bound: one more than the sum of generator degrees.
pub fn default_safety_bound(ideal: &Ideal) -> u32 {
    1 + ideal.generators().iter().filter_map(Polynomial::total_degree).sum::<u32>()
}

/// The truncated dual at the first `k` with `dim D_k = dim D_(k+1)`.
pub fn stable_dual(ideal: &Ideal, point: &Point, safety_bound: u32) -> Result<DualBasis> {
    if safety_bound < 1 {
        return Err(Error::InvalidArgument("safety bound must be at least 1".into()));
    }
    let mut current = truncated_dual(ideal, point, 0)?;
    for k in 0..safety_bound {
        let next = truncated_dual(ideal, point, k + 1)?;
        if next.dimension() == current.dimension() {
            return Ok(current);
        }
        current = next;
    }
    Err(Error::NotZeroDimensionalAtPoint { bound: safety_bound as usize })
}

/// Dimension of the stable dual space, the length of the local quotient.
pub fn colength(ideal: &Ideal, point: &Point) -> Result<usize> {
    Ok(stable_dual(ideal, point, default_safety_bound(ideal))?.dimension())
}

/// Noetherian operators of a primary ideal at a point, with a certificate.
#[derive(Clone, Debug)]
pub struct NoetherianOperators {
    pub point: Point,
    pub colength: usize,
    pub truncation_order: u32,
    pub operators: Vec<DiffOp>,
    /// A standard monomial outside the ideal on which some operator fails.
    pub witness_outside_ideal: Option<Polynomial>,
}

impl NoetherianOperators {
    pub fn target(&self) -> SolTarget {
        SolTarget::AtPoint(self.point.clone())
    }

    pub fn sol_membership(&self, f: &Polynomial) -> Result<bool> {
        sol_membership(&self.operators, &self.target(), f)
    }
}

/// Operators `d_1, ..., d_m` with `I = {f : d_i(f)(a) = 0 for all i}`.
pub fn noetherian_operators(ideal: &Ideal, point: &Point, safety_bound: u32) -> Result<NoetherianOperators> {
    let dual = stable_dual(ideal, point, safety_bound)?;
    if dual.dimension() == 0 {
        return Err(Error::PointNotOnVariety(format!("{ideal} does not vanish at {point}")));
    }
    let ring = ideal.ring();
    let operators = dual.functionals().iter().map(|l| l.to_operator(ring)).collect::<Result<Vec<_>>>()?;
    let mut report = NoetherianOperators {
        point: point.clone(),
        colength: dual.dimension(),
        truncation_order: dual.truncation_order(),
        operators,
        witness_outside_ideal: None,
    };
    for m in ideal.standard_monomials().unwrap_or_default() {
        let f = Polynomial::monomial(ring, m);
        if !report.sol_membership(&f)? {
            report.witness_outside_ideal = Some(f);
            break;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_point, parse_polynomial_list};
    use crate::weyl::parse_diffop;

    fn ring() -> Arc<PolyRing> {
        PolyRing::grevlex(Field::Rational, &["x", "y"]).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &str) -> Ideal {
        Ideal::new(r, parse_polynomial_list(gens, r).unwrap()).unwrap()
    }

    fn e(exps: &[u32], c: i64) -> (Monomial, FieldElem) {
        (Monomial::new(exps.to_vec()), Field::Rational.from_i64(c))
    }

    #[test]
    fn truncated_dual_examples() {
        let r = ring();
        let o = Point::origin(&r);
        let d = truncated_dual(&ideal(&r, "x, y"), &o, 0).unwrap();
        assert_eq!(d.functionals(), &[DualFunctional::new([e(&[0, 0], 1)])]);
        let d = truncated_dual(&ideal(&r, "x^2, y"), &o, 2).unwrap();
        assert_eq!(d.functionals(), &[DualFunctional::new([e(&[0, 0], 1)]), DualFunctional::new([e(&[1, 0], 1)])]);
        assert_eq!(truncated_dual(&ideal(&r, "x^2, x*y, y^2"), &o, 1).unwrap().dimension(), 3);
    }

    #[test]
    fn stable_dual_examples() {
        let r = ring();
        let o = Point::origin(&r);
        let d = stable_dual(&ideal(&r, "x^2, y"), &o, 5).unwrap();
        assert_eq!((d.dimension(), d.truncation_order()), (2, 1));
        let p = parse_point("(1, 2)", r.field()).unwrap();
        let d = stable_dual(&ideal(&r, "x - 1, y - 2"), &p, 5).unwrap();
        assert_eq!(d.functionals(), &[DualFunctional::new([e(&[0, 0], 1)])]);
        assert!(matches!(stable_dual(&ideal(&r, "x"), &o, 4), Err(Error::NotZeroDimensionalAtPoint { bound: 4 })));
    }

    #[test]
    fn operator_examples() {
        let r = ring();
        let o = Point::origin(&r);
        let ops = |gens: &str, p: &Point| -> Vec<String> {
            let i = ideal(&r, gens);
            noetherian_operators(&i, p, default_safety_bound(&i)).unwrap().operators.iter().map(|d| d.to_string()).collect()
        };
        assert_eq!(ops("x^2, y", &o), vec!["1", "dx"]);
        assert_eq!(ops("x^2, y + x", &o), vec!["1", "dx - dy"]);
        assert_eq!(ops("x - 1, y - 2", &parse_point("(1, 2)", r.field()).unwrap()), vec!["1"]);
        assert_eq!(ops("x^3, y", &o), vec!["1", "dx", "1/2*dx^2"]);
    }

    #[test]
    fn witness_fails_membership() {
        let r = ring();
        let i = ideal(&r, "x^2, x*y, y^2");
        let rep = noetherian_operators(&i, &Point::origin(&r), 6).unwrap();
        let w = rep.witness_outside_ideal.clone().unwrap();
        assert!(!i.contains(&w).unwrap());
        assert!(!rep.sol_membership(&w).unwrap());
        for g in i.generators() {
            assert!(rep.sol_membership(g).unwrap());
        }
    }

    #[test]
    fn colength_examples() {
        let r = ring();
        let o = Point::origin(&r);
        assert_eq!(colength(&ideal(&r, "x^2, y"), &o).unwrap(), 2);
        assert_eq!(colength(&ideal(&r, "x^2, x*y, y^2"), &o).unwrap(), 3);
        assert_eq!(colength(&ideal(&r, "x^3, y"), &o).unwrap(), 3);
    }

    #[test]
    fn point_off_the_variety() {
        let r = ring();
        let i = ideal(&r, "x - 1, y");
        assert!(matches!(noetherian_operators(&i, &Point::origin(&r), 3), Err(Error::PointNotOnVariety(_))));
    }

    #[test]
    fn factorial_obstruction_in_small_characteristic() {
        let f2 = Field::prime(2).unwrap();
        let r = PolyRing::grevlex(f2, &["x", "y"]).unwrap();
        let i = ideal(&r, "x^3, y");
        let err = noetherian_operators(&i, &Point::origin(&r), 5).unwrap_err();
        assert!(matches!(err, Error::UnsupportedCharacteristic { characteristic: 2, .. }));
        // the divided-power dual itself is still fine
        assert_eq!(stable_dual(&i, &Point::origin(&r), 5).unwrap().dimension(), 3);
    }

    #[test]
    fn operators_reproduce_functionals() {
        let r = ring();
        let lambda = DualFunctional::new([e(&[2, 1], 3), e(&[0, 1], -1)]);
        let op = lambda.to_operator(&r).unwrap();
        assert_eq!(op, parse_diffop("3/2*dx^2*dy - dy", &r).unwrap());
        let p = parse_point("(1, -1)", r.field()).unwrap();
        for m in Monomial::all_up_to_degree(2, 4) {
            let f = Polynomial::monomial(&r, m);
            assert_eq!(op.apply(&f).unwrap().evaluate(&p).unwrap(), lambda.evaluate(&f, &p).unwrap());
        }
    }

    #[test]
    fn annihilator_recovers_ideal_plus_power() {
        let r = ring();
        let i = ideal(&r, "x^2, y + x");
        let d = truncated_dual(&i, &Point::origin(&r), 2).unwrap();
        let m3 = Ideal::of_point(&r, &Point::origin(&r)).unwrap().power(3).unwrap();
        let ann = Ideal::new(&r, d.annihilator().unwrap()).unwrap().sum(&m3).unwrap();
        assert!(ann.equals(&i.sum(&m3).unwrap()).unwrap());
    }
}
