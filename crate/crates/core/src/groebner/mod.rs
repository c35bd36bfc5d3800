//! Groebner bases, normal forms and ideal arithmetic.

mod buchberger;
mod ideal;

use std::cmp::Ordering;

pub use buchberger::{divide_exact, is_groebner_basis, reduce, reduced_groebner_basis, s_polynomial};
pub use ideal::Ideal;

use crate::error::Result;
pub use crate::poly::MonomialOrder;
use crate::poly::{Monomial, Polynomial};

/// Compare two monomials in `order`.
pub fn compare(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    order.compare(a, b)
}

/// Reduced Groebner basis of `ideal`, cached on the ideal.
pub fn buchberger(ideal: &Ideal) -> &[Polynomial] {
    ideal.groebner_basis()
}

pub fn normal_form(f: &Polynomial, ideal: &Ideal) -> Result<Polynomial> {
    ideal.normal_form(f)
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.sum(b)
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.product(b)
}

pub fn ideal_power(a: &Ideal, n: i64) -> Result<Ideal> {
    a.power(n)
}

pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.intersect(b)
}

pub fn saturate(a: &Ideal, s: &Polynomial) -> Result<Ideal> {
    a.saturate(s)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coeff::Field;
    use crate::error::Error;
    use crate::poly::{parse_polynomial, parse_polynomial_list, PolyRing};

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::grevlex(Field::Rational, vars).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &str) -> Ideal {
        Ideal::new(r, parse_polynomial_list(gens, r).unwrap()).unwrap()
    }

    fn gb_strings(i: &Ideal) -> Vec<String> {
        i.groebner_basis().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn small_bases() {
        let r = ring(&["x", "y"]);
        assert_eq!(gb_strings(&ideal(&r, "x - y, x + y")), vec!["y", "x"]);
        assert_eq!(gb_strings(&ideal(&r, "x")), vec!["x"]);
        assert_eq!(gb_strings(&ideal(&r, "x^2 + 1, x + 1")), vec!["1"]);
        assert!(ideal(&r, "").groebner_basis().is_empty());
    }

    #[test]
    fn twisted_cubic_basis_is_groebner() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = ideal(&r, "x*z - y^2, y*w - z^2, x*w - y*z");
        let gb = i.groebner_basis();
        assert!(is_groebner_basis(gb));
        assert_eq!(gb.len(), 3);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, "x");
        assert!(normal_form(&parse_polynomial("x^2", &r).unwrap(), &i).unwrap().is_zero());
        assert_eq!(normal_form(&parse_polynomial("x + 1", &r).unwrap(), &i).unwrap().to_string(), "1");
    }

    #[test]
    fn ideal_arithmetic() {
        let r = ring(&["x", "y"]);
        let m = ideal(&r, "x, y");
        assert!(ideal_equal(&ideal_power(&m, 2).unwrap(), &ideal(&r, "x^2, x*y, y^2")).unwrap());
        assert!(ideal_equal(&ideal_sum(&m, &Ideal::zero(&r)).unwrap(), &m).unwrap());
        let prod = ideal_product(&ideal(&r, "x"), &ideal(&r, "y")).unwrap();
        assert!(ideal_equal(&prod, &ideal(&r, "x*y")).unwrap());
        assert!(matches!(ideal_power(&m, -1), Err(Error::NegativeExponent(-1))));
        assert!(ideal_equal(&ideal_power(&m, 0).unwrap(), &Ideal::unit(&r)).unwrap());
        assert!(!ideal_equal(&ideal(&r, "x"), &ideal(&r, "x^2")).unwrap());
        assert!(ideal_equal(&ideal(&r, "x - y, x + y"), &m).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        let xy = intersect(&ideal(&r, "x"), &ideal(&r, "y")).unwrap();
        assert!(ideal_equal(&xy, &ideal(&r, "x*y")).unwrap());
        let i = ideal(&r, "x^2, x*y");
        assert!(ideal_equal(&intersect(&i, &i).unwrap(), &i).unwrap());
        let meet = intersect(&i, &ideal(&r, "y")).unwrap();
        assert!(ideal_equal(&meet, &ideal(&r, "x*y")).unwrap());
    }

    #[test]
    fn saturations() {
        let r = ring(&["x", "y"]);
        let x = parse_polynomial("x", &r).unwrap();
        let y = parse_polynomial("y", &r).unwrap();
        assert!(saturate(&ideal(&r, "x^2"), &x).unwrap().is_unit());
        assert!(ideal_equal(&saturate(&ideal(&r, "x*y"), &y).unwrap(), &ideal(&r, "x")).unwrap());
        assert!(ideal_equal(&saturate(&ideal(&r, "x^2*y"), &y).unwrap(), &ideal(&r, "x^2")).unwrap());
        assert!(matches!(saturate(&ideal(&r, "x"), &Polynomial::zero(&r)), Err(Error::ZeroSaturator)));
    }

    #[test]
    fn colon_and_standard_monomials() {
        let r = ring(&["x", "y"]);
        let x = parse_polynomial("x", &r).unwrap();
        let q = ideal(&r, "x^2, x*y").quotient(&x).unwrap();
        assert!(ideal_equal(&q, &ideal(&r, "x, y")).unwrap());
        let sm = ideal(&r, "x^2, x*y, y^2").standard_monomials().unwrap();
        assert_eq!(sm.len(), 3);
        assert!(ideal(&r, "x").standard_monomials().is_none());
        assert_eq!(ideal(&r, "x^3, y").standard_monomials().unwrap().len(), 3);
    }

    #[test]
    fn ring_mismatch() {
        let r = ring(&["x", "y"]);
        let s = ring(&["x", "z"]);
        assert!(matches!(ideal(&r, "x").equals(&ideal(&s, "x")), Err(Error::RingMismatch)));
    }

    #[test]
    fn lex_order_basis() {
        let r = PolyRing::new(Field::Rational, vec!["x".into(), "y".into()], MonomialOrder::Lex).unwrap();
        let i = ideal(&r, "x^2 + y, x*y - 1");
        let gb = i.groebner_basis();
        assert!(is_groebner_basis(gb));
        // lex with x > y eliminates x: the smallest element is univariate in y
        assert!(gb[0].terms().iter().all(|(m, _)| m.exponents()[0] == 0));
        assert_eq!(gb[0].to_string(), "y^3 + 1");
    }
}
