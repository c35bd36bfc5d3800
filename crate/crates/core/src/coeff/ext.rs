use std::fmt;
use std::sync::Arc;

use super::{Field, FieldElem, UniPoly};
use crate::error::{Error, Result};

/// A simple algebraic extension `K[u]/(m(u))`.
///
/// Irreducibility of `m` is the caller's responsibility. A reducible
/// modulus shows up, at the latest, as a failed inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionField {
    base: Field,
    var: String,
    modulus: UniPoly,
}

impl ExtensionField {
    pub fn new(base: Field, var: &str, modulus: UniPoly) -> Result<Self> {
        if var.is_empty() || base.generator_names().iter().any(|n| n == var) {
            return Err(Error::InvalidField(format!("bad extension generator name `{var}`")));
        }
        if modulus.base() != &base {
            return Err(Error::InvalidField("minimal polynomial over the wrong base".into()));
        }
        match modulus.degree() {
            Some(d) if d >= 1 => {}
            _ => return Err(Error::InvalidField("minimal polynomial must have positive degree".into())),
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic(modulus.format_with(var)));
        }
        Ok(ExtensionField { base, var: var.to_string(), modulus })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("positive degree")
    }
}

/// An element of `K[u]/(m(u))`, stored by its reduced representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElem {
    field: Arc<ExtensionField>,
    rep: UniPoly,
}

impl ExtElem {
    pub fn from_poly(field: Arc<ExtensionField>, rep: &UniPoly) -> Self {
        let rep = rep.rem(&field.modulus).expect("modulus is nonzero");
        ExtElem { field, rep }
    }

    pub fn zero(field: Arc<ExtensionField>) -> Self {
        let base = field.base.clone();
        ExtElem { field, rep: UniPoly::zero(base) }
    }

    pub fn constant(field: Arc<ExtensionField>, c: FieldElem) -> Self {
        let base = field.base.clone();
        ExtElem { field, rep: UniPoly::constant(base, c) }
    }

    pub fn generator(field: Arc<ExtensionField>) -> Self {
        let x = UniPoly::identity(field.base.clone());
        ExtElem::from_poly(field, &x)
    }

    pub fn extension_field(&self) -> &Arc<ExtensionField> {
        &self.field
    }

    pub fn representative(&self) -> &UniPoly {
        &self.rep
    }

    pub(crate) fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        ExtElem { field: self.field.clone(), rep: self.rep.add(&other.rep) }
    }

    pub fn neg(&self) -> Self {
        ExtElem { field: self.field.clone(), rep: self.rep.neg() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        ExtElem::from_poly(self.field.clone(), &self.rep.mul(&other.rep))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let (g, s) = self.rep.gcd_with_cofactor(&self.field.modulus);
        if !g.is_one() {
            return Err(Error::InconsistentExtension(format!(
                "{} is a zero divisor modulo {}",
                self,
                self.field.modulus.format_with(&self.field.var)
            )));
        }
        Ok(ExtElem::from_poly(self.field.clone(), &s))
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.format_with(&self.field.var))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_inverse() {
        let q = Field::Rational;
        let m = UniPoly::new(q.clone(), vec![q.from_i64(-2), q.zero(), q.one()]);
        let l = q.extension("u", m).unwrap();
        let u = l.generator("u").unwrap();
        let a = &u + &l.one();
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        // 1/(u+1) = u - 1 in Q(sqrt 2)
        assert_eq!(inv, &u - &l.one());
    }

    #[test]
    fn reducible_modulus_is_detected() {
        let q = Field::Rational;
        // u^2 - 1 = (u - 1)(u + 1)
        let m = UniPoly::new(q.clone(), vec![q.from_i64(-1), q.zero(), q.one()]);
        let l = q.extension("u", m).unwrap();
        let a = &l.generator("u").unwrap() - &l.one();
        assert!(matches!(a.inv(), Err(Error::InconsistentExtension(_))));
    }

    #[test]
    fn non_monic_modulus_rejected() {
        let q = Field::Rational;
        let m = UniPoly::new(q.clone(), vec![q.from_i64(-1), q.from_i64(2)]);
        assert!(matches!(q.extension("u", m), Err(Error::NotMonic(_))));
    }
}
