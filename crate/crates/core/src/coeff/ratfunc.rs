use std::fmt;
use std::sync::Arc;

use super::{Field, FieldElem, UniPoly};
use crate::error::{Error, Result};

/// The rational function field `K(t)` over a base field `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionField {
    base: Field,
    var: String,
}

impl FunctionField {
    pub fn new(base: Field, var: &str) -> Result<Self> {
        if var.is_empty() || base.generator_names().iter().any(|n| n == var) {
            return Err(Error::InvalidField(format!("bad transcendental name `{var}`")));
        }
        Ok(FunctionField { base, var: var.to_string() })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }
}

/// A reduced fraction of univariate polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    field: Arc<FunctionField>,
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Canonical form: `gcd(num, den) = 1`, `den` monic, `0 = 0/1`.
    pub fn new(field: Arc<FunctionField>, num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero(field));
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lc_inv = den.leading_coeff().expect("nonzero").inv()?;
        Ok(RatFunc { field, num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    pub fn zero(field: Arc<FunctionField>) -> Self {
        let base = field.base.clone();
        RatFunc { field, num: UniPoly::zero(base.clone()), den: UniPoly::one(base) }
    }

    pub fn constant(field: Arc<FunctionField>, c: FieldElem) -> Self {
        let base = field.base.clone();
        RatFunc { field, num: UniPoly::constant(base.clone(), c), den: UniPoly::one(base) }
    }

    pub fn generator(field: Arc<FunctionField>) -> Self {
        let base = field.base.clone();
        RatFunc { field, num: UniPoly::identity(base.clone()), den: UniPoly::one(base) }
    }

    pub fn function_field(&self) -> &Arc<FunctionField> {
        &self.field
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub(crate) fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RatFunc::new(self.field.clone(), self.num.add(&other.num), self.den.clone()).expect("nonzero denominator");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFunc::new(self.field.clone(), num, self.den.mul(&other.den)).expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        RatFunc { field: self.field.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.field.clone(), self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        RatFunc::new(self.field.clone(), self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = &self.field.var;
        let num = self.num.format_with(var);
        if self.den.is_one() {
            return write!(f, "{num}");
        }
        let wrap = |p: &UniPoly, s: String| if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.starts_with('-') || s.contains(['*', '/']) { format!("({s})") } else { s };
        let num_s = wrap(&self.num, num);
        let den_s = wrap(&self.den, self.den.format_with(var));
        write!(f, "{num_s}/{den_s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt() -> (Field, FieldElem) {
        let k = Field::Rational.functions("t").unwrap();
        let t = k.generator("t").unwrap();
        (k, t)
    }

    #[test]
    fn normalization_reduces_and_makes_monic() {
        let (k, t) = qt();
        // (2t^2 - 2) / (2t + 2) = t - 1
        let two = k.from_i64(2);
        let num = &(&two * &(&t * &t)) - &two;
        let den = &(&two * &t) + &two;
        let r = num.try_div(&den).unwrap();
        assert_eq!(r, &t - &k.one());
        assert_eq!(r.to_string(), "t - 1");
        // 1 / (3t) has a monic denominator
        let inv = (&k.from_i64(3) * &t).inv().unwrap();
        assert_eq!(inv.to_string(), "(1/3)/t");
    }

    #[test]
    fn normalization_is_idempotent() {
        let (k, t) = qt();
        let a = (&t + &k.from_i64(2)).try_div(&(&t * &t)).unwrap();
        let FieldElem::Function(r) = &a else { unreachable!() };
        let again = RatFunc::new(r.function_field().clone(), r.numerator().clone(), r.denominator().clone()).unwrap();
        assert_eq!(&again, r);
    }

    #[test]
    fn zero_denominator() {
        let (k, _) = qt();
        let FieldElem::Function(z) = k.zero() else { unreachable!() };
        assert!(RatFunc::new(z.function_field().clone(), UniPoly::one(Field::Rational), UniPoly::zero(Field::Rational)).is_err());
    }
}
