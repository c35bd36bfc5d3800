//! Exact coefficient fields.
//!
//! A [`Field`] is a cheap-to-clone descriptor; a [`FieldElem`] carries
//! enough of its field to do arithmetic on its own. Supported fields are
//! `Q`, `F_p`, rational function fields `K(t)` over either of those, and
//! simple algebraic extensions `K[u]/(m(u))` of any supported field.

mod ext;
mod prime;
mod ratfunc;
mod rational;
mod unipoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use ext::{ExtElem, ExtensionField};
pub use prime::{is_prime, PrimeElem, PrimeField};
pub use ratfunc::{FunctionField, RatFunc};
pub use rational::{normalize_rational, Rational};
pub use unipoly::UniPoly;
pub(crate) use unipoly::write_term;

use crate::error::{Error, Result};

/// Descriptor of a coefficient field.
#[derive(Clone, Debug)]
pub enum Field {
    Rational,
    Prime(PrimeField),
    Functions(Arc<FunctionField>),
    Extension(Arc<ExtensionField>),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rational, Field::Rational) => true,
            (Field::Prime(a), Field::Prime(b)) => a == b,
            (Field::Functions(a), Field::Functions(b)) => Arc::ptr_eq(a, b) || a == b,
            (Field::Extension(a), Field::Extension(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        Ok(Field::Prime(PrimeField::new(p)?))
    }

    /// The rational function field `self(var)`.
    pub fn functions(self, var: &str) -> Result<Field> {
        Ok(Field::Functions(Arc::new(FunctionField::new(self, var)?)))
    }

    /// The simple extension `self[var]/(modulus)`; the modulus must be monic
    /// of degree at least one and is trusted to be irreducible.
    pub fn extension(self, var: &str, modulus: UniPoly) -> Result<Field> {
        Ok(Field::Extension(Arc::new(ExtensionField::new(self, var, modulus)?)))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p.modulus(),
            Field::Functions(f) => f.base().characteristic(),
            Field::Extension(e) => e.base().characteristic(),
        }
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(Rational::zero()),
            Field::Prime(p) => FieldElem::Prime(p.elem(0)),
            Field::Functions(f) => FieldElem::Function(RatFunc::zero(f.clone())),
            Field::Extension(e) => FieldElem::Extension(ExtElem::zero(e.clone())),
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_u64(&self, n: u64) -> FieldElem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(Rational::from_integer(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p.modulus());
                let r = ((n % &m) + &m) % &m;
                FieldElem::Prime(p.elem(r.to_u64().expect("reduced residue fits")))
            }
            Field::Functions(f) => {
                let c = f.base().from_bigint(n);
                FieldElem::Function(RatFunc::constant(f.clone(), c))
            }
            Field::Extension(e) => {
                let c = e.base().from_bigint(n);
                FieldElem::Extension(ExtElem::constant(e.clone(), c))
            }
        }
    }

    /// The base field one level down, if any.
    pub fn base(&self) -> Option<&Field> {
        match self {
            Field::Functions(f) => Some(f.base()),
            Field::Extension(e) => Some(e.base()),
            _ => None,
        }
    }

    /// True if `sub` is this field or one of its iterated base fields.
    pub fn contains(&self, sub: &Field) -> bool {
        if self == sub {
            return true;
        }
        self.base().is_some_and(|b| b.contains(sub))
    }

    /// Image of `elem` under the canonical inclusion into this field.
    pub fn embed(&self, elem: &FieldElem) -> Result<FieldElem> {
        let source = elem.field();
        if &source == self {
            return Ok(elem.clone());
        }
        match self {
            Field::Functions(f) if f.base().contains(&source) => {
                Ok(FieldElem::Function(RatFunc::constant(f.clone(), f.base().embed(elem)?)))
            }
            Field::Extension(e) if e.base().contains(&source) => {
                Ok(FieldElem::Extension(ExtElem::constant(e.clone(), e.base().embed(elem)?)))
            }
            _ => Err(Error::IncompatibleFields(source.to_string(), self.to_string())),
        }
    }

    /// The named generator (`t` of a function field, `u` of an extension)
    /// searched through the tower, embedded into this field.
    pub fn generator(&self, name: &str) -> Option<FieldElem> {
        match self {
            Field::Functions(f) if f.var() == name => Some(FieldElem::Function(RatFunc::generator(f.clone()))),
            Field::Extension(e) if e.var() == name => Some(FieldElem::Extension(ExtElem::generator(e.clone()))),
            _ => {
                let inner = self.base()?.generator(name)?;
                self.embed(&inner).ok()
            }
        }
    }

    /// Names of all generators in the tower, outermost first.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names = Vec::new();
        let mut cur = Some(self);
        while let Some(f) = cur {
            match f {
                Field::Functions(ff) => names.push(ff.var().to_string()),
                Field::Extension(e) => names.push(e.var().to_string()),
                _ => {}
            }
            cur = f.base();
        }
        names
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "Fp({})", p.modulus()),
            Field::Functions(ff) => write!(f, "{}({})", ff.base(), ff.var()),
            Field::Extension(e) => write!(f, "ext({}, {}, {})", e.base(), e.var(), e.modulus().format_with(e.var())),
        }
    }
}

/// An element of one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElem {
    Rational(Rational),
    Prime(PrimeElem),
    Function(RatFunc),
    Extension(ExtElem),
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Prime(p) => Field::Prime(p.field()),
            FieldElem::Function(r) => Field::Functions(r.function_field().clone()),
            FieldElem::Extension(e) => Field::Extension(e.extension_field().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Prime(p) => p.residue() == 0,
            FieldElem::Function(r) => r.is_zero(),
            FieldElem::Extension(e) => e.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_one(),
            FieldElem::Prime(p) => p.residue() == 1 % p.modulus(),
            FieldElem::Function(r) => r.is_one(),
            FieldElem::Extension(e) => e.is_one(),
        }
    }

    /// Bring both operands into a common field.
    fn unify(&self, other: &FieldElem) -> Result<(FieldElem, FieldElem)> {
        let (fa, fb) = (self.field(), other.field());
        if fa == fb {
            Ok((self.clone(), other.clone()))
        } else if fa.contains(&fb) {
            Ok((self.clone(), fa.embed(other)?))
        } else if fb.contains(&fa) {
            Ok((fb.embed(self)?, other.clone()))
        } else {
            Err(Error::IncompatibleFields(fa.to_string(), fb.to_string()))
        }
    }

    pub fn try_add(&self, other: &FieldElem) -> Result<FieldElem> {
        use FieldElem::*;
        Ok(match (self, other) {
            (Rational(a), Rational(b)) => Rational(a + b),
            (Prime(a), Prime(b)) if a.modulus() == b.modulus() => Prime(a.add(*b)),
            (Function(a), Function(b)) if a.same_field(b) => Function(a.add(b)),
            (Extension(a), Extension(b)) if a.same_field(b) => Extension(a.add(b)),
            _ => {
                let (a, b) = self.unify(other)?;
                return a.try_add(&b);
            }
        })
    }

    pub fn try_mul(&self, other: &FieldElem) -> Result<FieldElem> {
        use FieldElem::*;
        Ok(match (self, other) {
            (Rational(a), Rational(b)) => Rational(a * b),
            (Prime(a), Prime(b)) if a.modulus() == b.modulus() => Prime(a.mul(*b)),
            (Function(a), Function(b)) if a.same_field(b) => Function(a.mul(b)),
            (Extension(a), Extension(b)) if a.same_field(b) => Extension(a.mul(b)),
            _ => {
                let (a, b) = self.unify(other)?;
                return a.try_mul(&b);
            }
        })
    }

    pub fn try_sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.try_add(&other.neg())
    }

    pub fn try_div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.try_mul(&other.inv()?)
    }

    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Rational(q) => FieldElem::Rational(-q),
            FieldElem::Prime(p) => FieldElem::Prime(p.neg()),
            FieldElem::Function(r) => FieldElem::Function(r.neg()),
            FieldElem::Extension(e) => FieldElem::Extension(e.neg()),
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        Ok(match self {
            FieldElem::Rational(q) => FieldElem::Rational(q.recip()),
            FieldElem::Prime(p) => FieldElem::Prime(p.inv()?),
            FieldElem::Function(r) => FieldElem::Function(r.inv()?),
            FieldElem::Extension(e) => FieldElem::Extension(e.inv()?),
        })
    }

    pub fn pow(&self, mut exp: u64) -> FieldElem {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Split off a leading minus sign for display: returns `(true, -self)`
    /// when the rendered form of `self` would begin with `-`.
    pub fn split_sign(&self) -> (bool, FieldElem) {
        let negative = match self {
            FieldElem::Rational(q) => q.is_negative(),
            FieldElem::Prime(_) => false,
            FieldElem::Function(r) => r.numerator().leading_coeff().is_some_and(|c| c.split_sign().0),
            FieldElem::Extension(e) => e.representative().leading_coeff().is_some_and(|c| c.split_sign().0),
        };
        if negative {
            (true, self.neg())
        } else {
            (false, self.clone())
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldElem::Rational(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => write!(f, "{q}"),
            FieldElem::Prime(p) => write!(f, "{}", p.residue()),
            FieldElem::Function(r) => write!(f, "{r}"),
            FieldElem::Extension(e) => write!(f, "{e}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("coefficients from incompatible fields")
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$checked(&rhs).expect("coefficients from incompatible fields")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(&self)
    }
}

/// Invert an element, reporting zero as not invertible.
pub fn field_invert(a: &FieldElem) -> Result<FieldElem> {
    a.inv()
}

/// Product of two extension elements; both must live in the same extension.
pub fn ext_mul(a: &ExtElem, b: &ExtElem) -> Result<ExtElem> {
    if !a.same_field(b) {
        return Err(Error::IncompatibleFields(
            Field::Extension(a.extension_field().clone()).to_string(),
            Field::Extension(b.extension_field().clone()).to_string(),
        ));
    }
    Ok(a.mul(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2t() -> Field {
        Field::prime(2).unwrap().functions("t").unwrap()
    }

    fn ext_f2t() -> Field {
        let k = f2t();
        let t = k.generator("t").unwrap();
        // u^2 - t
        let m = UniPoly::new(k.clone(), vec![-t, k.zero(), k.one()]);
        k.extension("u", m).unwrap()
    }

    #[test]
    fn invert_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(field_invert(&f5.from_i64(3)).unwrap(), f5.from_i64(2));
        let two_thirds = FieldElem::Rational(normalize_rational(2.into(), 3.into()).unwrap());
        let three_halves = FieldElem::Rational(normalize_rational(3.into(), 2.into()).unwrap());
        assert_eq!(field_invert(&two_thirds).unwrap(), three_halves);

        let k = f2t();
        let t = k.generator("t").unwrap();
        let a = t.try_div(&(&t + &k.one())).unwrap();
        let inv = field_invert(&a).unwrap();
        assert_eq!(inv.to_string(), "(t + 1)/t");
        assert!((&a * &inv).is_one());
        assert!(field_invert(&k.zero()).is_err());
    }

    #[test]
    fn extension_products() {
        let l = ext_f2t();
        let u = match l.generator("u").unwrap() {
            FieldElem::Extension(e) => e,
            _ => unreachable!(),
        };
        let t = l.generator("t").unwrap();
        assert_eq!(FieldElem::Extension(ext_mul(&u, &u).unwrap()), t);
        let u1 = match &l.generator("u").unwrap() + &l.one() {
            FieldElem::Extension(e) => e,
            _ => unreachable!(),
        };
        assert_eq!(FieldElem::Extension(ext_mul(&u1, &u1).unwrap()), &t + &l.one());
        let one = match l.one() {
            FieldElem::Extension(e) => e,
            _ => unreachable!(),
        };
        assert_eq!(ext_mul(&one, &u1).unwrap(), u1);
    }

    #[test]
    fn mismatched_extensions_are_rejected() {
        let q = Field::Rational;
        let m2 = UniPoly::new(q.clone(), vec![q.from_i64(-2), q.zero(), q.one()]);
        let m3 = UniPoly::new(q.clone(), vec![q.from_i64(-3), q.zero(), q.one()]);
        let a = q.clone().extension("u", m2).unwrap().generator("u").unwrap();
        let b = q.extension("u", m3).unwrap().generator("u").unwrap();
        let (FieldElem::Extension(a), FieldElem::Extension(b)) = (a, b) else { unreachable!() };
        assert!(matches!(ext_mul(&a, &b), Err(Error::IncompatibleFields(..))));
    }

    #[test]
    fn embedding_through_tower() {
        let l = ext_f2t();
        let f2 = Field::prime(2).unwrap();
        let one = l.embed(&f2.one()).unwrap();
        assert!(one.is_one());
        assert_eq!(l.characteristic(), 2);
        assert_eq!(l.generator_names(), vec!["u", "t"]);
        assert!(Field::Rational.embed(&f2.one()).is_err());
        assert_eq!(l.to_string(), "ext(Fp(2)(t), u, u^2 + t)");
    }
}
