use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Canonical reduced fraction `num/den` with positive denominator.
pub fn normalize_rational(num: BigInt, den: BigInt) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rational {
        normalize_rational(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(q(2, 4), BigRational::new_raw(1.into(), 2.into()));
        assert_eq!(q(-3, -6), BigRational::new_raw(1.into(), 2.into()));
        assert_eq!(q(3, -6), BigRational::new_raw((-1).into(), 2.into()));
        let zero = q(0, 5);
        assert!(zero.numer().is_zero());
        assert!(zero.denom().is_one());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            normalize_rational(BigInt::from(1), BigInt::from(0)),
            Err(Error::DivisionByZero)
        );
    }
}
