use crate::error::{Error, Result};

/// The prime field `F_p` for a machine-word prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

/// An element of `F_p`, stored as its residue in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeElem {
    residue: u64,
    modulus: u64,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self> {
        if !is_prime(modulus) {
            return Err(Error::InvalidField(format!("{modulus} is not prime")));
        }
        Ok(PrimeField { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elem(&self, value: u64) -> PrimeElem {
        PrimeElem { residue: value % self.modulus, modulus: self.modulus }
    }

    pub fn from_i128(&self, value: i128) -> PrimeElem {
        let m = self.modulus as i128;
        PrimeElem { residue: value.rem_euclid(m) as u64, modulus: self.modulus }
    }
}

impl PrimeElem {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { modulus: self.modulus }
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::NotInvertible("0".into()));
        }
        let (mut r0, mut r1) = (self.modulus as i128, self.residue as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Ok(self.field().from_i128(s0))
    }
}

impl std::ops::Add for PrimeElem {
    type Output = PrimeElem;

    fn add(self, other: Self) -> Self {
        let s = (self.residue as u128 + other.residue as u128) % self.modulus as u128;
        PrimeElem { residue: s as u64, modulus: self.modulus }
    }
}

impl std::ops::Neg for PrimeElem {
    type Output = PrimeElem;

    fn neg(self) -> Self {
        if self.residue == 0 {
            self
        } else {
            PrimeElem { residue: self.modulus - self.residue, modulus: self.modulus }
        }
    }
}

impl std::ops::Sub for PrimeElem {
    type Output = PrimeElem;

    fn sub(self, other: Self) -> Self {
        self + -other
    }
}

impl std::ops::Mul for PrimeElem {
    type Output = PrimeElem;

    fn mul(self, other: Self) -> Self {
        PrimeElem { residue: mulmod(self.residue, other.residue, self.modulus), modulus: self.modulus }
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(3215031751));
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn inverse_in_f5() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.elem(3).inv().unwrap(), f.elem(2));
        assert!(f.elem(0).inv().is_err());
    }

    #[test]
    fn every_nonzero_residue_inverts() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.elem(a) * f.elem(a).inv().unwrap(), f.elem(1));
        }
    }
}
