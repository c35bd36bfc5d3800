use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector `x^a = x_1^{a_1} ... x_n^{a_n}`.
///
/// The derived `Ord` is plain lexicographic order on the exponent vector
/// and is used only for storage; term orders come from [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drop the first `k` exponents.
    pub fn drop_prefix(&self, k: usize) -> Monomial {
        Monomial(self.0[k..].to_vec())
    }

    /// All exponent vectors of `arity` variables with total degree `d`,
    /// in ascending grevlex order.
    pub fn all_of_degree(arity: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; arity];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if arity == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(a, b));
        out
    }

    /// All monomials of total degree at most `d`, ascending grevlex.
    pub fn all_up_to_degree(arity: usize, d: u32) -> Vec<Monomial> {
        (0..=d).flat_map(|k| Monomial::all_of_degree(arity, k)).collect()
    }
}

/// A term order on monomials of a fixed arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Block order: grevlex on the first `k` variables, ties broken by grevlex
    /// on the rest. Any polynomial whose leading monomial is free of the first
    /// `k` variables lies entirely in the remaining variables.
    Elimination(usize),
}

impl MonomialOrder {
    /// Compare two monomials; both must have the same arity.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch { expected: a.arity(), found: b.arity() });
        }
        if let MonomialOrder::Elimination(k) = self {
            if *k > a.arity() {
                return Err(Error::IndexOutOfRange { index: *k, arity: a.arity() });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison used on hot paths.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => grevlex(&a.0, &b.0),
            MonomialOrder::Elimination(k) => {
                let k = *k;
                grevlex(&a.0[..k], &b.0[..k]).then_with(|| grevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn orders_on_two_variables() {
        let x = m(&[1, 0]);
        let y2 = m(&[0, 2]);
        assert_eq!(MonomialOrder::Lex.compare(&x, &y2).unwrap(), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.compare(&x, &y2).unwrap(), Ordering::Less);
        assert_eq!(MonomialOrder::Grevlex.compare(&x, &x).unwrap(), Ordering::Equal);
        assert!(MonomialOrder::Lex.compare(&x, &m(&[1])).is_err());
    }

    #[test]
    fn grevlex_tie_break() {
        // degree 3 in x, y, z: x^2 y > x y^2 > x^2 z? grevlex: x^2y > xy^2 > x^2z
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 2, 0]);
        let c = m(&[2, 0, 1]);
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&a, &b), Ordering::Greater);
        assert_eq!(o.cmp(&b, &c), Ordering::Greater);
    }

    #[test]
    fn elimination_prefers_first_block() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_up_to_degree(2, 3).len(), 10);
        let d1 = Monomial::all_of_degree(2, 1);
        assert_eq!(d1, vec![m(&[0, 1]), m(&[1, 0])]);
    }
}
