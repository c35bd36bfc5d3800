use std::sync::Arc;

use num_bigint::BigInt;

use super::DiffOp;
use crate::error::{Error, Result};
use crate::poly::{eval_expr, parse_expr, ExprAlgebra, Monomial, PolyRing, Polynomial};

/// Parse an operator such as `x*dx - dy^2`. Atoms are ring variables,
/// field generators, and `d<var>` for the partial derivative in `<var>`.
/// Products are normal ordered, so `dx*x` is `x*dx + 1`.
pub fn parse_diffop(text: &str, ring: &Arc<PolyRing>) -> Result<DiffOp> {
    let e = parse_expr(text)?;
    eval_expr(&e, &DiffOp::zero(ring))
}

impl ExprAlgebra for DiffOp {
    fn integer(&self, n: &BigInt) -> Self {
        DiffOp::multiplication(&Polynomial::from_integer(self.ring(), n))
    }

    fn atom(&self, name: &str, pos: usize) -> Result<Self> {
        let ring = self.ring();
        if let Some(i) = ring.var_index(name) {
            return Ok(DiffOp::multiplication(&Polynomial::var(ring, i)));
        }
        if let Some(g) = ring.field().generator(name) {
            return Ok(DiffOp::multiplication(&Polynomial::constant(ring, g)));
        }
        if let Some(i) = name.strip_prefix('d').and_then(|v| ring.var_index(v)) {
            return Ok(DiffOp::derivative(ring, Monomial::var(ring.arity(), i)));
        }
        Err(Error::UnknownVariable { name: name.to_string(), pos })
    }

    fn add(&self, other: &Self) -> Result<Self> {
        Ok(DiffOp::add(self, other))
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        Ok(DiffOp::sub(self, other))
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self.compose(other))
    }

    fn neg(&self) -> Self {
        DiffOp::neg(self)
    }

    fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = DiffOp::identity(self.ring());
        for _ in 0..e {
            acc = acc.compose(self);
        }
        Ok(acc)
    }

    fn div(&self, other: &Self, pos: usize) -> Result<Self> {
        let n = self.ring().arity();
        let one = Monomial::one(n);
        let constant = other.terms().all(|(x, d, _)| x == &one && d == &one);
        if !constant || other.is_zero() {
            return Err(Error::BadCoefficient { pos, msg: "division by a non-constant or zero".into() });
        }
        let (_, _, c) = other.terms().next().expect("nonzero");
        Ok(self.scale(&c.inv()?))
    }
}
