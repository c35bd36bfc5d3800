//! Seeded generators and brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use noether::coeff::Field;
use noether::linalg;
use noether::poly::{parse_polynomial_list, Monomial, PolyRing, Polynomial};
use noether::weyl::DiffOp;
use noether::Ideal;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn qring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::grevlex(Field::Rational, vars).unwrap()
}

pub fn ideal(ring: &Arc<PolyRing>, gens: &str) -> Ideal {
    Ideal::new(ring, parse_polynomial_list(gens, ring).unwrap()).unwrap()
}

fn random_monomial(rng: &mut ChaCha8Rng, arity: usize, max_degree: u32) -> Monomial {
    let target = rng.random_range(0..=max_degree);
    let mut e = vec![0u32; arity];
    for _ in 0..target {
        e[rng.random_range(0..arity)] += 1;
    }
    Monomial::new(e)
}

/// Sum of `terms` random terms with nonzero coefficients in `-5..=5`.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, max_degree: u32, terms: usize) -> Polynomial {
    let field = ring.field();
    let ts: Vec<_> = (0..terms)
        .map(|_| {
            let mut c = rng.random_range(-5i64..=5);
            if c == 0 {
                c = 1;
            }
            (random_monomial(rng, ring.arity(), max_degree), field.from_i64(c))
        })
        .collect();
    Polynomial::from_terms(ring, ts)
}

/// Random element of the ideal: `sum h_i * g_i` with random cofactors.
pub fn random_member(rng: &mut ChaCha8Rng, ideal: &Ideal, cofactor_degree: u32) -> Polynomial {
    let ring = ideal.ring();
    let mut acc = Polynomial::zero(ring);
    for g in ideal.generators() {
        acc = acc.add(&random_poly(rng, ring, cofactor_degree, 2).mul(g));
    }
    acc
}

pub fn random_diffop(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, terms: usize) -> DiffOp {
    let field = ring.field();
    let n = ring.arity();
    DiffOp::from_terms(
        ring,
        (0..terms).map(|_| {
            let c = rng.random_range(1i64..=4) * if rng.random_bool(0.5) { 1 } else { -1 };
            (random_monomial(rng, n, 2), random_monomial(rng, n, 3), field.from_i64(c))
        }),
    )
}

/// Linear-algebra membership with bounded cofactor degree: `f` lies in the
/// span of `x^g * h` over all generators `h` with `deg(x^g * h) <= bound`.
/// A `true` answer proves membership; for homogeneous ideals and
/// `bound >= deg f` the answer is exact.
pub fn truncated_membership(f: &Polynomial, ideal: &Ideal, bound: u32) -> bool {
    let ring = ideal.ring();
    let columns = Monomial::all_up_to_degree(ring.arity(), bound);
    let row_of = |p: &Polynomial| -> Option<Vec<_>> {
        if p.total_degree().is_some_and(|d| d > bound) {
            return None;
        }
        Some(columns.iter().map(|m| p.coeff(m)).collect())
    };
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let Some(dg) = g.total_degree() else { continue };
        if dg > bound {
            continue;
        }
        for m in Monomial::all_up_to_degree(ring.arity(), bound - dg) {
            rows.push(row_of(&g.mul(&Polynomial::monomial(ring, m))).expect("degree checked"));
        }
    }
    match row_of(f) {
        Some(v) => linalg::in_row_space(&rows, &v),
        None => false,
    }
}
