use std::fmt;
use std::sync::{Arc, OnceLock};

use super::buchberger::{divide_exact, reduce, reduced_groebner_basis};
use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, PolyRing, Polynomial};

/// An ideal given by generators, with a lazily computed reduced Groebner
/// basis for its ring's term order.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: ring.clone(), generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: ring.clone(), generators: vec![Polynomial::one(ring)], gb: OnceLock::new() }
    }

    /// The maximal ideal `(x_1 - a_1, ..., x_n - a_n)` of a rational point.
    pub fn of_point(ring: &Arc<PolyRing>, point: &crate::poly::Point) -> Result<Ideal> {
        point.check_rational(ring)?;
        let gens = point
            .coords()
            .iter()
            .enumerate()
            .map(|(i, a)| Polynomial::var(ring, i).sub(&Polynomial::constant(ring, a.clone())))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced Groebner basis, computed at most once.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| reduced_groebner_basis(&self.generators))
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn check_ideal(&self, other: &Ideal) -> Result<()> {
        if !same_ring(&other.ring, &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Remainder modulo the reduced Groebner basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        Ok(reduce(f, self.groebner_basis()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// True if every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals: identical reduced Groebner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        Ok(self.groebner_basis() == other.groebner_basis())
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().first().is_some_and(Polynomial::is_constant)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut gens: Vec<Polynomial> = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                push_unique(&mut gens, f.mul(g));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `n`-fold product; `I^0 = (1)`.
    pub fn power(&self, n: i64) -> Result<Ideal> {
        if n < 0 {
            return Err(Error::NegativeExponent(n));
        }
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` from `t*I + (1 - t)*J` by eliminating `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let big = self.ring.with_eliminated_prefix("_t", 1)?;
        let t = Polynomial::var(&big, 0);
        let one_minus_t = Polynomial::one(&big).sub(&t);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|f| t.mul(&f.lift_with_prefix(&big, 1))).collect();
        gens.extend(other.generators.iter().map(|g| one_minus_t.mul(&g.lift_with_prefix(&big, 1))));
        self.eliminated(&big, 1, &gens)
    }

    /// `(I : s^∞)` from `I + (1 - w*s)` by eliminating `w`.
    pub fn saturate(&self, s: &Polynomial) -> Result<Ideal> {
        self.check(s)?;
        if s.is_zero() {
            return Err(Error::ZeroSaturator);
        }
        let big = self.ring.with_eliminated_prefix("_w", 1)?;
        let w = Polynomial::var(&big, 0);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|f| f.lift_with_prefix(&big, 1)).collect();
        gens.push(Polynomial::one(&big).sub(&w.mul(&s.lift_with_prefix(&big, 1))));
        self.eliminated(&big, 1, &gens)
    }

    /// `(I : s)` via `(I ∩ (s)) / s`.
    pub fn quotient(&self, s: &Polynomial) -> Result<Ideal> {
        self.check(s)?;
        if s.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let meet = self.intersect(&Ideal::new(&self.ring, vec![s.clone()])?)?;
        let gens = meet
            .generators
            .iter()
            .map(|g| divide_exact(g, s).expect("elements of (s) are divisible by s"))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    fn eliminated(&self, big: &Arc<PolyRing>, k: usize, gens: &[Polynomial]) -> Result<Ideal> {
        let gb = reduced_groebner_basis(gens);
        let kept = gb.iter().filter_map(|g| g.drop_prefix(&self.ring, k)).filter(|g| !g.is_zero()).collect();
        debug_assert!(same_ring(gens.first().map(|g| g.ring()).unwrap_or(big), big));
        Ideal::new(&self.ring, kept)
    }

    /// Ideal with the same generators in another order of the same ring.
    pub fn reorder(&self, ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: ring.clone(), generators: self.generators.iter().map(|g| g.reorder(ring)).collect(), gb: OnceLock::new() }
    }

    /// Monomials outside the initial ideal, ascending in the term order.
    /// `None` unless the quotient is finite-dimensional.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let n = self.ring.arity();
        let leads: Vec<&Monomial> = self.groebner_basis().iter().map(|g| g.leading_monomial().unwrap()).collect();
        let mut bounds = vec![None; n];
        for m in &leads {
            let e = m.exponents();
            let support: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
            if support.len() == 1 {
                let i = support[0];
                bounds[i] = Some(bounds[i].map_or(e[i], |b: u32| b.min(e[i])));
            }
            if support.is_empty() {
                return Some(Vec::new());
            }
        }
        let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>()?;
        let max_deg: u32 = bounds.iter().map(|b| b - 1).sum();
        let order = self.ring.order();
        let mut out: Vec<Monomial> = Monomial::all_up_to_degree(n, max_deg)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect();
        out.sort_by(|a, b| order.cmp(a, b));
        Some(out)
    }
}

fn push_unique(gens: &mut Vec<Polynomial>, p: Polynomial) {
    if !p.is_zero() && !gens.contains(&p) {
        gens.push(p);
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
