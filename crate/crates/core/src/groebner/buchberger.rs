//! Buchberger's algorithm with the Gebauer-Moller pair criteria and the
//! normal selection strategy, followed by full inter-reduction.

use std::cmp::Ordering;

use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Multivariate division remainder of `f` by `divisors`, reducing every
/// term. `divisors` must be nonzero and are tried in ascending order of
/// leading monomial, so the smallest dividing leading monomial always wins.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let order = f.ring().order();
    let mut sorted: Vec<&Polynomial> = divisors.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    reduce_sorted(f, &sorted)
}

fn reduce_sorted(f: &Polynomial, divisors: &[&Polynomial]) -> Polynomial {
    let ring = f.ring();
    let mut p = f.clone();
    let mut rem_terms = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        let m = m.clone();
        let c = c.clone();
        let divisor = divisors.iter().find(|g| g.leading_monomial().unwrap().divides(&m));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let q = lm.quotient_of(&m).unwrap();
                let factor = c.try_div(lc).expect("nonzero leading coefficient");
                p = p.sub(&g.mul_term(&q, &factor));
            }
            None => {
                rem_terms.push((m, c));
                p = p.without_leading_term();
            }
        }
    }
    Polynomial::from_terms(ring, rem_terms)
}

/// Exact quotient `f / g`, or `None` if `g` does not divide `f`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    if g.is_zero() {
        return None;
    }
    let ring = f.ring();
    let (lm, lc) = g.leading_term().unwrap();
    let mut p = f.clone();
    let mut quotient = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        let q = lm.quotient_of(m)?;
        let factor = c.try_div(lc).ok()?;
        p = p.sub(&g.mul_term(&q, &factor));
        quotient.push((q, factor));
    }
    Some(Polynomial::from_terms(ring, quotient))
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let a = mf.quotient_of(&l).unwrap();
    let b = mg.quotient_of(&l).unwrap();
    let ia = cf.inv().expect("nonzero");
    let ib = cg.inv().expect("nonzero");
    f.mul_term(&a, &ia).sub(&g.mul_term(&b, &ib))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn active_sorted(&self) -> Vec<&Polynomial> {
        let mut v: Vec<&Polynomial> = (0..self.polys.len()).filter(|&i| self.active[i]).map(|i| &self.polys[i]).collect();
        v.sort_by(|a, b| self.order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        v
    }

    /// Gebauer-Moller update for a new basis element `h`.
    fn update(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.active.push(true);
        let lh = self.lm(hi).clone();

        let mut candidates: Vec<Pair> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| Pair { i: g, j: hi, lcm: self.lm(g).lcm(&lh) })
            .collect();
        // Chain criterion among the new pairs: keep (g, h) only if its lcm is
        // not a proper multiple of another new pair's lcm. Coprime pairs are
        // kept here and dropped afterwards (product criterion).
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.lm(p.i).is_coprime(&lh);
            let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !self.lm(p.i).is_coprime(&lh)).collect();

        // Chain criterion on old pairs.
        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !(lh.divides(&p.lcm) && self.lm(p.i).lcm(&lh) != p.lcm && self.lm(p.j).lcm(&lh) != p.lcm)
            })
            .collect();
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }

    /// Normal selection: smallest lcm degree, ties by the term order.
    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (la, lb) = (&self.pairs[a].lcm, &self.pairs[b].lcm);
            la.degree().cmp(&lb.degree()).then_with(|| order.cmp(la, lb)).then_with(|| {
                (self.pairs[a].j, self.pairs[a].i).cmp(&(self.pairs[b].j, self.pairs[b].i))
            })
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// The reduced Groebner basis of the ideal generated by `gens`, for the
/// order of their ring: monic, inter-reduced, sorted ascending by leading
/// monomial. The zero ideal gives the empty list.
pub fn reduced_groebner_basis(gens: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Vec::new();
    };
    let order = first.ring().order();
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(Polynomial::monic).collect();
    input.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let mut st = State { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for f in input {
        let h = reduce_sorted(&f, &st.active_sorted());
        if !h.is_zero() {
            if h.is_constant() {
                return vec![Polynomial::one(first.ring())];
            }
            st.update(h.monic());
        }
    }
    while let Some(pair) = st.select() {
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j]);
        let h = reduce_sorted(&s, &st.active_sorted());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![Polynomial::one(first.ring())];
        }
        st.update(h.monic());
    }

    let minimal: Vec<Polynomial> = st.active_sorted().into_iter().cloned().collect();
    interreduce(minimal, order)
}

fn interreduce(minimal: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
        // the leading term survives because no other leading monomial divides it
        let r = reduce_sorted(g, &others);
        out.push(r.monic());
    }
    out.sort_by(|a, b| cmp_lm(order, a, b));
    out
}

fn cmp_lm(order: MonomialOrder, a: &Polynomial, b: &Polynomial) -> Ordering {
    order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
}

/// True if every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !reduce(&s_polynomial(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}
