//! Symbolic powers and the two differential powers of a prime ideal, plus a
//! checker for the containment chain between them.

use std::fmt;
use std::sync::Arc;

use crate::coeff::{Field, FieldElem, UniPoly};
use crate::dualspace::truncated_dual;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg;
use crate::poly::{univariate_from, Monomial, Point, PolyRing, Polynomial};

/// How a prime is presented.
#[derive(Clone, Debug)]
pub enum PrimeKind {
    /// The maximal ideal of a rational point.
    RationalPoint(Point),
    /// `(m(x))` in a univariate ring, `m` monic and irreducible.
    UnivariateAlgebraic(Polynomial),
    /// Any other prime; symbolic powers need a witness unless it is principal.
    General,
}

/// A caller-certified prime ideal.
#[derive(Clone, Debug)]
pub struct PrimeData {
    ideal: Ideal,
    kind: PrimeKind,
    witness: Option<Polynomial>,
}

impl PrimeData {
    pub fn rational_point(ring: &Arc<PolyRing>, point: Point) -> Result<PrimeData> {
        let ideal = Ideal::of_point(ring, &point)?;
        Ok(PrimeData { ideal, kind: PrimeKind::RationalPoint(point), witness: None })
    }

    pub fn univariate(m: Polynomial) -> Result<PrimeData> {
        let ring = m.ring().clone();
        if ring.arity() != 1 {
            return Err(Error::InvalidPrime("univariate primes need a ring in one variable".into()));
        }
        if m.total_degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidPrime(format!("{m} is constant")));
        }
        if !m.leading_coeff().is_some_and(FieldElem::is_one) {
            return Err(Error::NotMonic(m.to_string()));
        }
        let ideal = Ideal::new(&ring, vec![m.clone()])?;
        Ok(PrimeData { ideal, kind: PrimeKind::UnivariateAlgebraic(m), witness: None })
    }

    /// A general prime, optionally with a witness `s` outside it that lies in
    /// every other associated prime of its powers.
    pub fn general(ideal: Ideal, witness: Option<Polynomial>) -> Result<PrimeData> {
        if ideal.is_unit() {
            return Err(Error::InvalidPrime("the unit ideal is not prime".into()));
        }
        if let Some(s) = &witness {
            if ideal.contains(s)? {
                return Err(Error::InvalidPrime(format!("witness {s} lies in the prime")));
            }
        }
        Ok(PrimeData { ideal, kind: PrimeKind::General, witness })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn kind(&self) -> &PrimeKind {
        &self.kind
    }

    pub fn witness(&self) -> Option<&Polynomial> {
        self.witness.as_ref()
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.ideal.ring()
    }

    fn is_principal(&self) -> bool {
        self.ideal.groebner_basis().len() == 1
    }
}

fn check_n(n: i64) -> Result<u32> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("power must be at least 1, got {n}")));
    }
    u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("power {n} is too large")))
}

fn require_char_zero(field: &Field, what: &str) -> Result<()> {
    let p = field.characteristic();
    if p != 0 {
        return Err(Error::UnsupportedCharacteristic {
            characteristic: p,
            reason: format!("{what} is only computed in characteristic zero"),
        });
    }
    Ok(())
}

/// `p^(n)`: `p^n` for maximal and principal primes, otherwise the saturation
/// of `p^n` by the witness.
pub fn symbolic_power(p: &PrimeData, n: i64) -> Result<Ideal> {
    let k = check_n(n)?;
    let pn = p.ideal.power(k as i64)?;
    match p.kind {
        PrimeKind::RationalPoint(_) | PrimeKind::UnivariateAlgebraic(_) => Ok(pn),
        PrimeKind::General if p.is_principal() => Ok(pn),
        PrimeKind::General => {
            let s = p.witness.as_ref().ok_or(Error::MissingWitness)?;
            pn.saturate(s)
        }
    }
}

/// All `d^b f` with `|b| <= order`, without repetition.
fn partials_up_to(f: &Polynomial, order: u32) -> Result<Vec<Polynomial>> {
    let n = f.ring().arity();
    let mut layer = vec![(Monomial::one(n), f.clone())];
    let mut out = vec![f.clone()];
    for _ in 0..order {
        let mut next: Vec<(Monomial, Polynomial)> = Vec::new();
        for (b, g) in &layer {
            // only raise indices at or after the last one used, so each b appears once
            let start = b.exponents().iter().rposition(|&e| e > 0).unwrap_or(0);
            for i in start..n {
                let d = g.partial_derivative(i)?;
                if !d.is_zero() {
                    next.push((b.mul(&Monomial::var(n, i)), d));
                }
            }
        }
        out.extend(next.iter().map(|(_, g)| g.clone()));
        layer = next;
    }
    Ok(out)
}

/// `f` lies in `I^<n>`: every partial derivative of order below `n` lies in `I`.
pub fn diff_power_classical_member(ideal: &Ideal, n: i64, f: &Polynomial) -> Result<bool> {
    let k = check_n(n)?;
    require_char_zero(ideal.ring().field(), "the classical differential power")?;
    for g in partials_up_to(f, k - 1)? {
        if !ideal.contains(&g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I^<n>` for homogeneous `I`, generated by its graded pieces of degree at
/// most `degree_bound`, each found as the solution space of the linear
/// conditions `NF(d^b f) = 0`.
pub fn diff_power_classical_graded(ideal: &Ideal, n: i64, degree_bound: u32) -> Result<Ideal> {
    let k = check_n(n)?;
    let ring = ideal.ring();
    require_char_zero(ring.field(), "the classical differential power")?;
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let field = ring.field();
    let mut gens = Vec::new();
    for d in 0..=degree_bound {
        let basis = Monomial::all_of_degree(ring.arity(), d);
        // images[j] = normal forms of every partial of basis[j], indexed by b
        let mut images: Vec<Vec<Polynomial>> = Vec::with_capacity(basis.len());
        for m in &basis {
            let f = Polynomial::monomial(ring, m.clone());
            images.push(partials_by_index(&f, k - 1)?.into_iter().map(|g| ideal.normal_form(&g)).collect::<Result<_>>()?);
        }
        let mut rows = Vec::new();
        let num_b = images.first().map_or(0, Vec::len);
        for bi in 0..num_b {
            let mut support: Vec<Monomial> = images.iter().flat_map(|v| v[bi].terms().iter().map(|(m, _)| m.clone())).collect();
            support.sort();
            support.dedup();
            for mu in support {
                rows.push(images.iter().map(|v| v[bi].coeff(&mu)).collect::<Vec<_>>());
            }
        }
        for v in linalg::kernel(&rows, basis.len(), field) {
            gens.push(Polynomial::from_terms(ring, basis.iter().cloned().zip(v)));
        }
    }
    Ideal::new(ring, gens)
}

/// `d^b f` for every `|b| <= order`, in a fixed order of `b` that does not
/// depend on `f`.
fn partials_by_index(f: &Polynomial, order: u32) -> Result<Vec<Polynomial>> {
    let n = f.ring().arity();
    let mut out = Vec::new();
    for b in Monomial::all_up_to_degree(n, order) {
        let mut g = f.clone();
        for (i, &e) in b.exponents().iter().enumerate() {
            for _ in 0..e {
                g = g.partial_derivative(i)?;
            }
        }
        out.push(g);
    }
    Ok(out)
}

/// `m_a^{n}` in `R = K[x]/J`, lifted to `K[x]`: the polynomials killed by
/// every functional of the degree `n - 1` dual space of `J` at `a`,
/// together with `m_a^n`.
pub fn diff_power_new_point(j: &Ideal, point: &Point, n: i64) -> Result<Ideal> {
    let k = check_n(n)?;
    let ring = j.ring();
    point.check_arity(ring)?;
    for g in j.generators() {
        if !g.evaluate(point)?.is_zero() {
            return Err(Error::PointNotOnVariety(format!("{g} does not vanish at {point}")));
        }
    }
    let dual = truncated_dual(j, point, k - 1)?;
    let mut gens = dual.annihilator()?;
    gens.extend(Ideal::of_point(ring, point)?.power(k as i64)?.generators().iter().cloned());
    Ideal::new(ring, gens)
}

/// The residue field `K[u]/(m)` with a fresh generator name.
fn residue_field(m: &Polynomial) -> Result<(Field, FieldElem)> {
    let base = m.field().clone();
    let taken: Vec<String> = base.generator_names().into_iter().chain(m.ring().vars().iter().cloned()).collect();
    let name = std::iter::once("u".to_string())
        .chain((1..).map(|i| format!("u{i}")))
        .find(|c| !taken.contains(c))
        .expect("unbounded supply of names");
    let field = base.extension(&name, univariate_from(m))?;
    let u = field.generator(&name).expect("generator just created");
    Ok((field, u))
}

/// Largest `e <= limit` with `(X - u)^e` dividing `f(X)` over the residue field.
fn vanishing_order(f: &Polynomial, field: &Field, u: &FieldElem, limit: u32) -> Result<u32> {
    let mut coeffs: Vec<FieldElem> = univariate_from(f).coeffs().iter().map(|c| field.embed(c)).collect::<Result<_>>()?;
    if coeffs.is_empty() {
        return Ok(limit);
    }
    for e in 0..limit {
        // synthetic division by X - u, highest coefficient first
        let mut quot = vec![field.zero(); coeffs.len().saturating_sub(1)];
        let mut acc = field.zero();
        for i in (0..coeffs.len()).rev() {
            acc = &(&acc * u) + &coeffs[i];
            if i > 0 {
                quot[i - 1] = acc.clone();
            }
        }
        if !acc.is_zero() {
            return Ok(e);
        }
        coeffs = quot;
    }
    Ok(limit)
}

fn univariate_parts(p: &PrimeData) -> Result<&Polynomial> {
    match &p.kind {
        PrimeKind::UnivariateAlgebraic(m) => Ok(m),
        _ => Err(Error::InvalidPrime("a univariate algebraic prime is required".into())),
    }
}

/// Membership in `p^{n}` for `p = (m)`: `(X - u)^n` divides `f(X)` over `K[u]/(m)`.
pub fn diff_power_new_univariate_member(p: &PrimeData, n: i64, f: &Polynomial) -> Result<bool> {
    let k = check_n(n)?;
    let m = univariate_parts(p)?;
    let (field, u) = residue_field(m)?;
    Ok(vanishing_order(f, &field, &u, k)? == k)
}

/// `p^{n}` for `p = (m)`, as `(m^j)` with `j` minimal such that `m^j`
/// satisfies the divisibility condition.
pub fn diff_power_new_univariate(p: &PrimeData, n: i64) -> Result<Ideal> {
    let k = check_n(n)?;
    let m = univariate_parts(p)?;
    let (field, u) = residue_field(m)?;
    for j in 0..=k {
        let g = m.pow(j);
        if vanishing_order(&g, &field, &u, k)? == k {
            return Ideal::new(m.ring(), vec![g]);
        }
    }
    unreachable!("m^n always satisfies the condition")
}

/// `(m^j)` with `j` minimal such that `m^j` lies in the classical power.
fn classical_univariate(m: &Polynomial, ideal: &Ideal, n: u32) -> Result<Ideal> {
    for j in 0..=n {
        let g = m.pow(j);
        if diff_power_classical_member(ideal, n as i64, &g)? {
            return Ideal::new(m.ring(), vec![g]);
        }
    }
    unreachable!("m^n always lies in the classical power")
}

/// `I^<n>` for the maximal ideal of a rational point, computed at the origin
/// and moved back.
fn classical_point(ring: &Arc<PolyRing>, point: &Point, n: u32) -> Result<Ideal> {
    let origin = Ideal::of_point(ring, &Point::origin(ring))?;
    let at_origin = diff_power_classical_graded(&origin, n as i64, n)?;
    let back = point.neg();
    let gens = at_origin.generators().iter().map(|g| g.translate(&back)).collect::<Result<_>>()?;
    Ideal::new(ring, gens)
}

/// `p^<n>` as an ideal: exactly for rational points and univariate primes,
/// and for homogeneous primes from the graded pieces up to degree
/// `n * (largest generator degree)`.
pub fn diff_power_classical(p: &PrimeData, n: i64) -> Result<Ideal> {
    let k = check_n(n)?;
    require_char_zero(p.ring().field(), "the classical differential power")?;
    match &p.kind {
        PrimeKind::RationalPoint(point) => classical_point(p.ring(), point, k),
        PrimeKind::UnivariateAlgebraic(m) => classical_univariate(m, &p.ideal, k),
        PrimeKind::General => {
            let d = p.ideal.generators().iter().filter_map(Polynomial::total_degree).max().unwrap_or(0);
            diff_power_classical_graded(&p.ideal, n, k * d).map_err(|e| match e {
                Error::NotHomogeneous => Error::Unsupported("classical power of a non-homogeneous prime".into()),
                e => e,
            })
        }
    }
}

/// `p^{n}` for the supported kinds: a rational point on the variety of
/// `ambient` (the zero ideal when absent), or a univariate prime.
pub fn diff_power_new(p: &PrimeData, n: i64, ambient: Option<&Ideal>) -> Result<Ideal> {
    match (&p.kind, ambient) {
        (PrimeKind::RationalPoint(point), Some(j)) => diff_power_new_point(j, point, n),
        (PrimeKind::RationalPoint(point), None) => diff_power_new_point(&Ideal::zero(p.ring()), point, n),
        (PrimeKind::UnivariateAlgebraic(_), None) => diff_power_new_univariate(p, n),
        (PrimeKind::UnivariateAlgebraic(_), Some(_)) => {
            Err(Error::InvalidArgument("univariate primes live in the polynomial ring itself".into()))
        }
        (PrimeKind::General, _) => {
            Err(Error::Unsupported("new differential powers need a rational point or a univariate prime".into()))
        }
    }
}

/// Which power a report entry refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PowerKind {
    Symbolic,
    NewDifferential,
    ClassicalDifferential,
}

impl PowerKind {
    pub fn name(self) -> &'static str {
        match self {
            PowerKind::Symbolic => "symbolic",
            PowerKind::NewDifferential => "new_diff",
            PowerKind::ClassicalDifferential => "classical_diff",
        }
    }
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One power in a report.
#[derive(Clone, Debug)]
pub enum PowerValue {
    Ideal(Ideal),
    /// Only membership can be decided.
    Predicate,
    Unavailable(String),
}

impl PowerValue {
    pub fn ideal(&self) -> Option<&Ideal> {
        match self {
            PowerValue::Ideal(i) => Some(i),
            _ => None,
        }
    }
}

/// `smaller ⊆ larger`, decided by generator membership.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub smaller: PowerKind,
    pub larger: PowerKind,
    pub included: bool,
    /// `None` when the larger side is only a predicate and no degree check ran.
    pub equal: Option<bool>,
    /// Separating polynomial: in `larger \ smaller` for a strict inclusion,
    /// in `smaller \ larger` for a failed inclusion.
    pub witness: Option<Polynomial>,
    /// Set when equality was checked on monomials up to this degree only.
    pub checked_up_to_degree: Option<u32>,
}

/// Outcome of comparing the three powers of a prime.
#[derive(Clone, Debug)]
pub struct ChainReport {
    pub n: u32,
    pub symbolic: PowerValue,
    pub new_diff: PowerValue,
    pub classical_diff: PowerValue,
    pub comparisons: Vec<Comparison>,
    /// For algebraic primes: whether the residue field is separable.
    pub separable: Option<bool>,
    /// Equalities the theory predicts under the hypotheses that hold.
    pub expected_equalities: Vec<(PowerKind, PowerKind)>,
    /// Every inclusion holds and every predicted equality was confirmed.
    pub consistent_with_theorem: bool,
}

impl ChainReport {
    pub fn comparison(&self, smaller: PowerKind, larger: PowerKind) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.smaller == smaller && c.larger == larger)
    }
}

fn compare_ideals(smaller: (PowerKind, &Ideal), larger: (PowerKind, &Ideal)) -> Result<Comparison> {
    let outside = |a: &Ideal, b: &Ideal| -> Result<Option<Polynomial>> {
        for g in a.generators() {
            if !b.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    };
    let violation = outside(smaller.1, larger.1)?;
    let (included, equal, witness) = match violation {
        Some(w) => (false, false, Some(w)),
        None => {
            let extra = outside(larger.1, smaller.1)?;
            (true, extra.is_none(), extra)
        }
    };
    Ok(Comparison { smaller: smaller.0, larger: larger.0, included, equal: Some(equal), witness, checked_up_to_degree: None })
}

/// Compare an ideal against the classical predicate: generator membership for
/// the inclusion, then every monomial up to `degree` for agreement.
fn compare_with_classical(smaller: (PowerKind, &Ideal), prime: &Ideal, n: u32, degree: u32) -> Result<Comparison> {
    let ring = prime.ring();
    for g in smaller.1.generators() {
        if !diff_power_classical_member(prime, n as i64, g)? {
            return Ok(Comparison {
                smaller: smaller.0,
                larger: PowerKind::ClassicalDifferential,
                included: false,
                equal: Some(false),
                witness: Some(g.clone()),
                checked_up_to_degree: None,
            });
        }
    }
    let mut witness = None;
    for m in Monomial::all_up_to_degree(ring.arity(), degree) {
        let f = Polynomial::monomial(ring, m);
        if !smaller.1.contains(&f)? && diff_power_classical_member(prime, n as i64, &f)? {
            witness = Some(f);
            break;
        }
    }
    Ok(Comparison {
        smaller: smaller.0,
        larger: PowerKind::ClassicalDifferential,
        included: true,
        equal: Some(witness.is_none()),
        witness,
        checked_up_to_degree: Some(degree),
    })
}

/// Degree up to which predicate comparisons are checked by default.
pub fn default_check_degree(p: &PrimeData, n: u32) -> u32 {
    let d = p.ideal.generators().iter().filter_map(Polynomial::total_degree).max().unwrap_or(1);
    (n * d).max(2) + d
}

/// Compute the powers the prime's kind supports and compare them.
pub fn chain_check(p: &PrimeData, n: i64) -> Result<ChainReport> {
    let k = check_n(n)?;
    let ring = p.ring();
    let char0 = ring.field().characteristic() == 0;
    let refused = || PowerValue::Unavailable("classical differential powers are refused in positive characteristic".into());
    let symbolic = symbolic_power(p, n)?;
    let (new_diff, classical_diff, separable) = match &p.kind {
        PrimeKind::RationalPoint(_) | PrimeKind::UnivariateAlgebraic(_) => {
            let new = diff_power_new(p, n, None)?;
            let classical = if char0 { PowerValue::Ideal(diff_power_classical(p, n)?) } else { refused() };
            let separable = match &p.kind {
                PrimeKind::UnivariateAlgebraic(m) => {
                    let mu: UniPoly = univariate_from(m);
                    Some(mu.gcd(&mu.derivative()).is_one())
                }
                _ => None,
            };
            (PowerValue::Ideal(new), classical, separable)
        }
        PrimeKind::General => {
            let new = PowerValue::Unavailable("new differential powers need a rational point or a univariate prime".into());
            let classical = if char0 { PowerValue::Predicate } else { refused() };
            (new, classical, None)
        }
    };

    let mut comparisons = Vec::new();
    let sym = (PowerKind::Symbolic, &symbolic);
    if let Some(new) = new_diff.ideal() {
        comparisons.push(compare_ideals(sym, (PowerKind::NewDifferential, new))?);
    }
    match &classical_diff {
        PowerValue::Ideal(c) => {
            comparisons.push(compare_ideals(sym, (PowerKind::ClassicalDifferential, c))?);
            if let Some(new) = new_diff.ideal() {
                comparisons.push(compare_ideals((PowerKind::NewDifferential, new), (PowerKind::ClassicalDifferential, c))?);
            }
        }
        PowerValue::Predicate => {
            comparisons.push(compare_with_classical(sym, &p.ideal, k, default_check_degree(p, k))?);
            if let Some(new) = new_diff.ideal() {
                comparisons.push(compare_with_classical((PowerKind::NewDifferential, new), &p.ideal, k, default_check_degree(p, k))?);
            }
        }
        PowerValue::Unavailable(_) => {}
    }

    let mut expected = Vec::new();
    let smooth_point = matches!(p.kind, PrimeKind::RationalPoint(_));
    if smooth_point || separable == Some(true) {
        expected.push((PowerKind::Symbolic, PowerKind::NewDifferential));
    }
    if char0 {
        expected.push((PowerKind::NewDifferential, PowerKind::ClassicalDifferential));
        expected.push((PowerKind::Symbolic, PowerKind::ClassicalDifferential));
    }
    expected.retain(|(a, b)| comparisons.iter().any(|c| c.smaller == *a && c.larger == *b));
    let consistent = comparisons.iter().all(|c| c.included)
        && expected.iter().all(|(a, b)| comparisons.iter().any(|c| c.smaller == *a && c.larger == *b && c.equal == Some(true)));

    Ok(ChainReport {
        n: k,
        symbolic: PowerValue::Ideal(symbolic),
        new_diff,
        classical_diff,
        comparisons,
        separable,
        expected_equalities: expected,
        consistent_with_theorem: consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_field, parse_polynomial, parse_polynomial_list};

    fn ring(field: Field, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::grevlex(field, vars).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &str) -> Ideal {
        Ideal::new(r, parse_polynomial_list(gens, r).unwrap()).unwrap()
    }

    fn poly(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    fn same(a: &Ideal, b: &Ideal) -> bool {
        a.equals(b).unwrap()
    }

    #[test]
    fn symbolic_power_examples() {
        let r = ring(Field::Rational, &["x", "y"]);
        let m = PrimeData::rational_point(&r, Point::origin(&r)).unwrap();
        assert!(same(&symbolic_power(&m, 2).unwrap(), &ideal(&r, "x^2, x*y, y^2")));
        let px = PrimeData::general(ideal(&r, "x"), None).unwrap();
        assert!(same(&symbolic_power(&px, 3).unwrap(), &ideal(&r, "x^3")));
        assert!(matches!(symbolic_power(&m, 0), Err(Error::InvalidArgument(_))));
        let cusp = PrimeData::general(ideal(&r, "x^2 - y^3, x*y"), None).unwrap();
        assert!(matches!(symbolic_power(&cusp, 2), Err(Error::MissingWitness)));
    }

    #[test]
    fn witness_inside_prime_is_rejected() {
        let r = ring(Field::Rational, &["x", "y"]);
        assert!(matches!(PrimeData::general(ideal(&r, "x"), Some(poly(&r, "x*y"))), Err(Error::InvalidPrime(_))));
    }

    #[test]
    fn twisted_cubic_symbolic_square() {
        let r = ring(Field::Rational, &["x", "y", "z", "w"]);
        let p = ideal(&r, "x*z - y^2, y*w - z^2, x*w - y*z");
        let data = PrimeData::general(p.clone(), Some(poly(&r, "x"))).unwrap();
        let sym = symbolic_power(&data, 2).unwrap();
        let square = p.power(2).unwrap();
        assert!(square.is_subset_of(&sym).unwrap());
        assert!(same(&sym.quotient(&poly(&r, "x")).unwrap(), &sym));
        for g in sym.generators() {
            assert!(diff_power_classical_member(&p, 2, g).unwrap());
        }
    }

    #[test]
    fn classical_member_examples() {
        let r = ring(Field::Rational, &["x", "y"]);
        let m = ideal(&r, "x, y");
        assert!(diff_power_classical_member(&m, 2, &poly(&r, "x^2")).unwrap());
        assert!(!diff_power_classical_member(&m, 2, &poly(&r, "x")).unwrap());
        let f5 = ring(Field::prime(5).unwrap(), &["x", "y"]);
        let err = diff_power_classical_member(&ideal(&f5, "x"), 2, &poly(&f5, "x^2")).unwrap_err();
        assert!(err.is_unsupported());
    }

    #[test]
    fn classical_graded_examples() {
        let r = ring(Field::Rational, &["x", "y"]);
        let m = ideal(&r, "x, y");
        assert!(same(&diff_power_classical_graded(&m, 2, 3).unwrap(), &m.power(2).unwrap()));
        assert!(same(&diff_power_classical_graded(&m, 1, 2).unwrap(), &m));
        assert!(same(&diff_power_classical_graded(&ideal(&r, "x"), 2, 2).unwrap(), &ideal(&r, "x^2")));
        assert!(matches!(diff_power_classical_graded(&ideal(&r, "x + 1"), 2, 2), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn new_point_examples() {
        let r = ring(Field::Rational, &["x", "y", "z"]);
        let o = Point::origin(&r);
        let j = ideal(&r, "x^3 + y^3 + z^3");
        let m = Ideal::of_point(&r, &o).unwrap();
        assert!(same(&diff_power_new_point(&j, &o, 2).unwrap(), &m.power(2).unwrap()));
        let expect = m.power(4).unwrap().sum(&j).unwrap();
        assert!(same(&diff_power_new_point(&j, &o, 4).unwrap(), &expect));
        let r2 = ring(Field::Rational, &["x", "y"]);
        let o2 = Point::origin(&r2);
        let m2 = Ideal::of_point(&r2, &o2).unwrap();
        assert!(same(&diff_power_new_point(&Ideal::zero(&r2), &o2, 3).unwrap(), &m2.power(3).unwrap()));
        let off = ideal(&r, "x - 1");
        assert!(matches!(diff_power_new_point(&off, &o, 2), Err(Error::PointNotOnVariety(_))));
    }

    #[test]
    fn new_univariate_examples() {
        for (field, m, expect) in [
            ("Fp(2)(t)", "x^2 - t", "x^2 - t"),
            ("Fp(3)(t)", "x^3 - t", "x^3 - t"),
            ("QQ", "x^2 - 2", "(x^2 - 2)^2"),
        ] {
            let r = ring(parse_field(field).unwrap(), &["x"]);
            let p = PrimeData::univariate(poly(&r, m)).unwrap();
            let got = diff_power_new_univariate(&p, 2).unwrap();
            assert!(same(&got, &ideal(&r, expect)), "{field}: {got}");
        }
    }

    #[test]
    fn non_monic_univariate_is_rejected() {
        let r = ring(Field::Rational, &["x"]);
        assert!(matches!(PrimeData::univariate(poly(&r, "2*x^2 - 1")), Err(Error::NotMonic(_))));
    }

    #[test]
    fn classical_power_of_homogeneous_prime() {
        let r = ring(Field::Rational, &["x", "y", "z", "w"]);
        let p = ideal(&r, "x*z - y^2, y*w - z^2, x*w - y*z");
        let data = PrimeData::general(p.clone(), Some(poly(&r, "x"))).unwrap();
        let classical = diff_power_classical(&data, 2).unwrap();
        assert!(same(&classical, &symbolic_power(&data, 2).unwrap()));
    }

    #[test]
    fn chain_for_maximal_ideal() {
        let r = ring(Field::Rational, &["x", "y"]);
        let p = PrimeData::rational_point(&r, Point::origin(&r)).unwrap();
        let rep = chain_check(&p, 3).unwrap();
        assert!(rep.consistent_with_theorem);
        assert!(rep.comparisons.iter().all(|c| c.equal == Some(true)));
        let m3 = ideal(&r, "x, y").power(3).unwrap();
        for v in [&rep.symbolic, &rep.new_diff, &rep.classical_diff] {
            assert!(same(v.ideal().unwrap(), &m3));
        }
    }

    #[test]
    fn chain_at_shifted_point() {
        let r = ring(Field::Rational, &["x", "y"]);
        let pt = crate::poly::parse_point("(1, -2)", r.field()).unwrap();
        let p = PrimeData::rational_point(&r, pt).unwrap();
        let rep = chain_check(&p, 2).unwrap();
        assert!(rep.consistent_with_theorem);
        assert!(same(rep.classical_diff.ideal().unwrap(), &p.ideal().power(2).unwrap()));
    }

    #[test]
    fn chain_for_inseparable_prime() {
        let r = ring(parse_field("Fp(2)(t)").unwrap(), &["x"]);
        let p = PrimeData::univariate(poly(&r, "x^2 - t")).unwrap();
        let rep = chain_check(&p, 2).unwrap();
        assert_eq!(rep.separable, Some(false));
        let c = rep.comparison(PowerKind::Symbolic, PowerKind::NewDifferential).unwrap();
        assert!(c.included);
        assert_eq!(c.equal, Some(false));
        assert_eq!(c.witness.as_ref().unwrap(), &poly(&r, "x^2 - t"));
        assert!(matches!(rep.classical_diff, PowerValue::Unavailable(_)));
        assert!(rep.consistent_with_theorem);
    }

    #[test]
    fn chain_for_separable_prime() {
        let r = ring(Field::Rational, &["x"]);
        let p = PrimeData::univariate(poly(&r, "x^2 - 2")).unwrap();
        let rep = chain_check(&p, 2).unwrap();
        assert_eq!(rep.separable, Some(true));
        assert!(rep.consistent_with_theorem);
        assert_eq!(rep.expected_equalities.len(), 3);
    }
}
