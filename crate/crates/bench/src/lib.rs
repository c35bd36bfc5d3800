//! Shared inputs for the benchmarks.

use std::sync::Arc;

use noether::poly::{parse_polynomial, parse_polynomial_list, PolyRing};
use noether::{Field, Ideal, Polynomial};

pub fn rational_ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::grevlex(Field::Rational, vars).expect("valid variables")
}

pub fn ideal(ring: &Arc<PolyRing>, gens: &str) -> Ideal {
    Ideal::new(ring, parse_polynomial_list(gens, ring).expect("valid generators")).expect("same ring")
}

pub fn poly(ring: &Arc<PolyRing>, text: &str) -> Polynomial {
    parse_polynomial(text, ring).expect("valid polynomial")
}

/// Generators of the twisted cubic in four variables.
pub const TWISTED_CUBIC: &str = "x*z - y^2, y*w - z^2, x*w - y*z";

/// Cyclic-3 system, a standard Groebner workload.
pub const CYCLIC3: &str = "x + y + z, x*y + y*z + z*x, x*y*z - 1";
