//! Exact computation of Noetherian operators, truncated Macaulay dual
//! spaces, symbolic powers and differential powers of ideals in polynomial
//! rings over exact fields.

pub mod coeff;
pub mod dualspace;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod powers;
pub mod weyl;

pub use coeff::{Field, FieldElem};
pub use dualspace::{DualBasis, DualFunctional, NoetherianOperators};
pub use error::{Error, Result};
pub use groebner::Ideal;
pub use poly::{Monomial, MonomialOrder, Point, PolyRing, Polynomial};
pub use powers::{ChainReport, PrimeData, PrimeKind};
pub use weyl::{DiffOp, SolTarget};
