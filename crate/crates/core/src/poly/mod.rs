//! Sparse multivariate polynomials over the exact coefficient fields.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::{
    from_univariate, parse_field, parse_field_element, parse_point, parse_polynomial, parse_polynomial_list,
    split_top_level, univariate_from,
};
pub(crate) use parse::{eval_expr, parse_expr, ExprAlgebra};
pub use polynomial::Polynomial;
pub(crate) use polynomial::same_ring;
pub use ring::{Point, PolyRing};
