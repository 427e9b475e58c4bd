//! Sparse multivariate polynomial arithmetic over F2 and Z.

mod coeff;
mod matrix;
mod monomial;
mod polynomial;
mod text;

pub use coeff::{Coefficient, Domain, FieldCoefficient, Integer, F2};
pub use matrix::{mat_word, PolyMatrix2};
pub use monomial::{for_each_monomial_of_degree, monomials_below, Monomial, MonomialOrder, Var};
pub use polynomial::{F2Poly, Polynomial, Ring, ZPoly};
pub use text::{format_canonical, format_poly, parse_poly, read_poly_list, write_poly_list, PolyList, LIST_MAGIC};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials from different rings: {left} vs {right}")]
    DomainMismatch { left: String, right: String },
    #[error("no inverse available for generator {0}")]
    InverseNotAvailable(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
