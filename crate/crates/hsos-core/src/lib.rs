//! Exact computer algebra for Hermitian sums of squares over Q(i).
//!
//! The crate provides arbitrary-precision Gaussian-rational arithmetic,
//! sparse multivariate polynomials with lex/grevlex/block orders, a
//! Buchberger Groebner engine with colon ideals and dimension theory,
//! Hermitian bihomogeneous forms with exact inertia and PSD certificates,
//! Koszul complexes with graded homology, and the sum-of-squares checks
//! built on top of all of it (signature bounds, graded containment, the
//! scaling-certificate search, and an exhaustive small-instance search).

pub mod error;
pub mod gauss;
pub mod linalg;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use gauss::{GaussRat, Rat};
pub use order::MonomialOrder;
pub use parse::{parse_poly_list, parse_polynomial};
pub use poly::Polynomial;
pub use ring::{monomials_of_degree, Monomial, RingContext};
