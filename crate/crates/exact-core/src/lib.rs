//! Shared algebra kernel: exact rationals, monomials in four variables,
//! homogeneous and bihomogeneous forms, diagonal one-parameter subgroups,
//! the weighted monomial order, and truncated local power series.

pub mod bidegree;
pub mod monomial;
pub mod oneps;
pub mod order;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod series;

pub use bidegree::{bimonomials, BiMonomial, BidegreeForm};
pub use monomial::{monomials_of_degree, Monomial, VARS};
pub use oneps::OnePS;
pub use order::LambdaOrder;
pub use parse::{parse_hom_polynomial, PolyParseError};
pub use poly::HomPolynomial;
pub use rat::{binom, format_fraction, int, parse_fraction, rat, Rat};
pub use series::{substitute_affine, Series2, SeriesError, DEFAULT_TRUNCATION};
