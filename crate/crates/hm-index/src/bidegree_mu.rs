use crate::pencil::ZeroPolynomial;
use exact_core::{int, BidegreeForm, Rat};

/// Torus weight pairs for the product of the two SL(2) factors. The three
/// standard destabilizing directions, in the order they are used to screen
/// bidegree-(4,4) curves.
pub const WEIGHT_STAGGERED: (i64, i64) = (2, 1);
pub const WEIGHT_BALANCED: (i64, i64) = (1, 1);
pub const WEIGHT_FIRST_FACTOR: (i64, i64) = (1, 0);

/// Largest torus weight over the support of a nonzero bidegree form.
pub fn mu_bidegree(f: &BidegreeForm, pair: (i64, i64)) -> Result<Rat, ZeroPolynomial> {
    let (a, b) = (int(pair.0), int(pair.1));
    f.support()
        .map(|m| m.weight(&a, &b))
        .max()
        .ok_or(ZeroPolynomial)
}
