use crate::monomial::Monomial;
use crate::oneps::OnePS;
use std::cmp::Ordering;

/// Total order on monomials attached to a one-parameter subgroup: compare
/// total degree first, then the subgroup weight, then exponent vectors
/// lexicographically. On monomials of a fixed degree this refines the weight
/// preorder, which is what the initial-monomial computation needs.
#[derive(Clone, Debug)]
pub struct LambdaOrder {
    lambda: OnePS,
}

impl LambdaOrder {
    pub fn new(lambda: OnePS) -> Self {
        LambdaOrder { lambda }
    }

    pub fn lambda(&self) -> &OnePS {
        &self.lambda
    }

    /// `Less` means `a` precedes `b`.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| self.lambda.weight(a).cmp(&self.lambda.weight(b)))
            .then_with(|| a.cmp(b))
    }
}
