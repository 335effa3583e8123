//! Numerical stability indices for conic-quartic pencils: the weight maximum
//! of a single form, its coset-minimized refinement, the Hilbert-point index
//! through initial monomials, a bidegree variant, and the closed-form weight
//! sums used as instability certificates.

pub mod bidegree_mu;
pub mod hilbert;
pub mod linalg;
pub mod pencil;

pub use bidegree_mu::{
    mu_bidegree, WEIGHT_BALANCED, WEIGHT_FIRST_FACTOR, WEIGHT_STAGGERED,
};
pub use hilbert::{
    certificate_subspaces, chow_mu_estimate, hilbert_mu, initial_monomials, instability_bound_P,
    scheme_codimension, weight_sum_closed_forms, CertificateSubspaces, ChowEstimate, ChowFitError,
    GridDomainError, HilbertPoint, HilbertPointError, NonIntegralLambda, WeightSums,
};
pub use linalg::{solve, Matrix};
pub use pencil::{
    leading_part, mu_coset_min, mu_form, mu_t, CosetMin, PencilError, PencilPoint, SlopeRangeError,
    SlopeValue, ZeroPolynomial,
};
