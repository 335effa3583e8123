use std::fmt;

use exact_core::{int, rat, HomPolynomial, Monomial, OnePS, Rat, VARS};
use hm_index::{Matrix, PencilPoint};

use crate::candidates::cone_quadric;

/// Symmetric coefficient matrix of a quadric, with halved cross terms.
fn gram(f2: &HomPolynomial) -> Matrix {
    let mut rows = vec![vec![int(0); VARS]; VARS];
    for (m, c) in f2.terms() {
        let vars: Vec<usize> = (0..VARS).filter(|&i| m.0[i] > 0).collect();
        match vars.as_slice() {
            [i] => rows[*i][*i] = c.clone(),
            [i, j] => {
                let half = c / rat(2, 1);
                rows[*i][*j] = half.clone();
                rows[*j][*i] = half;
            }
            _ => unreachable!("quadric monomials touch at most two variables"),
        }
    }
    Matrix::new(rows, VARS)
}

/// Witness against stability anywhere below slope 1/2, for the degenerate
/// patterns visible in the given coordinates.
///
/// Two patterns are certified. A quadric supported on at most two of the
/// variables gets those weighted -1 and the rest +1, so its own weight is
/// exactly -2 while no quartic monomial exceeds 4 and the balance stays
/// under -2 + 4t. A rank-3 quadric missing one variable entirely has its
/// vertex at that coordinate point; when the quartic is singular there too
/// (no cubic or quartic power of the missing variable), weighting the
/// vertex +3 against -1 elsewhere gives the quadric -2 and the quartic at
/// most 4 again.
///
/// Degenerate quadrics that are not aligned with the coordinates are
/// reported as None: certifying those needs a change of basis, which
/// callers own.
pub fn planar_unstable(p: &PencilPoint) -> Option<OnePS> {
    let mut used = [false; VARS];
    for (m, _) in p.f2().terms() {
        for i in 0..VARS {
            if m.0[i] > 0 {
                used[i] = true;
            }
        }
    }
    let used_count = used.iter().filter(|u| **u).count();
    if used_count <= 2 {
        let mut low: Vec<usize> = (0..VARS).filter(|&i| used[i]).collect();
        for i in (0..VARS).rev() {
            if low.len() >= 2 {
                break;
            }
            if !low.contains(&i) {
                low.push(i);
            }
        }
        let mut w = [1i64; VARS];
        for &i in &low {
            w[i] = -1;
        }
        return Some(OnePS::ints(w));
    }
    let rank = gram(p.f2()).rank();
    if rank == 3 && used_count == 3 {
        let vertex = (0..VARS)
            .find(|&i| !used[i])
            .expect("exactly one variable is missing");
        if p.f4().support().all(|m| m.0[vertex] <= 2) {
            let mut w = [-1i64; VARS];
            w[vertex] = 3;
            return Some(OnePS::ints(w));
        }
    }
    None
}

/// Ways a pencil point can fail to be in the shape the tangent-cone test
/// expects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeFormError {
    /// The quadric is not x0*x2 + x1^2 on the nose.
    QuadricNotStandardCone,
    /// The quartic has no x0*x1^3 term to anchor the tangent direction.
    MissingAnchorTerm,
    /// The quartic carries x0 outside the anchor term.
    StrayFirstVariable,
}

impl fmt::Display for ConeFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeFormError::QuadricNotStandardCone => {
                write!(f, "the quadric must be exactly x0*x2 + x1^2")
            }
            ConeFormError::MissingAnchorTerm => {
                write!(f, "the quartic must contain an x0*x1^3 term")
            }
            ConeFormError::StrayFirstVariable => {
                write!(f, "the quartic may touch x0 only through x0*x1^3")
            }
        }
    }
}

impl std::error::Error for ConeFormError {}

/// The subgroup backing a positive tangent-cone test.
pub fn cone_tangent_witness() -> OnePS {
    OnePS::ints([5, -1, -7, 3])
}

/// Destabilization test for curves through the ruling point [1,0,0,0] in the
/// adapted shape f4 = x0*x1^3 + (terms without x0): true exactly when the
/// quartic avoids x3^4, x1*x3^3 and x1^2*x3^2.
///
/// On a positive answer the witness gives the quadric weight -2 while no
/// admissible quartic monomial beats the weight-2 level carried by x2*x3^3
/// and the anchor; the level cannot be cancelled by multiples of the
/// quadric, so the balance is exactly -2 + 2t, negative on the whole range.
pub fn cone_tangent_test(p: &PencilPoint) -> Result<bool, ConeFormError> {
    if *p.f2() != cone_quadric() {
        return Err(ConeFormError::QuadricNotStandardCone);
    }
    let anchor = Monomial([1, 3, 0, 0]);
    if p.f4().coeff(&anchor) == int(0) {
        return Err(ConeFormError::MissingAnchorTerm);
    }
    if p.f4().support().any(|m| *m != anchor && m.0[0] > 0) {
        return Err(ConeFormError::StrayFirstVariable);
    }
    let forbidden = [
        Monomial([0, 0, 0, 4]),
        Monomial([0, 1, 0, 3]),
        Monomial([0, 2, 0, 2]),
    ];
    Ok(forbidden.iter().all(|m| p.f4().coeff(m) == int(0)))
}
