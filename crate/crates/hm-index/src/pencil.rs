use crate::linalg::{solve, Matrix};
use exact_core::{monomials_of_degree, HomPolynomial, Monomial, OnePS, Rat};
use num_traits::Zero;
use std::fmt;

/// A conic-quartic pencil point: a nonzero quadric f2 together with a quartic
/// f4 taken modulo multiples of f2. The class of f4 must be nonzero, i.e. f4
/// is not itself a multiple of f2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PencilPoint {
    f2: HomPolynomial,
    f4: HomPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PencilError {
    WrongDegrees { f2: u32, f4: u32 },
    ZeroQuadric,
    QuarticIsMultiple,
}

impl fmt::Display for PencilError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PencilError::WrongDegrees { f2, f4 } => {
                write!(f, "expected degrees (2,4), found ({},{})", f2, f4)
            }
            PencilError::ZeroQuadric => write!(f, "the quadric must be nonzero"),
            PencilError::QuarticIsMultiple => {
                write!(f, "the quartic is a multiple of the quadric, so its class vanishes")
            }
        }
    }
}

impl std::error::Error for PencilError {}

/// Coefficient matrix of q -> q*f2 from degree-2 forms into degree-4 forms,
/// with rows indexed by `quartics` in order.
fn multiplication_matrix(f2: &HomPolynomial, quartics: &[Monomial]) -> Matrix {
    let quadrics = monomials_of_degree(2);
    let mut rows = vec![vec![Rat::zero(); quadrics.len()]; quartics.len()];
    let index: std::collections::BTreeMap<Monomial, usize> =
        quartics.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    for (j, q) in quadrics.iter().enumerate() {
        for (m, c) in f2.terms() {
            let prod = m.mul(q);
            if let Some(&i) = index.get(&prod) {
                rows[i][j] += c;
            }
        }
    }
    Matrix::new(rows, quadrics.len())
}

impl PencilPoint {
    pub fn new(f2: HomPolynomial, f4: HomPolynomial) -> Result<Self, PencilError> {
        if f2.degree() != 2 || f4.degree() != 4 {
            return Err(PencilError::WrongDegrees {
                f2: f2.degree(),
                f4: f4.degree(),
            });
        }
        if f2.is_zero() {
            return Err(PencilError::ZeroQuadric);
        }
        let quartics = monomials_of_degree(4);
        let a = multiplication_matrix(&f2, &quartics);
        let b: Vec<Rat> = quartics.iter().map(|m| f4.coeff(m)).collect();
        if solve(&a, &b).is_some() {
            return Err(PencilError::QuarticIsMultiple);
        }
        Ok(PencilPoint { f2, f4 })
    }

    pub fn f2(&self) -> &HomPolynomial {
        &self.f2
    }

    pub fn f4(&self) -> &HomPolynomial {
        &self.f4
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroPolynomial;

impl fmt::Display for ZeroPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "numerical function of the zero polynomial")
    }
}

impl std::error::Error for ZeroPolynomial {}

/// Largest weight over the support of a nonzero form.
pub fn mu_form(f: &HomPolynomial, lambda: &OnePS) -> Result<Rat, ZeroPolynomial> {
    f.support()
        .map(|m| lambda.weight(m))
        .max()
        .ok_or(ZeroPolynomial)
}

/// The terms realizing the largest weight.
pub fn leading_part(f: &HomPolynomial, lambda: &OnePS) -> HomPolynomial {
    let Ok(mu) = mu_form(f, lambda) else {
        return f.clone();
    };
    HomPolynomial::from_terms(
        f.degree(),
        f.terms()
            .filter(|(m, _)| lambda.weight(m) == mu)
            .map(|(m, c)| (*m, c.clone())),
    )
    .expect("subset of a homogeneous polynomial")
}

/// Result of the coset minimization: the minimal value together with a
/// representative attaining it.
#[derive(Clone, Debug)]
pub struct CosetMin {
    pub value: Rat,
    pub representative: HomPolynomial,
}

/// Exact minimum of mu_form over the coset f4 + (degree-2 forms)*f2.
///
/// Threshold search: the candidate values are the distinct weights of
/// degree-4 monomials; for each, solvability of a linear system decides
/// whether some representative is supported on weights at most the
/// candidate. The pencil invariant rules out the empty support, so the
/// smallest feasible candidate is the minimum.
pub fn mu_coset_min(p: &PencilPoint, lambda: &OnePS) -> CosetMin {
    let quartics = monomials_of_degree(4);
    let mut weights: Vec<Rat> = quartics.iter().map(|m| lambda.weight(m)).collect();
    weights.sort();
    weights.dedup();
    let a_full = multiplication_matrix(p.f2(), &quartics);
    for w in weights {
        // Rows for monomials that must cancel: those of weight above w.
        let high: Vec<usize> = (0..quartics.len())
            .filter(|&i| lambda.weight(&quartics[i]) > w)
            .collect();
        let a = Matrix::new(
            high.iter().map(|&i| a_full.rows[i].clone()).collect(),
            a_full.cols,
        );
        let b: Vec<Rat> = high.iter().map(|&i| -p.f4().coeff(&quartics[i])).collect();
        if let Some(q) = solve(&a, &b) {
            let quadrics = monomials_of_degree(2);
            let q_poly = HomPolynomial::from_terms(
                2,
                quadrics.iter().zip(&q).map(|(m, c)| (*m, c.clone())),
            )
            .expect("degree-2 coefficients");
            let representative = p.f4().add(&q_poly.mul(p.f2()));
            debug_assert_eq!(mu_form(&representative, lambda).ok(), Some(w.clone()));
            return CosetMin {
                value: w,
                representative,
            };
        }
    }
    unreachable!("the coset of a valid pencil point is nonempty");
}

/// Slope evaluation mu(f2) + t * coset-minimized mu(f4), with a flag telling
/// whether the subgroup limit of the given pair of forms, i.e. the pair of
/// their leading parts, is again a valid pencil point. The coset-minimized
/// representative is useless here: its leading part can never be a multiple
/// of the leading quadric, since subtracting the quotient times f2 would
/// strictly lower the weight.
#[derive(Clone, Debug)]
pub struct SlopeValue {
    pub value: Rat,
    pub mu2: Rat,
    pub mu4: Rat,
    pub limit_is_pencil: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeRangeError(pub Rat);

impl fmt::Display for SlopeRangeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "slope parameter {} outside (0, 1/2]",
            exact_core::format_fraction(&self.0)
        )
    }
}

impl std::error::Error for SlopeRangeError {}

pub fn mu_t(p: &PencilPoint, lambda: &OnePS, t: &Rat) -> Result<SlopeValue, SlopeRangeError> {
    if *t <= Rat::zero() || *t > exact_core::rat(1, 2) {
        return Err(SlopeRangeError(t.clone()));
    }
    let mu2 = mu_form(p.f2(), lambda).expect("pencil quadric is nonzero");
    let coset = mu_coset_min(p, lambda);
    let limit_f2 = leading_part(p.f2(), lambda);
    let limit_f4 = leading_part(p.f4(), lambda);
    let limit_is_pencil = PencilPoint::new(limit_f2, limit_f4).is_ok();
    Ok(SlopeValue {
        value: mu2.clone() + t * &coset.value,
        mu2,
        mu4: coset.value,
        limit_is_pencil,
    })
}
