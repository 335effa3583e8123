use crate::binary_form::BinaryForm;
use crate::class::{JTail, SingularityClass, SingularityKind};
use crate::germ::PlaneGerm;
use exact_core::monomial::Monomial;
use exact_core::poly::HomPolynomial;
use exact_core::rat::Rat;
use exact_core::series::Series2;
use hm_index::linalg::{solve, Matrix};
use num_traits::{One, Zero};
use std::fmt;

/// Reduced data of a pencil member through the marked point [1,0,0,0]: the
/// quadric is x0 x2 + x1^2 + a x3^2 and the quartic is
/// x0 x3^3 + x1^2 g2(x2,x3) + x1 g3(x2,x3) + g4(x2,x3).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalFormInput {
    pub a: Rat,
    pub g2: BinaryForm,
    pub g3: BinaryForm,
    pub g4: BinaryForm,
}

impl NormalFormInput {
    pub fn new(a: Rat, g2: BinaryForm, g3: BinaryForm, g4: BinaryForm) -> Self {
        assert_eq!(g2.degree(), 2);
        assert_eq!(g3.degree(), 3);
        assert_eq!(g4.degree(), 4);
        NormalFormInput { a, g2, g3, g4 }
    }

    /// The pair of homogeneous equations the data stands for.
    pub fn curve(&self) -> (HomPolynomial, HomPolynomial) {
        let f2 = HomPolynomial::from_terms(
            2,
            vec![
                (Monomial([1, 0, 1, 0]), Rat::one()),
                (Monomial([0, 2, 0, 0]), Rat::one()),
                (Monomial([0, 0, 0, 2]), self.a.clone()),
            ],
        )
        .unwrap();
        let mut quartic_terms = vec![(Monomial([1, 0, 0, 3]), Rat::one())];
        for (form, x1_exp) in [(&self.g2, 2u32), (&self.g3, 1), (&self.g4, 0)] {
            for i in 0..=form.degree() {
                let j = form.degree() - i;
                quartic_terms.push((Monomial([0, x1_exp, i, j]), form.coeff(i, j).clone()));
            }
        }
        let f4 = HomPolynomial::from_terms(4, quartic_terms).unwrap();
        (f2, f4)
    }

    /// Local equation of the curve at [1,0,0,0], projected to the
    /// (x1/x0, x3/x0) plane: substituting x2/x0 = -(x1/x0)^2 - a (x3/x0)^2
    /// into the quartic gives a polynomial of degree at most eight.
    pub fn germ(&self, truncation: u32) -> PlaneGerm {
        let s = Series2::var(0, truncation);
        let t = Series2::var(1, truncation);
        let z = s
            .pow(2)
            .add(&t.pow(2).scale(&self.a))
            .scale(&-Rat::one());
        let series = t
            .pow(3)
            .add(&s.pow(2).mul(&self.g2.eval_series(&z, &t)))
            .add(&s.mul(&self.g3.eval_series(&z, &t)))
            .add(&self.g4.eval_series(&z, &t));
        PlaneGerm::new(series, truncation > 8)
    }
}

/// Eight mutually exclusive coefficient tests, applied in order; the first
/// one that fires names the singularity of the curve at [1,0,0,0].
pub fn classify_norm3(nf: &NormalFormInput) -> SingularityClass {
    let g3_30 = nf.g3.coeff(3, 0);
    let g3_21 = nf.g3.coeff(2, 1);
    let g3_12 = nf.g3.coeff(1, 2);
    let g4_40 = nf.g4.coeff(4, 0);
    let g4_31 = nf.g4.coeff(3, 1);
    let g4_22 = nf.g4.coeff(2, 2);
    // Vanishes exactly when the slope-three cubic fails to have three
    // distinct branches.
    let three_branches = g4_31 * &(g3_12.pow(2) + Rat::from_integer(4.into()) * g4_31);
    let kind = if !nf.g2.is_zero() {
        SingularityKind::J {
            k: 2,
            tail: JTail::Unspecified,
        }
    } else if !g3_30.is_zero() {
        SingularityKind::E(12)
    } else if !g3_21.is_zero() {
        SingularityKind::E(13)
    } else if !g4_40.is_zero() {
        SingularityKind::E(14)
    } else if !three_branches.is_zero() {
        SingularityKind::J {
            k: 3,
            tail: JTail::Zero,
        }
    } else if !g3_12.is_zero() || !g4_31.is_zero() {
        SingularityKind::J {
            k: 3,
            tail: JTail::PositiveOrInfinite,
        }
    } else if !g4_22.is_zero() {
        SingularityKind::J {
            k: 4,
            tail: JTail::Infinite,
        }
    } else {
        SingularityKind::TripleConicPlus
    };
    SingularityClass::of(kind)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NormalFormError {
    /// The quadric is not x0 x2 + x1^2 + a x3^2.
    QuadricShape,
    /// No quadric multiple of the quadric brings the quartic into the
    /// reduced support.
    NotReducible,
    /// The x0 x3^3 coefficient of the reduced quartic vanishes, so the
    /// marked point is a quadruple point or worse.
    TripleTermVanishes,
}

impl fmt::Display for NormalFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalFormError::QuadricShape => {
                write!(f, "quadric must be x0*x2 + x1^2 + a*x3^2")
            }
            NormalFormError::NotReducible => {
                write!(f, "quartic cannot be reduced to the marked-point support")
            }
            NormalFormError::TripleTermVanishes => {
                write!(f, "reduced quartic has no x0*x3^3 term")
            }
        }
    }
}

impl std::error::Error for NormalFormError {}

/// Support of the reduced quartic: x0 x3^3, then x1^2, x1, 1 times binary
/// forms in (x2, x3).
const REDUCED_SUPPORT: [[u32; 4]; 13] = [
    [1, 0, 0, 3],
    [0, 2, 2, 0],
    [0, 2, 1, 1],
    [0, 2, 0, 2],
    [0, 1, 3, 0],
    [0, 1, 2, 1],
    [0, 1, 1, 2],
    [0, 1, 0, 3],
    [0, 0, 4, 0],
    [0, 0, 3, 1],
    [0, 0, 2, 2],
    [0, 0, 1, 3],
    [0, 0, 0, 4],
];

/// Finds the unique quadric q with f4 + q f2 supported on the reduced
/// monomials, and reads off the binary forms. The quadric must already be
/// x0 x2 + x1^2 + a x3^2; the quartic is rescaled so the x0 x3^3
/// coefficient is one.
pub fn reduce_to_normal_form(
    f2: &HomPolynomial,
    f4: &HomPolynomial,
) -> Result<NormalFormInput, NormalFormError> {
    let a = validate_quadric(f2).ok_or(NormalFormError::QuadricShape)?;
    let quartics = exact_core::monomials_of_degree(4);
    let quadrics = exact_core::monomials_of_degree(2);
    let support: Vec<Monomial> = REDUCED_SUPPORT.iter().map(|&e| Monomial(e)).collect();
    let cols = quadrics.len() + support.len();
    let mut rows = Vec::with_capacity(quartics.len());
    let mut rhs = Vec::with_capacity(quartics.len());
    for m in &quartics {
        let mut row = vec![Rat::zero(); cols];
        for (idx, q) in quadrics.iter().enumerate() {
            if let Some(rest) = q.try_div(m) {
                row[idx] = f2.coeff(&rest);
            }
        }
        for (idx, s) in support.iter().enumerate() {
            if s == m {
                row[quadrics.len() + idx] = -Rat::one();
            }
        }
        rows.push(row);
        rhs.push(-f4.coeff(m));
    }
    let sol = solve(&Matrix::new(rows, cols), &rhs).ok_or(NormalFormError::NotReducible)?;
    let values = &sol[quadrics.len()..];
    let lead = values[0].clone();
    if lead.is_zero() {
        return Err(NormalFormError::TripleTermVanishes);
    }
    let inv = Rat::one() / lead;
    let mut g2 = BinaryForm::zero(2);
    let mut g3 = BinaryForm::zero(3);
    let mut g4 = BinaryForm::zero(4);
    for (value, exps) in values.iter().zip(REDUCED_SUPPORT.iter()).skip(1) {
        let scaled = value * &inv;
        match exps[1] {
            2 => g2.set_coeff(exps[2], scaled),
            1 => g3.set_coeff(exps[2], scaled),
            _ => g4.set_coeff(exps[2], scaled),
        }
    }
    Ok(NormalFormInput::new(a, g2, g3, g4))
}

fn validate_quadric(f2: &HomPolynomial) -> Option<Rat> {
    if f2.degree() != 2 {
        return None;
    }
    let mut a = Rat::zero();
    for (m, c) in f2.terms() {
        match m.0 {
            [1, 0, 1, 0] if c.is_one() => {}
            [0, 2, 0, 0] if c.is_one() => {}
            [0, 0, 0, 2] => a = c.clone(),
            _ => return None,
        }
    }
    if f2.coeff(&Monomial([1, 0, 1, 0])).is_one() && f2.coeff(&Monomial([0, 2, 0, 0])).is_one() {
        Some(a)
    } else {
        None
    }
}
