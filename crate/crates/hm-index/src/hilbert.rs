use crate::linalg::{solve, Matrix};
use crate::pencil::PencilPoint;
use exact_core::{
    binom, int, monomials_of_degree, rat, HomPolynomial, LambdaOrder, Monomial, OnePS, Rat,
};
use num_traits::Zero;
use std::fmt;

/// A point of the degree-m Hilbert scheme of (2,d) curves, stored as a
/// generating set of its degree-m piece. Oracle subspaces of other
/// codimensions are allowed as well.
#[derive(Clone, Debug)]
pub struct HilbertPoint {
    d: u32,
    m: u32,
    generators: Vec<HomPolynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HilbertPointError {
    EmptyGenerators,
    DegreeMismatch { expected: u32, found: u32 },
    TruncationBelowDegree { d: u32, m: u32 },
}

impl fmt::Display for HilbertPointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HilbertPointError::EmptyGenerators => write!(f, "no generators given"),
            HilbertPointError::DegreeMismatch { expected, found } => {
                write!(f, "generator of degree {} in a degree-{} space", found, expected)
            }
            HilbertPointError::TruncationBelowDegree { d, m } => {
                write!(f, "truncation degree {} below curve degree {}", m, d)
            }
        }
    }
}

impl std::error::Error for HilbertPointError {}

impl HilbertPoint {
    pub fn new(d: u32, m: u32, generators: Vec<HomPolynomial>) -> Result<Self, HilbertPointError> {
        if m < d {
            return Err(HilbertPointError::TruncationBelowDegree { d, m });
        }
        if generators.is_empty() {
            return Err(HilbertPointError::EmptyGenerators);
        }
        for g in &generators {
            if g.degree() != m {
                return Err(HilbertPointError::DegreeMismatch {
                    expected: m,
                    found: g.degree(),
                });
            }
        }
        Ok(HilbertPoint { d, m, generators })
    }

    /// Degree-m piece of the ideal of a conic-quartic pencil point, spanned
    /// by the products of the two defining forms with all monomials of the
    /// complementary degrees.
    pub fn from_pencil(p: &PencilPoint, m: u32) -> Result<Self, HilbertPointError> {
        if m < 4 {
            return Err(HilbertPointError::TruncationBelowDegree { d: 4, m });
        }
        let mut generators = Vec::new();
        for n in monomials_of_degree(m - 2) {
            generators.push(p.f2().mul_monomial(&n));
        }
        for n in monomials_of_degree(m - 4) {
            generators.push(p.f4().mul_monomial(&n));
        }
        HilbertPoint::new(4, m, generators)
    }

    /// Span of base * (all monomials of degree m - deg base), one block per
    /// base monomial.
    pub fn from_monomial_multiples(
        d: u32,
        m: u32,
        bases: &[Monomial],
    ) -> Result<Self, HilbertPointError> {
        let mut generators = Vec::new();
        for b in bases {
            if b.degree() > m {
                return Err(HilbertPointError::DegreeMismatch {
                    expected: m,
                    found: b.degree(),
                });
            }
            for n in monomials_of_degree(m - b.degree()) {
                generators.push(HomPolynomial::monomial(b.mul(&n)));
            }
        }
        HilbertPoint::new(d, m, generators)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn generators(&self) -> &[HomPolynomial] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        let (matrix, _) = coefficient_matrix(self, &OnePS::zero());
        matrix.rank()
    }
}

/// Codimension in the full degree-m space of the ideal slice of an honest
/// (2,d) complete intersection curve: 2dm - d^2 + 2d.
pub fn scheme_codimension(d: u32, m: u32) -> i64 {
    let (d, m) = (d as i64, m as i64);
    2 * d * m - d * d + 2 * d
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonIntegralLambda;

impl fmt::Display for NonIntegralLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "index computation requires integral subgroup weights")
    }
}

impl std::error::Error for NonIntegralLambda {}

/// Rows are generators, columns the degree-m monomials sorted descending in
/// the lambda order, so row reduction pivots on initial monomials first.
fn coefficient_matrix(h: &HilbertPoint, lambda: &OnePS) -> (Matrix, Vec<Monomial>) {
    let order = LambdaOrder::new(lambda.clone());
    let mut columns = monomials_of_degree(h.m);
    columns.sort_by(|a, b| order.compare(b, a));
    let rows = h
        .generators
        .iter()
        .map(|g| columns.iter().map(|m| g.coeff(m)).collect())
        .collect();
    (Matrix::new(rows, columns.len()), columns)
}

/// Initial monomials of the span: the pivot columns of the row-reduced
/// coefficient matrix.
pub fn initial_monomials(h: &HilbertPoint, lambda: &OnePS) -> Vec<Monomial> {
    let (mut matrix, columns) = coefficient_matrix(h, lambda);
    matrix.echelon().into_iter().map(|c| columns[c]).collect()
}

/// Sum of the subgroup weights over the initial monomials of the span.
pub fn hilbert_mu(h: &HilbertPoint, lambda: &OnePS) -> Result<Rat, NonIntegralLambda> {
    if !lambda.is_integral() {
        return Err(NonIntegralLambda);
    }
    Ok(initial_monomials(h, lambda)
        .iter()
        .map(|m| lambda.weight(m))
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridDomainError {
    DegreeTooSmall(u32),
    ExponentTooLarge { d: u32, a: u32 },
    TruncationTooSmall { d: u32, m: u32 },
}

impl fmt::Display for GridDomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridDomainError::DegreeTooSmall(d) => write!(f, "degree {} below 3", d),
            GridDomainError::ExponentTooLarge { d, a } => {
                write!(f, "exponent {} exceeds degree {} minus one", a, d)
            }
            GridDomainError::TruncationTooSmall { d, m } => {
                write!(f, "truncation degree {} below curve degree {}", m, d)
            }
        }
    }
}

impl std::error::Error for GridDomainError {}

fn check_grid_domain(d: u32, a: u32, m: u32) -> Result<(), GridDomainError> {
    if d < 3 {
        return Err(GridDomainError::DegreeTooSmall(d));
    }
    if a > d - 1 {
        return Err(GridDomainError::ExponentTooLarge { d, a });
    }
    if m < d {
        return Err(GridDomainError::TruncationTooSmall { d, m });
    }
    Ok(())
}

/// The three explicit subspaces certifying instability of curves with a
/// multiple line: U = x0*x1*S_{m-2}, V = x0*G*S_{m-d} with G = x0^a*x2^(d-1-a),
/// their intersection x0*x1*G*S_{m-d-1}, and the sum T = U + V.
#[derive(Clone, Debug)]
pub struct CertificateSubspaces {
    pub u: HilbertPoint,
    pub v: HilbertPoint,
    pub uv: Option<HilbertPoint>,
    pub t: HilbertPoint,
}

pub fn certificate_subspaces(
    d: u32,
    a: u32,
    m: u32,
) -> Result<CertificateSubspaces, GridDomainError> {
    check_grid_domain(d, a, m)?;
    let mut x0x1 = [0u32; 4];
    x0x1[0] = 1;
    x0x1[1] = 1;
    let u_base = Monomial(x0x1);
    let mut g = [0u32; 4];
    g[0] = a + 1;
    g[2] = d - 1 - a;
    let v_base = Monomial(g);
    let uv_base = Monomial([a + 1, 1, d - 1 - a, 0]);
    let u = HilbertPoint::from_monomial_multiples(d, m, &[u_base]).expect("degree 2 <= m");
    let v = HilbertPoint::from_monomial_multiples(d, m, &[v_base]).expect("degree d <= m");
    let uv = if m > d {
        Some(HilbertPoint::from_monomial_multiples(d, m, &[uv_base]).expect("degree d+1 <= m"))
    } else {
        None
    };
    let t = HilbertPoint::from_monomial_multiples(d, m, &[u_base, v_base]).expect("degrees <= m");
    Ok(CertificateSubspaces { u, v, uv, t })
}

/// Closed forms for the weight sums of the certificate subspaces under the
/// subgroup (-3,1,1,1). The Grassmann identity T = U + V - UV holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSums {
    pub u_sum: Rat,
    pub v_sum: Rat,
    pub uv_sum: Rat,
    pub t_sum: Rat,
}

pub fn weight_sum_closed_forms(d: u32, a: u32, m: u32) -> Result<WeightSums, GridDomainError> {
    check_grid_domain(d, a, m)?;
    let (di, ai, mi) = (d as i64, a as i64, m as i64);
    let u_sum = int(-2) * Rat::from(binom(m as u64 + 1, 3));
    let v_sum = int(di - 4 * ai - 4) * Rat::from(binom((m + 3 - d) as u64, 3));
    let uv_sum = int(di - 4 * ai - 3) * Rat::from(binom((m + 2 - d) as u64, 3));
    let t_sum = rat(-1, 2) * int(mi).pow(3)
        + rat(1, 2) * int(2 * di - 4 * ai - 5) * int(mi).pow(2)
        - rat(1, 6) * int(9 * di * di - 3 * (8 * ai + 13) * di + 36 * (ai + 1)) * int(mi)
        + rat(2, 3) * int((di - 1) * (di - 2) * (di - 3 * (ai + 1)));
    Ok(WeightSums {
        u_sum,
        v_sum,
        uv_sum,
        t_sum,
    })
}

/// The quadratic-in-m upper bound whose negativity certifies instability on
/// the whole (d,a,m) grid.
#[allow(non_snake_case)]
pub fn instability_bound_P(d: u32, a: u32, m: u32) -> Result<Rat, GridDomainError> {
    check_grid_domain(d, a, m)?;
    let (di, ai, mi) = (d as i64, a as i64, m as i64);
    Ok(int(-2 * (ai + 1)) * int(mi).pow(2)
        - int(di * di - 2 * (2 * ai + 3) * di + 6 * (ai + 1)) * int(mi)
        + rat(2, 3) * int((di - 1) * (di - 2) * (di - 3 * (ai + 1))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChowFitError {
    TooFewSamples(usize),
    DuplicateIndex(u32),
    NonIntegralLambda,
}

impl fmt::Display for ChowFitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChowFitError::TooFewSamples(n) => {
                write!(f, "cubic fit needs at least 4 samples, got {}", n)
            }
            ChowFitError::DuplicateIndex(m) => write!(f, "duplicate sample at degree {}", m),
            ChowFitError::NonIntegralLambda => NonIntegralLambda.fmt(f),
        }
    }
}

impl std::error::Error for ChowFitError {}

/// Cubic fit of hilbert_mu over a family of truncation degrees. The returned
/// quadratic coefficient is the Chow-side slope estimate; fit_exact reports
/// whether every sample beyond the first four lies on the fitted cubic.
#[derive(Clone, Debug)]
pub struct ChowEstimate {
    pub m2_coefficient: Rat,
    pub coefficients: [Rat; 4],
    pub fit_exact: bool,
}

pub fn chow_mu_estimate(
    family: &[HilbertPoint],
    lambda: &OnePS,
) -> Result<ChowEstimate, ChowFitError> {
    if family.len() < 4 {
        return Err(ChowFitError::TooFewSamples(family.len()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for h in family {
        if !seen.insert(h.m()) {
            return Err(ChowFitError::DuplicateIndex(h.m()));
        }
    }
    let values: Vec<(Rat, Rat)> = family
        .iter()
        .map(|h| {
            hilbert_mu(h, lambda)
                .map(|mu| (int(h.m() as i64), mu))
                .map_err(|_| ChowFitError::NonIntegralLambda)
        })
        .collect::<Result<_, _>>()?;
    let vandermonde = Matrix::new(
        values[..4]
            .iter()
            .map(|(m, _)| (0u32..4).map(|k| m.pow(k as i32)).collect())
            .collect(),
        4,
    );
    let rhs: Vec<Rat> = values[..4].iter().map(|(_, mu)| mu.clone()).collect();
    let c = solve(&vandermonde, &rhs).expect("distinct degrees give an invertible system");
    let eval = |m: &Rat| -> Rat {
        let mut acc = Rat::zero();
        for k in (0..4).rev() {
            acc = acc * m + &c[k];
        }
        acc
    };
    let fit_exact = values[4..].iter().all(|(m, mu)| eval(m) == *mu);
    Ok(ChowEstimate {
        m2_coefficient: c[2].clone(),
        coefficients: [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()],
        fit_exact,
    })
}
