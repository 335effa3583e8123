use crate::class::{JTail, SingularityClass, SingularityKind};
use crate::factor::{
    binary_quartic_shape, cubic_discriminant, cubic_is_perfect_cube,
    has_repeated_factor_through_origin, xp_sub, xp_trim, xp_truncate, RepeatedRoot, XPoly, YPoly,
};
use crate::germ::PlaneGerm;
use exact_core::rat::{binom, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Recognition verdict: the class together with the total degree of the
/// coefficient that decided it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Recognition {
    pub class: SingularityClass,
    pub decided_at_order: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RecognizeError {
    /// The germ is identically zero.
    ZeroGerm,
    /// Nonzero constant term: the origin is not on the curve.
    NotACurveGerm,
    /// Multiplicity three, but the tangent cone is not a triple line.
    ConeNotTripleLine,
    /// Multiplicity five or more.
    MultiplicityTooHigh,
    /// A shape the recognizer does not encode, such as a doubled pair of
    /// lines or a curved multiple branch at multiplicity four.
    OutsideEncodedRows,
}

impl fmt::Display for RecognizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecognizeError::ZeroGerm => write!(f, "germ is identically zero"),
            RecognizeError::NotACurveGerm => write!(f, "origin is not on the curve"),
            RecognizeError::ConeNotTripleLine => {
                write!(f, "multiplicity-three cone is not a triple line")
            }
            RecognizeError::MultiplicityTooHigh => write!(f, "multiplicity exceeds four"),
            RecognizeError::OutsideEncodedRows => {
                write!(f, "germ shape is outside the encoded families")
            }
        }
    }
}

impl std::error::Error for RecognizeError {}

/// Working copy of a germ. For an exact germ the term map is the whole
/// polynomial and coordinate changes keep every term; for a truncated germ
/// only degrees below `trunc` are meaningful.
#[derive(Clone, Debug)]
struct WorkGerm {
    terms: BTreeMap<(u32, u32), Rat>,
    trunc: u32,
    exact: bool,
}

impl WorkGerm {
    fn from_plane(g: &PlaneGerm) -> Self {
        WorkGerm {
            terms: g
                .series()
                .terms()
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
            trunc: g.truncation(),
            exact: g.is_exact(),
        }
    }

    fn insert(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        if !self.exact && i + j >= self.trunc {
            return;
        }
        let cur = self.terms.remove(&(i, j)).unwrap_or_else(Rat::zero) + c;
        if !cur.is_zero() {
            self.terms.insert((i, j), cur);
        }
    }

    /// Coefficient when it is determined, None when it lies at or beyond
    /// the truncation of an inexact germ.
    fn coeff_known(&self, i: u32, j: u32) -> Option<Rat> {
        if !self.exact && i + j >= self.trunc {
            return None;
        }
        Some(self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero))
    }

    fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    fn max_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    fn scale(&mut self, c: &Rat) {
        for v in self.terms.values_mut() {
            *v *= c;
        }
    }

    /// Substitutes x -> a x + b y, y -> c x + d y for an invertible matrix.
    /// Total degree is preserved, so exactness and truncation carry over.
    fn subst_linear(&self, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> WorkGerm {
        debug_assert!(!(a * d - b * c).is_zero());
        let mut out = WorkGerm {
            terms: BTreeMap::new(),
            trunc: self.trunc,
            exact: self.exact,
        };
        for (&(i, j), coef) in &self.terms {
            // (a x + b y)^i as coefficients of x^m y^(i-m), then the same
            // for the second factor.
            let first = binomial_expand(a, b, i);
            let second = binomial_expand(c, d, j);
            for (m1, c1) in first.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (m2, c2) in second.iter().enumerate() {
                    let w = c1 * c2 * coef;
                    out.insert(
                        (m1 + m2) as u32,
                        i + j - (m1 + m2) as u32,
                        w,
                    );
                }
            }
        }
        out
    }

    /// Substitutes y -> y + c x^k, k at least one.
    fn shear(&self, k: u32, c: &Rat) -> WorkGerm {
        let mut out = WorkGerm {
            terms: BTreeMap::new(),
            trunc: self.trunc,
            exact: self.exact,
        };
        for (&(i, j), coef) in &self.terms {
            let mut cpow = Rat::one();
            for m in 0..=j {
                let w = Rat::from(binom(j as u64, m as u64)) * &cpow * coef;
                out.insert(i + k * m, j - m, w);
                cpow *= c;
            }
        }
        out
    }

    /// Whether no terms of y-degree at most two remain.
    fn low_part_empty(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j >= 3)
    }

    /// Smallest y-degree among the stored terms.
    fn min_y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).min()
    }

    /// Coefficient array of the degree-n part, indexed by x-exponent.
    fn jet(&self, n: u32) -> Vec<Rat> {
        (0..=n)
            .map(|i| {
                self.terms
                    .get(&(i, n - i))
                    .cloned()
                    .unwrap_or_else(Rat::zero)
            })
            .collect()
    }

    /// View as a polynomial in y with x-coefficients capped at degree cap.
    fn to_ypoly(&self, cap: usize) -> YPoly {
        let dy = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut out: YPoly = vec![Vec::new(); dy as usize + 1];
        for (&(i, j), c) in &self.terms {
            if (i as usize) >= cap {
                continue;
            }
            let row = &mut out[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, Rat::zero());
            }
            row[i as usize] = c.clone();
        }
        out.into_iter().map(xp_trim).collect()
    }
}

fn binomial_expand(a: &Rat, b: &Rat, n: u32) -> Vec<Rat> {
    // Coefficient of x^m y^(n-m) in (a x + b y)^n.
    (0..=n)
        .map(|m| {
            Rat::from(binom(n as u64, m as u64)) * a.pow(m as i32) * b.pow((n - m) as i32)
        })
        .collect()
}

fn rec(kind: SingularityKind, decided_at_order: u32) -> Recognition {
    Recognition {
        class: SingularityClass::of(kind),
        decided_at_order,
    }
}

fn above(level: u32) -> Recognition {
    rec(
        SingularityKind::AboveTruncation {
            weight_level: level,
        },
        level,
    )
}

/// Names the germ by walking the normal-form rows slope by slope: double
/// points through the critical value of the branch through the singular
/// direction, triple points with a triple-line cone through the weighted
/// leading terms at slopes 1/(3k) down to 1/(3k+2), and quadruple points
/// through the line multiplicities of the cone.
pub fn arnold_recognize(germ: &PlaneGerm) -> Result<Recognition, RecognizeError> {
    let g = WorkGerm::from_plane(germ);
    match g.order() {
        None => {
            if g.exact {
                Err(RecognizeError::ZeroGerm)
            } else {
                Ok(above(g.trunc))
            }
        }
        Some(0) => Err(RecognizeError::NotACurveGerm),
        Some(1) => Ok(rec(SingularityKind::Smooth, 1)),
        Some(2) => Ok(double_point(g)),
        Some(3) => cube_ladder(g),
        Some(4) => quadruple_point(g),
        Some(_) => Err(RecognizeError::MultiplicityTooHigh),
    }
}

/// Double points: a nondegenerate 2-jet is a node, and in the rank-one case
/// the order of the critical value along the distinguished branch counts
/// the A-series index.
fn double_point(g: WorkGerm) -> Recognition {
    let q20 = g.coeff_known(2, 0).expect("order-two jet is stored");
    let q11 = g.coeff_known(1, 1).expect("order-two jet is stored");
    let q02 = g.coeff_known(0, 2).expect("order-two jet is stored");
    let disc = q11.pow(2) - Rat::from_integer(4.into()) * &q20 * &q02;
    if !disc.is_zero() {
        return rec(SingularityKind::A(1), 2);
    }
    let mut h = if q02.is_zero() {
        g.subst_linear(&Rat::zero(), &Rat::one(), &Rat::one(), &Rat::zero())
    } else {
        g
    };
    let q02 = h.coeff_known(0, 2).unwrap();
    let q11 = h.coeff_known(1, 1).unwrap();
    let lambda = q11 / (Rat::from_integer(2.into()) * &q02);
    if !lambda.is_zero() {
        h = h.subst_linear(&Rat::one(), &Rat::zero(), &-lambda, &Rat::one());
    }
    critical_value_order(h)
}

/// Newton iteration for the branch where the y-derivative vanishes,
/// followed by the order of the germ along it. Assumes the 2-jet is a
/// nonzero multiple of y^2.
fn critical_value_order(h: WorkGerm) -> Recognition {
    let cap = if h.exact {
        (h.trunc as usize).max(2 * h.max_degree() as usize + 2)
    } else {
        h.trunc as usize
    };
    let yp = h.to_ypoly(cap);
    let dy = crate::factor::yp_derivative_y(&yp);
    let c2 = h.coeff_known(0, 2).unwrap();
    let u0 = Rat::one() / (Rat::from_integer(2.into()) * c2);
    let mut psi: XPoly = Vec::new();
    for _ in 0..cap {
        let val = eval_in_y(&dy, &psi, cap);
        psi = xp_truncate(&xp_sub(&psi, &crate::factor::xp_scale(&val, &u0)), cap);
    }
    let value = eval_in_y(&yp, &psi, cap);
    match value.iter().position(|c| !c.is_zero()) {
        Some(nu) if h.exact || nu < h.trunc as usize => {
            rec(SingularityKind::A(nu as u32 - 1), nu as u32)
        }
        _ => above(if h.exact { cap as u32 } else { h.trunc }),
    }
}

fn eval_in_y(p: &YPoly, psi: &XPoly, cap: usize) -> XPoly {
    let mut acc: XPoly = Vec::new();
    for c in p.iter().rev() {
        acc = xp_truncate(
            &crate::factor::xp_add(&crate::factor::xp_mul(&acc, psi), c),
            cap,
        );
    }
    acc
}

/// Triple points with a triple-line cone: normalize the cone to y^3 and
/// read off the deepest row whose designated coefficient survives.
fn cube_ladder(g: WorkGerm) -> Result<Recognition, RecognizeError> {
    let jet = g.jet(3);
    let (c03, c12, c21, c30) = (&jet[0], &jet[1], &jet[2], &jet[3]);
    let mut h = if !c03.is_zero() {
        let rho = c12 / &(Rat::from_integer(3.into()) * c03);
        if *c21 != Rat::from_integer(3.into()) * rho.pow(2) * c03
            || *c30 != rho.pow(3) * c03
        {
            return Err(RecognizeError::ConeNotTripleLine);
        }
        if rho.is_zero() {
            g
        } else {
            g.subst_linear(&Rat::one(), &Rat::zero(), &-rho, &Rat::one())
        }
    } else {
        if !c12.is_zero() || !c21.is_zero() {
            return Err(RecognizeError::ConeNotTripleLine);
        }
        g.subst_linear(&Rat::zero(), &Rat::one(), &Rat::one(), &Rat::zero())
    };
    let lead = h.coeff_known(0, 3).unwrap();
    h.scale(&(Rat::one() / lead));
    ladder(h)
}

fn ladder(mut h: WorkGerm) -> Result<Recognition, RecognizeError> {
    let slope_cap = 2 * (h.trunc.max(h.max_degree())) + 4;
    let mut k = 1u32;
    loop {
        if h.exact && h.low_part_empty() {
            // The whole germ is y^3 times a unit: a non-isolated triple
            // branch below every slope.
            return Ok(rec(
                SingularityKind::J {
                    k: 0,
                    tail: JTail::Infinite,
                },
                3 * k,
            ));
        }
        if k >= 2 {
            let b = match h.coeff_known(k, 2) {
                Some(v) => v,
                None => return Ok(above(k + 2)),
            };
            let c = match h.coeff_known(2 * k, 1) {
                Some(v) => v,
                None => return Ok(above(2 * k + 1)),
            };
            let d = match h.coeff_known(3 * k, 0) {
                Some(v) => v,
                None => return Ok(above(3 * k)),
            };
            if !(b.is_zero() && c.is_zero() && d.is_zero()) {
                if !cubic_discriminant(&b, &c, &d).is_zero() {
                    let kind = if k == 2 {
                        SingularityKind::Etilde(8)
                    } else {
                        SingularityKind::J {
                            k,
                            tail: JTail::Zero,
                        }
                    };
                    return Ok(rec(kind, 3 * k));
                }
                if cubic_is_perfect_cube(&b, &c, &d) {
                    let rho = b / Rat::from_integer(3.into());
                    h = h.shear(k, &-rho);
                } else {
                    let tail = if h.exact {
                        if has_repeated_factor_through_origin(&h.to_ypoly(usize::MAX)) {
                            JTail::Infinite
                        } else {
                            JTail::Positive
                        }
                    } else {
                        JTail::PositiveOrInfinite
                    };
                    return Ok(rec(SingularityKind::J { k, tail }, 3 * k));
                }
            }
        }
        for (i, j, kind, decided) in [
            (3 * k + 1, 0, SingularityKind::E(6 * k), 3 * k + 1),
            (2 * k + 1, 1, SingularityKind::E(6 * k + 1), 2 * k + 2),
            (3 * k + 2, 0, SingularityKind::E(6 * k + 2), 3 * k + 2),
        ] {
            match h.coeff_known(i, j) {
                None => return Ok(above(i + j)),
                Some(v) if !v.is_zero() => return Ok(rec(kind, decided)),
                Some(_) => {}
            }
        }
        k += 1;
        if k > slope_cap {
            return Ok(above(3 * k));
        }
    }
}

/// Quadruple points: the cone decides. Four distinct lines give the
/// simple-elliptic double of the quadric cone; a quadruple or triple line
/// is accepted when the germ visibly splits off the straight multiple
/// branch.
fn quadruple_point(g: WorkGerm) -> Result<Recognition, RecognizeError> {
    let jet = g.jet(4);
    let b: [Rat; 5] = [
        jet[0].clone(),
        jet[1].clone(),
        jet[2].clone(),
        jet[3].clone(),
        jet[4].clone(),
    ];
    let shape = binary_quartic_shape(&b);
    if shape.squarefree {
        return Ok(rec(SingularityKind::Etilde(7), 4));
    }
    let Some(root) = shape.repeated else {
        return Err(RecognizeError::OutsideEncodedRows);
    };
    let h = match root {
        RepeatedRoot::AtInfinity => g,
        RepeatedRoot::Finite(r) => {
            g.subst_linear(&r, &Rat::one(), &Rat::one(), &Rat::zero())
        }
    };
    let min_j = h.min_y_degree().unwrap();
    if shape.max_multiplicity == 4 {
        if min_j >= 4 {
            if h.exact {
                Ok(rec(SingularityKind::QuadrupleConic, 4))
            } else {
                Ok(above(h.trunc))
            }
        } else {
            Err(RecognizeError::OutsideEncodedRows)
        }
    } else {
        if min_j >= 3 {
            debug_assert!(h.coeff_known(1, 3).map_or(true, |c| !c.is_zero()));
            if h.exact {
                Ok(rec(SingularityKind::TripleConicPlus, 4))
            } else {
                Ok(above(h.trunc))
            }
        } else {
            Err(RecognizeError::OutsideEncodedRows)
        }
    }
}
