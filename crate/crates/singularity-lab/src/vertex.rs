use crate::arnold::arnold_recognize;
use crate::class::SingularityClass;
use crate::germ::PlaneGerm;
use exact_core::monomial::Monomial;
use exact_core::poly::HomPolynomial;
use exact_core::rat::Rat;
use exact_core::series::{substitute_affine, Series2};
use num_traits::{One, Zero};
use std::fmt;

/// Classification of the curve germ at the cone point [0,0,0,1], together
/// with the two incidence flags read off along the way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexReport {
    pub class: SingularityClass,
    pub decided_at_order: u32,
    /// The surface is tangent to the cone ruling at the point, so the germ
    /// was computed on the graph chart of the surface.
    pub tangent_line: bool,
    /// The ruling V(x0, x1) lies entirely on the quartic surface.
    pub contains_line: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexError {
    /// The quadric is not of the shape x0 x2 + x1^2 + c x0^2 + d x0 x1.
    QuadricShape,
    /// The quartic surface is singular at the cone point.
    SingularOnQuartic,
    /// The quadric restricted to the tangent plane degenerates, which the
    /// two-jet shortcut cannot resolve.
    DegenerateTangency,
}

impl fmt::Display for VertexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexError::QuadricShape => {
                write!(f, "quadric is not a vertex normal form x0 x2 + x1^2 + c x0^2 + d x0 x1")
            }
            VertexError::SingularOnQuartic => {
                write!(f, "quartic surface is singular at the cone point")
            }
            VertexError::DegenerateTangency => {
                write!(f, "degenerate tangency outside the two-jet shortcut")
            }
        }
    }
}

impl std::error::Error for VertexError {}

struct VertexQuadric {
    c: Rat,
    d: Rat,
}

fn validate_quadric(f2: &HomPolynomial) -> Option<VertexQuadric> {
    if f2.degree() != 2 {
        return None;
    }
    let mut q = VertexQuadric {
        c: Rat::zero(),
        d: Rat::zero(),
    };
    for (m, coeff) in f2.terms() {
        match m.0 {
            [1, 0, 1, 0] if coeff.is_one() => {}
            [0, 2, 0, 0] if coeff.is_one() => {}
            [2, 0, 0, 0] => q.c = coeff.clone(),
            [1, 1, 0, 0] => q.d = coeff.clone(),
            _ => return None,
        }
    }
    if !f2.coeff(&Monomial([1, 0, 1, 0])).is_one()
        || !f2.coeff(&Monomial([0, 2, 0, 0])).is_one()
    {
        return None;
    }
    Some(q)
}

/// Classifies the germ at [0,0,0,1] of the curve cut on the quartic surface
/// by the cone x0 x2 + x1^2 + c x0^2 + d x0 x1. When the surface is
/// transverse to the ruling there, a discriminant of the restricted quadric
/// settles the node question; when it is tangent, the surface is solved as
/// a graph x0 = phi(x1, x2) and the restricted quadric germ goes through
/// the curve recognizer.
pub fn vertex_am(
    f2: &HomPolynomial,
    f4: &HomPolynomial,
    truncation: u32,
) -> Result<VertexReport, VertexError> {
    assert_eq!(f4.degree(), 4, "quartic expected");
    assert!(truncation >= 4, "truncation too small to see the quartic");
    let q = validate_quadric(f2).ok_or(VertexError::QuadricShape)?;

    let contains_line = (0..=4).all(|i| f4.coeff(&Monomial([0, 0, i, 4 - i])).is_zero());

    if !f4.coeff(&Monomial([0, 0, 0, 4])).is_zero() {
        return Ok(VertexReport {
            class: SingularityClass::of(crate::class::SingularityKind::Smooth),
            decided_at_order: 0,
            tangent_line: false,
            contains_line,
        });
    }

    let e0 = f4.coeff(&Monomial([1, 0, 0, 3]));
    let e1 = f4.coeff(&Monomial([0, 1, 0, 3]));
    let e2 = f4.coeff(&Monomial([0, 0, 1, 3]));
    if e0.is_zero() && e1.is_zero() && e2.is_zero() {
        return Err(VertexError::SingularOnQuartic);
    }

    let four = Rat::from_integer(4.into());
    if !e1.is_zero() {
        let r0 = &e0 / &e1;
        let r2 = &e2 / &e1;
        let a = &q.c - &q.d * &r0 + r0.pow(2);
        let b = Rat::one() - &q.d * &r2 + Rat::from_integer(2.into()) * &r0 * &r2;
        let cc = r2.pow(2);
        return node_or_degenerate(b.pow(2) - four * a * cc, contains_line);
    }
    if !e2.is_zero() {
        let disc = q.d.pow(2) - four * (&q.c - &e0 / &e2);
        return node_or_degenerate(disc, contains_line);
    }

    // Tangent plane V(x0): solve the surface as x0 = phi(x1, x2) in the
    // chart x3 = 1 and restrict the quadric to it.
    let assign = [
        Series2::zero(truncation),
        Series2::var(0, truncation),
        Series2::var(1, truncation),
        Series2::zero(truncation),
    ];
    let mut slices = Vec::with_capacity(5);
    for i in 0..=4u32 {
        let part = HomPolynomial::from_terms(
            4 - i,
            f4.terms().filter(|(m, _)| m.0[0] == i).map(|(m, c)| {
                (Monomial([0, m.0[1], m.0[2], m.0[3]]), c.clone())
            }),
        )
        .expect("stripped slice is homogeneous");
        slices.push(
            substitute_affine(&part, 3, &assign, truncation)
                .expect("truncation is positive"),
        );
    }
    let inv1 = slices[1]
        .invert_unit()
        .expect("linear slice is a unit at a smooth tangent point");
    let minus_one = -Rat::one();
    let mut phi = Series2::zero(truncation);
    for _ in 0..truncation {
        let mut num = slices[0].clone();
        for i in 2..=4usize {
            num = num.add(&slices[i].mul(&phi.pow(i as u32)));
        }
        phi = num.mul(&inv1).scale(&minus_one);
    }

    let s = Series2::var(0, truncation);
    let t = Series2::var(1, truncation);
    let inner = phi.scale(&q.c).add(&s.scale(&q.d)).add(&t);
    let germ = PlaneGerm::new(s.pow(2).add(&phi.mul(&inner)), false);
    let r = arnold_recognize(&germ).expect("graph germ has multiplicity two");
    Ok(VertexReport {
        class: r.class,
        decided_at_order: r.decided_at_order,
        tangent_line: true,
        contains_line,
    })
}

fn node_or_degenerate(
    disc: Rat,
    contains_line: bool,
) -> Result<VertexReport, VertexError> {
    if disc.is_zero() {
        return Err(VertexError::DegenerateTangency);
    }
    Ok(VertexReport {
        class: SingularityClass::of(crate::class::SingularityKind::A(1)),
        decided_at_order: 2,
        tangent_line: false,
        contains_line,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::SingularityKind;
    use exact_core::poly::HomPolynomial;
    use exact_core::rat::int;

    fn quartic(terms: &[([u32; 4], i64)]) -> HomPolynomial {
        HomPolynomial::from_terms(
            4,
            terms.iter().map(|&(m, c)| (Monomial(m), int(c))),
        )
        .unwrap()
    }

    fn cone() -> HomPolynomial {
        HomPolynomial::from_terms(
            2,
            [
                (Monomial([1, 0, 1, 0]), int(1)),
                (Monomial([0, 2, 0, 0]), int(1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn vertex_off_the_surface_is_smooth() {
        let f4 = quartic(&[([0, 0, 0, 4], 1)]);
        let r = vertex_am(&cone(), &f4, 12).unwrap();
        assert_eq!(r.class.kind, SingularityKind::Smooth);
        assert!(!r.tangent_line);
        assert!(!r.contains_line);
    }

    #[test]
    fn transverse_tangent_plane_gives_a_node() {
        let f4 = quartic(&[([0, 1, 0, 3], 1)]);
        let r = vertex_am(&cone(), &f4, 12).unwrap();
        assert_eq!(r.class.kind, SingularityKind::A(1));
        assert!(!r.tangent_line);
        assert!(r.contains_line);
    }

    #[test]
    fn graph_chart_reads_deeper_singularities() {
        let f4 = quartic(&[([1, 0, 0, 3], 1), ([0, 0, 2, 2], 1)]);
        let r = vertex_am(&cone(), &f4, 12).unwrap();
        assert_eq!(r.class.kind, SingularityKind::A(2));
        assert!(r.tangent_line);
        assert!(!r.contains_line);
    }

    #[test]
    fn curved_graphs_feed_back_into_the_quadric() {
        // x0 x3^3 + x0^2 x2 x3 + x2^2 x3^2: phi picks up a correction from
        // the quadratic slice.
        let f4 = quartic(&[([1, 0, 0, 3], 1), ([2, 0, 1, 1], 1), ([0, 0, 2, 2], 1)]);
        let r = vertex_am(&cone(), &f4, 12).unwrap();
        assert_eq!(r.class.kind, SingularityKind::A(2));
        assert!(r.tangent_line);
    }

    #[test]
    fn singular_surface_is_rejected() {
        let f4 = quartic(&[([0, 0, 2, 2], 1)]);
        assert_eq!(
            vertex_am(&cone(), &f4, 12).unwrap_err(),
            VertexError::SingularOnQuartic
        );
    }

    #[test]
    fn quadric_shape_is_enforced() {
        let bad = HomPolynomial::from_terms(
            2,
            [
                (Monomial([1, 0, 1, 0]), int(1)),
                (Monomial([0, 2, 0, 0]), int(1)),
                (Monomial([0, 0, 0, 2]), int(1)),
            ],
        )
        .unwrap();
        let f4 = quartic(&[([0, 0, 0, 4], 1)]);
        assert_eq!(
            vertex_am(&bad, &f4, 12).unwrap_err(),
            VertexError::QuadricShape
        );
    }

    #[test]
    fn degenerate_restriction_is_reported() {
        // With e2 = 1 and e0 = 0 the discriminant is d^2 - 4c, so d = 2,
        // c = 1 restricts to a square while d = 0, c = 1 stays a node.
        let f2 = HomPolynomial::from_terms(
            2,
            [
                (Monomial([1, 0, 1, 0]), int(1)),
                (Monomial([0, 2, 0, 0]), int(1)),
                (Monomial([2, 0, 0, 0]), int(1)),
            ],
        )
        .unwrap();
        let f4 = quartic(&[([0, 0, 1, 3], 1)]);
        let f2_deg = HomPolynomial::from_terms(
            2,
            [
                (Monomial([1, 0, 1, 0]), int(1)),
                (Monomial([0, 2, 0, 0]), int(1)),
                (Monomial([2, 0, 0, 0]), int(1)),
                (Monomial([1, 1, 0, 0]), int(2)),
            ],
        )
        .unwrap();
        assert_eq!(
            vertex_am(&f2_deg, &f4, 12).unwrap_err(),
            VertexError::DegenerateTangency
        );
        let r = vertex_am(&f2, &f4, 12).unwrap();
        assert_eq!(r.class.kind, SingularityKind::A(1));
    }
}
