//! End-to-end checks on the eight marked pencil members: reduction of the
//! quartic to the marked normal form, the eight-way classifier, germ-level
//! agreement with the curve recognizer, and the A-series reading at the
//! cone point.

use exact_core::parse_hom_polynomial;
use exact_core::poly::HomPolynomial;
use singularity_lab::{
    arnold_recognize, classify_norm3, reduce_to_normal_form, vertex_am, JTail, NormalFormError,
    PlaneGerm, SingularityKind,
};

fn pencil(quartic: &str) -> (HomPolynomial, HomPolynomial) {
    (
        parse_hom_polynomial("x0*x2 + x1^2").unwrap(),
        parse_hom_polynomial(quartic).unwrap(),
    )
}

const MEMBERS: [&str; 8] = [
    "x3^4",
    "x1*x3^3",
    "x0*x3^3 + x2^2*x3^2",
    "x0*x3^3 + 2*x1*x2*x3^2 - x2^3*x3",
    "x0*x3^3 + 2*x1*x2*x3^2 - 2*x2^3*x3",
    "x0*x3^3 + x2^4",
    "x0*x3^3 + x1*x2^2*x3",
    "x0*x3^3 + x1*x2^3",
];

#[test]
fn reducible_members_classify_onto_their_tags() {
    let expected: [(usize, SingularityKind); 6] = [
        (
            2,
            SingularityKind::J {
                k: 4,
                tail: JTail::Infinite,
            },
        ),
        (
            3,
            SingularityKind::J {
                k: 3,
                tail: JTail::PositiveOrInfinite,
            },
        ),
        (
            4,
            SingularityKind::J {
                k: 3,
                tail: JTail::Zero,
            },
        ),
        (5, SingularityKind::E(14)),
        (6, SingularityKind::E(13)),
        (7, SingularityKind::E(12)),
    ];
    for (row, kind) in expected {
        let (f2, f4) = pencil(MEMBERS[row]);
        let nf = reduce_to_normal_form(&f2, &f4).unwrap();
        let class = classify_norm3(&nf);
        assert_eq!(class.kind, kind, "row {row}");
        assert_eq!(class.tag, Some(row as u8), "row {row}");
    }
}

#[test]
fn classifier_agrees_with_the_germ_recognizer() {
    for row in 2..8 {
        let (f2, f4) = pencil(MEMBERS[row]);
        let nf = reduce_to_normal_form(&f2, &f4).unwrap();
        let class = classify_norm3(&nf);
        let seen = arnold_recognize(&nf.germ(12)).unwrap();
        assert!(
            class.kind.same_family(&seen.class.kind),
            "row {row}: {} vs {}",
            class.kind,
            seen.class.kind
        );
    }
}

#[test]
fn conic_multiples_fall_out_of_the_reduction() {
    for row in [0, 1] {
        let (f2, f4) = pencil(MEMBERS[row]);
        assert_eq!(
            reduce_to_normal_form(&f2, &f4),
            Err(NormalFormError::TripleTermVanishes),
            "row {row}"
        );
    }
    // At the marked point the two curves are the quadruple and tripled
    // conic: x2 = -x1^2 on the cone turns the quartics into t^4 and s*t^3.
    let quadruple = PlaneGerm::from_polynomial_terms(12, [((0u32, 4u32), exact_core::int(1))]);
    let r = arnold_recognize(&quadruple).unwrap();
    assert_eq!(r.class.kind, SingularityKind::QuadrupleConic);
    assert_eq!(r.class.tag, Some(0));
    let triple = PlaneGerm::from_polynomial_terms(12, [((1u32, 3u32), exact_core::int(1))]);
    let r = arnold_recognize(&triple).unwrap();
    assert_eq!(r.class.kind, SingularityKind::TripleConicPlus);
    assert_eq!(r.class.tag, Some(1));
}

#[test]
fn cone_point_reads_the_a_series() {
    let expected: [(SingularityKind, bool, bool); 8] = [
        (SingularityKind::Smooth, false, false),
        (SingularityKind::A(1), false, true),
        (SingularityKind::A(2), true, false),
        (
            SingularityKind::AboveTruncation { weight_level: 12 },
            true,
            false,
        ),
        (SingularityKind::A(3), true, false),
        (SingularityKind::A(4), true, false),
        (SingularityKind::A(5), true, true),
        (SingularityKind::A(7), true, true),
    ];
    for (row, (kind, tangent, contains)) in expected.iter().enumerate() {
        let (f2, f4) = pencil(MEMBERS[row]);
        let report = vertex_am(&f2, &f4, 12).unwrap();
        assert_eq!(&report.class.kind, kind, "row {row}");
        assert_eq!(report.tangent_line, *tangent, "row {row}");
        assert_eq!(report.contains_line, *contains, "row {row}");
    }
}

#[test]
fn deeper_truncation_does_not_change_the_verdicts() {
    for row in [2, 4, 5, 6, 7] {
        let (f2, f4) = pencil(MEMBERS[row]);
        let shallow = vertex_am(&f2, &f4, 12).unwrap();
        let deep = vertex_am(&f2, &f4, 20).unwrap();
        assert_eq!(shallow.class, deep.class, "row {row}");
    }
}
