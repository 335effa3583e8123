//! Structural properties: the eight-way decision table really partitions
//! the coefficient space in its stated order, the recognizer does not care
//! about scaling or variable order, and the stratum ladder stays in step
//! with the kind tags.

use exact_core::rat::{int, rat, Rat};
use num_traits::Zero;
use proptest::prelude::*;
use singularity_lab::{
    arnold_recognize, classify_norm3, stratum_dimensions, BinaryForm, JTail, NormalFormInput,
    PlaneGerm, SingularityKind,
};

fn bf(coeffs: Vec<i64>) -> BinaryForm {
    BinaryForm::from_coeffs(coeffs.into_iter().map(int).collect())
}

fn nf(a: i64, g2: [i64; 3], g3: [i64; 4], g4: [i64; 5]) -> NormalFormInput {
    NormalFormInput::new(int(a), bf(g2.to_vec()), bf(g3.to_vec()), bf(g4.to_vec()))
}

/// Every combination of the deciding coefficients, with the slope-three
/// pair sampled so that the branch product is nonzero, zero with a live
/// linear term, or zero because both entries vanish.
#[test]
fn decision_table_partitions_the_flag_cube() {
    let pair_choices: [(i64, i64); 4] = [(0, 0), (1, 0), (0, 1), (2, -1)];
    let expected_tags: [Option<u8>; 8] = [
        None,
        Some(7),
        Some(6),
        Some(5),
        Some(4),
        Some(3),
        Some(2),
        Some(1),
    ];
    let mut hits = [0usize; 8];
    for g2_on in [0i64, 1] {
        for g3_30 in [0i64, 1] {
            for g3_21 in [0i64, 1] {
                for g4_40 in [0i64, 1] {
                    for (g3_12, g4_31) in pair_choices {
                        for g4_22 in [0i64, 1] {
                            let data = nf(
                                1,
                                [g2_on, 0, 0],
                                [0, g3_12, g3_21, g3_30],
                                [0, 0, g4_22, g4_31, g4_40],
                            );
                            let branches =
                                int(g4_31) * (int(g3_12).pow(2) + int(4) * int(g4_31));
                            let cases = [
                                (
                                    g2_on != 0,
                                    SingularityKind::J {
                                        k: 2,
                                        tail: JTail::Unspecified,
                                    },
                                ),
                                (g3_30 != 0, SingularityKind::E(12)),
                                (g3_21 != 0, SingularityKind::E(13)),
                                (g4_40 != 0, SingularityKind::E(14)),
                                (
                                    !branches.is_zero(),
                                    SingularityKind::J {
                                        k: 3,
                                        tail: JTail::Zero,
                                    },
                                ),
                                (
                                    (g3_12, g4_31) != (0, 0),
                                    SingularityKind::J {
                                        k: 3,
                                        tail: JTail::PositiveOrInfinite,
                                    },
                                ),
                                (
                                    g4_22 != 0,
                                    SingularityKind::J {
                                        k: 4,
                                        tail: JTail::Infinite,
                                    },
                                ),
                                (true, SingularityKind::TripleConicPlus),
                            ];
                            let (case, expected) = cases
                                .iter()
                                .enumerate()
                                .find_map(|(i, (fires, kind))| fires.then(|| (i, kind.clone())))
                                .unwrap();
                            hits[case] += 1;
                            let class = classify_norm3(&data);
                            assert_eq!(
                                class.kind, expected,
                                "case {case} with flags g2 {g2_on}, g3_30 {g3_30}, \
                                 g3_21 {g3_21}, g4_40 {g4_40}, pair ({g3_12},{g4_31}), \
                                 g4_22 {g4_22}"
                            );
                            assert_eq!(class.tag, expected_tags[case]);
                            let seen = arnold_recognize(&data.germ(12)).unwrap();
                            assert!(
                                class.kind.same_family(&seen.class.kind),
                                "case {case}: classifier {} vs recognizer {}",
                                class.kind,
                                seen.class.kind
                            );
                        }
                    }
                }
            }
        }
    }
    assert!(hits.iter().all(|&n| n >= 1), "case never fired: {hits:?}");
}

/// The ladder rows, the display names, and the tag assignment of the kinds
/// stay synchronized.
#[test]
fn ladder_rows_agree_with_kind_tags() {
    let witnesses: [(u8, SingularityKind); 8] = [
        (7, SingularityKind::E(12)),
        (6, SingularityKind::E(13)),
        (5, SingularityKind::E(14)),
        (
            4,
            SingularityKind::J {
                k: 3,
                tail: JTail::Zero,
            },
        ),
        (
            3,
            SingularityKind::J {
                k: 3,
                tail: JTail::Positive,
            },
        ),
        (
            2,
            SingularityKind::J {
                k: 4,
                tail: JTail::Infinite,
            },
        ),
        (1, SingularityKind::TripleConicPlus),
        (0, SingularityKind::QuadrupleConic),
    ];
    let rows = stratum_dimensions();
    assert_eq!(rows.len(), witnesses.len());
    for (row, (tag, kind)) in rows.iter().zip(witnesses) {
        assert_eq!(row.tag, tag);
        assert_eq!(kind.tag(), Some(tag));
        assert_eq!(row.label, kind.to_string());
    }
}

fn rebuild(germ: &PlaneGerm, map: impl Fn((u32, u32), Rat) -> ((u32, u32), Rat)) -> PlaneGerm {
    PlaneGerm::from_polynomial_terms(
        germ.truncation(),
        germ.series().terms().map(|(&k, c)| map(k, c.clone())),
    )
}

fn small() -> impl Strategy<Value = i64> {
    -6i64..=6
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recognizer_ignores_scaling(
        a in small(),
        g2 in [small(), small(), small()],
        g3 in [small(), small(), small(), small()],
        g4 in [small(), small(), small(), small(), small()],
        num in (-6i64..=6).prop_filter("nonzero", |v| *v != 0),
        den in 1i64..=6,
    ) {
        let germ = nf(a, g2, g3, g4).germ(12);
        let factor = rat(num, den);
        let scaled = rebuild(&germ, |k, c| (k, c * &factor));
        prop_assert_eq!(
            arnold_recognize(&germ).unwrap(),
            arnold_recognize(&scaled).unwrap()
        );
    }

    #[test]
    fn recognizer_ignores_variable_order(
        a in small(),
        g2 in [small(), small(), small()],
        g3 in [small(), small(), small(), small()],
        g4 in [small(), small(), small(), small(), small()],
    ) {
        let germ = nf(a, g2, g3, g4).germ(12);
        let swapped = rebuild(&germ, |(i, j), c| ((j, i), c));
        prop_assert_eq!(
            arnold_recognize(&germ).unwrap(),
            arnold_recognize(&swapped).unwrap()
        );
    }
}
