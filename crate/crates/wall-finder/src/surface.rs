use std::collections::BTreeMap;

use exact_core::{binom, int, BiMonomial, BidegreeForm, Rat};
use hm_index::{
    mu_bidegree, ZeroPolynomial, WEIGHT_BALANCED, WEIGHT_FIRST_FACTOR, WEIGHT_STAGGERED,
};

/// Closed-orbit shapes for bidegree (4,4) curves on a smooth quadric, with
/// the coefficient data separating orbits inside each shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolystableFamily {
    /// Both rulings through a point plus a pair from the pencil they
    /// bound; the orbit is pinned by one invariant pair.
    RulingsWithPencilPair { invariant: [Rat; 2] },
    /// Four curves of bidegree (1,1) from a single pencil, listed by the
    /// binary quartic cutting them out.
    DiagonalQuartet { binary_quartic: [Rat; 5] },
    /// Both rulings doubled plus four fibers of one projection, cut out by
    /// the binary quartic.
    DoubledRulingsWithFibers { binary_quartic: [Rat; 5] },
}

/// Worst index over one family of coordinate swaps, with a swap attaining
/// it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeValue {
    pub mu: Rat,
    pub weights: (i64, i64),
}

/// Diagonal screening report for a bidegree (4,4) curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceScreen {
    pub staggered: ProbeValue,
    pub balanced: ProbeValue,
    pub first_factor: ProbeValue,
    /// A negative balanced probe: the curve has multiplicity 5 or more at
    /// a torus-fixed point, beyond what any slope tolerates.
    pub balanced_unstable: bool,
    /// Set when the support matches one of the closed-orbit shapes.
    pub family: Option<PolystableFamily>,
}

fn swaps(base: (i64, i64)) -> Vec<(i64, i64)> {
    let (a, b) = base;
    let mut out = vec![
        (a, b),
        (-a, b),
        (a, -b),
        (-a, -b),
        (b, a),
        (-b, a),
        (b, -a),
        (-b, -a),
    ];
    out.sort_unstable();
    out.dedup();
    out
}

fn probe(f: &BidegreeForm, base: (i64, i64)) -> ProbeValue {
    swaps(base)
        .into_iter()
        .map(|w| (mu_bidegree(f, w).expect("nonzero form"), w))
        .min_by(|x, y| x.0.cmp(&y.0))
        .map(|(mu, weights)| ProbeValue { mu, weights })
        .expect("swap lists are nonempty")
}

fn recognize(f: &BidegreeForm) -> Option<PolystableFamily> {
    let support: Vec<BiMonomial> = f.support().copied().collect();
    if support.iter().all(|m| m.u == [2, 2]) {
        let binary_quartic =
            [0, 1, 2, 3, 4].map(|j| f.coeff(&BiMonomial::new([2, 2], [4 - j, j])));
        return Some(PolystableFamily::DoubledRulingsWithFibers { binary_quartic });
    }
    let staggered = [
        BiMonomial::new([3, 1], [0, 4]),
        BiMonomial::new([2, 2], [2, 2]),
        BiMonomial::new([1, 3], [4, 0]),
    ];
    if support.iter().all(|m| staggered.contains(m)) {
        let a = f.coeff(&staggered[0]);
        let b = f.coeff(&staggered[1]);
        let c = f.coeff(&staggered[2]);
        let ac = &a * &c;
        if b == int(0) && ac == int(0) {
            // A vanishing pencil member collapses the shape.
            return None;
        }
        return Some(PolystableFamily::RulingsWithPencilPair {
            invariant: [&b * &b - int(2) * &ac, ac],
        });
    }
    if support
        .iter()
        .all(|m| m.u[0] == m.v[1] && m.u[1] == m.v[0])
    {
        let binary_quartic =
            [0, 1, 2, 3, 4].map(|k| f.coeff(&BiMonomial::new([4 - k, k], [k, 4 - k])));
        if (binary_quartic[0] == int(0) && binary_quartic[1] == int(0))
            || (binary_quartic[3] == int(0) && binary_quartic[4] == int(0))
        {
            // A ruling root of multiplicity two or more leaves the shape.
            return None;
        }
        return Some(PolystableFamily::DiagonalQuartet { binary_quartic });
    }
    None
}

/// Runs the three diagonal probe families over their coordinate swaps and
/// recognizes the closed-orbit shapes. The balanced family detects points
/// of multiplicity 5 or more at torus-fixed points, which destabilize at
/// every slope.
pub fn quartic_surface_stability_screen(
    f: &BidegreeForm,
) -> Result<SurfaceScreen, ZeroPolynomial> {
    assert_eq!(f.bidegree(), (4, 4), "the screen expects bidegree (4,4)");
    if f.is_zero() {
        return Err(ZeroPolynomial);
    }
    let staggered = probe(f, WEIGHT_STAGGERED);
    let balanced = probe(f, WEIGHT_BALANCED);
    let first_factor = probe(f, WEIGHT_FIRST_FACTOR);
    let balanced_unstable = balanced.mu < int(0);
    Ok(SurfaceScreen {
        staggered,
        balanced,
        first_factor,
        balanced_unstable,
        family: recognize(f),
    })
}

fn rat_pow(base: &Rat, e: u32) -> Rat {
    let mut out = int(1);
    for _ in 0..e {
        out = out * base;
    }
    out
}

/// s-expansion of one projective factor around a point: coordinates move as
/// (p0/p1 + s, 1) in the chart where the second entry is nonzero, and as
/// (1, s) at (1 : 0). Returns the coefficients of u0^i u1^j by s-degree.
fn factor_expansion(exps: [u32; 2], point: &[Rat; 2]) -> Vec<(u32, Rat)> {
    let [i, j] = exps;
    if point[1] != int(0) {
        let p = &point[0] / &point[1];
        (0..=i)
            .map(|r| {
                let b = Rat::from(binom(i as u64, r as u64));
                (r, b * rat_pow(&p, i - r))
            })
            .collect()
    } else {
        vec![(j, int(1))]
    }
}

/// Vanishing order of the curve at a point of the doubled line product,
/// computed by exact affine expansion in a step variable per factor.
pub fn multiplicity_at(
    f: &BidegreeForm,
    u: &[Rat; 2],
    v: &[Rat; 2],
) -> Result<u32, ZeroPolynomial> {
    if f.is_zero() {
        return Err(ZeroPolynomial);
    }
    assert!(
        !(u[0] == int(0) && u[1] == int(0)),
        "the first point must be nonzero"
    );
    assert!(
        !(v[0] == int(0) && v[1] == int(0)),
        "the second point must be nonzero"
    );
    let mut local: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
    for (m, c) in f.terms() {
        for (ru, cu) in factor_expansion(m.u, u) {
            for (rv, cv) in factor_expansion(m.v, v) {
                let entry = local.entry((ru, rv)).or_insert_with(|| int(0));
                *entry += c * &cu * &cv;
            }
        }
    }
    Ok(local
        .into_iter()
        .filter(|(_, c)| *c != int(0))
        .map(|((ru, rv), _)| ru + rv)
        .min()
        .expect("a nonzero form has a nonzero local expansion"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;

    fn form(terms: &[([u32; 2], [u32; 2], i64)]) -> BidegreeForm {
        BidegreeForm::from_terms(
            (4, 4),
            terms
                .iter()
                .map(|&(u, v, c)| (BiMonomial::new(u, v), int(c))),
        )
        .unwrap()
    }

    #[test]
    fn swap_families_have_the_expected_sizes() {
        assert_eq!(swaps(WEIGHT_STAGGERED).len(), 8);
        assert_eq!(swaps(WEIGHT_BALANCED).len(), 4);
        assert_eq!(swaps(WEIGHT_FIRST_FACTOR).len(), 4);
    }

    #[test]
    fn pencil_pair_invariant_matches_the_coefficient_formula() {
        let f = form(&[([3, 1], [0, 4], 1), ([2, 2], [2, 2], 3), ([1, 3], [4, 0], 2)]);
        let screen = quartic_surface_stability_screen(&f).unwrap();
        assert_eq!(
            screen.family,
            Some(PolystableFamily::RulingsWithPencilPair {
                invariant: [int(5), int(2)]
            })
        );
        assert!(!screen.balanced_unstable);
    }

    #[test]
    fn degenerate_pencil_pairs_are_rejected() {
        let f = form(&[([3, 1], [0, 4], 1)]);
        let screen = quartic_surface_stability_screen(&f).unwrap();
        assert_eq!(screen.family, None);
    }

    #[test]
    fn doubled_rulings_report_their_fiber_quartic() {
        let f = form(&[([2, 2], [4, 0], 1), ([2, 2], [2, 2], -2), ([2, 2], [0, 4], 1)]);
        let screen = quartic_surface_stability_screen(&f).unwrap();
        assert_eq!(
            screen.family,
            Some(PolystableFamily::DoubledRulingsWithFibers {
                binary_quartic: [int(1), int(0), int(-2), int(0), int(1)]
            })
        );
    }

    #[test]
    fn diagonal_quartets_need_simple_ruling_roots() {
        let f = form(&[([4, 0], [0, 4], 1), ([0, 4], [4, 0], -1)]);
        let screen = quartic_surface_stability_screen(&f).unwrap();
        assert_eq!(
            screen.family,
            Some(PolystableFamily::DiagonalQuartet {
                binary_quartic: [int(1), int(0), int(0), int(0), int(-1)]
            })
        );
        let f = form(&[([2, 2], [2, 2], 1), ([1, 3], [3, 1], 1), ([0, 4], [4, 0], 1)]);
        let screen = quartic_surface_stability_screen(&f).unwrap();
        assert_eq!(screen.family, None);
    }

    #[test]
    fn deep_point_forces_a_negative_balanced_probe() {
        let f = form(&[([0, 4], [1, 3], 1), ([1, 3], [0, 4], 1)]);
        let screen = quartic_surface_stability_screen(&f).unwrap();
        assert!(screen.balanced_unstable);
        assert!(screen.balanced.mu < int(0));
        let mult = multiplicity_at(&f, &[int(1), int(0)], &[int(1), int(0)]).unwrap();
        assert!(mult >= 5);
    }

    #[test]
    fn multiplicity_sees_cancellation() {
        // (u0 - u1)^4 * v0^4, expanded into monomials.
        let f = form(&[
            ([4, 0], [4, 0], 1),
            ([3, 1], [4, 0], -4),
            ([2, 2], [4, 0], 6),
            ([1, 3], [4, 0], -4),
            ([0, 4], [4, 0], 1),
        ]);
        assert_eq!(
            multiplicity_at(&f, &[int(1), int(1)], &[int(1), int(1)]).unwrap(),
            4
        );
        assert_eq!(
            multiplicity_at(&f, &[int(1), int(1)], &[int(0), int(1)]).unwrap(),
            8
        );
        assert_eq!(
            multiplicity_at(&f, &[int(2), int(1)], &[int(1), int(1)]).unwrap(),
            0
        );
    }

    #[test]
    fn multiplicity_handles_the_infinity_chart() {
        // u0^2 u1^2 v0^2 v1^2 has a four-fold point wherever a zero
        // coordinate from each factor lines up.
        let f = form(&[([2, 2], [2, 2], 1)]);
        for u in [[int(1), int(0)], [int(0), int(1)]] {
            for v in [[int(1), int(0)], [int(0), int(1)]] {
                assert_eq!(multiplicity_at(&f, &u, &v).unwrap(), 4);
            }
        }
        assert_eq!(
            multiplicity_at(&f, &[int(1), int(1)], &[rat(1, 2), int(1)]).unwrap(),
            0
        );
    }
}
