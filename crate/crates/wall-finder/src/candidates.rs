use std::collections::{BTreeMap, BTreeSet};

use exact_core::{
    int, monomials_of_degree, parse_hom_polynomial, rat, HomPolynomial, Monomial, OnePS, Rat,
};
use hm_index::mu_form;

/// The fixed rank-3 quadric every candidate is measured against.
pub fn cone_quadric() -> HomPolynomial {
    parse_hom_polynomial("x0*x2 + x1^2").expect("fixed quadric literal")
}

/// Diagonal subgroups preserving the cone quadric up to scale form the
/// family (1, a, 2a-1, -3a); this returns its primitive integral
/// representative at parameter `alpha`.
pub fn lambda_alpha(alpha: &Rat) -> OnePS {
    let l = OnePS::new([
        int(1),
        alpha.clone(),
        rat(2, 1) * alpha - int(1),
        rat(-3, 1) * alpha,
    ])
    .expect("the parameter family has weight sum zero");
    l.integerize()
}

/// Weight of a degree-4 monomial under the parameter family, written as the
/// pair (constant, slope): weight(alpha) = constant + slope * alpha.
fn weight_profile(m: &Monomial) -> (i64, i64) {
    let k = m.0.map(i64::from);
    (k[0] - k[2], k[1] + 2 * k[2] - 3 * k[3])
}

/// True when no monomial carries x3 to a power above 2, so every member of
/// the span is singular at the cone vertex [0,0,0,1].
fn vertex_singular(support: &[Monomial]) -> bool {
    support.iter().all(|m| m.0[3] <= 2)
}

/// Why an enumerated candidate cannot be a genuine wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exclusion {
    /// Every member of the family is singular at the cone vertex, which
    /// forces instability strictly below the endpoint slope.
    VertexSingular,
    /// The recorded diagonal subgroup has strictly negative balance at the
    /// candidate slope on the entire span, so no member is semistable there.
    Destabilized { witness: OnePS },
}

/// One entry of the enumeration: a slope where some family of quartics
/// balances the quadric weight along a diagonal subgroup.
#[derive(Clone, Debug)]
pub struct WallCandidate {
    /// Parameter pinned by the balancing condition; None when the balance
    /// vanishes along the whole parameter family at once.
    pub alpha: Option<Rat>,
    /// Slope at which the balance vanishes.
    pub t: Rat,
    /// Primitive integral subgroup for a pinned parameter; None exactly
    /// when `alpha` is None.
    pub lambda: Option<OnePS>,
    /// All degree-4 monomials sharing the balancing weight.
    pub f4_support: Vec<Monomial>,
    /// Sum of the support monomials, a generic member of the family.
    pub sample_f4: HomPolynomial,
    pub excluded: Option<Exclusion>,
}

impl WallCandidate {
    /// Candidates at slope 1/2 describe the orbit families of the endpoint
    /// rather than interior walls.
    pub fn is_endpoint(&self) -> bool {
        self.t == rat(1, 2)
    }
}

/// Smallest positive probe balance certificate search: scans the parameter
/// subgroups pinned anywhere in the enumeration, plus the parameter range
/// endpoints, together with their inverses. The support maximum bounds
/// every member's index from above, so a strictly negative probe balance
/// rules out the entire span at once; a family that is semistable at its
/// own slope can never be flagged.
fn probe_destabilizer(
    f2: &HomPolynomial,
    support: &[Monomial],
    t: &Rat,
    probes: &[OnePS],
) -> Option<OnePS> {
    for probe in probes {
        let mu2 = mu_form(f2, probe).expect("the quadric is nonzero");
        let mu4 = support
            .iter()
            .map(|m| probe.weight(m))
            .max()
            .expect("candidate supports are nonempty");
        if mu2 + t * &mu4 < int(0) {
            return Some(probe.clone());
        }
    }
    None
}

/// Enumerates every slope in (delta, 1/2] at which some family of quartics
/// balances the quadric against a subgroup of the parameter family, sorted
/// by slope and parameter.
///
/// A single monomial is weighted by the whole family at once, so its
/// balance can only vanish identically in the parameter: this needs a
/// weight with zero constant part and negative slope, and the balancing
/// slope is then read off directly. A pair of monomials with distinct,
/// non-parallel weight functions pins the parameter by forcing equality;
/// the candidate family is every monomial sharing that weight, the slope
/// follows from the vanishing balance, and coincidences are deduplicated
/// by (parameter, slope).
///
/// Two kinds of candidates are kept but marked excluded: spans whose
/// members are all singular at the cone vertex (below the endpoint), and
/// spans destabilized at their own slope by one of the parameter
/// subgroups. The surviving slopes are the walls.
pub fn find_walls(delta: &Rat) -> Vec<WallCandidate> {
    assert!(
        *delta > int(0) && *delta < rat(1, 6),
        "the slope floor must lie in (0, 1/6)"
    );
    let f2 = cone_quadric();
    let quartics = monomials_of_degree(4);
    let profiles: Vec<(i64, i64)> = quartics.iter().map(weight_profile).collect();
    let half = rat(1, 2);

    // Parameters pinned by some pair, before any slope filtering, so the
    // probe list does not depend on delta. The range endpoints are added
    // by hand: 0 degenerates the quadric's weight gap and 1 symmetrizes
    // the last two coordinates.
    let mut alphas: BTreeSet<Rat> = BTreeSet::new();
    alphas.insert(int(0));
    alphas.insert(int(1));

    let mut pinned: BTreeMap<(Rat, Rat), Vec<Monomial>> = BTreeMap::new();
    for i in 0..quartics.len() {
        for j in (i + 1)..quartics.len() {
            let (d1, c1) = profiles[i];
            let (d2, c2) = profiles[j];
            if (d1, c1) == (d2, c2) || c1 == c2 {
                // Equal weight functions pin nothing; distinct parallel
                // ones never meet.
                continue;
            }
            let alpha = rat(d2 - d1, c1 - c2);
            if alpha <= int(0) || alpha > int(1) {
                continue;
            }
            alphas.insert(alpha.clone());
            let w = int(d1) + int(c1) * &alpha;
            if w >= int(0) {
                continue;
            }
            let t = rat(-2, 1) * &alpha / &w;
            if t <= *delta || t > half {
                continue;
            }
            pinned.entry((alpha.clone(), t)).or_insert_with(|| {
                quartics
                    .iter()
                    .zip(&profiles)
                    .filter(|(_, (d, c))| int(*d) + int(*c) * &alpha == w)
                    .map(|(m, _)| *m)
                    .collect()
            });
        }
    }

    let probes: Vec<OnePS> = alphas
        .iter()
        .flat_map(|a| {
            let l = lambda_alpha(a);
            [l.clone(), l.inverse()]
        })
        .collect();

    let mut out = Vec::new();
    for (m, &(d, c)) in quartics.iter().zip(&profiles) {
        if d != 0 || c >= 0 {
            continue;
        }
        let t = rat(-2, c);
        debug_assert!(*delta < t && t <= half);
        let support = vec![*m];
        // A vertex-singular single is a degenerate member of the endpoint
        // orbit families, never a wall of its own, so it is excluded even
        // when its slope is 1/2.
        let excluded = if vertex_singular(&support) {
            Some(Exclusion::VertexSingular)
        } else {
            probe_destabilizer(&f2, &support, &t, &probes)
                .map(|witness| Exclusion::Destabilized { witness })
        };
        out.push(WallCandidate {
            alpha: None,
            t,
            lambda: None,
            sample_f4: HomPolynomial::monomial_sum(4, &support),
            f4_support: support,
            excluded,
        });
    }
    for ((alpha, t), support) in pinned {
        // Vertex-singular spans are unstable strictly below the endpoint;
        // at 1/2 itself they close up onto stable orbits and stay.
        let excluded = if t < half && vertex_singular(&support) {
            Some(Exclusion::VertexSingular)
        } else {
            probe_destabilizer(&f2, &support, &t, &probes)
                .map(|witness| Exclusion::Destabilized { witness })
        };
        out.push(WallCandidate {
            lambda: Some(lambda_alpha(&alpha)),
            alpha: Some(alpha),
            t,
            sample_f4: HomPolynomial::monomial_sum(4, &support),
            f4_support: support,
            excluded,
        });
    }
    out.sort_by(|a, b| (&a.t, &a.alpha).cmp(&(&b.t, &b.alpha)));
    out
}

/// A wall: all surviving candidates at one slope.
#[derive(Clone, Debug)]
pub struct Wall {
    pub t: Rat,
    /// Surviving candidates, the family-wide balancer (if any) first, then
    /// pinned ones by increasing parameter.
    pub members: Vec<WallCandidate>,
    /// Set when the lead candidate spans three or more monomials, so the
    /// critical curves at this slope form a positive-dimensional family.
    pub one_parameter_family: bool,
    /// The orbit families at slope 1/2.
    pub endpoint: bool,
}

/// Groups the surviving candidates by slope.
pub fn walls(delta: &Rat) -> Vec<Wall> {
    let mut grouped: BTreeMap<Rat, Vec<WallCandidate>> = BTreeMap::new();
    for cand in find_walls(delta) {
        if cand.excluded.is_none() {
            grouped.entry(cand.t.clone()).or_default().push(cand);
        }
    }
    grouped
        .into_iter()
        .map(|(t, members)| {
            let endpoint = t == rat(1, 2);
            let one_parameter_family = !endpoint && members[0].f4_support.len() >= 3;
            Wall {
                t,
                members,
                one_parameter_family,
                endpoint,
            }
        })
        .collect()
}

/// Distinguished critical curve at one wall.
#[derive(Clone, Debug)]
pub struct CriticalRow {
    pub index: u8,
    pub t: Rat,
    pub quartic: HomPolynomial,
    /// None for the rows balanced by the whole parameter family.
    pub lambda: Option<OnePS>,
}

/// The eight distinguished critical curves in increasing slope order. Seven
/// interior walls contribute; the wall whose lead span has a free modulus
/// contributes twice, once with the residual cubic's doubled root and once
/// with a generic member, since the flip there treats the two differently.
pub fn critical_rows() -> Vec<CriticalRow> {
    let all = walls(&rat(1, 10));
    let interior: Vec<&Wall> = all.iter().filter(|w| !w.endpoint).collect();
    assert_eq!(interior.len(), 7, "interior wall count");
    let mut rows = Vec::new();
    for wall in interior {
        let primary = &wall.members[0];
        if wall.one_parameter_family {
            let doubled = parse_hom_polynomial("x0*x3^3 + 2*x1*x2*x3^2 - x2^3*x3")
                .expect("critical curve literal");
            let generic = parse_hom_polynomial("x0*x3^3 + 2*x1*x2*x3^2 - 2*x2^3*x3")
                .expect("critical curve literal");
            for quartic in [doubled, generic] {
                assert!(quartic
                    .support()
                    .all(|m| primary.f4_support.contains(m)));
                rows.push(CriticalRow {
                    index: 0,
                    t: wall.t.clone(),
                    quartic,
                    lambda: primary.lambda.clone(),
                });
            }
        } else {
            rows.push(CriticalRow {
                index: 0,
                t: wall.t.clone(),
                quartic: primary.sample_f4.clone(),
                lambda: primary.lambda.clone(),
            });
        }
    }
    assert_eq!(rows.len(), 8, "critical row count");
    for (i, row) in rows.iter_mut().enumerate() {
        row.index = i as u8;
    }
    rows
}
