use std::fmt;

/// Tail parameter of a J-series singularity. The classifiers never extract a
/// finite positive tail exactly; they report how much they did decide.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JTail {
    /// Three distinct branches at the leading slope.
    Zero,
    /// Finite positive tail, value not extracted.
    Positive,
    /// Positive or infinite; the data seen cannot separate the two.
    PositiveOrInfinite,
    /// Non-reduced germ: a doubled branch at the leading slope.
    Infinite,
    /// Nothing about the tail was decided.
    Unspecified,
}

/// Kind of a curve singularity, limited to the families that show up for
/// (2,4) complete intersections with a triple-line or worse tangent cone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SingularityKind {
    /// Smooth point.
    Smooth,
    /// A_m double point; the order of vanishing of the critical value is m+1.
    A(u32),
    /// Simple elliptic marker: 7 for the four-distinct-lines cone, 8 for the
    /// triple-line cone with three distinct branches at slope two.
    Etilde(u32),
    /// Exceptional unimodal family E_r (r = 6k, 6k+1, 6k+2).
    E(u32),
    /// J-series family at slope k. `k = 0` with an infinite tail encodes the
    /// cube of a single smooth branch, which sits below every finite slope.
    J { k: u32, tail: JTail },
    /// Triple smooth branch, possibly with one transverse extra branch; the
    /// curve-level picture is a tripled conic plus a residual conic.
    TripleConicPlus,
    /// Quadrupled smooth branch; the curve is four times a conic.
    QuadrupleConic,
    /// The deciding coefficient lies at or beyond the stored precision.
    AboveTruncation { weight_level: u32 },
}

impl SingularityKind {
    /// Stratum tag on the codimension ladder, when the kind pins one down.
    pub fn tag(&self) -> Option<u8> {
        match self {
            SingularityKind::QuadrupleConic => Some(0),
            SingularityKind::TripleConicPlus => Some(1),
            SingularityKind::J {
                k: 4,
                tail: JTail::Infinite,
            } => Some(2),
            SingularityKind::J { k: 3, tail } => match tail {
                JTail::Positive | JTail::PositiveOrInfinite | JTail::Infinite => Some(3),
                JTail::Zero => Some(4),
                JTail::Unspecified => None,
            },
            SingularityKind::E(14) => Some(5),
            SingularityKind::E(13) => Some(6),
            SingularityKind::E(12) => Some(7),
            _ => None,
        }
    }

    /// Whether two verdicts name the same family, ignoring refinements one
    /// side could not make. The slope-two elliptic marker counts as the
    /// J-series family at slope two with three distinct branches, and the
    /// cube-of-a-branch verdict matches the tripled-conic picture.
    pub fn same_family(&self, other: &SingularityKind) -> bool {
        fn canonical(k: &SingularityKind) -> SingularityKind {
            match k {
                SingularityKind::Etilde(8) => SingularityKind::J {
                    k: 2,
                    tail: JTail::Zero,
                },
                SingularityKind::J {
                    k: 0,
                    tail: JTail::Infinite,
                } => SingularityKind::TripleConicPlus,
                other => other.clone(),
            }
        }
        fn tails_meet(a: JTail, b: JTail) -> bool {
            use JTail::*;
            match (a, b) {
                (Unspecified, _) | (_, Unspecified) => true,
                (PositiveOrInfinite, Positive | Infinite | PositiveOrInfinite) => true,
                (Positive | Infinite, PositiveOrInfinite) => true,
                (x, y) => x == y,
            }
        }
        match (canonical(self), canonical(other)) {
            (
                SingularityKind::J { k: k1, tail: t1 },
                SingularityKind::J { k: k2, tail: t2 },
            ) => k1 == k2 && tails_meet(t1, t2),
            (a, b) => a == b,
        }
    }
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityKind::Smooth => write!(f, "smooth"),
            SingularityKind::A(m) => write!(f, "A{m}"),
            SingularityKind::Etilde(r) => write!(f, "Etilde{r}"),
            SingularityKind::E(r) => write!(f, "E{r}"),
            SingularityKind::J { k: 0, tail: JTail::Infinite } => write!(f, "J(inf)"),
            SingularityKind::J { k, tail } => {
                let t = match tail {
                    JTail::Zero => "0",
                    JTail::Positive => "+",
                    JTail::PositiveOrInfinite => "+/inf",
                    JTail::Infinite => "inf",
                    JTail::Unspecified => "?",
                };
                write!(f, "J({k},{t})")
            }
            SingularityKind::TripleConicPlus => write!(f, "3C0+C1"),
            SingularityKind::QuadrupleConic => write!(f, "4C0"),
            SingularityKind::AboveTruncation { weight_level } => {
                write!(f, "undecided(deg>={weight_level})")
            }
        }
    }
}

/// A classification verdict together with its stratum tag, when one applies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingularityClass {
    pub kind: SingularityKind,
    pub tag: Option<u8>,
}

impl SingularityClass {
    pub fn of(kind: SingularityKind) -> Self {
        let tag = kind.tag();
        SingularityClass { kind, tag }
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if let Some(t) = self.tag {
            write!(f, " [tag {t}]")?;
        }
        Ok(())
    }
}

/// Curve-level context that a pointwise classification cannot see.
#[derive(Clone, Copy, Default, Debug)]
pub struct CurveContext {
    /// The curve is four times a smooth conic.
    pub quadruple_conic: bool,
    /// The curve is three times a smooth conic plus a distinct conic.
    pub triple_conic_plus: bool,
}

/// Tag on the stratum ladder, with curve-level recognitions taking
/// precedence over the pointwise kind.
pub fn w_stratum_tag(c: &SingularityClass, context: &CurveContext) -> Option<u8> {
    if context.quadruple_conic {
        return Some(0);
    }
    if context.triple_conic_plus {
        return Some(1);
    }
    c.kind.tag()
}

/// One row of the stratum dimension ladder.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StratumRow {
    pub tag: u8,
    pub label: &'static str,
    /// Number of coefficients in the reduced normal form cut out by the row's
    /// defining conditions.
    pub parameter_count: u32,
    /// Dimension of the stratum: the parameter count minus the dimension of
    /// the group of normal-form-preserving automorphisms.
    pub dimension: u32,
}

/// Dimension ladder of the strata, steepest first. Each dimension is the
/// normal-form parameter count minus two.
pub fn stratum_dimensions() -> Vec<StratumRow> {
    let rows = [
        (7u8, "E12", 9u32),
        (6, "E13", 8),
        (5, "E14", 7),
        (4, "J(3,0)", 6),
        (3, "J(3,+)", 5),
        (2, "J(4,inf)", 4),
        (1, "3C0+C1", 3),
        (0, "4C0", 2),
    ];
    rows.iter()
        .map(|&(tag, label, parameter_count)| StratumRow {
            tag,
            label,
            parameter_count,
            dimension: parameter_count - 2,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_follow_the_ladder() {
        assert_eq!(SingularityKind::E(14).tag(), Some(5));
        assert_eq!(SingularityKind::E(13).tag(), Some(6));
        assert_eq!(SingularityKind::E(12).tag(), Some(7));
        assert_eq!(
            SingularityKind::J { k: 4, tail: JTail::Infinite }.tag(),
            Some(2)
        );
        assert_eq!(
            SingularityKind::J { k: 3, tail: JTail::Zero }.tag(),
            Some(4)
        );
        assert_eq!(
            SingularityKind::J { k: 3, tail: JTail::Infinite }.tag(),
            Some(3)
        );
        assert_eq!(
            SingularityKind::J { k: 3, tail: JTail::Positive }.tag(),
            Some(3)
        );
        assert_eq!(SingularityKind::QuadrupleConic.tag(), Some(0));
        assert_eq!(SingularityKind::TripleConicPlus.tag(), Some(1));
        assert_eq!(SingularityKind::A(5).tag(), None);
        assert_eq!(
            SingularityKind::J { k: 2, tail: JTail::Unspecified }.tag(),
            None
        );
    }

    #[test]
    fn context_overrides_pointwise_kind() {
        let smooth = SingularityClass::of(SingularityKind::Smooth);
        let ctx = CurveContext {
            quadruple_conic: true,
            ..CurveContext::default()
        };
        assert_eq!(w_stratum_tag(&smooth, &ctx), Some(0));
        let ctx = CurveContext {
            triple_conic_plus: true,
            ..CurveContext::default()
        };
        assert_eq!(w_stratum_tag(&smooth, &ctx), Some(1));
        let e14 = SingularityClass::of(SingularityKind::E(14));
        assert_eq!(w_stratum_tag(&e14, &CurveContext::default()), Some(5));
    }

    #[test]
    fn dimension_ladder_descends_by_one() {
        let rows = stratum_dimensions();
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[0].label, "E12");
        assert_eq!(rows[0].parameter_count, 9);
        assert_eq!(rows[0].dimension, 7);
        assert_eq!(rows[7].dimension, 0);
        for w in rows.windows(2) {
            assert_eq!(w[0].dimension, w[1].dimension + 1);
        }
        for row in &rows {
            assert_eq!(row.dimension, row.parameter_count - 2);
        }
    }

    #[test]
    fn family_comparison_absorbs_refinements() {
        let a = SingularityKind::Etilde(8);
        let b = SingularityKind::J { k: 2, tail: JTail::Unspecified };
        assert!(a.same_family(&b));
        let c = SingularityKind::J { k: 2, tail: JTail::Infinite };
        assert!(c.same_family(&b));
        assert!(!a.same_family(&c));
        let d = SingularityKind::J { k: 3, tail: JTail::PositiveOrInfinite };
        assert!(d.same_family(&SingularityKind::J { k: 3, tail: JTail::Infinite }));
        assert!(!d.same_family(&SingularityKind::J { k: 3, tail: JTail::Zero }));
        assert!(SingularityKind::J { k: 0, tail: JTail::Infinite }
            .same_family(&SingularityKind::TripleConicPlus));
    }
}
