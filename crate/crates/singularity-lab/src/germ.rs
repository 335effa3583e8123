use exact_core::rat::Rat;
use exact_core::series::Series2;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Plane curve germ at the origin, stored as a truncated series in two
/// local variables plus a flag recording whether the stored terms are the
/// whole germ. Producers must set the flag honestly: `exact` asserts that
/// every coefficient at or beyond the truncation order vanishes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneGerm {
    series: Series2,
    exact: bool,
}

impl PlaneGerm {
    pub fn new(series: Series2, exact: bool) -> Self {
        PlaneGerm { series, exact }
    }

    /// Builds a germ from polynomial terms. When every term fits below the
    /// truncation order the germ is exact; otherwise the overflow terms are
    /// dropped and the germ is marked truncated.
    pub fn from_polynomial_terms<I>(truncation: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Rat)>,
    {
        let mut acc: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
        for (key, c) in terms {
            let cur = acc.remove(&key).unwrap_or_else(Rat::zero) + c;
            if cur.is_zero() {
                continue;
            }
            acc.insert(key, cur);
        }
        let exact = acc.keys().all(|&(i, j)| i + j < truncation);
        let series = Series2::from_terms(truncation, acc);
        PlaneGerm { series, exact }
    }

    pub fn series(&self) -> &Series2 {
        &self.series
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn truncation(&self) -> u32 {
        self.series.truncation()
    }

    pub fn order(&self) -> Option<u32> {
        self.series.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat::int;

    #[test]
    fn polynomial_terms_below_truncation_are_exact() {
        let g = PlaneGerm::from_polynomial_terms(12, vec![((0, 3), int(1)), ((7, 0), int(1))]);
        assert!(g.is_exact());
        assert_eq!(g.order(), Some(3));
    }

    #[test]
    fn overflow_terms_mark_the_germ_truncated() {
        let g = PlaneGerm::from_polynomial_terms(6, vec![((0, 3), int(1)), ((7, 0), int(1))]);
        assert!(!g.is_exact());
        assert_eq!(g.series().coeff(0, 3), Some(int(1)));
    }

    #[test]
    fn cancelling_terms_do_not_spoil_exactness() {
        let g = PlaneGerm::from_polynomial_terms(
            4,
            vec![((9, 0), int(2)), ((9, 0), int(-2)), ((0, 3), int(1))],
        );
        assert!(g.is_exact());
    }
}
