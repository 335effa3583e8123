use crate::rat::{format_fraction, int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Monomial u0^i0 u1^i1 v0^j0 v1^j1 on a product of two projective lines.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BiMonomial {
    pub u: [u32; 2],
    pub v: [u32; 2],
}

impl BiMonomial {
    pub fn new(u: [u32; 2], v: [u32; 2]) -> Self {
        BiMonomial { u, v }
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.u[0] + self.u[1], self.v[0] + self.v[1])
    }

    /// Weight under the torus acting with weights (a,-a) on (u0,u1) and
    /// (b,-b) on (v0,v1).
    pub fn weight(&self, a: &Rat, b: &Rat) -> Rat {
        a * int(self.u[0] as i64 - self.u[1] as i64) + b * int(self.v[0] as i64 - self.v[1] as i64)
    }

    pub fn swap_u(&self) -> Self {
        BiMonomial {
            u: [self.u[1], self.u[0]],
            v: self.v,
        }
    }

    pub fn swap_v(&self) -> Self {
        BiMonomial {
            u: self.u,
            v: [self.v[1], self.v[0]],
        }
    }

    /// Exchanges the two line factors.
    pub fn swap_factors(&self) -> Self {
        BiMonomial {
            u: self.v,
            v: self.u,
        }
    }
}

impl fmt::Display for BiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bidegree() == (0, 0) {
            return write!(f, "1");
        }
        let mut first = true;
        let names = [("u0", self.u[0]), ("u1", self.u[1]), ("v0", self.v[0]), ("v1", self.v[1])];
        for (name, e) in names {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", name)?;
            } else {
                write!(f, "{}^{}", name, e)?;
            }
        }
        Ok(())
    }
}

/// Bihomogeneous form of fixed bidegree with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BidegreeForm {
    bidegree: (u32, u32),
    terms: BTreeMap<BiMonomial, Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidegreeError {
    expected: (u32, u32),
    found: (u32, u32),
}

impl fmt::Display for BidegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "term of bidegree {:?} in a form of bidegree {:?}",
            self.found, self.expected
        )
    }
}

impl std::error::Error for BidegreeError {}

impl BidegreeForm {
    pub fn zero(bidegree: (u32, u32)) -> Self {
        BidegreeForm {
            bidegree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(bidegree: (u32, u32), terms: I) -> Result<Self, BidegreeError>
    where
        I: IntoIterator<Item = (BiMonomial, Rat)>,
    {
        let mut map: BTreeMap<BiMonomial, Rat> = BTreeMap::new();
        for (m, c) in terms {
            if m.bidegree() != bidegree {
                return Err(BidegreeError {
                    expected: bidegree,
                    found: m.bidegree(),
                });
            }
            let entry = map.entry(m).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&m);
            }
        }
        Ok(BidegreeForm {
            bidegree,
            terms: map,
        })
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.bidegree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BiMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &BiMonomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &BiMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &BidegreeForm) -> BidegreeForm {
        assert_eq!(self.bidegree, other.bidegree, "bidegree mismatch in sum");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(*m).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        BidegreeForm {
            bidegree: self.bidegree,
            terms,
        }
    }

    pub fn scale(&self, c: &Rat) -> BidegreeForm {
        if c.is_zero() {
            return BidegreeForm::zero(self.bidegree);
        }
        BidegreeForm {
            bidegree: self.bidegree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &BidegreeForm) -> BidegreeForm {
        let bidegree = (
            self.bidegree.0 + other.bidegree.0,
            self.bidegree.1 + other.bidegree.1,
        );
        let mut terms: BTreeMap<BiMonomial, Rat> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = BiMonomial::new(
                    [m1.u[0] + m2.u[0], m1.u[1] + m2.u[1]],
                    [m1.v[0] + m2.v[0], m1.v[1] + m2.v[1]],
                );
                let entry = terms.entry(m).or_insert_with(Rat::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&m);
                }
            }
        }
        BidegreeForm { bidegree, terms }
    }

    /// Applies a coordinate swap to every term.
    pub fn map_monomials(&self, f: impl Fn(&BiMonomial) -> BiMonomial) -> BidegreeForm {
        let terms: BTreeMap<BiMonomial, Rat> =
            self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect();
        let bidegree = terms
            .keys()
            .next()
            .map(|m| m.bidegree())
            .unwrap_or(self.bidegree);
        BidegreeForm { bidegree, terms }
    }
}

impl fmt::Display for BidegreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.bidegree() == (0, 0) {
                write!(f, "{}", format_fraction(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", format_fraction(&abs), m)?;
            }
        }
        Ok(())
    }
}

/// u0^i0 u1^i1 with i0+i1 = a, paired with v0^j0 v1^j1 with j0+j1 = b, over
/// the full (a+1) x (b+1) grid.
pub fn bimonomials(a: u32, b: u32) -> Vec<BiMonomial> {
    let mut out = Vec::new();
    for i1 in 0..=a {
        for j1 in 0..=b {
            out.push(BiMonomial::new([a - i1, i1], [b - j1, j1]));
        }
    }
    out
}
