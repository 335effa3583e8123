use crate::monomial::{Monomial, VARS};
use crate::rat::{format_fraction, int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Homogeneous polynomial in x0..x3 with exact rational coefficients.
///
/// The zero polynomial of each degree is the empty term map; stored
/// coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomPolynomial {
    degree: u32,
    terms: BTreeMap<Monomial, Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermDegreeError {
    expected: u32,
    found: u32,
}

impl fmt::Display for TermDegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "term of degree {} in a polynomial of degree {}",
            self.found, self.expected
        )
    }
}

impl std::error::Error for TermDegreeError {}

impl HomPolynomial {
    pub fn zero(degree: u32) -> Self {
        HomPolynomial {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self, TermDegreeError>
    where
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(TermDegreeError {
                    expected: degree,
                    found: m.degree(),
                });
            }
            let entry = map.entry(m).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&m);
            }
        }
        Ok(HomPolynomial { degree, terms: map })
    }

    /// Single monomial with coefficient 1.
    pub fn monomial(m: Monomial) -> Self {
        HomPolynomial {
            degree: m.degree(),
            terms: BTreeMap::from([(m, Rat::one())]),
        }
    }

    /// Sum of the given monomials, each with coefficient 1.
    pub fn monomial_sum(degree: u32, ms: &[Monomial]) -> Self {
        Self::from_terms(degree, ms.iter().map(|m| (*m, Rat::one())))
            .expect("monomials of the stated degree")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &HomPolynomial) -> HomPolynomial {
        assert_eq!(self.degree, other.degree, "degree mismatch in sum");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(*m).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        HomPolynomial {
            degree: self.degree,
            terms,
        }
    }

    pub fn sub(&self, other: &HomPolynomial) -> HomPolynomial {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> HomPolynomial {
        if c.is_zero() {
            return HomPolynomial::zero(self.degree);
        }
        HomPolynomial {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> HomPolynomial {
        HomPolynomial {
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &HomPolynomial) -> HomPolynomial {
        let mut out = HomPolynomial::zero(self.degree + other.degree);
        for (m, c) in &other.terms {
            out = out.add(&self.mul_monomial(m).scale(c));
        }
        out
    }

    /// Formal partial derivative with respect to `x_var`; degree drops by one.
    pub fn partial(&self, var: usize) -> HomPolynomial {
        assert!(var < VARS);
        assert!(self.degree > 0, "derivative of a constant");
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut lowered = *m;
            lowered.0[var] = e - 1;
            terms.insert(lowered, c * int(e as i64));
        }
        HomPolynomial {
            degree: self.degree - 1,
            terms,
        }
    }

    /// Value at a point with rational coordinates.
    pub fn eval(&self, point: &[Rat; VARS]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..VARS {
                for _ in 0..m.0[i] {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Display for HomPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending lexicographic order puts x0-leading terms first.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
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
            if m.degree() == 0 {
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
