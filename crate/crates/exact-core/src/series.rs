use crate::monomial::VARS;
use crate::poly::HomPolynomial;
use crate::rat::{int, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Default truncation order for local power-series work; overridable by
/// callers (the command line reads HMLAB_TRUNCATION).
pub const DEFAULT_TRUNCATION: u32 = 12;

/// Truncated power series in two local variables s, t.
///
/// `truncation = N` means coefficients of total degree < N are stored
/// exactly and everything from degree N on is unknown. Binary operations
/// truncate to the smaller of the two precisions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series2 {
    truncation: u32,
    terms: BTreeMap<(u32, u32), Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    ZeroTruncation,
    ConstantTerm,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ZeroTruncation => write!(f, "truncation order must be positive"),
            SeriesError::ConstantTerm => {
                write!(f, "substituted series must have positive order")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

impl Series2 {
    pub fn zero(truncation: u32) -> Self {
        Series2 {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat, truncation: u32) -> Self {
        let mut s = Series2::zero(truncation);
        s.insert(0, 0, c);
        s
    }

    /// The local variable: `var(0)` is s, `var(1)` is t.
    pub fn var(i: usize, truncation: u32) -> Self {
        assert!(i < 2);
        let mut s = Series2::zero(truncation);
        if i == 0 {
            s.insert(1, 0, Rat::one());
        } else {
            s.insert(0, 1, Rat::one());
        }
        s
    }

    pub fn from_terms<I>(truncation: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Rat)>,
    {
        let mut s = Series2::zero(truncation);
        for ((i, j), c) in terms {
            let cur = s.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero) + c;
            s.terms.remove(&(i, j));
            s.insert(i, j, cur);
        }
        s
    }

    fn insert(&mut self, i: u32, j: u32, c: Rat) {
        if i + j < self.truncation && !c.is_zero() {
            self.terms.insert((i, j), c);
        }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of s^i t^j; None when the degree is outside the stored
    /// precision.
    pub fn coeff(&self, i: u32, j: u32) -> Option<Rat> {
        if i + j >= self.truncation {
            return None;
        }
        Some(self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero))
    }

    /// Least total degree of a nonzero coefficient; None when all stored
    /// coefficients vanish (order at least the truncation).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    /// Drops precision to `n`; `n` must not exceed the current truncation.
    pub fn retruncate(&self, n: u32) -> Series2 {
        assert!(n <= self.truncation, "cannot raise series precision");
        Series2 {
            truncation: n,
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j < n)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Series2) -> Series2 {
        let n = self.truncation.min(other.truncation);
        let mut out = self.retruncate(n);
        for (&(i, j), c) in &other.terms {
            if i + j >= n {
                continue;
            }
            let cur = out.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero) + c;
            out.terms.remove(&(i, j));
            out.insert(i, j, cur);
        }
        out
    }

    pub fn sub(&self, other: &Series2) -> Series2 {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Series2 {
        if c.is_zero() {
            return Series2::zero(self.truncation);
        }
        Series2 {
            truncation: self.truncation,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Series2) -> Series2 {
        let n = self.truncation.min(other.truncation);
        let mut out = Series2::zero(n);
        for (&(i1, j1), c1) in &self.terms {
            if i1 + j1 >= n {
                continue;
            }
            for (&(i2, j2), c2) in &other.terms {
                let (i, j) = (i1 + i2, j1 + j2);
                if i + j >= n {
                    continue;
                }
                let cur = out.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero) + c1 * c2;
                out.terms.remove(&(i, j));
                out.insert(i, j, cur);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Series2 {
        let mut acc = Series2::constant(Rat::one(), self.truncation);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative in variable `i`; precision drops by one.
    pub fn derivative(&self, var: usize) -> Series2 {
        assert!(var < 2);
        let n = self.truncation.saturating_sub(1);
        let mut out = Series2::zero(n);
        for (&(i, j), c) in &self.terms {
            let (e, i2, j2) = if var == 0 {
                (i, i.wrapping_sub(1), j)
            } else {
                (j, i, j.wrapping_sub(1))
            };
            if e == 0 {
                continue;
            }
            out.insert(i2, j2, c * int(e as i64));
        }
        out
    }

    /// Composition self(u, v) for series u, v of positive order.
    pub fn compose(&self, u: &Series2, v: &Series2) -> Result<Series2, SeriesError> {
        for s in [u, v] {
            if let Some(o) = s.order() {
                if o == 0 {
                    return Err(SeriesError::ConstantTerm);
                }
            }
        }
        let n = self
            .truncation
            .min(u.truncation)
            .min(v.truncation);
        let mut u_pows: Vec<Series2> = vec![Series2::constant(Rat::one(), n)];
        let mut v_pows: Vec<Series2> = vec![Series2::constant(Rat::one(), n)];
        for k in 1..n as usize {
            u_pows.push(u_pows[k - 1].mul(u));
            v_pows.push(v_pows[k - 1].mul(v));
        }
        let mut out = Series2::zero(n);
        for (&(i, j), c) in &self.terms {
            if i + j >= n {
                continue;
            }
            let term = u_pows[i as usize].mul(&v_pows[j as usize]).scale(c);
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Multiplicative inverse when the constant term is nonzero.
    pub fn invert_unit(&self) -> Option<Series2> {
        let c0 = self.coeff(0, 0)?;
        if c0.is_zero() {
            return None;
        }
        let inv_c0 = Rat::one() / c0.clone();
        // self = c0 (1 - g) with ord g >= 1; invert by geometric series.
        let g = Series2::constant(c0, self.truncation)
            .sub(self)
            .scale(&inv_c0);
        let mut acc = Series2::constant(Rat::one(), self.truncation);
        let mut gp = Series2::constant(Rat::one(), self.truncation);
        for _ in 1..self.truncation {
            gp = gp.mul(&g);
            acc = acc.add(&gp);
        }
        Some(acc.scale(&inv_c0))
    }
}

/// Sets the chart variable to 1, replaces every other variable by its
/// assigned local series, and expands; the result is exact below the
/// truncation order.
pub fn substitute_affine(
    f: &HomPolynomial,
    chart: usize,
    assign: &[Series2; VARS],
    truncation: u32,
) -> Result<Series2, SeriesError> {
    if truncation == 0 {
        return Err(SeriesError::ZeroTruncation);
    }
    assert!(chart < VARS);
    let mut out = Series2::zero(truncation);
    for (m, c) in f.terms() {
        let mut term = Series2::constant(c.clone(), truncation);
        for i in 0..VARS {
            if i == chart || m.0[i] == 0 {
                continue;
            }
            term = term.mul(&assign[i].retruncate(truncation.min(assign[i].truncation())).pow(m.0[i]));
        }
        out = out.add(&term);
    }
    Ok(out)
}
