use std::fmt;

/// Number of ambient projective coordinates (x0..x3).
pub const VARS: usize = 4;

/// Monomial in x0..x3 as its exponent vector.
///
/// The derived `Ord` is lexicographic on the exponent array; this is the
/// tie-break order used by the weighted monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub [u32; VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; VARS])
    }

    /// The monomial `x_i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; VARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; VARS];
        for i in 0..VARS {
            e[i] = self.0[i] + other.0[i];
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..VARS).all(|i| self.0[i] <= other.0[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut e = [0; VARS];
        for i in 0..VARS {
            e[i] = other.0[i] - self.0[i];
        }
        Some(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i)?;
            } else {
                write!(f, "x{}^{}", i, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of the given total degree, in increasing lexicographic order.
pub fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a0 in 0..=d {
        for a1 in 0..=d - a0 {
            for a2 in 0..=d - a0 - a1 {
                out.push(Monomial([a0, a1, a2, d - a0 - a1 - a2]));
            }
        }
    }
    out
}
