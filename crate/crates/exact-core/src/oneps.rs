use crate::monomial::{Monomial, VARS};
use crate::rat::{format_fraction, int, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Diagonal one-parameter subgroup of SL(4), stored by its weight vector.
///
/// Weights may be rational (a virtual subgroup); rescaling by a positive
/// constant does not change any stability verdict, and `integerize` picks the
/// primitive integral representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OnePS {
    weights: [Rat; VARS],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSumError;

impl fmt::Display for WeightSumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "one-parameter subgroup weights must sum to zero")
    }
}

impl std::error::Error for WeightSumError {}

impl OnePS {
    pub fn new(weights: [Rat; VARS]) -> Result<Self, WeightSumError> {
        let sum: Rat = weights.iter().cloned().sum();
        if !sum.is_zero() {
            return Err(WeightSumError);
        }
        Ok(OnePS { weights })
    }

    /// Integer weight vector; panics unless the entries sum to zero.
    pub fn ints(w: [i64; VARS]) -> Self {
        assert_eq!(w.iter().sum::<i64>(), 0, "weights must sum to zero");
        OnePS {
            weights: w.map(int),
        }
    }

    pub fn zero() -> Self {
        OnePS {
            weights: [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn weights(&self) -> &[Rat; VARS] {
        &self.weights
    }

    /// Weight of the induced action on a monomial: the dot product of the
    /// weight vector with the exponent vector.
    pub fn weight(&self, m: &Monomial) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..VARS {
            if m.0[i] != 0 {
                acc += &self.weights[i] * int(m.0[i] as i64);
            }
        }
        acc
    }

    pub fn add(&self, other: &OnePS) -> OnePS {
        let mut w = self.weights.clone();
        for i in 0..VARS {
            w[i] += &other.weights[i];
        }
        OnePS { weights: w }
    }

    /// The inverse subgroup s -> lambda(s^-1).
    pub fn inverse(&self) -> OnePS {
        OnePS {
            weights: self.weights.clone().map(|w| -w),
        }
    }

    pub fn scale(&self, c: &Rat) -> OnePS {
        OnePS {
            weights: self.weights.clone().map(|w| w * c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|w| w.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(|w| w.denom().is_one())
    }

    /// Smallest positive integral multiple (the zero subgroup maps to itself).
    pub fn integerize(&self) -> OnePS {
        if self.is_zero() {
            return self.clone();
        }
        let mut l = BigInt::one();
        for w in &self.weights {
            l = l.lcm(w.denom());
        }
        let ints: Vec<BigInt> = self.weights.iter().map(|w| w.numer() * &l / w.denom()).collect();
        let mut g = BigInt::zero();
        for n in &ints {
            g = g.gcd(n);
        }
        OnePS {
            weights: [
                Rat::from(&ints[0] / &g),
                Rat::from(&ints[1] / &g),
                Rat::from(&ints[2] / &g),
                Rat::from(&ints[3] / &g),
            ],
        }
    }

    /// Integer entries when integral; None otherwise or on overflow.
    pub fn as_i64s(&self) -> Option<[i64; VARS]> {
        let mut out = [0i64; VARS];
        for i in 0..VARS {
            if !self.weights[i].denom().is_one() {
                return None;
            }
            out[i] = i64::try_from(self.weights[i].numer()).ok()?;
        }
        Some(out)
    }
}

impl fmt::Display for OnePS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            format_fraction(&self.weights[0]),
            format_fraction(&self.weights[1]),
            format_fraction(&self.weights[2]),
            format_fraction(&self.weights[3])
        )
    }
}
