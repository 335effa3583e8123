use exact_core::rat::Rat;
use exact_core::series::Series2;
use num_traits::Zero;

/// Homogeneous binary form in the last two coordinates, stored by the
/// exponent of the first of them. `coeffs[i]` multiplies x2^i x3^(d-i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![Rat::zero(); degree as usize + 1],
        }
    }

    /// Builds from coefficients listed by x2-exponent, low to high; the
    /// length fixes the degree.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        BinaryForm {
            degree: coeffs.len() as u32 - 1,
            coeffs,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of x2^i x3^j; the exponents must sum to the degree.
    pub fn coeff(&self, i: u32, j: u32) -> &Rat {
        assert_eq!(i + j, self.degree, "exponents must sum to the degree");
        &self.coeffs[i as usize]
    }

    pub fn set_coeff(&mut self, i: u32, c: Rat) {
        self.coeffs[i as usize] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> BinaryForm {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes local series for the two coordinates and expands.
    pub fn eval_series(&self, x2: &Series2, x3: &Series2) -> Series2 {
        let n = x2.truncation().min(x3.truncation());
        let mut out = Series2::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = self.degree - i as u32;
            let term = x2.pow(i as u32).mul(&x3.pow(j)).scale(c);
            out = out.add(&term);
        }
        out
    }
}
