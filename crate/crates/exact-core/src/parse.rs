use crate::monomial::{Monomial, VARS};
use crate::poly::HomPolynomial;
use crate::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Errors from the polynomial text parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    Empty,
    UnexpectedChar(usize, char),
    UnexpectedEnd,
    UnexpectedToken(usize),
    VariableOutOfRange(usize),
    ZeroDenominator,
    Inhomogeneous { expected: u32, found: u32 },
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyParseError::Empty => write!(f, "empty polynomial"),
            PolyParseError::UnexpectedChar(pos, c) => {
                write!(f, "unexpected character {:?} at byte {}", c, pos)
            }
            PolyParseError::UnexpectedEnd => write!(f, "unexpected end of input"),
            PolyParseError::UnexpectedToken(pos) => write!(f, "unexpected token at byte {}", pos),
            PolyParseError::VariableOutOfRange(i) => {
                write!(f, "variable x{} out of range, expected x0..x3", i)
            }
            PolyParseError::ZeroDenominator => write!(f, "zero denominator"),
            PolyParseError::Inhomogeneous { expected, found } => write!(
                f,
                "inhomogeneous input: saw degrees {} and {}",
                expected, found
            ),
        }
    }
}

impl std::error::Error for PolyParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(BigInt),
    Var(usize),
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, PolyParseError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
            }
            'x' => {
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits_start == i {
                    return Err(PolyParseError::UnexpectedChar(start, 'x'));
                }
                let idx: usize = input[digits_start..i]
                    .parse()
                    .map_err(|_| PolyParseError::UnexpectedChar(start, 'x'))?;
                if idx >= VARS {
                    return Err(PolyParseError::VariableOutOfRange(idx));
                }
                out.push((start, Tok::Var(idx)));
            }
            _ => return Err(PolyParseError::UnexpectedChar(i, c)),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(usize::MAX)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_int(&mut self) -> Result<BigInt, PolyParseError> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(n),
            Some(_) => Err(PolyParseError::UnexpectedToken(self.toks[self.pos - 1].0)),
            None => Err(PolyParseError::UnexpectedEnd),
        }
    }

    /// One product of rational constants and variable powers.
    fn term(&mut self) -> Result<(Monomial, Rat), PolyParseError> {
        let mut coeff = Rat::one();
        let mut mono = Monomial::one();
        loop {
            match self.next() {
                Some(Tok::Int(n)) => {
                    let denom = if self.peek() == Some(&Tok::Slash) {
                        self.next();
                        let d = self.expect_int()?;
                        if d.is_zero() {
                            return Err(PolyParseError::ZeroDenominator);
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    coeff *= Rat::new(n, denom);
                }
                Some(Tok::Var(idx)) => {
                    let exp: u32 = if self.peek() == Some(&Tok::Caret) {
                        self.next();
                        let e = self.expect_int()?;
                        u32::try_from(&e)
                            .map_err(|_| PolyParseError::UnexpectedToken(self.here()))?
                    } else {
                        1
                    };
                    mono = mono.mul(&{
                        let mut m = Monomial::one();
                        m.0[idx] = exp;
                        m
                    });
                }
                Some(_) => return Err(PolyParseError::UnexpectedToken(self.toks[self.pos - 1].0)),
                None => return Err(PolyParseError::UnexpectedEnd),
            }
            if self.peek() == Some(&Tok::Star) {
                self.next();
                continue;
            }
            break;
        }
        Ok((mono, coeff))
    }
}

/// Parses text like `x0*x2 + x1^2` or `x0*x3^3 - 1/2*x2^4` into a
/// homogeneous polynomial; the degree is inferred from the first term.
pub fn parse_hom_polynomial(input: &str) -> Result<HomPolynomial, PolyParseError> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(PolyParseError::Empty);
    }
    let mut p = Parser { toks, pos: 0 };
    let mut terms: Vec<(Monomial, Rat)> = Vec::new();
    let mut first = true;
    while p.peek().is_some() {
        let mut sign = Rat::one();
        let mut saw_op = false;
        loop {
            match p.peek() {
                Some(Tok::Plus) => {
                    saw_op = true;
                    p.next();
                }
                Some(Tok::Minus) => {
                    saw_op = true;
                    sign = -sign;
                    p.next();
                }
                _ => break,
            }
        }
        if !first && !saw_op {
            return Err(PolyParseError::UnexpectedToken(p.here()));
        }
        if p.peek().is_none() {
            return Err(PolyParseError::UnexpectedEnd);
        }
        let (m, c) = p.term()?;
        terms.push((m, sign * c));
        first = false;
    }
    if terms.is_empty() {
        return Err(PolyParseError::Empty);
    }
    let degree = terms[0].0.degree();
    for (m, _) in &terms {
        if m.degree() != degree {
            return Err(PolyParseError::Inhomogeneous {
                expected: degree,
                found: m.degree(),
            });
        }
    }
    HomPolynomial::from_terms(degree, terms).map_err(|_| PolyParseError::Empty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    #[test]
    fn parses_conic_pencil_form() {
        let f = parse_hom_polynomial("x0*x2 + x1^2").unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.coeff(&Monomial([1, 0, 1, 0])), int(1));
        assert_eq!(f.coeff(&Monomial([0, 2, 0, 0])), int(1));
    }

    #[test]
    fn parses_signs_and_fractions() {
        let f = parse_hom_polynomial("-x3^4 + 1/2*x0*x1*x2^2 - 3*x1^4").unwrap();
        assert_eq!(f.coeff(&Monomial([0, 0, 0, 4])), int(-1));
        assert_eq!(f.coeff(&Monomial([1, 1, 2, 0])), rat(1, 2));
        assert_eq!(f.coeff(&Monomial([0, 4, 0, 0])), int(-3));
    }

    #[test]
    fn round_trips_display() {
        for s in [
            "x0*x2 + x1^2",
            "x0*x3^3 + 2*x1*x2*x3^2 - x2^3*x3",
            "-1/2*x0^4 + x1*x2^3",
        ] {
            let f = parse_hom_polynomial(s).unwrap();
            assert_eq!(parse_hom_polynomial(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_hom_polynomial("").is_err());
        assert!(parse_hom_polynomial("x4").is_err());
        assert!(parse_hom_polynomial("x0 + x1^2").is_err());
        assert!(parse_hom_polynomial("x0 * ").is_err());
        assert!(parse_hom_polynomial("1/0*x0").is_err());
        assert!(parse_hom_polynomial("y1").is_err());
    }

    #[test]
    fn merges_repeated_monomials() {
        let f = parse_hom_polynomial("x0*x1 + x0*x1 - 2*x0*x1").unwrap();
        assert!(f.is_zero());
    }
}
