use exact_core::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Univariate polynomial over the rationals, coefficients by ascending
/// degree with no trailing zeros.
pub type XPoly = Vec<Rat>;

pub fn xp_trim(mut p: XPoly) -> XPoly {
    while p.last().map_or(false, Rat::is_zero) {
        p.pop();
    }
    p
}

pub fn xp_deg(p: &XPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn xp_add(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    xp_trim(out)
}

pub fn xp_sub(a: &XPoly, b: &XPoly) -> XPoly {
    xp_add(a, &xp_scale(b, &-Rat::one()))
}

pub fn xp_scale(p: &XPoly, c: &Rat) -> XPoly {
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|a| a * c).collect()
}

pub fn xp_mul(a: &XPoly, b: &XPoly) -> XPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    xp_trim(out)
}

/// Truncates to degrees strictly below `n`.
pub fn xp_truncate(p: &XPoly, n: usize) -> XPoly {
    xp_trim(p.iter().take(n).cloned().collect())
}

pub fn xp_derivative(p: &XPoly) -> XPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    xp_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer((i as i64).into()))
            .collect(),
    )
}

/// Euclidean division; the divisor must be nonzero.
pub fn xp_divrem(a: &XPoly, b: &XPoly) -> (XPoly, XPoly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let db = b.len() - 1;
    let lead_inv = Rat::one() / b[db].clone();
    let mut rem = a.clone();
    let mut quot = vec![Rat::zero(); a.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let f = &rem[dr] * &lead_inv;
        quot[dr - db] = f.clone();
        for (i, c) in b.iter().enumerate() {
            let delta = c * &f;
            rem[dr - db + i] -= delta;
        }
        rem = xp_trim(rem);
    }
    (xp_trim(quot), rem)
}

/// Monic greatest common divisor; the gcd of two zero polynomials is zero.
///
/// Runs a primitive remainder sequence over the integers so intermediate
/// coefficients stay small; plain Euclid over the rationals compounds
/// fractions badly enough to stall on the germs the recognizer produces.
pub fn xp_gcd(a: &XPoly, b: &XPoly) -> XPoly {
    let g = zx_gcd(primitive_integer_coeffs(a), primitive_integer_coeffs(b));
    if g.is_empty() {
        return Vec::new();
    }
    let lead = g.last().unwrap().clone();
    g.into_iter().map(|c| Rat::new(c, lead.clone())).collect()
}

/// Integer-coefficient polynomial, ascending degree, no trailing zeros.
type ZX = Vec<BigInt>;

fn zx_gcd(a: ZX, b: ZX) -> ZX {
    let mut a = integer_primitive_part(a);
    let mut b = integer_primitive_part(b);
    while !b.is_empty() {
        let r = integer_pseudo_rem(&a, &b);
        a = b;
        b = integer_primitive_part(r);
    }
    if a.last().is_some_and(|c| c < &BigInt::zero()) {
        a = a.into_iter().map(std::ops::Neg::neg).collect();
    }
    a
}

fn primitive_integer_coeffs(p: &XPoly) -> ZX {
    let p = xp_trim(p.clone());
    if p.is_empty() {
        return Vec::new();
    }
    let mut denom_lcm = BigInt::one();
    for c in &p {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    integer_primitive_part(ints)
}

fn integer_primitive_part(p: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &p {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &content).collect()
}

fn integer_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.len() > db {
        let top = rem.pop().unwrap();
        let shift = rem.len() - db;
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        for (i, c) in b[..db].iter().enumerate() {
            rem[shift + i] -= c * &top;
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem
}

/// Discriminant of the monic cubic t^3 + b t^2 + c t + d.
pub fn cubic_discriminant(b: &Rat, c: &Rat, d: &Rat) -> Rat {
    let i18 = Rat::from_integer(18.into());
    let i4 = Rat::from_integer(4.into());
    let i27 = Rat::from_integer(27.into());
    i18 * b * c * d - i4.clone() * b.pow(3) * d + b.pow(2) * c.pow(2) - i4 * c.pow(3)
        - i27 * d.pow(2)
}

/// Whether the monic cubic t^3 + b t^2 + c t + d is a perfect cube
/// (t + b/3)^3.
pub fn cubic_is_perfect_cube(b: &Rat, c: &Rat, d: &Rat) -> bool {
    let three = Rat::from_integer(3.into());
    let twenty_seven = Rat::from_integer(27.into());
    *c == b.pow(2) / three.clone() && *d == b.pow(3) / twenty_seven
}

/// The repeated line of a binary form, as a root of its dehomogenization:
/// `AtInfinity` names the line cut out by the second variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepeatedRoot {
    AtInfinity,
    Finite(Rat),
}

/// Root-multiplicity summary of a binary quartic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuarticShape {
    pub max_multiplicity: u32,
    /// The unique line of multiplicity at least three, when one exists.
    pub repeated: Option<RepeatedRoot>,
    /// All four lines distinct.
    pub squarefree: bool,
}

/// Analyzes the line multiplicities of a nonzero binary quartic
/// sum b_i x^i y^(4-i), given by its coefficients in ascending i.
pub fn binary_quartic_shape(b: &[Rat; 5]) -> QuarticShape {
    let q = xp_trim(b.to_vec());
    assert!(!q.is_empty(), "zero binary quartic");
    let mu_inf = 4 - xp_deg(&q).unwrap() as u32;
    if mu_inf >= 3 {
        return QuarticShape {
            max_multiplicity: mu_inf,
            repeated: Some(RepeatedRoot::AtInfinity),
            squarefree: false,
        };
    }
    let g1 = xp_gcd(&q, &xp_derivative(&q));
    let g2 = xp_gcd(&g1, &xp_derivative(&g1));
    match xp_deg(&g2) {
        Some(e) if e >= 1 => {
            // A line of multiplicity m >= 3 leaves a factor of degree m - 2
            // here, necessarily a power of one rational root.
            let root = if e == 1 {
                -g2[0].clone()
            } else {
                debug_assert_eq!(e, 2);
                let r = -g2[1].clone() / Rat::from_integer(2.into());
                debug_assert_eq!(g2[0], r.pow(2));
                r
            };
            QuarticShape {
                max_multiplicity: e as u32 + 2,
                repeated: Some(RepeatedRoot::Finite(root)),
                squarefree: false,
            }
        }
        _ => {
            let finite_squarefree = xp_deg(&g1) == Some(0) || g1.is_empty();
            let squarefree = finite_squarefree && mu_inf <= 1;
            QuarticShape {
                max_multiplicity: if squarefree { 1 } else { 2 },
                repeated: None,
                squarefree,
            }
        }
    }
}

/// Polynomial in a second variable y with univariate coefficients in x,
/// listed by ascending y-degree.
pub type YPoly = Vec<XPoly>;

pub fn yp_trim(mut p: YPoly) -> YPoly {
    while p.last().map_or(false, |c| c.is_empty()) {
        p.pop();
    }
    p
}

pub fn yp_is_zero(p: &YPoly) -> bool {
    p.iter().all(|c| c.is_empty())
}

pub fn yp_derivative_y(p: &YPoly) -> YPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    yp_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| xp_scale(c, &Rat::from_integer((j as i64).into())))
            .collect(),
    )
}

/// Content: the monic gcd of all coefficients.
pub fn yp_content(p: &YPoly) -> XPoly {
    let mut g: XPoly = Vec::new();
    for c in p {
        g = xp_gcd(&g, c);
        if xp_deg(&g) == Some(0) {
            break;
        }
    }
    g
}

pub fn yp_primitive(p: &YPoly) -> YPoly {
    let content = yp_content(p);
    if content.is_empty() || xp_deg(&content) == Some(0) {
        return yp_trim(p.clone());
    }
    yp_trim(
        p.iter()
            .map(|c| {
                let (q, r) = xp_divrem(c, &content);
                debug_assert!(r.is_empty());
                q
            })
            .collect(),
    )
}

fn zx_sub(a: &ZX, b: &ZX) -> ZX {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn zx_mul(a: &ZX, b: &ZX) -> ZX {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

fn zx_pow(a: &ZX, n: usize) -> ZX {
    let mut out = vec![BigInt::one()];
    for _ in 0..n {
        out = zx_mul(&out, a);
    }
    out
}

/// Quotient of a division known to be exact.
fn zx_exact_div(num: &ZX, den: &ZX) -> ZX {
    if num.is_empty() {
        return Vec::new();
    }
    let dd = den.len() - 1;
    let dlead = &den[dd];
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        if rem[k + dd].is_zero() {
            continue;
        }
        let (q, r) = rem[k + dd].div_rem(dlead);
        debug_assert!(r.is_zero());
        for (i, c) in den.iter().enumerate() {
            rem[k + i] -= c * &q;
        }
        quot[k] = q;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Bivariate polynomial with integer coefficients, ascending y-degree.
type ZY = Vec<ZX>;

fn zy_from_rational(p: &YPoly) -> ZY {
    let p = yp_trim(p.clone());
    let mut denom_lcm = BigInt::one();
    for c in &p {
        for r in c {
            denom_lcm = denom_lcm.lcm(r.denom());
        }
    }
    p.iter()
        .map(|c| c.iter().map(|r| r.numer() * (&denom_lcm / r.denom())).collect())
        .collect()
}

fn zy_scale(p: &mut ZY, f: &ZX) {
    for c in p.iter_mut() {
        *c = zx_mul(c, f);
    }
}

/// Remainder of lead(b)^(delta+1) * a by b in the y-variable, where delta
/// is the y-degree gap. Both inputs trimmed, b of y-degree at least one.
fn zy_pseudo_rem(a: &ZY, b: &ZY, delta: usize) -> ZY {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = a.clone();
    let mut scalings = 0;
    while rem.len() > db {
        let top = rem.pop().unwrap();
        let shift = rem.len() - db;
        zy_scale(&mut rem, &lead);
        for (i, c) in b[..db].iter().enumerate() {
            rem[shift + i] = zx_sub(&rem[shift + i], &zx_mul(c, &top));
        }
        while rem.last().is_some_and(|c| c.is_empty()) {
            rem.pop();
        }
        scalings += 1;
    }
    for _ in scalings..delta + 1 {
        zy_scale(&mut rem, &lead);
    }
    rem
}

fn zy_exact_div_zx(p: ZY, den: &ZX) -> ZY {
    p.into_iter()
        .map(|c| if c.is_empty() { c } else { zx_exact_div(&c, den) })
        .collect()
}

fn zy_primitive(p: ZY) -> ZY {
    let mut content: ZX = Vec::new();
    for c in &p {
        if c.is_empty() {
            continue;
        }
        content = zx_gcd(content, c.clone());
        if content.len() == 1 {
            return p;
        }
    }
    if content.is_empty() {
        return p;
    }
    zy_exact_div_zx(p, &content)
}

/// Primitive gcd in y, up to a unit in x; both inputs nonzero in y-degree
/// at least zero.
///
/// Subresultant remainder sequence over the integers, after Collins: each
/// pseudo-remainder has a known exact divisor, so coefficient growth stays
/// tame without a content computation per step.
pub fn yp_gcd(a: &YPoly, b: &YPoly) -> YPoly {
    let mut a = zy_from_rational(a);
    let mut b = zy_from_rational(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g: ZX = vec![BigInt::one()];
    let mut h: ZX = vec![BigInt::one()];
    while !b.is_empty() {
        if b.len() == 1 {
            // A common divisor of y-degree zero can only be a unit after
            // the final primitive part.
            return vec![vec![Rat::one()]];
        }
        let delta = a.len() - b.len();
        let divisor = zx_mul(&g, &zx_pow(&h, delta));
        let r = zy_exact_div_zx(zy_pseudo_rem(&a, &b, delta), &divisor);
        a = b;
        g = a.last().unwrap().clone();
        if delta >= 1 {
            h = zx_exact_div(&zx_pow(&g, delta), &zx_pow(&h, delta - 1));
        }
        b = r;
    }
    zy_primitive(a)
        .into_iter()
        .map(|c| c.into_iter().map(Rat::from).collect())
        .collect()
}

fn yp_eval_origin(p: &YPoly) -> Rat {
    p.first()
        .and_then(|c| c.first())
        .cloned()
        .unwrap_or_else(Rat::zero)
}

/// Whether the bivariate polynomial has a repeated factor vanishing at the
/// origin. The caller must pass a polynomial whose x-content does not
/// vanish at x = 0, so that every factor through the origin involves y.
pub fn has_repeated_factor_through_origin(p: &YPoly) -> bool {
    let p = yp_trim(p.clone());
    if p.len() <= 1 {
        return false;
    }
    let g = yp_gcd(&p, &yp_derivative_y(&p));
    if g.len() <= 1 {
        return false;
    }
    yp_eval_origin(&g).is_zero()
}
