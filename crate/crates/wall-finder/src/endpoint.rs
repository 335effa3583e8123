use exact_core::{parse_hom_polynomial, HomPolynomial, OnePS};

/// One of the closed-orbit families at slope 1/2: a quadric-quartic shape,
/// a torus fixing it, and a balance identity pinning the endpoint.
#[derive(Clone, Debug)]
pub struct HalfWallFamily {
    /// Short description of the generic curve in the family.
    pub label: &'static str,
    pub f2: HomPolynomial,
    /// A generic member of the quartic family.
    pub sample_f4: HomPolynomial,
    /// Primitive generator of a torus fixing the family.
    pub stabilizer: OnePS,
    /// Member of the stabilizing torus whose balance is 2 - 4t on the whole
    /// family: positive below 1/2, zero there, negative beyond.
    pub balance_witness: OnePS,
}

/// The three families of closed orbits meeting at slope 1/2.
///
/// Each family degenerates in its own direction: a double line with
/// a residual sextic on the cone, two stars of four coplanar lines on a pair
/// of planes, and a double conic with four rulings through the cone vertex.
/// The second family's quadric drops to rank 2, so the slope enumeration
/// against the fixed cone never sees it; it is carried here explicitly.
pub fn wall_at_half() -> [HalfWallFamily; 3] {
    [
        HalfWallFamily {
            label: "double line and residual sextic on the cone",
            f2: parse_hom_polynomial("x0*x2 + x1^2").expect("family literal"),
            sample_f4: parse_hom_polynomial("x0*x3^3 + x1^2*x2^2").expect("family literal"),
            stabilizer: OnePS::ints([5, 1, -3, -3]),
            balance_witness: OnePS::ints([5, 1, -3, -3]),
        },
        HalfWallFamily {
            label: "two stars of four lines on a plane pair",
            f2: parse_hom_polynomial("x0*x3").expect("family literal"),
            sample_f4: parse_hom_polynomial("x1^3*x2 - x1*x2^3").expect("family literal"),
            stabilizer: OnePS::ints([1, 0, 0, -1]),
            balance_witness: OnePS::ints([1, -1, -1, 1]),
        },
        HalfWallFamily {
            label: "double conic and four rulings through the vertex",
            f2: parse_hom_polynomial("x0*x2 + x1^2").expect("family literal"),
            sample_f4: parse_hom_polynomial("x0^2*x3^2 + x2^2*x3^2").expect("family literal"),
            stabilizer: OnePS::ints([1, 1, 1, -3]),
            balance_witness: OnePS::ints([1, 1, 1, -3]),
        },
    ]
}
