use std::fmt;

use exact_core::{int, rat, OnePS, Rat};
use hm_index::{mu_coset_min, mu_form, PencilPoint};

use crate::candidates::{cone_quadric, critical_rows, lambda_alpha, walls};

/// Destabilization data for one critical curve: a subgroup whose balance
/// mu2 + t * mu4 vanishes at the threshold slope and is negative beyond it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DestabCertificate {
    pub tag: u8,
    pub lambda: OnePS,
    pub mu2: Rat,
    pub mu4: Rat,
    pub t_threshold: Rat,
}

/// Tags with no certificate of their own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidTag(pub u8);

impl fmt::Display for InvalidTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 4 {
            write!(
                f,
                "tag 4 shares its wall with tag 3 and carries no certificate of its own"
            )
        } else {
            write!(f, "no destabilization certificate for tag {}", self.0)
        }
    }
}

impl std::error::Error for InvalidTag {}

/// Certificate for the critical curve with the given tag.
///
/// For the rows with a pinned subgroup the certificate reuses it. The two
/// rows balanced by the whole parameter family destabilize along an interval
/// of parameters that closes where the lead monomial's weight ties with the
/// heaviest competing span; that tie is the smallest pinned parameter on the
/// same wall, so its subgroup is the sharp choice.
pub fn destab_certificate(tag: u8) -> Result<DestabCertificate, InvalidTag> {
    if tag == 4 || tag > 7 {
        return Err(InvalidTag(tag));
    }
    let rows = critical_rows();
    let row = &rows[tag as usize];
    let lambda = match &row.lambda {
        Some(l) => l.clone(),
        None => {
            let all = walls(&rat(1, 10));
            let wall = all
                .iter()
                .find(|w| w.t == row.t)
                .expect("every row sits on a wall");
            let alpha = wall
                .members
                .iter()
                .filter_map(|m| m.alpha.as_ref())
                .min()
                .expect("interior walls carry pinned members");
            lambda_alpha(alpha)
        }
    };
    let f2 = cone_quadric();
    let mu2 = mu_form(&f2, &lambda).expect("the quadric is nonzero");
    let pencil =
        PencilPoint::new(f2, row.quartic.clone()).expect("critical curves are pencil points");
    let mu4 = mu_coset_min(&pencil, &lambda).value;
    assert!(mu4 < int(0), "the quartic side must pull the balance down");
    let t_threshold = -mu2.clone() / &mu4;
    assert_eq!(t_threshold, row.t, "threshold sits on the row's wall");
    Ok(DestabCertificate {
        tag,
        lambda,
        mu2,
        mu4,
        t_threshold,
    })
}
