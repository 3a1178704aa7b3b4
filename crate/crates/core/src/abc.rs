//! Wronskians and the Mason-Stothers verdict engine.
//!
//! The verdict is computed two ways at once: direct degree arithmetic on
//! rad(abc), and the Wronskian divisibility pipeline (abc/rad(abc) divides
//! the common Wronskian W). A disagreement between the two routes surfaces
//! as `DivisibilityFailure` instead of a silently wrong verdict.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::radical::radical;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MsVerdictKind {
    /// All three derivatives vanish (the characteristic-p escape hatch).
    DerivativesVanish,
    /// max3(deg) + 1 <= bound holds.
    InequalityHolds,
    /// The bound fails: a disproof witness. Never produced on inputs that
    /// meet the coprime theorem's hypotheses.
    Violation,
    /// All three polynomials are constants (non-coprime variant, char 0).
    AllConstant,
}

/// Outcome of a Mason-Stothers-style check.
///
/// For the coprime theorem `radical_degree` is deg rad(abc); for the
/// non-coprime variant it is deg rad(a) + deg rad(b) + deg c. The margin is
/// `radical_degree - max3_degree - 1`, nonnegative exactly when the strict
/// inequality holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MsVerdict {
    pub kind: MsVerdictKind,
    pub max3_degree: usize,
    pub radical_degree: usize,
    pub margin: i64,
    pub wronskian_degree: Option<usize>,
}

/// W(a, b) = a*b' - a'*b.
pub fn wronskian(a: &Poly, b: &Poly) -> Poly {
    a.mul(&b.derivative()).sub(&a.derivative().mul(b))
}

/// Checks the strict bound deg W(a,b) < deg a + deg b for nonzero W.
pub fn wronskian_degree_bound_holds(a: &Poly, b: &Poly) -> Result<bool> {
    let w = wronskian(a, b);
    if w.is_zero() {
        return Err(Error::ZeroWronskian);
    }
    Ok(w.nat_degree() < a.nat_degree() + b.nat_degree())
}

/// The common value of W(a,b), W(b,c), W(c,a) for a zero-sum triple.
pub fn wronskian_common(a: &Poly, b: &Poly, c: &Poly) -> Result<Poly> {
    if !a.add(b).add(c).is_zero() {
        return Err(Error::NotZeroSum);
    }
    let wab = wronskian(a, b);
    let wbc = wronskian(b, c);
    let wca = wronskian(c, a);
    if wab != wbc || wbc != wca {
        return Err(Error::DivisibilityFailure(
            "wronskians of a zero-sum triple disagree".into(),
        ));
    }
    Ok(wab)
}

fn max3(x: usize, y: usize, z: usize) -> usize {
    x.max(y).max(z)
}

fn require(cond: bool, hypothesis: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::precondition(hypothesis))
    }
}

// Divisibility plus the single-rotation degree bound, with rad(abc) and
// abc/rad(abc) supplied by the caller.
fn subcall_with(c: &Poly, w: &Poly, dr_abc: &Poly, rad_deg: usize) -> Result<usize> {
    if w.is_zero() {
        return Err(Error::ZeroWronskian);
    }
    if !dr_abc.divides(w) {
        return Err(Error::DivisibilityFailure(
            "abc/rad(abc) does not divide W".into(),
        ));
    }
    if c.nat_degree() + 1 > rad_deg {
        return Err(Error::DivisibilityFailure(format!(
            "subcall bound failed: deg c + 1 = {} > deg rad(abc) = {}",
            c.nat_degree() + 1,
            rad_deg
        )));
    }
    Ok(rad_deg)
}

/// The single-rotation bound: verifies abc/rad(abc) divides w and returns
/// deg rad(abc), asserting deg c + 1 <= deg rad(abc) along the way.
pub fn ms_subcall_bound(a: &Poly, b: &Poly, c: &Poly, w: &Poly) -> Result<usize> {
    require(!a.is_zero() && !b.is_zero() && !c.is_zero(), "a, b, c nonzero")?;
    require(
        a.is_coprime(b) && b.is_coprime(c) && c.is_coprime(a),
        "pairwise coprime",
    )?;
    if w.is_zero() {
        return Err(Error::ZeroWronskian);
    }
    require(*w == wronskian(a, b), "w = wronskian(a, b)")?;
    let abc = a.mul(b).mul(c);
    let (rad, dr) = crate::radical::radical_split(&abc)?;
    subcall_with(c, w, &dr, rad.nat_degree())
}

/// Mason-Stothers verdict for a nonzero, zero-sum, coprime triple.
///
/// Only coprimality of a and b is required; the other two pairs follow from
/// a + b + c = 0 and are verified rather than assumed.
pub fn mason_stothers_verdict(a: &Poly, b: &Poly, c: &Poly) -> Result<MsVerdict> {
    require(!a.is_zero(), "a nonzero")?;
    require(!b.is_zero(), "b nonzero")?;
    require(!c.is_zero(), "c nonzero")?;
    require(a.add(b).add(c).is_zero(), "a + b + c = 0")?;
    require(a.is_coprime(b), "a, b coprime")?;

    let w = wronskian_common(a, b, c)?;
    let abc = a.mul(b).mul(c);
    let (rad_abc, dr_abc) = crate::radical::radical_split(&abc)?;
    let rad_deg = rad_abc.nat_degree();
    let m3 = max3(a.nat_degree(), b.nat_degree(), c.nat_degree());
    let margin = rad_deg as i64 - m3 as i64 - 1;

    if w.is_zero() {
        // W = 0 with coprime inputs forces all derivatives to vanish
        if !(a.derivative().is_zero() && b.derivative().is_zero() && c.derivative().is_zero()) {
            return Err(Error::DivisibilityFailure(
                "W = 0 but some derivative is nonzero".into(),
            ));
        }
        return Ok(MsVerdict {
            kind: MsVerdictKind::DerivativesVanish,
            max3_degree: m3,
            radical_degree: rad_deg,
            margin,
            wronskian_degree: None,
        });
    }

    // Remaining coprimality follows from a + b + c = 0; verify anyway.
    require(b.is_coprime(c), "b, c coprime")?;
    require(c.is_coprime(a), "c, a coprime")?;

    // Pipeline route: the three rotated subcalls each give deg + 1 <= rad_deg.
    // The Wronskians of the rotations all equal w by wronskian_common.
    let pipeline_ok = subcall_with(c, &w, &dr_abc, rad_deg)
        .and_then(|_| subcall_with(a, &w, &dr_abc, rad_deg))
        .and_then(|_| subcall_with(b, &w, &dr_abc, rad_deg));

    match pipeline_ok {
        Ok(_) => {
            // cross-check against the direct degree arithmetic
            if margin < 0 {
                return Err(Error::DivisibilityFailure(
                    "pipeline bound holds but direct margin is negative".into(),
                ));
            }
            Ok(MsVerdict {
                kind: MsVerdictKind::InequalityHolds,
                max3_degree: m3,
                radical_degree: rad_deg,
                margin,
                wronskian_degree: Some(w.nat_degree()),
            })
        }
        Err(Error::DivisibilityFailure(_)) if margin < 0 => {
            // both routes agree the bound fails: genuine disproof witness
            Ok(MsVerdict {
                kind: MsVerdictKind::Violation,
                max3_degree: m3,
                radical_degree: rad_deg,
                margin,
                wronskian_degree: Some(w.nat_degree()),
            })
        }
        Err(e) => Err(e),
    }
}

/// Raw bound of the non-coprime variant, any characteristic:
/// (max3, deg rad(a) + deg rad(b) + deg c).
pub fn noncoprime_bound(a: &Poly, b: &Poly, c: &Poly) -> (usize, usize) {
    let m3 = max3(a.nat_degree(), b.nat_degree(), c.nat_degree());
    let bound = radical(a).nat_degree() + radical(b).nat_degree() + c.nat_degree();
    (m3, bound)
}

/// Non-coprime Mason-Stothers variant; characteristic zero only.
pub fn ms_noncoprime_verdict_char0(a: &Poly, b: &Poly, c: &Poly) -> Result<MsVerdict> {
    if a.field().characteristic() != 0 {
        return Err(Error::WrongCharacteristic);
    }
    require(!a.is_zero(), "a nonzero")?;
    require(!b.is_zero(), "b nonzero")?;
    require(!c.is_zero(), "c nonzero")?;
    require(a.add(b).add(c).is_zero(), "a + b + c = 0")?;

    let (m3, bound) = noncoprime_bound(a, b, c);
    let margin = bound as i64 - m3 as i64 - 1;
    let kind = if a.is_constant() && b.is_constant() && c.is_constant() {
        MsVerdictKind::AllConstant
    } else if margin >= 0 {
        MsVerdictKind::InequalityHolds
    } else {
        MsVerdictKind::Violation
    };
    Ok(MsVerdict {
        kind,
        max3_degree: m3,
        radical_degree: bound,
        margin,
        wronskian_degree: None,
    })
}
