//! Chern data of the rank-2 bundle `V = pi_* O_X(D)` on the Enriques quotient,
//! and the dimension counts that go with it.
//!
//! For the etale double cover, `c1(V)^2 = [pi_* D]^2 = (D + theta D)^2 / 2 =
//! D^2 + D.theta(D)` and `c2(V) = (c1^2 - D^2) / 2 = D.theta(D) / 2`.
//! With `chi(O_Y) = 1` and rank 2:
//!
//! * `chi(V) = D^2/2 + 2`
//! * `dim M_H >= 4 c2 - c1^2 - 3`
//! * `dim P <= 3 c2 - c1^2/2 - 1`
//!
//! None of these depend on the polarization.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, LatticeContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BundleInvariants {
    /// `D^2` on the Kummer surface.
    pub d2: i64,
    pub c1sq: i64,
    pub c2: i64,
    /// `chi(V)`.
    pub chi: i64,
    /// `c2 - c1^2/2 = -D^2/2`.
    pub gap: i64,
    /// `max(chi, 0)`: every bundle with these invariants has at least this many sections.
    pub h0_lower: i64,
    pub dim_m_lower: i64,
    pub dim_p_upper: i64,
    /// Brill-Noether number for `k = 1`, using `dim_m_lower` as a proxy for `dim M_H`.
    pub rho1: i64,
}

pub fn bundle_invariants(ctx: &LatticeContext, d: &DivisorClass) -> Result<BundleInvariants> {
    if !d.is_effective() {
        return Err(Error::NotEffective);
    }
    if d.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let d2 = ctx.self_int(d);
    let cross = ctx.pair(d, &ctx.theta(d));
    if cross % 2 != 0 {
        return Err(Error::Parity(cross));
    }
    // The lattice is even, so d2 / 2 and c1sq / 2 are exact too.
    let c1sq = d2 + cross;
    let c2 = cross / 2;
    let chi = d2 / 2 + 2;
    let dim_m_lower = 4 * c2 - c1sq - 3;
    let mut inv = BundleInvariants {
        d2,
        c1sq,
        c2,
        chi,
        gap: -d2 / 2,
        h0_lower: chi.max(0),
        dim_m_lower,
        dim_p_upper: 3 * c2 - c1sq / 2 - 1,
        rho1: 0,
    };
    inv.rho1 = bn_number(1, &inv);
    Ok(inv)
}

/// `rho^k = dim M_H - k (k - chi)`, with the lower bound on `dim M_H` standing in
/// for the true dimension.
pub fn bn_number(k: u32, inv: &BundleInvariants) -> i64 {
    let k = k as i64;
    inv.dim_m_lower - k * (k - inv.chi)
}

/// `c2 - c1^2/2 > 2`, the inequality the properness argument contradicts.
/// Equivalent to `D^2 < -4`.
pub fn theorem_gap_check(inv: &BundleInvariants) -> bool {
    inv.gap > 2
}
