//! The Enriques involution acting on the Picard lattice.
//!
//! `theta` swaps the node and trope families through the fixed table below.
//! A class is a pullback from the Enriques quotient iff it is fixed by
//! `theta` up to linear equivalence, and a class that is *not* fixed pushes
//! forward to a rank-2 bundle that is stable for every polarization.

use crate::lattice::{DivisorClass, LatticeContext, RANK};

/// Node/trope pairs exchanged by the involution.
pub const THETA_PAIRS: [(&str, &str); 16] = [
    ("E0", "T456"),
    ("E12", "T3"),
    ("E13", "T2"),
    ("E14", "T156"),
    ("E15", "T146"),
    ("E16", "T236"),
    ("E23", "T1"),
    ("E24", "T256"),
    ("E25", "T246"),
    ("E26", "T136"),
    ("E34", "T356"),
    ("E35", "T346"),
    ("E36", "T126"),
    ("E45", "T6"),
    ("E46", "T5"),
    ("E56", "T4"),
];

impl LatticeContext {
    /// Image of `d` under the involution.
    pub fn theta(&self, d: &DivisorClass) -> DivisorClass {
        let perm = self.theta_perm();
        let mut out = [0; RANK];
        for (i, &c) in d.coeffs().iter().enumerate() {
            out[perm[i]] = c;
        }
        DivisorClass::from_raw(out)
    }

    /// `theta(d) ~ d`, i.e. `d` lies in the image of the pullback.
    pub fn is_theta_invariant(&self, d: &DivisorClass) -> bool {
        let image = self.theta(d);
        // Check the rows on the support first; they almost always witness a difference.
        for i in d.support() {
            if self.row_dot(i, d) != self.row_dot(i, &image) {
                return false;
            }
        }
        self.equiv(d, &image)
    }

    /// One-sided certificate that the pushforward of `O(d)` is stable for
    /// every polarization. `false` means "not certified", not "unstable".
    pub fn pushforward_stable_certified(&self, d: &DivisorClass) -> bool {
        !self.is_theta_invariant(d)
    }
}
