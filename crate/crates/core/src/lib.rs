//! Exact Picard-lattice arithmetic on a Jacobian Kummer surface `X` with its
//! Enriques involution `theta`, and certificates that a divisor `D` on `X`
//! pushes forward to a bundle witnessing a nonempty, proper first
//! Brill-Noether locus on the Enriques quotient `Y = X / theta`.
//!
//! ```
//! use kummer_bn::{parse_effective, theorem_check, bundle_invariants, LatticeContext};
//!
//! let ctx = LatticeContext::global();
//! let d = parse_effective("E0 + E13 + E13").unwrap();
//! assert!(theorem_check(ctx, &d).unwrap().passed());
//! assert_eq!(bundle_invariants(ctx, &d).unwrap().gap, 5);
//! ```

pub mod chern;
pub mod error;
pub mod expr;
pub mod involution;
pub mod lattice;
pub mod linalg;
pub mod predicates;
pub mod report;
pub mod search;

pub use chern::{bn_number, bundle_invariants, theorem_gap_check, BundleInvariants};
pub use error::{Error, Result};
pub use expr::{format_divisor, parse_divisor, parse_divisor_with, parse_effective, ParseOptions};
pub use involution::THETA_PAIRS;
pub use lattice::{CurveKind, DivisorClass, Generator, LatticeContext, COEFF_LIMIT, FAMILY, RANK};
pub use predicates::{
    corollary_closed_form, h0_one_certificate, no_invariant_subdivisor, prop_ex2_closed_form,
    subdivisors, theorem_check, theorem_check_with_budget, verify_peeling, CheckReport,
    H0Certificate, SubdivisorVerdict, Verdict, DEFAULT_BUDGET,
};
pub use search::{
    enumerate_examples, verify_configuration, ExampleRecord, Family, SearchParams,
    VerificationReport,
};
