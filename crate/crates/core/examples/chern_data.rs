//! Chern data, dimension bounds and Brill-Noether numbers of pushforward bundles.
use kummer_bn::{bn_number, bundle_invariants, parse_effective, theorem_gap_check, LatticeContext};

fn main() {
    let ctx = LatticeContext::global();
    println!("{:<18} {:>4} {:>5} {:>3} {:>4} {:>4} {:>6} {:>6} {:>5} {:>5}", "D", "D^2", "c1^2", "c2", "chi", "gap", "dimM>=", "dimP<=", "rho1", "rho2");
    for s in ["E0", "E12 + E13", "E0 + E12 + E13", "E0 + 2E13", "3E23 + E14 + 2E56", "E14 + E25 + T3"] {
        let d = parse_effective(s).unwrap();
        let i = bundle_invariants(ctx, &d).unwrap();
        println!(
            "{s:<18} {:>4} {:>5} {:>3} {:>4} {:>4} {:>6} {:>6} {:>5} {:>5}  gap>2: {}",
            i.d2, i.c1sq, i.c2, i.chi, i.gap, i.dim_m_lower, i.dim_p_upper, i.rho1, bn_number(2, &i), theorem_gap_check(&i)
        );
    }
}
