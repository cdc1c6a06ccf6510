//! The Enriques involution on divisor classes and the stability certificate
//! for pushforward bundles.
use kummer_bn::{parse_divisor, LatticeContext, THETA_PAIRS};

fn main() {
    let ctx = LatticeContext::global();
    for (node, trope) in THETA_PAIRS {
        println!("{node:>4} <-> {trope}");
    }
    println!();
    for s in ["E0", "E0 + 2E13", "E12 + T3", "2E12 + T3", "E12 + E14 + T3"] {
        let d = parse_divisor(s).unwrap();
        println!(
            "{s:<16} theta = {:<18} invariant = {:<5} stable pushforward certified = {}",
            ctx.theta(&d).to_string(),
            ctx.is_theta_invariant(&d),
            ctx.pushforward_stable_certified(&d),
        );
    }
}
