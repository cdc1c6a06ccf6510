//! The 32-curve Picard lattice: Gram entries, pairings, rank and a
//! nontrivial linear equivalence.
use kummer_bn::{parse_divisor, LatticeContext};

fn main() {
    let ctx = LatticeContext::global();
    for (a, b) in [("E0", "T1"), ("E0", "E0"), ("E12", "T456"), ("E12", "T3")] {
        println!("({a} . {b}) = {}", ctx.pair(&ctx.class(a), &ctx.class(b)));
    }

    let nodes = parse_divisor("E0 + E12 + E13").unwrap();
    let tropes = parse_divisor("T456 + T3 + T2").unwrap();
    println!("({nodes}) . ({tropes}) = {}", ctx.pair(&nodes, &tropes));
    println!("({nodes})^2 = {}", ctx.self_int(&nodes));

    println!("rank of the Gram matrix: {}", ctx.gram_rank());

    let lhs = parse_divisor("E23 + E24 + E25 + E26 + 2T2").unwrap();
    let rhs = parse_divisor("E13 + E14 + E15 + E16 + 2T1").unwrap();
    println!("{lhs} ~ {rhs}: {}", ctx.equiv(&lhs, &rhs));
}
