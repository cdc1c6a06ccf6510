//! Closed-form invariance criteria for `sum a_i E_i + T`, compared against
//! brute force on every trope.
use kummer_bn::search::closed_form_agreement;
use kummer_bn::{corollary_closed_form, prop_ex2_closed_form, LatticeContext};

fn main() {
    let ctx = LatticeContext::global();
    let g = |l: &str| ctx.index_of(l).unwrap();
    let t3 = g("T3");
    for nodes in [vec![("E12", 1)], vec![("E12", 2)], vec![("E12", 1), ("E14", 1)], vec![("E14", 1), ("E25", 1)]] {
        let shape: Vec<(usize, i64)> = nodes.iter().map(|&(l, a)| (g(l), a)).collect();
        println!(
            "{nodes:?} + T3: not invariant = {}, no invariant subdivisor = {}",
            prop_ex2_closed_form(ctx, &shape, t3).unwrap(),
            corollary_closed_form(ctx, &shape, t3).unwrap()
        );
    }
    let summary = closed_form_agreement(ctx, 3, 3).unwrap();
    println!("{summary:?}");
}
