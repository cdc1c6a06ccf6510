//! Checks the three hypotheses for a divisor given on the command line, or
//! for a handful of stock examples.
//!
//!     cargo run --example certify -- "3E23 + E14 + 2E56"
use kummer_bn::report::text_report;
use kummer_bn::{bundle_invariants, parse_effective, theorem_check, LatticeContext};

fn main() {
    let ctx = LatticeContext::global();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs: Vec<String> = if args.is_empty() {
        ["E0 + E13 + E13", "3E23 + E14 + 2E56", "E0", "2E12 + T3", "E14 + E25 + T3"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for s in inputs {
        let d = match parse_effective(&s) {
            Ok(d) => d,
            Err(e) => {
                eprintln!("{s}: {e}");
                continue;
            }
        };
        let report = theorem_check(ctx, &d).unwrap();
        let inv = bundle_invariants(ctx, &d).ok();
        println!("{}", text_report(ctx, &report, inv.as_ref()));
    }
}
