//! Streams passing divisors of a family as JSON Lines.
//!
//!     cargo run --release --example enumerate -- mixed_disjoint 4
use std::io::Write;

use kummer_bn::report::json_line;
use kummer_bn::{enumerate_examples, Family, SearchParams};

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("nodes").parse().expect("family name");
    let max_degree: i64 = args.next().map(|s| s.parse().expect("degree")).unwrap_or(3);
    let params = SearchParams { family, max_degree, max_coeff: max_degree, ..Default::default() };
    let mut out = std::io::stdout().lock();
    let mut count = 0;
    for rec in enumerate_examples(&params).unwrap() {
        if writeln!(out, "{}", json_line(&rec.unwrap())).is_err() {
            return;
        }
        count += 1;
    }
    eprintln!("{count} passing divisors in family {family} up to degree {max_degree}");
}
