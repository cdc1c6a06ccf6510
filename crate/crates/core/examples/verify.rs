//! Runs the configuration self-checks.
fn main() {
    let report = kummer_bn::verify_configuration();
    for c in &report.checks {
        println!("{} {:<24} {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
