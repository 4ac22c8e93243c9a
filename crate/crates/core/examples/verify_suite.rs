//! Seeded randomized verification of the structural identities; prints a
//! summary per suite and a reproducer for any failing case.
//!
//! cargo run --example verify_suite -- [seed] [cases]

use stablerank::verify::{RandomInstanceConfig, Suite, Summary};

fn main() -> stablerank::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(Ok(42), |s| s.parse()).expect("seed is an integer");
    let cases = args.next().map_or(Ok(50), |s| s.parse()).expect("cases is an integer");
    let cfg = RandomInstanceConfig::with_seed(seed, cases);

    for (suite, reports) in Suite::All.run(&cfg)? {
        let s = Summary::of(&reports);
        println!(
            "{}: cases {}/{}, anchors {}/{}",
            suite.name(),
            s.cases_passed,
            s.cases_total,
            s.anchors_passed,
            s.anchors_total
        );
        for r in reports.iter().filter(|r| !r.passed) {
            println!("  {r}");
        }
    }
    Ok(())
}
