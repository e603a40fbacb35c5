//! Which ratios r = 1/m admit a layered picture? Only m = 2 and m = 3.
//!
//! cargo run --release --example negative_result -- 1000000

use std::time::Instant;

use geoseries::feasibility::{enumerate_feasible, forced_counts};
use geoseries::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_m: u64 = std::env::args().nth(1).map_or(Ok(1_000_000), |s| s.parse())?;
    let start = Instant::now();
    let reports = enumerate_feasible(max_m)?;
    let elapsed = start.elapsed();

    for r in reports.iter().take(8) {
        let failed = r.failures().join(",");
        println!(
            "m = {:<3} n = {:<4} a = {:<5} feasible = {}{}",
            r.candidate_m,
            r.derived_n.map_or("-".into(), |n| n.to_string()),
            r.derived_a.map_or("-".into(), |a| a.to_string()),
            if r.feasible { "yes" } else { "no " },
            if failed.is_empty() { String::new() } else { format!("  fails: {failed}") }
        );
    }
    let feasible: Vec<u64> = reports.iter().filter(|r| r.feasible).map(|r| r.candidate_m).collect();
    println!("\nchecked m = 2..={max_m} in {elapsed:.2?}; feasible m: {feasible:?}");

    // 2/r integral also allows r = 2/j with odd j; the counts are never whole.
    for j in [3, 5, 7, 9] {
        let (n, a) = forced_counts(&rat(2, j));
        println!("r = 2/{j}: n = {n:?}, a = {a:?}");
    }
    Ok(())
}
