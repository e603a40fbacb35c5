//! Partial sums of `a + a x + a x^2 + ...` computed two ways, next to the limit.
//!
//! cargo run --example series_table -- 1/4 1/4 10

use geoseries::series::{partial_sum_closed, partial_sum_naive};
use geoseries::{Rational, SeriesSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ratio: Rational = args.first().map_or("1/4", String::as_str).parse()?;
    let first: Rational = args.get(1).map_or("1/4", String::as_str).parse()?;
    let terms: u32 = args.get(2).map_or("10", String::as_str).parse()?;

    println!("{:>3}  {:>24}  {:>24}  {:>12}", "k", "closed form", "term by term", "decimal");
    for k in 0..terms {
        let closed = &first * partial_sum_closed(&ratio, k)?;
        let naive = &first * partial_sum_naive(&ratio, k);
        assert_eq!(closed, naive);
        println!("{k:>3}  {closed:>24}  {naive:>24}  {:>12}", closed.to_fixed(9));
    }
    let spec = SeriesSpec::new(ratio, first, true)?;
    println!("limit = {} = {}", spec.limit(), spec.limit().to_fixed(9));
    Ok(())
}
