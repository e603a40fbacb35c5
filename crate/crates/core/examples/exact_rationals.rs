//! Canonical rationals: parsing, arithmetic, powers and fixed-point output.
//!
//! cargo run --example exact_rationals

use geoseries::rational::ArithOp;
use geoseries::{rat, Rational};

fn main() -> geoseries::Result<()> {
    let x: Rational = "-6/8".parse()?;
    println!("\"-6/8\" parses to {x}");
    if let Err(e) = "6/-8".parse::<Rational>() {
        println!("\"6/-8\" is rejected: {e}");
    }
    let y: Rational = "10/4".parse()?;
    println!("\"10/4\" parses to {y}");

    for op in [ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div] {
        println!("{x} {op:?} {y} = {}", x.arith(&y, op)?);
    }
    println!("({y})^5 = {}", y.pow(5));
    println!("1/({y}) = {}", y.recip()?);
    println!("{x} / 0 -> {}", x.checked_div(&Rational::zero()).unwrap_err());

    let third = rat(1, 3);
    for places in [2, 6, 12] {
        println!("1/3 to {places} places: {}", third.to_fixed(places));
    }
    println!("-1/2 to 0 places: {} (half away from zero)", rat(-1, 2).to_fixed(0));
    Ok(())
}
