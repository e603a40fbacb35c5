//! The staircase picture: 1 + r + r^2 + ... = 1/(1-r) read off triangles of
//! legs 1, s, s^2, ... with s = sqrt(r).
//!
//! cargo run --example staircase_identity -- 3/5

use geoseries::construction::StaircaseParams;
use geoseries::geometry::build_staircase_scene;
use geoseries::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s: Rational = std::env::args().nth(1).as_deref().unwrap_or("1/2").parse()?;
    let q = StaircaseParams::new(s)?;
    let layers = 8;
    let scene = build_staircase_scene(&q, layers)?;

    println!("s = {}, r = s^2 = {}, height = {}", q.s(), q.r(), q.height());
    let mut colored = Rational::zero();
    for k in 1..=layers {
        let piece: Rational = scene.layer(k).filter(|p| p.is_colored()).map(|p| p.area()).sum();
        let layer: Rational = scene.layer(k).map(|p| p.area()).sum();
        colored = colored + &piece;
        println!("layer {k}: colored {piece:<16} fraction {}", &piece / &layer);
    }
    let twice = Rational::from(2u32) * &colored;
    println!("2 * colored area over {layers} layers = {twice} = {}", twice.to_fixed(9));
    let one = Rational::one();
    let limit = (&one - q.r()).recip()?;
    println!("limit 1/(1-r) = {limit} = {}", limit.to_fixed(9));
    println!("colored fraction 1/(1+s) = {}", q.colored_fraction());
    Ok(())
}
