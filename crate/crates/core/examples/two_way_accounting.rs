//! The two layered identities, counted by geometry and by algebra.
//!
//! r = 1/2: 1/4 + 1/16 + 1/64 + ... = 1/3
//! r = 1/3: 4/9 + 16/81 + ...       = 4/5
//!
//! cargo run --example two_way_accounting

use geoseries::construction::LayeredParams;
use geoseries::geometry::build_layered_scene;
use geoseries::series::{layer_series, layer_term};
use geoseries::{rat, Rational};

fn main() -> geoseries::Result<()> {
    for params in [
        LayeredParams::new(3, 1, rat(1, 2))?,
        LayeredParams::new(5, 4, rat(1, 3))?,
    ] {
        println!("n = {}, a = {}, r = {}", params.n(), params.a(), params.r());
        let layers = 6;
        let scene = build_layered_scene(&params, layers)?;
        let mut geometric = Rational::zero();
        for k in 1..=layers {
            let colored: Rational = scene.layer(k).filter(|p| p.is_colored()).map(|p| p.area()).sum();
            let layer: Rational = scene.layer(k).map(|p| p.area()).sum();
            assert_eq!(colored, layer_term(&params, k));
            geometric = geometric + &colored;
            println!(
                "  layer {k}: colored {colored:<14} of {layer:<14} ratio {}",
                &colored / &layer
            );
        }
        let series = layer_series(&params);
        assert_eq!(geometric, series.partial_sum(layers - 1));
        println!("  sum of {layers} layers: {geometric} (shoelace) = {} (series)", series.partial_sum(layers - 1));
        println!("  left under the apex:  {}", params.colored_limit() - &geometric);
        println!("  limit a/n = {}\n", params.colored_limit());
    }
    Ok(())
}
