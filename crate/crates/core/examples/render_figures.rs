//! Writes SVG figures for both layered configurations and a staircase.
//!
//! cargo run --example render_figures -- out_dir

use std::path::PathBuf;

use geoseries::construction::{LayeredParams, StaircaseParams};
use geoseries::geometry::{build_layered_scene, build_staircase_scene};
use geoseries::render::render;
use geoseries::{rat, RenderOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;

    let scenes = [
        ("half_L5.svg", build_layered_scene(&LayeredParams::new(3, 1, rat(1, 2))?, 5)?),
        ("third_L4.svg", build_layered_scene(&LayeredParams::new(5, 4, rat(1, 3))?, 4)?),
        ("staircase_L6.svg", build_staircase_scene(&StaircaseParams::new(rat(2, 3))?, 6)?),
    ];
    let opts = RenderOptions::default().canvas_width(800)?.fill("#ffcc00")?;
    for (name, scene) in &scenes {
        let path = dir.join(name);
        std::fs::write(&path, render(scene, &opts))?;
        println!("wrote {} ({} colored of {} polygons)", path.display(), scene.colored_count(), scene.polygons().len());
    }
    Ok(())
}
