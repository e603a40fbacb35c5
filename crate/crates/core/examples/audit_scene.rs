//! Builds a scene, serializes it, tampers with it and audits both copies.
//!
//! cargo run --example audit_scene

use geoseries::construction::LayeredParams;
use geoseries::geometry::{audit_scene, build_layered_scene};
use geoseries::{rat, Scene};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = LayeredParams::new(5, 4, rat(1, 3))?;
    let scene = build_layered_scene(&params, 3)?;
    let report = audit_scene(&scene);
    println!("fresh scene: {:?}, covered {} + apex {} = total {}",
        report.check, report.covered_area, report.apex_remainder, report.total_area);

    let json = scene.to_json();
    let reloaded = Scene::from_json(&json)?;
    assert_eq!(reloaded, scene);
    println!("round trip through {} bytes of JSON: identical", json.len());

    // recolor the first blank triangle
    let mut doc: serde_json::Value = serde_json::from_str(&json)?;
    let blank = doc["polygons"]
        .as_array_mut()
        .and_then(|ps| ps.iter_mut().find(|p| p["role"] == "blank"))
        .ok_or("no blank polygon")?;
    blank["role"] = "colored".into();
    let tampered = Scene::from_json(&doc.to_string())?;
    let report = audit_scene(&tampered);
    println!("tampered scene: {:?}", report.check);
    for m in &report.mismatches {
        println!("  layer {:?} {}: expected {}, got {}", m.layer, m.formula, m.expected, m.actual);
    }
    Ok(())
}
