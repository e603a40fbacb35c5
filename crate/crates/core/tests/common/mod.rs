#![allow(dead_code)]

use std::path::PathBuf;

/// Golden-file directory; `GEOSERIES_FIXTURES` overrides the default.
pub fn fixtures_dir() -> PathBuf {
    std::env::var_os("GEOSERIES_FIXTURES")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures"))
}

pub struct SvgPolygon {
    pub class: String,
    pub fill: String,
    pub points: Vec<(f64, f64)>,
}

pub struct ParsedSvg {
    pub width: f64,
    pub height: f64,
    pub polygons: Vec<SvgPolygon>,
    pub texts: usize,
}

/// Parses the renderer's output with a real XML parser.
pub fn parse_svg(text: &str) -> ParsedSvg {
    let doc = roxmltree::Document::parse(text).expect("well-formed XML");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    let view_box: Vec<f64> = root
        .attribute("viewBox")
        .expect("viewBox")
        .split_whitespace()
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(&view_box[..2], &[0.0, 0.0]);
    let polygons = root
        .descendants()
        .filter(|n| n.has_tag_name("polygon"))
        .map(|n| SvgPolygon {
            class: n.attribute("class").unwrap_or("").to_string(),
            fill: n.attribute("fill").unwrap_or("").to_string(),
            points: n
                .attribute("points")
                .unwrap()
                .split_whitespace()
                .map(|pair| {
                    let (x, y) = pair.split_once(',').unwrap();
                    (x.parse().unwrap(), y.parse().unwrap())
                })
                .collect(),
        })
        .collect();
    let texts = root.descendants().filter(|n| n.has_tag_name("text")).count();
    ParsedSvg {
        width: view_box[2],
        height: view_box[3],
        polygons,
        texts,
    }
}

/// Unsigned shoelace area in floating point (SVG y points down).
pub fn float_area(points: &[(f64, f64)]) -> f64 {
    let n = points.len();
    let twice: f64 = (0..n)
        .map(|i| {
            let (x0, y0) = points[i];
            let (x1, y1) = points[(i + 1) % n];
            x0 * y1 - x1 * y0
        })
        .sum();
    twice.abs() / 2.0
}

/// Brute-force search for layered-picture configurations, independent of
/// the library: for each candidate `r = p/q`, every `(n, a)` with
/// `1 <= a < n <= max_n` is tested against
///   - layer tiling:  `n r^2 = 1 - (1-r)^2`, i.e. `n p^2 = 2pq - p^2`
///   - square form:   `(1-r)^2 / (1-(1-r)^2) = a/n`, i.e. `(q-p)^2 n = a (2pq - p^2)`.
pub fn brute_force_configs(ratios: &[(i128, i128)], max_n: i128) -> Vec<(i128, i128, (i128, i128))> {
    let mut found = Vec::new();
    for &(p, q) in ratios {
        let layer = 2 * p * q - p * p;
        for n in 1..=max_n {
            if n * p * p != layer {
                continue;
            }
            for a in 1..n {
                if (q - p) * (q - p) * n == a * layer {
                    found.push((n, a, (p, q)));
                }
            }
        }
    }
    found
}
