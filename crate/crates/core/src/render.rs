//! Deterministic SVG output for scenes.
//!
//! Coordinates are mapped to the canvas in exact rational arithmetic and
//! only then printed as fixed-point decimals, so the same scene and options
//! always produce the same bytes. Element order is: outline, layer polygons
//! (by layer, then emission order), vertex labels, layer annotations.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{ConstructionKind, LabelKind, Placement, Point, Role, Scene};
use crate::rational::Rational;

/// `sqrt(3)` to 7 digits; stretches the layered figure to look equilateral.
const EQUILATERAL_STRETCH: (i64, i64) = (1351, 780);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    canvas_width_px: u32,
    color_fill: String,
    stroke_color: String,
    decimal_places: u32,
    show_labels: bool,
    show_layer_annotations: bool,
    equilateral: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            canvas_width_px: 600,
            color_fill: "#00ffff".into(),
            stroke_color: "#000000".into(),
            decimal_places: 6,
            show_labels: true,
            show_layer_annotations: true,
            equilateral: true,
        }
    }
}

fn check_hex(color: &str) -> Result<()> {
    let digits = color.strip_prefix('#').unwrap_or("");
    let ok = matches!(digits.len(), 3 | 6) && digits.chars().all(|c| c.is_ascii_hexdigit());
    if !ok {
        return Err(Error::InvalidOptions(format!(
            "color {color:?} is not #rgb or #rrggbb"
        )));
    }
    Ok(())
}

impl RenderOptions {
    pub fn canvas_width(mut self, px: u32) -> Result<Self> {
        if !(16..=100_000).contains(&px) {
            return Err(Error::InvalidOptions(format!(
                "canvas width must lie in [16, 100000] px, got {px}"
            )));
        }
        self.canvas_width_px = px;
        Ok(self)
    }

    pub fn fill(mut self, color: &str) -> Result<Self> {
        check_hex(color)?;
        self.color_fill = color.to_ascii_lowercase();
        Ok(self)
    }

    pub fn stroke(mut self, color: &str) -> Result<Self> {
        check_hex(color)?;
        self.stroke_color = color.to_ascii_lowercase();
        Ok(self)
    }

    pub fn decimal_places(mut self, places: u32) -> Result<Self> {
        if !(1..=12).contains(&places) {
            return Err(Error::InvalidOptions(format!(
                "decimal places must lie in [1, 12], got {places}"
            )));
        }
        self.decimal_places = places;
        Ok(self)
    }

    pub fn labels(mut self, show: bool) -> Self {
        self.show_labels = show;
        self
    }

    pub fn layer_annotations(mut self, show: bool) -> Self {
        self.show_layer_annotations = show;
        self
    }

    /// Cosmetic vertical stretch for layered scenes; areas in the audit are
    /// unaffected.
    pub fn equilateral(mut self, on: bool) -> Self {
        self.equilateral = on;
        self
    }

    pub fn width_px(&self) -> u32 {
        self.canvas_width_px
    }

    pub fn fill_color(&self) -> &str {
        &self.color_fill
    }

    pub fn stroke_color(&self) -> &str {
        &self.stroke_color
    }

    pub fn places(&self) -> u32 {
        self.decimal_places
    }
}

/// Fixed-point decimal text, half away from zero.
pub fn format_coordinate(q: &Rational, decimal_places: u32) -> String {
    q.to_fixed(decimal_places)
}

/// Exact map from scene coordinates to canvas pixels (y pointing down).
struct Viewport {
    stretch: Rational,
    min_x: Rational,
    max_y: Rational,
    scale: Rational,
    margin: Rational,
    height_px: u64,
}

impl Viewport {
    fn fit(scene: &Scene, opts: &RenderOptions) -> Self {
        let stretch = if opts.equilateral && scene.kind() == ConstructionKind::Layered {
            Rational::normalize(EQUILATERAL_STRETCH.0, EQUILATERAL_STRETCH.1).unwrap()
        } else {
            Rational::one()
        };
        let outline = scene.outline().vertices();
        let xs = || outline.iter().map(|p| p.x.clone());
        let ys = || outline.iter().map(|p| &p.y * &stretch);
        let min_x = xs().min().expect("outline has vertices");
        let max_x = xs().max().expect("outline has vertices");
        let min_y = ys().min().expect("outline has vertices");
        let max_y = ys().max().expect("outline has vertices");

        let width = Rational::from(opts.canvas_width_px);
        let margin = &width * Rational::unit_fraction(8);
        let scale = (&width - Rational::from(2u32) * &margin) / (&max_x - &min_x);
        let inner_height = (&max_y - &min_y) * &scale + Rational::from(2u32) * &margin;
        let height_px = ceil_u64(&inner_height);
        Self {
            stretch,
            min_x,
            max_y,
            scale,
            margin,
            height_px,
        }
    }

    fn map(&self, p: &Point) -> (Rational, Rational) {
        let x = &self.margin + (&p.x - &self.min_x) * &self.scale;
        let y = &self.margin + (&self.max_y - &p.y * &self.stretch) * &self.scale;
        (x, y)
    }
}

fn ceil_u64(q: &Rational) -> u64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let (d, r) = q.numer().div_mod_floor(q.denom());
    let c = if r == num_bigint::BigInt::from(0) { d } else { d + 1 };
    c.to_u64().expect("canvas height fits in u64")
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Renders `scene` as an SVG 1.1 document.
pub fn render(scene: &Scene, opts: &RenderOptions) -> String {
    let vp = Viewport::fit(scene, opts);
    let dp = opts.decimal_places;
    let fmt = |q: &Rational| format_coordinate(q, dp);
    let points = |vertices: &[Point]| {
        vertices
            .iter()
            .map(|p| {
                let (x, y) = vp.map(p);
                format!("{},{}", fmt(&x), fmt(&y))
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let w = opts.canvas_width_px;
    let h = vp.height_px;
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(svg, "  <desc>{}</desc>", escape(&scene.params_echo()));

    let _ = writeln!(
        svg,
        "  <polygon class=\"outline\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>",
        points(scene.outline().vertices()),
        opts.stroke_color
    );

    let mut pieces: Vec<_> = scene
        .polygons()
        .iter()
        .filter(|p| p.role() != Role::Outline)
        .collect();
    // stable: keeps emission order within a layer
    pieces.sort_by_key(|p| p.layer_index());
    for p in pieces {
        let (class, fill) = match p.role() {
            Role::Colored => ("colored", opts.color_fill.as_str()),
            _ => ("blank", "none"),
        };
        let _ = writeln!(
            svg,
            "  <polygon class=\"{class}\" data-layer=\"{}\" points=\"{}\" fill=\"{fill}\" stroke=\"{}\" stroke-width=\"1\"/>",
            p.layer_index().unwrap_or(0),
            points(p.vertices()),
            opts.stroke_color
        );
    }

    let offset = Rational::from(6u32);
    let text_for = |kind: LabelKind, show: bool, svg: &mut String| {
        if !show {
            return;
        }
        for label in scene.labels().iter().filter(|l| l.kind == kind) {
            let (mut x, mut y) = vp.map(&label.at);
            let anchor = match label.placement {
                Placement::Above => {
                    y = y - &offset;
                    "middle"
                }
                Placement::Below => {
                    y = y + &offset * Rational::from(3u32);
                    "middle"
                }
                Placement::Left => {
                    x = x - &offset;
                    "end"
                }
                Placement::Right => {
                    x = x + &offset;
                    "start"
                }
            };
            let _ = writeln!(
                svg,
                "  <text x=\"{}\" y=\"{}\" text-anchor=\"{anchor}\" font-family=\"serif\" font-size=\"14\">{}</text>",
                fmt(&x),
                fmt(&y),
                escape(&label.text)
            );
        }
    };
    text_for(LabelKind::Vertex, opts.show_labels, &mut svg);
    text_for(LabelKind::Layer, opts.show_layer_annotations, &mut svg);

    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{LayeredParams, StaircaseParams};
    use crate::geometry::{build_layered_scene, build_staircase_scene};
    use crate::rational::rat;

    #[test]
    fn coordinate_format_examples() {
        assert_eq!(format_coordinate(&rat(1, 3), 6), "0.333333");
        assert_eq!(format_coordinate(&rat(5, 2), 2), "2.50");
        assert_eq!(format_coordinate(&rat(-1, 800_000), 6), "-0.000001");
        assert_eq!(format_coordinate(&rat(-1, 10_000_000), 6), "0.000000");
    }

    #[test]
    fn option_validation() {
        let o = RenderOptions::default();
        assert!(o.clone().decimal_places(0).is_err());
        assert!(o.clone().decimal_places(13).is_err());
        assert!(o.clone().decimal_places(12).is_ok());
        assert!(o.clone().fill("cyan").is_err());
        assert!(o.clone().fill("#0ff").is_ok());
        assert!(o.clone().stroke("#12345g").is_err());
        assert!(o.clone().canvas_width(0).is_err());
    }

    #[test]
    fn render_is_deterministic_and_counts_colored() {
        let p = LayeredParams::new(3, 1, rat(1, 2)).unwrap();
        let scene = build_layered_scene(&p, 4).unwrap();
        let opts = RenderOptions::default();
        let a = render(&scene, &opts);
        let b = render(&scene, &opts);
        assert_eq!(a, b);
        assert_eq!(a.matches("class=\"colored\"").count(), 4);
        assert_eq!(a.matches("fill=\"#00ffff\"").count(), 4);
        assert_eq!(a.matches("<polygon").count(), 13);
    }

    #[test]
    fn labels_can_be_disabled() {
        let q = StaircaseParams::new(rat(3, 5)).unwrap();
        let scene = build_staircase_scene(&q, 3).unwrap();
        let with = render(&scene, &RenderOptions::default());
        let without = render(
            &scene,
            &RenderOptions::default().labels(false).layer_annotations(false),
        );
        assert_eq!(without.matches("<text").count(), 0);
        assert_eq!(with.matches("<text").count(), 3 + 3);
        let geometry = |s: &str| {
            s.lines()
                .filter(|l| l.contains("<polygon"))
                .map(str::to_owned)
                .collect::<Vec<_>>()
        };
        assert_eq!(geometry(&with), geometry(&without));
    }

    #[test]
    fn escapes_text() {
        assert_eq!(escape("a<b&c"), "a&lt;b&amp;c");
    }
}
