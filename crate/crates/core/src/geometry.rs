//! Exact coordinates for both figures and an area audit that ties the
//! drawn polygons back to the analytic formulas.
//!
//! The layered figure uses the master triangle `C = (-1, 0)`, `B = (1, 0)`,
//! `A = (0, 1)`, which has area exactly 1 with rational vertices. Layers are
//! counted from the base upward. The staircase uses `A = (0, h)`,
//! `B = (h, 0)`, `C = (h - 1, 0)` with `h = 1/(1-s)`.
//!
//! Scenes serialize to a JSON document with every coordinate written as a
//! `"p/q"` string; see [`Scene::to_json`].

use std::fmt;

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::construction::{self, LayeredParams, StaircaseParams};
use crate::error::{Error, Result};
use crate::feasibility::DerivedConfig;
use crate::rational::Rational;

pub const SCENE_SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(Rational, Rational)", into = "(Rational, Rational)")]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    fn offset(&self, dx: &Rational, dy: &Rational) -> Self {
        Self::new(&self.x + dx, &self.y + dy)
    }
}

impl From<(Rational, Rational)> for Point {
    fn from((x, y): (Rational, Rational)) -> Self {
        Self { x, y }
    }
}

impl From<Point> for (Rational, Rational) {
    fn from(p: Point) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Signed shoelace area, positive for counterclockwise order.
pub fn signed_area(vertices: &[Point]) -> Rational {
    let n = vertices.len();
    let twice: Rational = (0..n)
        .map(|i| {
            let p = &vertices[i];
            let q = &vertices[(i + 1) % n];
            &p.x * &q.y - &q.x * &p.y
        })
        .sum();
    twice * Rational::unit_fraction(2)
}

/// Unsigned shoelace area; zero area is an error.
pub fn shoelace_area(vertices: &[Point]) -> Result<Rational> {
    let area = signed_area(vertices);
    if area.is_zero() {
        return Err(Error::DegeneratePolygon);
    }
    Ok(area.abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Colored,
    Blank,
    Outline,
}

/// A simple counterclockwise polygon with exact vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPolygon")]
pub struct Polygon {
    vertices: Vec<Point>,
    role: Role,
    #[serde(skip_serializing_if = "Option::is_none")]
    layer_index: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Deserialize)]
struct RawPolygon {
    vertices: Vec<Point>,
    role: Role,
    #[serde(default)]
    layer_index: Option<u32>,
    #[serde(default)]
    label: Option<String>,
}

impl TryFrom<RawPolygon> for Polygon {
    type Error = Error;

    fn try_from(raw: RawPolygon) -> Result<Self> {
        Self::new(raw.vertices, raw.role, raw.layer_index, raw.label)
    }
}

impl Polygon {
    pub fn new(
        vertices: Vec<Point>,
        role: Role,
        layer_index: Option<u32>,
        label: Option<String>,
    ) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidScene(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        for (i, p) in vertices.iter().enumerate() {
            if vertices[i + 1..].contains(p) {
                return Err(Error::InvalidScene(format!("repeated vertex {p}")));
            }
        }
        let area = signed_area(&vertices);
        if area.is_zero() {
            return Err(Error::DegeneratePolygon);
        }
        if area.is_negative() {
            return Err(Error::ClockwisePolygon);
        }
        if role != Role::Outline && layer_index.is_none_or(|k| k == 0) {
            return Err(Error::InvalidScene(
                "colored and blank polygons need a layer index >= 1".into(),
            ));
        }
        Ok(Self {
            vertices,
            role,
            layer_index,
            label,
        })
    }

    fn piece(vertices: Vec<Point>, role: Role, layer: u32) -> Self {
        Self::new(vertices, role, Some(layer), None).expect("builder emits valid polygons")
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn layer_index(&self) -> Option<u32> {
        self.layer_index
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn area(&self) -> Rational {
        signed_area(&self.vertices)
    }

    pub fn is_colored(&self) -> bool {
        self.role == Role::Colored
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Vertex,
    Layer,
}

/// Where text sits relative to its anchor point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Placement {
    Above,
    Below,
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub at: Point,
    pub text: String,
    pub kind: LabelKind,
    pub placement: Placement,
}

impl Label {
    fn vertex(at: Point, text: &str, placement: Placement) -> Self {
        Self {
            at,
            text: text.to_string(),
            kind: LabelKind::Vertex,
            placement,
        }
    }

    fn layer(at: Point, k: u32) -> Self {
        Self {
            at,
            text: format!("layer {k}"),
            kind: LabelKind::Layer,
            placement: Placement::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionKind {
    Layered,
    Staircase,
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionKind::Layered => "layered",
            ConstructionKind::Staircase => "staircase",
        })
    }
}

/// Parameters that generated a scene.
///
/// Layered scenes always have `r = 1/m` and `n = 2m - 1`; `a` is the number
/// of colored triangles per layer, which may equal `n` for a clamped
/// (infeasible) drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SceneParams {
    Layered { m: u64, n: u64, a: u64, r: Rational },
    Staircase { s: Rational, r: Rational },
}

impl SceneParams {
    pub fn kind(&self) -> ConstructionKind {
        match self {
            SceneParams::Layered { .. } => ConstructionKind::Layered,
            SceneParams::Staircase { .. } => ConstructionKind::Staircase,
        }
    }

    fn layered(m: u64, a: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidScene(format!("layered scene needs m >= 2, got {m}")));
        }
        let n = 2 * m - 1;
        if a < 1 || a > n {
            return Err(Error::InvalidScene(format!(
                "colored count a = {a} must lie in [1, n = {n}]"
            )));
        }
        Ok(SceneParams::Layered {
            m,
            n,
            a,
            r: Rational::unit_fraction(m),
        })
    }

    fn staircase(q: &StaircaseParams) -> Self {
        SceneParams::Staircase {
            s: q.s().clone(),
            r: q.r(),
        }
    }

    pub fn echo(&self) -> String {
        match self {
            SceneParams::Layered { m, n, a, r } => format!("layered m={m} n={n} a={a} r={r}"),
            SceneParams::Staircase { s, r } => format!("staircase s={s} r={r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene {
    params: SceneParams,
    layers_rendered: u32,
    polygons: Vec<Polygon>,
    labels: Vec<Label>,
}

#[derive(Serialize)]
struct SceneDocOut<'a> {
    schema: u32,
    construction_kind: ConstructionKind,
    params: &'a SceneParams,
    params_echo: String,
    layers: u32,
    polygons: &'a [Polygon],
    labels: &'a [Label],
}

#[derive(Deserialize)]
struct SceneDoc {
    schema: u32,
    construction_kind: ConstructionKind,
    params: serde_json::Value,
    layers: u32,
    polygons: Vec<Polygon>,
    labels: Vec<Label>,
}

#[derive(Deserialize)]
struct LayeredDoc {
    m: u64,
    n: u64,
    a: u64,
    r: Rational,
}

#[derive(Deserialize)]
struct StaircaseDoc {
    s: Rational,
    r: Rational,
}

impl Scene {
    pub fn new(
        params: SceneParams,
        layers_rendered: u32,
        polygons: Vec<Polygon>,
        labels: Vec<Label>,
    ) -> Result<Self> {
        if layers_rendered == 0 {
            return Err(Error::InvalidScene("a scene renders at least one layer".into()));
        }
        for p in &polygons {
            if let Some(k) = p.layer_index {
                if k > layers_rendered {
                    return Err(Error::InvalidScene(format!(
                        "polygon in layer {k} exceeds layers_rendered = {layers_rendered}"
                    )));
                }
            }
        }
        if polygons.iter().filter(|p| p.role == Role::Outline).count() != 1 {
            return Err(Error::InvalidScene("a scene has exactly one outline".into()));
        }
        Ok(Self {
            params,
            layers_rendered,
            polygons,
            labels,
        })
    }

    pub fn kind(&self) -> ConstructionKind {
        self.params.kind()
    }

    pub fn params(&self) -> &SceneParams {
        &self.params
    }

    pub fn params_echo(&self) -> String {
        self.params.echo()
    }

    pub fn layers_rendered(&self) -> u32 {
        self.layers_rendered
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn outline(&self) -> &Polygon {
        self.polygons
            .iter()
            .find(|p| p.role == Role::Outline)
            .expect("checked at construction")
    }

    pub fn colored_count(&self) -> usize {
        self.polygons.iter().filter(|p| p.is_colored()).count()
    }

    /// Polygons of layer `k` in emission order.
    pub fn layer(&self, k: u32) -> impl Iterator<Item = &Polygon> {
        self.polygons
            .iter()
            .filter(move |p| p.layer_index == Some(k))
    }

    pub fn to_json(&self) -> String {
        let doc = SceneDocOut {
            schema: SCENE_SCHEMA,
            construction_kind: self.kind(),
            params: &self.params,
            params_echo: self.params_echo(),
            layers: self.layers_rendered,
            polygons: &self.polygons,
            labels: &self.labels,
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("scene serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SceneDoc = serde_json::from_str(text)?;
        if doc.schema != SCENE_SCHEMA {
            return Err(Error::InvalidScene(format!(
                "unsupported scene schema {}",
                doc.schema
            )));
        }
        let params = match doc.construction_kind {
            ConstructionKind::Layered => {
                let p: LayeredDoc = serde_json::from_value(doc.params)?;
                let params = SceneParams::layered(p.m, p.a)?;
                if p.n != 2 * p.m - 1 || p.r != Rational::unit_fraction(p.m) {
                    return Err(Error::InvalidScene(format!(
                        "inconsistent layered params m={} n={} r={}",
                        p.m, p.n, p.r
                    )));
                }
                params
            }
            ConstructionKind::Staircase => {
                let p: StaircaseDoc = serde_json::from_value(doc.params)?;
                let q = StaircaseParams::new(p.s)?;
                if p.r != q.r() {
                    return Err(Error::InvalidScene(format!(
                        "inconsistent staircase params s={} r={}",
                        q.s(),
                        p.r
                    )));
                }
                SceneParams::staircase(&q)
            }
        };
        Self::new(params, doc.layers, doc.polygons, doc.labels)
    }
}

/// Tessellated layered triangle for a feasible `(n, a, r)` with `r = 1/m`.
pub fn build_layered_scene(p: &LayeredParams, layers: u32) -> Result<Scene> {
    let r = p.r();
    if !r.numer().is_one() {
        return Err(Error::NonUnitRatio(r.clone()));
    }
    let m = r
        .denom()
        .to_u64()
        .filter(|&m| m <= crate::feasibility::MAX_M)
        .ok_or_else(|| Error::InvalidParams(format!("r = {r} is too small")))?;
    if p.n() != 2 * m - 1 {
        return Err(Error::InvalidParams(format!(
            "r = 1/{m} tessellates each layer into n = {} triangles, not {}",
            2 * m - 1,
            p.n()
        )));
    }
    layered_scene(m, p.a(), layers)
}

/// Draws a derived configuration even when infeasible, coloring
/// `min(a, n)` triangles per layer.
pub fn build_layered_scene_clamped(cfg: &DerivedConfig, layers: u32) -> Result<Scene> {
    layered_scene(cfg.m, cfg.a.min(cfg.n), layers)
}

fn layered_scene(m: u64, colored: u64, layers: u32) -> Result<Scene> {
    if layers == 0 {
        return Err(Error::InvalidParams("at least one layer is required".into()));
    }
    let params = SceneParams::layered(m, colored)?;
    let r = Rational::unit_fraction(m);
    let keep = Rational::one() - &r;
    let half = Rational::unit_fraction(2);
    let one = Rational::one();

    let apex = Point::new(Rational::zero(), one.clone());
    let right = Point::new(one.clone(), Rational::zero());
    let left = Point::new(-one.clone(), Rational::zero());

    let mut polygons = vec![Polygon::new(
        vec![left.clone(), right.clone(), apex.clone()],
        Role::Outline,
        None,
        None,
    )?];
    let mut labels = vec![
        Label::vertex(apex, "A", Placement::Above),
        Label::vertex(right, "B", Placement::Below),
        Label::vertex(left, "C", Placement::Below),
        Label::vertex(Point::new(keep.clone(), r.clone()), "D", Placement::Right),
        Label::vertex(Point::new(-keep.clone(), r.clone()), "E", Placement::Left),
    ];

    // Scale of the apex triangle below the current layer.
    let mut scale = one.clone();
    for k in 1..=layers {
        let x0 = -scale.clone();
        let y0 = &one - &scale;
        let width = Rational::from(2u32) * &r * &scale;
        let height = &r * &scale;
        let bottom = |j: u64| Point::new(&x0 + Rational::from(j) * &width, y0.clone());
        let top = |j: u64| {
            Point::new(
                &x0 + (Rational::from(j) + &half) * &width,
                &y0 + &height,
            )
        };

        // Coloring order: downward triangles left to right, then upward.
        let downward_colored = colored.min(m - 1);
        let upward_colored = colored - downward_colored;
        for j in 0..m {
            let role = if j < upward_colored { Role::Colored } else { Role::Blank };
            polygons.push(Polygon::piece(vec![bottom(j), bottom(j + 1), top(j)], role, k));
            if j + 1 < m {
                let role = if j < downward_colored { Role::Colored } else { Role::Blank };
                polygons.push(Polygon::piece(vec![bottom(j + 1), top(j + 1), top(j)], role, k));
            }
        }

        let next = &scale * &keep;
        let mid_x = (&scale + &next) * &half;
        labels.push(Label::layer(Point::new(mid_x.clone(), &one - &mid_x), k));
        scale = next;
    }

    Scene::new(params, layers, polygons, labels)
}

/// The repositioned staircase: colored right triangles with legs
/// `1, s, s^2, ...` descending from `B` along the hypotenuse toward `A`.
pub fn build_staircase_scene(q: &StaircaseParams, layers: u32) -> Result<Scene> {
    if layers == 0 {
        return Err(Error::InvalidParams("at least one layer is required".into()));
    }
    let h = q.height();
    let zero = Rational::zero();
    let apex = Point::new(zero.clone(), h.clone());
    let b = Point::new(h.clone(), zero.clone());
    let c = Point::new(&h - Rational::one(), zero.clone());

    let mut polygons = vec![Polygon::new(
        vec![c.clone(), b.clone(), apex.clone()],
        Role::Outline,
        None,
        None,
    )?];
    let mut labels = vec![
        Label::vertex(apex, "A", Placement::Left),
        Label::vertex(b.clone(), "B", Placement::Below),
        Label::vertex(c, "C", Placement::Below),
    ];

    // w: last point on AB; each step goes left by the leg, then up.
    let mut w = b;
    for k in 1..=layers {
        let leg = q.leg(k);
        let corner = w.offset(&-leg.clone(), &zero);
        let w_next = corner.offset(&zero, &leg);
        let corner_next = w_next.offset(&-(&leg * q.s()), &zero);
        polygons.push(Polygon::piece(
            vec![corner.clone(), w.clone(), w_next.clone()],
            Role::Colored,
            k,
        ));
        polygons.push(Polygon::piece(
            vec![corner, w_next.clone(), corner_next],
            Role::Blank,
            k,
        ));
        let half = Rational::unit_fraction(2);
        let mid = Point::new((&w.x + &w_next.x) * &half, (&w.y + &w_next.y) * &half);
        labels.push(Label::layer(mid, k));
        w = w_next;
    }

    Scene::new(SceneParams::staircase(q), layers, polygons, labels)
}

/// Per-layer exact tallies of a scene.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerTally {
    pub layer: u32,
    pub polygons: usize,
    pub colored: usize,
    pub colored_area: Rational,
    pub layer_area: Rational,
    pub colored_fraction: Rational,
    pub expected_colored_area: Rational,
    pub expected_layer_area: Rational,
    pub expected_fraction: Rational,
}

/// One failed exact equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layer: Option<u32>,
    pub formula: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub construction_kind: ConstructionKind,
    pub params: SceneParams,
    pub layers: u32,
    pub per_layer: Vec<LayerTally>,
    /// Shoelace total of all layer polygons.
    pub covered_area: Rational,
    /// Analytic area of the untessellated apex triangle.
    pub apex_remainder: Rational,
    /// Shoelace area of the outline.
    pub total_area: Rational,
    pub expected_total_area: Rational,
    pub check: Check,
    pub mismatches: Vec<Mismatch>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.check == Check::Pass
    }
}

struct Expectations {
    count: usize,
    colored: usize,
    piece: Option<Rational>,
    colored_area: Rational,
    layer_area: Rational,
    fraction: Rational,
}

/// Recomputes every area with the shoelace formula and compares it with the
/// analytic formulas for the scene's parameters.
pub fn audit_scene(scene: &Scene) -> AuditReport {
    let layers = scene.layers_rendered();
    let mut mismatches = Vec::new();
    let mut check = |layer: Option<u32>, formula: &str, expected: &dyn fmt::Display, actual: &dyn fmt::Display, ok: bool| {
        if !ok {
            mismatches.push(Mismatch {
                layer,
                formula: formula.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    };

    let (expected_total, apex_remainder) = match scene.params() {
        SceneParams::Layered { r, .. } => (
            Rational::one(),
            construction::shrink(r).pow(layers),
        ),
        SceneParams::Staircase { s, .. } => {
            let q = StaircaseParams::new(s.clone()).expect("validated scene");
            (q.total_area(), q.apex_remainder(layers))
        }
    };

    let mut per_layer = Vec::with_capacity(layers as usize);
    let mut covered = Rational::zero();
    for k in 1..=layers {
        let exp = match scene.params() {
            SceneParams::Layered { n, a, r, .. } => {
                let piece = construction::triangle_area(*n, r, k);
                Expectations {
                    count: *n as usize,
                    colored: *a as usize,
                    colored_area: Rational::from(*a) * &piece,
                    layer_area: construction::layer_area(r, k),
                    fraction: Rational::normalize(*a, *n).expect("n > 0"),
                    piece: Some(piece),
                }
            }
            SceneParams::Staircase { s, .. } => {
                let q = StaircaseParams::new(s.clone()).expect("validated scene");
                Expectations {
                    count: 2,
                    colored: 1,
                    piece: None,
                    colored_area: q.piece_area(k),
                    layer_area: q.layer_area(k),
                    fraction: q.colored_fraction(),
                }
            }
        };

        let mut count = 0;
        let mut colored = 0;
        let mut colored_area = Rational::zero();
        let mut layer_area = Rational::zero();
        for poly in scene.layer(k) {
            let area = poly.area();
            if let Some(piece) = &exp.piece {
                check(Some(k), "triangle_area", piece, &area, area == *piece);
            }
            if poly.is_colored() {
                colored += 1;
                colored_area = colored_area + &area;
            }
            count += 1;
            layer_area = layer_area + area;
        }
        let fraction = colored_area
            .checked_div(&layer_area)
            .unwrap_or_else(|_| Rational::zero());

        check(Some(k), "polygon_count", &exp.count, &count, count == exp.count);
        check(Some(k), "colored_count", &exp.colored, &colored, colored == exp.colored);
        check(Some(k), "colored_area", &exp.colored_area, &colored_area, colored_area == exp.colored_area);
        check(Some(k), "layer_area", &exp.layer_area, &layer_area, layer_area == exp.layer_area);
        check(Some(k), "colored_fraction", &exp.fraction, &fraction, fraction == exp.fraction);

        covered = covered + &layer_area;
        per_layer.push(LayerTally {
            layer: k,
            polygons: count,
            colored,
            colored_area,
            layer_area,
            colored_fraction: fraction,
            expected_colored_area: exp.colored_area,
            expected_layer_area: exp.layer_area,
            expected_fraction: exp.fraction,
        });
    }

    let total = scene.outline().area();
    check(None, "outline_area", &expected_total, &total, total == expected_total);
    let tiled = &covered + &apex_remainder;
    check(None, "layers_plus_apex_remainder", &total, &tiled, tiled == total);

    let check = if mismatches.is_empty() { Check::Pass } else { Check::Fail };
    AuditReport {
        construction_kind: scene.kind(),
        params: scene.params().clone(),
        layers,
        per_layer,
        covered_area: covered,
        apex_remainder,
        total_area: total,
        expected_total_area: expected_total,
        check,
        mismatches,
    }
}
