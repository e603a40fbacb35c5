//! Command-line front end.
//!
//! [`run`] parses an argument vector and returns the exit status together
//! with everything that would be written to stdout and stderr, so the binary
//! stays a thin wrapper and tests can drive the CLI in-process.
//!
//! Exit statuses: 0 on success, 1 when an audit finds a mismatch (or a file
//! cannot be written), 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::construction::StaircaseParams;
use crate::error::Error;
use crate::feasibility::{self, FeasibilityReport};
use crate::geometry::{self, AuditReport, Check, ConstructionKind, Scene};
use crate::rational::Rational;
use crate::render::{self, RenderOptions};
use crate::series::{partial_sum_closed, partial_sum_naive, SeriesSpec};

/// Version of every JSON document the CLI prints.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "geoseries",
    version,
    about = "Build, verify and draw exact area proofs of geometric series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check which ratios r = 1/m admit a layered-triangle picture
    Feasible {
        #[arg(long, default_value_t = 10)]
        max_m: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Build a scene and audit every area exactly
    Verify {
        #[command(flatten)]
        build: BuildArgs,
        /// Audit a scene JSON written by `render --emit-scene` instead
        #[arg(long, value_name = "PATH", conflicts_with_all = ["construction", "m", "s", "layers"])]
        from_scene: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Draw a scene as SVG
    Render {
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        /// Also write the scene JSON next to the SVG (same stem, .json)
        #[arg(long)]
        emit_scene: bool,
        /// Draw infeasible layered parameters, coloring min(a, n) triangles
        #[arg(long)]
        allow_infeasible: bool,
        #[arg(long, default_value_t = 600)]
        width: u32,
        #[arg(long, default_value = "#00ffff")]
        fill: String,
        #[arg(long, default_value = "#000000")]
        stroke: String,
        #[arg(long, default_value_t = 6)]
        decimals: u32,
        #[arg(long)]
        no_labels: bool,
        #[arg(long)]
        no_layer_annotations: bool,
        /// Keep the raw isosceles coordinates for layered scenes
        #[arg(long)]
        no_equilateral: bool,
    },
    /// Tabulate partial sums of first_term * (1 + x + x^2 + ...)
    Table {
        #[arg(long, value_name = "P/Q")]
        ratio: Rational,
        #[arg(long, value_name = "P/Q", default_value = "1")]
        first_term: Rational,
        #[arg(long, default_value_t = 10)]
        terms: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    construction: Option<Construction>,
    /// Layered construction: r = 1/m
    #[arg(long, conflicts_with = "s")]
    m: Option<u64>,
    /// Staircase construction: s = sqrt(r), as P/Q
    #[arg(long, value_name = "P/Q")]
    s: Option<Rational>,
    #[arg(long, default_value_t = 4)]
    layers: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    Layered,
    Staircase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn failure(msg: impl std::fmt::Display) -> Self {
        Self {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match cli.command {
        Command::Feasible { max_m, format } => feasible(max_m, format),
        Command::Verify {
            build,
            from_scene,
            format,
        } => verify(&build, from_scene.as_deref(), format),
        Command::Render {
            build,
            out,
            emit_scene,
            allow_infeasible,
            width,
            fill,
            stroke,
            decimals,
            no_labels,
            no_layer_annotations,
            no_equilateral,
        } => {
            let opts = RenderOptions::default()
                .canvas_width(width)
                .and_then(|o| o.fill(&fill))
                .and_then(|o| o.stroke(&stroke))
                .and_then(|o| o.decimal_places(decimals))
                .map(|o| {
                    o.labels(!no_labels)
                        .layer_annotations(!no_layer_annotations)
                        .equilateral(!no_equilateral)
                });
            match opts {
                Ok(opts) => render_cmd(&build, &out, emit_scene, allow_infeasible, &opts),
                Err(e) => Outcome::usage(e),
            }
        }
        Command::Table {
            ratio,
            first_term,
            terms,
            format,
        } => table(&ratio, &first_term, terms, format),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Plain fixed-width table with a dashed rule under the header.
fn text_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let padded: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    out.push_str(&line(&mut headers.iter().copied()));
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&rule.join("  "));
    out.push('\n');
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
        out.push('\n');
    }
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn feasible(max_m: u64, format: Format) -> Outcome {
    let reports = match feasibility::enumerate_feasible(max_m) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let feasible_m: Vec<u64> = reports
        .iter()
        .filter(|r| r.feasible)
        .map(|r| r.candidate_m)
        .collect();
    match format {
        Format::Json => Outcome::ok(to_json(&json!({
            "schema": REPORT_SCHEMA,
            "command": "feasible",
            "max_m": max_m,
            "feasible_m": feasible_m,
            "reports": reports,
        }))),
        Format::Table => {
            let rows: Vec<Vec<String>> = reports.iter().map(feasibility_row).collect();
            let mut out = text_table(
                &[
                    "m", "r", "2/r in N", "n", "a", "square", "bound", "a<n", "feasible", "sum",
                    "failed",
                ],
                &rows,
            );
            let list: Vec<String> = feasible_m.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "\nfeasible m: {}", list.join(", "));
            Outcome::ok(out)
        }
    }
}

fn feasibility_row(r: &FeasibilityReport) -> Vec<String> {
    let failures = r.failures();
    vec![
        r.candidate_m.to_string(),
        r.r.to_string(),
        yes_no(r.passes_integrality),
        opt(&r.derived_n),
        opt(&r.derived_a),
        yes_no(r.passes_square_constraint),
        yes_no(r.passes_bound),
        yes_no(r.passes_count_range),
        yes_no(r.feasible),
        opt(&r.identity_sum),
        if failures.is_empty() {
            "-".to_string()
        } else {
            failures.join(",")
        },
    ]
}

fn build_scene(build: &BuildArgs, allow_infeasible: bool) -> Result<(Scene, Option<String>), Outcome> {
    let construction = build
        .construction
        .ok_or_else(|| Outcome::usage("--construction is required (layered or staircase)"))?;
    let outcome = |e: Error| Outcome::usage(e);
    match construction {
        Construction::Layered => {
            if build.s.is_some() {
                return Err(Outcome::usage("--s applies to the staircase construction; use --m"));
            }
            let m = build
                .m
                .ok_or_else(|| Outcome::usage("layered construction needs --m"))?;
            let cfg = feasibility::derive_config(m).map_err(outcome)?;
            match cfg.to_params() {
                Ok(p) => Ok((geometry::build_layered_scene(&p, build.layers).map_err(outcome)?, None)),
                Err(e) if allow_infeasible => {
                    let warning = format!(
                        "warning: {e}\nwarning: drawing anyway with a clamped to {} of {} triangles per layer\n",
                        cfg.a.min(cfg.n),
                        cfg.n
                    );
                    let scene =
                        geometry::build_layered_scene_clamped(&cfg, build.layers).map_err(outcome)?;
                    Ok((scene, Some(warning)))
                }
                Err(e) => Err(Outcome::usage(e)),
            }
        }
        Construction::Staircase => {
            if build.m.is_some() {
                return Err(Outcome::usage("--m applies to the layered construction; use --s"));
            }
            let s = build
                .s
                .clone()
                .ok_or_else(|| Outcome::usage("staircase construction needs --s P/Q"))?;
            let q = StaircaseParams::new(s).map_err(outcome)?;
            Ok((geometry::build_staircase_scene(&q, build.layers).map_err(outcome)?, None))
        }
    }
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    schema: u32,
    command: &'static str,
    fraction_formula: &'static str,
    #[serde(flatten)]
    report: &'a AuditReport,
}

fn fraction_formula(kind: ConstructionKind) -> &'static str {
    match kind {
        ConstructionKind::Layered => "a/n",
        ConstructionKind::Staircase => "1/(1+s)",
    }
}

fn verify(build: &BuildArgs, from_scene: Option<&Path>, format: Format) -> Outcome {
    let scene = match from_scene {
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return Outcome::usage(format!("cannot read {}: {e}", path.display())),
            };
            match Scene::from_json(&text) {
                Ok(s) => s,
                Err(e) => return Outcome::usage(format!("{}: {e}", path.display())),
            }
        }
        None => match build_scene(build, false) {
            Ok((s, _)) => s,
            Err(o) => return o,
        },
    };
    let report = geometry::audit_scene(&scene);
    let doc = VerifyDoc {
        schema: REPORT_SCHEMA,
        command: "verify",
        fraction_formula: fraction_formula(report.construction_kind),
        report: &report,
    };
    let stdout = match format {
        Format::Json => to_json(&doc),
        Format::Table => audit_table(&report),
    };
    if report.passed() {
        Outcome::ok(stdout)
    } else {
        Outcome {
            code: 1,
            stdout,
            stderr: mismatch_diagnostic(&report),
        }
    }
}

fn mismatch_diagnostic(report: &AuditReport) -> String {
    to_json(&json!({
        "schema": REPORT_SCHEMA,
        "error": "audit_mismatch",
        "construction_kind": report.construction_kind,
        "params": report.params,
        "mismatches": report.mismatches,
    }))
}

fn audit_table(report: &AuditReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "construction: {}", report.params.echo());
    let _ = writeln!(out, "layers: {}", report.layers);
    let _ = writeln!(out, "expected colored fraction: {}\n", fraction_formula(report.construction_kind));
    let rows: Vec<Vec<String>> = report
        .per_layer
        .iter()
        .map(|t| {
            vec![
                t.layer.to_string(),
                t.polygons.to_string(),
                t.colored.to_string(),
                t.colored_area.to_string(),
                t.layer_area.to_string(),
                t.colored_fraction.to_string(),
                t.expected_fraction.to_string(),
            ]
        })
        .collect();
    out.push_str(&text_table(
        &["layer", "polygons", "colored", "colored area", "layer area", "fraction", "expected"],
        &rows,
    ));
    let _ = writeln!(out);
    let _ = writeln!(out, "covered area: {}", report.covered_area);
    let _ = writeln!(out, "apex remainder: {}", report.apex_remainder);
    let _ = writeln!(out, "total area: {} (expected {})", report.total_area, report.expected_total_area);
    for m in &report.mismatches {
        let layer = m.layer.map_or_else(|| "-".into(), |k| k.to_string());
        let _ = writeln!(
            out,
            "mismatch: layer {layer} {}: expected {}, got {}",
            m.formula, m.expected, m.actual
        );
    }
    let check = match report.check {
        Check::Pass => "pass",
        Check::Fail => "fail",
    };
    let _ = writeln!(out, "check: {check}");
    out
}

fn render_cmd(
    build: &BuildArgs,
    out: &Path,
    emit_scene: bool,
    allow_infeasible: bool,
    opts: &RenderOptions,
) -> Outcome {
    let (scene, warning) = match build_scene(build, allow_infeasible) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let report = geometry::audit_scene(&scene);
    if !report.passed() {
        return Outcome {
            code: 1,
            stdout: String::new(),
            stderr: mismatch_diagnostic(&report),
        };
    }
    let svg = render::render(&scene, opts);
    if let Err(e) = std::fs::write(out, svg) {
        return Outcome::failure(format!("cannot write {}: {e}", out.display()));
    }
    let mut stdout = format!(
        "wrote {} ({} polygons, {} colored, {} layers)\n",
        out.display(),
        scene.polygons().len() - 1,
        scene.colored_count(),
        scene.layers_rendered()
    );
    if emit_scene {
        let path = out.with_extension("json");
        if let Err(e) = std::fs::write(&path, scene.to_json()) {
            return Outcome::failure(format!("cannot write {}: {e}", path.display()));
        }
        let _ = writeln!(stdout, "wrote {}", path.display());
    }
    Outcome {
        code: 0,
        stdout,
        stderr: warning.unwrap_or_default(),
    }
}

#[derive(Serialize)]
struct TableRow {
    k: u32,
    term: Rational,
    partial_sum_closed: Option<Rational>,
    partial_sum_naive: Rational,
}

fn table(ratio: &Rational, first_term: &Rational, terms: u32, format: Format) -> Outcome {
    if terms == 0 {
        return Outcome::usage("--terms must be at least 1");
    }
    let limit = SeriesSpec::new(ratio.clone(), first_term.clone(), true)
        .ok()
        .map(|s| s.limit());
    let rows: Vec<TableRow> = (0..terms)
        .map(|k| TableRow {
            k,
            term: first_term * ratio.pow(k),
            partial_sum_closed: partial_sum_closed(ratio, k).ok().map(|s| first_term * s),
            partial_sum_naive: first_term * partial_sum_naive(ratio, k),
        })
        .collect();
    match format {
        Format::Json => Outcome::ok(to_json(&json!({
            "schema": REPORT_SCHEMA,
            "command": "table",
            "ratio": ratio,
            "first_term": first_term,
            "limit": limit,
            "rows": rows,
        }))),
        Format::Table => {
            let limit_text = opt(&limit);
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.term.to_string(),
                        r.partial_sum_closed
                            .as_ref()
                            .map_or_else(|| "singular".into(), Rational::to_string),
                        r.partial_sum_naive.to_string(),
                        limit_text.clone(),
                    ]
                })
                .collect();
            let mut out = format!("series: {first_term} * (1 + x + x^2 + ...), x = {ratio}\n\n");
            out.push_str(&text_table(
                &["k", "term", "partial sum (closed)", "partial sum (naive)", "limit"],
                &cells,
            ));
            Outcome::ok(out)
        }
    }
}
