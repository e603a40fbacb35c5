//! Exact-arithmetic construction, verification and rendering of area proofs
//! for geometric series.
//!
//! Two constructions are modelled:
//!
//! - the layered triangle, where every layer is cut into `n` congruent small
//!   triangles of which `a` are colored, proving
//!   `v + v^2 + v^3 + ... = a/n` for `v = a (1 - (1-r)^2) / n`;
//! - the staircase, where colored right triangles with legs `1, s, s^2, ...`
//!   fill `1/(1+s)` of every layer, proving `1 + r + r^2 + ... = 1/(1-r)` for
//!   `r = s^2`.
//!
//! All quantities are [`Rational`]s, so every identity is checked exactly.
//! The [`feasibility`] module shows that only `r = 1/2` and `r = 1/3` admit
//! layered pictures. Runnable walkthroughs live in the crate's `examples/`
//! directory; the `geoseries` binary exposes the same functionality on the
//! command line.

pub mod cli;
pub mod construction;
pub mod error;
pub mod feasibility;
pub mod geometry;
pub mod rational;
pub mod render;
pub mod series;

pub use construction::{LayeredParams, StaircaseParams};
pub use error::{Error, Result};
pub use feasibility::{FeasibilityReport, DerivedConfig};
pub use geometry::{AuditReport, Point, Polygon, Role, Scene};
pub use rational::{rat, Rational};
pub use render::RenderOptions;
pub use series::SeriesSpec;
