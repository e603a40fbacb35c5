use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed rational {0:?}: expected \"p/q\" with q > 0, or an integer")]
    ParseRational(String),

    #[error("ratio x = 1 makes the closed form singular (the partial sum is N + 1)")]
    SingularRatio,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error(
        "m = {m} admits no layered picture: n = {n}, a = {a} violates 1 <= a < n \
         (see `geoseries feasible --max-m {m}`; only m = 2 and m = 3 are feasible)"
    )]
    Infeasible { m: u64, n: u64, a: u64 },

    #[error("layer ratio r = {0} is not a unit fraction 1/m; no integral tessellation exists")]
    NonUnitRatio(Rational),

    #[error("degenerate polygon: signed area is zero")]
    DegeneratePolygon,

    #[error("polygon is clockwise; vertices must be counterclockwise")]
    ClockwisePolygon,

    #[error("invalid scene: {0}")]
    InvalidScene(String),

    #[error("invalid render options: {0}")]
    InvalidOptions(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
