//! Analytic model of the two area constructions.
//!
//! *Layered triangle.* A triangle of area 1 is cut by lines parallel to its
//! base into layers. Layer `k` is the strip between the similar apex
//! triangles of linear scale `(1-r)^(k-1)` and `(1-r)^k`, so its area is
//! `(1 - (1-r)^2) (1-r)^(2(k-1))`. Each layer is split into `n` congruent
//! triangles of which `a` are colored; the colored area is therefore `a/n`
//! of every layer and of the whole triangle.
//!
//! *Staircase.* A right triangle with legs `1` and `1/(1-s)` holds colored
//! right isosceles triangles with legs `1, s, s^2, ...`. Each colored piece
//! is `1/(1+s)` of its layer, which gives `1 + r + r^2 + ... = 1/(1-r)` for
//! `r = s^2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The triple `(n, a, r)`: triangles per layer, colored triangles per layer
/// and layer-height ratio.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLayered")]
pub struct LayeredParams {
    n: u64,
    a: u64,
    r: Rational,
}

#[derive(Deserialize)]
struct RawLayered {
    n: u64,
    a: u64,
    r: Rational,
}

impl TryFrom<RawLayered> for LayeredParams {
    type Error = Error;

    fn try_from(raw: RawLayered) -> Result<Self> {
        Self::new(raw.n, raw.a, raw.r)
    }
}

impl LayeredParams {
    /// Requires `1 <= a < n` and `0 < r < 1`.
    pub fn new(n: u64, a: u64, r: Rational) -> Result<Self> {
        if a < 1 || a >= n {
            return Err(Error::InvalidParams(format!(
                "need 1 <= a < n, got n = {n}, a = {a}"
            )));
        }
        check_open_unit(&r, "r")?;
        Ok(Self { n, a, r })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    /// `(1-r)^2`, the area ratio between successive apex triangles.
    pub fn shrink(&self) -> Rational {
        shrink(&self.r)
    }

    /// Area of layer `k` (1-based) inside the unit-area triangle.
    pub fn layer_area(&self, k: u32) -> Rational {
        layer_area(&self.r, k)
    }

    /// Area of one small triangle in layer `k`.
    pub fn triangle_area(&self, k: u32) -> Rational {
        triangle_area(self.n, &self.r, k)
    }

    /// Total colored area of layers `1..=layers`: `(a/n)(1 - (1-r)^(2L))`.
    pub fn colored_area_partial(&self, layers: u32) -> Rational {
        self.colored_limit() * (Rational::one() - self.shrink().pow(layers))
    }

    /// The colored fraction `a/n`, equal to the total colored area.
    pub fn colored_limit(&self) -> Rational {
        Rational::normalize(self.a, self.n).expect("n >= 2")
    }

    /// Area of the untessellated apex triangle above layer `layers`.
    pub fn apex_remainder(&self, layers: u32) -> Rational {
        self.shrink().pow(layers)
    }
}

/// `s = sqrt(r)` of the staircase; `r = s^2` is the series ratio.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawStaircase")]
pub struct StaircaseParams {
    s: Rational,
}

#[derive(Deserialize)]
struct RawStaircase {
    s: Rational,
}

impl TryFrom<RawStaircase> for StaircaseParams {
    type Error = Error;

    fn try_from(raw: RawStaircase) -> Result<Self> {
        Self::new(raw.s)
    }
}

impl StaircaseParams {
    /// Requires `0 < s < 1`.
    pub fn new(s: Rational) -> Result<Self> {
        check_open_unit(&s, "s")?;
        Ok(Self { s })
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// The series ratio `r = s^2`.
    pub fn r(&self) -> Rational {
        self.s.pow(2)
    }

    /// Leg length `s^(k-1)` of colored piece `k`.
    pub fn leg(&self, k: u32) -> Rational {
        assert!(k >= 1, "layers are 1-based");
        self.s.pow(k - 1)
    }

    /// `1/(1-s)`: height of the staircase triangle, also the x of vertex B.
    pub fn height(&self) -> Rational {
        (Rational::one() - &self.s).recip().expect("s < 1")
    }

    /// Colored right triangle `k` has legs `s^(k-1)`: area `r^(k-1)/2`.
    pub fn piece_area(&self, k: u32) -> Rational {
        half() * self.leg(k).pow(2)
    }

    /// Layer `k` is a trapezoid of height `s^(k-1)` with parallel sides
    /// `s^(k-1)` and `s^k`: area `(1+s) s^(2(k-1)) / 2`.
    pub fn layer_area(&self, k: u32) -> Rational {
        half() * (Rational::one() + &self.s) * self.leg(k).pow(2)
    }

    /// `1/(2(1-s))`.
    pub fn total_area(&self) -> Rational {
        half() * self.height()
    }

    /// The colored share of every layer, `1/(1+s)`.
    pub fn colored_fraction(&self) -> Rational {
        (Rational::one() + &self.s).recip().expect("s > 0")
    }

    /// Area of the similar apex triangle left above layer `layers`.
    pub fn apex_remainder(&self, layers: u32) -> Rational {
        self.total_area() * self.r().pow(layers)
    }
}

fn half() -> Rational {
    Rational::unit_fraction(2)
}

fn check_open_unit(q: &Rational, name: &str) -> Result<()> {
    if !q.is_positive() || *q >= Rational::one() {
        return Err(Error::InvalidParams(format!(
            "need 0 < {name} < 1, got {name} = {q}"
        )));
    }
    Ok(())
}

pub(crate) fn shrink(r: &Rational) -> Rational {
    (Rational::one() - r).pow(2)
}

pub(crate) fn layer_area(r: &Rational, k: u32) -> Rational {
    assert!(k >= 1, "layers are 1-based");
    let q = shrink(r);
    (Rational::one() - &q) * q.pow(k - 1)
}

pub(crate) fn triangle_area(n: u64, r: &Rational, k: u32) -> Rational {
    layer_area(r, k) / Rational::from(n)
}
