//! Geometric series: partial sums, limits, and the per-layer colored terms of
//! the layered-triangle construction.

use serde::Serialize;

use crate::construction::LayeredParams;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A convergent geometric series with rational ratio in `(0, 1)`.
///
/// With `starts_at_one` the series is `first_term * (1 + x + x^2 + ...)`;
/// otherwise it is `first_term * (x + x^2 + ...)`. The form `v + v^2 + ...`
/// is `first_term = 1, starts_at_one = false`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesSpec {
    ratio: Rational,
    first_term: Rational,
    starts_at_one: bool,
}

impl SeriesSpec {
    pub fn new(ratio: Rational, first_term: Rational, starts_at_one: bool) -> Result<Self> {
        if !ratio.is_positive() || ratio >= Rational::one() {
            return Err(Error::InvalidParams(format!(
                "series ratio must lie in (0, 1), got {ratio}"
            )));
        }
        if !first_term.is_positive() {
            return Err(Error::InvalidParams(format!(
                "first term must be positive, got {first_term}"
            )));
        }
        Ok(Self {
            ratio,
            first_term,
            starts_at_one,
        })
    }

    /// `1 + x + x^2 + ...`
    pub fn from_one(x: Rational) -> Result<Self> {
        Self::new(x, Rational::one(), true)
    }

    /// `v + v^2 + v^3 + ...`
    pub fn powers_of(v: Rational) -> Result<Self> {
        Self::new(v, Rational::one(), false)
    }

    pub fn ratio(&self) -> &Rational {
        &self.ratio
    }

    pub fn first_term(&self) -> &Rational {
        &self.first_term
    }

    pub fn starts_at_one(&self) -> bool {
        self.starts_at_one
    }

    /// The `k`-th term, counting from 0.
    pub fn term(&self, k: u32) -> Rational {
        let shift = u32::from(!self.starts_at_one);
        &self.first_term * self.ratio.pow(k + shift)
    }

    /// Sum of terms `0..=last` via the closed form.
    pub fn partial_sum(&self, last: u32) -> Rational {
        let base = partial_sum_closed(&self.ratio, last).expect("ratio < 1");
        if self.starts_at_one {
            &self.first_term * base
        } else {
            &self.first_term * &self.ratio * base
        }
    }

    /// Sum of terms `0..=last` by accumulation.
    pub fn partial_sum_naive(&self, last: u32) -> Rational {
        (0..=last).map(|k| self.term(k)).sum()
    }

    pub fn limit(&self) -> Rational {
        closed_limit(self)
    }
}

/// `1 + x + ... + x^last = (1 - x^(last+1)) / (1 - x)`.
pub fn partial_sum_closed(x: &Rational, last: u32) -> Result<Rational> {
    let one = Rational::one();
    if *x == one {
        return Err(Error::SingularRatio);
    }
    Ok((&one - x.pow(last + 1)) / (one - x))
}

/// `1 + x + ... + x^last` term by term. Works for every `x`, including 1.
pub fn partial_sum_naive(x: &Rational, last: u32) -> Rational {
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    for _ in 0..=last {
        sum = sum + &term;
        term = term * x;
    }
    sum
}

/// The exact limit: `first/(1-x)` or `first*x/(1-x)`.
pub fn closed_limit(spec: &SeriesSpec) -> Rational {
    let tail = (Rational::one() - &spec.ratio).recip().expect("ratio < 1");
    if spec.starts_at_one {
        &spec.first_term * tail
    } else {
        &spec.first_term * &spec.ratio * tail
    }
}

/// Colored area contributed by layer `k`: `a (1-(1-r)^2)/n * (1-r)^(2(k-1))`.
pub fn layer_term(params: &LayeredParams, k: u32) -> Rational {
    Rational::from(params.a()) * params.triangle_area(k)
}

/// The colored-layer contributions as a series `v (1 + q + q^2 + ...)` with
/// `v = layer_term(p, 1)` and `q = (1-r)^2`.
pub fn layer_series(params: &LayeredParams) -> SeriesSpec {
    SeriesSpec::new(params.shrink(), layer_term(params, 1), true)
        .expect("0 < (1-r)^2 < 1 and a > 0")
}
