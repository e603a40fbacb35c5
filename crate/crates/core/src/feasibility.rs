//! Which layer ratios admit a layered-triangle picture.
//!
//! A picture needs two things. First, the colored-layer contributions must
//! form `v + v^2 + ...` in their own first term (the *square constraint*),
//! which forces `a/n = (1-r)^2 / (1-(1-r)^2) < 1` and hence
//! `r > 1 - 1/sqrt(2)`. Second, a layer must split into a whole number of
//! small triangles of area `r^2`, so `2/r` is an integer and `n = 2/r - 1`,
//! after which `a = 1/r^2 + 1 - 2/r` must also be an integer. Together these
//! leave `r = 1/m` with `m` in `{2, 3}` only.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::construction::LayeredParams;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest `m` accepted, so that `(m-1)^2` fits in a `u64`.
pub const MAX_M: u64 = u32::MAX as u64;

/// `(1-r)^2 / (1-(1-r)^2) = a/n`: the colored-layer series is geometric in
/// its own first term.
pub fn check_square_constraint(p: &LayeredParams) -> bool {
    square_condition(p.n(), p.a(), p.r())
}

fn square_condition(n: u64, a: u64, r: &Rational) -> bool {
    let q = crate::construction::shrink(r);
    let lhs = q
        .checked_div(&(Rational::one() - &q))
        .expect("0 < r < 1 keeps 1-(1-r)^2 nonzero");
    lhs == Rational::normalize(a, n).expect("n > 0")
}

/// `r > 1 - 1/sqrt(2)`, evaluated exactly as `2 (1-r)^2 < 1`, i.e.
/// `2 (q-p)^2 < q^2` for `r = p/q`.
pub fn check_bound(r: &Rational) -> bool {
    let gap = r.denom() - r.numer();
    BigInt::from(2) * &gap * &gap < r.denom() * r.denom()
}

/// Number of layer triangles and colored triangles forced by `r`, when
/// integral: `n = 2/r - 1` and `a = 1/r^2 + 1 - 2/r`.
pub fn forced_counts(r: &Rational) -> (Option<u64>, Option<i64>) {
    let two_over_r = Rational::from(2u32) / r;
    let n = (&two_over_r - Rational::one()).to_u64().filter(|&n| n > 0);
    let a = (r.pow(2).recip().expect("r != 0") + Rational::one() - two_over_r)
        .to_integer()
        .and_then(|a| a.to_i64());
    (n, a)
}

/// The configuration derived from `r = 1/m`; `a < n` is not guaranteed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedConfig {
    pub m: u64,
    pub n: u64,
    pub a: u64,
    pub r: Rational,
}

impl DerivedConfig {
    pub fn is_feasible(&self) -> bool {
        self.a >= 1 && self.a < self.n
    }

    pub fn to_params(&self) -> Result<LayeredParams> {
        if !self.is_feasible() {
            return Err(Error::Infeasible {
                m: self.m,
                n: self.n,
                a: self.a,
            });
        }
        LayeredParams::new(self.n, self.a, self.r.clone())
    }
}

/// `n = 2m - 1`, `a = (m-1)^2`, `r = 1/m`.
pub fn derive_config(m: u64) -> Result<DerivedConfig> {
    if m < 2 {
        return Err(Error::InvalidParams(format!(
            "m must be at least 2 (r = 1/m < 1), got {m}"
        )));
    }
    if m > MAX_M {
        return Err(Error::InvalidParams(format!("m must not exceed {MAX_M}")));
    }
    Ok(DerivedConfig {
        m,
        n: 2 * m - 1,
        a: (m - 1) * (m - 1),
        r: Rational::unit_fraction(m),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub candidate_m: u64,
    pub r: Rational,
    /// `2/r` is a natural number.
    pub passes_integrality: bool,
    pub derived_n: Option<u64>,
    pub derived_a: Option<i64>,
    pub passes_square_constraint: bool,
    pub passes_bound: bool,
    /// `1 <= a < n` for the derived counts.
    pub passes_count_range: bool,
    pub feasible: bool,
    /// `a/n`, the value of the proved identity, when feasible.
    pub identity_sum: Option<Rational>,
}

impl FeasibilityReport {
    /// Names of the constraints this candidate fails.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.passes_integrality {
            out.push("integrality");
        }
        if !self.passes_square_constraint {
            out.push("square");
        }
        if !self.passes_bound {
            out.push("bound");
        }
        if !self.passes_count_range {
            out.push("a<n");
        }
        out
    }
}

/// Constraint checks for `r = p/q` (lowest terms) in machine integers.
/// Exact while `q <= MAX_M`: the largest product is `(q-p)^2 * n < 2^97`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct RatioChecks {
    integrality: bool,
    n: Option<u64>,
    a: Option<i64>,
    square: bool,
    bound: bool,
    count_range: bool,
}

fn ratio_checks(p: u128, q: u128) -> RatioChecks {
    debug_assert!(0 < p && p < q && q <= MAX_M as u128);
    // 2/r = 2q/p
    let integrality = (2 * q).is_multiple_of(p);
    let n = integrality.then(|| (2 * q / p - 1) as u64).filter(|&n| n > 0);
    // a = 1/r^2 + 1 - 2/r = (q-p)^2 / p^2
    let gap_sq = (q - p) * (q - p);
    let a = (gap_sq.is_multiple_of(p * p)).then(|| (gap_sq / (p * p)) as i64);
    // (1-r)^2 / (1-(1-r)^2) = a/n  <=>  (q-p)^2 n = a (2pq - p^2)
    let square = match (n, a) {
        (Some(n), Some(a)) if a >= 0 => gap_sq * n as u128 == a as u128 * (2 * p * q - p * p),
        _ => false,
    };
    let count_range = match (n, a) {
        (Some(n), Some(a)) => a >= 1 && (a as u64) < n,
        _ => false,
    };
    RatioChecks {
        integrality,
        n,
        a,
        square,
        bound: 2 * gap_sq < q * q,
        count_range,
    }
}

/// Evaluates every constraint for `r = 1/m`.
pub fn assess(m: u64) -> Result<FeasibilityReport> {
    let cfg = derive_config(m)?;
    let c = ratio_checks(1, m as u128);
    let feasible = c.integrality && c.square && c.count_range;
    let identity_sum = feasible
        .then(|| Rational::normalize(c.a.expect("feasible"), c.n.expect("feasible")).expect("n > 0"));
    Ok(FeasibilityReport {
        candidate_m: m,
        r: cfg.r,
        passes_integrality: c.integrality,
        derived_n: c.n,
        derived_a: c.a,
        passes_square_constraint: c.square,
        passes_bound: c.bound,
        passes_count_range: c.count_range,
        feasible,
        identity_sum,
    })
}

/// One report per `m` in `2..=max_m`, in ascending order.
pub fn enumerate_feasible(max_m: u64) -> Result<Vec<FeasibilityReport>> {
    if !(2..=MAX_M).contains(&max_m) {
        return Err(Error::InvalidParams(format!(
            "max-m must lie in [2, {MAX_M}], got {max_m}"
        )));
    }
    (2..=max_m).into_par_iter().map(assess).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn square_constraint_examples() {
        let p = |n, a, r| LayeredParams::new(n, a, r).unwrap();
        assert!(check_square_constraint(&p(3, 1, rat(1, 2))));
        assert!(check_square_constraint(&p(5, 4, rat(1, 3))));
        assert!(!check_square_constraint(&p(4, 1, rat(1, 2))));
        assert!(!check_square_constraint(&p(7, 3, rat(1, 5))));
    }

    #[test]
    fn bound_examples() {
        assert!(check_bound(&rat(1, 2)));
        assert!(check_bound(&rat(1, 3)));
        assert!(!check_bound(&rat(1, 4)));
        // 1 - 1/sqrt(2) = 0.29289...
        assert!(check_bound(&rat(293, 1000)));
        assert!(!check_bound(&rat(292, 1000)));
    }

    #[test]
    fn derive_config_examples() {
        let c2 = derive_config(2).unwrap();
        assert_eq!((c2.n, c2.a, c2.r.clone()), (3, 1, rat(1, 2)));
        assert!(c2.is_feasible());
        let c3 = derive_config(3).unwrap();
        assert_eq!((c3.n, c3.a, c3.r.clone()), (5, 4, rat(1, 3)));
        let c4 = derive_config(4).unwrap();
        assert_eq!((c4.n, c4.a, c4.r.clone()), (7, 9, rat(1, 4)));
        assert!(!c4.is_feasible());
        assert!(matches!(c4.to_params(), Err(Error::Infeasible { m: 4, n: 7, a: 9 })));
        assert!(derive_config(1).is_err());
        assert!(derive_config(0).is_err());
    }

    #[test]
    fn forced_counts_for_non_unit_ratios() {
        assert_eq!(forced_counts(&rat(1, 2)), (Some(3), Some(1)));
        assert_eq!(forced_counts(&rat(1, 3)), (Some(5), Some(4)));
        // r = 2/j with odd j: n is integral but a = (j-2)^2/4 is not.
        for j in (3..200).step_by(2) {
            let (n, a) = forced_counts(&rat(2, j));
            assert_eq!(n, Some(j as u64 - 1));
            assert_eq!(a, None, "j = {j}");
        }
        // 2/r not integral
        assert_eq!(forced_counts(&rat(2, 15)).0, Some(14));
        assert_eq!(forced_counts(&rat(3, 7)).0, None);
    }

    #[test]
    fn enumerate_small() {
        let reports = enumerate_feasible(10).unwrap();
        assert_eq!(reports.len(), 9);
        let feasible: Vec<_> = reports.iter().filter(|r| r.feasible).collect();
        assert_eq!(feasible.len(), 2);
        assert_eq!(feasible[0].candidate_m, 2);
        assert_eq!(feasible[0].identity_sum, Some(rat(1, 3)));
        assert_eq!(feasible[1].candidate_m, 3);
        assert_eq!(feasible[1].identity_sum, Some(rat(4, 5)));
        let m4 = &reports[2];
        assert_eq!(m4.failures(), ["bound", "a<n"]);
        assert_eq!(m4.derived_a, Some(9));

        let only_two = enumerate_feasible(2).unwrap();
        assert_eq!(only_two.len(), 1);
        assert!(only_two[0].feasible);
        assert!(enumerate_feasible(1).is_err());
    }

    #[test]
    fn derived_family_reduces_to_bound() {
        for m in 2..=10_000u64 {
            let cfg = derive_config(m).unwrap();
            assert!(square_condition(cfg.n, cfg.a, &cfg.r), "m = {m}");
            let a_lt_n = (m - 1) * (m - 1) < 2 * m - 1;
            assert_eq!(cfg.is_feasible(), a_lt_n);
            assert_eq!(a_lt_n, check_bound(&cfg.r), "m = {m}");
        }
    }

    #[test]
    fn integer_checks_agree_with_rational_route() {
        for m in 2..=2_000u64 {
            let report = assess(m).unwrap();
            let r = Rational::unit_fraction(m);
            let (n, a) = forced_counts(&r);
            assert_eq!((report.derived_n, report.derived_a), (n, a));
            assert_eq!(report.passes_bound, check_bound(&r));
            let square = square_condition(n.unwrap(), a.unwrap() as u64, &r);
            assert_eq!(report.passes_square_constraint, square);
        }
        for (p, q) in [(2u64, 5u64), (2, 7), (3, 7), (2, 9), (4, 9), (2, 199)] {
            let r = Rational::normalize(p, q).unwrap();
            let c = ratio_checks(p as u128, q as u128);
            let (n, a) = forced_counts(&r);
            assert_eq!((c.n, c.a), (n, a), "r = {r}");
            assert_eq!(c.integrality, (Rational::from(2u32) / &r).is_integer());
            assert_eq!(c.bound, check_bound(&r));
            assert!(!c.square || !c.count_range || c.integrality);
        }
    }

    #[test]
    fn bound_matches_rational_sandwich() {
        // 2928/10000 < 1 - 1/sqrt(2) < 2929/10000, checked by squaring:
        // c = 1 - r  satisfies  2c^2 < 1 <=> r above the bound.
        let lo = rat(2928, 10_000);
        let hi = rat(2929, 10_000);
        let two = Rational::from(2u32);
        assert!(&two * (Rational::one() - &lo).pow(2) > Rational::one());
        assert!(&two * (Rational::one() - &hi).pow(2) < Rational::one());
        for m in 2..=10_000u64 {
            let r = Rational::unit_fraction(m);
            if r >= hi {
                assert!(check_bound(&r), "m = {m}");
            } else if r <= lo {
                assert!(!check_bound(&r), "m = {m}");
            } else {
                panic!("1/{m} falls inside the sandwich");
            }
        }
    }
}
