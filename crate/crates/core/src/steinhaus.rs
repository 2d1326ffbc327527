//! A strictly positive function that tiles the line with the integers.
//!
//! `f(x) = c₁·sinc²(c₁x) + c₂·sinc²(c₂x)` is a sum of two Fejér kernels.
//! Its Fourier transform is the sum of two triangles of height 1 supported
//! in `(-c_i, c_i) ⊂ (-1, 1)`, so by Poisson summation
//! `Σ_n f(x - n) = f̂(0) = 2` for every `x`. Each kernel vanishes only at
//! the nonzero multiples of `1/c_i`; when `c₁/c₂` is irrational these never
//! coincide and `f > 0` everywhere.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A half-base length kept in symbolic form, `p/q` or `(p/q)·√2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfBase {
    Rational { num: u32, den: u32 },
    RationalSqrt2 { num: u32, den: u32 },
}

impl HalfBase {
    pub fn value(self) -> f64 {
        match self {
            HalfBase::Rational { num, den } => num as f64 / den as f64,
            HalfBase::RationalSqrt2 { num, den } => num as f64 * SQRT_2 / den as f64,
        }
    }
}

impl fmt::Display for HalfBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HalfBase::Rational { num, den } => write!(f, "{num}/{den}"),
            HalfBase::RationalSqrt2 { num: 1, den } => write!(f, "√2/{den}"),
            HalfBase::RationalSqrt2 { num, den } => write!(f, "{num}√2/{den}"),
        }
    }
}

impl Serialize for HalfBase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Whether `c₁/c₂` is irrational is the caller's responsibility; it is not
/// checked.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FejerSumFunction {
    pub c1: HalfBase,
    pub c2: HalfBase,
}

impl Default for FejerSumFunction {
    fn default() -> Self {
        FejerSumFunction {
            c1: HalfBase::Rational { num: 1, den: 2 },
            c2: HalfBase::RationalSqrt2 { num: 1, den: 2 },
        }
    }
}

impl FejerSumFunction {
    pub fn new(c1: HalfBase, c2: HalfBase) -> Result<Self> {
        for c in [c1, c2] {
            let v = c.value();
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::InvalidInput(format!("half-base {c} must lie in (0, 1)")));
            }
        }
        Ok(FejerSumFunction { c1, c2 })
    }

    /// `f̂(0)`, the level of the tiling by `Z`.
    pub fn level(&self) -> f64 {
        2.0
    }
}

fn sinc(u: f64) -> f64 {
    if u == 0.0 {
        1.0
    } else {
        (PI * u).sin() / (PI * u)
    }
}

fn fejer(c: f64, x: f64) -> f64 {
    let s = sinc(c * x);
    c * s * s
}

pub fn evaluate(f: &FejerSumFunction, x: f64) -> f64 {
    fejer(f.c1.value(), x) + fejer(f.c2.value(), x)
}

/// `Σ_{|n| ≤ N} f(x - n)`. The tail beyond `N` is `O(1/N)`.
pub fn translate_sum(f: &FejerSumFunction, x: f64, n: u64) -> f64 {
    // Smallest terms first.
    let n = n as i64;
    let mut sum = 0.0;
    for k in (1..=n).rev() {
        sum += evaluate(f, x - k as f64) + evaluate(f, x + k as f64);
    }
    sum + evaluate(f, x)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PositivityScan {
    pub min: f64,
    pub argmin: f64,
    pub points: u64,
}

/// Minimum of `f` on the grid `start, start + step, …` up to `end`.
pub fn positivity_scan(f: &FejerSumFunction, step: f64, range: (f64, f64)) -> Result<PositivityScan> {
    let (start, end) = range;
    if !(step > 0.0) || !(end >= start) {
        return Err(Error::InvalidInput("need step > 0 and a nonempty range".into()));
    }
    let points = ((end - start) / step + 1e-9).floor() as u64 + 1;
    let (min, argmin) = (0..points as usize)
        .into_par_iter()
        .with_min_len(4096)
        .map(|i| {
            let x = start + i as f64 * step;
            (evaluate(f, x), x)
        })
        .reduce(|| (f64::INFINITY, start), |a, b| if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a });
    Ok(PositivityScan { min, argmin, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_values() {
        let f = FejerSumFunction::default();
        assert!((evaluate(&f, 0.0) - (0.5 + SQRT_2 / 2.0)).abs() < 1e-15);
        let c2 = SQRT_2 / 2.0;
        let second = c2 * (PI * c2 * 2.0).sin().powi(2) / (PI * c2 * 2.0).powi(2);
        assert!((evaluate(&f, 2.0) - second).abs() < 1e-15);
        assert!(evaluate(&f, 10.37) > 0.0);
        assert_eq!(translate_sum(&f, 0.3, 0), evaluate(&f, 0.3));
    }

    #[test]
    fn kernels_have_their_zeros_apart() {
        let f = FejerSumFunction::default();
        for m in 1..50 {
            assert!(fejer(0.5, 2.0 * m as f64).abs() < 1e-30);
            assert!(evaluate(&f, 2.0 * m as f64) > 0.0);
        }
    }

    #[test]
    fn translates_sum_to_two() {
        let f = FejerSumFunction::default();
        for &x in &[0.0, 0.25, 0.5, 0.9] {
            for &n in &[100u64, 1000, 10_000] {
                let err = (translate_sum(&f, x, n) - 2.0).abs();
                assert!(err * n as f64 <= 100.0, "x={x} N={n} err={err}");
            }
        }
        let d = translate_sum(&f, 0.1, 10_000) - translate_sum(&f, 0.7, 10_000);
        assert!(d.abs() < 2e-2);
    }

    #[test]
    fn scan_is_positive() {
        let f = FejerSumFunction::default();
        let s = positivity_scan(&f, 1e-3, (0.0, 50.0)).unwrap();
        assert_eq!(s.points, 50_001);
        assert!(s.min > 0.0);
        assert!(positivity_scan(&f, 0.0, (0.0, 1.0)).is_err());
    }

    #[test]
    fn labels() {
        let f = FejerSumFunction::default();
        assert_eq!((f.c1.to_string(), f.c2.to_string()), ("1/2".into(), "√2/2".into()));
        assert!(FejerSumFunction::new(HalfBase::Rational { num: 1, den: 1 }, f.c2).is_err());
    }
}
