//! Orders `n` for which every tiling of `Z_n` has a periodic factor.

use std::fmt;

use serde::Serialize;

use crate::exact::number::factorize;

/// The exponent patterns whose divisors are exactly the good orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GoodGroupPattern {
    #[serde(rename = "p^mq")]
    PmQ,
    #[serde(rename = "p^2q^2")]
    P2Q2,
    #[serde(rename = "p^2qr")]
    P2QR,
    #[serde(rename = "pqrs")]
    PQRS,
}

impl fmt::Display for GoodGroupPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GoodGroupPattern::PmQ => "p^mq",
            GoodGroupPattern::P2Q2 => "p^2q^2",
            GoodGroupPattern::P2QR => "p^2qr",
            GoodGroupPattern::PQRS => "pqrs",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodGroupVerdict {
    pub n: u64,
    pub is_good: bool,
    pub pattern: Option<GoodGroupPattern>,
    /// Prime exponents of `n`, sorted descending.
    pub exponents: Vec<u32>,
}

/// `Z_n` is good iff `n` divides a number of the form `p^m q`, `p²q²`,
/// `p²qr` or `pqrs`; the first matching pattern in that order is reported.
pub fn is_good_group(n: u64) -> GoodGroupVerdict {
    assert!(n >= 1, "is_good_group: n must be positive");
    let mut e: Vec<u32> = factorize(n).into_iter().map(|(_, k)| k).collect();
    e.sort_unstable_by(|a, b| b.cmp(a));
    let fits = |bound: &[u32]| e.len() <= bound.len() && e.iter().zip(bound).all(|(x, b)| x <= b);
    let pattern = if fits(&[u32::MAX, 1]) {
        Some(GoodGroupPattern::PmQ)
    } else if fits(&[2, 2]) {
        Some(GoodGroupPattern::P2Q2)
    } else if fits(&[2, 1, 1]) {
        Some(GoodGroupPattern::P2QR)
    } else if fits(&[1, 1, 1, 1]) {
        Some(GoodGroupPattern::PQRS)
    } else {
        None
    };
    GoodGroupVerdict { n, is_good: pattern.is_some(), pattern, exponents: e }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(!is_good_group(72).is_good);
        assert_eq!(is_good_group(12).pattern, Some(GoodGroupPattern::PmQ));
        assert!(is_good_group(1).is_good);
        assert_eq!(is_good_group(36).pattern, Some(GoodGroupPattern::P2Q2));
        assert_eq!(is_good_group(60).pattern, Some(GoodGroupPattern::P2QR));
        assert_eq!(is_good_group(210).pattern, Some(GoodGroupPattern::PQRS));
        assert!(!is_good_group(2310).is_good);
        assert!(!is_good_group(108).is_good);
        assert!(!is_good_group(144).is_good);
    }

    #[test]
    fn smallest_bad_order_is_72() {
        assert_eq!((1..=200).find(|&n| !is_good_group(n).is_good), Some(72));
    }

    #[test]
    fn good_orders_are_closed_under_divisors() {
        for n in 1..=2000u64 {
            if is_good_group(n).is_good {
                for d in crate::exact::number::divisors(n) {
                    assert!(is_good_group(d).is_good, "{d} | {n}");
                }
            }
        }
    }
}
