//! Tiling the unit square `Q = (-1/2, 1/2)²` with translates of two bricks.
//!
//! `Q` can be tiled by translates of an `a₁×a₂` brick `A` and a `b₁×b₂`
//! brick `B` exactly when it can be cut, along x or along y, into two
//! rectangles each tiled by one brick type alone. Concretely one of:
//!
//! 1. `1/a₁, 1/a₂ ∈ Z` (`A` alone);
//! 2. `1/b₁, 1/b₂ ∈ Z` (`B` alone);
//! 3. `1/a₁, 1/b₁ ∈ Z` and `k·a₂ + l·b₂ = 1` for some `k, l ≥ 0` (horizontal cut);
//! 4. `1/a₂, 1/b₂ ∈ Z` and `k·a₁ + l·b₁ = 1` for some `k, l ≥ 0` (vertical cut).
//!
//! The necessity direction comes from the zero set of `χ̂_Q`; see
//! [`box_zero_set_contains`]. Dimensions are exact rationals.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Brick {
    pub w: Rational,
    pub h: Rational,
}

impl Brick {
    pub fn new(w: Rational, h: Rational) -> Result<Self> {
        if w <= Rational::zero() || h <= Rational::zero() {
            return Err(Error::InvalidInput("brick dimensions must be positive".into()));
        }
        Ok(Brick { w, h })
    }

    pub fn transposed(self) -> Self {
        Brick { w: self.h, h: self.w }
    }

    pub fn area(self) -> Rational {
        self.w * self.h
    }
}

impl Serialize for Brick {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq([self.w.to_string(), self.h.to_string()])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BrickType {
    A,
    B,
}

/// Which of the four separation patterns applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum BrickMode {
    AOnly,
    BOnly,
    /// `k` rows of `A` below `l` rows of `B`.
    HorizontalCut { k: u64, l: u64 },
    /// `k` columns of `A` left of `l` columns of `B`.
    VerticalCut { k: u64, l: u64 },
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BrickDecision {
    pub tileable: bool,
    pub mode: BrickMode,
    /// Distance of the cut from the bottom (horizontal) or left (vertical)
    /// side of `Q`.
    #[serde(serialize_with = "ser_opt_ratio")]
    pub cut: Option<Rational>,
}

fn ser_opt_ratio<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// A brick placed with lower-left corner `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RectPlacement {
    pub brick: BrickType,
    pub x: Rational,
    pub y: Rational,
}

impl Serialize for RectPlacement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RectPlacement", 2)?;
        st.serialize_field("brick", &self.brick)?;
        st.serialize_field("corner", &[self.x.to_string(), self.y.to_string()])?;
        st.end()
    }
}

/// `1/r` as an integer, if it is one.
fn reciprocal_int(r: Rational) -> Option<i64> {
    (r > Rational::zero() && r.numer().is_one()).then(|| *r.denom())
}

/// Least `k ≥ 1` with `k·p + l·q = 1` for some integer `l ≥ 1`. Splits
/// with `k = 0` or `l = 0` are single-brick tilings, reported as such.
fn split_one(p: Rational, q: Rational) -> Option<(u64, u64)> {
    let max_k = (Rational::one() / p).floor().to_integer();
    (1..=max_k).find_map(|k| {
        let l = (Rational::one() - p * k) / q;
        (l.is_integer() && l.to_integer() >= 1).then(|| (k as u64, l.to_integer() as u64))
    })
}

/// Every separation pattern that applies, in clause order; each cut uses
/// both bricks and its least `k`.
pub fn all_separations(a: Brick, b: Brick) -> Vec<BrickMode> {
    let mut out = Vec::new();
    let (ra1, ra2) = (reciprocal_int(a.w), reciprocal_int(a.h));
    let (rb1, rb2) = (reciprocal_int(b.w), reciprocal_int(b.h));
    if ra1.is_some() && ra2.is_some() {
        out.push(BrickMode::AOnly);
    }
    if rb1.is_some() && rb2.is_some() {
        out.push(BrickMode::BOnly);
    }
    if ra1.is_some() && rb1.is_some() {
        if let Some((k, l)) = split_one(a.h, b.h) {
            out.push(BrickMode::HorizontalCut { k, l });
        }
    }
    if ra2.is_some() && rb2.is_some() {
        if let Some((k, l)) = split_one(a.w, b.w) {
            out.push(BrickMode::VerticalCut { k, l });
        }
    }
    out
}

/// The first applicable pattern in clause order.
pub fn decide_two_bricks(a: Brick, b: Brick) -> BrickDecision {
    let mode = all_separations(a, b).into_iter().next().unwrap_or(BrickMode::None);
    decision_for(mode, a, b)
}

/// The decision record for a given pattern.
pub fn decision_for(mode: BrickMode, a: Brick, _b: Brick) -> BrickDecision {
    let cut = match mode {
        BrickMode::HorizontalCut { k, .. } => Some(a.h * k as i64),
        BrickMode::VerticalCut { k, .. } => Some(a.w * k as i64),
        _ => None,
    };
    BrickDecision { tileable: mode != BrickMode::None, mode, cut }
}

/// Explicit placements realizing `decision`.
pub fn construct_separated_tiling(decision: &BrickDecision, a: Brick, b: Brick) -> Result<Vec<RectPlacement>> {
    if !decision.tileable {
        return Err(Error::NotTileable);
    }
    let half = Rational::new(1, 2);
    let mut out = Vec::new();
    // A `cols × rows` grid of one brick type with lower-left corner `origin`.
    let mut block = |t: BrickType, brick: Brick, origin: (Rational, Rational), cols: i64, rows: i64| {
        for i in 0..cols {
            for j in 0..rows {
                out.push(RectPlacement { brick: t, x: origin.0 + brick.w * i, y: origin.1 + brick.h * j });
            }
        }
    };
    let inv = |r: Rational| reciprocal_int(r).ok_or_else(|| Error::PreconditionFailed(format!("1/{r} is not an integer")));
    match decision.mode {
        BrickMode::AOnly => block(BrickType::A, a, (-half, -half), inv(a.w)?, inv(a.h)?),
        BrickMode::BOnly => block(BrickType::B, b, (-half, -half), inv(b.w)?, inv(b.h)?),
        BrickMode::HorizontalCut { k, l } => {
            check_split(a.h * k as i64 + b.h * l as i64)?;
            if k > 0 {
                block(BrickType::A, a, (-half, -half), inv(a.w)?, k as i64);
            }
            if l > 0 {
                block(BrickType::B, b, (-half, -half + a.h * k as i64), inv(b.w)?, l as i64);
            }
        }
        BrickMode::VerticalCut { k, l } => {
            check_split(a.w * k as i64 + b.w * l as i64)?;
            if k > 0 {
                block(BrickType::A, a, (-half, -half), k as i64, inv(a.h)?);
            }
            if l > 0 {
                block(BrickType::B, b, (-half + a.w * k as i64, -half), l as i64, inv(b.h)?);
            }
        }
        BrickMode::None => return Err(Error::NotTileable),
    }
    Ok(out)
}

fn check_split(total: Rational) -> Result<()> {
    if total == Rational::one() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(format!("cut rows sum to {total}, not 1")))
    }
}

/// Whether the placements tile `Q` exactly: all inside `Q`, interiors
/// pairwise disjoint and total area 1.
pub fn verify_rect_tiling(placements: &[RectPlacement], a: Brick, b: Brick) -> bool {
    let half = Rational::new(1, 2);
    let rects: Vec<(Rational, Rational, Rational, Rational)> = placements
        .iter()
        .map(|p| {
            let brick = match p.brick {
                BrickType::A => a,
                BrickType::B => b,
            };
            (p.x, p.y, p.x + brick.w, p.y + brick.h)
        })
        .collect();
    if rects.iter().any(|&(x0, y0, x1, y1)| x0 < -half || y0 < -half || x1 > half || y1 > half) {
        return false;
    }
    let area: Rational = rects.iter().map(|&(x0, y0, x1, y1)| (x1 - x0) * (y1 - y0)).sum();
    if area != Rational::one() {
        return false;
    }
    for (i, r) in rects.iter().enumerate() {
        for s in &rects[i + 1..] {
            if r.0 < s.2 && s.0 < r.2 && r.1 < s.3 && s.1 < r.3 {
                return false;
            }
        }
    }
    true
}

/// Whether `(ξ, η)` is a zero of the Fourier transform of the indicator of
/// a centred `c₁×c₂` box, `sin(πc₁ξ)/(πξ) · sin(πc₂η)/(πη)`: `ξ` is a nonzero
/// multiple of `1/c₁` or `η` a nonzero multiple of `1/c₂`.
pub fn box_zero_set_contains(c1: Rational, c2: Rational, xi: Rational, eta: Rational) -> bool {
    let hits = |c: Rational, t: Rational| !t.is_zero() && (c * t).is_integer();
    hits(c1, xi) || hits(c2, eta)
}

/// Greatest common divisor of two positive rationals.
pub fn rational_gcd(p: Rational, q: Rational) -> Rational {
    let den = p.denom().lcm(q.denom());
    let (pn, qn) = (p.numer() * (den / p.denom()), q.numer() * (den / q.denom()));
    Rational::new(pn.gcd(&qn), den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn brick(w: Rational, h: Rational) -> Brick {
        Brick::new(w, h).unwrap()
    }

    #[test]
    fn worked_pair_separations() {
        let (a, b) = (brick(r(1, 2), r(1, 3)), brick(r(1, 3), r(1, 6)));
        // A alone already tiles: 2 × 3 copies.
        let d = decide_two_bricks(a, b);
        assert_eq!(d.mode, BrickMode::AOnly);
        let seps = all_separations(a, b);
        assert!(seps.contains(&BrickMode::HorizontalCut { k: 1, l: 4 }));
        let cut = decision_for(BrickMode::HorizontalCut { k: 1, l: 4 }, a, b);
        assert_eq!(cut.cut, Some(r(1, 3)));
        let placements = construct_separated_tiling(&cut, a, b).unwrap();
        assert_eq!(placements.len(), 14);
        assert!(verify_rect_tiling(&placements, a, b));
    }

    #[test]
    fn decisions() {
        let half = brick(r(1, 2), r(1, 2));
        let d = decide_two_bricks(half, half);
        assert_eq!(d.mode, BrickMode::AOnly);
        assert_eq!(construct_separated_tiling(&d, half, half).unwrap().len(), 4);
        let (a, b) = (brick(r(1, 3), r(2, 5)), brick(r(2, 5), r(1, 2)));
        let d = decide_two_bricks(a, b);
        assert!(!d.tileable);
        assert_eq!(construct_separated_tiling(&d, a, b), Err(Error::NotTileable));
        let b = half;
        let d = decide_two_bricks(a, b);
        assert_eq!(d.mode, BrickMode::BOnly);
        let p = construct_separated_tiling(&d, a, b).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.iter().all(|q| q.brick == BrickType::B));
    }

    #[test]
    fn vertical_cut() {
        // 1/a₂ = 4, 1/b₂ = 2, and 1 = 1·(1/2) + 1·(1/2) with incompatible a₁ = 1/2 only.
        let (a, b) = (brick(r(1, 2), r(1, 4)), brick(r(1, 2), r(1, 2)));
        assert_eq!(decide_two_bricks(a, b).mode, BrickMode::AOnly);
        let (a, b) = (brick(r(3, 5), r(1, 4)), brick(r(2, 5), r(1, 3)));
        let d = decide_two_bricks(a, b);
        assert_eq!(d.mode, BrickMode::VerticalCut { k: 1, l: 1 });
        let p = construct_separated_tiling(&d, a, b).unwrap();
        assert_eq!(p.len(), 7);
        assert!(verify_rect_tiling(&p, a, b));
    }

    #[test]
    fn verifier_rejects_bad_layouts() {
        let unit = brick(r(1, 10), r(1, 20));
        let mut grid = Vec::new();
        for i in 0..10 {
            for j in 0..20 {
                grid.push(RectPlacement { brick: BrickType::A, x: r(-1, 2) + r(i, 10), y: r(-1, 2) + r(j, 20) });
            }
        }
        assert!(verify_rect_tiling(&grid, unit, unit));
        grid.pop();
        assert!(!verify_rect_tiling(&grid, unit, unit));
        let big = brick(r(1, 1), r(1, 1));
        let p = RectPlacement { brick: BrickType::A, x: r(-1, 2), y: r(-1, 2) };
        assert!(verify_rect_tiling(&[p], big, big));
        assert!(!verify_rect_tiling(&[p, p], big, big));
        let outside = RectPlacement { brick: BrickType::A, x: r(-1, 2), y: r(-1, 4) };
        assert!(!verify_rect_tiling(&[outside], big, big));
    }

    #[test]
    fn zero_set_examples() {
        let (c1, c2) = (r(1, 2), r(1, 3));
        assert!(box_zero_set_contains(c1, c2, r(2, 1), r(0, 1)));
        assert!(!box_zero_set_contains(c1, c2, r(0, 1), r(0, 1)));
        assert!(box_zero_set_contains(c1, c2, r(1, 1), r(3, 1)));
        assert!(!box_zero_set_contains(c1, c2, r(1, 1), r(1, 1)));
    }

    #[test]
    fn zero_set_agrees_with_the_formula() {
        use std::f64::consts::PI;
        let f = |c: f64, t: f64| if t == 0.0 { c } else { (PI * c * t).sin() / (PI * t) };
        for (c1, c2) in [(r(1, 2), r(1, 3)), (r(2, 5), r(3, 4))] {
            for xn in -12..=12 {
                for yn in -12..=12 {
                    let (xi, eta) = (r(xn, 4), r(yn, 3));
                    let v = f(*c1.numer() as f64 / *c1.denom() as f64, xn as f64 / 4.0)
                        * f(*c2.numer() as f64 / *c2.denom() as f64, yn as f64 / 3.0);
                    assert_eq!(box_zero_set_contains(c1, c2, xi, eta), v.abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn common_zeros_lie_in_the_zero_set_of_q() {
        // A tiling forces Z(χ̂_Q) ⊇ Z(χ̂_A) ∩ Z(χ̂_B); the points (1/a₁, 1/b₂)
        // and (1/b₁, 1/a₂) are common zeros of the two brick transforms.
        let (a, b) = (brick(r(1, 2), r(1, 3)), brick(r(1, 3), r(1, 6)));
        for (xi, eta) in [(a.w.recip(), b.h.recip()), (b.w.recip(), a.h.recip())] {
            assert!(box_zero_set_contains(a.w, a.h, xi, eta));
            assert!(box_zero_set_contains(b.w, b.h, xi, eta));
            assert!(box_zero_set_contains(r(1, 1), r(1, 1), xi, eta));
        }
    }

    #[test]
    fn rational_gcds() {
        assert_eq!(rational_gcd(r(1, 2), r(1, 3)), r(1, 6));
        assert_eq!(rational_gcd(r(2, 5), r(4, 5)), r(2, 5));
        assert_eq!(rational_gcd(r(2, 3), r(1, 2)), r(1, 6));
    }
}
