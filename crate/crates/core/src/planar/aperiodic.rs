//! A tiling of `Z²` by `{(0,0), (2,0), (0,2), (2,2)}` with no period.
//!
//! The tile lives inside one coset of `(2Z)²` and is a dilated 2×2 block
//! there, so each of the four cosets can be tiled independently. Two cosets
//! take the ordinary block tiling; one takes the tiling with a single column
//! of blocks shifted up by one (no horizontal period), and one takes the
//! tiling with a single row shifted right by one (no vertical period).

use std::collections::BTreeSet;

use super::{LatticeSet2D, Point};

/// Block tilings of `Z²` by `{0,1}²`, as membership predicates.
#[derive(Clone, Copy)]
enum BlockPattern {
    Regular,
    ShiftedColumn,
    ShiftedRow,
}

impl BlockPattern {
    fn contains(self, u: i64, v: i64) -> bool {
        let even = |t: i64| t.rem_euclid(2) == 0;
        match self {
            BlockPattern::Regular => even(u) && even(v),
            BlockPattern::ShiftedColumn => (u != 0 && even(u) && even(v)) || (u == 0 && !even(v)),
            BlockPattern::ShiftedRow => (v != 0 && even(u) && even(v)) || (v == 0 && !even(u)),
        }
    }
}

fn interleaved_contains(x: i64, y: i64) -> bool {
    let (cx, cy) = (x.rem_euclid(2), y.rem_euclid(2));
    let (u, v) = ((x - cx) / 2, (y - cy) / 2);
    let pattern = match (cx, cy) {
        (0, 1) => BlockPattern::ShiftedColumn,
        (1, 1) => BlockPattern::ShiftedRow,
        _ => BlockPattern::Regular,
    };
    pattern.contains(u, v)
}

/// Translation vectors `λ` of the interleaved tiling whose translate meets
/// `[-R, R]²`, sorted.
pub fn generate_aperiodic_tiling(radius: i64) -> Vec<Point> {
    assert!(radius >= 8, "radius must be at least 8");
    let tile = LatticeSet2D::spaced_square();
    collect(radius, tile.diameter() as i64, interleaved_contains)
}

/// The block tiling of `Z²` by `{0,1}²` with the column of blocks at `x ∈ {0,1}`
/// shifted up by one: translates meeting `[-R, R]²`, sorted.
pub fn shift_column_tiling(radius: i64) -> Vec<Point> {
    assert!(radius >= 4, "radius must be at least 4");
    collect(radius, 1, |x, y| BlockPattern::ShiftedColumn.contains(x, y))
}

fn collect(radius: i64, d: i64, member: impl Fn(i64, i64) -> bool) -> Vec<Point> {
    let mut out = Vec::new();
    for x in -radius - d..=radius {
        for y in -radius - d..=radius {
            if member(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Whether every cell of `[-r, r]²` is covered exactly once by `tile + λ`.
pub fn covers_exactly_once(tile: &LatticeSet2D, lambda: &[Point], r: i64) -> bool {
    let side = (2 * r + 1) as usize;
    let mut count = vec![0u32; side * side];
    for &(lx, ly) in lambda {
        for &(ax, ay) in tile.points() {
            let (x, y) = (lx + ax, ly + ay);
            if x.abs() <= r && y.abs() <= r {
                count[(x + r) as usize * side + (y + r) as usize] += 1;
            }
        }
    }
    count.iter().all(|&c| c == 1)
}

/// Whether `(Λ ∩ core) + v = Λ ∩ (core + v)` with `core = [-r, r]²`. The
/// caller must supply `Λ` on `core ∪ (core + v)`.
pub fn is_window_period(lambda: &[Point], v: Point, r: i64) -> bool {
    let set: BTreeSet<Point> = lambda.iter().copied().collect();
    let in_core = |p: &Point| p.0.abs() <= r && p.1.abs() <= r;
    let shifted: BTreeSet<Point> = set.iter().filter(|p| in_core(p)).map(|p| (p.0 + v.0, p.1 + v.1)).collect();
    let target: BTreeSet<Point> = set.iter().filter(|p| in_core(&(p.0 - v.0, p.1 - v.1))).copied().collect();
    shifted == target
}

/// All nonzero `v` with `‖v‖∞ ≤ max_norm` that are window periods.
pub fn window_periods(lambda: &[Point], max_norm: i64, r: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for vx in -max_norm..=max_norm {
        for vy in -max_norm..=max_norm {
            if (vx, vy) != (0, 0) && is_window_period(lambda, (vx, vy), r) {
                out.push((vx, vy));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_patterns_tile() {
        let square = LatticeSet2D::unit_square();
        for pattern in [BlockPattern::Regular, BlockPattern::ShiftedColumn, BlockPattern::ShiftedRow] {
            let lambda = collect(10, 1, |x, y| pattern.contains(x, y));
            assert!(covers_exactly_once(&square, &lambda, 9));
        }
    }

    #[test]
    fn interleaved_tiling_covers_and_has_no_small_period() {
        let lambda = generate_aperiodic_tiling(8);
        assert!(covers_exactly_once(&LatticeSet2D::spaced_square(), &lambda, 4));
        let lambda = generate_aperiodic_tiling(20);
        assert!(covers_exactly_once(&LatticeSet2D::spaced_square(), &lambda, 16));
        assert!(window_periods(&lambda, 5, 10).is_empty());
    }

    #[test]
    fn regular_cosets_alone_would_be_periodic() {
        let lambda = collect(20, 2, |x, y| {
            let (cx, cy) = (x.rem_euclid(2), y.rem_euclid(2));
            BlockPattern::Regular.contains((x - cx) / 2, (y - cy) / 2)
        });
        assert!(is_window_period(&lambda, (4, 0), 10));
        assert!(is_window_period(&lambda, (0, 4), 10));
    }

    #[test]
    fn shifted_column() {
        let lambda = shift_column_tiling(6);
        assert!(covers_exactly_once(&LatticeSet2D::unit_square(), &lambda, 5));
        assert!(is_window_period(&lambda, (0, 2), 3));
        assert!(!is_window_period(&lambda, (2, 0), 3));
    }
}
