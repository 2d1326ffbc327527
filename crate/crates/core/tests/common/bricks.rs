//! Exact-cover tiler for the unit square by two brick types.
//!
//! In any tiling of `Q` every brick edge lies on `-1/2 + gcd(widths)·Z`
//! (resp. heights): walk left from any vertical edge through abutting
//! bricks. So it suffices to search on that grid. The search fills the
//! lowest, then leftmost, empty cell; the brick covering it must have its
//! lower-left corner there. Failed skylines are memoized.

use std::collections::HashSet;

use num_rational::Ratio;
use tilekit::bricks::{rational_gcd, Brick};

pub fn brute_force_tiles(a: Brick, b: Brick) -> bool {
    let gx = rational_gcd(a.w, b.w);
    let gy = rational_gcd(a.h, b.h);
    let one = Ratio::from_integer(1);
    let (w, h) = (one / gx, one / gy);
    if !w.is_integer() || !h.is_integer() {
        return false;
    }
    let (w, h) = (w.to_integer() as usize, h.to_integer() as usize);
    let units = |r: Ratio<i64>, g: Ratio<i64>| (r / g).to_integer() as usize;
    let bricks = [(units(a.w, gx), units(a.h, gy)), (units(b.w, gx), units(b.h, gy))];
    if bricks.iter().all(|&(bw, bh)| bw > w || bh > h) {
        return false;
    }
    let row_ok = representable(w, bricks[0].0, bricks[1].0);
    let col_ok = representable(h, bricks[0].1, bricks[1].1);
    if !row_ok[w] || !col_ok[h] {
        return false;
    }
    let mut search = Skyline { w, h, bricks, row_ok, col_ok, failed: HashSet::new() };
    let mut heights = vec![0u16; w];
    search.fill(&mut heights)
}

/// `ok[t]` iff `t = k·p + l·q` with `k, l ≥ 0`.
fn representable(max: usize, p: usize, q: usize) -> Vec<bool> {
    let mut ok = vec![false; max + 1];
    ok[0] = true;
    for t in 1..=max {
        ok[t] = (t >= p && ok[t - p]) || (t >= q && ok[t - q]);
    }
    ok
}

struct Skyline {
    w: usize,
    h: usize,
    bricks: [(usize, usize); 2],
    row_ok: Vec<bool>,
    col_ok: Vec<bool>,
    failed: HashSet<Vec<u16>>,
}

impl Skyline {
    fn fill(&mut self, heights: &mut Vec<u16>) -> bool {
        let (x, low) = match heights.iter().enumerate().min_by_key(|&(i, &v)| (v, i)) {
            Some((i, &v)) => (i, v as usize),
            None => return true,
        };
        if low == self.h {
            return true;
        }
        if self.failed.contains(heights) {
            return false;
        }
        let run = heights[x..].iter().take_while(|&&v| v as usize == low).count();
        let feasible = self.row_ok[run] && heights.iter().all(|&v| self.col_ok[self.h - v as usize]);
        if feasible {
            for (bw, bh) in self.bricks {
                if bw <= run && low + bh <= self.h {
                    for c in &mut heights[x..x + bw] {
                        *c += bh as u16;
                    }
                    let ok = self.fill(heights);
                    for c in &mut heights[x..x + bw] {
                        *c -= bh as u16;
                    }
                    if ok {
                        return true;
                    }
                }
                if self.bricks[0] == self.bricks[1] {
                    break;
                }
            }
        }
        self.failed.insert(heights.clone());
        false
    }
}

/// Rationals `p/q` in `(0, 1]` with `q ≤ max_den`, reduced.
pub fn unit_fractions_up_to(max_den: i64) -> Vec<Ratio<i64>> {
    let mut out: Vec<Ratio<i64>> = (1..=max_den)
        .flat_map(|q| (1..=q).map(move |p| Ratio::new(p, q)))
        .collect();
    out.sort();
    out.dedup();
    out
}
