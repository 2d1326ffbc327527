//! Bounded decision procedure for finite tiles of `Z²`.
//!
//! A positive answer is a periodic tiling `A ⊕ ((aZ)×(bZ) + B′) = Z²`,
//! found as a complement of `A mod (a, b)` in the torus `Z_a × Z_b`. A
//! negative answer is a window `Q_n = [-n, n]²` that no family of pairwise
//! disjoint translates of `A` can cover. Between the two bounds the answer
//! is "unknown": whether every tile of `Z²` that tiles also tiles
//! periodically is an open question, so termination is not claimed.

use rayon::prelude::*;
use serde::Serialize;

use super::{LatticeSet2D, Point};
use crate::group::{ComplementSearch, FiniteAbelianGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarConfig {
    pub max_n: u64,
    pub max_period: u64,
    /// Placements tried per window before giving up.
    pub node_budget: u64,
}

impl Default for PlanarConfig {
    fn default() -> Self {
        PlanarConfig { max_n: 12, max_period: 12, node_budget: 5_000_000 }
    }
}

/// `Λ = (aZ)×(bZ) + B′` with `B′ ⊆ [0,a)×[0,b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicComplement2D {
    pub a: u64,
    pub b: u64,
    pub reps: Vec<Point>,
}

impl PeriodicComplement2D {
    /// Exact check on the torus, then a direct count of coverage on a
    /// window of side `3·max(a,b) + 4D`.
    pub fn verify(&self, tile: &LatticeSet2D) -> bool {
        if self.a == 0 || self.b == 0 {
            return false;
        }
        let tile = tile.canonical();
        let (a, b) = (self.a as i64, self.b as i64);
        if self.reps.iter().any(|&(x, y)| !(0..a).contains(&x) || !(0..b).contains(&y)) {
            return false;
        }
        let Ok(group) = FiniteAbelianGroup::new(vec![self.a, self.b]) else { return false };
        let ta: Vec<usize> = tile.points().iter().map(|&(x, y)| group.encode_signed(&[x, y])).collect();
        let tb: Vec<usize> = self.reps.iter().map(|&(x, y)| group.encode_signed(&[x, y])).collect();
        if !group.is_direct_sum_cover(&ta, &tb) {
            return false;
        }
        let d = tile.diameter() as i64;
        let side = 3 * a.max(b) + 4 * d;
        let mut count = vec![0u32; (side * side) as usize];
        for &(rx, ry) in &self.reps {
            // λ ranges over translates that can reach [0, side)².
            let mut lx = rx - a * ((rx + d) / a + 1);
            while lx < side {
                let mut ly = ry - b * ((ry + d) / b + 1);
                while ly < side {
                    for &(px, py) in tile.points() {
                        let (x, y) = (lx + px, ly + py);
                        if (0..side).contains(&x) && (0..side).contains(&y) {
                            count[(x * side + y) as usize] += 1;
                        }
                    }
                    ly += b;
                }
                lx += a;
            }
        }
        count.iter().all(|&c| c == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Decision2D {
    #[serde(rename = "YES")]
    Yes { certificate: PeriodicComplement2D },
    /// No disjoint family of translates covers `[-n, n]²`.
    #[serde(rename = "NO")]
    No { n: u64 },
    #[serde(rename = "UNKNOWN")]
    Unknown { max_n: u64, max_period: u64 },
}

pub fn decide_tiles_z2(tile: &LatticeSet2D, max_n: u64, max_period: u64) -> Decision2D {
    decide_tiles_z2_with(tile, &PlanarConfig { max_n, max_period, ..PlanarConfig::default() })
}

pub fn decide_tiles_z2_with(tile: &LatticeSet2D, config: &PlanarConfig) -> Decision2D {
    let tile = tile.canonical();
    // A window witness and a periodic tiling exclude each other, so the
    // order of the searches only affects speed: cheap windows first.
    let quick = config.node_budget.min(QUICK_WINDOW_BUDGET);
    let mut n = 1;
    while n <= config.max_n {
        match cover_window(&tile, n, quick) {
            Cover::Found => n += 1,
            Cover::Impossible => return Decision2D::No { n },
            Cover::Budget => break,
        }
    }
    if let Some(certificate) = find_periodic(&tile, config.max_period) {
        return Decision2D::Yes { certificate };
    }
    while n <= config.max_n {
        match cover_window(&tile, n, config.node_budget) {
            Cover::Found => n += 1,
            Cover::Impossible => return Decision2D::No { n },
            Cover::Budget => break,
        }
    }
    Decision2D::Unknown { max_n: config.max_n, max_period: config.max_period }
}

const QUICK_WINDOW_BUDGET: u64 = 100_000;

/// Period pairs by area, then by `a`; the first with a complement wins.
fn find_periodic(tile: &LatticeSet2D, max_period: u64) -> Option<PeriodicComplement2D> {
    let k = tile.len() as u64;
    let mut pairs: Vec<(u64, u64)> = (1..=max_period)
        .flat_map(|a| (1..=max_period).map(move |b| (a, b)))
        .filter(|&(a, b)| (a * b) % k == 0)
        .collect();
    pairs.sort_by_key(|&(a, b)| (a * b, a));
    pairs.par_iter().find_map_first(|&(a, b)| complement_on_torus(tile, a, b))
}

fn complement_on_torus(tile: &LatticeSet2D, a: u64, b: u64) -> Option<PeriodicComplement2D> {
    let group = FiniteAbelianGroup::new(vec![a, b]).ok()?;
    let mut cells: Vec<usize> = tile.points().iter().map(|&(x, y)| group.encode_signed(&[x, y])).collect();
    cells.sort_unstable();
    if cells.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let reps = ComplementSearch::new(&group, &cells).ok()?.first(&[0])?;
    let mut reps: Vec<Point> = reps
        .into_iter()
        .map(|i| {
            let v = group.decode(i);
            (v[0] as i64, v[1] as i64)
        })
        .collect();
    reps.sort_unstable();
    let cert = PeriodicComplement2D { a, b, reps };
    debug_assert!(cert.verify(tile));
    Some(cert)
}

enum Cover {
    Found,
    Impossible,
    Budget,
}

/// Cover-least-uncovered search over `Q_n`, tracking overlaps on the
/// `D`-neighbourhood of `Q_n` where translates can reach. Cells are visited
/// along the tile's longer side first, which keeps independent rows (or
/// columns) of a flat tile from interleaving in the backtracking.
fn cover_window(tile: &LatticeSet2D, n: u64, budget: u64) -> Cover {
    let n = n as i64;
    let d = tile.diameter() as i64;
    let off = n + d;
    let side = 2 * off + 1;
    let id = |x: i64, y: i64| ((x + off) * side + (y + off)) as usize;
    let (w, h) = extents(tile);
    let targets: Vec<(i64, i64)> = if w > h {
        (-n..=n).flat_map(|y| (-n..=n).map(move |x| (x, y))).collect()
    } else {
        (-n..=n).flat_map(|x| (-n..=n).map(move |y| (x, y))).collect()
    };
    let mut used = vec![false; (side * side) as usize];
    let mut nodes = 0u64;

    fn go(
        tile: &[Point],
        targets: &[(i64, i64)],
        from: usize,
        used: &mut [bool],
        id: &dyn Fn(i64, i64) -> usize,
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        let Some(pos) = (from..targets.len()).find(|&i| {
            let (x, y) = targets[i];
            !used[id(x, y)]
        }) else {
            return Some(true);
        };
        let (ux, uy) = targets[pos];
        for &(ax, ay) in tile {
            let (bx, by) = (ux - ax, uy - ay);
            if tile.iter().any(|&(px, py)| used[id(bx + px, by + py)]) {
                continue;
            }
            *nodes += 1;
            if *nodes > budget {
                return None;
            }
            for &(px, py) in tile {
                used[id(bx + px, by + py)] = true;
            }
            let r = go(tile, targets, pos + 1, used, id, nodes, budget);
            for &(px, py) in tile {
                used[id(bx + px, by + py)] = false;
            }
            match r {
                Some(false) => continue,
                other => return other,
            }
        }
        Some(false)
    }

    match go(tile.points(), &targets, 0, &mut used, &id, &mut nodes, budget) {
        Some(true) => Cover::Found,
        Some(false) => Cover::Impossible,
        None => Cover::Budget,
    }
}

fn extents(tile: &LatticeSet2D) -> (i64, i64) {
    let span = |f: fn(&Point) -> i64| {
        let v = tile.points().iter().map(f);
        v.clone().max().unwrap_or(0) - v.min().unwrap_or(0)
    };
    (span(|p| p.0), span(|p| p.1))
}

/// Re-checks a negative witness with a different search: always branch on
/// the cell of `Q_n` with the fewest viable placements. `Some(true)` means
/// no cover exists; `None` means the budget ran out.
pub fn no_witness_holds(tile: &LatticeSet2D, n: u64, budget: u64) -> Option<bool> {
    let tile = tile.canonical();
    let n = n as i64;
    let pts = tile.points().to_vec();
    let mut used = std::collections::HashSet::new();
    let mut nodes = 0u64;

    fn viable(pts: &[Point], used: &std::collections::HashSet<Point>, u: Point) -> Vec<Point> {
        pts.iter()
            .map(|&(ax, ay)| (u.0 - ax, u.1 - ay))
            .filter(|&(bx, by)| pts.iter().all(|&(px, py)| !used.contains(&(bx + px, by + py))))
            .collect()
    }

    fn go(pts: &[Point], n: i64, used: &mut std::collections::HashSet<Point>, nodes: &mut u64, budget: u64) -> Option<bool> {
        let mut best: Option<(Point, Vec<Point>)> = None;
        for x in -n..=n {
            for y in -n..=n {
                if used.contains(&(x, y)) {
                    continue;
                }
                let opts = viable(pts, used, (x, y));
                if best.as_ref().is_none_or(|(_, o)| opts.len() < o.len()) {
                    let empty = opts.is_empty();
                    best = Some(((x, y), opts));
                    if empty {
                        return Some(false);
                    }
                }
            }
        }
        let Some((_, options)) = best else { return Some(true) };
        for (bx, by) in options {
            *nodes += 1;
            if *nodes > budget {
                return None;
            }
            let cells: Vec<Point> = pts.iter().map(|&(px, py)| (bx + px, by + py)).collect();
            used.extend(cells.iter().copied());
            let r = go(pts, n, used, nodes, budget);
            for c in &cells {
                used.remove(c);
            }
            match r {
                Some(false) => continue,
                other => return other,
            }
        }
        Some(false)
    }

    go(&pts, n, &mut used, &mut nodes, budget).map(|covered| !covered)
}
