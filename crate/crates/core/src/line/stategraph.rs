//! Decision by the graph of window states.
//!
//! Scanning `Z` left to right, whether a position `x` belongs to `Λ` is forced
//! by the `D` positions before it: cell `x` is covered by `λ ∈ [x-D, x]`
//! with `x - λ ∈ A`, and must be covered exactly once. A state is the
//! membership of the last `D` positions; each state has at most one
//! successor, so the graph is functional, tilings are bi-infinite walks, and
//! every tiling is periodic because walks close up into cycles.

use super::{canonical_certificate, TilingCertificate1D};
use crate::error::{Error, Result};
use crate::exact::{FiniteSetZ, GroupSubset};

pub const DEFAULT_MAX_DIAMETER: u64 = 24;

/// Shape of the explored graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateGraphSummary {
    pub states: u64,
    pub cycles: u64,
    pub minimal_cycle: Option<u64>,
}

/// Decides whether `tile` tiles `Z` at level one, returning the
/// lexicographically least complement among tilings of minimal period.
pub fn decide_tiles_line_stategraph(tile: &FiniteSetZ, max_diameter: u64) -> Result<Option<TilingCertificate1D>> {
    Ok(explore(tile, max_diameter)?.0)
}

pub(crate) fn explore(
    tile: &FiniteSetZ,
    max_diameter: u64,
) -> Result<(Option<TilingCertificate1D>, StateGraphSummary)> {
    let canon = tile.canonical();
    let d = canon.diameter();
    // States are packed into 32-bit words.
    let cap = max_diameter.min(31);
    if d > cap {
        return Err(Error::DiameterTooLarge { diameter: d, cap });
    }
    if d == 0 {
        let b = GroupSubset::cyclic(1, &[0])?;
        let summary = StateGraphSummary { states: 1, cycles: 1, minimal_cycle: Some(1) };
        return Ok((Some(canonical_certificate(&canon, 1, &b)), summary));
    }
    let graph = Graph::new(&canon);
    let states = 1u64 << d;
    // stamp[s] = 1 + index of the walk that first reached s; 0 = unseen.
    let mut stamp = vec![0u32; states as usize];
    let mut cycles: Vec<(u64, u32)> = Vec::new();
    let mut best_len = u64::MAX;
    for start in 0..states as u32 {
        if stamp[start as usize] != 0 {
            continue;
        }
        let walk = start + 1;
        let mut s = start;
        loop {
            stamp[s as usize] = walk;
            let Some(next) = graph.step(s) else { break };
            if stamp[next as usize] == walk {
                let len = graph.cycle_len(next);
                best_len = best_len.min(len);
                cycles.push((len, next));
                break;
            }
            if stamp[next as usize] != 0 {
                break;
            }
            s = next;
        }
    }
    let mut summary = StateGraphSummary { states, cycles: cycles.len() as u64, minimal_cycle: None };
    if cycles.is_empty() {
        return Ok((None, summary));
    }
    summary.minimal_cycle = Some(best_len);
    let best = cycles
        .iter()
        .filter(|(len, _)| *len == best_len)
        .map(|&(_, s)| {
            let b = graph.cycle_residues(s, best_len);
            canonical_certificate(&canon, best_len, &b)
        })
        .min_by(|x, y| x.residues.residues().cmp(&y.residues.residues()))
        .expect("a cycle of minimal length exists");
    debug_assert!(best.verify());
    Ok((Some(best), summary))
}

struct Graph {
    d: u32,
    /// Bit `i` set iff `D - i ∈ A`: state bit `i` is position `x - D + i`.
    mask: u32,
}

impl Graph {
    fn new(canon: &FiniteSetZ) -> Self {
        let d = canon.diameter() as u32;
        let mask = canon
            .elements()
            .iter()
            .filter(|&&a| a > 0)
            .fold(0u32, |m, &a| m | 1 << (d - a as u32));
        Graph { d, mask }
    }

    /// The forced membership bit of the next position, if coverage allows.
    fn new_bit(&self, s: u32) -> Option<u32> {
        match (s & self.mask).count_ones() {
            0 => Some(1),
            1 => Some(0),
            _ => None,
        }
    }

    fn step(&self, s: u32) -> Option<u32> {
        let b = self.new_bit(s)?;
        Some((s >> 1) | (b << (self.d - 1)))
    }

    fn cycle_len(&self, on_cycle: u32) -> u64 {
        let mut len = 1u64;
        let mut s = self.step(on_cycle).expect("cycle state is live");
        while s != on_cycle {
            s = self.step(s).expect("cycle state is live");
            len += 1;
        }
        len
    }

    /// Positions along the cycle at which a translate is placed.
    fn cycle_residues(&self, start: u32, len: u64) -> GroupSubset {
        let mut s = start;
        let mut b = Vec::new();
        for i in 0..len {
            if self.new_bit(s) == Some(1) {
                b.push(i as i64);
            }
            s = self.step(s).expect("cycle state is live");
        }
        GroupSubset::cyclic(len, &b).expect("distinct positions")
    }
}
