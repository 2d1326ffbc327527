//! Finite abelian groups `Z_{m_1} × … × Z_{m_d}` and exact-cover search for
//! tiling complements in them.
//!
//! Elements are addressed by mixed-radix index with the first coordinate
//! most significant, matching [`crate::exact::sets::encode`].

use std::ops::ControlFlow;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
    order: usize,
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidInput("group needs at least one factor".into()));
        }
        if moduli.contains(&0) {
            return Err(Error::ZeroModulus);
        }
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize))
            .ok_or_else(|| Error::InvalidInput("group order overflows".into()))?;
        Ok(FiniteAbelianGroup { moduli, order })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    /// `Z_n^d`.
    pub fn power(n: u64, dim: usize) -> Result<Self> {
        Self::new(vec![n; dim])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn encode(&self, v: &[u64]) -> usize {
        v.iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + (c % m) as usize)
    }

    pub fn decode(&self, mut index: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.moduli.len()];
        for (slot, &m) in v.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % m as usize) as u64;
            index /= m as usize;
        }
        v
    }

    /// Index of a vector with arbitrary integer coordinates.
    pub fn encode_signed(&self, v: &[i64]) -> usize {
        v.iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c.rem_euclid(m as i64) as usize)
    }

    fn combine(&self, mut x: usize, mut y: usize, negate_y: bool) -> usize {
        if let [m] = self.moduli[..] {
            let m = m as usize;
            return if negate_y { (x + m - y) % m } else { (x + y) % m };
        }
        let mut out = 0usize;
        let mut place = 1usize;
        for &m in self.moduli.iter().rev() {
            let m = m as usize;
            let (a, b) = (x % m, y % m);
            let digit = if negate_y { (a + m - b) % m } else { (a + b) % m };
            out += digit * place;
            place *= m;
            x /= m;
            y /= m;
        }
        out
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.combine(x, y, false)
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.combine(x, y, true)
    }

    pub fn neg(&self, x: usize) -> usize {
        self.combine(0, x, true)
    }

    /// Whether `A ⊕ B = G`: every element has exactly one representation.
    pub fn is_direct_sum_cover(&self, a: &[usize], b: &[usize]) -> bool {
        if a.len() * b.len() != self.order {
            return false;
        }
        let mut seen = vec![false; self.order];
        for &x in a {
            for &y in b {
                let s = self.add(x, y);
                if std::mem::replace(&mut seen[s], true) {
                    return false;
                }
            }
        }
        true
    }
}

/// How a complement search ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchEnd {
    /// Every branch was explored.
    Exhausted,
    /// The visitor asked to stop.
    Stopped,
    /// The node budget ran out before the tree was exhausted.
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub end: SearchEnd,
    pub nodes: u64,
}

/// Exact-cover search for sets `B ⊇ prefix` with `A ⊕ B = G`.
///
/// The search always covers the least uncovered element `x`, trying
/// `b = x - a` for each `a ∈ A` in the given order, so every complement
/// containing `prefix` is produced exactly once. `prune` sees the partial `B`
/// after each placement and may reject it; `visit` receives each complete
/// `B` in placement order.
pub struct ComplementSearch<'g> {
    group: &'g FiniteAbelianGroup,
    tile: Vec<usize>,
    budget: Option<u64>,
}

impl<'g> ComplementSearch<'g> {
    pub fn new(group: &'g FiniteAbelianGroup, tile: &[usize]) -> Result<Self> {
        if tile.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut sorted = tile.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != tile.len() {
            return Err(Error::DuplicateElement(format!("{tile:?}")));
        }
        if tile.iter().any(|&t| t >= group.order()) {
            return Err(Error::InvalidInput("tile element outside the group".into()));
        }
        Ok(ComplementSearch { group, tile: tile.to_vec(), budget: None })
    }

    /// Caps the number of placements tried.
    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.budget = Some(nodes);
        self
    }

    pub fn run<P, V>(&self, prefix: &[usize], mut prune: P, mut visit: V) -> SearchStats
    where
        P: FnMut(&[usize]) -> bool,
        V: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let order = self.group.order();
        let mut stats = SearchStats { end: SearchEnd::Exhausted, nodes: 0 };
        if order % self.tile.len() != 0 {
            return stats;
        }
        let mut covered = vec![false; order];
        let mut chosen = Vec::with_capacity(order / self.tile.len());
        for &b in prefix {
            if !self.place(&mut covered, b) {
                return stats;
            }
            chosen.push(b);
        }
        if !prune(&chosen) {
            return stats;
        }
        // Precomputed translates: cells[b] lists A + b.
        let cells: Vec<Vec<usize>> = (0..order)
            .map(|b| self.tile.iter().map(|&a| self.group.add(a, b)).collect())
            .collect();
        let mut state = State {
            cells: &cells,
            tile: &self.tile,
            group: self.group,
            covered,
            chosen,
            budget: self.budget,
            stats: &mut stats,
        };
        if let ControlFlow::Break(end) = state.descend(0, &mut prune, &mut visit) {
            stats.end = end;
        }
        stats
    }

    fn place(&self, covered: &mut [bool], b: usize) -> bool {
        let cells: Vec<usize> = self.tile.iter().map(|&a| self.group.add(a, b)).collect();
        if cells.iter().any(|&c| covered[c]) {
            return false;
        }
        for c in cells {
            covered[c] = true;
        }
        true
    }

    /// First complement containing `prefix` in search order.
    pub fn first(&self, prefix: &[usize]) -> Option<Vec<usize>> {
        let mut found = None;
        self.run(prefix, |_| true, |b| {
            found = Some(b.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    /// All complements containing `prefix`, each sorted, in ascending
    /// lexicographic order.
    pub fn all(&self, prefix: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.run(prefix, |_| true, |b| {
            let mut v = b.to_vec();
            v.sort_unstable();
            out.push(v);
            ControlFlow::Continue(())
        });
        out.sort();
        out
    }
}

struct State<'a> {
    cells: &'a [Vec<usize>],
    tile: &'a [usize],
    group: &'a FiniteAbelianGroup,
    covered: Vec<bool>,
    chosen: Vec<usize>,
    budget: Option<u64>,
    stats: &'a mut SearchStats,
}

impl State<'_> {
    fn descend<P, V>(&mut self, from: usize, prune: &mut P, visit: &mut V) -> ControlFlow<SearchEnd>
    where
        P: FnMut(&[usize]) -> bool,
        V: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let Some(x) = (from..self.covered.len()).find(|&i| !self.covered[i]) else {
            return match visit(&self.chosen) {
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
                ControlFlow::Break(()) => ControlFlow::Break(SearchEnd::Stopped),
            };
        };
        for &a in self.tile {
            let b = self.group.sub(x, a);
            let cells = &self.cells[b];
            if cells.iter().any(|&c| self.covered[c]) {
                continue;
            }
            self.stats.nodes += 1;
            if self.budget.is_some_and(|cap| self.stats.nodes > cap) {
                return ControlFlow::Break(SearchEnd::BudgetExceeded);
            }
            for &c in cells {
                self.covered[c] = true;
            }
            self.chosen.push(b);
            let flow = if prune(&self.chosen) {
                self.descend(x + 1, prune, visit)
            } else {
                ControlFlow::Continue(())
            };
            self.chosen.pop();
            for &c in cells {
                self.covered[c] = false;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}
