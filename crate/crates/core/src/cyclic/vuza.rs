//! Enumeration of tilings of `Z_n` and of Vuza canons (tilings whose two
//! factors are both aperiodic).
//!
//! Tilings are enumerated through the smaller factor `X` (`|X|² ≤ n`), which
//! is pinned to its lexicographically least translate containing 0. Two
//! necessary conditions cut the candidates down before any complement search:
//!
//! * for every prime `p`, exactly `v_p(|X|)` of `Φ_p, Φ_{p²}, …, Φ_{p^{v_p(n)}}`
//!   divide `X(x)`. Each of them divides `X(x)` or `Y(x)`, and a product of
//!   distinct `Φ_{p^a}` dividing `X(x)` contributes `p^a`-free factors of `p` to
//!   `X(1) = |X|`, so neither side can carry more than its own `p`-valuation;
//! * when `v_p(|X|) = v_p(n) = v`, all of them divide `X(x)`, so `X` is
//!   equidistributed modulo `p^v`, which bounds partial candidates.
//!
//! Pairs are reported with both factors canonical and in graded
//! lexicographic order: by `|A|`, then `A`, then `B`. The factor swap is not
//! quotiented out, so `(A, B)` and `(B, A)` are both reported.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_translate, find_complements, is_aperiodic_mask, membership, CyclicTiling};
use crate::exact::number::{divisors, factorize, valuation};
use crate::exact::GroupSubset;

/// Limit applied to Vuza enumeration for `n ≥ 108` unless full enumeration
/// is requested.
pub const DEFAULT_LARGE_N_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VuzaOptions {
    /// Maximum number of canons to return.
    pub limit: Option<usize>,
    /// Lift the default limit for large `n`.
    pub full: bool,
}

/// Vuza canons of `Z_n` with `0 ∈ A`, `0 ∈ B`, up to translation of each
/// factor, in graded lexicographic order. A tiling with a one-element factor
/// is never a canon, which matters only for `n = 1`.
pub fn enumerate_vuza(n: u64, limit: Option<usize>) -> Vec<CyclicTiling> {
    enumerate_vuza_with(n, VuzaOptions { limit, full: false })
}

pub fn enumerate_vuza_with(n: u64, options: VuzaOptions) -> Vec<CyclicTiling> {
    let limit = options.limit.or(if !options.full && n >= 108 {
        Some(DEFAULT_LARGE_N_LIMIT)
    } else {
        None
    });
    enumerate(n, true, limit)
}

/// Every tiling of `Z_n` with canonical factors, in graded lexicographic
/// order.
pub fn enumerate_tilings(n: u64) -> Vec<CyclicTiling> {
    enumerate(n, false, None)
}

fn enumerate(n: u64, aperiodic_only: bool, limit: Option<usize>) -> Vec<CyclicTiling> {
    assert!(n >= 1);
    if limit == Some(0) || (aperiodic_only && n == 1) {
        return Vec::new();
    }
    let mut out: Vec<CyclicTiling> = Vec::new();
    let mut swapped: Vec<CyclicTiling> = Vec::new();
    let chunk = (rayon::current_num_threads() * 2).max(1);
    for k in divisors(n).into_iter().filter(|&k| k * k <= n) {
        if aperiodic_only && k == 1 {
            continue;
        }
        let plan = Plan::new(n, k);
        let branches: Vec<Option<usize>> = if k == 1 {
            vec![None]
        } else {
            (1..=(n - k + 1) as usize).map(Some).collect()
        };
        for group in branches.chunks(chunk) {
            let results: Vec<Vec<CyclicTiling>> = group
                .par_iter()
                .map(|&second| plan.branch(second, aperiodic_only))
                .collect();
            for t in results.into_iter().flatten() {
                if t.a.len() != t.b.len() {
                    swapped.push(t.swapped());
                }
                out.push(t);
                if limit.is_some_and(|l| out.len() >= l) {
                    return out;
                }
            }
        }
    }
    swapped.sort_by_key(order_key);
    out.extend(swapped);
    if let Some(l) = limit {
        out.truncate(l);
    }
    out
}

fn order_key(t: &CyclicTiling) -> (usize, Vec<u64>, Vec<u64>) {
    (t.a.len(), t.a.residues(), t.b.residues())
}

/// Search parameters for small factors of one size `k`.
struct Plan {
    n: u64,
    k: usize,
    /// Prime powers `q = p^a` dividing `n`, `a ≥ 1`, with their prime.
    powers: Vec<(usize, usize)>,
    /// Per prime: indices into `powers` and the required count `v_p(k)`.
    primes: Vec<(Vec<usize>, u32)>,
    /// `(index into powers, cap)` for equidistributed residues.
    caps: Vec<(usize, usize)>,
}

impl Plan {
    fn new(n: u64, k: u64) -> Self {
        let mut powers = Vec::new();
        let mut primes = Vec::new();
        let mut caps = Vec::new();
        for (p, v) in factorize(n) {
            let mut idx = Vec::new();
            let mut q = 1u64;
            for _ in 0..v {
                q *= p;
                idx.push(powers.len());
                powers.push((q as usize, p as usize));
            }
            let need = valuation(k, p);
            if need == v {
                caps.push((*idx.last().expect("v ≥ 1"), (k / q) as usize));
            }
            primes.push((idx, need));
        }
        Plan { n, k: k as usize, powers, primes, caps }
    }

    fn branch(&self, second: Option<usize>, aperiodic_only: bool) -> Vec<CyclicTiling> {
        let mut dfs = Dfs {
            plan: self,
            elems: Vec::with_capacity(self.k),
            residue_counts: self.powers.iter().map(|&(q, _)| vec![0usize; q]).collect(),
            aperiodic_only,
            out: Vec::new(),
        };
        if !dfs.push(0) {
            return Vec::new();
        }
        match second {
            None => dfs.grow(1),
            Some(s) => {
                if dfs.push(s) {
                    dfs.grow(s + 1);
                }
            }
        }
        dfs.out
    }
}

struct Dfs<'p> {
    plan: &'p Plan,
    elems: Vec<usize>,
    residue_counts: Vec<Vec<usize>>,
    aperiodic_only: bool,
    out: Vec<CyclicTiling>,
}

impl Dfs<'_> {
    /// Adds `x`; returns false (leaving state unchanged) if a cap is hit.
    fn push(&mut self, x: usize) -> bool {
        for (i, &(q, _)) in self.plan.powers.iter().enumerate() {
            self.residue_counts[i][x % q] += 1;
        }
        self.elems.push(x);
        let ok = self
            .plan
            .caps
            .iter()
            .all(|&(i, cap)| self.residue_counts[i][x % self.plan.powers[i].0] <= cap);
        if !ok {
            self.pop();
        }
        ok
    }

    fn pop(&mut self) {
        let x = self.elems.pop().expect("nonempty");
        for (i, &(q, _)) in self.plan.powers.iter().enumerate() {
            self.residue_counts[i][x % q] -= 1;
        }
    }

    fn grow(&mut self, from: usize) {
        let n = self.plan.n as usize;
        let remaining = self.plan.k - self.elems.len();
        if remaining == 0 {
            self.leaf();
            return;
        }
        for x in from..=(n - remaining) {
            if self.push(x) {
                self.grow(x + 1);
                self.pop();
            }
        }
    }

    fn balanced(&self, i: usize) -> bool {
        let (q, p) = self.plan.powers[i];
        let step = q / p;
        let c = &self.residue_counts[i];
        (0..step).all(|r| (1..p).all(|j| c[r + j * step] == c[r]))
    }

    fn leaf(&mut self) {
        let plan = self.plan;
        let filter_ok = plan.primes.iter().all(|(idx, need)| {
            idx.iter().filter(|&&i| self.balanced(i)).count() as u32 == *need
        });
        if !filter_ok {
            return;
        }
        let n = plan.n;
        let signed: Vec<i64> = self.elems.iter().map(|&x| x as i64).collect();
        let x = GroupSubset::cyclic(n, &signed).expect("distinct residues");
        if canonical_translate(&x) != x {
            return;
        }
        if self.aperiodic_only && !is_aperiodic_mask(&membership(&x)) {
            return;
        }
        let complements = find_complements(&x, None).expect("|X| divides n");
        let mut classes = BTreeSet::new();
        for y in complements {
            let y = canonical_translate(&y);
            if self.aperiodic_only && (y.len() < 2 || !is_aperiodic_mask(&membership(&y))) {
                continue;
            }
            classes.insert(y.residues());
        }
        for y in classes {
            let signed: Vec<i64> = y.iter().map(|&r| r as i64).collect();
            let b = GroupSubset::cyclic(n, &signed).expect("distinct residues");
            self.out.push(CyclicTiling { n, a: x.clone(), b });
        }
    }
}
