//! Spectral pairs, spectra by clique search, tiling complements in `Z_n^d`
//! and the small-group Fuglede experiments.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use super::butson::find_butson;
use super::matrix::{is_log_hadamard, PhaseMatrix};
use crate::error::{Error, Result};
use crate::exact::residue::root_sum_vanishes;
use crate::exact::{char_sum_is_zero, dual_zero_mask, GroupSubset};
use crate::group::{ComplementSearch, FiniteAbelianGroup};

/// `S ⊆ Z_n^d` together with a spectrum `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralPair {
    pub n: u64,
    pub d: usize,
    pub s: GroupSubset,
    pub q: GroupSubset,
}

impl SpectralPair {
    pub fn verify(&self) -> bool {
        self.s.modulus() == self.n && self.s.dim() == self.d && spectral_pair_check(&self.s, &self.q)
    }

    /// `(1/n)·QS`.
    pub fn phase_matrix(&self) -> PhaseMatrix {
        phase_matrix(&self.s, &self.q)
    }
}

fn phase_matrix(s: &GroupSubset, q: &GroupSubset) -> PhaseMatrix {
    let n = s.modulus();
    let rows = q
        .elements()
        .iter()
        .map(|qv| {
            s.elements()
                .iter()
                .map(|sv| Ratio::new((dot(qv, sv) % n) as i64, n as i64))
                .collect()
        })
        .collect();
    PhaseMatrix::from_rows(rows).expect("|S| = |Q|")
}

fn dot(x: &[u64], y: &[u64]) -> u64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn same_group(s: &GroupSubset, q: &GroupSubset) -> bool {
    s.modulus() == q.modulus() && s.dim() == q.dim()
}

fn diff(n: u64, x: &[u64], y: &[u64]) -> Vec<u64> {
    x.iter().zip(y).map(|(a, b)| (a + n - b) % n).collect()
}

/// Whether `Q` is a spectrum of `S`: `χ̂_S(q_j - q_k) = 0` for all `j ≠ k`.
/// The equivalent log-Hadamard test on `(1/n)QS` is evaluated as well and
/// must agree.
pub fn spectral_pair_check(s: &GroupSubset, q: &GroupSubset) -> bool {
    if !same_group(s, q) || s.len() != q.len() {
        return false;
    }
    let n = s.modulus();
    let qs = q.elements();
    let pairwise = (0..qs.len()).all(|j| (j + 1..qs.len()).all(|k| char_sum_is_zero(s, &diff(n, &qs[j], &qs[k]))));
    assert_eq!(pairwise, is_log_hadamard(&phase_matrix(s, q)), "zero-set and log-Hadamard tests disagree");
    pairwise
}

/// The lexicographically least `Q ∋ 0` with `|Q| = |S|` whose pairwise
/// differences all lie in `Z(χ̂_S)`.
pub fn find_spectrum(s: &GroupSubset) -> Option<GroupSubset> {
    let n = s.modulus();
    let dim = s.dim();
    let group = FiniteAbelianGroup::power(n, dim).ok()?;
    let zero = dual_zero_mask(s);
    let r = s.len();
    // Every member besides 0 is itself a difference with 0.
    let candidates: Vec<usize> = (1..group.order()).filter(|&v| zero[v]).collect();
    let mut chosen = vec![0usize];
    if !grow_clique(&group, &zero, &candidates, 0, r, &mut chosen) {
        return None;
    }
    let q = GroupSubset::from_indices(n, dim, &chosen).ok()?;
    debug_assert!(spectral_pair_check(s, &q));
    Some(q)
}

fn grow_clique(
    group: &FiniteAbelianGroup,
    zero: &[bool],
    candidates: &[usize],
    from: usize,
    r: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == r {
        return true;
    }
    for i in from..candidates.len() {
        if candidates.len() - i < r - chosen.len() {
            return false;
        }
        let v = candidates[i];
        if chosen.iter().all(|&c| zero[group.sub(v, c)]) {
            chosen.push(v);
            if grow_clique(group, zero, candidates, i + 1, r, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// A complement `P ∋ 0` with `S ⊕ P = Z_n^d`, if one exists.
pub fn tiles_group(s: &GroupSubset) -> Option<GroupSubset> {
    let group = FiniteAbelianGroup::power(s.modulus(), s.dim()).ok()?;
    if group.order() % s.len() != 0 {
        return None;
    }
    let tile = s.indices();
    let p = ComplementSearch::new(&group, &tile).ok()?.first(&[0])?;
    let mut p = p;
    p.sort_unstable();
    GroupSubset::from_indices(s.modulus(), s.dim(), &p).ok()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerSpectrumReport {
    /// `|S|²`.
    pub level: u64,
    /// Exact evaluation at every point of the dual group.
    pub exact: bool,
    /// Largest deviation of the floating-point sum from the level.
    pub max_numeric_deviation: f64,
    pub holds: bool,
}

/// Checks `Σ_{q∈Q} |χ̂_S(x - q)|² = |S|²` for every `x` in the dual group.
///
/// Exactly: `|χ̂_S(y)|² = Σ_t c(t) ζ_n^{-y·t}` with `c(t)` the number of ways
/// to write `t = s - s'`, so the identity at `x` is the vanishing of an
/// integer combination of `n`-th roots of unity.
pub fn power_spectrum_tiling_check(s: &GroupSubset, q: &GroupSubset) -> Result<PowerSpectrumReport> {
    if !spectral_pair_check(s, q) {
        return Err(Error::PreconditionFailed("Q is not a spectrum of S".into()));
    }
    let n = s.modulus();
    let dim = s.dim();
    let group = FiniteAbelianGroup::power(n, dim)?;
    let r = s.len() as i64;
    let level = (r * r) as u64;

    let mut diffs: Vec<(Vec<u64>, i64)> = Vec::new();
    {
        let mut c = vec![0i64; group.order()];
        for a in s.elements() {
            for b in s.elements() {
                c[group.encode(&diff(n, a, b))] += 1;
            }
        }
        for (i, &m) in c.iter().enumerate() {
            if m != 0 {
                diffs.push((group.decode(i), m));
            }
        }
    }
    let results: Vec<(bool, f64)> = (0..group.order())
        .into_par_iter()
        .map(|xi| {
            let x = group.decode(xi);
            let mut counts = vec![0i64; n as usize];
            let mut numeric = 0.0f64;
            for qv in q.elements() {
                let y = diff(n, &x, qv);
                let chi: Complex64 = s
                    .elements()
                    .iter()
                    .map(|sv| Complex64::from_polar(1.0, -2.0 * PI * (dot(&y, sv) % n) as f64 / n as f64))
                    .sum();
                numeric += chi.norm_sqr();
                for (t, m) in &diffs {
                    counts[((n - dot(&y, t) % n) % n) as usize] += m;
                }
            }
            counts[0] -= r * r;
            (root_sum_vanishes(n, &counts), (numeric - level as f64).abs())
        })
        .collect();
    let exact = results.iter().all(|&(e, _)| e);
    let max_numeric_deviation = results.iter().map(|&(_, d)| d).fold(0.0, f64::max);
    Ok(PowerSpectrumReport { level, exact, max_numeric_deviation, holds: exact && max_numeric_deviation <= 1e-8 })
}

/// A 6-element spectral subset of `Z_3^5` that cannot tile: the columns of
/// a dephased `BH(6, 3)` with its zero first row removed, with spectrum
/// `{0, e_1, …, e_5}`. It does not tile because `6 ∤ 3^5`.
pub fn spectral_non_tile_z3_5() -> Result<SpectralPair> {
    let bh = find_butson(6, 3, Some(1))
        .into_iter()
        .next()
        .ok_or_else(|| Error::SearchFailed("no BH(6,3) found".into()))?;
    let columns: Vec<Vec<i64>> = (0..6).map(|c| (1..6).map(|row| bh.exponents[row][c] as i64).collect()).collect();
    let s = GroupSubset::new(3, 5, columns)?;
    let mut q_elems = vec![vec![0i64; 5]];
    for i in 0..5 {
        let mut e = vec![0i64; 5];
        e[i] = 1;
        q_elems.push(e);
    }
    let q = GroupSubset::new(3, 5, q_elems)?;
    let pair = SpectralPair { n: 3, d: 5, s, q };
    if !pair.verify() {
        return Err(Error::SearchFailed("BH(6,3) columns do not give a spectral pair".into()));
    }
    Ok(pair)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FugledeSweepReport {
    pub max_n: u64,
    pub sets_checked: u64,
    pub tiles: u64,
    pub spectral: u64,
    /// `(n, S)` where tiling and spectrality disagree.
    pub counterexamples: Vec<(u64, Vec<u64>)>,
}

/// For every `n ≤ max_n` and every nonempty `S ⊆ Z_n`, compares "S tiles
/// `Z_n`" with "S has a spectrum".
pub fn fuglede_sweep(max_n: u64) -> FugledeSweepReport {
    assert!(max_n <= 24, "the sweep is exhaustive over subsets");
    let rows: Vec<(u64, Vec<u64>, bool, bool)> = (1..=max_n)
        .flat_map(|n| (1u64..(1 << n)).map(move |bits| (n, bits)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(n, bits)| {
            let res: Vec<i64> = (0..n as i64).filter(|&j| bits >> j & 1 == 1).collect();
            let s = GroupSubset::cyclic(n, &res).expect("distinct residues");
            let t = tiles_group(&s).is_some();
            let sp = find_spectrum(&s).is_some();
            (n, s.residues(), t, sp)
        })
        .collect();
    FugledeSweepReport {
        max_n,
        sets_checked: rows.len() as u64,
        tiles: rows.iter().filter(|r| r.2).count() as u64,
        spectral: rows.iter().filter(|r| r.3).count() as u64,
        counterexamples: rows.into_iter().filter(|r| r.2 != r.3).map(|r| (r.0, r.1)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{fourier_matrix, is_complex_hadamard, ComplexMatrix, DEFAULT_TOLERANCE};

    fn set(n: u64, r: &[i64]) -> GroupSubset {
        GroupSubset::cyclic(n, r).unwrap()
    }

    #[test]
    fn pair_checks() {
        let (s, q) = (set(6, &[0, 1, 2]), set(6, &[0, 2, 4]));
        assert!(spectral_pair_check(&s, &q));
        let pair = SpectralPair { n: 6, d: 1, s, q };
        assert_eq!(pair.phase_matrix(), fourier_matrix(3).to_phases());
        assert!(spectral_pair_check(&set(4, &[0, 1]), &set(4, &[0, 2])));
        assert!(!spectral_pair_check(&set(4, &[0, 1]), &set(4, &[0, 1])));
    }

    #[test]
    fn spectra() {
        assert_eq!(find_spectrum(&set(4, &[0, 1])), Some(set(4, &[0, 2])));
        assert_eq!(find_spectrum(&set(6, &[0, 1, 2])), Some(set(6, &[0, 2, 4])));
        assert_eq!(find_spectrum(&set(6, &[0, 1, 3])), None);
    }

    #[test]
    fn complements_in_products() {
        assert_eq!(tiles_group(&set(6, &[0, 1, 2])), Some(set(6, &[0, 3])));
        let s = GroupSubset::new(2, 2, vec![vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(tiles_group(&s), Some(GroupSubset::new(2, 2, vec![vec![0, 0], vec![0, 1]]).unwrap()));
        assert_eq!(tiles_group(&set(6, &[0, 1, 3])), None);
    }

    #[test]
    fn power_spectrum() {
        let rep = power_spectrum_tiling_check(&set(6, &[0, 1, 2]), &set(6, &[0, 2, 4])).unwrap();
        assert_eq!(rep.level, 9);
        assert!(rep.exact && rep.holds);
        let full = set(4, &[0, 1, 2, 3]);
        let rep = power_spectrum_tiling_check(&full, &full).unwrap();
        assert_eq!(rep.level, 16);
        assert!(rep.holds);
        assert!(matches!(
            power_spectrum_tiling_check(&set(4, &[0, 1]), &set(4, &[0, 1])),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn non_tile_in_z3_5() {
        let pair = spectral_non_tile_z3_5().unwrap();
        assert_eq!((pair.s.len(), pair.n, pair.d), (6, 3, 5));
        assert!(pair.verify());
        assert!(tiles_group(&pair.s).is_none());
        let rep = power_spectrum_tiling_check(&pair.s, &pair.q).unwrap();
        assert_eq!(rep.level, 36);
        assert!(rep.holds);
    }

    #[test]
    fn spectral_pairs_give_unitary_matrices() {
        let pair = spectral_non_tile_z3_5().unwrap();
        let u: ComplexMatrix = pair.phase_matrix().exp().scale(1.0 / (6f64).sqrt());
        assert!(u.gram().max_abs_diff(&ComplexMatrix::identity(6)) <= 1e-8);
        assert!(is_complex_hadamard(&pair.phase_matrix().exp(), DEFAULT_TOLERANCE));
    }

    #[test]
    fn small_sweep_has_no_exceptions() {
        let rep = fuglede_sweep(8);
        assert!(rep.counterexamples.is_empty());
        assert_eq!(rep.sets_checked, (1..=8u64).map(|n| (1u64 << n) - 1).sum::<u64>());
    }
}
