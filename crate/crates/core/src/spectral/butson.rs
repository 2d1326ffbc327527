//! Butson-type Hadamard matrices `BH(k, q)`: complex Hadamard matrices of
//! size `k` whose entries are `q`-th roots of unity.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::matrix::{ComplexMatrix, PhaseMatrix};
use crate::exact::residue::root_sum_vanishes;

/// Entry `(j, m)` is `exp(2πi·exponents[j][m] / q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ButsonMatrix {
    pub k: usize,
    pub q: u64,
    pub exponents: Vec<Vec<u64>>,
}

impl ButsonMatrix {
    pub fn to_complex(&self) -> ComplexMatrix {
        let rows = self
            .exponents
            .iter()
            .map(|r| r.iter().map(|&e| Complex64::from_polar(1.0, 2.0 * PI * e as f64 / self.q as f64)).collect())
            .collect();
        ComplexMatrix::from_rows(rows).expect("square by construction")
    }

    pub fn to_phases(&self) -> PhaseMatrix {
        PhaseMatrix::from_exponents(self.q, &self.exponents).expect("square by construction")
    }

    /// Exact row orthogonality.
    pub fn verify(&self) -> bool {
        self.exponents.len() == self.k
            && self.exponents.iter().all(|r| r.len() == self.k && r.iter().all(|&e| e < self.q))
            && (0..self.k).all(|i| (i + 1..self.k).all(|j| rows_orthogonal(self.q, &self.exponents[i], &self.exponents[j])))
    }
}

fn rows_orthogonal(q: u64, u: &[u64], v: &[u64]) -> bool {
    let mut counts = vec![0i64; q as usize];
    for (&a, &b) in u.iter().zip(v) {
        counts[((a + q - b) % q) as usize] += 1;
    }
    root_sum_vanishes(q, &counts)
}

/// `F_k`: exponent `j·m mod k`.
pub fn fourier_matrix(k: usize) -> ButsonMatrix {
    assert!(k >= 1);
    let exponents = (0..k).map(|j| (0..k).map(|m| ((j * m) % k) as u64).collect()).collect();
    ButsonMatrix { k, q: k as u64, exponents }
}

/// Dephased `BH(k, q)` matrices (first row and column zero, remaining rows
/// in increasing lexicographic order), in lexicographic order of their row
/// lists, truncated at `limit`.
///
/// Rows other than the first are vectors in `Z_q^k` starting with 0 whose
/// roots sum to zero (orthogonality to the first row); the search picks
/// `k - 1` of them, pairwise orthogonal, as a clique.
pub fn find_butson(k: usize, q: u64, limit: Option<usize>) -> Vec<ButsonMatrix> {
    assert!(k >= 1 && q >= 1);
    if limit == Some(0) {
        return Vec::new();
    }
    let zero_row = vec![0u64; k];
    if k == 1 {
        return vec![ButsonMatrix { k, q, exponents: vec![zero_row] }];
    }
    let candidates = vanishing_rows(k, q);
    let adjacent: Vec<Vec<bool>> = candidates
        .iter()
        .map(|u| candidates.iter().map(|v| rows_orthogonal(q, u, v)).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    clique(&adjacent, k - 1, 0, &mut chosen, &mut |rows| {
        let mut exponents = vec![zero_row.clone()];
        exponents.extend(rows.iter().map(|&i| candidates[i].clone()));
        out.push(ButsonMatrix { k, q, exponents });
        limit.is_some_and(|l| out.len() >= l)
    });
    out
}

/// Vectors in `Z_q^k` with first entry 0 whose roots of unity sum to zero,
/// in lexicographic order.
fn vanishing_rows(k: usize, q: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut row = vec![0u64; k];
    let mut counts = vec![0i64; q as usize];
    counts[0] = 1;
    fn go(pos: usize, row: &mut Vec<u64>, counts: &mut Vec<i64>, q: u64, out: &mut Vec<Vec<u64>>) {
        if pos == row.len() {
            if root_sum_vanishes(q, counts) {
                out.push(row.clone());
            }
            return;
        }
        for e in 0..q {
            row[pos] = e;
            counts[e as usize] += 1;
            go(pos + 1, row, counts, q, out);
            counts[e as usize] -= 1;
        }
    }
    go(1, &mut row, &mut counts, q, &mut out);
    out
}

/// Cliques of size `size` with increasing vertices; `found` returns true to
/// stop. Returns true if stopped.
fn clique(adj: &[Vec<bool>], size: usize, from: usize, chosen: &mut Vec<usize>, found: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if chosen.len() == size {
        return found(chosen);
    }
    for v in from..adj.len() {
        if adj.len() - v < size - chosen.len() {
            break;
        }
        if chosen.iter().all(|&c| adj[c][v]) {
            chosen.push(v);
            let stop = clique(adj, size, v + 1, chosen, found);
            chosen.pop();
            if stop {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::matrix::{is_complex_hadamard, is_log_hadamard, DEFAULT_TOLERANCE};

    #[test]
    fn fourier_matrices() {
        assert_eq!(fourier_matrix(1).exponents, vec![vec![0]]);
        assert_eq!(fourier_matrix(2).exponents, vec![vec![0, 0], vec![0, 1]]);
        for k in 1..=16 {
            let f = fourier_matrix(k);
            assert!(is_complex_hadamard(&f.to_complex(), DEFAULT_TOLERANCE));
            assert!(f.verify());
            assert!(is_log_hadamard(&f.to_phases()));
        }
    }

    #[test]
    fn butson_searches() {
        assert_eq!(find_butson(2, 2, None), vec![fourier_matrix(2)]);
        assert!(find_butson(3, 2, None).is_empty());
        let bh63 = find_butson(6, 3, None);
        assert!(!bh63.is_empty());
        for m in &bh63 {
            assert!(m.verify());
            assert!(is_complex_hadamard(&m.to_complex(), DEFAULT_TOLERANCE));
        }
        assert_eq!(find_butson(6, 3, Some(1)), bh63[..1].to_vec());
        // Real Hadamard matrices of order 4 exist; dephased ones are unique
        // up to row order.
        assert_eq!(find_butson(4, 2, None).len(), 1);
    }

    #[test]
    fn fourier_3_appears_in_its_search() {
        let found = find_butson(3, 3, None);
        assert!(found.contains(&fourier_matrix(3)));
    }
}
