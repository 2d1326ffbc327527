//! Subset enumeration and floating-point Fourier oracles for `Z_n`.

use std::f64::consts::PI;

use num_complex::Complex64;

pub const DFT_TOL: f64 = 1e-9;

pub fn subsets(n: u64) -> impl Iterator<Item = Vec<u64>> {
    (1u64..1 << n).map(move |bits| (0..n).filter(|&i| bits >> i & 1 == 1).collect())
}

/// All `B ∋ 0` with `A ⊕ B = Z_n`, lexicographically. Plain backtracking:
/// the least uncovered `x` must be `a + b` for some `a ∈ A`.
pub fn complements(n: u64, a: &[u64]) -> Vec<Vec<u64>> {
    if n % a.len() as u64 != 0 {
        return Vec::new();
    }
    let mut covered = vec![false; n as usize];
    let mut b = Vec::new();
    let mut out = Vec::new();
    extend(n, a, &mut covered, &mut b, &mut out);
    let mut out: Vec<Vec<u64>> = out
        .into_iter()
        .filter_map(|mut b: Vec<u64>| {
            b.sort_unstable();
            (b[0] == 0).then_some(b)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn extend(n: u64, a: &[u64], covered: &mut [bool], b: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let Some(x) = covered.iter().position(|&c| !c) else {
        out.push(b.clone());
        return;
    };
    for &ai in a {
        let t = (x as u64 + n - ai % n) % n;
        let cells: Vec<usize> = a.iter().map(|&aj| ((aj + t) % n) as usize).collect();
        if cells.iter().all(|&c| !covered[c]) {
            cells.iter().for_each(|&c| covered[c] = true);
            b.push(t);
            extend(n, a, covered, b, out);
            b.pop();
            cells.iter().for_each(|&c| covered[c] = false);
        }
    }
}

pub fn direct_sum(n: u64, a: &[u64], b: &[u64]) -> bool {
    let mut hit = vec![false; n as usize];
    for &x in a {
        for &y in b {
            let s = ((x + y) % n) as usize;
            if hit[s] {
                return false;
            }
            hit[s] = true;
        }
    }
    hit.iter().all(|&h| h)
}

pub fn char_sum(n: u64, s: &[u64], q: u64) -> Complex64 {
    s.iter().map(|&x| Complex64::from_polar(1.0, -2.0 * PI * ((x * q) % n) as f64 / n as f64)).sum()
}

/// Whether some `Q ∋ 0`, `|Q| = |S|`, has all differences in the numeric zero set.
pub fn has_spectrum(n: u64, s: &[u64]) -> bool {
    let zero: Vec<bool> = (0..n).map(|q| char_sum(n, s, q).norm() < DFT_TOL).collect();
    subsets(n)
        .filter(|q| q.len() == s.len() && q[0] == 0)
        .any(|q| q.iter().all(|&x| q.iter().all(|&y| x == y || zero[((x + n - y) % n) as usize])))
}
