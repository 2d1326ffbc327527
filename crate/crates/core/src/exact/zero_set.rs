//! Exact zero sets of Fourier transforms of indicator functions on `Z_n^d`.

use num_integer::Integer;

use super::cyclotomic::phi_divides_counts;
use super::number::divisors;
use super::sets::{decode, GroupSubset};

/// `{k ∈ Z_n : χ̂_A(k) = 0}` for `A ⊆ Z_n`, ascending.
///
/// `χ̂_A(k) = A(ζ_n^{-k})` and `ζ_n^{-k}` is a primitive `n/gcd(k,n)`-th
/// root of unity, so the zero set is the union of the classes
/// `{k : n/gcd(k,n) = m}` over the divisors `m | n` with `Φ_m | A(x)`.
///
/// # Panics
/// If `A` is not a subset of a cyclic group (`dim != 1`).
pub fn zero_set_zn(a: &GroupSubset) -> Vec<u64> {
    let n = a.modulus();
    let mask = zero_mask(a);
    (0..n).filter(|&k| mask[k as usize]).collect()
}

/// Zero indicator over `Z_n` for a one-dimensional subset, indexed by `k`.
pub fn zero_mask(a: &GroupSubset) -> Vec<bool> {
    assert_eq!(a.dim(), 1, "zero_set_zn needs a subset of Z_n");
    let n = a.modulus();
    let mut counts = vec![0i64; n as usize];
    for r in a.residues() {
        counts[r as usize] = 1;
    }
    let vanishing: Vec<u64> = divisors(n)
        .into_iter()
        .filter(|&m| m > 1 && phi_divides_counts(m, &counts))
        .collect();
    (0..n)
        .map(|k| {
            let m = n / k.gcd(&n);
            vanishing.binary_search(&m).is_ok()
        })
        .collect()
}

/// Exact test of `Σ_{s∈S} ζ_n^{-q·s} = 0`.
///
/// The exponents are collected into a count vector over `Z_n`, which is then
/// reduced modulo `Φ_n`.
pub fn char_sum_is_zero(s: &GroupSubset, q: &[u64]) -> bool {
    assert_eq!(q.len(), s.dim(), "dual vector has the wrong dimension");
    let n = s.modulus();
    let counts = exponent_counts(s, q);
    if n == 1 {
        return counts[0] == 0;
    }
    phi_divides_counts(n, &counts)
}

/// Multiplicities of `-q·s mod n` over `s ∈ S`.
pub(crate) fn exponent_counts(s: &GroupSubset, q: &[u64]) -> Vec<i64> {
    let n = s.modulus();
    let mut counts = vec![0i64; n as usize];
    for e in s.elements() {
        let dot = e.iter().zip(q).fold(0u64, |acc, (&x, &y)| (acc + x * y) % n);
        counts[((n - dot) % n) as usize] += 1;
    }
    counts
}

/// Zero indicator of `χ̂_S` over the whole dual group `Z_n^d`, indexed by
/// mixed-radix index (first coordinate most significant).
///
/// `χ̂_S(uq)` is a Galois conjugate of `χ̂_S(q)` for every unit `u`, so only
/// one representative per orbit under the unit group is evaluated.
pub fn dual_zero_mask(s: &GroupSubset) -> Vec<bool> {
    let n = s.modulus();
    let dim = s.dim();
    let size = s.group_order() as usize;
    let units: Vec<u64> = (1..n.max(2)).filter(|u| u.gcd(&n) == 1).collect();
    let mut known: Vec<Option<bool>> = vec![None; size];
    for idx in 0..size {
        if known[idx].is_some() {
            continue;
        }
        let q = decode(n, dim, idx);
        let zero = char_sum_is_zero(s, &q);
        for &u in &units {
            let uq: Vec<u64> = q.iter().map(|&c| c * u % n).collect();
            known[super::sets::encode(n, &uq)] = Some(zero);
        }
        known[idx] = Some(zero);
    }
    known.into_iter().map(|z| z.unwrap_or(false)).collect()
}

/// `Z(χ̂_S)` as coordinate vectors, in lexicographic order.
pub fn zero_set(s: &GroupSubset) -> Vec<Vec<u64>> {
    dual_zero_mask(s)
        .into_iter()
        .enumerate()
        .filter(|(_, z)| *z)
        .map(|(i, _)| decode(s.modulus(), s.dim(), i))
        .collect()
}
