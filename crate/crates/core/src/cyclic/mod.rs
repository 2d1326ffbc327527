//! Tilings of the cyclic group `Z_n`.

mod complements;
mod good;
mod vuza;

use serde::Serialize;

use crate::exact::number::factorize;
use crate::exact::zero_set::zero_mask;
use crate::exact::GroupSubset;

pub use complements::find_complements;
pub use good::{is_good_group, GoodGroupPattern, GoodGroupVerdict};
pub use vuza::{
    enumerate_tilings, enumerate_vuza, enumerate_vuza_with, VuzaOptions, DEFAULT_LARGE_N_LIMIT,
};

/// A factorization `Z_n = A ⊕ B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicTiling {
    pub n: u64,
    pub a: GroupSubset,
    pub b: GroupSubset,
}

impl CyclicTiling {
    pub fn verify(&self) -> bool {
        self.a.modulus() == self.n && verify_tiling_zn(&self.a, &self.b)
    }

    /// The same tiling with the factors swapped.
    pub fn swapped(&self) -> CyclicTiling {
        CyclicTiling { n: self.n, a: self.b.clone(), b: self.a.clone() }
    }
}

/// Whether every element of `Z_n` is uniquely `a + b` with `a ∈ A`, `b ∈ B`.
///
/// Both sets must live in the same `Z_n`. When the direct-sum check passes,
/// the Fourier condition `Z_n \ {0} ⊆ Z(χ̂_A) ∪ Z(χ̂_B)` is evaluated exactly as
/// well; a disagreement would be an internal error.
pub fn verify_tiling_zn(a: &GroupSubset, b: &GroupSubset) -> bool {
    if a.dim() != 1 || b.dim() != 1 || a.modulus() != b.modulus() {
        return false;
    }
    let n = a.modulus();
    if (a.len() as u64) * (b.len() as u64) != n {
        return false;
    }
    let mut hit = vec![false; n as usize];
    for x in a.residues() {
        for y in b.residues() {
            if std::mem::replace(&mut hit[((x + y) % n) as usize], true) {
                return false;
            }
        }
    }
    let (za, zb) = (zero_mask(a), zero_mask(b));
    assert!(
        (1..n as usize).all(|k| za[k] || zb[k]),
        "direct sum without the Fourier condition: {a:?} {b:?}"
    );
    true
}

/// The least `k` with `0 < k < n` and `A + k = A`, if any. Such a `k`
/// always divides `n`.
pub fn is_periodic_subset(a: &GroupSubset) -> Option<u64> {
    let n = a.modulus();
    let member = membership(a);
    let k = (1..n).find(|&k| shifts_onto_itself(&member, k as usize))?;
    assert_eq!(n % k, 0, "a period of a subset of Z_n divides n");
    Some(k)
}

pub(crate) fn membership(a: &GroupSubset) -> Vec<bool> {
    let mut member = vec![false; a.modulus() as usize];
    for r in a.residues() {
        member[r as usize] = true;
    }
    member
}

fn shifts_onto_itself(member: &[bool], k: usize) -> bool {
    let n = member.len();
    (0..n).all(|x| !member[x] || member[(x + k) % n])
}

/// Aperiodicity via the maximal proper periods `n/p`: every period divides
/// `n`, and so divides some `n/p`.
pub(crate) fn is_aperiodic_mask(member: &[bool]) -> bool {
    let n = member.len() as u64;
    factorize(n)
        .into_iter()
        .all(|(p, _)| !shifts_onto_itself(member, (n / p) as usize))
}

/// The lexicographically least translate of `A` containing 0.
pub fn canonical_translate(a: &GroupSubset) -> GroupSubset {
    let n = a.modulus();
    let res = a.residues();
    let best = res
        .iter()
        .map(|&t| {
            let mut v: Vec<u64> = res.iter().map(|&x| (x + n - t) % n).collect();
            v.sort_unstable();
            v
        })
        .min()
        .expect("nonempty");
    let signed: Vec<i64> = best.iter().map(|&x| x as i64).collect();
    GroupSubset::cyclic(n, &signed).expect("translate of a valid set")
}
