//! Level-one tilings of `Z` by a finite tile `A`.
//!
//! Every such tiling is periodic, so a tiling is certified by a period `M`
//! and the residues `B ⊆ Z_M` of the translation set, with `A ⊕ B = Z_M`.
//! Two independent deciders are provided: a walk on the graph of window
//! states ([`decide_tiles_line_stategraph`]) and a search guided by the
//! cyclotomic divisors of the mask polynomial
//! ([`decide_tiles_line_cyclotomic`]). Both report the lexicographically
//! least `B ∋ 0` among tilings of minimal period.

mod cyclotomic;
mod stategraph;

use num_bigint::BigUint;
use serde::Serialize;

use crate::cyclic::{canonical_translate, verify_tiling_zn};
use crate::error::{Error, Result};
use crate::exact::number::divisors;
use crate::exact::{cyclotomic_divisors, FiniteSetZ, GroupSubset};

pub use cyclotomic::{decide_tiles_line_cyclotomic, decide_tiles_line_cyclotomic_capped, CyclotomicOutcome};
pub use stategraph::{decide_tiles_line_stategraph, StateGraphSummary, DEFAULT_MAX_DIAMETER};

/// `Λ = B + MZ` tiles `Z` together with the canonical translate of `tile`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TilingCertificate1D {
    pub tile: FiniteSetZ,
    pub period: u64,
    pub residues: GroupSubset,
}

impl TilingCertificate1D {
    /// Checks `|A|·|B| = M` and that `A mod M` and `B` form a direct sum
    /// equal to `Z_M`.
    pub fn verify(&self) -> bool {
        if self.residues.modulus() != self.period || self.residues.dim() != 1 {
            return false;
        }
        match reduce_tile(&self.tile, self.period) {
            Some(a) => verify_tiling_zn(&a, &self.residues),
            None => false,
        }
    }
}

/// `A mod M` as a subset of `Z_M`, or `None` if two elements collide.
pub(crate) fn reduce_tile(tile: &FiniteSetZ, m: u64) -> Option<GroupSubset> {
    GroupSubset::cyclic(m, tile.elements()).ok()
}

/// `∏ s` over the cyclotomic divisors `Φ_s` of the mask polynomial. Every
/// tiling by `A` has a period dividing this number.
pub fn period_bound_cyclotomic(tile: &FiniteSetZ) -> BigUint {
    cyclotomic_divisors(tile)
        .into_iter()
        .fold(BigUint::from(1u32), |acc, s| acc * s)
}

/// Reduces a valid certificate to the least period `M' | M` for which `B`
/// is invariant under shifting by `M'`. Idempotent.
pub fn minimal_period(cert: &TilingCertificate1D) -> Result<TilingCertificate1D> {
    if !cert.verify() {
        return Err(Error::InvalidCertificate(format!(
            "B = {:?} does not complement the tile modulo {}",
            cert.residues.residues(),
            cert.period
        )));
    }
    let m = cert.period;
    let b = cert.residues.residues();
    let mut member = vec![false; m as usize];
    for &x in &b {
        member[x as usize] = true;
    }
    let m_min = divisors(m)
        .into_iter()
        .find(|&d| (0..m as usize).all(|x| !member[x] || member[(x + d as usize) % m as usize]))
        .expect("m itself is a period");
    let mut reduced: Vec<i64> = b.iter().map(|&x| (x % m_min) as i64).collect();
    reduced.sort_unstable();
    reduced.dedup();
    let residues = GroupSubset::cyclic(m_min, &reduced)?;
    let out = TilingCertificate1D { tile: cert.tile.clone(), period: m_min, residues };
    debug_assert!(out.verify());
    Ok(out)
}

/// Pins `B` to its lexicographically least translate containing 0.
pub(crate) fn canonical_certificate(tile: &FiniteSetZ, period: u64, b: &GroupSubset) -> TilingCertificate1D {
    TilingCertificate1D { tile: tile.clone(), period, residues: canonical_translate(b) }
}
