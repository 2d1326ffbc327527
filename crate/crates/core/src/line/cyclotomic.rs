//! Decision through the cyclotomic divisors of the mask polynomial.
//!
//! If `A ⊕ Λ = Z` with least period `M`, then `A(x)B(x) ≡ 0 mod x^M - 1`
//! and `B` is periodic with every period `t = ∏ s` over the cyclotomic
//! divisors `Φ_s` of `A(x)`, so `M | t`. Candidates are the divisors of `t`
//! that are multiples of `|A|`, tried in ascending order.

use std::collections::BTreeMap;

use super::{canonical_certificate, reduce_tile, TilingCertificate1D};
use crate::cyclic::find_complements;
use crate::exact::cyclotomic::prime_power_fibers_balanced;
use crate::exact::number::{factorize, valuation};
use crate::exact::{cyclotomic_divisors, FiniteSetZ};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclotomicOutcome {
    Tiles(TilingCertificate1D),
    DoesNotTile,
    /// A candidate period exceeded the cap before the question was settled.
    Capped { next_candidate: u64 },
}

/// Decides whether `tile` tiles `Z`, returning the lexicographically least
/// complement among tilings of minimal period.
pub fn decide_tiles_line_cyclotomic(tile: &FiniteSetZ) -> Option<TilingCertificate1D> {
    match decide_tiles_line_cyclotomic_capped(tile, u64::MAX) {
        CyclotomicOutcome::Tiles(c) => Some(c),
        CyclotomicOutcome::DoesNotTile => None,
        CyclotomicOutcome::Capped { .. } => unreachable!("uncapped search"),
    }
}

/// As [`decide_tiles_line_cyclotomic`], giving up on candidate periods
/// above `max_period`.
pub fn decide_tiles_line_cyclotomic_capped(tile: &FiniteSetZ, max_period: u64) -> CyclotomicOutcome {
    let canon = tile.canonical();
    let k = canon.len() as u64;
    let divs = cyclotomic_divisors(&canon);

    // Factorization of t = ∏ s, accumulated to avoid forming t itself.
    let mut t_fact: BTreeMap<u64, u32> = BTreeMap::new();
    for &s in &divs {
        for (p, e) in factorize(s) {
            *t_fact.entry(p).or_default() += e;
        }
    }
    if factorize(k).into_iter().any(|(p, e)| t_fact.get(&p).copied().unwrap_or(0) < e) {
        return CyclotomicOutcome::DoesNotTile;
    }
    let mut counts = vec![0i64; canon.diameter() as usize + 1];
    for &a in canon.elements() {
        counts[a as usize] = 1;
    }
    let candidates = divisors_ascending(&t_fact, k);
    for m in candidates {
        if m > max_period {
            return CyclotomicOutcome::Capped { next_candidate: m };
        }
        // In Z_M exactly v_p(|A|) of the Φ_{p^a}, p^a | M, divide A(x).
        let filter_ok = factorize(m).into_iter().all(|(p, v)| {
            let mut q = 1u64;
            let mut hits = 0u32;
            for _ in 0..v {
                q *= p;
                if prime_power_fibers_balanced(q, &counts) {
                    hits += 1;
                }
            }
            hits == valuation(k, p)
        });
        if !filter_ok {
            continue;
        }
        let Some(a_mod) = reduce_tile(&canon, m) else { continue };
        let complements = find_complements(&a_mod, Some(1)).expect("|A| divides M");
        if let Some(b) = complements.into_iter().next() {
            let cert = canonical_certificate(&canon, m, &b);
            debug_assert!(cert.verify());
            return CyclotomicOutcome::Tiles(cert);
        }
    }
    CyclotomicOutcome::DoesNotTile
}

/// Divisors of `∏ p^e` that are multiples of `k`, ascending; those
/// overflowing `u64` are dropped.
fn divisors_ascending(fact: &BTreeMap<u64, u32>, k: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (&p, &e) in fact {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for &d in &out {
            let mut x = d;
            next.push(x);
            for _ in 0..e {
                match x.checked_mul(p) {
                    Some(y) => {
                        x = y;
                        next.push(x);
                    }
                    None => break,
                }
            }
        }
        out = next;
    }
    out.retain(|d| d % k == 0);
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tile(v: &[i64]) -> FiniteSetZ {
        FiniteSetZ::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let c = decide_tiles_line_cyclotomic(&tile(&[0, 2, 3, 5])).unwrap();
        assert_eq!((c.period, c.residues.residues()), (4, vec![0]));
        let c = decide_tiles_line_cyclotomic(&tile(&[0])).unwrap();
        assert_eq!((c.period, c.residues.residues()), (1, vec![0]));
        assert!(decide_tiles_line_cyclotomic(&tile(&[0, 1, 3])).is_none());
    }

    #[test]
    fn cap_is_reported() {
        let out = decide_tiles_line_cyclotomic_capped(&tile(&[0, 1, 4, 5]), 4);
        assert_eq!(out, CyclotomicOutcome::Capped { next_candidate: 8 });
    }

    #[test]
    fn divisor_listing() {
        let fact: BTreeMap<u64, u32> = [(2, 4), (3, 1)].into_iter().collect();
        assert_eq!(divisors_ascending(&fact, 4), vec![4, 8, 12, 16, 24, 48]);
    }
}
