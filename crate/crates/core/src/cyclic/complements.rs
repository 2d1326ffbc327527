//! Complement search in `Z_n`.

use crate::error::{Error, Result};
use crate::exact::cyclotomic::prime_power_fibers_balanced;
use crate::exact::number::factorize;
use crate::exact::GroupSubset;
use crate::group::{ComplementSearch, FiniteAbelianGroup};

/// All `B ∋ 0` with `A ⊕ B = Z_n`, in lexicographic order, truncated at
/// `limit`.
///
/// Besides exact cover, the search prunes with the divisibility condition:
/// in a tiling each `Φ_d` (`d | n`, `d > 1`) divides `A(x)` or `B(x)`. For a
/// prime `p` with `Φ_p, …, Φ_{p^e}` all missing from `A(x)`, `B` must be
/// equidistributed modulo `p^e`, which bounds every residue class of a
/// partial `B`.
pub fn find_complements(a: &GroupSubset, limit: Option<usize>) -> Result<Vec<GroupSubset>> {
    if a.dim() != 1 {
        return Err(Error::InvalidInput("find_complements needs a subset of Z_n".into()));
    }
    let n = a.modulus();
    let k = a.len() as u64;
    if n % k != 0 {
        return Err(Error::CardinalityMismatch { tile: k, order: n });
    }
    let size_b = n / k;
    let mut counts = vec![0i64; n as usize];
    for r in a.residues() {
        counts[r as usize] = 1;
    }
    // (modulus p^e, per-class cap) for each forced equidistribution.
    let mut caps = Vec::new();
    for (p, v) in factorize(n) {
        let mut q = 1u64;
        for _ in 0..v {
            if prime_power_fibers_balanced(q * p, &counts) {
                break;
            }
            q *= p;
        }
        if q > 1 {
            if size_b % q != 0 {
                return Ok(Vec::new());
            }
            caps.push((q as usize, (size_b / q) as usize));
        }
    }

    let group = FiniteAbelianGroup::cyclic(n)?;
    let tile: Vec<usize> = a.residues().into_iter().map(|r| r as usize).collect();
    let search = ComplementSearch::new(&group, &tile)?;
    let mut class_counts: Vec<Vec<usize>> = caps.iter().map(|&(q, _)| vec![0; q]).collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    search.run(
        &[0],
        |partial| {
            caps.iter().zip(class_counts.iter_mut()).all(|(&(q, cap), cc)| {
                cc.iter_mut().for_each(|c| *c = 0);
                partial.iter().all(|&b| {
                    cc[b % q] += 1;
                    cc[b % q] <= cap
                })
            })
        },
        |b| {
            let mut v = b.to_vec();
            v.sort_unstable();
            found.push(v);
            std::ops::ControlFlow::Continue(())
        },
    );
    found.sort();
    if let Some(limit) = limit {
        found.truncate(limit);
    }
    found
        .into_iter()
        .map(|b| {
            let signed: Vec<i64> = b.iter().map(|&x| x as i64).collect();
            let set = GroupSubset::cyclic(n, &signed)?;
            debug_assert!(super::verify_tiling_zn(a, &set));
            Ok(set)
        })
        .collect()
}
