//! Cyclotomic polynomials and divisibility of mask polynomials by them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::Serialize;

use super::number::{divisors, euler_phi, prime_power};
use super::poly::{reduce_mod_monic_i64, IntPoly};
use super::sets::FiniteSetZ;

/// The `d`-th cyclotomic polynomial `Φ_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicPolynomial {
    order: u64,
    coeffs: IntPoly,
}

impl CyclotomicPolynomial {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn poly(&self) -> &IntPoly {
        &self.coeffs
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.coeffs.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.degree().expect("cyclotomic polynomials are nonzero")
    }
}

struct Cache {
    big: HashMap<u64, Arc<IntPoly>>,
    small: HashMap<u64, Option<Arc<Vec<i64>>>>,
}

fn cache() -> &'static RwLock<Cache> {
    static CACHE: OnceLock<RwLock<Cache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        RwLock::new(Cache {
            big: HashMap::new(),
            small: HashMap::new(),
        })
    })
}

fn phi_poly(d: u64) -> Arc<IntPoly> {
    if let Some(p) = cache().read().unwrap().big.get(&d) {
        return Arc::clone(p);
    }
    let poly = if d == 1 {
        IntPoly::from_i64s(&[-1, 1])
    } else {
        let mut acc = IntPoly::x_pow_minus_one(d as usize);
        for e in divisors(d) {
            if e < d {
                acc = acc
                    .exact_div_monic(&phi_poly(e))
                    .expect("Φ_e divides x^d - 1 for e | d");
            }
        }
        acc
    };
    let poly = Arc::new(poly);
    cache()
        .write()
        .unwrap()
        .big
        .insert(d, Arc::clone(&poly));
    poly
}

/// `Φ_d` as `i64` coefficients, when they fit.
pub(crate) fn phi_i64(d: u64) -> Option<Arc<Vec<i64>>> {
    if let Some(p) = cache().read().unwrap().small.get(&d) {
        return p.clone();
    }
    let small = phi_poly(d).to_i64s().map(Arc::new);
    cache().write().unwrap().small.insert(d, small.clone());
    small
}

/// The `d`-th cyclotomic polynomial, obtained by dividing `x^d - 1` by every
/// `Φ_e` with `e | d`, `e < d`.
///
/// # Panics
/// If `d == 0`.
pub fn cyclotomic_poly(d: u64) -> CyclotomicPolynomial {
    assert!(d >= 1, "cyclotomic_poly: order must be positive");
    CyclotomicPolynomial {
        order: d,
        coeffs: (*phi_poly(d)).clone(),
    }
}

/// Whether `Φ_m` divides `Σ counts[j] x^j`, where exponents may exceed `m`.
///
/// Exponents are first folded modulo `x^m - 1` (which `Φ_m` divides), then
/// the folded polynomial is reduced modulo `Φ_m`.
pub fn phi_divides_counts(m: u64, counts: &[i64]) -> bool {
    assert!(m >= 1);
    let m_us = m as usize;
    let mut folded = vec![0i64; m_us];
    for (j, &c) in counts.iter().enumerate() {
        folded[j % m_us] += c;
    }
    if m == 1 {
        return folded[0] == 0;
    }
    if let Some(phi) = phi_i64(m) {
        let mut work = folded.clone();
        if reduce_mod_monic_i64(&mut work, &phi) {
            return work[..phi.len() - 1].iter().all(|&c| c == 0);
        }
    }
    let poly = IntPoly::from_i64s(&folded);
    poly.is_divisible_by_monic(&phi_poly(m))
}

/// Fiber test for a prime power `s = p^a`: `Φ_s` divides `Σ counts[j] x^j`
/// iff, after folding exponents modulo `s`, the `p` classes
/// `r, r + s/p, ..., r + (p-1)s/p` carry equal weight for every `r < s/p`.
pub fn prime_power_fibers_balanced(s: u64, counts: &[i64]) -> bool {
    let (p, _) = prime_power(s).expect("s must be a prime power");
    let s_us = s as usize;
    let step = s_us / p as usize;
    let mut folded = vec![0i64; s_us];
    for (j, &c) in counts.iter().enumerate() {
        folded[j % s_us] += c;
    }
    (0..step).all(|r| (1..p as usize).all(|j| folded[r + j * step] == folded[r]))
}

/// All `s > 1` with `Φ_s` dividing the mask polynomial of `A`, ascending.
///
/// Only `s <= 2D²` can qualify: `φ(s) >= sqrt(s/2)` always, and a divisor
/// needs `φ(s) <= deg A(x) = D`.
pub fn cyclotomic_divisors(set: &FiniteSetZ) -> Vec<u64> {
    let canon = set.canonical();
    let diameter = canon.diameter();
    if diameter == 0 {
        return Vec::new();
    }
    let mut counts = vec![0i64; diameter as usize + 1];
    for &a in canon.elements() {
        counts[a as usize] = 1;
    }
    let bound = 2 * diameter * diameter;
    (2..=bound)
        .filter(|&s| euler_phi(s) <= diameter)
        .filter(|&s| phi_divides_counts(s, &counts))
        .collect()
}
