//! Exact arithmetic in `Z[ζ_n]` and vanishing sums of roots of unity.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::cyclotomic::{cyclotomic_poly, phi_i64};
use super::number::{euler_phi, mod_inverse, smallest_prime_factor};
use super::poly::{reduce_mod_monic_i64, IntPoly};

/// An element of `Z[ζ_n]`, stored as its canonical representative modulo
/// `Φ_n`: a coefficient vector of length `φ(n)` in powers of `ζ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicResidue {
    order: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicResidue {
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1);
        CyclotomicResidue {
            order,
            coeffs: vec![BigInt::zero(); euler_phi(order) as usize],
        }
    }

    /// `Σ counts[j] ζ_n^j`; `counts` may be longer than `n`.
    pub fn from_counts(order: u64, counts: &[i64]) -> Self {
        assert!(order >= 1);
        let n = order as usize;
        let mut folded = vec![0i64; n];
        for (j, &c) in counts.iter().enumerate() {
            folded[j % n] += c;
        }
        let width = euler_phi(order) as usize;
        if let Some(phi) = phi_i64(order) {
            let mut work = folded.clone();
            if reduce_mod_monic_i64(&mut work, &phi) {
                work.truncate(width);
                work.resize(width, 0);
                return CyclotomicResidue {
                    order,
                    coeffs: work.into_iter().map(BigInt::from).collect(),
                };
            }
        }
        Self::from_poly(order, &IntPoly::from_i64s(&folded))
    }

    /// `Σ ζ_n^e` over the given exponents, which are taken modulo `n`.
    pub fn from_exponents<I: IntoIterator<Item = i64>>(order: u64, exponents: I) -> Self {
        let mut counts = vec![0i64; order as usize];
        for e in exponents {
            counts[e.rem_euclid(order as i64) as usize] += 1;
        }
        Self::from_counts(order, &counts)
    }

    /// Reduces an arbitrary polynomial in `ζ_n` modulo `Φ_n`.
    pub fn from_poly(order: u64, poly: &IntPoly) -> Self {
        let phi = cyclotomic_poly(order);
        let (_, rem) = poly.div_rem_monic(phi.poly());
        let width = phi.degree();
        let mut coeffs = rem.coeffs().to_vec();
        coeffs.resize(width, BigInt::zero());
        CyclotomicResidue { order, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn as_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicResidue {
            order: self.order,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CyclotomicResidue {
            order: self.order,
            coeffs,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        Self::from_poly(self.order, &self.as_poly().mul(&other.as_poly()))
    }

    /// Numerical value with `ζ_n = exp(2πi/n)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }
}

/// Decides `Σ_j counts[j] ζ_n^j = 0` (with `counts.len() == n`) without
/// forming `Φ_n`, by splitting off one prime at a time:
///
/// * if `p² | n`, `{1, ζ_n, …, ζ_n^{p-1}}` is a basis of `Q(ζ_n)` over
///   `Q(ζ_{n/p})`, so the sum vanishes iff each of the `p` sub-sums over a
///   residue class mod `p` vanishes in `Z[ζ_{n/p}]`;
/// * if `p ∥ n`, write `ζ_n = ζ_p^α ζ_m^β` (`m = n/p`); the only
///   `Q(ζ_m)`-relation among powers of `ζ_p` is their sum, so the sum vanishes
///   iff the `p` coefficients in `Z[ζ_m]` are all equal.
///
/// Cost is `O(n · Ω(n))`, which keeps large denominators tractable.
pub fn root_sum_vanishes(order: u64, counts: &[i64]) -> bool {
    assert_eq!(counts.len() as u64, order);
    let wide: Vec<i128> = counts.iter().map(|&c| c as i128).collect();
    vanishes_rec(order, &wide)
}

fn vanishes_rec(n: u64, c: &[i128]) -> bool {
    if n == 1 {
        return c[0] == 0;
    }
    if c.iter().all(|&v| v == 0) {
        return true;
    }
    let p = smallest_prime_factor(n);
    let m = n / p;
    let (p_us, m_us) = (p as usize, m as usize);
    if m % p == 0 {
        (0..p_us).all(|r| {
            let sub: Vec<i128> = (0..m_us).map(|t| c[r + p_us * t]).collect();
            vanishes_rec(m, &sub)
        })
    } else {
        let alpha = mod_inverse(m % p, p).expect("coprime") as usize;
        let beta = mod_inverse(p % m.max(1), m).expect("coprime") as usize;
        let mut parts = vec![vec![0i128; m_us]; p_us];
        for (j, &v) in c.iter().enumerate() {
            if v != 0 {
                parts[(alpha * j) % p_us][(beta * j) % m_us] += v;
            }
        }
        (1..p_us).all(|u| {
            let diff: Vec<i128> = parts[u].iter().zip(&parts[0]).map(|(a, b)| a - b).collect();
            vanishes_rec(m, &diff)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numeric(order: u64, counts: &[i64]) -> Complex64 {
        counts
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                Complex64::from_polar(c as f64, 2.0 * std::f64::consts::PI * j as f64 / order as f64)
            })
            .sum()
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        assert!(CyclotomicResidue::from_exponents(3, [0, 1, 2]).is_zero());
        assert!(CyclotomicResidue::from_exponents(6, [0, -2, -4]).is_zero());
        assert!(!CyclotomicResidue::from_exponents(6, [0, 1]).is_zero());
    }

    #[test]
    fn arithmetic_matches_numeric() {
        let a = CyclotomicResidue::from_exponents(12, [0, 1, 5]);
        let b = CyclotomicResidue::from_exponents(12, [3, 3, 7]);
        let prod = a.mul(&b).to_complex();
        let expect = a.to_complex() * b.to_complex();
        assert!((prod - expect).norm() < 1e-9);
        assert!((a.add(&b).to_complex() - (a.to_complex() + b.to_complex())).norm() < 1e-9);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn recursive_test_agrees_with_residue_and_floats() {
        let mut state = 7u64;
        for n in 1..=60u64 {
            for _ in 0..60 {
                let counts: Vec<i64> = (0..n)
                    .map(|_| {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        ((state >> 61) as i64) - 3
                    })
                    .collect();
                let exact = CyclotomicResidue::from_counts(n, &counts).is_zero();
                assert_eq!(root_sum_vanishes(n, &counts), exact, "n = {n}, {counts:?}");
                assert_eq!(numeric(n, &counts).norm() < 1e-8, exact);
            }
        }
    }

    #[test]
    fn recursive_test_on_structured_vanishing_sums() {
        // Unions of cosets of subgroups always vanish.
        for n in [6u64, 12, 30, 36, 105] {
            for d in super::super::number::divisors(n) {
                if d == 1 {
                    continue;
                }
                let mut counts = vec![0i64; n as usize];
                for t in 0..d {
                    counts[(t * (n / d)) as usize] += 1;
                }
                assert!(root_sum_vanishes(n, &counts));
                assert!(CyclotomicResidue::from_counts(n, &counts).is_zero());
            }
        }
        // ζ_30 sums mixing a 2-coset, a 3-coset and a 5-coset.
        let mut counts = vec![0i64; 30];
        for e in [0, 15] {
            counts[e] += 1;
        }
        for e in [1, 11, 21] {
            counts[e] += 1;
        }
        for e in [2, 8, 14, 20, 26] {
            counts[e] -= 1;
        }
        assert_eq!(
            root_sum_vanishes(30, &counts),
            CyclotomicResidue::from_counts(30, &counts).is_zero()
        );
    }
}
