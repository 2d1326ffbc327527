//! Numeric complex matrices and exact rational phase matrices.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::residue::root_sum_vanishes;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Largest common phase denominator handled exactly.
const EXACT_DENOMINATOR_LIMIT: i64 = 1_000_000;

/// A square matrix of complex numbers, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    size: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(size: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::InvalidInput(format!(
                "{} entries do not form a {size}×{size} matrix",
                entries.len()
            )));
        }
        Ok(ComplexMatrix { size, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        Self::new(size, rows.into_iter().flatten().collect())
    }

    pub fn identity(size: usize) -> Self {
        let mut entries = vec![Complex64::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = Complex64::new(1.0, 0.0);
        }
        ComplexMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.size + col]
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.entries[row * self.size..(row + 1) * self.size]
    }

    pub fn scale(&self, by: f64) -> Self {
        ComplexMatrix { size: self.size, entries: self.entries.iter().map(|z| z * by).collect() }
    }

    /// `U* U`.
    pub fn gram(&self) -> Self {
        let k = self.size;
        let mut entries = vec![Complex64::zero(); k * k];
        for i in 0..k {
            for j in 0..k {
                entries[i * k + j] = (0..k).map(|m| self.get(m, i).conj() * self.get(m, j)).sum();
            }
        }
        ComplexMatrix { size: k, entries }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries.iter().zip(&other.entries).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// Unit-modulus entries (within `tol`) and pairwise orthogonal rows (inner
/// products within `k·tol` of zero).
pub fn is_complex_hadamard(h: &ComplexMatrix, tol: f64) -> bool {
    let k = h.size();
    if h.entries.iter().any(|z| (z.norm() - 1.0).abs() > tol) {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let dot: Complex64 = h.row(i).iter().zip(h.row(j)).map(|(a, b)| a.conj() * b).sum();
            dot.norm() <= k as f64 * tol
        })
    })
}

/// A square matrix of phases `ρ ∈ [0, 1)`, standing for `EXP(2πi·ρ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseMatrix {
    size: usize,
    phases: Vec<Ratio<i64>>,
}

impl PhaseMatrix {
    /// Phases are reduced into `[0, 1)`.
    pub fn new(size: usize, phases: Vec<Ratio<i64>>) -> Result<Self> {
        if phases.len() != size * size {
            return Err(Error::InvalidInput(format!(
                "{} phases do not form a {size}×{size} matrix",
                phases.len()
            )));
        }
        let phases = phases.into_iter().map(|p| p - p.floor()).collect();
        Ok(PhaseMatrix { size, phases })
    }

    pub fn from_rows(rows: Vec<Vec<Ratio<i64>>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        Self::new(size, rows.into_iter().flatten().collect())
    }

    /// `exponents / q`.
    pub fn from_exponents(q: u64, rows: &[Vec<u64>]) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroModulus);
        }
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&e| Ratio::new(e as i64, q as i64)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> Ratio<i64> {
        self.phases[row * self.size + col]
    }

    pub fn rows(&self) -> Vec<Vec<Ratio<i64>>> {
        self.phases.chunks(self.size.max(1)).map(|c| c.to_vec()).collect()
    }

    /// Least common denominator of all phases, if it fits.
    pub fn common_denominator(&self) -> Option<i64> {
        self.phases.iter().try_fold(1i64, |acc, p| {
            let l = acc.lcm(p.denom());
            (l <= EXACT_DENOMINATOR_LIMIT).then_some(l)
        })
    }

    /// `EXP(2πi·R)`.
    pub fn exp(&self) -> ComplexMatrix {
        let entries = self
            .phases
            .iter()
            .map(|p| Complex64::from_polar(1.0, 2.0 * PI * (*p.numer() as f64) / (*p.denom() as f64)))
            .collect();
        ComplexMatrix { size: self.size, entries }
    }

    /// `(1/2πi)·LOG(H)`, recovering each phase as the rational with
    /// denominator at most `max_denominator` nearest to `arg/2π`. `None` if
    /// some entry is not within `tol` of such a root of unity.
    pub fn log(h: &ComplexMatrix, max_denominator: i64, tol: f64) -> Option<Self> {
        let phases = h
            .entries
            .iter()
            .map(|z| {
                let turn = (z.arg() / (2.0 * PI)).rem_euclid(1.0);
                let p = nearest_rational(turn, max_denominator);
                let back = Complex64::from_polar(1.0, 2.0 * PI * (*p.numer() as f64) / (*p.denom() as f64));
                ((back - z).norm() <= tol).then_some(p)
            })
            .collect::<Option<Vec<_>>>()?;
        PhaseMatrix::new(h.size, phases).ok()
    }
}

impl Serialize for PhaseMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.rows().into_iter().map(|r| r.into_iter().map(|p| p.to_string()).collect::<Vec<_>>()))
    }
}

/// Best rational approximation with bounded denominator, by continued
/// fractions.
fn nearest_rational(x: f64, max_den: i64) -> Ratio<i64> {
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut v = x;
    loop {
        let a = v.floor();
        let a_i = a as i64;
        let (p2, q2) = (a_i * p1 + p0, a_i * q1 + q0);
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = v - a;
        if frac < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    let r = Ratio::new(p1, q1);
    r - r.floor()
}

/// Whether `EXP(2πi·R)` is complex Hadamard.
///
/// With a common phase denominator `m ≤ 10⁶`, rows `j, k` are orthogonal
/// iff `Σ_c ζ_m^{m(ρ_{jc} - ρ_{kc})} = 0`, decided exactly; otherwise the
/// numeric test at [`DEFAULT_TOLERANCE`] is used.
pub fn is_log_hadamard(r: &PhaseMatrix) -> bool {
    let k = r.size();
    let Some(m) = r.common_denominator() else {
        return is_complex_hadamard(&r.exp(), DEFAULT_TOLERANCE);
    };
    let scaled: Vec<i64> = r.phases.iter().map(|p| (p * m).to_integer()).collect();
    let mut counts = vec![0i64; m as usize];
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            counts.iter_mut().for_each(|c| *c = 0);
            for c in 0..k {
                counts[(scaled[i * k + c] - scaled[j * k + c]).rem_euclid(m) as usize] += 1;
            }
            root_sum_vanishes(m as u64, &counts)
        })
    })
}
