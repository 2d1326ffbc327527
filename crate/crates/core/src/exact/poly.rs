//! Dense univariate polynomials over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// A polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. Trailing zero coefficients are never stored, so the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Quotient and remainder on division by a monic polynomial.
    ///
    /// # Panics
    /// If `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "division by a non-monic polynomial");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[top]);
            if c.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs[..dd].iter().enumerate() {
                if !d.is_zero() {
                    rem[top - dd + k] -= &c * d;
                }
            }
            quot[top - dd] = c;
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Exact quotient by a monic divisor, or `None` if the remainder is nonzero.
    pub fn exact_div_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    pub fn is_divisible_by_monic(&self, divisor: &IntPoly) -> bool {
        self.div_rem_monic(divisor).1.is_zero()
    }

    /// Coefficients as `i64` if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Coefficient arrays, lowest degree first. Coefficients that fit in `i64`
/// are emitted as JSON numbers, larger ones as decimal strings.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// Reduces `coeffs` modulo a monic `modulus` in place using `i64`
/// arithmetic, leaving the remainder in the low `deg(modulus)` slots.
/// Returns `false` if any intermediate value overflowed.
pub(crate) fn reduce_mod_monic_i64(coeffs: &mut [i64], modulus: &[i64]) -> bool {
    let dd = modulus.len() - 1;
    debug_assert_eq!(modulus[dd], 1);
    if coeffs.len() <= dd {
        return true;
    }
    for top in (dd..coeffs.len()).rev() {
        let c = coeffs[top];
        if c == 0 {
            continue;
        }
        coeffs[top] = 0;
        for (k, &d) in modulus[..dd].iter().enumerate() {
            if d != 0 {
                let Some(prod) = c.checked_mul(d) else {
                    return false;
                };
                let Some(v) = coeffs[top - dd + k].checked_sub(prod) else {
                    return false;
                };
                coeffs[top - dd + k] = v;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_degrees() {
        let p = IntPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPoly::from_i64s(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_round_trip() {
        let a = IntPoly::from_i64s(&[1, 0, 1, 1, 0, 1]);
        let d = IntPoly::from_i64s(&[1, 1]);
        let (q, r) = a.div_rem_monic(&d);
        assert!(r.is_zero());
        assert_eq!(q.mul(&d), a);
        let (q, r) = IntPoly::from_i64s(&[3, 0, 1]).div_rem_monic(&IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(q, IntPoly::from_i64s(&[1, 1]));
        assert_eq!(r, IntPoly::from_i64s(&[4]));
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64s(&[1, 0, 1, 1, 0, 1]).to_string(), "1 + x^2 + x^3 + x^5");
        assert_eq!(IntPoly::from_i64s(&[-1, 1]).to_string(), "-1 + x");
        assert_eq!(IntPoly::from_i64s(&[1, -1, 1]).to_string(), "1 - x + x^2");
    }

    #[test]
    fn i64_reduction_matches_bigint() {
        let modulus = IntPoly::from_i64s(&[1, -1, 1]);
        let mut c = vec![1, 0, 1, 1, 0, 1, 0, 2];
        let big = IntPoly::from_i64s(&c);
        assert!(reduce_mod_monic_i64(&mut c, &modulus.to_i64s().unwrap()));
        let (_, r) = big.div_rem_monic(&modulus);
        assert_eq!(IntPoly::from_i64s(&c[..2]), r);
    }
}
