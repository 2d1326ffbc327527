//! Finite subsets of `Z` and of `Z_n^d`, and their mask polynomials.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// A nonempty finite set of integers, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct FiniteSetZ {
    elements: Vec<i64>,
}

impl FiniteSetZ {
    /// Builds a set from arbitrary-order input; duplicates are an error.
    pub fn new(mut elements: Vec<i64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0].to_string()));
        }
        Ok(FiniteSetZ { elements })
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> i64 {
        self.elements[0]
    }

    pub fn diameter(&self) -> u64 {
        (self.elements[self.elements.len() - 1] - self.elements[0]) as u64
    }

    pub fn is_canonical(&self) -> bool {
        self.elements[0] == 0
    }

    pub fn translate(&self, by: i64) -> Self {
        FiniteSetZ {
            elements: self.elements.iter().map(|a| a + by).collect(),
        }
    }

    /// The translate with minimum 0.
    pub fn canonical(&self) -> Self {
        self.translate(-self.min())
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

impl TryFrom<Vec<i64>> for FiniteSetZ {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        FiniteSetZ::new(v)
    }
}

impl From<FiniteSetZ> for Vec<i64> {
    fn from(s: FiniteSetZ) -> Vec<i64> {
        s.elements
    }
}

impl fmt::Display for FiniteSetZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// The mask polynomial `A(x) = Σ_{a∈A} x^a` of a canonical set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MaskPolynomial(IntPoly);

impl MaskPolynomial {
    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    /// `A(1) = |A|`.
    pub fn at_one(&self) -> BigInt {
        self.0.eval_i64(1)
    }
}

/// Mask polynomial of the canonical translate of `set`.
pub fn mask_polynomial(set: &FiniteSetZ) -> MaskPolynomial {
    let canon = set.canonical();
    let mut coeffs = vec![0i64; canon.diameter() as usize + 1];
    for &a in canon.elements() {
        coeffs[a as usize] = 1;
    }
    MaskPolynomial(IntPoly::from_i64s(&coeffs))
}

/// A nonempty subset of `Z_n^d`. Elements are coordinate vectors reduced
/// into `[0, n)`, stored sorted lexicographically.
///
/// Serializes as an array of residues when `d = 1` and as an array of
/// coordinate arrays otherwise; the modulus travels alongside.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSubset {
    modulus: u64,
    dim: usize,
    elements: Vec<Vec<u64>>,
}

impl GroupSubset {
    /// Coordinates are reduced modulo `modulus`; elements that coincide
    /// after reduction are an error.
    pub fn new(modulus: u64, dim: usize, elements: Vec<Vec<i64>>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut seen = BTreeSet::new();
        for e in &elements {
            if e.len() != dim {
                return Err(Error::DimensionMismatch {
                    element: format!("{e:?}"),
                    expected: dim,
                    found: e.len(),
                });
            }
            let reduced: Vec<u64> = e.iter().map(|&c| c.rem_euclid(modulus as i64) as u64).collect();
            if !seen.insert(reduced.clone()) {
                return Err(Error::DuplicateElement(format!("{reduced:?}")));
            }
        }
        Ok(GroupSubset {
            modulus,
            dim,
            elements: seen.into_iter().collect(),
        })
    }

    /// A subset of the cyclic group `Z_n`.
    pub fn cyclic(modulus: u64, residues: &[i64]) -> Result<Self> {
        Self::new(modulus, 1, residues.iter().map(|&r| vec![r]).collect())
    }

    /// Builds from element indices (first coordinate most significant).
    pub fn from_indices(modulus: u64, dim: usize, indices: &[usize]) -> Result<Self> {
        let elems = indices
            .iter()
            .map(|&i| decode(modulus, dim, i).into_iter().map(|c| c as i64).collect())
            .collect();
        Self::new(modulus, dim, elems)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[Vec<u64>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Order of the ambient group, `n^d`.
    pub fn group_order(&self) -> u64 {
        self.modulus.pow(self.dim as u32)
    }

    /// Residues of a one-dimensional subset.
    ///
    /// # Panics
    /// If `dim != 1`.
    pub fn residues(&self) -> Vec<u64> {
        assert_eq!(self.dim, 1, "residues() needs a subset of Z_n");
        self.elements.iter().map(|e| e[0]).collect()
    }

    /// Mixed-radix indices of the elements, ascending.
    pub fn indices(&self) -> Vec<usize> {
        self.elements
            .iter()
            .map(|e| encode(self.modulus, e))
            .collect()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.elements.binary_search_by(|e| e.as_slice().cmp(v)).is_ok()
    }
}

impl Serialize for GroupSubset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.dim == 1 {
            serializer.collect_seq(self.elements.iter().map(|e| e[0]))
        } else {
            serializer.collect_seq(self.elements.iter())
        }
    }
}

/// Index of a coordinate vector, first coordinate most significant.
pub fn encode(modulus: u64, v: &[u64]) -> usize {
    v.iter().fold(0usize, |acc, &c| acc * modulus as usize + c as usize)
}

pub fn decode(modulus: u64, dim: usize, mut index: usize) -> Vec<u64> {
    let n = modulus as usize;
    let mut v = vec![0u64; dim];
    for slot in v.iter_mut().rev() {
        *slot = (index % n) as u64;
        index /= n;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_errors() {
        assert_eq!(FiniteSetZ::new(vec![]), Err(Error::EmptySet));
        assert!(matches!(FiniteSetZ::new(vec![1, 1]), Err(Error::DuplicateElement(_))));
        assert!(matches!(GroupSubset::cyclic(4, &[1, 5]), Err(Error::DuplicateElement(_))));
        assert_eq!(GroupSubset::cyclic(0, &[0]), Err(Error::ZeroModulus));
        assert!(matches!(
            GroupSubset::new(3, 2, vec![vec![0]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_form() {
        let a = FiniteSetZ::new(vec![7, 5, 10, 8]).unwrap();
        assert_eq!(a.canonical().elements(), &[0, 2, 3, 5]);
        assert_eq!(a.diameter(), 5);
    }

    #[test]
    fn masks() {
        let m = mask_polynomial(&FiniteSetZ::new(vec![0, 2, 3, 5]).unwrap());
        assert_eq!(m.poly(), &IntPoly::from_i64s(&[1, 0, 1, 1, 0, 1]));
        assert_eq!(mask_polynomial(&FiniteSetZ::new(vec![0]).unwrap()).poly(), &IntPoly::one());
        assert_eq!(
            mask_polynomial(&FiniteSetZ::new(vec![0, 1]).unwrap()).poly(),
            &IntPoly::from_i64s(&[1, 1])
        );
    }

    #[test]
    fn serde_round_trip() {
        let a = FiniteSetZ::new(vec![0, 2, 3, 5]).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[0,2,3,5]");
        let back: FiniteSetZ = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<FiniteSetZ>("[1,1]").is_err());
        let m = mask_polynomial(&a);
        assert_eq!(serde_json::to_string(&m).unwrap(), "[1,0,1,1,0,1]");
        let g = GroupSubset::cyclic(12, &[8, 0, 4]).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), "[0,4,8]");
        let g = GroupSubset::new(3, 2, vec![vec![1, 2], vec![0, 0]]).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), "[[0,0],[1,2]]");
    }

    #[test]
    fn index_encoding() {
        let s = GroupSubset::new(3, 2, vec![vec![2, 1], vec![0, 1]]).unwrap();
        assert_eq!(s.indices(), vec![1, 7]);
        assert_eq!(decode(3, 2, 7), vec![2, 1]);
    }

    proptest::proptest! {
        #[test]
        fn mask_is_zero_one_and_counts(raw in proptest::collection::btree_set(-40i64..40, 1..12)) {
            let a = FiniteSetZ::new(raw.into_iter().collect()).unwrap();
            let m = mask_polynomial(&a);
            proptest::prop_assert!(m.coeffs().iter().all(|c| *c == BigInt::from(0) || *c == BigInt::from(1)));
            proptest::prop_assert_eq!(m.at_one(), BigInt::from(a.len()));
            proptest::prop_assert_eq!(m.poly().degree(), Some(a.diameter() as usize));
        }
    }
}
