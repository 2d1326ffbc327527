//! Finite tiles of `Z²`: a bounded decision procedure and the interleaved
//! construction of a tiling with no period vectors.

mod aperiodic;
mod decide;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use aperiodic::{
    covers_exactly_once, generate_aperiodic_tiling, is_window_period, shift_column_tiling, window_periods,
};
pub use decide::{
    decide_tiles_z2, decide_tiles_z2_with, no_witness_holds, Decision2D, PeriodicComplement2D, PlanarConfig,
};

pub type Point = (i64, i64);

/// A nonempty finite subset of `Z²`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct LatticeSet2D {
    points: Vec<Point>,
}

impl LatticeSet2D {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(*p) {
                return Err(Error::DuplicateElement(format!("{p:?}")));
            }
        }
        Ok(LatticeSet2D { points: seen.into_iter().collect() })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Translated so that the minimal x and minimal y are both 0.
    pub fn canonical(&self) -> Self {
        let mx = self.points.iter().map(|p| p.0).min().expect("nonempty");
        let my = self.points.iter().map(|p| p.1).min().expect("nonempty");
        self.translate((-mx, -my))
    }

    pub fn translate(&self, by: Point) -> Self {
        let mut points: Vec<Point> = self.points.iter().map(|p| (p.0 + by.0, p.1 + by.1)).collect();
        points.sort_unstable();
        LatticeSet2D { points }
    }

    /// The larger of the x- and y-extents.
    pub fn diameter(&self) -> u64 {
        let ext = |f: fn(&Point) -> i64| {
            let lo = self.points.iter().map(f).min().expect("nonempty");
            let hi = self.points.iter().map(f).max().expect("nonempty");
            (hi - lo) as u64
        };
        ext(|p| p.0).max(ext(|p| p.1))
    }

    /// The tile `{(0,0), (2,0), (0,2), (2,2)}`.
    pub fn spaced_square() -> Self {
        Self::new(vec![(0, 0), (2, 0), (0, 2), (2, 2)]).expect("distinct")
    }

    /// The 2×2 block `{(0,0), (1,0), (0,1), (1,1)}`.
    pub fn unit_square() -> Self {
        Self::new(vec![(0, 0), (1, 0), (0, 1), (1, 1)]).expect("distinct")
    }
}

impl TryFrom<Vec<Point>> for LatticeSet2D {
    type Error = Error;
    fn try_from(v: Vec<Point>) -> Result<Self> {
        LatticeSet2D::new(v)
    }
}

impl From<LatticeSet2D> for Vec<Point> {
    fn from(s: LatticeSet2D) -> Vec<Point> {
        s.points
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_and_diameter() {
        let s = LatticeSet2D::new(vec![(3, -1), (5, -1), (3, 1)]).unwrap();
        assert_eq!(s.canonical().points(), &[(0, 0), (0, 2), (2, 0)]);
        assert_eq!(s.diameter(), 2);
        assert!(matches!(LatticeSet2D::new(vec![(1, 0), (1, 0)]), Err(Error::DuplicateElement(_))));
        assert_eq!(LatticeSet2D::new(vec![]), Err(Error::EmptySet));
    }
}
