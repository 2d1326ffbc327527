//! Exact decision, construction and certification of translational tilings.
//!
//! The crate covers finite tiles of `Z` ([`line`]), tilings of cyclic groups
//! and Vuza canons ([`cyclic`]), finite tiles of `Z^2` ([`planar`]), the
//! two-brick box problem ([`bricks`]), spectral sets and complex Hadamard
//! matrices in `Z_n^d` ([`spectral`]) and the positive `Z`-tiling function
//! built from two Fejér kernels ([`steinhaus`]).
//!
//! Every group-side predicate (zero sets of Fourier transforms, tiling checks,
//! spectral conditions) is decided with exact cyclotomic arithmetic from
//! [`exact`]. Floating point only appears in the Hadamard and Fejér modules
//! and as a cross-check in tests.

pub mod bricks;
pub mod cyclic;
pub mod error;
pub mod exact;
pub mod group;
pub mod line;
pub mod planar;
pub mod spectral;
pub mod steinhaus;

pub use error::{Error, Result};
pub use exact::{
    char_sum_is_zero, cyclotomic_divisors, cyclotomic_poly, euler_phi, mask_polynomial,
    zero_set_zn, CyclotomicPolynomial, CyclotomicResidue, FiniteSetZ, GroupSubset, IntPoly,
    MaskPolynomial,
};
