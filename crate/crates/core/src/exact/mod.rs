//! Exact arithmetic shared by every module: integers, polynomials over `Z`,
//! cyclotomic polynomials, `Z[ζ_n]`, finite sets and their Fourier zero sets.

pub mod cyclotomic;
pub mod number;
pub mod poly;
pub mod residue;
pub mod sets;
pub mod zero_set;

pub use cyclotomic::{cyclotomic_divisors, cyclotomic_poly, CyclotomicPolynomial};
pub use number::euler_phi;
pub use poly::IntPoly;
pub use residue::{root_sum_vanishes, CyclotomicResidue};
pub use sets::{mask_polynomial, FiniteSetZ, GroupSubset, MaskPolynomial};
pub use zero_set::{char_sum_is_zero, dual_zero_mask, zero_set, zero_set_zn};
