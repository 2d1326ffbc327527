//! Complex Hadamard matrices, log-Hadamard phase matrices and spectral sets
//! in `Z_n^d`.
//!
//! `S ⊆ Z_n^d` with `|S| = r` is spectral with spectrum `Q` (in the dual
//! group, again `Z_n^d`) when the `r×r` matrix `(1/n)·QS` of phases is
//! log-Hadamard, i.e. `EXP(2πi·(1/n)QS)` has orthogonal rows. Row
//! orthogonality for rows `j, k` is the vanishing of `χ̂_S(q_j - q_k)`.

mod butson;
mod matrix;
mod search;

pub use butson::{find_butson, fourier_matrix, ButsonMatrix};
pub use matrix::{is_complex_hadamard, is_log_hadamard, ComplexMatrix, PhaseMatrix, DEFAULT_TOLERANCE};
pub use search::{
    find_spectrum, fuglede_sweep, power_spectrum_tiling_check, spectral_non_tile_z3_5, spectral_pair_check,
    tiles_group, FugledeSweepReport, PowerSpectrumReport, SpectralPair,
};
