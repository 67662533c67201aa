//! Finite-grid models of signals and phase-space fields: FFT-based STFTs,
//! tau-Wigner and Rihaczek distributions, chirps, and the numerically
//! verified identities relating them.

mod checks;
mod field;
mod grid;
mod stft;
mod wigner;

pub use checks::{
    chirp_stft_magnitude_check, fourier_of_tau_wigner_check, fundamental_identity_error,
    linear_transform_stft2_check, linear_transform_stft_check, wigner_stft_factorization_check,
};
pub use field::{stft2, GridField2D, Stft2};
pub use grid::{centered_dft, centered_idft, GridSignal};
pub use stft::{moyal_energy_ratio, stft};
pub use wigner::{chirp, rihaczek_closed_form, tau_wigner, tau_wigner_via_stft};

/// Errors from grid construction and transform preconditions.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TfrError {
    #[error("grid length must be a power of two >= 8, got {0}")]
    BadLength(usize),
    #[error("grid step must be positive and finite, got {0}")]
    BadStep(f64),
    #[error("signals live on different grids")]
    MismatchedGrids,
    #[error("decimation factor {decim} must divide the grid length {len}")]
    BadDecimation { decim: usize, len: usize },
    #[error("tau = {0} is outside the admissible range for this operation")]
    TauOutOfRange(f64),
    #[error("chirp rate must be nonzero; the zero-rate case is the constant field")]
    ZeroChirpRate,
    #[error("linear transform is singular or not lattice-compatible")]
    SingularTransform,
    #[error("operation requires a self-dual grid (step_x = step_xi)")]
    NotSelfDual,
    #[error("zero signal where a nonzero one is required")]
    ZeroSignal,
    #[error("i/o: {0}")]
    Io(String),
}
