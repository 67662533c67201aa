//! FFT-based short-time Fourier transform on the periodized grid.

use super::field::GridField2D;
use super::grid::{centered_dft, GridSignal};
use super::TfrError;
use num_complex::Complex64;
use rayon::prelude::*;

/// `V_g f(x, xi) = step * sum_t f(t) conj(g(t - x)) exp(-2 pi i t xi)`,
/// sampled on the signal grid times its dual grid. Rows (time shifts) are
/// independent length-`L` DFTs.
pub fn stft(f: &GridSignal, g: &GridSignal) -> Result<GridField2D, TfrError> {
    if !f.same_grid(g) {
        return Err(TfrError::MismatchedGrids);
    }
    let l = f.len();
    let step = f.step();
    let li = l as i64;
    let mut out = GridField2D::zeros(l, step)?;
    out.rows_mut().enumerate().for_each(|(m, row)| {
        // Row m is the shift x_m = (m - L/2) step; the window argument
        // t_j - x_m sits at physical index j - m + L/2.
        let mut h = vec![Complex64::ZERO; l];
        for (j, slot) in h.iter_mut().enumerate() {
            *slot =
                step * f.samples()[j] * g.at_wrapped(j as i64 - m as i64 + li / 2).conj();
        }
        row.copy_from_slice(&centered_dft(&h));
    });
    Ok(out)
}

/// Energy ratio `||V_g f||^2 / (||f||^2 ||g||^2)`; identically one in the
/// continuum, and exactly one on the grid up to rounding.
pub fn moyal_energy_ratio(f: &GridSignal, g: &GridSignal) -> Result<f64, TfrError> {
    let nf = f.l2_norm();
    let ng = g.l2_norm();
    if nf == 0.0 || ng == 0.0 {
        return Err(TfrError::ZeroSignal);
    }
    let v = stft(f, g)?;
    Ok(v.l2_norm().powi(2) / (nf * nf * ng * ng))
}
