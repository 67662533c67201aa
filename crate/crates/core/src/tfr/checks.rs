//! Numerically verified identities tying the transforms together.
//!
//! Each check computes both sides of an identity by independent code paths
//! and returns the error measure its callers assert against. All checks
//! return exactly zero on zero input.

use super::field::{stft2, GridField2D};
use super::grid::{centered_dft, GridSignal};
use super::stft::stft;
use super::wigner::{chirp, tau_wigner};
use super::TfrError;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Max absolute discrepancy in the Fourier-transform relation for the
/// tau-Wigner distribution: `FT W_tau(f1,f2)(z) = exp(-2 pi i tau z1 z2)
/// V_{f2} f1(-z2, z1)`.
pub fn fourier_of_tau_wigner_check(
    f1: &GridSignal,
    f2: &GridSignal,
    tau: f64,
) -> Result<f64, TfrError> {
    let w = tau_wigner(f1, f2, tau)?;
    let lhs = w.fourier_2d();
    let v = stft(f1, f2)?;
    let l = f1.len();
    let li = l as i64;
    let mut max = 0f64;
    for i1 in 0..l {
        let z1 = lhs.x_coord(i1);
        for i2 in 0..l {
            let z2 = lhs.xi_coord(i2);
            let phase = Complex64::from_polar(1.0, -2.0 * PI * tau * z1 * z2);
            let rhs = phase * v.get_wrapped(li - i2 as i64, i1 as i64);
            max = max.max((lhs.get(i1, i2) - rhs).norm());
        }
    }
    Ok(max)
}

/// Sup-normalized error in the fundamental identity
/// `V_g f(x, xi) = exp(-2 pi i x xi) V_{FT g} FT f(xi, -x)`.
pub fn fundamental_identity_error(f: &GridSignal, g: &GridSignal) -> Result<f64, TfrError> {
    let lhs = stft(f, g)?;
    let v2 = stft(&f.fourier(), &g.fourier())?;
    let l = f.len();
    let li = l as i64;
    let mut max = 0f64;
    for m in 0..l {
        let x = lhs.x_coord(m);
        for n in 0..l {
            let xi = lhs.xi_coord(n);
            let rhs = Complex64::from_polar(1.0, -2.0 * PI * x * xi)
                * v2.get_wrapped(n as i64, li - m as i64);
            max = max.max((lhs.get(m, n) - rhs).norm());
        }
    }
    let scale = lhs.sup_norm();
    Ok(if scale == 0.0 { 0.0 } else { max / scale })
}

/// Max absolute error in the dilation covariance of the STFT,
/// `V_{phi_a} f_a(x, xi) = |a|^{-1} V_phi f(a x, xi / a)`, for a nonzero
/// integer dilation `a` with `|a|` a power of two.
///
/// The dilated pair lives on an `|a|`-times finer grid (where `f(a t)`
/// reads original samples exactly and the widened spectrum stays below the
/// quadrature rate), treating signals as supported on their fundamental
/// domain. Shifts compare on the central band where `a x` stays inside that
/// domain, frequencies on the sublattice `a | xi`-index.
pub fn linear_transform_stft_check(
    f: &GridSignal,
    phi: &GridSignal,
    a: i64,
) -> Result<f64, TfrError> {
    if a == 0 || !a.unsigned_abs().is_power_of_two() {
        return Err(TfrError::SingularTransform);
    }
    if !f.same_grid(phi) {
        return Err(TfrError::MismatchedGrids);
    }
    let l = f.len();
    let li = l as i64;
    let mag = a.unsigned_abs() as i64;
    let lf = mag * li;
    let dilate_fine = |s: &GridSignal| {
        let samples = (0..lf)
            .map(|i| {
                // f(a t_i) on the fine grid hits original sample indices.
                let idx = a.signum() * (i - lf / 2);
                if (-li / 2..li / 2).contains(&idx) {
                    s.samples()[(idx + li / 2) as usize]
                } else {
                    Complex64::ZERO
                }
            })
            .collect();
        GridSignal::new(samples, s.step() / mag as f64).expect("fine grid")
    };
    let lhs = stft(&dilate_fine(f), &dilate_fine(phi))?;
    let rhs = stft(f, phi)?;
    let scale = 1.0 / mag as f64;
    let band = li / (2 * mag);
    let mut max = 0f64;
    for m in 0..l {
        if (m as i64 - li / 2).abs() > band {
            continue;
        }
        for n in 0..l {
            let k = n as i64 - li / 2;
            if k % a != 0 {
                continue;
            }
            // The fine grid shares the frequency step and refines shifts.
            let got = lhs.get_wrapped(mag * (m as i64 - li / 2) + lf / 2, k + lf / 2);
            let expect = scale * rhs.get_wrapped(a * (m as i64 - li / 2) + li / 2, k / a + li / 2);
            max = max.max((got - expect).norm());
        }
    }
    Ok(max)
}

/// The 2-d variant of the dilation covariance, for a unimodular integer
/// matrix acting on a field with a self-dual grid (`step_x = step_xi`).
/// Uses an undecimated 2-d STFT, so keep `l` small.
pub fn linear_transform_stft2_check(
    f: &GridField2D,
    phi: &GridField2D,
    mat: [[i64; 2]; 2],
) -> Result<f64, TfrError> {
    let det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0];
    if det.abs() != 1 {
        return Err(TfrError::SingularTransform);
    }
    if (f.step_x() - f.step_xi()).abs() > 1e-12 * f.step_x() {
        return Err(TfrError::NotSelfDual);
    }
    if !f.same_grid(phi) {
        return Err(TfrError::MismatchedGrids);
    }
    let l = f.len();
    let li = l as i64;
    // (L^{-1})^T for a unimodular matrix is integer.
    let inv_t = [
        [det * mat[1][1], det * -mat[1][0]],
        [det * -mat[0][1], det * mat[0][0]],
    ];
    let apply = |field: &GridField2D, m: &[[i64; 2]; 2]| {
        let mut out = GridField2D::zeros(l, field.step_x()).expect("same grid");
        for i1 in 0..li {
            for i2 in 0..li {
                let y1 = m[0][0] * (i1 - li / 2) + m[0][1] * (i2 - li / 2);
                let y2 = m[1][0] * (i1 - li / 2) + m[1][1] * (i2 - li / 2);
                out.set(
                    i1 as usize,
                    i2 as usize,
                    field.get_wrapped(y1 + li / 2, y2 + li / 2),
                );
            }
        }
        out
    };
    let lhs = stft2(&apply(f, &mat), &apply(phi, &mat), 1)?;
    let rhs = stft2(f, phi, 1)?;
    let wrap = |v: i64| v.rem_euclid(li) as usize;
    let mut max = 0f64;
    for r1 in 0..l {
        for r2 in 0..l {
            let z = [r1 as i64 - li / 2, r2 as i64 - li / 2];
            for u1 in 0..l {
                for u2 in 0..l {
                    let zeta = [u1 as i64 - li / 2, u2 as i64 - li / 2];
                    let mz = [
                        mat[0][0] * z[0] + mat[0][1] * z[1],
                        mat[1][0] * z[0] + mat[1][1] * z[1],
                    ];
                    let itz = [
                        inv_t[0][0] * zeta[0] + inv_t[0][1] * zeta[1],
                        inv_t[1][0] * zeta[0] + inv_t[1][1] * zeta[1],
                    ];
                    let expect = rhs.get(
                        wrap(mz[0] + li / 2),
                        wrap(mz[1] + li / 2),
                        wrap(itz[0] + li / 2),
                        wrap(itz[1] + li / 2),
                    );
                    max = max.max((lhs.get(r1, r2, u1, u2) - expect).norm());
                }
            }
        }
    }
    Ok(max)
}

/// Pointwise relative error, over the central quarter of the decimated
/// lattice, between `|V_{g0} G_1|` and its closed form
/// `2^{-1/2} exp(-pi/2 (z1 - zeta2)^2) exp(-pi/2 (z2 - zeta1)^2)`.
pub fn chirp_stft_magnitude_check(l: usize, step_x: f64, decim: usize) -> Result<f64, TfrError> {
    let g1 = chirp(1.0, l, step_x)?;
    let g0 = GridField2D::gaussian(l, step_x)?;
    let s = stft2(&g1, &g0, decim)?;
    let side = s.side();
    let lo = (3 * l / 8) / decim;
    let hi = (5 * l / 8) / decim;
    debug_assert!(lo < hi && hi <= side);
    let mut max = 0f64;
    for r1 in lo..hi {
        for r2 in lo..hi {
            for u1 in lo..hi {
                for u2 in lo..hi {
                    let closed = 0.5f64.sqrt()
                        * (-0.5 * PI * (s.z1(r1) - s.zeta2(u2)).powi(2)).exp()
                        * (-0.5 * PI * (s.z2(r2) - s.zeta1(u1)).powi(2)).exp();
                    let got = s.get(r1, r2, u1, u2).norm();
                    max = max.max((got - closed).abs() / closed);
                }
            }
        }
    }
    Ok(max)
}

/// STFT of a signal against a window on the doubled lattice: shifts in half
/// grid steps and frequencies in half dual steps. Backs the factorization
/// check, where the needed sample points live on the half lattice.
struct HalfLatticeStft {
    data: Vec<Complex64>,
    side: usize,
}

impl HalfLatticeStft {
    fn get_wrapped(&self, a: i64, b: i64) -> Complex64 {
        let s = self.side as i64;
        self.data[(a.rem_euclid(s) * s + b.rem_euclid(s)) as usize]
    }
}

fn half_lattice_stft(f: &GridSignal, w: &GridSignal) -> HalfLatticeStft {
    let l = f.len();
    let l2 = 2 * l;
    let li = l as i64;
    let step = f.step();
    let wf = w.oversampled(2);
    let mut data = vec![Complex64::ZERO; l2 * l2];
    for a in 0..l2 as i64 {
        // h_j = f(t_j) conj(w(t_j - x_a)), x_a = (a - L) step/2; the window
        // argument lands on the half grid at index 2j - a (+L centering).
        let mut padded = vec![Complex64::ZERO; l2];
        for j in 0..li {
            let v = step * f.samples()[j as usize] * wf.at_wrapped(2 * j - a + li).conj();
            // Place at position j + L/2: the length-2L centered DFT then
            // produces exactly the half-step frequency samples.
            padded[(j + li / 2) as usize] = v;
        }
        let row = centered_dft(&padded);
        data[(a as usize) * l2..(a as usize + 1) * l2].copy_from_slice(&row);
    }
    HalfLatticeStft { data, side: l2 }
}

/// Sup-normalized error in the factorization of the 2-d STFT of a
/// tau-Wigner distribution against a tau-Wigner window:
/// `V_Phi(W_tau(f1,f2))(z, zeta) = exp(-2 pi i z2 zeta2)
/// V_{phi1} f1(z1 - tau zeta2, z2 + (1-tau) zeta1)
/// conj(V_{phi2} f2(z1 + (1-tau) zeta2, z2 - tau zeta1))`.
///
/// `tau` must be one of `0, 1/2, 1`, where the shifted arguments land on
/// the half lattice.
pub fn wigner_stft_factorization_check(
    f1: &GridSignal,
    f2: &GridSignal,
    phi1: &GridSignal,
    phi2: &GridSignal,
    tau: f64,
    decim: usize,
) -> Result<f64, TfrError> {
    if tau != 0.0 && tau != 0.5 && tau != 1.0 {
        return Err(TfrError::TauOutOfRange(tau));
    }
    let w = tau_wigner(f1, f2, tau)?;
    let window = tau_wigner(phi1, phi2, tau)?;
    let s = stft2(&w, &window, decim)?;
    let v1 = half_lattice_stft(f1, phi1);
    let v2 = half_lattice_stft(f2, phi2);
    let l = f1.len();
    let li = l as i64;
    let side = s.side();
    // Everything in half-step units: z1, zeta2 carry 2*step/2 per index,
    // z2, zeta1 carry the dual half step. tau in {0, 1/2, 1} keeps the
    // combinations integral.
    let two_tau = (2.0 * tau).round() as i64;
    let two_comp = 2 - two_tau;
    let d = decim as i64;
    // Compare on the central half range per axis: the shifted arguments
    // then stay well inside the fundamental domain, where the periodized
    // transforms track their real-line counterparts.
    let (lo, hi) = (side / 4, 3 * side / 4);
    let mut max = 0f64;
    let mut scale = 0f64;
    for r1 in lo..hi {
        let z1h = 2 * (r1 as i64 * d - li / 2);
        for r2 in lo..hi {
            let z2h = 2 * (r2 as i64 * d - li / 2);
            for u1 in lo..hi {
                let zeta1h = 2 * (u1 as i64 * d - li / 2);
                for u2 in lo..hi {
                    let zeta2h = 2 * (u2 as i64 * d - li / 2);
                    let phase = Complex64::from_polar(
                        1.0,
                        -2.0 * PI * s.z2(r2) * s.zeta2(u2),
                    );
                    let a1 = z1h - two_tau * zeta2h / 2 + li;
                    let b1 = z2h + two_comp * zeta1h / 2 + li;
                    let a2 = z1h + two_comp * zeta2h / 2 + li;
                    let b2 = z2h - two_tau * zeta1h / 2 + li;
                    let rhs = phase * v1.get_wrapped(a1, b1) * v2.get_wrapped(a2, b2).conj();
                    let lhs = s.get(r1, r2, u1, u2);
                    max = max.max((lhs - rhs).norm());
                    scale = scale.max(lhs.norm());
                }
            }
        }
    }
    Ok(if scale == 0.0 { 0.0 } else { max / scale })
}
