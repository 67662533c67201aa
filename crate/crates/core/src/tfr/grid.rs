//! Periodized signals on centered grids and the centered DFT.
//!
//! A signal lives on the grid `step * {-L/2, ..., L/2 - 1}` and is treated
//! as periodic with period `T = L * step`. The centered DFT pairs it with
//! the frequency grid of step `1/(L*step)`, and all transforms carry
//! Riemann-sum normalization so continuous-variable formulas hold on the
//! grid without extra constants.

use super::TfrError;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::f64::consts::PI;
use std::io::{BufRead, Write};
use std::sync::{Arc, Mutex, OnceLock};

fn planner() -> &'static Mutex<FftPlanner<f64>> {
    static PLANNER: OnceLock<Mutex<FftPlanner<f64>>> = OnceLock::new();
    PLANNER.get_or_init(|| Mutex::new(FftPlanner::new()))
}

fn plan_forward(len: usize) -> Arc<dyn Fft<f64>> {
    planner().lock().unwrap().plan_fft_forward(len)
}

fn plan_inverse(len: usize) -> Arc<dyn Fft<f64>> {
    planner().lock().unwrap().plan_fft_inverse(len)
}

/// Centered DFT: `X[n] = sum_j x[j] exp(-2 pi i (j - L/2)(n - L/2) / L)`.
///
/// Both indices are centered (bin `n` is frequency index `n - L/2`).
/// Requires `L` divisible by 4, which every grid length here satisfies.
pub fn centered_dft(x: &[Complex64]) -> Vec<Complex64> {
    let l = x.len();
    debug_assert!(l % 4 == 0);
    let mut buf: Vec<Complex64> = x
        .iter()
        .enumerate()
        .map(|(j, v)| if j % 2 == 0 { *v } else { -*v })
        .collect();
    plan_forward(l).process(&mut buf);
    for (n, v) in buf.iter_mut().enumerate() {
        if n % 2 == 1 {
            *v = -*v;
        }
    }
    buf
}

/// Inverse of [`centered_dft`], including the `1/L` normalization.
pub fn centered_idft(x: &[Complex64]) -> Vec<Complex64> {
    let l = x.len();
    debug_assert!(l % 4 == 0);
    let mut buf: Vec<Complex64> = x
        .iter()
        .enumerate()
        .map(|(n, v)| if n % 2 == 0 { *v } else { -*v })
        .collect();
    plan_inverse(l).process(&mut buf);
    let scale = 1.0 / l as f64;
    for (j, v) in buf.iter_mut().enumerate() {
        *v *= if j % 2 == 0 { scale } else { -scale };
    }
    buf
}

/// A complex signal sampled on the centered grid `step * {-L/2..L/2-1}`,
/// periodized with period `L * step`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSignal {
    samples: Vec<Complex64>,
    step: f64,
}

impl GridSignal {
    pub fn new(samples: Vec<Complex64>, step: f64) -> Result<GridSignal, TfrError> {
        let l = samples.len();
        if l < 8 || !l.is_power_of_two() {
            return Err(TfrError::BadLength(l));
        }
        if !(step > 0.0) || !step.is_finite() {
            return Err(TfrError::BadStep(step));
        }
        Ok(GridSignal { samples, step })
    }

    pub fn zeros(l: usize, step: f64) -> Result<GridSignal, TfrError> {
        GridSignal::new(vec![Complex64::ZERO; l], step)
    }

    /// Samples a function of the grid coordinate.
    pub fn from_fn(
        l: usize,
        step: f64,
        mut f: impl FnMut(f64) -> Complex64,
    ) -> Result<GridSignal, TfrError> {
        let half = l as i64 / 2;
        let samples = (0..l as i64)
            .map(|j| f((j - half) as f64 * step))
            .collect();
        GridSignal::new(samples, step)
    }

    /// The standard Gaussian `exp(-pi x^2)` on a self-dual grid
    /// (`step = 1/sqrt(L)`), so its Fourier transform lives on the same grid.
    pub fn gaussian(l: usize) -> GridSignal {
        let step = 1.0 / (l as f64).sqrt();
        GridSignal::from_fn(l, step, |x| Complex64::new((-PI * x * x).exp(), 0.0))
            .expect("valid gaussian grid")
    }

    /// A raised-cosine bump spanning the full period: `cos^2(pi t / T)`.
    /// Smooth on the torus and vanishing at the period boundary.
    pub fn raised_cosine(l: usize, step: f64) -> Result<GridSignal, TfrError> {
        let period = l as f64 * step;
        GridSignal::from_fn(l, step, |x| {
            Complex64::new((PI * x / period).cos().powi(2), 0.0)
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Frequency step of the dual grid, `1/(L*step)`.
    pub fn freq_step(&self) -> f64 {
        1.0 / (self.len() as f64 * self.step)
    }

    pub fn period(&self) -> f64 {
        self.len() as f64 * self.step
    }

    /// Grid coordinate of sample `j`.
    pub fn coord(&self, j: usize) -> f64 {
        (j as i64 - self.len() as i64 / 2) as f64 * self.step
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [Complex64] {
        &mut self.samples
    }

    /// Sample at a circularly wrapped index.
    pub fn at_wrapped(&self, idx: i64) -> Complex64 {
        let l = self.len() as i64;
        self.samples[(idx.rem_euclid(l)) as usize]
    }

    pub fn same_grid(&self, other: &GridSignal) -> bool {
        // Steps arising from reciprocal-lattice arithmetic may differ by an
        // ulp; compare with a relative tolerance.
        self.len() == other.len() && (self.step - other.step).abs() <= 1e-12 * self.step
    }

    pub fn scaled(&self, c: Complex64) -> GridSignal {
        GridSignal {
            samples: self.samples.iter().map(|v| c * v).collect(),
            step: self.step,
        }
    }

    pub fn sum(&self, other: &GridSignal) -> Result<GridSignal, TfrError> {
        if !self.same_grid(other) {
            return Err(TfrError::MismatchedGrids);
        }
        Ok(GridSignal {
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a + b)
                .collect(),
            step: self.step,
        })
    }

    /// Grid inner product `step * sum f conj(g)`.
    pub fn inner(&self, other: &GridSignal) -> Complex64 {
        debug_assert!(self.same_grid(other));
        self.step
            * self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a * b.conj())
                .sum::<Complex64>()
    }

    pub fn l2_norm(&self) -> f64 {
        (self.step * self.samples.iter().map(|v| v.norm_sqr()).sum::<f64>()).sqrt()
    }

    pub fn sup_norm(&self) -> f64 {
        self.samples.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest magnitude among the two samples adjacent to the period
    /// boundary; fixtures demand this be tiny so periodization is harmless.
    pub fn boundary_magnitude(&self) -> f64 {
        let l = self.len();
        self.samples[0].norm().max(self.samples[l - 1].norm())
    }

    /// Circular translation by `shift` grid steps: `f(t - shift*step)`.
    pub fn translated(&self, shift: i64) -> GridSignal {
        let l = self.len() as i64;
        GridSignal {
            samples: (0..l).map(|j| self.at_wrapped(j - shift)).collect(),
            step: self.step,
        }
    }

    /// Modulation by `freq_idx` frequency steps: `exp(2 pi i t xi) f(t)`.
    pub fn modulated(&self, freq_idx: i64) -> GridSignal {
        let l = self.len() as i64;
        let w = 2.0 * PI * freq_idx as f64 / l as f64;
        GridSignal {
            samples: (0..l)
                .map(|j| {
                    let phase = w * (j - l / 2) as f64;
                    self.samples[j as usize] * Complex64::from_polar(1.0, phase)
                })
                .collect(),
            step: self.step,
        }
    }

    /// Time reversal `f(-t)` with circular wrap.
    pub fn reversed(&self) -> GridSignal {
        let l = self.len() as i64;
        GridSignal {
            samples: (0..l).map(|j| self.at_wrapped(-(j - l / 2) + l / 2)).collect(),
            step: self.step,
        }
    }

    pub fn conj(&self) -> GridSignal {
        GridSignal {
            samples: self.samples.iter().map(|v| v.conj()).collect(),
            step: self.step,
        }
    }

    /// Continuous-normalization Fourier transform, sampled on the dual grid.
    pub fn fourier(&self) -> GridSignal {
        let mut spec = centered_dft(&self.samples);
        for v in &mut spec {
            *v *= self.step;
        }
        GridSignal {
            samples: spec,
            step: self.freq_step(),
        }
    }

    /// Inverse Fourier transform (the inverse of [`GridSignal::fourier`]).
    pub fn inverse_fourier(&self) -> GridSignal {
        let l = self.len() as f64;
        let mut time = centered_idft(&self.samples);
        // idft carries 1/L; the Riemann sum wants a plain `step` factor.
        for v in &mut time {
            *v *= self.step * l;
        }
        GridSignal {
            samples: time,
            step: self.freq_step(),
        }
    }

    /// Exact trigonometric (band-limited) interpolation at arbitrary points,
    /// periodic in the grid period.
    pub fn eval_trig(&self, points: &[f64]) -> Vec<Complex64> {
        let l = self.len();
        let coeffs: Vec<Complex64> = centered_dft(&self.samples)
            .into_iter()
            .map(|v| v / l as f64)
            .collect();
        let fstep = self.freq_step();
        let half = l as f64 / 2.0;
        points
            .iter()
            .map(|&x| {
                // sum_n c_n exp(2 pi i x xi_n), xi_n = (n - L/2) fstep.
                let w = Complex64::from_polar(1.0, 2.0 * PI * x * fstep);
                let mut phase = Complex64::from_polar(1.0, -2.0 * PI * x * fstep * half);
                let mut acc = Complex64::ZERO;
                for c in &coeffs {
                    acc += c * phase;
                    phase *= w;
                }
                acc
            })
            .collect()
    }

    /// Like [`GridSignal::eval_trig`], but treating the signal as supported
    /// on its fundamental domain `[-T/2, T/2)`: points outside evaluate to
    /// zero instead of wrapping. Off-period formulas (dilations, generic
    /// tau-Wigner samplings) need this to avoid spurious periodization
    /// images.
    pub fn eval_trig_clamped(&self, points: &[f64]) -> Vec<Complex64> {
        let half = self.period() / 2.0;
        let mut vals = self.eval_trig(points);
        for (v, &x) in vals.iter_mut().zip(points) {
            if !(-half..half).contains(&x) {
                *v = Complex64::ZERO;
            }
        }
        vals
    }

    /// Band-limited oversampling by a power-of-two factor (zero-padding the
    /// centered spectrum). The result has `factor * L` samples of step
    /// `step / factor` on the same period.
    pub fn oversampled(&self, factor: usize) -> GridSignal {
        assert!(factor.is_power_of_two() && factor >= 1);
        if factor == 1 {
            return self.clone();
        }
        let l = self.len();
        let m = l * factor;
        let spec = centered_dft(&self.samples);
        let mut padded = vec![Complex64::ZERO; m];
        let off = (m - l) / 2;
        padded[off..off + l].copy_from_slice(&spec);
        let mut fine = centered_idft(&padded);
        let scale = m as f64 / l as f64;
        for v in &mut fine {
            *v *= scale;
        }
        GridSignal {
            samples: fine,
            step: self.step / factor as f64,
        }
    }

    /// Writes rows `t,re,im` with a header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "t,re,im")?;
        for (j, v) in self.samples.iter().enumerate() {
            writeln!(w, "{},{},{}", self.coord(j), v.re, v.im)?;
        }
        Ok(())
    }

    /// Reads rows `t,re,im` (header optional); the grid step is inferred
    /// from the time column and validated for uniformity.
    pub fn read_csv<R: BufRead>(r: R) -> Result<GridSignal, TfrError> {
        let mut ts = Vec::new();
        let mut vs = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let line = line.map_err(|e| TfrError::Io(e.to_string()))?;
            let line = line.trim();
            if line.is_empty() || (i == 0 && line.starts_with('t')) {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(TfrError::Io(format!("bad signal row: {line:?}")));
            }
            let parse = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| TfrError::Io(format!("bad number in row: {line:?}")))
            };
            ts.push(parse(fields[0])?);
            vs.push(Complex64::new(parse(fields[1])?, parse(fields[2])?));
        }
        let l = vs.len();
        if l < 8 || !l.is_power_of_two() {
            return Err(TfrError::BadLength(l));
        }
        let step = ts[1] - ts[0];
        if !(step > 0.0) {
            return Err(TfrError::BadStep(step));
        }
        for (j, &t) in ts.iter().enumerate() {
            let expect = (j as i64 - l as i64 / 2) as f64 * step;
            if (t - expect).abs() > 1e-9 * step.max(1.0) {
                return Err(TfrError::Io(format!(
                    "time column is not a centered uniform grid at row {j}: {t} vs {expect}"
                )));
            }
        }
        GridSignal::new(vs, step)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centered_dft_matches_direct_sum() {
        let l = 16usize;
        let x: Vec<Complex64> = (0..l)
            .map(|j| Complex64::new((j as f64 * 0.37).sin(), (j as f64 * 0.11).cos()))
            .collect();
        let fast = centered_dft(&x);
        for n in 0..l {
            let mut direct = Complex64::ZERO;
            for (j, v) in x.iter().enumerate() {
                let ph = -2.0 * PI * (j as f64 - 8.0) * (n as f64 - 8.0) / l as f64;
                direct += v * Complex64::from_polar(1.0, ph);
            }
            assert!((fast[n] - direct).norm() < 1e-11, "bin {n}");
        }
        let back = centered_idft(&fast);
        for (a, b) in back.iter().zip(&x) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn fourier_round_trip_and_gaussian_fixed_point() {
        let g = GridSignal::gaussian(64);
        let gh = g.fourier();
        // exp(-pi x^2) is its own Fourier transform; on a self-dual grid the
        // samples coincide up to periodization error.
        for j in 0..g.len() {
            assert!((gh.samples()[j] - g.samples()[j]).norm() < 1e-12, "sample {j}");
        }
        let back = gh.inverse_fourier();
        for j in 0..g.len() {
            assert!((back.samples()[j] - g.samples()[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn trig_interpolation_reproduces_grid_and_midpoints() {
        let g = GridSignal::gaussian(64);
        let pts: Vec<f64> = (0..8).map(|k| g.coord(20 + 3 * k)).collect();
        let vals = g.eval_trig(&pts);
        for (k, v) in vals.iter().enumerate() {
            assert!((v - g.samples()[20 + 3 * k]).norm() < 1e-12);
        }
        // Off-grid: compare with the true Gaussian.
        let mids = [0.17 * g.step(), 3.4 * g.step(), -11.25 * g.step()];
        let vals = g.eval_trig(&mids);
        for (x, v) in mids.iter().zip(vals) {
            let truth = (-PI * x * x).exp();
            assert!((v.re - truth).abs() < 1e-10 && v.im.abs() < 1e-10);
        }
    }

    #[test]
    fn oversampling_is_band_limited_interpolation() {
        let g = GridSignal::gaussian(32);
        let fine = g.oversampled(4);
        assert_eq!(fine.len(), 128);
        assert!((fine.step() - g.step() / 4.0).abs() < 1e-15);
        for j in 0..g.len() {
            assert!((fine.samples()[4 * j] - g.samples()[j]).norm() < 1e-12);
        }
        let x = fine.coord(65);
        assert!((fine.samples()[65].re - (-PI * x * x).exp()).abs() < 1e-10);
    }

    #[test]
    fn translation_and_modulation_are_unitary() {
        let g = GridSignal::gaussian(32);
        let t = g.translated(5).modulated(-3);
        assert!((t.l2_norm() - g.l2_norm()).abs() < 1e-12);
        assert!((g.translated(5).at_wrapped(21) - g.at_wrapped(16)).norm() < 1e-15);
    }

    #[test]
    fn csv_round_trip() {
        let g = GridSignal::gaussian(16);
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let back = GridSignal::read_csv(&buf[..]).unwrap();
        assert_eq!(back.len(), 16);
        assert!((back.step() - g.step()).abs() < 1e-12);
        for j in 0..16 {
            assert!((back.samples()[j] - g.samples()[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(matches!(
            GridSignal::new(vec![Complex64::ZERO; 12], 0.1),
            Err(TfrError::BadLength(12))
        ));
        assert!(matches!(
            GridSignal::new(vec![Complex64::ZERO; 16], -1.0),
            Err(TfrError::BadStep(_))
        ));
    }
}
