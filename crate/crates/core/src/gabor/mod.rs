//! Gabor frames on the periodized grid: analysis and synthesis operators,
//! Walnut frame-bound estimates, dual windows via conjugate gradient on the
//! frame operator, and modulation-norm estimation from Gabor coefficients.

use crate::spaces::{mixed_norm_entries, Exponent, NestingOrder, PowerWeight, Sequence2D};
use crate::tfr::GridSignal;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Errors from lattice construction and frame computations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GaborError {
    #[error("lattice steps must be positive integers dividing the grid: {0}")]
    IncompatibleLattice(String),
    #[error("signal grid does not match the lattice grid")]
    MismatchedGrids,
    #[error("density alpha*beta = {0} exceeds 1: no frame exists")]
    Overcritical(f64),
    #[error("window admits no frame: the Walnut lower bound vanishes")]
    WalnutLowerBoundZero,
    #[error("frame operator is not positive definite (p^T S p = {0:.3e})")]
    NotPositiveDefinite(f64),
    #[error("conjugate gradient did not converge: residual {residual:.3e} after {iterations} iterations")]
    NoConvergence { residual: f64, iterations: usize },
}

/// A separable time-frequency lattice `alpha Z x beta Z` on the torus,
/// with `alpha = a * step` and `beta = b / (L * step)` for divisors `a, b`
/// of `L`. It carries `K = L/a` time shifts and `N = L/b` modulations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaborLattice {
    a: usize,
    b: usize,
    l: usize,
}

impl GaborLattice {
    /// Builds the lattice from step multipliers `a` (time) and `b`
    /// (frequency). Both must divide `L`. Density `alpha*beta = a*b/L` may
    /// exceed one here; frame construction will then report failure.
    pub fn new(l: usize, a: usize, b: usize) -> Result<GaborLattice, GaborError> {
        if a == 0 || b == 0 || l % a != 0 || l % b != 0 {
            return Err(GaborError::IncompatibleLattice(format!(
                "a = {a}, b = {b} for grid length {l}"
            )));
        }
        Ok(GaborLattice { a, b, l })
    }

    pub fn grid_len(&self) -> usize {
        self.l
    }

    /// Number of time shifts.
    pub fn time_count(&self) -> usize {
        self.l / self.a
    }

    /// Number of modulations.
    pub fn freq_count(&self) -> usize {
        self.l / self.b
    }

    pub fn alpha(&self, step: f64) -> f64 {
        self.a as f64 * step
    }

    pub fn beta(&self, step: f64) -> f64 {
        self.b as f64 / (self.l as f64 * step)
    }

    /// `alpha * beta = a b / L`.
    pub fn density(&self) -> f64 {
        (self.a * self.b) as f64 / self.l as f64
    }

    /// Centered lattice ranges: `k in [-K/2, K/2)`, `n in [-N/2, N/2)`.
    pub fn time_range(&self) -> std::ops::Range<i64> {
        let k = self.time_count() as i64;
        -k / 2..(k + 1) / 2
    }

    pub fn freq_range(&self) -> std::ops::Range<i64> {
        let n = self.freq_count() as i64;
        -n / 2..(n + 1) / 2
    }

    fn check(&self, f: &GridSignal) -> Result<(), GaborError> {
        if f.len() != self.l {
            return Err(GaborError::MismatchedGrids);
        }
        Ok(())
    }
}

/// The time-frequency shift `T_{alpha k} M_{beta n} g` on the grid.
fn tf_shift(g: &GridSignal, lat: &GaborLattice, k: i64, n: i64) -> GridSignal {
    let l = g.len() as i64;
    let shift = k * lat.a as i64;
    let freq = n * lat.b as i64;
    let w = 2.0 * PI * freq as f64 / l as f64;
    let samples = (0..l)
        .map(|j| {
            // (T M g)(t) = exp(2 pi i (t - alpha k) beta n) g(t - alpha k).
            let base = g.at_wrapped(j - shift);
            let phase = w * ((j - l / 2) - shift) as f64;
            base * Complex64::from_polar(1.0, phase)
        })
        .collect();
    GridSignal::new(samples, g.step()).expect("same grid")
}

/// Analysis operator: coefficients `< f, T_{alpha k} M_{beta n} g >` over
/// the centered torus lattice.
pub fn gabor_analysis(
    f: &GridSignal,
    g: &GridSignal,
    lat: &GaborLattice,
) -> Result<Sequence2D, GaborError> {
    lat.check(f)?;
    lat.check(g)?;
    if !f.same_grid(g) {
        return Err(GaborError::MismatchedGrids);
    }
    let mut out = Sequence2D::new();
    for k in lat.time_range() {
        for n in lat.freq_range() {
            let atom = tf_shift(g, lat, k, n);
            out.insert(k, n, f.inner(&atom));
        }
    }
    Ok(out)
}

/// Synthesis operator: `sum c_{k,n} T_{alpha k} M_{beta n} gamma`.
/// Coefficients outside the torus lattice ranges are rejected.
pub fn gabor_synthesis(
    c: &Sequence2D,
    gamma: &GridSignal,
    lat: &GaborLattice,
) -> Result<GridSignal, GaborError> {
    lat.check(gamma)?;
    let (tr, fr) = (lat.time_range(), lat.freq_range());
    let mut acc = GridSignal::zeros(lat.l, gamma.step()).expect("valid grid");
    for (&(k, n), &v) in c.iter() {
        if !tr.contains(&k) || !fr.contains(&n) {
            return Err(GaborError::IncompatibleLattice(format!(
                "coefficient index ({k}, {n}) is outside the torus lattice"
            )));
        }
        let atom = tf_shift(gamma, lat, k, n);
        for (slot, av) in acc.samples_mut().iter_mut().zip(atom.samples()) {
            *slot += v * av;
        }
    }
    Ok(acc)
}

/// The frame operator `S f = D_g C_g f`.
pub fn frame_operator(
    f: &GridSignal,
    g: &GridSignal,
    lat: &GaborLattice,
) -> Result<GridSignal, GaborError> {
    let coeff = gabor_analysis(f, g, lat)?;
    gabor_synthesis(&coeff, g, lat)
}

/// Walnut bounds: the extrema over the grid of the periodized sum
/// `sum_k |g(x - alpha k)|^2`. A vanishing lower bound rules out a frame
/// for every modulation step.
pub fn walnut_bounds(g: &GridSignal, lat: &GaborLattice) -> Result<(f64, f64), GaborError> {
    lat.check(g)?;
    let l = g.len() as i64;
    let mut lo = f64::INFINITY;
    let mut hi = 0f64;
    for j in 0..l {
        let mut s = 0f64;
        for k in 0..(lat.time_count() as i64) {
            s += g.at_wrapped(j - k * lat.a as i64).norm_sqr();
        }
        lo = lo.min(s);
        hi = hi.max(s);
    }
    Ok((lo, hi))
}

/// Tolerances for the conjugate-gradient frame inversion.
#[derive(Clone, Copy, Debug)]
pub struct DualWindowConfig {
    pub tol: f64,
    pub max_iter: usize,
}

impl DualWindowConfig {
    pub fn for_grid(l: usize) -> DualWindowConfig {
        DualWindowConfig {
            tol: 1e-10,
            max_iter: 8 * l,
        }
    }
}

/// Computes the canonical dual window `S^{-1} g` by conjugate gradient on
/// the Hermitian positive-definite frame operator.
///
/// Fails on overcritical lattices, vanishing Walnut lower bounds, loss of
/// positive definiteness (a nonpositive Ritz value), or non-convergence.
pub fn dual_window(
    g: &GridSignal,
    lat: &GaborLattice,
    cfg: DualWindowConfig,
) -> Result<GridSignal, GaborError> {
    lat.check(g)?;
    if lat.density() > 1.0 + 1e-12 {
        return Err(GaborError::Overcritical(lat.density()));
    }
    let (walnut_lo, _) = walnut_bounds(g, lat)?;
    if walnut_lo <= 0.0 {
        return Err(GaborError::WalnutLowerBoundZero);
    }
    let apply = |x: &GridSignal| frame_operator(x, g, lat);
    let dot = |x: &GridSignal, y: &GridSignal| x.inner(y);
    let norm_g = g.l2_norm();
    let mut x = GridSignal::zeros(g.len(), g.step()).expect("valid grid");
    let mut r = g.clone();
    let mut p = r.clone();
    let mut rs = dot(&r, &r).re;
    for iter in 0..cfg.max_iter {
        if rs.sqrt() <= cfg.tol * norm_g {
            return Ok(x);
        }
        let ap = apply(&p)?;
        let pap = dot(&p, &ap).re;
        // A nonpositive Rayleigh quotient falsifies positive definiteness.
        if pap <= 0.0 {
            return Err(GaborError::NotPositiveDefinite(pap));
        }
        let alpha = rs / pap;
        x = x
            .sum(&p.scaled(Complex64::new(alpha, 0.0)))
            .expect("same grid");
        r = r
            .sum(&ap.scaled(Complex64::new(-alpha, 0.0)))
            .expect("same grid");
        let rs_new = dot(&r, &r).re;
        let _ = iter;
        p = r
            .sum(&p.scaled(Complex64::new(rs_new / rs, 0.0)))
            .expect("same grid");
        rs = rs_new;
    }
    if rs.sqrt() <= cfg.tol * norm_g {
        return Ok(x);
    }
    Err(GaborError::NoConvergence {
        residual: rs.sqrt() / norm_g,
        iterations: cfg.max_iter,
    })
}

/// Modulation-norm estimate: the weighted mixed norm of the Gabor
/// coefficients, with the weight evaluated at the lattice positions
/// `(alpha k, beta n)`. Requires a window passing the Walnut check.
pub fn modulation_norm(
    f: &GridSignal,
    g: &GridSignal,
    lat: &GaborLattice,
    p: &Exponent,
    q: &Exponent,
    weight: &PowerWeight,
) -> Result<f64, GaborError> {
    let (lo, _) = walnut_bounds(g, lat)?;
    if lo <= 0.0 {
        return Err(GaborError::WalnutLowerBoundZero);
    }
    if lat.density() > 1.0 + 1e-12 {
        return Err(GaborError::Overcritical(lat.density()));
    }
    let coeff = gabor_analysis(f, g, lat)?;
    let alpha = lat.alpha(f.step());
    let beta = lat.beta(f.step());
    Ok(mixed_norm_entries(
        coeff.iter().map(|(&(k, n), v)| ((k, n), v.norm())),
        p,
        q,
        |k, n| weight.eval(alpha * k as f64, beta * n as f64),
        NestingOrder::InnerFirstIndex,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn gaussian_lattice(l: usize, a: usize, b: usize) -> (GridSignal, GaborLattice) {
        (GridSignal::gaussian(l), GaborLattice::new(l, a, b).unwrap())
    }

    #[test]
    fn analysis_normalized_gaussian_origin_coefficient() {
        let (g, lat) = gaussian_lattice(64, 8, 8);
        let gn = g.scaled(Complex64::new(1.0 / g.l2_norm(), 0.0));
        let c = gabor_analysis(&gn, &gn, &lat).unwrap();
        assert!((c.get(0, 0) - Complex64::ONE).norm() < 1e-12);
    }

    #[test]
    fn coefficients_shift_covariantly() {
        let (g, lat) = gaussian_lattice(64, 8, 8);
        let f = g.translated(3).modulated(-5);
        let shifted = f.translated(lat.a as i64);
        let c0 = gabor_analysis(&f, &g, &lat).unwrap();
        let c1 = gabor_analysis(&shifted, &g, &lat).unwrap();
        for k in lat.time_range() {
            for n in lat.freq_range() {
                let k_prev = if k - 1 < lat.time_range().start {
                    lat.time_range().end - 1
                } else {
                    k - 1
                };
                let lhs = c1.get(k, n).norm();
                let rhs = c0.get(k_prev, n).norm();
                assert!(
                    (lhs - rhs).abs() < 1e-10 * (1.0 + rhs),
                    "shift covariance at ({k},{n})"
                );
            }
        }
    }

    #[test]
    fn synthesis_of_an_atom_returns_the_window() {
        let (g, lat) = gaussian_lattice(32, 4, 4);
        let mut c = Sequence2D::new();
        c.insert(0, 0, Complex64::ONE);
        let out = gabor_synthesis(&c, &g, &lat).unwrap();
        for j in 0..32 {
            assert!((out.samples()[j] - g.samples()[j]).norm() < 1e-14);
        }
        // Adjointness: <D_gamma c, f> = <c, C_gamma f>.
        let f = g.translated(2).modulated(1);
        let mut c2 = Sequence2D::new();
        c2.insert(1, -2, Complex64::new(0.3, -0.8));
        c2.insert(-2, 1, Complex64::new(-1.1, 0.2));
        let lhs = gabor_synthesis(&c2, &g, &lat).unwrap().inner(&f);
        let cf = gabor_analysis(&f, &g, &lat).unwrap();
        let mut rhs = Complex64::ZERO;
        for (&(k, n), &v) in c2.iter() {
            rhs += v * cf.get(k, n).conj();
        }
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn walnut_bounds_for_constant_window_count_shifts() {
        let l = 32;
        let step = 0.25;
        let ones = GridSignal::from_fn(l, step, |_| Complex64::ONE).unwrap();
        let lat = GaborLattice::new(l, 4, 4).unwrap();
        let (lo, hi) = walnut_bounds(&ones, &lat).unwrap();
        // Every grid point sees all L/a translates of |1|^2.
        assert_eq!(lo, hi);
        assert!((lo - (l / 4) as f64).abs() < 1e-12);
    }

    #[test]
    fn walnut_bounds_gaussian_unit_alpha() {
        // g = exp(-pi x^2), alpha = 1: direct summation of the theta series
        // sum_k exp(-2 pi (x-k)^2) gives min 0.4157606 (half-integers) and
        // max 1.0037349 (integers); values frozen from that oracle.
        let l = 256;
        let step = 1.0 / 16.0; // T = 16, alpha = 1 at a = 16
        let g = GridSignal::from_fn(l, step, |x| {
            Complex64::new((-PI * x * x).exp(), 0.0)
        })
        .unwrap();
        let lat = GaborLattice::new(l, 16, 16).unwrap();
        let (lo, hi) = walnut_bounds(&g, &lat).unwrap();
        assert!((lo - 0.4157606).abs() < 1e-6, "lower bound {lo}");
        assert!((hi - 1.0037349).abs() < 1e-6, "upper bound {hi}");
    }

    #[test]
    fn window_with_a_hole_fails_walnut() {
        let l = 32;
        let step = 0.25;
        // Supported away from a full alpha-cell.
        let g = GridSignal::from_fn(l, step, |x| {
            if (0.0..1.0).contains(&x) {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        })
        .unwrap();
        let lat = GaborLattice::new(l, 8, 2).unwrap(); // alpha = 2
        let (lo, _) = walnut_bounds(&g, &lat).unwrap();
        assert_eq!(lo, 0.0);
        assert!(matches!(
            dual_window(&g, &lat, DualWindowConfig::for_grid(l)),
            Err(GaborError::WalnutLowerBoundZero)
        ));
    }

    #[test]
    fn full_lattice_is_tight_and_dual_is_scaled_window() {
        // a = b = 1: S = L ||g||^2 Id, so the dual window is g / (L ||g||^2).
        let l = 32;
        let g = GridSignal::gaussian(l);
        let lat = GaborLattice::new(l, 1, 1).unwrap();
        let frame_const = l as f64 * g.l2_norm().powi(2);
        let f = g.translated(4).modulated(-3);
        let sf = frame_operator(&f, &g, &lat).unwrap();
        for j in 0..l {
            assert!((sf.samples()[j] - frame_const * f.samples()[j]).norm() < 1e-10);
        }
        let dual = dual_window(&g, &lat, DualWindowConfig::for_grid(l)).unwrap();
        for j in 0..l {
            assert!((dual.samples()[j] - g.samples()[j] / frame_const).norm() < 1e-12);
        }
    }

    #[test]
    fn dual_window_reconstructs_at_quarter_density() {
        let l = 128;
        let g = GridSignal::gaussian(l);
        // alpha beta = a b / L = 1/4.
        let lat = GaborLattice::new(l, 8, 4).unwrap();
        let dual = dual_window(&g, &lat, DualWindowConfig::for_grid(l)).unwrap();
        // D_dual C_g f = f; check on a deterministic band-limited signal.
        let f = GridSignal::gaussian(l)
            .modulated(3)
            .sum(&GridSignal::gaussian(l).translated(-5).scaled(Complex64::new(0.0, 0.7)))
            .unwrap();
        let c = gabor_analysis(&f, &g, &lat).unwrap();
        let rec = gabor_synthesis(&c, &dual, &lat).unwrap();
        let err = rec
            .sum(&f.scaled(Complex64::new(-1.0, 0.0)))
            .unwrap()
            .l2_norm()
            / f.l2_norm();
        assert!(err < 1e-8, "reconstruction error {err}");
        // Role symmetry: D_g C_dual f = f as well.
        let c2 = gabor_analysis(&f, &dual, &lat).unwrap();
        let rec2 = gabor_synthesis(&c2, &g, &lat).unwrap();
        let err2 = rec2
            .sum(&f.scaled(Complex64::new(-1.0, 0.0)))
            .unwrap()
            .l2_norm()
            / f.l2_norm();
        assert!(err2 < 1e-8, "swapped reconstruction error {err2}");
    }

    #[test]
    fn overcritical_lattice_reports_failure() {
        let l = 32;
        let g = GridSignal::gaussian(l);
        let lat = GaborLattice::new(l, 8, 8).unwrap(); // density 2
        assert!(matches!(
            dual_window(&g, &lat, DualWindowConfig::for_grid(l)),
            Err(GaborError::Overcritical(_))
        ));
    }

    #[test]
    fn modulation_norm_l2_matches_parseval_on_tight_frame() {
        let l = 64;
        let g = GridSignal::gaussian(l);
        let lat = GaborLattice::new(l, 1, 1).unwrap();
        let frame_const = l as f64 * g.l2_norm().powi(2);
        let f = GridSignal::gaussian(l).modulated(2).translated(1);
        let two: Exponent = "2".parse().unwrap();
        let norm = modulation_norm(&f, &g, &lat, &two, &two, &PowerWeight::Constant).unwrap();
        assert!(
            (norm - frame_const.sqrt() * f.l2_norm()).abs() < 1e-8,
            "Parseval mismatch: {norm}"
        );
        // Zero signal maps to zero.
        let z = GridSignal::zeros(l, f.step()).unwrap();
        assert_eq!(
            modulation_norm(&z, &g, &lat, &two, &two, &PowerWeight::Constant).unwrap(),
            0.0
        );
    }

    #[test]
    fn modulation_norm_weight_scales_with_lattice_positions() {
        let l = 32;
        let g = GridSignal::gaussian(l);
        let lat = GaborLattice::new(l, 4, 4).unwrap();
        let one: Exponent = "1".parse().unwrap();
        let w = PowerWeight::separable(Rational::from_int(1), Rational::from_int(0));
        let f = g.translated(4);
        let n0 = modulation_norm(&f, &g, &lat, &one, &one, &PowerWeight::Constant).unwrap();
        let n1 = modulation_norm(&f, &g, &lat, &one, &one, &w).unwrap();
        // The weighted norm strictly dominates the unweighted one.
        assert!(n1 > n0);
    }
}
