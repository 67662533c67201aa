//! Phase-space fields on `L x L` grids and their transforms.

use super::grid::centered_dft;
use super::TfrError;
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::io::{BufRead, Write};

/// A complex field sampled on the centered grid
/// `step_x * {-L/2..L/2-1} x step_xi * {-L/2..L/2-1}`, with the frequency
/// step tied to the space step by `step_xi = 1/(L * step_x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridField2D {
    samples: Vec<Complex64>,
    l: usize,
    step_x: f64,
}

impl GridField2D {
    pub fn zeros(l: usize, step_x: f64) -> Result<GridField2D, TfrError> {
        if l < 8 || !l.is_power_of_two() {
            return Err(TfrError::BadLength(l));
        }
        if !(step_x > 0.0) || !step_x.is_finite() {
            return Err(TfrError::BadStep(step_x));
        }
        Ok(GridField2D {
            samples: vec![Complex64::ZERO; l * l],
            l,
            step_x,
        })
    }

    pub fn from_fn(
        l: usize,
        step_x: f64,
        mut f: impl FnMut(f64, f64) -> Complex64,
    ) -> Result<GridField2D, TfrError> {
        let mut field = GridField2D::zeros(l, step_x)?;
        let step_xi = field.step_xi();
        let half = l as i64 / 2;
        for ix in 0..l {
            let x = (ix as i64 - half) as f64 * step_x;
            for ixi in 0..l {
                let xi = (ixi as i64 - half) as f64 * step_xi;
                field.samples[ix * l + ixi] = f(x, xi);
            }
        }
        Ok(field)
    }

    /// The 2-d Gaussian `exp(-pi (x^2 + xi^2))`.
    pub fn gaussian(l: usize, step_x: f64) -> Result<GridField2D, TfrError> {
        GridField2D::from_fn(l, step_x, |x, xi| {
            Complex64::new((-PI * (x * x + xi * xi)).exp(), 0.0)
        })
    }

    pub fn len(&self) -> usize {
        self.l
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step_x(&self) -> f64 {
        self.step_x
    }

    pub fn step_xi(&self) -> f64 {
        1.0 / (self.l as f64 * self.step_x)
    }

    pub fn x_coord(&self, ix: usize) -> f64 {
        (ix as i64 - self.l as i64 / 2) as f64 * self.step_x
    }

    pub fn xi_coord(&self, ixi: usize) -> f64 {
        (ixi as i64 - self.l as i64 / 2) as f64 * self.step_xi()
    }

    pub fn get(&self, ix: usize, ixi: usize) -> Complex64 {
        self.samples[ix * self.l + ixi]
    }

    pub fn set(&mut self, ix: usize, ixi: usize, v: Complex64) {
        self.samples[ix * self.l + ixi] = v;
    }

    pub fn get_wrapped(&self, ix: i64, ixi: i64) -> Complex64 {
        let l = self.l as i64;
        self.samples[(ix.rem_euclid(l) * l + ixi.rem_euclid(l)) as usize]
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn row(&self, ix: usize) -> &[Complex64] {
        &self.samples[ix * self.l..(ix + 1) * self.l]
    }

    pub(crate) fn row_mut(&mut self, ix: usize) -> &mut [Complex64] {
        &mut self.samples[ix * self.l..(ix + 1) * self.l]
    }

    pub(crate) fn rows_mut(&mut self) -> rayon::slice::ChunksMut<'_, Complex64> {
        self.samples.par_chunks_mut(self.l)
    }

    pub fn same_grid(&self, other: &GridField2D) -> bool {
        self.l == other.l && (self.step_x - other.step_x).abs() <= 1e-12 * self.step_x
    }

    pub fn sup_norm(&self) -> f64 {
        self.samples.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `L^2` norm with the phase-space area element.
    pub fn l2_norm(&self) -> f64 {
        let cell = self.step_x * self.step_xi();
        (cell * self.samples.iter().map(|v| v.norm_sqr()).sum::<f64>()).sqrt()
    }

    pub fn max_abs_diff(&self, other: &GridField2D) -> f64 {
        debug_assert!(self.same_grid(other));
        self.samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, c: Complex64) -> GridField2D {
        GridField2D {
            samples: self.samples.iter().map(|v| c * v).collect(),
            l: self.l,
            step_x: self.step_x,
        }
    }

    pub fn pointwise_mul(&self, other: &GridField2D) -> Result<GridField2D, TfrError> {
        if !self.same_grid(other) {
            return Err(TfrError::MismatchedGrids);
        }
        Ok(GridField2D {
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a * b)
                .collect(),
            l: self.l,
            step_x: self.step_x,
        })
    }

    /// Continuous-normalization 2-d Fourier transform. The output field is
    /// indexed by the dual pair `(z1, z2)` with `z1` dual to `x` (step
    /// `step_xi`) and `z2` dual to `xi` (step `step_x`).
    pub fn fourier_2d(&self) -> GridField2D {
        let l = self.l;
        let cell = self.step_x * self.step_xi();
        // Transform along the second index (rows), then the first.
        let mut stage: Vec<Complex64> = Vec::with_capacity(l * l);
        for ix in 0..l {
            stage.extend(centered_dft(self.row(ix)));
        }
        let mut out = vec![Complex64::ZERO; l * l];
        let mut col = vec![Complex64::ZERO; l];
        for i2 in 0..l {
            for ix in 0..l {
                col[ix] = stage[ix * l + i2];
            }
            let tr = centered_dft(&col);
            for (i1, v) in tr.into_iter().enumerate() {
                out[i1 * l + i2] = v * cell;
            }
        }
        GridField2D {
            samples: out,
            l,
            step_x: self.step_xi(),
        }
    }

    /// Writes rows `x,xi,re,im` with a header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "x,xi,re,im")?;
        for ix in 0..self.l {
            for ixi in 0..self.l {
                let v = self.get(ix, ixi);
                writeln!(w, "{},{},{},{}", self.x_coord(ix), self.xi_coord(ixi), v.re, v.im)?;
            }
        }
        Ok(())
    }

    /// Reads rows `x,xi,re,im` in the row-major order written by
    /// [`GridField2D::write_csv`].
    pub fn read_csv<R: BufRead>(r: R) -> Result<GridField2D, TfrError> {
        let mut rows = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let line = line.map_err(|e| TfrError::Io(e.to_string()))?;
            let line = line.trim();
            if line.is_empty() || (i == 0 && line.starts_with('x')) {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 4 {
                return Err(TfrError::Io(format!("bad field row: {line:?}")));
            }
            let parse = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| TfrError::Io(format!("bad number in row: {line:?}")))
            };
            rows.push((
                parse(fields[0])?,
                Complex64::new(parse(fields[2])?, parse(fields[3])?),
            ));
        }
        let n = rows.len();
        let l = (n as f64).sqrt().round() as usize;
        if l * l != n || l < 8 || !l.is_power_of_two() {
            return Err(TfrError::BadLength(l));
        }
        let step_x = rows[l].0 - rows[0].0;
        if !(step_x > 0.0) {
            return Err(TfrError::BadStep(step_x));
        }
        let mut field = GridField2D::zeros(l, step_x)?;
        for (k, (_, v)) in rows.into_iter().enumerate() {
            field.samples[k] = v;
        }
        Ok(field)
    }
}

/// STFT of a 2-d field with a 2-d window, sampled on a decimated lattice to
/// bound memory: shifts `z` and frequencies `zeta` both run over every
/// `decim`-th grid point.
#[derive(Clone, Debug)]
pub struct Stft2 {
    data: Vec<Complex64>,
    l: usize,
    decim: usize,
    step_x: f64,
}

impl Stft2 {
    /// Points per decimated axis.
    pub fn side(&self) -> usize {
        self.l / self.decim
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn decim(&self) -> usize {
        self.decim
    }

    fn idx(&self, r1: usize, r2: usize, u1: usize, u2: usize) -> usize {
        let s = self.side();
        ((r1 * s + r2) * s + u1) * s + u2
    }

    /// Value at shift `z = (z1(r1), z2(r2))`, frequency `zeta = (zeta1(u1), zeta2(u2))`.
    pub fn get(&self, r1: usize, r2: usize, u1: usize, u2: usize) -> Complex64 {
        self.data[self.idx(r1, r2, u1, u2)]
    }

    pub fn z1(&self, r1: usize) -> f64 {
        ((r1 * self.decim) as i64 - self.l as i64 / 2) as f64 * self.step_x
    }

    pub fn z2(&self, r2: usize) -> f64 {
        ((r2 * self.decim) as i64 - self.l as i64 / 2) as f64 / (self.l as f64 * self.step_x)
    }

    /// Frequency dual to `z1` (step `step_xi`).
    pub fn zeta1(&self, u1: usize) -> f64 {
        self.z2(u1)
    }

    /// Frequency dual to `z2` (step `step_x`).
    pub fn zeta2(&self, u2: usize) -> f64 {
        self.z1(u2)
    }

    pub fn sup_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// 2-d STFT `V_G F(z, zeta)` for fields on a shared grid, on the decimated
/// lattice. `decim` must divide the grid length.
pub fn stft2(f: &GridField2D, g: &GridField2D, decim: usize) -> Result<Stft2, TfrError> {
    if !f.same_grid(g) {
        return Err(TfrError::MismatchedGrids);
    }
    let l = f.len();
    if decim == 0 || l % decim != 0 {
        return Err(TfrError::BadDecimation { decim, len: l });
    }
    let side = l / decim;
    let cell = f.step_x() * f.step_xi();
    let data: Vec<Complex64> = (0..side * side)
        .into_par_iter()
        .flat_map_iter(|shift| {
            let r1 = shift / side;
            let r2 = shift % side;
            let li = l as i64;
            // Shift z = ((r1 D - L/2) step_x, (r2 D - L/2) step_xi); the
            // window argument y - z sits at physical index j - rD + L/2.
            let sx = (r1 * decim) as i64 - li / 2;
            let sxi = (r2 * decim) as i64 - li / 2;
            // Windowed copy, then a centered 2-d DFT, keeping every
            // decim-th frequency bin.
            let mut h = vec![Complex64::ZERO; l * l];
            for j1 in 0..l {
                for j2 in 0..l {
                    let w = g
                        .get_wrapped(j1 as i64 - sx, j2 as i64 - sxi)
                        .conj();
                    h[j1 * l + j2] = f.get(j1, j2) * w * cell;
                }
            }
            // Rows, then columns.
            for j1 in 0..l {
                let tr = centered_dft(&h[j1 * l..(j1 + 1) * l]);
                h[j1 * l..(j1 + 1) * l].copy_from_slice(&tr);
            }
            let mut out = vec![Complex64::ZERO; side * side];
            let mut col = vec![Complex64::ZERO; l];
            for u2 in 0..side {
                let i2 = u2 * decim;
                for j1 in 0..l {
                    col[j1] = h[j1 * l + i2];
                }
                let tr = centered_dft(&col);
                for u1 in 0..side {
                    out[u1 * side + u2] = tr[u1 * decim];
                }
            }
            out
        })
        .collect();
    Ok(Stft2 {
        data,
        l,
        decim,
        step_x: f.step_x(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourier_2d_of_gaussian_is_itself() {
        // On a self-dual grid the 2-d Gaussian is a fixed point.
        let l = 32;
        let g = GridField2D::gaussian(l, 1.0 / (l as f64).sqrt()).unwrap();
        let gh = g.fourier_2d();
        assert!(g.max_abs_diff(&gh) < 1e-10);
    }

    #[test]
    fn stft2_at_origin_is_energy() {
        let l = 16;
        let g = GridField2D::gaussian(l, 1.0 / (l as f64).sqrt()).unwrap();
        let s = stft2(&g, &g, 4).unwrap();
        let origin = s.get(s.side() / 2, s.side() / 2, s.side() / 2, s.side() / 2);
        let e = g.l2_norm().powi(2);
        assert!((origin.re - e).abs() < 1e-10 && origin.im.abs() < 1e-12);
    }

    #[test]
    fn stft2_rejects_bad_decimation() {
        let l = 16;
        let g = GridField2D::gaussian(l, 0.25).unwrap();
        assert!(matches!(
            stft2(&g, &g, 3),
            Err(TfrError::BadDecimation { .. })
        ));
    }

    #[test]
    fn field_csv_round_trip() {
        let g = GridField2D::gaussian(8, 0.5).unwrap();
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let back = GridField2D::read_csv(&buf[..]).unwrap();
        assert!(g.max_abs_diff(&back) < 1e-12);
        assert!((back.step_x() - 0.5).abs() < 1e-12);
    }
}
