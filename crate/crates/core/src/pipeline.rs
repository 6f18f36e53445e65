//! From far-field matrices to processed data on the unit disk.
//!
//! By reciprocity `u_inf(x; theta) = u_inf(-theta; -x)`, the far field is a
//! function of `p = (theta - x) / 2` alone; processed data are
//! `u(p) = u_inf / k^2` sampled on a polar grid of the unit disk, on which
//! the Born model reads `u_b(p) = int_B e^{i c p.y} q(y) dy` with `c = 2k`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;

use crate::contrast::ContrastGrid;
use crate::error::{Error, Result};
use crate::farfield::{wrap_angle, DirectionSet, FarFieldMatrix};
use crate::quadrature::chebyshev_open_left_weights;

pub const DEFAULT_N1: usize = 104;
pub const DEFAULT_N2: usize = 56;

/// Distances closer than this are treated as ties in the nearest-pair search.
const TIE_TOL: f64 = 1e-12;

/// Polar quadrature grid of the unit disk.
///
/// Radii `r_m = sqrt((cos(m pi / N2) + 1) / 2)`, `m = 0..N2-1` (from `r_0 = 1`
/// inwards) and angles `theta_n = 2 pi n / N1`, `n = 0..N1-1`. The radial
/// weights are the Clenshaw–Curtis-type interpolatory weights on the nodes
/// `eta_m = cos(m pi / N2)`, mapped by `r dr = d eta / 4`, so the rule
/// integrates `r^{2j}`-polynomials of degree `< N2` in `eta` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarGrid {
    n1: usize,
    n2: usize,
    r: Vec<f64>,
    theta: Vec<f64>,
    /// Weight of `int_0^1 f(r) r dr` at each radius.
    radial_weights: Vec<f64>,
}

impl PolarGrid {
    pub fn new(n1: usize, n2: usize) -> Result<Self> {
        if n1 == 0 || n2 < 2 {
            return Err(Error::InvalidArgument(format!(
                "polar grid needs N1 >= 1 and N2 >= 2, got {n1} x {n2}"
            )));
        }
        let eta: Vec<f64> = (0..n2).map(|m| (m as f64 * PI / n2 as f64).cos()).collect();
        let r = eta.iter().map(|e| ((e + 1.0) / 2.0).sqrt()).collect();
        let radial_weights = chebyshev_open_left_weights(n2).into_iter().map(|w| w / 4.0).collect();
        let theta = (0..n1).map(|n| TAU * n as f64 / n1 as f64).collect();
        Ok(Self {
            n1,
            n2,
            r,
            theta,
            radial_weights,
        })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn radii(&self) -> &[f64] {
        &self.r
    }

    pub fn angles(&self) -> &[f64] {
        &self.theta
    }

    pub fn radial_weights(&self) -> &[f64] {
        &self.radial_weights
    }

    /// Quadrature weight of node `(m, n)` for `int_B f dx`.
    pub fn weight(&self, m: usize) -> f64 {
        self.radial_weights[m] * TAU / self.n1 as f64
    }

    /// Cartesian coordinates of node `(m, n)`.
    pub fn point(&self, m: usize, n: usize) -> [f64; 2] {
        let (s, c) = self.theta[n].sin_cos();
        [self.r[m] * c, self.r[m] * s]
    }

    /// `int_B f` for radial-major samples `f[m * N1 + n]`.
    pub fn integrate(&self, f: &[f64]) -> f64 {
        self.check_len(f.len());
        (0..self.n2)
            .map(|m| self.weight(m) * f[m * self.n1..(m + 1) * self.n1].iter().sum::<f64>())
            .sum()
    }

    /// `<a, b>_{L^2(B)} = int_B a conj(b)`.
    pub fn inner(&self, a: &[Complex64], b: &[Complex64]) -> Complex64 {
        self.check_len(a.len());
        self.check_len(b.len());
        (0..self.n2)
            .map(|m| {
                let row = m * self.n1..(m + 1) * self.n1;
                let s: Complex64 = a[row.clone()].iter().zip(&b[row]).map(|(x, y)| x * y.conj()).sum();
                s * self.weight(m)
            })
            .sum()
    }

    pub fn norm(&self, a: &[Complex64]) -> f64 {
        self.inner(a, a).re.max(0.0).sqrt()
    }

    fn check_len(&self, len: usize) {
        assert_eq!(len, self.len(), "sample count does not match the polar grid");
    }
}

/// Processed data `u(p_{m,n})`, radial-major `values[m * N1 + n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcessedData {
    /// Bandwidth `c = 2k`.
    pub c: f64,
    pub grid: PolarGrid,
    pub values: Vec<Complex64>,
    /// Half-width of the aperture, `None` for full aperture.
    pub aperture: Option<f64>,
}

impl ProcessedData {
    pub fn new(c: f64, grid: PolarGrid, values: Vec<Complex64>, aperture: Option<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Shape(format!(
                "{} values for a {} x {} polar grid",
                values.len(),
                grid.n2(),
                grid.n1()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::format("processed data", "non-finite value"));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidArgument(format!("bandwidth must be positive, got {c}")));
        }
        Ok(Self {
            c,
            grid,
            values,
            aperture,
        })
    }

    pub fn get(&self, m: usize, n: usize) -> Complex64 {
        self.values[m * self.grid.n1() + n]
    }

    pub fn norm(&self) -> f64 {
        self.grid.norm(&self.values)
    }
}

/// For every polar node, the direction pair `(i, j)` whose half-difference
/// `(theta_j - x_i) / 2` lies closest; `None` marks nodes outside the
/// measured region under a limited aperture.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcessingMap {
    pairs: Vec<Option<(usize, usize)>>,
}

impl ProcessingMap {
    pub fn new(obs: &DirectionSet, inc: &DirectionSet, grid: &PolarGrid, aperture: Option<f64>) -> Self {
        let ux: Vec<[f64; 2]> = (0..obs.len()).map(|i| obs.unit(i)).collect();
        let ut: Vec<[f64; 2]> = (0..inc.len()).map(|j| inc.unit(j)).collect();
        let inside = |a: f64| aperture.is_none_or(|t| wrap_angle(a).abs() <= t);
        let obs_in: Vec<bool> = obs.angles().iter().map(|&a| inside(a)).collect();
        let inc_in: Vec<bool> = inc.angles().iter().map(|&a| inside(a)).collect();

        let mut pairs = Vec::with_capacity(grid.len());
        for m in 0..grid.n2() {
            for n in 0..grid.n1() {
                let p = grid.point(m, n);
                let mut best_all = f64::INFINITY;
                let mut best_measured = (f64::INFINITY, None);
                for (i, x) in ux.iter().enumerate() {
                    for (j, t) in ut.iter().enumerate() {
                        let dx = p[0] - 0.5 * (t[0] - x[0]);
                        let dy = p[1] - 0.5 * (t[1] - x[1]);
                        let d = (dx * dx + dy * dy).sqrt();
                        if d < best_all - TIE_TOL {
                            best_all = d;
                        }
                        if obs_in[i] && inc_in[j] && d < best_measured.0 - TIE_TOL {
                            best_measured = (d, Some((i, j)));
                        }
                    }
                }
                let keep = best_measured.0 <= best_all + TIE_TOL;
                pairs.push(if keep { best_measured.1 } else { None });
            }
        }
        Self { pairs }
    }

    pub fn pairs(&self) -> &[Option<(usize, usize)>] {
        &self.pairs
    }

    /// Apply the map to a far-field matrix with matching directions.
    pub fn apply(&self, ff: &FarFieldMatrix, grid: &PolarGrid) -> Result<ProcessedData> {
        if self.pairs.len() != grid.len() {
            return Err(Error::Shape("processing map does not match the polar grid".into()));
        }
        let scale = 1.0 / (ff.k * ff.k);
        let values = self
            .pairs
            .iter()
            .map(|p| match p {
                Some((i, j)) => ff.get(*i, *j) * scale,
                None => Complex64::new(0.0, 0.0),
            })
            .collect();
        ProcessedData::new(2.0 * ff.k, grid.clone(), values, ff.aperture)
    }

    /// Far-field matrix whose processing reproduces `u` on the range of the
    /// map; pairs not selected by any node are zero.
    pub fn embed(&self, u: &ProcessedData, obs: &DirectionSet, inc: &DirectionSet) -> Result<FarFieldMatrix> {
        let k = u.c / 2.0;
        let mut values = vec![Complex64::new(0.0, 0.0); obs.len() * inc.len()];
        for (node, p) in self.pairs.iter().enumerate() {
            if let Some((i, j)) = p {
                values[i * inc.len() + j] = u.values[node] * k * k;
            }
        }
        let mut ff = FarFieldMatrix::new(k, obs.clone(), inc.clone(), values)?;
        ff.aperture = u.aperture;
        Ok(ff)
    }
}

/// Nearest-pair processing of a far-field matrix onto `grid`.
pub fn process_far_field(ff: &FarFieldMatrix, grid: &PolarGrid) -> Result<ProcessedData> {
    ProcessingMap::new(&ff.obs, &ff.inc, grid, ff.aperture).apply(ff, grid)
}

/// Multiplicative noise `u (1 + delta xi)` with `Re xi`, `Im xi ~ N(0, 1/2)`
/// independent. Draws come from ChaCha8 seeded by `seed`, real part then
/// imaginary part for each entry in observation-major order.
pub fn add_noise(ff: &FarFieldMatrix, delta: f64, seed: u64) -> Result<FarFieldMatrix> {
    if !(delta >= 0.0 && delta.is_finite()) {
        return Err(Error::InvalidArgument(format!("noise level must be >= 0, got {delta}")));
    }
    let mut out = ff.clone();
    if delta == 0.0 {
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, 0.5f64.sqrt()).expect("valid standard deviation");
    for v in &mut out.values {
        let xi = Complex64::new(normal.sample(&mut rng), normal.sample(&mut rng));
        *v *= Complex64::new(1.0, 0.0) + xi * delta;
    }
    Ok(out)
}

/// `(R_phi q)(x) = q(R_{-phi} x)`: index permutation for multiples of
/// `pi / 2`, bilinear resampling otherwise.
pub fn rotate_contrast(q: &ContrastGrid, phi: f64) -> ContrastGrid {
    let quarter = phi / (PI / 2.0);
    let n = q.n();
    if (quarter - quarter.round()).abs() < 1e-12 {
        let turns = (quarter.round() as i64).rem_euclid(4);
        let src = q.values();
        let mut out = vec![0.0; n * n];
        for iy in 0..n {
            for ix in 0..n {
                // Source cell of R_{-phi} applied to the centre of (ix, iy).
                let (sx, sy) = match turns {
                    0 => (ix, iy),
                    1 => (iy, n - 1 - ix),
                    2 => (n - 1 - ix, n - 1 - iy),
                    _ => (n - 1 - iy, ix),
                };
                out[iy * n + ix] = src[sy * n + sx];
            }
        }
        return ContrastGrid::new(n, out).expect("permutation preserves validity");
    }
    let (s, c) = phi.sin_cos();
    let mut out = Vec::with_capacity(n * n);
    for iy in 0..n {
        let y = q.coord(iy);
        for ix in 0..n {
            let x = q.coord(ix);
            out.push(q.sample(c * x + s * y, -s * x + c * y));
        }
    }
    ContrastGrid::new(n, out).expect("interpolation preserves validity")
}

/// Rotation of processed data by `steps` angular grid steps (exact cyclic
/// shift of the angular axis).
pub fn rotate_processed(u: &ProcessedData, steps: i64) -> ProcessedData {
    let n1 = u.grid.n1();
    let shift = steps.rem_euclid(n1 as i64) as usize;
    let mut values = vec![Complex64::new(0.0, 0.0); u.values.len()];
    for m in 0..u.grid.n2() {
        for n in 0..n1 {
            values[m * n1 + (n + shift) % n1] = u.values[m * n1 + n];
        }
    }
    ProcessedData { values, ..u.clone() }
}

/// Zero every entry whose observation or incidence angle, wrapped to
/// `(-pi, pi]`, lies outside `[-theta, theta]`.
pub fn apply_limited_aperture(ff: &FarFieldMatrix, theta: f64) -> Result<FarFieldMatrix> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::InvalidArgument(format!(
            "aperture must lie in (0, pi), got {theta}"
        )));
    }
    let inside = |a: f64| wrap_angle(a).abs() <= theta;
    let mut out = ff.clone();
    let n_inc = ff.n_inc();
    for i in 0..ff.n_obs() {
        for j in 0..n_inc {
            if !(inside(ff.obs.angles()[i]) && inside(ff.inc.angles()[j])) {
                out.values[i * n_inc + j] = Complex64::new(0.0, 0.0);
            }
        }
    }
    out.aperture = Some(theta);
    Ok(out)
}

/// Bilinear samples of `q` at the polar nodes, radial-major.
pub fn contrast_to_polar_image(q: &ContrastGrid, grid: &PolarGrid) -> Vec<f64> {
    let mut out = Vec::with_capacity(grid.len());
    for m in 0..grid.n2() {
        for n in 0..grid.n1() {
            let [x, y] = grid.point(m, n);
            out.push(q.sample(x, y));
        }
    }
    out
}

/// Resample radial-major polar samples onto an `n x n` Cartesian grid
/// (linear in `r` and periodic-linear in `theta`, zero outside the disk).
/// Inside the innermost ring the ring mean is used as the centre value.
pub fn polar_to_cartesian<T>(values: &[T], grid: &PolarGrid, n: usize) -> Vec<T>
where
    T: Copy + Default + std::ops::Add<Output = T> + std::ops::Mul<f64, Output = T>,
{
    let (n1, n2) = (grid.n1(), grid.n2());
    let r = grid.radii();
    let inner = n2 - 1;
    let centre = values[inner * n1..]
        .iter()
        .fold(T::default(), |acc, &v| acc + v * (1.0 / n1 as f64));
    let h = 2.0 / n as f64;
    let mut out = vec![T::default(); n * n];
    for iy in 0..n {
        let y = -1.0 + (iy as f64 + 0.5) * h;
        for ix in 0..n {
            let x = -1.0 + (ix as f64 + 0.5) * h;
            let rho = x.hypot(y);
            if rho > 1.0 {
                continue;
            }
            let t = y.atan2(x).rem_euclid(TAU) / TAU * n1 as f64;
            let n_lo = (t.floor() as usize) % n1;
            let n_hi = (n_lo + 1) % n1;
            let ft = t - t.floor();
            let ring = |m: usize| values[m * n1 + n_lo] * (1.0 - ft) + values[m * n1 + n_hi] * ft;
            out[iy * n + ix] = if rho <= r[inner] {
                let s = rho / r[inner];
                centre * (1.0 - s) + ring(inner) * s
            } else {
                // r is decreasing in m: find m with r[m] >= rho > r[m + 1].
                let m = r.partition_point(|&rm| rm >= rho).saturating_sub(1).min(inner - 1);
                let s = (rho - r[m + 1]) / (r[m] - r[m + 1]);
                ring(m) * s + ring(m + 1) * (1.0 - s)
            };
        }
    }
    out
}

/// Born data of a contrast given by its samples on `source`, evaluated at
/// the nodes of `target`: `u(p) = int_B e^{i c p.y} q(y) dy` by the polar
/// quadrature of `source`. Bypasses direction matching entirely.
pub fn born_on_grid(c: f64, q: &[Complex64], source: &PolarGrid, target: &PolarGrid) -> Vec<Complex64> {
    source.check_len(q.len());
    let nodes: Vec<([f64; 2], Complex64)> = (0..source.n2())
        .flat_map(|m| (0..source.n1()).map(move |n| (m, n)))
        .map(|(m, n)| (source.point(m, n), q[m * source.n1() + n] * source.weight(m)))
        .filter(|(_, w)| *w != Complex64::new(0.0, 0.0))
        .collect();
    (0..target.len())
        .into_par_iter()
        .map(|idx| {
            let p = target.point(idx / target.n1(), idx % target.n1());
            nodes
                .iter()
                .map(|(y, w)| w * Complex64::from_polar(1.0, c * (p[0] * y[0] + p[1] * y[1])))
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_layout() {
        let g = PolarGrid::new(8, 6).unwrap();
        assert_eq!(g.radii()[0], 1.0);
        assert!(g.radii().windows(2).all(|w| w[1] < w[0]));
        assert!(*g.radii().last().unwrap() > 0.0);
        assert!(g.radial_weights().iter().all(|&w| w >= 0.0));
        let ones = vec![1.0; g.len()];
        assert!((g.integrate(&ones) - PI).abs() < 1e-12);
        assert!(PolarGrid::new(0, 4).is_err());
    }

    #[test]
    fn rotate_processed_is_a_cyclic_shift() {
        let g = PolarGrid::new(6, 3).unwrap();
        let vals: Vec<Complex64> = (0..18).map(|i| Complex64::new(i as f64, 0.0)).collect();
        let u = ProcessedData::new(2.0, g, vals, None).unwrap();
        let r = rotate_processed(&u, 1);
        assert_eq!(r.get(0, 1), u.get(0, 0));
        assert_eq!(r.get(2, 0), u.get(2, 5));
        assert_eq!(rotate_processed(&u, -1).get(0, 0), u.get(0, 1));
    }

    #[test]
    fn quarter_turn_moves_a_point_counterclockwise() {
        let n = 32;
        let mut v = vec![0.0; n * n];
        // Cell on the positive x axis side: ix large, iy middle-ish.
        v[10 * n + 28] = 1.0;
        let q = ContrastGrid::new(n, v).unwrap();
        let r = rotate_contrast(&q, PI / 2.0);
        // (x, y) -> (-y, x): ix' = n-1-iy, iy' = ix.
        assert_eq!(r.get(n - 1 - 10, 28), 1.0);
        // Bilinear path agrees with the permutation for a quarter turn nudged
        // off the exact branch.
        let smooth = ContrastGrid::from_fn(n, |x, y| (-(x - 0.2).powi(2) * 8.0 - y * y * 5.0).exp()).unwrap();
        let exact = rotate_contrast(&smooth, PI / 2.0);
        let nudged = rotate_contrast(&smooth, PI / 2.0 + 1e-9);
        for (a, b) in exact.values().iter().zip(nudged.values()) {
            assert!((a - b).abs() < 1e-6);
        }
    }

    #[test]
    fn aperture_argument_checks() {
        let d = DirectionSet::uniform(4).unwrap();
        let ff = FarFieldMatrix::new(1.0, d.clone(), d, vec![Complex64::new(1.0, 0.0); 16]).unwrap();
        assert!(apply_limited_aperture(&ff, 0.0).is_err());
        assert!(apply_limited_aperture(&ff, PI).is_err());
        assert!(add_noise(&ff, -0.1, 1).is_err());
    }
}
