//! Low-rank inverse Born solver.
//!
//! Processed data are encoded by their projections onto the disk PSWFs,
//! `u_{m,n,l} = <u, psi_{m,n,l}>`. Since `F_b psi = alpha psi` and the PSWFs
//! are real, Born data of `q` satisfy `u_{m,n,l} = alpha_{m,n} q_{m,n,l}`;
//! the decoder divides by `alpha` on a cutoff set and resynthesizes.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::contrast::ContrastGrid;
use crate::error::{Error, Result};
use crate::pipeline::{PolarGrid, ProcessedData};
use crate::pswf::{harmonic, PswfBasis};

/// Relative tolerance when comparing the bandwidths of data and basis.
const BANDWIDTH_TOL: f64 = 1e-12;

/// Rule selecting the retained entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cutoff {
    /// Keep `|alpha| > eta`.
    Eta(f64),
    /// Keep `chi < 1 / alpha_reg`; `beta` is the smallest retained `|alpha|`.
    SturmLiouville { alpha_reg: f64, beta: f64 },
}

/// One projection and, if retained, its decoded contrast coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficient {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub alpha: Complex64,
    pub chi: f64,
    pub u_coeff: Complex64,
    pub q_coeff: Complex64,
}

/// Retained coefficients of a reconstruction.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCoefficients {
    pub c: f64,
    pub max_m: usize,
    pub max_n: usize,
    pub cutoff: Cutoff,
    pub entries: Vec<Coefficient>,
}

impl SpectralCoefficients {
    fn terms(&self) -> Vec<Term> {
        self.entries
            .iter()
            .map(|e| Term {
                m: e.m,
                n: e.n,
                l: e.l,
                coeff: e.q_coeff,
            })
            .collect()
    }

    /// `sum q_coeff psi` at the nodes of `grid`, radial-major.
    pub fn evaluate_polar(&self, basis: &PswfBasis, grid: &PolarGrid) -> Result<Vec<Complex64>> {
        expand_polar(basis, &self.terms(), grid)
    }

    /// `sum q_coeff psi` at the cell centres of an `n x n` grid on
    /// `[-1, 1]^2`; zero outside the disk.
    pub fn evaluate_cartesian(&self, basis: &PswfBasis, n: usize) -> Result<Vec<Complex64>> {
        expand_cartesian(basis, &self.terms(), n)
    }
}

/// One term `coeff * psi_{m,n,l}` of a PSWF expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub coeff: Complex64,
}

/// Values of `sum coeff psi` at the nodes of `grid`, radial-major.
pub fn expand_polar(basis: &PswfBasis, terms: &[Term], grid: &PolarGrid) -> Result<Vec<Complex64>> {
    let mut out = vec![Complex64::new(0.0, 0.0); grid.len()];
    for t in terms {
        let entry = basis.entry(t.m, t.n, t.l)?;
        let radial: Vec<f64> = grid.radii().iter().map(|&r| entry.radial.radial_value(r)).collect();
        let angular: Vec<f64> = grid.angles().iter().map(|&a| harmonic(t.m, t.l, a)).collect();
        for (m, rv) in radial.iter().enumerate() {
            let row = &mut out[m * grid.n1()..(m + 1) * grid.n1()];
            for (o, a) in row.iter_mut().zip(&angular) {
                *o += t.coeff * (rv * a);
            }
        }
    }
    Ok(out)
}

/// Values of `sum coeff psi` at the cell centres of an `n x n` grid on
/// `[-1, 1]^2` by direct evaluation; zero outside the closed unit disk.
pub fn expand_cartesian(basis: &PswfBasis, terms: &[Term], n: usize) -> Result<Vec<Complex64>> {
    for t in terms {
        basis.entry(t.m, t.n, t.l)?;
    }
    let h = 2.0 / n as f64;
    let cells: Vec<(usize, f64, f64)> = (0..n * n)
        .filter_map(|idx| {
            let x = -1.0 + ((idx % n) as f64 + 0.5) * h;
            let y = -1.0 + ((idx / n) as f64 + 0.5) * h;
            let r = x.hypot(y);
            (r <= 1.0).then(|| (idx, r, y.atan2(x)))
        })
        .collect();
    let values: Vec<Complex64> = cells
        .par_iter()
        .map(|&(_, r, theta)| {
            let mut s = Complex64::new(0.0, 0.0);
            let mut last: Option<(usize, usize, f64)> = None;
            for t in terms {
                // Reuse the radial factor across consecutive terms sharing (m, n).
                let rv = match last {
                    Some((m, nn, v)) if m == t.m && nn == t.n => v,
                    _ => {
                        let v = basis.radial(t.m, t.n).expect("checked above").radial_value(r);
                        last = Some((t.m, t.n, v));
                        v
                    }
                };
                s += t.coeff * (rv * harmonic(t.m, t.l, theta));
            }
            s
        })
        .collect();
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for ((idx, _, _), v) in cells.into_iter().zip(values) {
        out[idx] = v;
    }
    Ok(out)
}

/// A reconstructed contrast on the processing grid and on a Cartesian grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub coefficients: SpectralCoefficients,
    /// Radial-major values on the grid of the input data.
    pub polar: Vec<Complex64>,
    /// Row-major `n x n` cell-centre values.
    pub cartesian: Vec<Complex64>,
    pub n: usize,
}

impl Reconstruction {
    /// Real part on the Cartesian grid.
    pub fn real_contrast(&self) -> Result<ContrastGrid> {
        ContrastGrid::new(self.n, self.cartesian.iter().map(|v| v.re).collect())
    }
}

/// Samples of every basis function at the nodes of a polar grid.
struct GridTable {
    /// `values[e][node]`, entries in basis order.
    values: Vec<Vec<f64>>,
}

impl GridTable {
    fn new(basis: &PswfBasis, grid: &PolarGrid) -> Self {
        let angles = grid.angles();
        let values = basis
            .entries()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|e| {
                let mut v = Vec::with_capacity(grid.len());
                for &r in grid.radii() {
                    let rv = e.radial.radial_value(r);
                    v.extend(angles.iter().map(|&t| rv * harmonic(e.m, e.l, t)));
                }
                v
            })
            .collect();
        Self { values }
    }
}

fn check_bandwidth(u: &ProcessedData, basis: &PswfBasis) -> Result<()> {
    if (u.c - basis.c()).abs() > BANDWIDTH_TOL * basis.c() {
        return Err(Error::BandwidthMismatch {
            data: u.c,
            basis: basis.c(),
        });
    }
    Ok(())
}

/// All projections `<u, psi>` with `q_coeff = u_coeff / alpha`, in basis
/// order (`m`, then `n`, then `l`).
pub fn project(u: &ProcessedData, basis: &PswfBasis) -> Result<Vec<Coefficient>> {
    check_bandwidth(u, basis)?;
    let grid = &u.grid;
    let table = GridTable::new(basis, grid);
    let weights: Vec<f64> = (0..grid.n2()).map(|m| grid.weight(m)).collect();
    Ok(basis
        .entries()
        .zip(&table.values)
        .map(|(e, psi)| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (m, w) in weights.iter().enumerate() {
                let row = m * grid.n1()..(m + 1) * grid.n1();
                let s: Complex64 = u.values[row.clone()].iter().zip(&psi[row]).map(|(v, p)| v * p).sum();
                acc += s * w;
            }
            Coefficient {
                m: e.m,
                n: e.n,
                l: e.l,
                alpha: e.alpha,
                chi: e.radial.chi,
                u_coeff: acc,
                q_coeff: acc / e.alpha,
            }
        })
        .collect())
}

fn reconstruct(
    u: &ProcessedData,
    basis: &PswfBasis,
    cutoff: Cutoff,
    entries: Vec<Coefficient>,
    n: usize,
) -> Result<Reconstruction> {
    if entries.is_empty() {
        return Err(Error::EmptyCutoff);
    }
    let coefficients = SpectralCoefficients {
        c: basis.c(),
        max_m: basis.max_m(),
        max_n: basis.max_n(),
        cutoff,
        entries,
    };
    let polar = coefficients.evaluate_polar(basis, &u.grid)?;
    let cartesian = coefficients.evaluate_cartesian(basis, n)?;
    Ok(Reconstruction {
        coefficients,
        polar,
        cartesian,
        n,
    })
}

/// Truncated reconstruction `q^eta = sum_{|alpha| > eta} u_{m,n,l} / alpha
/// psi_{m,n,l}`, resampled onto an `n x n` Cartesian grid.
pub fn invert_eta(u: &ProcessedData, basis: &PswfBasis, eta: f64, n: usize) -> Result<Reconstruction> {
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "cutoff eta must be positive, got {eta}"
        )));
    }
    let kept: Vec<Coefficient> = project(u, basis)?
        .into_iter()
        .filter(|c| c.alpha.norm() > eta)
        .collect();
    reconstruct(u, basis, Cutoff::Eta(eta), kept, n)
}

/// Reconstruction over `chi < 1 / alpha_reg`. The reported `beta` is the
/// smallest retained `|alpha|`, which bounds the noise amplification.
pub fn invert_sl(u: &ProcessedData, basis: &PswfBasis, alpha_reg: f64, n: usize) -> Result<Reconstruction> {
    if !(alpha_reg > 0.0 && alpha_reg.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "regularization parameter must be positive, got {alpha_reg}"
        )));
    }
    let kept: Vec<Coefficient> = project(u, basis)?
        .into_iter()
        .filter(|c| c.chi < 1.0 / alpha_reg)
        .collect();
    let beta = kept.iter().map(|c| c.alpha.norm()).fold(f64::INFINITY, f64::min);
    reconstruct(u, basis, Cutoff::SturmLiouville { alpha_reg, beta }, kept, n)
}

/// `beta(alpha_reg)`: smallest `|alpha|` over `chi < 1 / alpha_reg`, or
/// `None` when that set is empty.
pub fn sl_beta(basis: &PswfBasis, alpha_reg: f64) -> Option<f64> {
    basis
        .entries()
        .filter(|e| e.radial.chi < 1.0 / alpha_reg)
        .map(|e| e.alpha.norm())
        .reduce(f64::min)
}

/// A retained entry of the filter profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RetainedEntry {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub alpha_abs: f64,
    pub chi: f64,
}

/// Entries with `|alpha| > eta`, in basis order.
pub fn filter_profile(basis: &PswfBasis, eta: f64) -> Vec<RetainedEntry> {
    basis
        .entries()
        .filter(|e| e.alpha.norm() > eta)
        .map(|e| RetainedEntry {
            m: e.m,
            n: e.n,
            l: e.l,
            alpha_abs: e.alpha.norm(),
            chi: e.radial.chi,
        })
        .collect()
}

/// Retained count for each `eta`, as `(eta, count)` pairs.
pub fn retained_counts(basis: &PswfBasis, etas: &[f64]) -> Vec<(f64, usize)> {
    let abs: Vec<f64> = basis.entries().map(|e| e.alpha.norm()).collect();
    etas.iter()
        .map(|&eta| (eta, abs.iter().filter(|&&a| a > eta).count()))
        .collect()
}
