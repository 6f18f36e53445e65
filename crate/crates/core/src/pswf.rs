//! Disk prolate spheroidal wave functions.
//!
//! `psi_{m,n,l}(x; c) = r^m phi_{m,n}(2r^2 - 1) Y_{m,l}(theta)` where
//! `phi_{m,n} = sum_j beta_j P_j^{(m)}` and `beta` is an eigenvector of the
//! radial Sturm–Liouville operator
//!
//! ```text
//! D = -(1 - r^2) d_rr - (1/r) d_r + 3r d_r + m^2 / r^2 + c^2 r^2
//! ```
//!
//! represented in the weighted Jacobi basis. The operator matrix is obtained
//! by applying `D` to each basis function and projecting with Gauss–Legendre
//! quadrature in `r`; the three-term structure is then checked rather than
//! assumed. Prolate eigenvalues `alpha_{m,n}` of the restricted Fourier
//! transform `F_b f(x) = int_B e^{i c x.y} f(y) dy` are computed by
//! projection through its radial (Hankel) form.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre_on;
use crate::special::spherical_harmonic;
use crate::special::{bessel_j_sequence, jacobi_values, jacobi_with_derivatives, JacobiParams};
use crate::tridiag::symmetric_tridiagonal_eigen;

/// Largest admissible off-band entry of the assembled operator.
pub const ASSEMBLY_TOL: f64 = 1e-8;
/// Relative change of `chi` tolerated when the truncation is doubled.
pub const TRUNCATION_TOL: f64 = 1e-8;
/// Bound on `||F_b psi - alpha psi||` for a unit-norm `psi`.
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-6;
/// Relative distance to the plateau value `2 pi / c` below which two prolate
/// eigenvalues are indistinguishable in double precision.
pub const PLATEAU_RESOLUTION: f64 = 1e-12;
/// Absolute level below which `|alpha|` is rounding noise of the quadrature.
pub const ALPHA_NOISE_FLOOR: f64 = 1e-13;
/// Number of Gauss–Legendre points of the radial Hankel quadrature.
pub const HANKEL_POINTS: usize = 200;

/// Symmetric tridiagonal matrix (diagonal and first off-diagonal).
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

/// Radial factor of a disk PSWF.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialEigenpair {
    pub m: usize,
    pub n: usize,
    /// Sturm–Liouville eigenvalue.
    pub chi: f64,
    /// Jacobi coefficients, unit Euclidean norm (equivalently unit `L^2(B)`
    /// norm of the PSWF). The largest-magnitude coefficient is positive.
    pub beta: Vec<f64>,
    /// Highest Jacobi degree `J` (`beta.len() == J + 1`).
    pub truncation: usize,
}

impl RadialEigenpair {
    /// `r^m phi(2r^2 - 1)` for `0 <= r <= 1`.
    pub fn radial_value(&self, r: f64) -> f64 {
        let p = jacobi_values(JacobiParams::new(self.m, self.truncation), 2.0 * r * r - 1.0);
        let phi: f64 = p.iter().zip(&self.beta).map(|(p, b)| p * b).sum();
        r.powi(self.m as i32) * phi
    }
}

/// Default truncation `J = max(2c, 30) + m`.
pub fn default_truncation(m: usize, c: f64) -> usize {
    (2.0 * c).ceil().max(30.0) as usize + m
}

/// Matrix of `D` on `span{r^m P_j^{(m)}(2r^2 - 1)}`, `j = 0..=truncation`.
///
/// Entries off the three central bands must stay below [`ASSEMBLY_TOL`], or
/// below `4 J eps max|D_ii|` when that rounding floor is larger.
pub fn assemble_radial_operator(m: usize, c: f64, truncation: usize) -> Result<TridiagonalOperator> {
    if !(c >= 0.0 && c.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "bandwidth must be finite and >= 0, got {c}"
        )));
    }
    let min_j = 2 + c.ceil() as usize + m;
    if truncation < min_j {
        return Err(Error::InvalidArgument(format!(
            "truncation {truncation} below 2 + ceil(c) + m = {min_j}"
        )));
    }
    let full = assemble_dense(m, c, truncation);
    let size = truncation + 1;
    let tol = assembly_tolerance(&full, size);
    for i in 0..size {
        for j in 0..size {
            if i.abs_diff(j) > 1 && full[i * size + j].abs() > tol {
                return Err(Error::Assembly {
                    row: i,
                    col: j,
                    value: full[i * size + j],
                    tol,
                });
            }
        }
    }
    let diag = (0..size).map(|i| full[i * size + i]).collect();
    let off = (0..size - 1)
        .map(|i| 0.5 * (full[i * size + i + 1] + full[(i + 1) * size + i]))
        .collect();
    Ok(TridiagonalOperator { diag, off })
}

/// [`ASSEMBLY_TOL`], raised to `4 J eps max|D_ii|` when the operator is so
/// large that rounding in the projection alone exceeds it (high orders with
/// long truncations).
fn assembly_tolerance(full: &[f64], size: usize) -> f64 {
    let scale = (0..size).fold(0.0f64, |s, i| s.max(full[i * size + i].abs()));
    ASSEMBLY_TOL.max(4.0 * size as f64 * f64::EPSILON * scale)
}

/// Dense row-major `(J+1)^2` projection `<D f_j, f_i>` (row `i`, column `j`).
///
/// With `eta = 2r^2 - 1` the chain rule turns `D[r^m phi(eta)]` into
/// `r^m [-4(1 - eta^2) phi'' + ((4m + 8) eta - 4m) phi' + V phi]` with
/// `V = m(m + 2) + c^2 (1 + eta) / 2`, i.e. `-(1/w)(4(1 - eta^2) w phi')' + V phi`
/// for `w = (1 + eta)^m`. The projection uses the integrated-by-parts form
/// `int r^{2m} [4(1 - eta^2) phi_j' phi_i' + V phi_j phi_i] r dr` (boundary
/// terms vanish with `1 - eta^2`), which needs only first derivatives and
/// loses about half as many digits to rounding at large `J` as projecting
/// the second-order expression.
pub(crate) fn assemble_dense(m: usize, c: f64, truncation: usize) -> Vec<f64> {
    let size = truncation + 1;
    let params = JacobiParams::new(m, truncation);
    let (nodes, weights) = gauss_legendre_on(m + 2 * truncation + 8, 0.0, 1.0);
    let mf = m as f64;
    let mut out = vec![0.0; size * size];
    for (&r, &w) in nodes.iter().zip(&weights) {
        let eta = 2.0 * r * r - 1.0;
        let (p, dp) = jacobi_with_derivatives(params, eta);
        let rm = r.powi(m as i32);
        let wr = w * r * rm * rm;
        let potential = wr * (mf * (mf + 2.0) + 0.5 * c * c * (1.0 + eta));
        let stiffness = wr * 4.0 * (1.0 - eta * eta);
        for i in 0..size {
            let (fi, gi) = (potential * p[i], stiffness * dp[i]);
            let row = &mut out[i * size..(i + 1) * size];
            for j in 0..size {
                row[j] += fi * p[j] + gi * dp[j];
            }
        }
    }
    out
}

/// The `count` smallest eigenpairs of the radial operator, with a
/// truncation-doubling stability check.
pub fn compute_radial_eigenpairs(m: usize, c: f64, count: usize, truncation: usize) -> Result<Vec<RadialEigenpair>> {
    if count + 5 > truncation {
        return Err(Error::InvalidArgument(format!(
            "requested {count} eigenpairs but truncation {truncation} admits at most {}",
            truncation.saturating_sub(5)
        )));
    }
    let coarse = solve_operator(m, c, truncation)?;
    let fine = solve_operator(m, c, 2 * truncation)?;
    for n in 0..count {
        let (a, b) = (coarse.values[n], fine.values[n]);
        let change = (a - b).abs() / b.abs().max(f64::MIN_POSITIVE);
        if change > TRUNCATION_TOL {
            return Err(Error::Truncation {
                m,
                index: n,
                relative_change: change,
            });
        }
    }
    let pairs: Vec<RadialEigenpair> = (0..count)
        .map(|n| {
            let mut beta = coarse.vectors[n].clone();
            let norm = beta.iter().map(|b| b * b).sum::<f64>().sqrt();
            let pivot = beta
                .iter()
                .copied()
                .max_by(|a, b| a.abs().total_cmp(&b.abs()))
                .unwrap_or(1.0);
            let scale = pivot.signum() / norm;
            beta.iter_mut().for_each(|b| *b *= scale);
            RadialEigenpair {
                m,
                n,
                chi: coarse.values[n],
                beta,
                truncation,
            }
        })
        .collect();
    for w in pairs.windows(2) {
        if !(w[1].chi > w[0].chi) {
            return Err(Error::Ordering(format!(
                "chi not strictly increasing at m={m}: chi_{} = {} >= chi_{} = {}",
                w[0].n, w[0].chi, w[1].n, w[1].chi
            )));
        }
    }
    Ok(pairs)
}

fn solve_operator(m: usize, c: f64, truncation: usize) -> Result<crate::tridiag::TridiagonalEigen> {
    let op = assemble_radial_operator(m, c, truncation)?;
    symmetric_tridiagonal_eigen(&op.diag, &op.off)
}

/// Radial Gauss–Legendre rule on `[0, 1]` together with the Bessel kernel
/// `J_m(c r_i r_k)` for every order up to `max_m`.
#[derive(Debug, Clone)]
pub struct HankelQuadrature {
    c: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// `kernel[m][i * len + k] = J_m(c r_i r_k)`.
    kernel: Vec<Vec<f64>>,
}

impl HankelQuadrature {
    pub fn new(c: f64, max_m: usize, points: usize) -> Self {
        let (nodes, weights) = gauss_legendre_on(points, 0.0, 1.0);
        let len = nodes.len();
        let mut kernel = vec![vec![0.0; len * len]; max_m + 1];
        for i in 0..len {
            for k in i..len {
                let seq = bessel_j_sequence(max_m, c * nodes[i] * nodes[k]);
                for (m, v) in seq.into_iter().enumerate() {
                    kernel[m][i * len + k] = v;
                    kernel[m][k * len + i] = v;
                }
            }
        }
        Self {
            c,
            nodes,
            weights,
            kernel,
        }
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn max_m(&self) -> usize {
        self.kernel.len() - 1
    }
}

/// Prolate eigenvalue and eigen-relation residual of one radial eigenpair.
#[derive(Debug, Clone, Copy)]
pub struct ProlateEigenvalue {
    pub alpha: Complex64,
    /// `||F_b psi - alpha psi||_{L^2(B)}` (the PSWF has unit norm).
    pub residual: f64,
}

/// `alpha = <F_b psi, psi>` with the residual post-check.
///
/// For `psi = R(r) Y_{m,l}(theta)` the Jacobi–Anger expansion gives
/// `F_b psi = g(r) Y_{m,l}(theta)` with
/// `g(r) = 2 pi i^m int_0^1 J_m(c r s) R(s) s ds`, independently of `l`.
pub fn compute_prolate_eigenvalue(pair: &RadialEigenpair, quad: &HankelQuadrature) -> Result<ProlateEigenvalue> {
    let m = pair.m;
    if m > quad.max_m() {
        return Err(Error::BasisBound(format!(
            "Hankel quadrature built for m <= {}, got m = {m}",
            quad.max_m()
        )));
    }
    let len = quad.nodes.len();
    let radial: Vec<f64> = quad.nodes.iter().map(|&r| pair.radial_value(r)).collect();
    let weighted: Vec<f64> = (0..len).map(|k| quad.weights[k] * quad.nodes[k] * radial[k]).collect();
    let kernel = &quad.kernel[m];
    // Real part of g / (2 pi i^m).
    let g: Vec<f64> = (0..len)
        .map(|i| {
            kernel[i * len..(i + 1) * len]
                .iter()
                .zip(&weighted)
                .map(|(k, w)| k * w)
                .sum::<f64>()
                * 2.0
                * PI
        })
        .collect();
    let a: f64 = g.iter().zip(&weighted).map(|(g, w)| g * w).sum();
    let residual = (0..len)
        .map(|i| {
            let d = g[i] - a * radial[i];
            quad.weights[i] * quad.nodes[i] * d * d
        })
        .sum::<f64>()
        .sqrt();
    if !(residual <= EIGEN_RESIDUAL_TOL) {
        return Err(Error::EigenResidual {
            m,
            n: pair.n,
            residual,
            tol: EIGEN_RESIDUAL_TOL,
        });
    }
    Ok(ProlateEigenvalue {
        alpha: i_pow(m) * a,
        residual,
    })
}

fn i_pow(m: usize) -> Complex64 {
    match m % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// One `(m, n, l)` member of a basis.
#[derive(Debug, Clone, Copy)]
pub struct BasisEntry<'a> {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub radial: &'a RadialEigenpair,
    pub alpha: Complex64,
}

impl BasisEntry<'_> {
    /// Value of the PSWF at polar coordinates `(r, theta)`.
    pub fn value_polar(&self, r: f64, theta: f64) -> f64 {
        self.radial.radial_value(r) * harmonic(self.m, self.l, theta)
    }
}

/// Angular factor for an index pair already known to be valid.
pub(crate) fn harmonic(m: usize, l: usize, theta: f64) -> f64 {
    spherical_harmonic(m, l, theta).expect("basis indices are valid")
}

/// Disk PSWF basis at bandwidth `c` for `m <= max_m`, `n <= max_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PswfBasis {
    c: f64,
    max_m: usize,
    max_n: usize,
    /// Indexed by `m * (max_n + 1) + n`.
    radial: Vec<RadialEigenpair>,
    alpha: Vec<Complex64>,
}

impl PswfBasis {
    pub(crate) fn from_parts(
        c: f64,
        max_m: usize,
        max_n: usize,
        radial: Vec<RadialEigenpair>,
        alpha: Vec<Complex64>,
    ) -> Result<Self> {
        let count = (max_m + 1) * (max_n + 1);
        if radial.len() != count || alpha.len() != count {
            return Err(Error::format(
                "PSWF basis",
                format!("expected {count} radial records, got {}", radial.len()),
            ));
        }
        Ok(Self {
            c,
            max_m,
            max_n,
            radial,
            alpha,
        })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn max_m(&self) -> usize {
        self.max_m
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Truncation used for `m = 0`; higher orders add `m`.
    pub fn base_truncation(&self) -> usize {
        self.radial.first().map_or(0, |p| p.truncation - p.m)
    }

    /// Number of `(m, n, l)` entries: `(max_n + 1)(2 max_m + 1)`.
    pub fn len(&self) -> usize {
        (self.max_n + 1) * (2 * self.max_m + 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn slot(&self, m: usize, n: usize) -> Result<usize> {
        if m > self.max_m || n > self.max_n {
            return Err(Error::BasisBound(format!(
                "(m={m}, n={n}) outside m <= {}, n <= {}",
                self.max_m, self.max_n
            )));
        }
        Ok(m * (self.max_n + 1) + n)
    }

    pub fn radial(&self, m: usize, n: usize) -> Result<&RadialEigenpair> {
        Ok(&self.radial[self.slot(m, n)?])
    }

    pub fn alpha(&self, m: usize, n: usize) -> Result<Complex64> {
        Ok(self.alpha[self.slot(m, n)?])
    }

    pub fn entry(&self, m: usize, n: usize, l: usize) -> Result<BasisEntry<'_>> {
        spherical_harmonic(m, l, 0.0)?;
        let slot = self.slot(m, n)?;
        Ok(BasisEntry {
            m,
            n,
            l,
            radial: &self.radial[slot],
            alpha: self.alpha[slot],
        })
    }

    /// All entries ordered by `m`, then `n`, then `l`.
    pub fn entries(&self) -> impl Iterator<Item = BasisEntry<'_>> + '_ {
        (0..=self.max_m).flat_map(move |m| {
            (0..=self.max_n).flat_map(move |n| {
                let slot = m * (self.max_n + 1) + n;
                let ls: &[usize] = if m == 0 { &[1] } else { &[1, 2] };
                ls.iter().map(move |&l| BasisEntry {
                    m,
                    n,
                    l,
                    radial: &self.radial[slot],
                    alpha: self.alpha[slot],
                })
            })
        })
    }

    pub(crate) fn radial_pairs(&self) -> &[RadialEigenpair] {
        &self.radial
    }

    pub(crate) fn alphas(&self) -> &[Complex64] {
        &self.alpha
    }
}

/// Build the basis, checking the eigen-relation of every entry and the
/// ordering of `chi` and `|alpha|` in `n`.
pub fn build_basis(c: f64, max_m: usize, max_n: usize) -> Result<PswfBasis> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::InvalidArgument(format!("bandwidth c must be positive, got {c}")));
    }
    let quad = HankelQuadrature::new(c, max_m, HANKEL_POINTS);
    let per_m: Vec<Result<(Vec<RadialEigenpair>, Vec<Complex64>)>> = (0..=max_m)
        .into_par_iter()
        .map(|m| {
            let truncation = default_truncation(m, c).max(max_n + 6);
            let pairs = compute_radial_eigenpairs(m, c, max_n + 1, truncation)?;
            let alphas = pairs
                .iter()
                .map(|p| compute_prolate_eigenvalue(p, &quad).map(|e| e.alpha))
                .collect::<Result<Vec<_>>>()?;
            check_alpha_ordering(m, c, &alphas)?;
            Ok((pairs, alphas))
        })
        .collect();
    let mut radial = Vec::with_capacity((max_m + 1) * (max_n + 1));
    let mut alpha = Vec::with_capacity(radial.capacity());
    for item in per_m {
        let (p, a) = item?;
        radial.extend(p);
        alpha.extend(a);
    }
    PswfBasis::from_parts(c, max_m, max_n, radial, alpha)
}

/// Upper bound of every `|alpha|`: the operator norm of `F_b` on `L^2(B)` is
/// below `2 pi / c` and the leading eigenvalues approach it exponentially.
pub fn alpha_plateau(c: f64) -> f64 {
    2.0 * PI / c
}

/// Consecutive `|alpha|` must decrease strictly unless both values are
/// indistinguishable from the plateau `2 pi / c` or both lie below the
/// quadrature noise floor, where double precision cannot order them.
pub fn check_alpha_ordering(m: usize, c: f64, alphas: &[Complex64]) -> Result<()> {
    let plateau = alpha_plateau(c);
    let saturated = |a: f64| plateau - a <= PLATEAU_RESOLUTION * plateau;
    for n in 0..alphas.len() {
        let a = alphas[n].norm();
        if a > plateau * (1.0 + PLATEAU_RESOLUTION) {
            return Err(Error::Ordering(format!(
                "|alpha_({m},{n})| = {a:e} exceeds the bound 2 pi / c = {plateau:e}"
            )));
        }
        if a == 0.0 {
            return Err(Error::Ordering(format!("alpha_({m},{n}) vanished")));
        }
        if n == 0 {
            continue;
        }
        let prev = alphas[n - 1].norm();
        let resolved =
            a < prev || (saturated(a) && saturated(prev)) || (a < ALPHA_NOISE_FLOOR && prev < ALPHA_NOISE_FLOOR);
        if !resolved {
            return Err(Error::Ordering(format!(
                "|alpha| not decreasing at m={m}: |alpha_{}| = {prev:e}, |alpha_{n}| = {a:e}",
                n - 1
            )));
        }
    }
    Ok(())
}

/// Values of `psi_{m,n,l}` at Cartesian points in the closed unit disk.
pub fn evaluate_pswf(basis: &PswfBasis, m: usize, n: usize, l: usize, points: &[[f64; 2]]) -> Result<Vec<f64>> {
    let entry = basis.entry(m, n, l)?;
    points
        .iter()
        .map(|&[x, y]| {
            let r = x.hypot(y);
            if r > 1.0 + 1e-12 {
                return Err(Error::Domain(format!("point ({x}, {y}) outside the unit disk")));
            }
            Ok(entry.value_polar(r.min(1.0), y.atan2(x)))
        })
        .collect()
}
