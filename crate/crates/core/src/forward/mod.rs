//! Direct scattering by a penetrable contrast.
//!
//! The scattered field solves the Lippmann–Schwinger equation
//! `u^s - k^2 K[q u^s] = k^2 K[q u^i]` with `K` the volume potential of
//! `(i/4) H_0^(1)(k|x - y|)`, discretized by the midpoint rule on the
//! contrast grid. The right-hand side is the Born scattered field. Far fields
//! follow from `u_inf(x; theta) = k^2 int e^{-ik x.y} q (u^i + u^s) dy`.

pub mod analytic;
pub mod gmres;
pub mod kernel;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::contrast::ContrastGrid;
use crate::error::{Error, Result};
use crate::farfield::{DirectionSet, FarFieldMatrix};

pub use analytic::PenetrableDisk;
pub use gmres::{GmresOptions, GmresOutcome};
use kernel::GreenConvolution;

/// Scattered field of one incidence on the contrast grid.
#[derive(Debug, Clone)]
pub struct ScatteredField {
    pub n: usize,
    /// Row-major like [`ContrastGrid`].
    pub values: Vec<Complex64>,
    /// Relative residual of the integral-equation solve.
    pub residual: f64,
    pub iterations: usize,
}

/// Lippmann–Schwinger solver for a fixed grid size and wavenumber.
pub struct ForwardSolver {
    k: f64,
    n: usize,
    conv: GreenConvolution,
    opts: GmresOptions,
}

/// Far fields of one contrast for every incidence.
#[derive(Debug, Clone)]
pub struct Simulation {
    pub full: FarFieldMatrix,
    pub born: FarFieldMatrix,
    /// `||U^s - U^s_b||_F / ||U^s||_F` over all incidences; `None` when the
    /// scattered field vanishes identically.
    pub rel: Option<f64>,
    pub max_residual: f64,
    pub max_iterations: usize,
}

impl ForwardSolver {
    pub fn new(n: usize, k: f64) -> Result<Self> {
        Self::with_options(n, k, GmresOptions::default())
    }

    pub fn with_options(n: usize, k: f64, opts: GmresOptions) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::InvalidArgument(format!("wavenumber must be positive, got {k}")));
        }
        if n < crate::contrast::MIN_GRID {
            return Err(Error::Shape(format!("grid size {n} too small")));
        }
        Ok(Self {
            k,
            n,
            conv: GreenConvolution::new(n, k)?,
            opts,
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_grid(&self, q: &ContrastGrid) -> Result<()> {
        if q.n() != self.n {
            return Err(Error::Shape(format!(
                "contrast grid {} does not match solver grid {}",
                q.n(),
                self.n
            )));
        }
        Ok(())
    }

    /// Plane wave `e^{ik theta.x}` at the cell centres.
    pub fn incident_field(&self, theta: f64) -> Vec<Complex64> {
        let n = self.n;
        let h = 2.0 / n as f64;
        let (s, c) = theta.sin_cos();
        let phase = |t: f64| -> Vec<Complex64> {
            (0..n)
                .map(|i| Complex64::from_polar(1.0, self.k * t * (-1.0 + (i as f64 + 0.5) * h)))
                .collect()
        };
        let (ex, ey) = (phase(c), phase(s));
        let mut out = Vec::with_capacity(n * n);
        for y in &ey {
            out.extend(ex.iter().map(|x| x * y));
        }
        out
    }

    /// Born scattered field `k^2 K[q u^i]`.
    pub fn born_scattered(&self, q: &ContrastGrid, theta: f64) -> Result<Vec<Complex64>> {
        self.check_grid(q)?;
        let mut work = Vec::new();
        Ok(self.born_scattered_with(q, &self.incident_field(theta), &mut work))
    }

    fn born_scattered_with(
        &self,
        q: &ContrastGrid,
        incident: &[Complex64],
        work: &mut Vec<Complex64>,
    ) -> Vec<Complex64> {
        let k2 = self.k * self.k;
        let source: Vec<Complex64> = incident.iter().zip(q.values()).map(|(u, &qv)| u * qv).collect();
        let mut out = vec![Complex64::new(0.0, 0.0); source.len()];
        self.conv.apply(&source, &mut out, work);
        out.iter_mut().for_each(|v| *v *= k2);
        out
    }

    /// Solve for the scattered field of incidence angle `theta`.
    pub fn solve(&self, q: &ContrastGrid, theta: f64) -> Result<ScatteredField> {
        self.check_grid(q)?;
        let mut work = Vec::new();
        let incident = self.incident_field(theta);
        let rhs = self.born_scattered_with(q, &incident, &mut work);
        self.solve_with(q, &rhs, &mut work)
    }

    fn solve_with(&self, q: &ContrastGrid, rhs: &[Complex64], work: &mut Vec<Complex64>) -> Result<ScatteredField> {
        let k2 = self.k * self.k;
        let qv = q.values();
        let mut tmp = vec![Complex64::new(0.0, 0.0); rhs.len()];
        let mut x = vec![Complex64::new(0.0, 0.0); rhs.len()];
        let outcome = gmres::gmres(
            |v, out| {
                for ((t, vv), &qq) in tmp.iter_mut().zip(v).zip(qv) {
                    *t = vv * qq;
                }
                self.conv.apply(&tmp, out, work);
                for (o, vv) in out.iter_mut().zip(v) {
                    *o = vv - *o * k2;
                }
            },
            rhs,
            &mut x,
            self.opts,
        )?;
        Ok(ScatteredField {
            n: self.n,
            values: x,
            residual: outcome.relative_residual,
            iterations: outcome.iterations,
        })
    }

    /// `u_inf(x_i; theta)` for every observation direction.
    pub fn far_field(
        &self,
        q: &ContrastGrid,
        field: &ScatteredField,
        theta: f64,
        obs: &DirectionSet,
    ) -> Result<Vec<Complex64>> {
        self.check_grid(q)?;
        if field.values.len() != self.n * self.n {
            return Err(Error::Shape("scattered field does not match the grid".into()));
        }
        let incident = self.incident_field(theta);
        let density: Vec<Complex64> = incident
            .iter()
            .zip(&field.values)
            .zip(q.values())
            .map(|((ui, us), &qv)| (ui + us) * qv)
            .collect();
        Ok(self.radiate(&density, &ObservationTable::new(self, obs)))
    }

    /// `k^2 h^2 sum_y e^{-ik x_i.y} density(y)`.
    fn radiate(&self, density: &[Complex64], table: &ObservationTable) -> Vec<Complex64> {
        let n = self.n;
        let h = 2.0 / n as f64;
        let scale = self.k * self.k * h * h;
        let rows: Vec<usize> = (0..n)
            .filter(|&iy| density[iy * n..(iy + 1) * n].iter().any(|v| v.norm_sqr() > 0.0))
            .collect();
        (0..table.count)
            .map(|i| {
                let ex = &table.ex[i * n..(i + 1) * n];
                let ey = &table.ey[i * n..(i + 1) * n];
                let mut acc = Complex64::new(0.0, 0.0);
                for &iy in &rows {
                    let row = &density[iy * n..(iy + 1) * n];
                    let s: Complex64 = row.iter().zip(ex).map(|(d, e)| d * e).sum();
                    acc += s * ey[iy];
                }
                acc * scale
            })
            .collect()
    }

    /// Born far-field matrix (no solve).
    pub fn born_far_field(&self, q: &ContrastGrid, inc: &DirectionSet, obs: &DirectionSet) -> Result<FarFieldMatrix> {
        self.check_grid(q)?;
        let table = ObservationTable::new(self, obs);
        let columns: Vec<Vec<Complex64>> = inc
            .angles()
            .par_iter()
            .map(|&theta| {
                let density: Vec<Complex64> = self
                    .incident_field(theta)
                    .iter()
                    .zip(q.values())
                    .map(|(u, &qv)| u * qv)
                    .collect();
                self.radiate(&density, &table)
            })
            .collect();
        assemble(self.k, obs, inc, &columns)
    }

    /// Full and Born far fields and the degree of nonlinearity.
    pub fn simulate(&self, q: &ContrastGrid, inc: &DirectionSet, obs: &DirectionSet) -> Result<Simulation> {
        self.check_grid(q)?;
        let table = ObservationTable::new(self, obs);
        struct Column {
            full: Vec<Complex64>,
            born: Vec<Complex64>,
            diff2: f64,
            norm2: f64,
            residual: f64,
            iterations: usize,
        }
        let columns: Vec<Column> = inc
            .angles()
            .par_iter()
            .map_init(Vec::new, |work, &theta| -> Result<Column> {
                let incident = self.incident_field(theta);
                let born_field = self.born_scattered_with(q, &incident, work);
                let field = self.solve_with(q, &born_field, work)?;
                let mut diff2 = 0.0;
                let mut norm2 = 0.0;
                for (us, ub) in field.values.iter().zip(&born_field) {
                    diff2 += (us - ub).norm_sqr();
                    norm2 += us.norm_sqr();
                }
                let qv = q.values();
                let born_density: Vec<Complex64> = incident.iter().zip(qv).map(|(u, &qq)| u * qq).collect();
                let full_density: Vec<Complex64> = incident
                    .iter()
                    .zip(&field.values)
                    .zip(qv)
                    .map(|((ui, us), &qq)| (ui + us) * qq)
                    .collect();
                Ok(Column {
                    full: self.radiate(&full_density, &table),
                    born: self.radiate(&born_density, &table),
                    diff2,
                    norm2,
                    residual: field.residual,
                    iterations: field.iterations,
                })
            })
            .collect::<Result<_>>()?;
        let (diff2, norm2) = columns.iter().fold((0.0, 0.0), |(d, n), c| (d + c.diff2, n + c.norm2));
        let full: Vec<Vec<Complex64>> = columns.iter().map(|c| c.full.clone()).collect();
        let born: Vec<Vec<Complex64>> = columns.iter().map(|c| c.born.clone()).collect();
        Ok(Simulation {
            full: assemble(self.k, obs, inc, &full)?,
            born: assemble(self.k, obs, inc, &born)?,
            rel: (norm2 > 0.0).then(|| (diff2 / norm2).sqrt()),
            max_residual: columns.iter().fold(0.0, |m, c| m.max(c.residual)),
            max_iterations: columns.iter().map(|c| c.iterations).max().unwrap_or(0),
        })
    }
}

/// Separable factors `e^{-ik x_1 t}`, `e^{-ik x_2 t}` of the far-field kernel.
struct ObservationTable {
    count: usize,
    ex: Vec<Complex64>,
    ey: Vec<Complex64>,
}

impl ObservationTable {
    fn new(solver: &ForwardSolver, obs: &DirectionSet) -> Self {
        let n = solver.n;
        let h = 2.0 / n as f64;
        let mut ex = Vec::with_capacity(obs.len() * n);
        let mut ey = Vec::with_capacity(obs.len() * n);
        for i in 0..obs.len() {
            let [c, s] = obs.unit(i);
            for t in 0..n {
                let coord = -1.0 + (t as f64 + 0.5) * h;
                ex.push(Complex64::from_polar(1.0, -solver.k * c * coord));
                ey.push(Complex64::from_polar(1.0, -solver.k * s * coord));
            }
        }
        Self {
            count: obs.len(),
            ex,
            ey,
        }
    }
}

fn assemble(k: f64, obs: &DirectionSet, inc: &DirectionSet, columns: &[Vec<Complex64>]) -> Result<FarFieldMatrix> {
    let (n_obs, n_inc) = (obs.len(), inc.len());
    let mut values = vec![Complex64::new(0.0, 0.0); n_obs * n_inc];
    for (j, col) in columns.iter().enumerate() {
        for i in 0..n_obs {
            values[i * n_inc + j] = col[i];
        }
    }
    FarFieldMatrix::new(k, obs.clone(), inc.clone(), values)
}

/// Scattered field of one incidence.
pub fn solve_scattered(q: &ContrastGrid, k: f64, theta: f64) -> Result<ScatteredField> {
    ForwardSolver::new(q.n(), k)?.solve(q, theta)
}

/// Far field of an already solved incidence.
pub fn far_field(
    q: &ContrastGrid,
    field: &ScatteredField,
    k: f64,
    theta: f64,
    obs: &DirectionSet,
) -> Result<Vec<Complex64>> {
    ForwardSolver::new(q.n(), k)?.far_field(q, field, theta, obs)
}

/// Born far-field matrix `k^2 int e^{ik(theta - x).y} q dy`.
pub fn born_far_field(q: &ContrastGrid, k: f64, inc: &DirectionSet, obs: &DirectionSet) -> Result<FarFieldMatrix> {
    ForwardSolver::new(q.n(), k)?.born_far_field(q, inc, obs)
}

/// `||U^s - U^s_b||_F / ||U^s||_F` over the grid and all incidences.
pub fn degree_of_nonlinearity(q: &ContrastGrid, k: f64, inc: &DirectionSet) -> Result<f64> {
    let solver = ForwardSolver::new(q.n(), k)?;
    let mut work = Vec::new();
    let mut diff2 = 0.0;
    let mut norm2 = 0.0;
    for &theta in inc.angles() {
        let incident = solver.incident_field(theta);
        let born = solver.born_scattered_with(q, &incident, &mut work);
        let field = solver.solve_with(q, &born, &mut work)?;
        for (us, ub) in field.values.iter().zip(&born) {
            diff2 += (us - ub).norm_sqr();
            norm2 += us.norm_sqr();
        }
    }
    if norm2 == 0.0 {
        return Err(Error::ZeroField);
    }
    Ok((diff2 / norm2).sqrt())
}
