//! Real contrast sampled on a uniform Cartesian grid over `[-1, 1]^2`.

use crate::error::{Error, Result};

/// Smallest accepted grid size.
pub const MIN_GRID: usize = 32;

/// `values[iy * n + ix]` is the contrast at the centre of cell `(ix, iy)`,
/// located at `(-1 + (ix + 1/2) h, -1 + (iy + 1/2) h)` with `h = 2 / n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContrastGrid {
    n: usize,
    values: Vec<f64>,
}

impl ContrastGrid {
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        if n < MIN_GRID {
            return Err(Error::Shape(format!("grid size {n} below minimum {MIN_GRID}")));
        }
        if values.len() != n * n {
            return Err(Error::Shape(format!("{} values for a {n}x{n} grid", values.len())));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::format("contrast", format!("non-finite value at index {pos}")));
        }
        Ok(Self { n, values })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(n, vec![0.0; n * n])
    }

    /// Point samples of `f` at the cell centres.
    pub fn from_fn(n: usize, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let h = 2.0 / n as f64;
        let mut values = Vec::with_capacity(n * n);
        for iy in 0..n {
            let y = -1.0 + (iy as f64 + 0.5) * h;
            for ix in 0..n {
                values.push(f(-1.0 + (ix as f64 + 0.5) * h, y));
            }
        }
        Self::new(n, values)
    }

    /// Cell averages of `f` approximated by `s x s` midpoint sub-samples,
    /// which keeps piecewise-constant shapes from aliasing onto the grid.
    pub fn from_fn_averaged(n: usize, s: usize, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let s = s.max(1);
        let h = 2.0 / n as f64;
        let sub = h / s as f64;
        let inv = 1.0 / (s * s) as f64;
        let mut values = Vec::with_capacity(n * n);
        for iy in 0..n {
            let y0 = -1.0 + iy as f64 * h;
            for ix in 0..n {
                let x0 = -1.0 + ix as f64 * h;
                let mut acc = 0.0;
                for a in 0..s {
                    let y = y0 + (a as f64 + 0.5) * sub;
                    for b in 0..s {
                        acc += f(x0 + (b as f64 + 0.5) * sub, y);
                    }
                }
                values.push(acc * inv);
            }
        }
        Self::new(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cell width `h = 2 / n`.
    pub fn spacing(&self) -> f64 {
        2.0 / self.n as f64
    }

    /// Coordinate of cell centre `i` along either axis.
    pub fn coord(&self, i: usize) -> f64 {
        -1.0 + (i as f64 + 0.5) * self.spacing()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn get(&self, ix: usize, iy: usize) -> f64 {
        self.values[iy * self.n + ix]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            n: self.n,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// Bilinear interpolation between cell centres. Between the outermost
    /// centres and the edge of `[-1, 1]^2` the edge cells extend unchanged;
    /// outside the square the contrast is zero.
    pub fn sample(&self, x: f64, y: f64) -> f64 {
        if !(x.abs() <= 1.0 && y.abs() <= 1.0) {
            return 0.0;
        }
        let h = self.spacing();
        let top = (self.n - 1) as f64;
        let fx = ((x + 1.0) / h - 0.5).clamp(0.0, top);
        let fy = ((y + 1.0) / h - 0.5).clamp(0.0, top);
        let (x0, y0) = (
            (fx.floor() as usize).min(self.n - 2),
            (fy.floor() as usize).min(self.n - 2),
        );
        let (tx, ty) = (fx - x0 as f64, fy - y0 as f64);
        let at = |ix: usize, iy: usize| self.values[iy * self.n + ix];
        (1.0 - ty) * ((1.0 - tx) * at(x0, y0) + tx * at(x0 + 1, y0))
            + ty * ((1.0 - tx) * at(x0, y0 + 1) + tx * at(x0 + 1, y0 + 1))
    }

    /// Discrete `L^2(B)` norm over the cells whose centre lies in the unit disk.
    pub fn disk_norm(&self) -> f64 {
        let h = self.spacing();
        let mut acc = 0.0;
        for iy in 0..self.n {
            let y = self.coord(iy);
            for ix in 0..self.n {
                let x = self.coord(ix);
                if x * x + y * y <= 1.0 {
                    acc += self.values[iy * self.n + ix].powi(2);
                }
            }
        }
        (acc * h * h).sqrt()
    }
}
