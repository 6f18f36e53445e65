//! Direction sets on the unit circle and multistatic far-field matrices.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Directions given by strictly increasing angles in `[0, 2 pi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionSet {
    angles: Vec<f64>,
}

impl DirectionSet {
    pub fn new(angles: Vec<f64>) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::InvalidArgument("direction set is empty".into()));
        }
        if angles.iter().any(|a| !(0.0..TAU).contains(a)) {
            return Err(Error::InvalidArgument("direction angles must lie in [0, 2 pi)".into()));
        }
        if angles.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidArgument(
                "direction angles must be strictly increasing".into(),
            ));
        }
        Ok(Self { angles })
    }

    /// `count` equally spaced directions `2 pi j / count`, `j = 0..count-1`.
    pub fn uniform(count: usize) -> Result<Self> {
        Self::new((0..count).map(|j| TAU * j as f64 / count as f64).collect())
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn unit(&self, j: usize) -> [f64; 2] {
        let (s, c) = self.angles[j].sin_cos();
        [c, s]
    }
}

/// Wrap an angle to `(-pi, pi]`.
pub fn wrap_angle(a: f64) -> f64 {
    let mut w = a.rem_euclid(TAU);
    if w > PI {
        w -= TAU;
    }
    w
}

/// `values[i * n_inc + j] = u_inf(x_i; theta_j)` (observation-major).
#[derive(Debug, Clone, PartialEq)]
pub struct FarFieldMatrix {
    pub k: f64,
    pub obs: DirectionSet,
    pub inc: DirectionSet,
    pub values: Vec<Complex64>,
    /// Half-width of the measurement aperture, `None` for full aperture.
    pub aperture: Option<f64>,
}

impl FarFieldMatrix {
    pub fn new(k: f64, obs: DirectionSet, inc: DirectionSet, values: Vec<Complex64>) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::InvalidArgument(format!("wavenumber must be positive, got {k}")));
        }
        if values.len() != obs.len() * inc.len() {
            return Err(Error::Shape(format!(
                "{} entries for {} observation x {} incidence directions",
                values.len(),
                obs.len(),
                inc.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::format("far field", "non-finite entry"));
        }
        Ok(Self {
            k,
            obs,
            inc,
            values,
            aperture: None,
        })
    }

    pub fn n_obs(&self) -> usize {
        self.obs.len()
    }

    pub fn n_inc(&self) -> usize {
        self.inc.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.values[i * self.inc.len() + j]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `||self - other||_F / ||other||_F`.
    pub fn relative_difference(&self, other: &FarFieldMatrix) -> Result<f64> {
        if self.values.len() != other.values.len() {
            return Err(Error::Shape("far-field matrices differ in shape".into()));
        }
        let diff: f64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        Ok(diff.sqrt() / other.frobenius_norm())
    }

    /// Largest `|u(x;theta) - u(-theta;-x)|` over sampled reciprocal pairs,
    /// divided by the largest entry magnitude. Reciprocal pairs are located by
    /// angle with tolerance `1e-9`.
    pub fn reciprocity_violation(&self) -> f64 {
        let find = |set: &DirectionSet, angle: f64| {
            let target = (angle + PI).rem_euclid(TAU);
            set.angles().iter().position(|&a| (wrap_angle(a - target)).abs() < 1e-9)
        };
        let scale = self.values.iter().fold(0.0f64, |m, v| m.max(v.norm()));
        if scale == 0.0 {
            return 0.0;
        }
        let mut worst = 0.0f64;
        for i in 0..self.n_obs() {
            // -x as an incidence direction.
            let Some(jr) = find(&self.inc, self.obs.angles()[i]) else {
                continue;
            };
            for j in 0..self.n_inc() {
                // -theta as an observation direction.
                let Some(ir) = find(&self.obs, self.inc.angles()[j]) else {
                    continue;
                };
                worst = worst.max((self.get(i, j) - self.get(ir, jr)).norm());
            }
        }
        worst / scale
    }
}
