//! Far field of a homogeneous penetrable circular cylinder by separation of
//! variables.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::{bessel_j_sequence, bessel_y_sequence};

/// `u_inf(x; theta)` for a centred disk of `radius` and constant contrast
/// `q`, as a function of `delta = arg x - arg theta`, in the normalization
/// `u_inf = k^2 int e^{-ik x.y} q u dy`.
///
/// With `u^s = sum_n b_n i^n H_n(kr) e^{in delta}` outside the disk and
/// `k_1 = k sqrt(1 + q)` inside, `u_inf = -4i sum_n b_n e^{in delta}`.
pub struct PenetrableDisk {
    coefficients: Vec<Complex64>,
}

impl PenetrableDisk {
    pub fn new(k: f64, radius: f64, q: f64) -> Result<Self> {
        if !(k > 0.0 && radius > 0.0 && q > -1.0) {
            return Err(Error::InvalidArgument(format!(
                "disk oracle needs k > 0, radius > 0, q > -1 (got {k}, {radius}, {q})"
            )));
        }
        let k1 = k * (1.0 + q).sqrt();
        let (x, x1) = (k * radius, k1 * radius);
        let orders = (x1.max(x) + 30.0 + 4.0 * x1.max(x).cbrt()) as usize;
        let j = bessel_j_sequence(orders + 1, x);
        let y = bessel_y_sequence(orders + 1, x)?;
        let j1 = bessel_j_sequence(orders + 1, x1);
        let deriv = |v: &[f64], n: usize| {
            if n == 0 {
                -v[1]
            } else {
                0.5 * (v[n - 1] - v[n + 1])
            }
        };
        let coefficients = (0..=orders)
            .map(|n| {
                let h = Complex64::new(j[n], y[n]);
                let dh = Complex64::new(deriv(&j, n), deriv(&y, n));
                let num = k1 * deriv(&j1, n) * j[n] - k * j1[n] * deriv(&j, n);
                let den = k * j1[n] * dh - k1 * deriv(&j1, n) * h;
                Complex64::new(num, 0.0) / den
            })
            .collect();
        Ok(Self { coefficients })
    }

    pub fn far_field(&self, delta: f64) -> Complex64 {
        let mut s = self.coefficients[0];
        for (n, b) in self.coefficients.iter().enumerate().skip(1) {
            s += 2.0 * b * (n as f64 * delta).cos();
        }
        Complex64::new(0.0, -4.0) * s
    }
}
