//! Discrete volume potential `(K v)(x) = int G(x - y) v(y) dy` of the
//! Helmholtz fundamental solution `G = (i/4) H_0^(1)(k|.|)` on the uniform
//! grid, applied by circulant embedding on a `2N x 2N` padded grid.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::Result;
use crate::special::hankel1_0;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Integral of `(i/4) H_0^(1)(k|x|)` over the square cell `[-h/2, h/2]^2`
/// from the small-argument form `i/4 - (ln(k|x|/2) + gamma) / (2 pi)`,
/// using `int_cell ln|x| dx = h^2 (ln(h/2) + (ln 2 - 3 + pi/2) / 2)`.
pub fn self_cell_integral(k: f64, h: f64) -> Complex64 {
    let h2 = h * h;
    let log_mean = (h / 2.0).ln() + (2f64.ln() - 3.0 + PI / 2.0) / 2.0;
    Complex64::new(
        -h2 * ((k / 2.0).ln() + EULER_GAMMA) / (2.0 * PI) - h2 * log_mean / (2.0 * PI),
        h2 / 4.0,
    )
}

/// FFT-accelerated convolution with the midpoint-discretized kernel.
pub struct GreenConvolution {
    n: usize,
    size: usize,
    /// Spectrum of the embedded kernel, stored transposed (column-major).
    spectrum: Vec<Complex64>,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl GreenConvolution {
    pub fn new(n: usize, k: f64) -> Result<Self> {
        let size = 2 * n;
        let h = 2.0 / n as f64;
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(size);
        let inverse = planner.plan_fft_inverse(size);

        // Kernel values depend on |offset| only; evaluate one quadrant.
        let mut quadrant = vec![Complex64::new(0.0, 0.0); n * n];
        for a in 0..n {
            for b in a..n {
                let v = if a == 0 && b == 0 {
                    self_cell_integral(k, h)
                } else {
                    let d = h * ((a * a + b * b) as f64).sqrt();
                    hankel1_0(k * d)? * Complex64::new(0.0, 0.25 * h * h)
                };
                quadrant[a * n + b] = v;
                quadrant[b * n + a] = v;
            }
        }
        let mut embedded = vec![Complex64::new(0.0, 0.0); size * size];
        for row in 0..size {
            if row == n {
                continue;
            }
            let a = if row < n { row } else { size - row };
            for col in 0..size {
                if col == n {
                    continue;
                }
                let b = if col < n { col } else { size - col };
                embedded[row * size + col] = quadrant[a * n + b];
            }
        }
        let mut this = Self {
            n,
            size,
            spectrum: Vec::new(),
            forward,
            inverse,
        };
        this.fft2_transposed(&mut embedded, size);
        this.spectrum = embedded;
        Ok(this)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Forward 2-D FFT of a row-major `size x size` buffer whose rows at and
    /// beyond `nonzero_rows` vanish; the result is left transposed.
    fn fft2_transposed(&self, buf: &mut [Complex64], nonzero_rows: usize) {
        let size = self.size;
        for row in buf.chunks_exact_mut(size).take(nonzero_rows) {
            self.forward.process(row);
        }
        transpose_in_place(buf, size);
        for row in buf.chunks_exact_mut(size) {
            self.forward.process(row);
        }
    }

    /// `out = K v` for a row-major `n x n` input.
    pub fn apply(&self, v: &[Complex64], out: &mut [Complex64], work: &mut Vec<Complex64>) {
        let (n, size) = (self.n, self.size);
        work.clear();
        work.resize(size * size, Complex64::new(0.0, 0.0));
        for iy in 0..n {
            work[iy * size..iy * size + n].copy_from_slice(&v[iy * n..(iy + 1) * n]);
        }
        self.fft2_transposed(work, n);
        for (w, s) in work.iter_mut().zip(&self.spectrum) {
            *w *= s;
        }
        for row in work.chunks_exact_mut(size) {
            self.inverse.process(row);
        }
        transpose_in_place(work, size);
        let scale = 1.0 / (size * size) as f64;
        for (iy, row) in work.chunks_exact_mut(size).take(n).enumerate() {
            self.inverse.process(row);
            for ix in 0..n {
                out[iy * n + ix] = row[ix] * scale;
            }
        }
    }
}

fn transpose_in_place(buf: &mut [Complex64], size: usize) {
    for i in 0..size {
        for j in i + 1..size {
            buf.swap(i * size + j, j * size + i);
        }
    }
}
