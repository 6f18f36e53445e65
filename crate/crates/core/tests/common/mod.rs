//! Helpers shared by the integration tests.
#![allow(dead_code)]

#[allow(clippy::excessive_precision, clippy::approx_constant)]
pub mod oracles;

use diskscat::contrast::ContrastGrid;
use diskscat::dataset::disk_union;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Union of `count` random disks of constant value, well inside the unit disk.
pub fn random_disks(seed: u64, count: usize, n: usize, value: f64) -> ContrastGrid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let disks: Vec<(f64, f64, f64)> = (0..count)
        .map(|_| {
            (
                rng.random_range(-0.35..0.35),
                rng.random_range(-0.35..0.35),
                rng.random_range(0.12..0.25),
            )
        })
        .collect();
    disk_union(n, &disks, value).unwrap()
}

pub fn rel_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum();
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
    (num / den).sqrt()
}

use diskscat::pipeline::PolarGrid;
use diskscat::pswf::PswfBasis;

/// Values of `psi_{m,n,l}` at the nodes of `grid` (radial-major).
pub fn psi_on_grid(basis: &PswfBasis, m: usize, n: usize, l: usize, grid: &PolarGrid) -> Vec<f64> {
    let e = basis.entry(m, n, l).unwrap();
    let mut out = Vec::with_capacity(grid.len());
    for &r in grid.radii() {
        for &t in grid.angles() {
            out.push(e.value_polar(r, t));
        }
    }
    out
}

/// Dense discretization of `f -> int_B e^{i c x.y} f(y) dy` from a source
/// quadrature grid to the nodes of a target grid. Kept separate from the
/// library's Hankel-form eigenvalues so it can serve as an oracle.
pub struct DenseFourier {
    pub source: PolarGrid,
    pub target: PolarGrid,
    /// `kernel[i * source.len() + j] = w_j e^{i c x_i.y_j}`.
    kernel: Vec<Complex64>,
}

impl DenseFourier {
    pub fn new(c: f64, source: PolarGrid, target: PolarGrid) -> Self {
        let src: Vec<([f64; 2], f64)> = (0..source.n2())
            .flat_map(|m| (0..source.n1()).map(move |n| (m, n)))
            .map(|(m, n)| (source.point(m, n), source.weight(m)))
            .collect();
        let mut kernel = Vec::with_capacity(target.len() * src.len());
        for m in 0..target.n2() {
            for n in 0..target.n1() {
                let [x0, x1] = target.point(m, n);
                for &([y0, y1], w) in &src {
                    kernel.push(Complex64::from_polar(w, c * (x0 * y0 + x1 * y1)));
                }
            }
        }
        Self { source, target, kernel }
    }

    pub fn apply(&self, f: &[f64]) -> Vec<Complex64> {
        assert_eq!(f.len(), self.source.len());
        self.kernel
            .chunks(self.source.len())
            .map(|row| row.iter().zip(f).map(|(k, v)| k * v).sum())
            .collect()
    }
}

/// `int_B e^{i c x.y} f_k(y) dy` at every target node for several real
/// columns `f_k` at once, streaming the kernel one target row at a time.
/// Returns `out[k][i]`.
pub fn dense_fourier_columns(
    c: f64,
    source: &PolarGrid,
    target: &PolarGrid,
    columns: &[Vec<f64>],
) -> Vec<Vec<Complex64>> {
    let ncol = columns.len();
    let src: Vec<[f64; 2]> = (0..source.n2())
        .flat_map(|m| (0..source.n1()).map(move |n| source.point(m, n)))
        .collect();
    // Node-major weighted samples so the inner loop runs over columns.
    let mut weighted = vec![0.0; src.len() * ncol];
    for (j, row) in weighted.chunks_mut(ncol).enumerate() {
        let w = source.weight(j / source.n1());
        for (k, col) in columns.iter().enumerate() {
            row[k] = w * col[j];
        }
    }
    let mut out = vec![vec![Complex64::new(0.0, 0.0); target.len()]; ncol];
    let mut re = vec![0.0; ncol];
    let mut im = vec![0.0; ncol];
    for i in 0..target.len() {
        let [x0, x1] = target.point(i / target.n1(), i % target.n1());
        re.iter_mut().for_each(|v| *v = 0.0);
        im.iter_mut().for_each(|v| *v = 0.0);
        for (j, &[y0, y1]) in src.iter().enumerate() {
            let (s, co) = (c * (x0 * y0 + x1 * y1)).sin_cos();
            let row = &weighted[j * ncol..(j + 1) * ncol];
            for k in 0..ncol {
                re[k] += co * row[k];
                im[k] += s * row[k];
            }
        }
        for (col, (&a, &b)) in out.iter_mut().zip(re.iter().zip(&im)) {
            col[i] = Complex64::new(a, b);
        }
    }
    out
}
