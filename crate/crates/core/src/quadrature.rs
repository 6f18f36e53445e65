//! One-dimensional quadrature rules.

use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, nodes ascending.
///
/// Newton iteration on the Legendre three-term recurrence from the usual
/// cosine initial guess; exact for polynomials of degree `2n - 1`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * z * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { z } else { p1 };
            let pn_1 = if n == 1 { 1.0 } else { p0 };
            dp = nf * (z * pn - pn_1) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Gauss–Legendre rule mapped to `[a, b]`.
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (b + a);
    (
        x.iter().map(|t| mid + half * t).collect(),
        w.iter().map(|t| half * t).collect(),
    )
}

/// Interpolatory weights on `[-1, 1]` for the nodes `cos(j pi / n)`,
/// `j = 0..n-1` (the Chebyshev extreme points with `-1` dropped).
///
/// The weights integrate every polynomial of degree `< n` exactly. They are
/// obtained by solving the cosine moment system `sum_j cos(k j pi / n) w_j =
/// int_{-1}^{1} T_k`, `k = 0..n-1`, whose solution is the Clenshaw–Curtis
/// rule of degree `n - 1` on these nodes. For even `n` the weight at `+1`
/// vanishes analytically; rounding residue below `1e-14` is clamped to zero
/// so the rule is non-negative.
pub fn chebyshev_open_left_weights(n: usize) -> Vec<f64> {
    assert!(n >= 2, "at least two nodes required");
    let mut a = vec![0.0; n * n];
    let mut rhs = vec![0.0; n];
    for k in 0..n {
        for j in 0..n {
            a[k * n + j] = ((k * j) as f64 * PI / n as f64).cos();
        }
        rhs[k] = if k % 2 == 0 { 2.0 / (1.0 - (k * k) as f64) } else { 0.0 };
    }
    let mut w = solve_dense(&mut a, &mut rhs, n);
    for v in &mut w {
        if v.abs() < 1e-14 {
            *v = 0.0;
        }
    }
    w
}

/// Gaussian elimination with partial pivoting on a row-major `n x n` system.
fn solve_dense(a: &mut [f64], b: &mut [f64], n: usize) -> Vec<f64> {
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))
            .unwrap();
        if pivot != col {
            for c in 0..n {
                a.swap(col * n + c, pivot * n + c);
            }
            b.swap(col, pivot);
        }
        let d = a[col * n + col];
        for row in col + 1..n {
            let f = a[row * n + col] / d;
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[row * n + c] -= f * a[col * n + c];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for c in row + 1..n {
            s -= a[row * n + c] * x[c];
        }
        x[row] = s / a[row * n + row];
    }
    x
}
