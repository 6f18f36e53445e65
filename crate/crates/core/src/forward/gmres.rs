//! Restarted GMRES for complex linear systems.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct GmresOptions {
    /// Target relative residual `||b - Ax|| / ||b||`.
    pub tol: f64,
    /// Total Arnoldi steps allowed across restarts.
    pub max_iter: usize,
    /// Krylov dimension per cycle.
    pub restart: usize,
}

impl Default for GmresOptions {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            max_iter: 500,
            restart: 60,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GmresOutcome {
    pub iterations: usize,
    pub relative_residual: f64,
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Solve `A x = b` from `x = 0`. `apply(v, out)` writes `A v` into `out`.
pub fn gmres(
    mut apply: impl FnMut(&[Complex64], &mut [Complex64]),
    b: &[Complex64],
    x: &mut [Complex64],
    opts: GmresOptions,
) -> Result<GmresOutcome> {
    let n = b.len();
    x.iter_mut().for_each(|v| *v = Complex64::new(0.0, 0.0));
    let b_norm = norm(b);
    if b_norm == 0.0 {
        return Ok(GmresOutcome {
            iterations: 0,
            relative_residual: 0.0,
        });
    }
    let restart = opts.restart.max(1);
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(restart + 1);
    let mut hess = vec![vec![Complex64::new(0.0, 0.0); restart]; restart + 1];
    let mut cs = vec![0.0; restart];
    let mut sn = vec![Complex64::new(0.0, 0.0); restart];
    let mut g = vec![Complex64::new(0.0, 0.0); restart + 1];
    let mut r = vec![Complex64::new(0.0, 0.0); n];
    let mut total = 0;

    loop {
        // r = b - A x
        apply(x, &mut r);
        for (ri, bi) in r.iter_mut().zip(b) {
            *ri = bi - *ri;
        }
        let beta = norm(&r);
        let rel = beta / b_norm;
        if rel <= opts.tol {
            return Ok(GmresOutcome {
                iterations: total,
                relative_residual: rel,
            });
        }
        if total >= opts.max_iter {
            return Err(Error::NonConvergence {
                iterations: total,
                residual: rel,
            });
        }
        basis.clear();
        basis.push(r.iter().map(|v| v / beta).collect());
        g.iter_mut().for_each(|v| *v = Complex64::new(0.0, 0.0));
        g[0] = Complex64::new(beta, 0.0);

        let mut steps = 0;
        while steps < restart && total < opts.max_iter {
            let j = steps;
            let mut w = vec![Complex64::new(0.0, 0.0); n];
            apply(&basis[j], &mut w);
            for i in 0..=j {
                let hij = dot(&basis[i], &w);
                hess[i][j] = hij;
                for (wk, vk) in w.iter_mut().zip(&basis[i]) {
                    *wk -= hij * vk;
                }
            }
            let h_next = norm(&w);
            hess[j + 1][j] = Complex64::new(h_next, 0.0);
            for i in 0..j {
                let (a, bb) = (hess[i][j], hess[i + 1][j]);
                hess[i][j] = cs[i] * a + sn[i] * bb;
                hess[i + 1][j] = -sn[i].conj() * a + cs[i] * bb;
            }
            let (a, bb) = (hess[j][j], hess[j + 1][j]);
            let denom = (a.norm_sqr() + bb.norm_sqr()).sqrt();
            if denom == 0.0 {
                cs[j] = 1.0;
                sn[j] = Complex64::new(0.0, 0.0);
            } else if a.norm() == 0.0 {
                cs[j] = 0.0;
                sn[j] = bb.conj() / bb.norm();
            } else {
                cs[j] = a.norm() / denom;
                sn[j] = (a / a.norm()) * bb.conj() / denom;
            }
            hess[j][j] = cs[j] * a + sn[j] * bb;
            hess[j + 1][j] = Complex64::new(0.0, 0.0);
            g[j + 1] = -sn[j].conj() * g[j];
            g[j] *= cs[j];
            steps += 1;
            total += 1;
            if g[j + 1].norm() / b_norm <= opts.tol || h_next == 0.0 {
                break;
            }
            basis.push(w.iter().map(|v| v / h_next).collect());
        }

        // Back substitution for the cycle's coefficients.
        let mut y = vec![Complex64::new(0.0, 0.0); steps];
        for i in (0..steps).rev() {
            let mut s = g[i];
            for k in i + 1..steps {
                s -= hess[i][k] * y[k];
            }
            y[i] = s / hess[i][i];
        }
        for (i, yi) in y.iter().enumerate() {
            for (xk, vk) in x.iter_mut().zip(&basis[i]) {
                *xk += yi * vk;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_apply(a: &[Complex64], n: usize) -> impl FnMut(&[Complex64], &mut [Complex64]) + '_ {
        move |v, out| {
            for i in 0..n {
                out[i] = (0..n).map(|j| a[i * n + j] * v[j]).sum();
            }
        }
    }

    #[test]
    fn solves_nonsymmetric_complex_system() {
        let n = 30;
        let a: Vec<Complex64> = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let base = if i == j {
                    Complex64::new(4.0, 1.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                base + Complex64::new(((i * 3 + j * 5) % 7) as f64 * 0.05, ((i + 2 * j) % 3) as f64 * 0.03)
            })
            .collect();
        let xs: Vec<Complex64> = (0..n).map(|i| Complex64::new(i as f64, 1.0 - i as f64 * 0.1)).collect();
        let mut b = vec![Complex64::new(0.0, 0.0); n];
        dense_apply(&a, n)(&xs, &mut b);
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        let out = gmres(
            dense_apply(&a, n),
            &b,
            &mut x,
            GmresOptions {
                tol: 1e-12,
                max_iter: 200,
                restart: 7,
            },
        )
        .unwrap();
        assert!(out.relative_residual <= 1e-12);
        for (u, v) in x.iter().zip(&xs) {
            assert!((u - v).norm() < 1e-9);
        }
    }

    #[test]
    fn zero_rhs_is_immediate() {
        let mut x = vec![Complex64::new(1.0, 0.0); 3];
        let out = gmres(
            |v, o| o.copy_from_slice(v),
            &[Complex64::new(0.0, 0.0); 3],
            &mut x,
            GmresOptions::default(),
        )
        .unwrap();
        assert_eq!(out.iterations, 0);
        assert!(x.iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn reports_non_convergence() {
        // Cyclic shift: GMRES needs n steps.
        let n = 20;
        let shift = |v: &[Complex64], o: &mut [Complex64]| {
            for i in 0..v.len() {
                o[i] = v[(i + 1) % v.len()];
            }
        };
        let mut b = vec![Complex64::new(0.0, 0.0); n];
        b[0] = Complex64::new(1.0, 0.0);
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        let err = gmres(
            shift,
            &b,
            &mut x,
            GmresOptions {
                tol: 1e-10,
                max_iter: 5,
                restart: 5,
            },
        );
        assert!(matches!(err, Err(Error::NonConvergence { iterations: 5, .. })));
    }
}
