//! Scalar special functions: normalized Jacobi polynomials of the `(0, m)`
//! family, integer-order Bessel functions, the Hankel function `H_0^(1)` and
//! the real circular harmonics `Y_{m,l}`.
//!
//! Bessel evaluation switches regime on the argument:
//!
//! * `x < 2`: power series (no cancellation at this size),
//! * `2 <= x < 25`: Miller backward recurrence normalized by
//!   `J_0 + 2 sum J_2k = 1`, with `Y_0`, `Y_1` from their Neumann series,
//! * `x >= 25`: Hankel asymptotic expansion for orders 0 and 1 (truncation
//!   error below `exp(-2x)`), Miller recurrence for higher `J_n`.
//!
//! All routines are pure and thread safe.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Below this argument power series are used.
pub const SERIES_LIMIT: f64 = 2.0;
/// At and above this argument orders 0 and 1 use the asymptotic expansion.
pub const ASYMPTOTIC_LIMIT: f64 = 25.0;

/// Parameters of the normalized Jacobi family `P_j^{(m)}`, `0 <= j <= max_degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JacobiParams {
    pub m: usize,
    pub max_degree: usize,
}

impl JacobiParams {
    pub fn new(m: usize, max_degree: usize) -> Self {
        Self { m, max_degree }
    }

    /// Off-diagonal coefficient `a_n` of the three-term recurrence.
    pub fn a(&self, n: usize) -> f64 {
        let (n, m) = (n as f64, self.m as f64);
        2.0 * (n + 1.0) * (n + m + 1.0) / ((2.0 * n + m + 2.0) * ((2.0 * n + m + 1.0) * (2.0 * n + m + 3.0)).sqrt())
    }

    /// Diagonal coefficient `b_n`. For `m = 0` every `b_n` vanishes (the
    /// formula is `0/0` at `n = 0`).
    pub fn b(&self, n: usize) -> f64 {
        if self.m == 0 {
            return 0.0;
        }
        let (n, m) = (n as f64, self.m as f64);
        m * m / ((2.0 * n + m) * (2.0 * n + m + 2.0))
    }

    /// `h_0 = 1 / sqrt(2(m+1))`.
    pub fn h0(&self) -> f64 {
        1.0 / (2.0 * (self.m as f64 + 1.0)).sqrt()
    }

    /// `h_1 = 1 / sqrt(2(m+3))`.
    pub fn h1(&self) -> f64 {
        1.0 / (2.0 * (self.m as f64 + 3.0)).sqrt()
    }
}

/// `[P_0^{(m)}(x), ..., P_J^{(m)}(x)]` for `|x| < 1`.
///
/// The family is orthonormal on `(-1, 1)` under the weight
/// `(1 + x)^m / 2^(m+2)`, which is the weight for which `P_0 = 1/h_0` and
/// `P_1 = ((m+2)x - m) / (2 h_1)` have unit norm. Under `x = 2r^2 - 1` this
/// is exactly the radial measure `r^{2m} r dr` of the unit disk.
pub fn jacobi_normalized(params: JacobiParams, x: f64) -> Result<Vec<f64>> {
    if !(x.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "normalized Jacobi polynomials require |x| < 1, got {x}"
        )));
    }
    Ok(jacobi_values(params, x))
}

/// Same as [`jacobi_normalized`] but defined on the closed interval; used
/// internally where nodes include the endpoint `x = 1` (the disk boundary).
pub(crate) fn jacobi_values(params: JacobiParams, x: f64) -> Vec<f64> {
    let degree = params.max_degree;
    let mut p = Vec::with_capacity(degree + 1);
    p.push(1.0 / params.h0());
    if degree == 0 {
        return p;
    }
    let m = params.m as f64;
    p.push(((m + 2.0) * x - m) / (2.0 * params.h1()));
    for n in 1..degree {
        let next = ((x - params.b(n)) * p[n] - params.a(n - 1) * p[n - 1]) / params.a(n);
        p.push(next);
    }
    p
}

/// Values and first derivatives of the normalized family, obtained by
/// differentiating the recurrence.
pub(crate) fn jacobi_with_derivatives(params: JacobiParams, x: f64) -> (Vec<f64>, Vec<f64>) {
    let degree = params.max_degree;
    let len = degree + 1;
    let mut p = vec![0.0; len];
    let mut dp = vec![0.0; len];
    let m = params.m as f64;
    p[0] = 1.0 / params.h0();
    if degree >= 1 {
        p[1] = ((m + 2.0) * x - m) / (2.0 * params.h1());
        dp[1] = (m + 2.0) / (2.0 * params.h1());
    }
    for n in 1..degree {
        let (a, a_prev, b) = (params.a(n), params.a(n - 1), params.b(n));
        p[n + 1] = ((x - b) * p[n] - a_prev * p[n - 1]) / a;
        dp[n + 1] = ((x - b) * dp[n] + p[n] - a_prev * dp[n - 1]) / a;
    }
    (p, dp)
}

/// Real circular harmonic `Y_{m,l}(theta)`, orthonormal on `[0, 2pi)`.
///
/// `l = 1` selects the cosine branch, `l = 2` the sine branch; `m = 0` only
/// admits `l = 1`.
pub fn spherical_harmonic(m: usize, l: usize, theta: f64) -> Result<f64> {
    match (m, l) {
        (0, 1) => Ok(1.0 / (2.0 * PI).sqrt()),
        (0, _) => Err(Error::InvalidIndex(format!(
            "Y_(0,{l}) does not exist; m = 0 admits only l = 1"
        ))),
        (_, 1) => Ok((m as f64 * theta).cos() / PI.sqrt()),
        (_, 2) => Ok((m as f64 * theta).sin() / PI.sqrt()),
        _ => Err(Error::InvalidIndex(format!("l must be 1 or 2, got {l}"))),
    }
}

/// Bessel function of the first kind `J_order(x)`.
pub fn bessel_j(order: usize, x: f64) -> f64 {
    if x < 0.0 {
        let v = bessel_j(order, -x);
        return if order & 1 == 0 { v } else { -v };
    }
    if x == 0.0 {
        return if order == 0 { 1.0 } else { 0.0 };
    }
    if x < SERIES_LIMIT {
        return j_series(order, x);
    }
    if x >= ASYMPTOTIC_LIMIT && order <= 1 {
        return hankel_asymptotic(order, x).0;
    }
    miller(order, x)[order]
}

/// `[J_0(x), ..., J_max_order(x)]` for `x >= 0`.
pub fn bessel_j_sequence(max_order: usize, x: f64) -> Vec<f64> {
    let x = x.abs();
    if x == 0.0 {
        let mut out = vec![0.0; max_order + 1];
        out[0] = 1.0;
        return out;
    }
    if x < SERIES_LIMIT {
        return (0..=max_order).map(|n| j_series(n, x)).collect();
    }
    let mut full = miller(max_order, x);
    full.truncate(max_order + 1);
    full
}

/// `[Y_0(x), ..., Y_max_order(x)]` for `x > 0` by upward recurrence from
/// `Y_0`, `Y_1` (upward recurrence is stable for `Y`).
pub fn bessel_y_sequence(max_order: usize, x: f64) -> Result<Vec<f64>> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("Y_n(x) requires x > 0, got {x}")));
    }
    let (_, _, y0, y1) = order01(x);
    let mut out = Vec::with_capacity(max_order + 1);
    out.push(y0);
    if max_order >= 1 {
        out.push(y1);
    }
    for n in 1..max_order {
        let next = (2.0 * n as f64 / x) * out[n] - out[n - 1];
        out.push(next);
    }
    Ok(out)
}

/// Hankel function of the first kind and order zero, `J_0(x) + i Y_0(x)`.
pub fn hankel1_0(x: f64) -> Result<Complex64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "H_0^(1)(x) is singular at 0 and defined here for x > 0, got {x}"
        )));
    }
    let (j0, _, y0, _) = order01(x);
    Ok(Complex64::new(j0, y0))
}

/// `(J_0, J_1, Y_0, Y_1)` at `x > 0`.
fn order01(x: f64) -> (f64, f64, f64, f64) {
    if x < SERIES_LIMIT {
        let (j0, j1) = (j_series(0, x), j_series(1, x));
        let (y0, y1) = y01_series(x, j0, j1);
        (j0, j1, y0, y1)
    } else if x < ASYMPTOTIC_LIMIT {
        let j = miller(1, x);
        let log_term = (x / 2.0).ln() + EULER_GAMMA;
        let mut s0 = 0.0;
        let mut s1 = 0.0;
        let mut k = 1;
        while 2 * k + 1 < j.len() {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            s0 += sign * j[2 * k] / k as f64;
            s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k as f64;
            k += 1;
        }
        let y0 = 2.0 / PI * log_term * j[0] - 4.0 / PI * s0;
        let y1 = -2.0 / PI * j[0] / x + 2.0 / PI * log_term * j[1] + 2.0 / PI * s1;
        (j[0], j[1], y0, y1)
    } else {
        let (j0, y0) = hankel_asymptotic(0, x);
        let (j1, y1) = hankel_asymptotic(1, x);
        (j0, j1, y0, y1)
    }
}

fn j_series(order: usize, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = 1.0;
    for k in 1..=order {
        term *= half / k as f64;
    }
    if term == 0.0 {
        return 0.0;
    }
    let q = -half * half;
    let mut sum = term;
    for k in 1..200 {
        term *= q / (k as f64 * (k + order) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn y01_series(x: f64, j0: f64, j1: f64) -> (f64, f64) {
    let half = 0.5 * x;
    let q = -half * half;
    let log_half = half.ln();

    // Y_0: -(2/pi) sum_{k>=1} H_k q^k / (k!)^2
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut s0 = 0.0;
    // Y_1: sum_{k>=0} (psi(k+1) + psi(k+2)) q^k / (k! (k+1)!)
    let mut term1 = 1.0;
    let mut s1 = -2.0 * EULER_GAMMA + 1.0;
    for k in 1..100 {
        let kf = k as f64;
        harmonic += 1.0 / kf;
        term *= q / (kf * kf);
        s0 += harmonic * term;
        term1 *= q / (kf * (kf + 1.0));
        let psi_sum = -2.0 * EULER_GAMMA + 2.0 * harmonic + 1.0 / (kf + 1.0);
        s1 += psi_sum * term1;
        if term.abs() < 1e-18 && term1.abs() < 1e-18 {
            break;
        }
    }
    let y0 = 2.0 / PI * (log_half + EULER_GAMMA) * j0 - 2.0 / PI * s0;
    let y1 = -2.0 / (PI * x) + 2.0 / PI * log_half * j1 - half / PI * s1;
    (y0, y1)
}

/// `(J_order, Y_order)` from the Hankel expansion, `order` in {0, 1}.
fn hankel_asymptotic(order: usize, x: f64) -> (f64, f64) {
    let mu = 4.0 * (order * order) as f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut t = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..120 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        t *= (mu - odd * odd) / (8.0 * kf * x);
        if t.abs() > last || t == 0.0 {
            break;
        }
        last = t.abs();
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
        if t.abs() < 1e-17 {
            break;
        }
    }
    let chi = x - (0.5 * order as f64 + 0.25) * PI;
    let amp = (2.0 / (PI * x)).sqrt();
    let (s, c) = chi.sin_cos();
    (amp * (p * c - q * s), amp * (p * s + q * c))
}

/// Normalized Miller backward recurrence; returns `J_0..=J_top` where
/// `top >= max_order` is the starting order of the recurrence.
fn miller(max_order: usize, x: f64) -> Vec<f64> {
    const BIG: f64 = 1e250;
    let anchor = max_order.max(x.ceil() as usize);
    let start = 2 * ((anchor + (160.0 * anchor as f64).sqrt() as usize + 24) / 2);
    let mut out = vec![0.0; start + 1];
    let mut next = 0.0;
    let mut cur = 1e-30;
    out[start] = cur;
    let mut sum = 2.0 * cur;
    for k in (1..=start).rev() {
        let prev = (2.0 * k as f64 / x) * cur - next;
        next = cur;
        cur = prev;
        let idx = k - 1;
        out[idx] = cur;
        if idx % 2 == 0 {
            sum += if idx == 0 { cur } else { 2.0 * cur };
        }
        if cur.abs() > BIG {
            cur /= BIG;
            next /= BIG;
            sum /= BIG;
            for v in &mut out[idx..] {
                *v /= BIG;
            }
        }
    }
    for v in &mut out {
        *v /= sum;
    }
    out
}
