//! Quadrature oracles shared by the integration tests. Derivatives are taken
//! straight from the coefficients and integrals use a plain trapezoid sum, so
//! nothing here goes through the library's Parseval or evaluation code.

#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use wirtinger_lab::{CoefficientTable, TrigSeries};

pub fn deriv_at(f: &TrigSeries, k: usize, t: f64) -> f64 {
    let mut v = if k == 0 { f.mean() } else { 0.0 };
    for (i, (a, b)) in f.cos_coeffs().iter().zip(f.sin_coeffs()).enumerate() {
        let n = (i + 1) as f64;
        let phase = n * t + k as f64 * FRAC_PI_2;
        v += n.powi(k as i32) * (a * phase.cos() + b * phase.sin());
    }
    v
}

pub fn trapezoid(n: usize, g: impl Fn(f64) -> f64) -> f64 {
    let h = 2.0 * PI / n as f64;
    (0..n).map(|j| g(h * j as f64)).sum::<f64>() * h
}

/// Enough nodes to integrate products of two derivatives exactly.
pub fn nodes(f: &TrigSeries, extra: usize) -> usize {
    64.max(4 * (f.degree() + extra + 1))
}

pub fn energy(f: &TrigSeries, k: usize) -> f64 {
    trapezoid(nodes(f, 1), |t| deriv_at(f, k, t).powi(2))
}

/// `sum_k c_{m,k} int (f^{(k)})^2`.
pub fn form_a(f: &TrigSeries, m: usize) -> f64 {
    let c = CoefficientTable::new(m).unwrap().c_f64();
    c.iter().enumerate().map(|(k, ck)| ck * energy(f, k)).sum()
}

/// `sum_k lambda_{m,k} int [(f^{(k+1)})^2 - (f^{(k)})^2]`.
pub fn form_b(f: &TrigSeries, m: usize) -> f64 {
    let l = CoefficientTable::new(m).unwrap().lambda_f64();
    l.iter().enumerate().map(|(k, lk)| lk * (energy(f, k + 1) - energy(f, k))).sum()
}

fn shifted_sum(f: &TrigSeries, k: usize) -> f64 {
    trapezoid(nodes(f, 2), |t| (deriv_at(f, k + 1, t) + deriv_at(f, k - 1, t)).powi(2))
}

pub fn form_c(f: &TrigSeries, m: usize) -> f64 {
    let s = CoefficientTable::new(m).unwrap().s_f64();
    s[0] * (energy(f, 1) - energy(f, 0)) + (1..m).map(|k| s[k] * shifted_sum(f, k)).sum::<f64>()
}

/// `-S_{m,0} int (h^2 - h'^2) + lambda_{m,0} (int h)^2 / (2 pi) + sum S_{m,k} int (h^{(k+1)} + h^{(k-1)})^2`.
pub fn mean_form(h: &TrigSeries, m: usize) -> f64 {
    let t = CoefficientTable::new(m).unwrap();
    let (s, l) = (t.s_f64(), t.lambda_f64());
    let int_h = trapezoid(nodes(h, 0), |t| deriv_at(h, 0, t));
    -s[0] * (energy(h, 0) - energy(h, 1)) + l[0] * int_h * int_h / (2.0 * PI) + (1..m).map(|k| s[k] * shifted_sum(h, k)).sum::<f64>()
}

/// Support-function quantities by direct quadrature of `h`, `h'`, `rho`.
pub struct ConvexOracle {
    pub length: f64,
    pub area: f64,
    pub deficit: f64,
    pub inv_curv: f64,
    /// `int (rho^{(l)})^2` for `l = 0..`
    pub rho_terms: Vec<f64>,
}

pub fn convex_oracle(h: &TrigSeries, lmax: usize) -> ConvexOracle {
    let n = nodes(h, lmax + 2);
    let length = trapezoid(n, |t| deriv_at(h, 0, t));
    let two_a = trapezoid(n, |t| deriv_at(h, 0, t).powi(2) - deriv_at(h, 1, t).powi(2));
    let rho_l = |l: usize, t: f64| deriv_at(h, l, t) + deriv_at(h, l + 2, t);
    let rho_terms: Vec<f64> = (0..=lmax).map(|l| trapezoid(n, |t| rho_l(l, t).powi(2))).collect();
    ConvexOracle {
        length,
        area: 0.5 * two_a,
        deficit: length * length - 2.0 * PI * two_a,
        inv_curv: rho_terms[0],
        rho_terms,
    }
}

/// Ellipse perimeter through the arithmetic-geometric mean.
pub fn ellipse_perimeter(a: f64, b: f64) -> f64 {
    let (mut x, mut y) = (a, b);
    let mut pow = 0.5;
    let mut sum = pow * (a * a - b * b);
    for _ in 0..40 {
        let c2 = (0.5 * (x - y)).powi(2);
        let (nx, ny) = (0.5 * (x + y), (x * y).sqrt());
        pow *= 2.0;
        sum += pow * c2;
        x = nx;
        y = ny;
    }
    2.0 * PI * (a * a - sum) / x
}
