//! Adaptive periodic trapezoid rule.
//!
//! Starting from 256 nodes the grid is doubled (reusing previous nodes) until
//! every component changes by less than `1e-11` relative between levels, up
//! to 65536 nodes.

use std::f64::consts::PI;

pub const START_NODES: usize = 256;
pub const MAX_NODES: usize = 65536;
pub const RTOL: f64 = 1e-11;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PeriodicQuadrature<const K: usize> {
    pub values: [f64; K],
    /// Node count of the final level.
    pub nodes: usize,
    /// Largest relative change between the last two levels.
    pub change: f64,
    pub converged: bool,
}

/// Integrates `K` periodic integrands over `[0, 2pi)` simultaneously.
///
/// `scale[i]` is a floor on the magnitude used for the relative test, so that
/// integrals that vanish (or nearly so) still converge; pass 0 for a purely
/// relative criterion.
pub fn integrate_periodic<const K: usize>(
    f: impl Fn(f64) -> [f64; K],
    scale: [f64; K],
) -> PeriodicQuadrature<K> {
    let mut n = START_NODES;
    let mut sums = [0.0; K];
    accumulate(&f, n, 0, 1, &mut sums);
    let mut prev = integrals(&sums, n);
    loop {
        // new nodes sit at odd indices of the refined grid
        accumulate(&f, 2 * n, 1, 2, &mut sums);
        n *= 2;
        let cur = integrals(&sums, n);
        let change = (0..K)
            .map(|i| {
                let denom = cur[i].abs().max(prev[i].abs()).max(scale[i]);
                if denom == 0.0 {
                    0.0
                } else {
                    (cur[i] - prev[i]).abs() / denom
                }
            })
            .fold(0.0, f64::max);
        if change <= RTOL || n >= MAX_NODES {
            return PeriodicQuadrature { values: cur, nodes: n, change, converged: change <= RTOL };
        }
        prev = cur;
    }
}

/// Plain trapezoid rule on exactly `n` nodes.
pub fn trapezoid_fixed<const K: usize>(f: impl Fn(f64) -> [f64; K], n: usize) -> [f64; K] {
    let mut sums = [0.0; K];
    accumulate(&f, n, 0, 1, &mut sums);
    integrals(&sums, n)
}

fn accumulate<const K: usize>(f: &impl Fn(f64) -> [f64; K], n: usize, start: usize, step: usize, sums: &mut [f64; K]) {
    let h = 2.0 * PI / n as f64;
    for j in (start..n).step_by(step) {
        let v = f(h * j as f64);
        for (s, x) in sums.iter_mut().zip(v) {
            *s += x;
        }
    }
}

fn integrals<const K: usize>(sums: &[f64; K], n: usize) -> [f64; K] {
    let h = 2.0 * PI / n as f64;
    sums.map(|s| s * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn smooth_integrand_converges_fast() {
        // int_0^{2pi} exp(cos t) dt = 2 pi I_0(1)
        let i0_1 = 1.266_065_877_752_008_4;
        let q = integrate_periodic(|t| [t.cos().exp()], [0.0]);
        assert!(q.converged);
        assert_eq!(q.nodes, 512);
        assert_relative_eq!(q.values[0], 2.0 * PI * i0_1, max_relative = 1e-14);
    }

    #[test]
    fn vanishing_integral_uses_scale_floor() {
        let q = integrate_periodic(|t| [t.sin() * 1e-3], [1.0]);
        assert!(q.converged);
        assert!(q.values[0].abs() < 1e-15);
        assert_eq!(q.nodes, 512);
    }

    #[test]
    fn fixed_grid_matches() {
        let a = trapezoid_fixed(|t| [t.cos().powi(2), 1.0], 16);
        assert_relative_eq!(a[0], PI, max_relative = 1e-15);
        assert_relative_eq!(a[1], 2.0 * PI, max_relative = 1e-15);
    }
}
