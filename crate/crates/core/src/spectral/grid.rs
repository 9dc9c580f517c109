use std::f64::consts::PI;

use super::series::TrigSeries;
use crate::error::{Error, Result};

/// Values of a periodic function at `t_j = 2 pi j / n`, `j = 0..n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleGrid {
    values: Vec<f64>,
}

impl SampleGrid {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::GridTooSmall { got: 0, min: 1 });
        }
        Ok(Self { values })
    }

    /// Samples an arbitrary periodic function on `n` uniform nodes.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::GridTooSmall { got: 0, min: 1 });
        }
        let step = 2.0 * PI / n as f64;
        Ok(Self { values: (0..n).map(|j| f(step * j as f64)).collect() })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn node(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.len() as f64
    }

    /// Pointwise map.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> SampleGrid {
        SampleGrid { values: self.values.iter().map(|&v| f(v)).collect() }
    }

    /// Pointwise combination of two grids of equal size.
    pub fn zip_with(&self, other: &SampleGrid, f: impl Fn(f64, f64) -> f64) -> Result<SampleGrid> {
        if self.len() != other.len() {
            return Err(Error::InvalidArgument(format!(
                "grid sizes differ: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(SampleGrid {
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    /// Spectral derivative of the sampled function, using every harmonic the
    /// grid resolves without aliasing. The Nyquist mode of an even grid is
    /// dropped.
    pub fn spectral_derivative(&self, k: usize) -> SampleGrid {
        let max_degree = (self.len() - 1) / 2;
        let series = analyze_unchecked(self, max_degree);
        sample_unchecked(&series.derivative(k), self.len())
    }
}

/// `cos` and `sin` of `2 pi k / n` for `k = 0..n`. Indexing by `(k j) mod n`
/// keeps the twiddles exact to one rounding regardless of frequency.
fn twiddles(n: usize) -> (Vec<f64>, Vec<f64>) {
    (0..n)
        .map(|k| {
            let (s, c) = (2.0 * PI * k as f64 / n as f64).sin_cos();
            (c, s)
        })
        .unzip()
}

fn sample_unchecked(f: &TrigSeries, n: usize) -> SampleGrid {
    let (cos_t, sin_t) = twiddles(n);
    let values = (0..n)
        .map(|j| {
            let mut acc = f.mean();
            for (i, (&a, &b)) in f.cos_coeffs().iter().zip(f.sin_coeffs()).enumerate() {
                let idx = ((i + 1) * j) % n;
                acc += a * cos_t[idx] + b * sin_t[idx];
            }
            acc
        })
        .collect();
    SampleGrid { values }
}

fn analyze_unchecked(g: &SampleGrid, max_degree: usize) -> TrigSeries {
    let n = g.len();
    let (cos_t, sin_t) = twiddles(n);
    let mean = g.values.iter().sum::<f64>() / n as f64;
    let mut cos = Vec::with_capacity(max_degree);
    let mut sin = Vec::with_capacity(max_degree);
    for k in 1..=max_degree {
        let (mut a, mut b) = (0.0, 0.0);
        for (j, &v) in g.values.iter().enumerate() {
            let idx = (k * j) % n;
            a += v * cos_t[idx];
            b += v * sin_t[idx];
        }
        cos.push(2.0 * a / n as f64);
        sin.push(2.0 * b / n as f64);
    }
    TrigSeries::new(mean, cos, sin).expect("finite samples give finite coefficients")
}

/// Samples `f` on `n` uniform nodes.
pub fn sample(f: &TrigSeries, n: usize) -> Result<SampleGrid> {
    if n == 0 {
        return Err(Error::GridTooSmall { got: 0, min: 1 });
    }
    Ok(sample_unchecked(f, n))
}

/// Discrete Fourier analysis of uniform samples up to `max_degree`.
///
/// Exact (to rounding) for band-limited input when `2 max_degree < n`;
/// requests at or beyond the Nyquist limit are rejected.
pub fn analyze(g: &SampleGrid, max_degree: usize) -> Result<TrigSeries> {
    if 2 * max_degree >= g.len() {
        return Err(Error::Aliasing { degree: max_degree, samples: g.len() });
    }
    if g.values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("samples".into()));
    }
    Ok(analyze_unchecked(g, max_degree))
}

/// Periodic trapezoid rule `(2 pi / n) sum values`. Exact for trigonometric
/// polynomials of degree below `n`; higher harmonics alias (e.g. `cos t` on
/// two nodes integrates to 0 only by symmetry).
pub fn quad_trapezoid(g: &SampleGrid) -> f64 {
    2.0 * PI / g.len() as f64 * g.values.iter().sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::random_series;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn max_coeff_diff(a: &TrigSeries, b: &TrigSeries) -> f64 {
        let n = a.degree().max(b.degree());
        (0..=n)
            .map(|k| {
                let (x, y) = a.coeff(k);
                let (u, v) = b.coeff(k);
                (x - u).abs().max((y - v).abs())
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn round_trip_examples() {
        let f = TrigSeries::cos_n(2);
        let back = analyze(&sample(&f, 8).unwrap(), 2).unwrap();
        assert!(max_coeff_diff(&f, &back) <= 1e-14);

        let f = &TrigSeries::constant(1.0) + &TrigSeries::sin_n(1);
        let back = analyze(&sample(&f, 4).unwrap(), 1).unwrap();
        assert!(max_coeff_diff(&f, &back) <= 1e-15);
    }

    #[test]
    fn round_trip_random_degree_six() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..50 {
            let f = random_series(6, false, &mut rng);
            let back = analyze(&sample(&f, 16).unwrap(), 6).unwrap();
            assert!(max_coeff_diff(&f, &back) <= 1e-12 * f.max_abs_coeff());
        }
    }

    #[test]
    fn rejects_empty_and_aliasing() {
        assert_eq!(sample(&TrigSeries::zero(), 0), Err(Error::GridTooSmall { got: 0, min: 1 }));
        assert!(SampleGrid::new(vec![]).is_err());
        let g = sample(&TrigSeries::cos_n(1), 8).unwrap();
        assert_eq!(analyze(&g, 4), Err(Error::Aliasing { degree: 4, samples: 8 }));
        assert!(analyze(&g, 3).is_ok());
    }

    #[test]
    fn trapezoid_examples() {
        for n in [1, 2, 7, 64] {
            let g = SampleGrid::from_fn(n, |_| 1.0).unwrap();
            assert_relative_eq!(quad_trapezoid(&g), 2.0 * PI, max_relative = 1e-15);
        }
        let g = sample(&TrigSeries::cos_n(1), 2).unwrap();
        assert!(quad_trapezoid(&g).abs() < 1e-15);
        // (cos 3t)^2 has degree 6 < 8
        let g = SampleGrid::from_fn(8, |t| (3.0 * t).cos().powi(2)).unwrap();
        assert_relative_eq!(quad_trapezoid(&g), PI, max_relative = 1e-14);
    }

    #[test]
    fn spectral_derivative_of_samples() {
        let f = &TrigSeries::harmonic(3, 0.5, -1.0) + &TrigSeries::cos_n(1);
        let g = sample(&f, 32).unwrap();
        let dg = g.spectral_derivative(2);
        let exact = sample(&f.derivative(2), 32).unwrap();
        for (a, b) in dg.values().iter().zip(exact.values()) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
