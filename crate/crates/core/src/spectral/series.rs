use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::dd::Dd;
use crate::error::{Error, Result};

/// Real trigonometric polynomial
/// `mean + sum_{n=1}^{N} (cos[n-1] cos(n t) + sin[n-1] sin(n t))`.
///
/// Trailing zero harmonics are trimmed on construction, so `degree()` is the
/// largest `n` with a nonzero pair, or 0 for a constant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSeries", into = "RawSeries")]
pub struct TrigSeries {
    mean: f64,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeries {
    #[serde(default)]
    mean: f64,
    #[serde(default)]
    cos: Vec<f64>,
    #[serde(default)]
    sin: Vec<f64>,
}

impl TryFrom<RawSeries> for TrigSeries {
    type Error = Error;
    fn try_from(raw: RawSeries) -> Result<Self> {
        TrigSeries::new(raw.mean, raw.cos, raw.sin)
    }
}

impl From<TrigSeries> for RawSeries {
    fn from(s: TrigSeries) -> Self {
        RawSeries { mean: s.mean, cos: s.cos, sin: s.sin }
    }
}

impl Default for TrigSeries {
    fn default() -> Self {
        Self::zero()
    }
}

impl TrigSeries {
    /// Builds a series from its mean and harmonic coefficients. The two
    /// coefficient lists may differ in length; the shorter is zero-padded.
    pub fn new(mean: f64, mut cos: Vec<f64>, mut sin: Vec<f64>) -> Result<Self> {
        if !mean.is_finite() {
            return Err(Error::NonFinite("mean".into()));
        }
        if cos.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("cos".into()));
        }
        if sin.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("sin".into()));
        }
        let n = cos.len().max(sin.len());
        cos.resize(n, 0.0);
        sin.resize(n, 0.0);
        Ok(Self::from_parts(mean, cos, sin))
    }

    fn from_parts(mean: f64, mut cos: Vec<f64>, mut sin: Vec<f64>) -> Self {
        debug_assert_eq!(cos.len(), sin.len());
        while cos.last() == Some(&0.0) && sin.last() == Some(&0.0) {
            cos.pop();
            sin.pop();
        }
        Self { mean, cos, sin }
    }

    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    pub fn constant(c: f64) -> Self {
        Self { mean: c, cos: Vec::new(), sin: Vec::new() }
    }

    /// `a cos(n t) + b sin(n t)`; `n = 0` gives the constant `a`.
    pub fn harmonic(n: usize, a: f64, b: f64) -> Self {
        if n == 0 {
            return Self::constant(a);
        }
        let mut cos = vec![0.0; n];
        let mut sin = vec![0.0; n];
        cos[n - 1] = a;
        sin[n - 1] = b;
        Self::from_parts(0.0, cos, sin)
    }

    pub fn cos_n(n: usize) -> Self {
        Self::harmonic(n, 1.0, 0.0)
    }

    pub fn sin_n(n: usize) -> Self {
        Self::harmonic(n, 0.0, 1.0)
    }

    pub fn degree(&self) -> usize {
        self.cos.len()
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// `alpha_1..alpha_N`
    pub fn cos_coeffs(&self) -> &[f64] {
        &self.cos
    }

    /// `beta_1..beta_N`
    pub fn sin_coeffs(&self) -> &[f64] {
        &self.sin
    }

    /// `(alpha_n, beta_n)`, zero beyond the degree; `n = 0` returns the mean.
    pub fn coeff(&self, n: usize) -> (f64, f64) {
        if n == 0 {
            return (self.mean, 0.0);
        }
        match (self.cos.get(n - 1), self.sin.get(n - 1)) {
            (Some(&a), Some(&b)) => (a, b),
            _ => (0.0, 0.0),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.eval_with_derivatives::<1>(t)[0]
    }

    /// Value and the first `K - 1` derivatives at `t`, sharing one `sin_cos`
    /// call through the angle-addition recurrence.
    pub fn eval_with_derivatives<const K: usize>(&self, t: f64) -> [f64; K] {
        let mut out = [0.0; K];
        if K == 0 {
            return out;
        }
        out[0] = self.mean;
        let (s1, c1) = t.sin_cos();
        let (mut s, mut c) = (s1, c1);
        for (i, (&a, &b)) in self.cos.iter().zip(&self.sin).enumerate() {
            let n = (i + 1) as f64;
            // d^k/dt^k of a cos + b sin cycles through rotations scaled by n^k
            let p = a * c + b * s;
            let q = b * c - a * s;
            let mut scale = 1.0;
            for (k, slot) in out.iter_mut().enumerate() {
                let v = match k % 4 {
                    0 => p,
                    1 => q,
                    2 => -p,
                    _ => -q,
                };
                *slot += scale * v;
                scale *= n;
            }
            let next_c = c * c1 - s * s1;
            s = s * c1 + c * s1;
            c = next_c;
        }
        out
    }

    /// Largest absolute coefficient, including the mean.
    pub fn max_abs_coeff(&self) -> f64 {
        self.cos
            .iter()
            .chain(&self.sin)
            .fold(self.mean.abs(), |m, v| m.max(v.abs()))
    }

    /// k-th spectral derivative: harmonic `n` is multiplied by `(i n)^k`.
    pub fn derivative(&self, k: usize) -> TrigSeries {
        if k == 0 {
            return self.clone();
        }
        let mut cos = Vec::with_capacity(self.degree());
        let mut sin = Vec::with_capacity(self.degree());
        for (i, (&a, &b)) in self.cos.iter().zip(&self.sin).enumerate() {
            let scale = ((i + 1) as f64).powi(k as i32);
            // one derivative maps (a, b) -> (n b, -n a)
            let (a, b) = match k % 4 {
                0 => (a, b),
                1 => (b, -a),
                2 => (-a, -b),
                _ => (-b, a),
            };
            cos.push(scale * a);
            sin.push(scale * b);
        }
        Self::from_parts(0.0, cos, sin)
    }

    /// `int_0^{2pi} f(t)^2 dt` by Parseval.
    pub fn l2_integral(&self) -> f64 {
        self.inner_product(self)
    }

    /// `int_0^{2pi} f g dt` by Parseval.
    pub fn inner_product(&self, other: &TrigSeries) -> f64 {
        let harmonics: f64 = (1..=self.degree().min(other.degree()))
            .map(|n| {
                let (a, b) = self.coeff(n);
                let (c, d) = other.coeff(n);
                a * c + b * d
            })
            .sum();
        2.0 * PI * self.mean * other.mean + PI * harmonics
    }

    /// `int_0^{2pi} f dt`.
    pub fn integral(&self) -> f64 {
        2.0 * PI * self.mean
    }

    pub fn project_mean_zero(&self) -> TrigSeries {
        Self { mean: 0.0, cos: self.cos.clone(), sin: self.sin.clone() }
    }

    pub fn with_mean(&self, mean: f64) -> TrigSeries {
        Self { mean, cos: self.cos.clone(), sin: self.sin.clone() }
    }

    pub fn scale(&self, factor: f64) -> TrigSeries {
        Self::from_parts(
            self.mean * factor,
            self.cos.iter().map(|v| v * factor).collect(),
            self.sin.iter().map(|v| v * factor).collect(),
        )
    }

    /// Time shift: returns `t -> f(t + phase)`.
    pub fn shift(&self, phase: f64) -> TrigSeries {
        let mut cos = Vec::with_capacity(self.degree());
        let mut sin = Vec::with_capacity(self.degree());
        for (i, (&a, &b)) in self.cos.iter().zip(&self.sin).enumerate() {
            let (s, c) = (((i + 1) as f64) * phase).sin_cos();
            // a cos(n t + p) + b sin(n t + p)
            cos.push(a * c + b * s);
            sin.push(b * c - a * s);
        }
        Self::from_parts(self.mean, cos, sin)
    }

    /// Time reversal `t -> f(-t)`.
    pub fn reverse(&self) -> TrigSeries {
        Self::from_parts(self.mean, self.cos.clone(), self.sin.iter().map(|v| -v).collect())
    }

    /// Pointwise product, computed exactly on the coefficients.
    pub fn product(&self, other: &TrigSeries) -> TrigSeries {
        let n = self.degree() + other.degree();
        // index 0 of `c` holds the constant term, `s[0]` is unused
        let mut c = vec![0.0; n + 1];
        let mut s = vec![0.0; n + 1];
        let (lc, ls) = self.full();
        let (rc, rs) = other.full();
        for i in 0..lc.len() {
            for j in 0..rc.len() {
                let (ci, si, cj, sj) = (lc[i], ls[i], rc[j], rs[j]);
                let sum = i + j;
                let diff = i.abs_diff(j);
                let sign = if i >= j { 1.0 } else { -1.0 };
                c[diff] += 0.5 * (ci * cj + si * sj);
                c[sum] += 0.5 * (ci * cj - si * sj);
                s[sum] += 0.5 * (ci * sj + si * cj);
                // sin(i - j) = sign * sin|i - j|
                s[diff] += 0.5 * sign * (si * cj - ci * sj);
            }
        }
        let mean = c[0];
        Self::from_parts(mean, c[1..].to_vec(), s[1..].to_vec())
    }

    fn full(&self) -> (Vec<f64>, Vec<f64>) {
        let mut c = Vec::with_capacity(self.degree() + 1);
        let mut s = Vec::with_capacity(self.degree() + 1);
        c.push(self.mean);
        s.push(0.0);
        c.extend_from_slice(&self.cos);
        s.extend_from_slice(&self.sin);
        (c, s)
    }

    /// Parseval data carried in double-double precision.
    pub fn power_spectrum(&self) -> PowerSpectrum {
        PowerSpectrum {
            mean_sq: Dd::product(self.mean, self.mean),
            energy: self
                .cos
                .iter()
                .zip(&self.sin)
                .map(|(&a, &b)| Dd::product(a, a) + Dd::product(b, b))
                .collect(),
        }
    }

    /// `max_{n > m} (alpha_n^2 + beta_n^2)`, zero when the series is
    /// band-limited to `m`.
    pub fn tail_peak(&self, m: usize) -> f64 {
        self.cos
            .iter()
            .zip(&self.sin)
            .skip(m)
            .map(|(a, b)| a * a + b * b)
            .fold(0.0, f64::max)
    }
}

/// `f^{(k)}`
pub fn derivative(f: &TrigSeries, k: usize) -> TrigSeries {
    f.derivative(k)
}

/// `int_0^{2pi} f^2 dt`
pub fn l2_integral(f: &TrigSeries) -> f64 {
    f.l2_integral()
}

pub fn project_mean_zero(f: &TrigSeries) -> TrigSeries {
    f.project_mean_zero()
}

/// Random series with coefficients uniform on `[-1, 1]`; the mean is drawn as
/// well unless `zero_mean` is set.
pub fn random_series<R: Rng + ?Sized>(degree: usize, zero_mean: bool, rng: &mut R) -> TrigSeries {
    let mean = if zero_mean { 0.0 } else { rng.gen_range(-1.0..=1.0) };
    let mut cos = Vec::with_capacity(degree);
    let mut sin = Vec::with_capacity(degree);
    for _ in 0..degree {
        cos.push(rng.gen_range(-1.0..=1.0));
        sin.push(rng.gen_range(-1.0..=1.0));
    }
    TrigSeries::from_parts(mean, cos, sin)
}

/// Squared harmonic amplitudes `e_n = alpha_n^2 + beta_n^2` and `mean^2`.
///
/// Energies are reported in units of `pi`, i.e. `derivative_energy(k)`
/// returns `int (f^{(k)})^2 dt / pi`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSpectrum {
    mean_sq: Dd,
    energy: Vec<Dd>,
}

fn dd_pow(n: usize, exponent: usize) -> Dd {
    (0..exponent).fold(Dd::from(1.0), |acc, _| acc * n as f64)
}

impl PowerSpectrum {
    pub fn degree(&self) -> usize {
        self.energy.len()
    }

    pub fn mean_sq(&self) -> Dd {
        self.mean_sq
    }

    /// `e_n` for `n >= 1`.
    pub fn energy(&self, n: usize) -> Dd {
        self.energy.get(n.wrapping_sub(1)).copied().unwrap_or(Dd::ZERO)
    }

    /// Weighted harmonic sum `sum_n w(n) e_n`.
    pub fn weighted(&self, weight: impl Fn(usize) -> Dd) -> Dd {
        self.energy
            .iter()
            .enumerate()
            .map(|(i, &e)| weight(i + 1) * e)
            .sum()
    }

    /// `int (f^{(k)})^2 dt / pi`.
    pub fn derivative_energy(&self, k: usize) -> Dd {
        let tail = self.weighted(|n| dd_pow(n, 2 * k));
        if k == 0 {
            tail + self.mean_sq * 2.0
        } else {
            tail
        }
    }

    /// `int (f^{(k+1)} + f^{(k-1)})^2 dt / pi` for `k >= 1`.
    pub fn shifted_sum_energy(&self, k: usize) -> Dd {
        assert!(k >= 1, "shifted sum needs k >= 1");
        let tail = self.weighted(|n| {
            let sq = (n * n - 1) as f64;
            dd_pow(n, 2 * (k - 1)) * sq * sq
        });
        if k == 1 {
            tail + self.mean_sq * 2.0
        } else {
            tail
        }
    }
}

impl Add for &TrigSeries {
    type Output = TrigSeries;
    fn add(self, rhs: &TrigSeries) -> TrigSeries {
        let n = self.degree().max(rhs.degree());
        let (cos, sin) = (1..=n)
            .map(|k| {
                let (a, b) = self.coeff(k);
                let (c, d) = rhs.coeff(k);
                (a + c, b + d)
            })
            .unzip();
        TrigSeries::from_parts(self.mean + rhs.mean, cos, sin)
    }
}

impl Neg for &TrigSeries {
    type Output = TrigSeries;
    fn neg(self) -> TrigSeries {
        self.scale(-1.0)
    }
}

impl Sub for &TrigSeries {
    type Output = TrigSeries;
    fn sub(self, rhs: &TrigSeries) -> TrigSeries {
        self + &(-rhs)
    }
}

impl Mul<f64> for &TrigSeries {
    type Output = TrigSeries;
    fn mul(self, rhs: f64) -> TrigSeries {
        self.scale(rhs)
    }
}

impl Add for TrigSeries {
    type Output = TrigSeries;
    fn add(self, rhs: TrigSeries) -> TrigSeries {
        &self + &rhs
    }
}

impl Sub for TrigSeries {
    type Output = TrigSeries;
    fn sub(self, rhs: TrigSeries) -> TrigSeries {
        &self - &rhs
    }
}

impl Mul<f64> for TrigSeries {
    type Output = TrigSeries;
    fn mul(self, rhs: f64) -> TrigSeries {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_series_eq(a: &TrigSeries, b: &TrigSeries, tol: f64) {
        let n = a.degree().max(b.degree());
        for k in 0..=n {
            let (x, y) = a.coeff(k);
            let (u, v) = b.coeff(k);
            assert!((x - u).abs() <= tol && (y - v).abs() <= tol, "harmonic {k}: {a:?} vs {b:?}");
        }
    }

    #[test]
    fn derivative_examples() {
        assert_series_eq(&TrigSeries::cos_n(1).derivative(1), &TrigSeries::harmonic(1, 0.0, -1.0), 0.0);
        assert_series_eq(&TrigSeries::cos_n(2).derivative(2), &TrigSeries::harmonic(2, -4.0, 0.0), 0.0);
        let f = &TrigSeries::constant(3.0) + &TrigSeries::sin_n(3);
        let df = f.derivative(1);
        assert_series_eq(&df, &TrigSeries::harmonic(3, 3.0, 0.0), 0.0);
        assert_eq!(df.mean(), 0.0);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = random_series(5, false, &mut rng);
        let h = 1e-5;
        for &t in &[0.1, 1.3, 4.0] {
            let fd = (f.eval(t + h) - f.eval(t - h)) / (2.0 * h);
            assert_relative_eq!(f.derivative(1).eval(t), fd, epsilon = 1e-7);
            let fd2 = (f.eval(t + h) - 2.0 * f.eval(t) + f.eval(t - h)) / (h * h);
            assert_relative_eq!(f.derivative(2).eval(t), fd2, epsilon = 1e-3);
        }
    }

    #[test]
    fn eval_with_derivatives_agrees_with_derivative_series() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = random_series(7, false, &mut rng);
        for &t in &[0.0, 0.7, 2.9, 6.1] {
            let d: [f64; 4] = f.eval_with_derivatives(t);
            for (k, &v) in d.iter().enumerate() {
                assert_relative_eq!(v, f.derivative(k).eval(t), epsilon = 1e-11, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn l2_examples() {
        assert_relative_eq!(TrigSeries::cos_n(1).l2_integral(), PI);
        assert_relative_eq!(TrigSeries::constant(1.0).l2_integral(), 2.0 * PI);
        let f = &TrigSeries::cos_n(1) + &TrigSeries::harmonic(3, 0.0, 2.0);
        assert_relative_eq!(f.l2_integral(), 5.0 * PI, max_relative = 1e-15);
    }

    #[test]
    fn mean_projection() {
        assert_eq!(TrigSeries::constant(5.0).project_mean_zero(), TrigSeries::zero());
        let f = &TrigSeries::constant(2.0) + &TrigSeries::cos_n(1);
        assert_eq!(f.project_mean_zero(), TrigSeries::cos_n(1));
    }

    #[test]
    fn trims_trailing_zeros_and_rejects_nan() {
        let f = TrigSeries::new(1.0, vec![1.0, 0.0, 0.0], vec![0.0]).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(TrigSeries::new(0.0, vec![0.0], vec![]).unwrap().degree(), 0);
        assert_eq!(TrigSeries::new(f64::NAN, vec![], vec![]), Err(Error::NonFinite("mean".into())));
        assert_eq!(TrigSeries::new(0.0, vec![], vec![f64::INFINITY]), Err(Error::NonFinite("sin".into())));
    }

    #[test]
    fn product_matches_pointwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = random_series(4, false, &mut rng);
        let g = random_series(3, false, &mut rng);
        let fg = f.product(&g);
        assert!(fg.degree() <= 7);
        for j in 0..50 {
            let t = j as f64 * 0.13;
            assert_relative_eq!(fg.eval(t), f.eval(t) * g.eval(t), epsilon = 1e-12);
        }
    }

    #[test]
    fn shift_and_reverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = random_series(5, false, &mut rng);
        let g = f.shift(0.4);
        let r = f.reverse();
        for j in 0..20 {
            let t = j as f64 * 0.3;
            assert_relative_eq!(g.eval(t), f.eval(t + 0.4), epsilon = 1e-12);
            assert_relative_eq!(r.eval(t), f.eval(-t), epsilon = 1e-12);
        }
    }

    #[test]
    fn spectrum_energies_agree_with_parseval() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = random_series(6, false, &mut rng);
        let spec = f.power_spectrum();
        for k in 0..5 {
            let direct = f.derivative(k).l2_integral();
            assert_relative_eq!(spec.derivative_energy(k).to_f64() * PI, direct, max_relative = 1e-13);
        }
        for k in 1..5 {
            let combo = &f.derivative(k + 1) + &f.derivative(k - 1);
            assert_relative_eq!(spec.shifted_sum_energy(k).to_f64() * PI, combo.l2_integral(), max_relative = 1e-13);
        }
    }

    #[test]
    fn json_schema() {
        let f: TrigSeries = serde_json::from_str(r#"{"mean": 1.5, "cos": [0, 2], "sin": [1]}"#).unwrap();
        assert_eq!(f.coeff(0), (1.5, 0.0));
        assert_eq!(f.coeff(1), (0.0, 1.0));
        assert_eq!(f.coeff(2), (2.0, 0.0));
        let back = serde_json::to_value(&f).unwrap();
        assert_eq!(back["sin"], serde_json::json!([1.0, 0.0]));
        assert!(serde_json::from_str::<TrigSeries>(r#"{"coss": [1]}"#).is_err());
    }
}
