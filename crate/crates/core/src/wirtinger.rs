//! Higher-order Wirtinger functionals.
//!
//! For a zero-mean `2pi`-periodic `f` and an order `m >= 1` the three
//! functionals
//!
//! ```text
//! (a)  sum_{k=0}^{m}   c_{m,k} int (f^{(k)})^2
//! (b)  sum_{k=0}^{m-1} lambda_{m,k} int [(f^{(k+1)})^2 - (f^{(k)})^2]
//! (c)  S_{m,0} int [f'^2 - f^2] + sum_{k=1}^{m-1} S_{m,k} int (f^{(k+1)} + f^{(k-1)})^2
//! ```
//!
//! coincide and equal the spectral certificate
//! `pi sum_{n>m} (n^2-1)(n^2-4)...(n^2-m^2) (alpha_n^2 + beta_n^2)`, which is
//! nonnegative and vanishes exactly for series band-limited to `m`.
//!
//! Every integral is a Parseval sum carried in double-double precision, so the
//! cancellation between coefficients of size `(m!)^2` and energies of size
//! `n^{2m}` stays far below the `1e-9` comparison tolerance.

use std::f64::consts::PI;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactcoeff::{lambda0_closed_form, s0_closed_form, CoefficientTable};
use crate::report::{InequalityReport, Tolerance};
use crate::spectral::{Dd, PowerSpectrum, TrigSeries};

/// Beyond this order the coefficients cancel catastrophically in `f64`; the
/// exact tables in [`crate::exactcoeff`] remain available for any order.
pub const MAX_FLOAT_ORDER: usize = 8;

pub const RTOL: f64 = 1e-9;

/// Relative size of the mean tolerated by the zero-mean forms.
pub const MEAN_TOL: f64 = 1e-12;

/// Coefficient threshold of [`equality_case`].
pub const EQUALITY_COEFF_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    A,
    B,
    C,
}

impl Form {
    pub const ALL: [Form; 3] = [Form::A, Form::B, Form::C];

    pub fn label(self) -> &'static str {
        match self {
            Form::A => "a",
            Form::B => "b",
            Form::C => "c",
        }
    }

    fn provenance(self) -> &'static str {
        match self {
            Form::A => "higher-order Wirtinger inequality, central factorial form",
            Form::B => "higher-order Wirtinger inequality, difference form",
            Form::C => "higher-order Wirtinger inequality, shifted-sum form",
        }
    }
}

impl std::str::FromStr for Form {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Form::A),
            "b" | "B" => Ok(Form::B),
            "c" | "C" => Ok(Form::C),
            other => Err(Error::InvalidArgument(format!("unknown form `{other}`"))),
        }
    }
}

/// Coefficients of one order as doubles, exact because the order is capped.
#[derive(Clone, Debug)]
struct Coefficients {
    m: usize,
    c: Vec<f64>,
    lambda: Vec<f64>,
    s: Vec<f64>,
}

impl Coefficients {
    fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroOrder(m));
        }
        if m > MAX_FLOAT_ORDER {
            return Err(Error::OrderTooLarge { m, cap: MAX_FLOAT_ORDER });
        }
        let table = CoefficientTable::new(m)?;
        Ok(Self { m, c: table.c_f64(), lambda: table.lambda_f64(), s: table.s_f64() })
    }
}

fn check_zero_mean(f: &TrigSeries) -> Result<()> {
    let threshold = MEAN_TOL * (1.0 + f.max_abs_coeff());
    if f.mean().abs() > threshold {
        return Err(Error::NonzeroMean { mean: f.mean(), threshold });
    }
    Ok(())
}

fn form_a_dd(spec: &PowerSpectrum, co: &Coefficients, shift: usize) -> Dd {
    co.c
        .iter()
        .enumerate()
        .map(|(k, &c)| spec.derivative_energy(k + shift) * c)
        .sum()
}

fn form_b_dd(spec: &PowerSpectrum, co: &Coefficients, shift: usize) -> Dd {
    co.lambda
        .iter()
        .enumerate()
        .map(|(k, &l)| (spec.derivative_energy(k + 1 + shift) - spec.derivative_energy(k + shift)) * l)
        .sum()
}

fn form_c_dd(spec: &PowerSpectrum, co: &Coefficients) -> Dd {
    let head = (spec.derivative_energy(1) - spec.derivative_energy(0)) * co.s[0];
    let tail: Dd = (1..co.m).map(|k| spec.shifted_sum_energy(k) * co.s[k]).sum();
    head + tail
}

/// Right-hand member of the form-(c) sandwich, before division by
/// `(m+1)^2`: `S_{m,0} int [f'^2 - f^2] + sum_{k=0}^{m-1} S_{m,k} int (f^{(k+2)} + f^{(k)})^2`.
fn form_c_upper_dd(spec: &PowerSpectrum, co: &Coefficients) -> Dd {
    let head = (spec.derivative_energy(1) - spec.derivative_energy(0)) * co.s[0];
    let tail: Dd = (0..co.m).map(|k| spec.shifted_sum_energy(k + 1) * co.s[k]).sum();
    head + tail
}

fn certificate_dd(spec: &PowerSpectrum, m: usize) -> Dd {
    spec.weighted(|n| {
        if n <= m {
            return Dd::ZERO;
        }
        let n2 = (n * n) as f64;
        (1..=m).fold(Dd::from(1.0), |acc, j| acc * (n2 - (j * j) as f64))
    })
}

/// `sum_{k=0}^{m} c_{m,k} int (f^{(k)})^2 dt`.
pub fn form_a(f: &TrigSeries, m: usize) -> Result<f64> {
    let co = Coefficients::new(m)?;
    check_zero_mean(f)?;
    Ok(form_a_dd(&f.power_spectrum(), &co, 0).to_f64() * PI)
}

/// `sum_{k=0}^{m-1} lambda_{m,k} int [(f^{(k+1)})^2 - (f^{(k)})^2] dt`.
pub fn form_b(f: &TrigSeries, m: usize) -> Result<f64> {
    let co = Coefficients::new(m)?;
    check_zero_mean(f)?;
    Ok(form_b_dd(&f.power_spectrum(), &co, 0).to_f64() * PI)
}

/// `S_{m,0} int [f'^2 - f^2] + sum_{k=1}^{m-1} S_{m,k} int (f^{(k+1)} + f^{(k-1)})^2`;
/// for `m = 1` this is the classical functional `int [f'^2 - f^2]`.
pub fn form_c(f: &TrigSeries, m: usize) -> Result<f64> {
    let co = Coefficients::new(m)?;
    check_zero_mean(f)?;
    Ok(form_c_dd(&f.power_spectrum(), &co).to_f64() * PI)
}

/// `pi sum_{n > m} (n^2 - 1)...(n^2 - m^2) (alpha_n^2 + beta_n^2)`.
pub fn certificate(f: &TrigSeries, m: usize) -> Result<f64> {
    Coefficients::new(m)?;
    check_zero_mean(f)?;
    Ok(certificate_dd(&f.power_spectrum(), m).to_f64() * PI)
}

/// `(lower, upper)` of the order-`m` sandwich in the chosen form. The lower
/// member is the functional itself, the upper one is the same functional
/// applied to `f'` divided by `(m+1)^2`.
pub fn sandwich(f: &TrigSeries, m: usize, form: Form) -> Result<(f64, f64)> {
    let co = Coefficients::new(m)?;
    check_zero_mean(f)?;
    let spec = f.power_spectrum();
    let (lower, upper) = sandwich_dd(&spec, &co, form);
    Ok((lower.to_f64() * PI, upper.to_f64() * PI))
}

fn sandwich_dd(spec: &PowerSpectrum, co: &Coefficients, form: Form) -> (Dd, Dd) {
    let denom = ((co.m + 1) * (co.m + 1)) as f64;
    let (lower, upper) = match form {
        Form::A => (form_a_dd(spec, co, 0), form_a_dd(spec, co, 1)),
        Form::B => (form_b_dd(spec, co, 0), form_b_dd(spec, co, 1)),
        Form::C => (form_c_dd(spec, co), form_c_upper_dd(spec, co)),
    };
    (lower, upper * (1.0 / denom))
}

/// Mean-value version for arbitrary `h`:
///
/// ```text
/// (-1)^m (m-1)!(m+1)!/2 int (h^2 - h'^2) + (-1)^{m-1} (m!)^2 / (2pi) (int h)^2
///     + sum_{k=1}^{m-1} S_{m,k} int (h^{(k+1)} + h^{(k-1)})^2
/// ```
pub fn mean_form(h: &TrigSeries, m: usize) -> Result<f64> {
    let co = Coefficients::new(m)?;
    let spec = h.power_spectrum();
    let lead = -s0_closed_form(m).to_f64().expect("capped order fits f64");
    let mean_coeff = lambda0_closed_form(m).to_f64().expect("capped order fits f64");
    // (int h)^2 / (2 pi) = 2 pi mean^2, i.e. 2 mean^2 in units of pi
    let value = (spec.derivative_energy(0) - spec.derivative_energy(1)) * lead
        + spec.mean_sq() * (2.0 * mean_coeff)
        + (1..m).map(|k| spec.shifted_sum_energy(k) * co.s[k]).sum::<Dd>();
    Ok(value.to_f64() * PI)
}

/// True when every harmonic above `m` is negligible:
/// `max_{n>m} (alpha_n^2 + beta_n^2) <= (1e-12)^2 (1 + int f^2)`.
pub fn equality_case(f: &TrigSeries, m: usize) -> bool {
    f.tail_peak(m) <= EQUALITY_COEFF_TOL * EQUALITY_COEFF_TOL * (1.0 + f.l2_integral())
}

/// Tolerance scale `1 + sum_{k=0}^{m+1} int (f^{(k)})^2`. The sandwich upper
/// members involve `f^{(m+1)}`, hence the extra derivative.
pub fn tolerance_scale(f: &TrigSeries, m: usize) -> f64 {
    let spec = f.power_spectrum();
    1.0 + (0..=m + 1).map(|k| spec.derivative_energy(k)).sum::<Dd>().to_f64() * PI
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SandwichBounds {
    pub form: Form,
    pub lower: f64,
    pub upper: f64,
}

/// Every order-`m` quantity for one series.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WirtingerAudit {
    pub m: usize,
    pub form_a: f64,
    pub form_b: f64,
    pub form_c: f64,
    pub certificate: f64,
    pub sandwich: Vec<SandwichBounds>,
    pub equality_flag: bool,
    /// Largest pairwise gap among the three forms and the certificate.
    pub max_form_gap: f64,
    /// `rtol * (1 + |certificate|)`
    pub agreement_tol: f64,
    pub forms_agree: bool,
    pub scale: f64,
    pub rtol: f64,
    pub atol: f64,
    pub reports: Vec<InequalityReport>,
}

impl WirtingerAudit {
    /// Forms agree and every reported inequality holds.
    pub fn passed(&self) -> bool {
        self.forms_agree && self.reports.iter().all(InequalityReport::holds)
    }

    /// The certificate vanishes to tolerance.
    pub fn certificate_vanishes(&self) -> bool {
        self.certificate.abs() <= self.atol
    }
}

/// Evaluates all three forms and the certificate, the sandwich in each of the
/// requested forms, and the equality flag.
pub fn audit(f: &TrigSeries, m: usize, forms: &[Form], with_sandwich: bool) -> Result<WirtingerAudit> {
    let co = Coefficients::new(m)?;
    check_zero_mean(f)?;
    let spec = f.power_spectrum();
    let a = form_a_dd(&spec, &co, 0).to_f64() * PI;
    let b = form_b_dd(&spec, &co, 0).to_f64() * PI;
    let c = form_c_dd(&spec, &co).to_f64() * PI;
    let cert = certificate_dd(&spec, m).to_f64() * PI;
    let values = [a, b, c, cert];
    let max_form_gap = values
        .iter()
        .flat_map(|x| values.iter().map(move |y| (x - y).abs()))
        .fold(0.0, f64::max);
    let agreement_tol = RTOL * (1.0 + cert.abs());
    let scale = tolerance_scale(f, m);
    let tol = Tolerance::scaled(RTOL, scale);

    let mut reports = Vec::new();
    let mut sandwich = Vec::new();
    for &form in forms {
        let value = values[form as usize];
        reports.push(InequalityReport::new(
            format!("order-{m} functional ({}) >= 0", form.label()),
            form.provenance(),
            0.0,
            value,
            tol,
        ));
        if with_sandwich {
            let (lo, up) = sandwich_dd(&spec, &co, form);
            let (lower, upper) = (lo.to_f64() * PI, up.to_f64() * PI);
            reports.push(InequalityReport::new(
                format!("order-{m} sandwich ({})", form.label()),
                "reverse higher-order Wirtinger inequality",
                lower,
                upper,
                tol,
            ));
            sandwich.push(SandwichBounds { form, lower, upper });
        }
    }
    Ok(WirtingerAudit {
        m,
        form_a: a,
        form_b: b,
        form_c: c,
        certificate: cert,
        sandwich,
        equality_flag: equality_case(f, m),
        max_form_gap,
        agreement_tol,
        forms_agree: max_form_gap <= agreement_tol,
        scale,
        rtol: RTOL,
        atol: tol.atol,
        reports,
    })
}
