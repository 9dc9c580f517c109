//! Convex bodies described by their support function `h(theta)`, `theta` the
//! outward normal angle.
//!
//! With `rho = h + h''` the radius of curvature we have `ds = rho dtheta`,
//! `L = int h`, `2A = int (h^2 - h'^2)` and `int (1/kappa) ds = int rho^2`.
//! Every trigonometric-polynomial integral is evaluated through Parseval in
//! double-double arithmetic; `int (rho'/rho)^2`, `int rho'^2/rho^3` and
//! `int 1/rho` use the adaptive periodic trapezoid rule.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::curvegeom::{self, PlaneCurve};
use crate::error::{Error, Result};
use crate::exactcoeff::CoefficientTable;
use crate::report::{InequalityReport, Tolerance};
use crate::spectral::{integrate_periodic, quad_trapezoid, sample, Dd, PowerSpectrum, SampleGrid, TrigSeries};

pub const CONVEXITY_TOL: f64 = 1e-9;
pub const MIN_CONVEXITY_NODES: usize = 256;
pub const RTOL: f64 = 1e-9;
/// Orders accepted by [`thm32_audit`]; `m!^2` and the `S` table stay exact in
/// `f64` well past this.
pub const MAX_ORDER: usize = 8;

/// A strictly convex body, `min rho > 1e-9 max rho` on a dense grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TrigSeries", into = "TrigSeries")]
pub struct SupportFunction {
    h: TrigSeries,
    rho: TrigSeries,
    min_rho: f64,
    max_rho: f64,
}

impl TryFrom<TrigSeries> for SupportFunction {
    type Error = Error;
    fn try_from(h: TrigSeries) -> Result<Self> {
        SupportFunction::new(h)
    }
}

impl From<SupportFunction> for TrigSeries {
    fn from(s: SupportFunction) -> Self {
        s.h
    }
}

impl SupportFunction {
    pub fn new(h: TrigSeries) -> Result<Self> {
        let rho = &h + &h.derivative(2);
        let n = MIN_CONVEXITY_NODES.max(16 * h.degree());
        let grid = sample(&rho, n)?;
        let (mut min_rho, mut max_rho, mut theta) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
        for (j, &v) in grid.values().iter().enumerate() {
            if v < min_rho {
                min_rho = v;
                theta = grid.node(j);
            }
            max_rho = max_rho.max(v);
        }
        let convex = max_rho > 0.0 && min_rho > CONVEXITY_TOL * max_rho;
        if !convex {
            return Err(Error::NotConvex { min_rho, max_rho, theta });
        }
        Ok(Self { h, rho, min_rho, max_rho })
    }

    /// Disc of radius `r` centred at `center`.
    pub fn disc(r: f64, center: [f64; 2]) -> Result<Self> {
        Self::new(TrigSeries::new(r, vec![center[0]], vec![center[1]])?)
    }

    pub fn h(&self) -> &TrigSeries {
        &self.h
    }

    /// Radius of curvature `rho = h + h''`.
    pub fn rho(&self) -> &TrigSeries {
        &self.rho
    }

    pub fn min_rho(&self) -> f64 {
        self.min_rho
    }

    pub fn max_rho(&self) -> f64 {
        self.max_rho
    }

    pub fn degree(&self) -> usize {
        self.h.degree()
    }

    fn spectrum(&self) -> PowerSpectrum {
        self.h.power_spectrum()
    }

    /// `sum_n w(n) e_n`, `e_n = alpha_n^2 + beta_n^2`, scaled by `pi`.
    fn pi_weighted(&self, weight: impl Fn(f64) -> f64) -> f64 {
        self.spectrum().weighted(|n| Dd::from(weight(n as f64))).to_f64() * PI
    }

    pub fn length(&self) -> f64 {
        2.0 * PI * self.h.mean()
    }

    pub fn area(&self) -> f64 {
        0.5 * (self.h.l2_integral() - self.h.derivative(1).l2_integral())
    }

    /// `L^2 - 4 pi A = 2 pi^2 sum (n^2 - 1) e_n`, free of cancellation.
    pub fn deficit(&self) -> f64 {
        2.0 * PI * self.pi_weighted(|n| n * n - 1.0)
    }

    /// `int (1/kappa) ds = int rho^2 dtheta`.
    pub fn inverse_curvature_integral(&self) -> f64 {
        self.rho.l2_integral()
    }

    /// `int (1/kappa) ds - 2A = pi sum n^2 (n^2 - 1) e_n`.
    pub fn inverse_curvature_excess(&self) -> f64 {
        self.pi_weighted(|n| n * n * (n * n - 1.0))
    }

    /// `int (1/kappa) ds - L^2/(2 pi) = pi sum (n^2 - 1)^2 e_n`.
    pub fn lin_tsai_excess(&self) -> f64 {
        self.pi_weighted(|n| (n * n - 1.0).powi(2))
    }

    /// `D_l = int (rho^{(l)})^2 dtheta`, which equals
    /// `int (1/rho) [(rho d/ds)^l rho]^2 ds`.
    pub fn derivative_term(&self, l: usize) -> f64 {
        let l = l as i32;
        self.pi_weighted(|n| n.powi(2 * l) * (n * n - 1.0).powi(2)) + if l == 0 { 2.0 * PI * self.h.mean().powi(2) } else { 0.0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SupportGeometry {
    pub length: f64,
    pub area: f64,
    pub deficit: f64,
    pub rho: TrigSeries,
    pub min_rho: f64,
    pub max_rho: f64,
}

pub fn support_geometry(h: &SupportFunction) -> SupportGeometry {
    SupportGeometry {
        length: h.length(),
        area: h.area(),
        deficit: h.deficit(),
        rho: h.rho.clone(),
        min_rho: h.min_rho,
        max_rho: h.max_rho,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// `D >= bound` (odd m)
    Lower,
    /// `D <= bound` (even m)
    Upper,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexAudit {
    pub m: usize,
    pub length: f64,
    pub area: f64,
    pub deficit: f64,
    pub inv_curv: f64,
    /// `D_l` for `l = 1..=m-2`.
    pub deriv_terms: Vec<f64>,
    pub bound: f64,
    pub kind: BoundKind,
    pub report: InequalityReport,
}

impl ConvexAudit {
    pub fn passed(&self) -> bool {
        self.report.holds()
    }

    /// Slack in the direction of the inequality: `D - bound` for odd `m`,
    /// `bound - D` for even `m`.
    pub fn slack(&self) -> f64 {
        self.report.slack
    }
}

fn factorial(m: usize) -> f64 {
    (1..=m).map(|k| k as f64).product()
}

/// Order-`m` lower (odd) or upper (even) bound on the isoperimetric deficit.
pub fn thm32_audit(h: &SupportFunction, m: usize) -> Result<ConvexAudit> {
    if m == 0 {
        return Err(Error::ZeroOrder(m));
    }
    if m > MAX_ORDER {
        return Err(Error::OrderTooLarge { m, cap: MAX_ORDER });
    }
    let s = CoefficientTable::new(m)?.s_f64();
    let deficit = h.deficit();
    let excess = h.inverse_curvature_excess();
    let deriv_terms: Vec<f64> = (1..m.saturating_sub(1)).map(|l| h.derivative_term(l)).collect();
    let main = (m as f64 - 1.0) * PI / m as f64 * excess;
    let weight = 2.0 * PI / factorial(m).powi(2);
    let correction: f64 = deriv_terms
        .iter()
        .enumerate()
        .map(|(i, d)| s[i + 2] * d)
        .sum::<f64>()
        * weight;
    let magnitude = deficit.abs()
        + main.abs()
        + weight * deriv_terms.iter().enumerate().map(|(i, d)| s[i + 2].abs() * d).sum::<f64>();
    let tol = Tolerance::scaled(RTOL, magnitude.max(h.length().powi(2)));
    let (kind, bound, report) = if m % 2 == 1 {
        let bound = main - correction;
        (BoundKind::Lower, bound, InequalityReport::new(format!("order-{m} lower bound <= L^2 - 4pi A"), "higher-order isoperimetric lower bound (odd order)", bound, deficit, tol))
    } else {
        let bound = main + correction;
        (BoundKind::Upper, bound, InequalityReport::new(format!("L^2 - 4pi A <= order-{m} upper bound"), "higher-order isoperimetric upper bound (even order)", deficit, bound, tol))
    };
    Ok(ConvexAudit {
        m,
        length: h.length(),
        area: h.area(),
        deficit,
        inv_curv: h.inverse_curvature_integral(),
        deriv_terms,
        bound,
        kind,
        report,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinTsaiReport {
    pub deficit: f64,
    /// `int (1/kappa) ds - L^2/(2pi)`
    pub excess: f64,
    /// `excess - (3/2pi) D`
    pub g2: f64,
    /// `(1/12)[int rho'^2 dtheta - (6/pi) D]`
    pub upper: f64,
    /// `upper - g2`
    pub g3: f64,
    /// `(2pi/3) excess - D`
    pub lin_tsai_slack: f64,
    pub reports: [InequalityReport; 3],
}

impl LinTsaiReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(InequalityReport::holds)
    }
}

/// The Lin-Tsai inequality and its stability chain `0 <= g2 <= upper`.
pub fn lin_tsai_audit(h: &SupportFunction) -> LinTsaiReport {
    let deficit = h.deficit();
    let excess = h.lin_tsai_excess();
    let g2 = excess - 3.0 / (2.0 * PI) * deficit;
    let d1 = h.derivative_term(1);
    let upper = (d1 - 6.0 / PI * deficit) / 12.0;
    let lt_rhs = 2.0 * PI / 3.0 * excess;
    let scale = h.length().powi(2) + excess + d1;
    let tol = Tolerance::scaled(RTOL, scale);
    let reports = [
        InequalityReport::new("L^2 - 4pi A <= (2pi/3)(int 1/k ds - L^2/2pi)", "Lin-Tsai inequality", deficit, lt_rhs, tol),
        InequalityReport::new("0 <= (int 1/k ds - L^2/2pi) - (3/2pi)(L^2 - 4pi A)", "Lin-Tsai stability, lower", 0.0, g2, tol),
        InequalityReport::new("g2 <= (1/12)[int k^-5 (dk/ds)^2 ds - (6/pi)(L^2 - 4pi A)]", "Lin-Tsai stability, upper", g2, upper, tol),
    ];
    LinTsaiReport { deficit, excess, g2, upper, g3: upper - g2, lin_tsai_slack: lt_rhs - deficit, reports }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReverseIsoperimetricReport {
    pub length: f64,
    pub area: f64,
    pub deficit: f64,
    /// `int k^-5 (dk/ds)^2 ds = int rho'^2 dtheta`
    pub int_rho_prime_sq: f64,
    /// `int k^-3 (dk/ds)^2 ds = int (rho'/rho)^2 dtheta`
    pub int_log_derivative_sq: f64,
    /// `int k^-2 (dk/ds)^2 ds = int rho'^2 / rho^3 dtheta`
    pub int_weighted_derivative_sq: f64,
    /// `int k^2 ds = int dtheta / rho`
    pub int_curvature_sq: f64,
    pub quadrature_nodes: usize,
    /// Relative change of the quadrature integrals under the last doubling.
    pub quadrature_change: f64,
    pub quadrature_converged: bool,
    pub reports: Vec<InequalityReport>,
}

impl ReverseIsoperimetricReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(InequalityReport::holds)
    }
}

/// Three reverse isoperimetric inequalities plus the two Bernstein-Mettler
/// bounds and Gage's inequality they rely on.
pub fn reverse_isoperimetric_audit(h: &SupportFunction) -> ReverseIsoperimetricReport {
    let rho = h.rho();
    let q = integrate_periodic(
        |t| {
            let [r, dr]: [f64; 2] = rho.eval_with_derivatives(t);
            [(dr / r).powi(2), dr * dr / (r * r * r), 1.0 / r]
        },
        [0.0, 0.0, 0.0],
    );
    let [log_sq, weighted_sq, inv_rho] = q.values;
    let length = h.length();
    let area = h.area();
    let deficit = h.deficit();
    let rho_prime_sq = h.derivative_term(1);
    let inv_curv = h.inverse_curvature_integral();
    let l2 = length * length;
    let tol = |scale: f64| Tolerance::scaled(RTOL, scale);

    let rev01 = PI / 6.0 * rho_prime_sq;
    let rev02 = l2 / (24.0 * PI) * log_sq;
    let rev03 = area * length / (4.0 * PI) * weighted_sq;
    let bm1 = -2.0 * PI + 4.0 * PI * PI / l2 * inv_curv;
    let bm2 = -4.0 * PI * PI / length + inv_rho;
    let gage = PI * length / area;
    let reports = vec![
        InequalityReport::new("L^2 - 4pi A <= (pi/6) int k^-5 (dk/ds)^2 ds", "reverse isoperimetric inequality (a)", deficit, rev01, tol(l2)),
        InequalityReport::new("L^2 - 4pi A <= (L^2/24pi) int k^-3 (dk/ds)^2 ds", "reverse isoperimetric inequality (b)", deficit, rev02, tol(l2)),
        InequalityReport::new("L^2 - 4pi A <= (AL/4pi) int k^-2 (dk/ds)^2 ds", "reverse isoperimetric inequality (c)", deficit, rev03, tol(l2)),
        InequalityReport::new("-2pi + (2pi/L)^2 int 1/k ds <= (1/4) int k^-3 (dk/ds)^2 ds", "Bernstein-Mettler inequality (first form)", bm1, 0.25 * log_sq, tol(2.0 * PI + bm1.abs())),
        InequalityReport::new("-(2pi)^2/L + int k^2 ds <= (1/4) int k^-2 (dk/ds)^2 ds", "Bernstein-Mettler inequality (second form)", bm2, 0.25 * weighted_sq, tol(inv_rho)),
        InequalityReport::new("pi L / A <= int k^2 ds", "Gage inequality", gage, inv_rho, tol(gage)),
    ];
    ReverseIsoperimetricReport {
        length,
        area,
        deficit,
        int_rho_prime_sq: rho_prime_sq,
        int_log_derivative_sq: log_sq,
        int_weighted_derivative_sq: weighted_sq,
        int_curvature_sq: inv_rho,
        quadrature_nodes: q.nodes,
        quadrature_change: q.change,
        quadrature_converged: q.converged,
        reports,
    }
}

/// Every convex-body section for the given orders.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexReport {
    pub geometry: SupportGeometry,
    pub higher_order: Vec<ConvexAudit>,
    pub lin_tsai: LinTsaiReport,
    pub reverse: ReverseIsoperimetricReport,
}

impl ConvexReport {
    pub fn passed(&self) -> bool {
        self.higher_order.iter().all(ConvexAudit::passed) && self.lin_tsai.passed() && self.reverse.passed()
    }
}

pub fn convex_report(h: &SupportFunction, orders: &[usize]) -> Result<ConvexReport> {
    let higher_order = orders.iter().map(|&m| thm32_audit(h, m)).collect::<Result<Vec<_>>>()?;
    Ok(ConvexReport {
        geometry: support_geometry(h),
        higher_order,
        lin_tsai: lin_tsai_audit(h),
        reverse: reverse_isoperimetric_audit(h),
    })
}

/// `X(theta) = h (cos, sin) + h' (-sin, cos)`, with exact coefficients.
pub fn reconstruct_curve(h: &SupportFunction) -> Result<PlaneCurve> {
    let dh = h.h.derivative(1);
    let (c, s) = (TrigSeries::cos_n(1), TrigSeries::sin_n(1));
    let x = &h.h.product(&c) - &dh.product(&s);
    let y = &h.h.product(&s) + &dh.product(&c);
    PlaneCurve::new(x, y)
}

/// `h = 1 + sum_{n=2}^{degree} (alpha_n cos n theta + beta_n sin n theta)`
/// rescaled so that `sum (n^2 - 1) |(alpha_n, beta_n)| = 1 - margin`, which
/// forces `rho >= margin`.
pub fn random_convex(degree: usize, seed: u64, margin: f64) -> Result<SupportFunction> {
    if !(margin > 0.0 && margin < 1.0) {
        return Err(Error::InvalidArgument(format!("margin must lie in (0, 1), got {margin}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cos = vec![0.0; degree.max(1)];
    let mut sin = vec![0.0; degree.max(1)];
    let mut weight = 0.0;
    for n in 2..=degree {
        let (a, b): (f64, f64) = (rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        cos[n - 1] = a;
        sin[n - 1] = b;
        weight += ((n * n - 1) as f64) * a.hypot(b);
    }
    let factor = if weight > 0.0 { (1.0 - margin) / weight } else { 0.0 };
    let cos = cos.into_iter().map(|v| v * factor).collect();
    let sin = sin.into_iter().map(|v| v * factor).collect();
    SupportFunction::new(TrigSeries::new(1.0, cos, sin)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoundTrip {
    pub length_support: f64,
    pub length_curve: f64,
    pub area_support: f64,
    pub area_curve: f64,
    /// Largest `|kappa_curve(theta) rho(theta) - 1|` over the sample nodes.
    pub curvature_error: f64,
    /// Largest relative disagreement of length and area.
    pub rel_error: f64,
    /// Curve-side `int kappa <X, N> ds` against `L`.
    pub minkowski_error: f64,
}

/// Measures the reconstructed curve with [`curvegeom`] and compares it with
/// the support-function formulas.
pub fn round_trip(h: &SupportFunction, nodes: usize) -> Result<RoundTrip> {
    let curve = reconstruct_curve(h)?;
    let audit = curvegeom::measure(&curve);
    let (ls, as_) = (h.length(), h.area());
    let curvature_error = (0..nodes)
        .map(|j| {
            let t = 2.0 * PI * j as f64 / nodes as f64;
            (curve.curvature(t) * h.rho.eval(t) - 1.0).abs()
        })
        .fold(0.0, f64::max);
    let rel_error = ((audit.length - ls).abs() / ls).max((audit.area - as_).abs() / as_);
    Ok(RoundTrip {
        length_support: ls,
        length_curve: audit.length,
        area_support: as_,
        area_curve: audit.area,
        curvature_error,
        rel_error,
        minkowski_error: (audit.minkowski - ls).abs() / ls,
    })
}

/// `int (1/rho) [(rho d/ds)^l rho]^2 ds` for `l = 0..=l_max`, computed on the
/// reconstructed curve from its own speed and curvature on an `n`-node grid,
/// paired with the Parseval value of `int (rho^{(l)})^2 dtheta`.
pub fn change_of_variable_check(h: &SupportFunction, l_max: usize, n: usize) -> Result<Vec<(f64, f64)>> {
    let curve = reconstruct_curve(h)?;
    let speed = SampleGrid::from_fn(n, |t| curve.speed(t))?;
    let rho = SampleGrid::from_fn(n, |t| 1.0 / curve.curvature(t))?;
    let factor = rho.zip_with(&speed, |r, v| r / v)?;
    let mut g = rho.clone();
    let mut out = Vec::with_capacity(l_max + 1);
    for l in 0..=l_max {
        let integrand = g.zip_with(&rho, |gv, r| gv * gv / r)?.zip_with(&speed, |a, v| a * v)?;
        out.push((quad_trapezoid(&integrand), h.derivative_term(l)));
        g = g.spectral_derivative(1).zip_with(&factor, |d, f| d * f)?;
    }
    Ok(out)
}
