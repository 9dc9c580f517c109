//! Closed parametric plane curves `X(t) = (x(t), y(t))`, `t in [0, 2pi)`.
//!
//! Arclength integrals are computed as `int g(t) |X'(t)| dt` with the adaptive
//! periodic trapezoid rule; the enclosed area is a trigonometric polynomial
//! integral and is exact through Parseval.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{InequalityReport, Tolerance};
use crate::spectral::{integrate_periodic, sample, PeriodicQuadrature, TrigSeries};

pub type Point = [f64; 2];

/// Grid used by the constructor's regularity gate (at least this many nodes).
pub const REGULARITY_NODES: usize = 256;
pub const REGULARITY_TOL: f64 = 1e-9;
/// Default polygon resolution for [`simplicity_check`] inside the audits.
pub const SIMPLICITY_NODES: usize = 512;
pub const RTOL: f64 = 1e-9;

/// A regular closed curve, oriented counter-clockwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCurve", into = "RawCurve")]
pub struct PlaneCurve {
    x: TrigSeries,
    y: TrigSeries,
    /// True when the constructor reversed the input parameter direction.
    reversed: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCurve {
    x: TrigSeries,
    y: TrigSeries,
}

impl TryFrom<RawCurve> for PlaneCurve {
    type Error = Error;
    fn try_from(raw: RawCurve) -> Result<Self> {
        PlaneCurve::new(raw.x, raw.y)
    }
}

impl From<PlaneCurve> for RawCurve {
    fn from(c: PlaneCurve) -> Self {
        RawCurve { x: c.x, y: c.y }
    }
}

/// Position and first three parameter derivatives at one `t`.
#[derive(Clone, Copy, Debug)]
struct Jet {
    pos: Point,
    d1: Point,
    d2: Point,
    d3: Point,
}

impl Jet {
    fn speed(&self) -> f64 {
        self.d1[0].hypot(self.d1[1])
    }

    fn cross12(&self) -> f64 {
        self.d1[0] * self.d2[1] - self.d1[1] * self.d2[0]
    }

    fn curvature(&self) -> f64 {
        self.cross12() / self.speed().powi(3)
    }

    fn tangent(&self) -> Point {
        let v = self.speed();
        [self.d1[0] / v, self.d1[1] / v]
    }

    /// `N = -J T` with `J` the counter-clockwise quarter turn.
    fn normal(&self) -> Point {
        let t = self.tangent();
        [t[1], -t[0]]
    }

    /// `d kappa / d t`.
    fn curvature_rate(&self) -> f64 {
        let v2 = self.d1[0] * self.d1[0] + self.d1[1] * self.d1[1];
        let v = v2.sqrt();
        let cross13 = self.d1[0] * self.d3[1] - self.d1[1] * self.d3[0];
        let dot12 = self.d1[0] * self.d2[0] + self.d1[1] * self.d2[1];
        // d/dt [cross / v^3] = cross' / v^3 - 3 cross v' / v^4, v' = dot12 / v
        cross13 / (v2 * v) - 3.0 * self.cross12() * dot12 / (v2 * v2 * v)
    }
}

fn dot(a: Point, b: Point) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn norm_sq(a: Point) -> f64 {
    dot(a, a)
}

impl PlaneCurve {
    /// Validates regularity and normalises the orientation so the signed area
    /// is nonnegative.
    pub fn new(x: TrigSeries, y: TrigSeries) -> Result<Self> {
        let mut curve = Self { x, y, reversed: false };
        curve.check_regular()?;
        if curve.signed_area() < 0.0 {
            curve = Self { x: curve.x.reverse(), y: curve.y.reverse(), reversed: true };
        }
        Ok(curve)
    }

    /// Circle of radius `r` centred at `center`.
    pub fn circle(r: f64, center: Point) -> Result<Self> {
        Self::new(
            &TrigSeries::constant(center[0]) + &TrigSeries::cos_n(1).scale(r),
            &TrigSeries::constant(center[1]) + &TrigSeries::sin_n(1).scale(r),
        )
    }

    /// `(a cos t, b sin t)`.
    pub fn ellipse(a: f64, b: f64) -> Result<Self> {
        Self::new(TrigSeries::cos_n(1).scale(a), TrigSeries::sin_n(1).scale(b))
    }

    pub fn x(&self) -> &TrigSeries {
        &self.x
    }

    pub fn y(&self) -> &TrigSeries {
        &self.y
    }

    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    pub fn degree(&self) -> usize {
        self.x.degree().max(self.y.degree())
    }

    fn regularity_nodes(&self) -> usize {
        REGULARITY_NODES.max(16 * self.degree())
    }

    fn check_regular(&self) -> Result<()> {
        let n = self.regularity_nodes();
        let dx = sample(&self.x.derivative(1), n)?;
        let dy = sample(&self.y.derivative(1), n)?;
        let speeds: Vec<f64> = dx.values().iter().zip(dy.values()).map(|(a, b)| a.hypot(*b)).collect();
        let max_speed = speeds.iter().copied().fold(0.0, f64::max);
        let min_speed = speeds.iter().copied().fold(f64::INFINITY, f64::min);
        let regular = max_speed > 0.0 && min_speed > REGULARITY_TOL * max_speed;
        if !regular {
            return Err(Error::NotRegular { min_speed, max_speed });
        }
        Ok(())
    }

    fn jet(&self, t: f64) -> Jet {
        let x: [f64; 4] = self.x.eval_with_derivatives(t);
        let y: [f64; 4] = self.y.eval_with_derivatives(t);
        Jet { pos: [x[0], y[0]], d1: [x[1], y[1]], d2: [x[2], y[2]], d3: [x[3], y[3]] }
    }

    pub fn point(&self, t: f64) -> Point {
        [self.x.eval(t), self.y.eval(t)]
    }

    pub fn speed(&self, t: f64) -> f64 {
        self.jet(t).speed()
    }

    /// Signed curvature `(x'y'' - y'x'') / |X'|^3`.
    pub fn curvature(&self, t: f64) -> f64 {
        self.jet(t).curvature()
    }

    /// Derivative of the curvature with respect to arclength.
    pub fn curvature_arclength_derivative(&self, t: f64) -> f64 {
        let j = self.jet(t);
        j.curvature_rate() / j.speed()
    }

    /// Unit tangent `T` and outward normal `N = -J T`.
    pub fn frames(&self, t: f64) -> (Point, Point) {
        let j = self.jet(t);
        (j.tangent(), j.normal())
    }

    /// `2A = int (x y' - y x') dt`, exact.
    pub fn signed_area(&self) -> f64 {
        0.5 * (self.x.inner_product(&self.y.derivative(1)) - self.y.inner_product(&self.x.derivative(1)))
    }

    pub fn area(&self) -> f64 {
        self.signed_area()
    }

    fn length_and_moments(&self) -> PeriodicQuadrature<3> {
        integrate_periodic(
            |t| {
                let j = self.jet(t);
                let v = j.speed();
                [v, j.pos[0] * v, j.pos[1] * v]
            },
            [0.0, 1.0, 1.0],
        )
    }

    pub fn length(&self) -> f64 {
        self.length_and_moments().values[0]
    }

    /// Centroid of the curve with respect to arclength.
    pub fn centroid(&self) -> Point {
        let q = self.length_and_moments();
        [q.values[1] / q.values[0], q.values[2] / q.values[0]]
    }

    /// Boundary polyline on `n` uniform parameter values.
    pub fn polyline(&self, n: usize) -> Result<Vec<Point>> {
        let xs = sample(&self.x, n)?;
        let ys = sample(&self.y, n)?;
        Ok(xs.values().iter().zip(ys.values()).map(|(&a, &b)| [a, b]).collect())
    }

    /// Rotation by `angle` about the origin followed by a translation.
    pub fn rigid_motion(&self, angle: f64, shift: Point) -> Result<Self> {
        let (s, c) = angle.sin_cos();
        let x = &(&self.x.scale(c) - &self.y.scale(s)) + &TrigSeries::constant(shift[0]);
        let y = &(&self.x.scale(s) + &self.y.scale(c)) + &TrigSeries::constant(shift[1]);
        Self::new(x, y)
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.x.scale(factor), self.y.scale(factor))
    }

    /// Same curve traced from `t = phase`.
    pub fn phase_shifted(&self, phase: f64) -> Result<Self> {
        Self::new(self.x.shift(phase), self.y.shift(phase))
    }
}

/// Random star-shaped curve `r(t) (cos t, sin t)` with `r = 1 + p`, `p` a
/// trigonometric polynomial of the given degree with `sum |p_n| <= amplitude`.
/// Any `amplitude < 1` keeps the curve simple and regular.
pub fn random_perturbed_circle(degree: usize, amplitude: f64, seed: u64) -> Result<PlaneCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cos = Vec::with_capacity(degree);
    let mut sin = Vec::with_capacity(degree);
    for _ in 0..degree {
        cos.push(rng.gen_range(-1.0..=1.0));
        sin.push(rng.gen_range(-1.0..=1.0));
    }
    let mean: f64 = rng.gen_range(-1.0..=1.0);
    let raw = TrigSeries::new(mean, cos, sin)?;
    let total = raw.mean().abs()
        + raw.cos_coeffs().iter().zip(raw.sin_coeffs()).map(|(a, b)| a.hypot(*b)).sum::<f64>();
    let p = if total > 0.0 { raw.scale(amplitude / total) } else { raw };
    let r = &TrigSeries::constant(1.0) + &p;
    PlaneCurve::new(r.product(&TrigSeries::cos_n(1)), r.product(&TrigSeries::sin_n(1)))
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p[0] >= a[0].min(b[0]) && p[0] <= a[0].max(b[0]) && p[1] >= a[1].min(b[1]) && p[1] <= a[1].max(b[1])
}

fn segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

/// Samples the curve as an `n`-gon and tests every pair of nonadjacent edges.
/// `true` means no crossing was found at this resolution.
pub fn simplicity_check(c: &PlaneCurve, n: usize) -> bool {
    if n < 3 {
        return true;
    }
    let pts = match c.polyline(n) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let edge = |i: usize| (pts[i], pts[(i + 1) % n]);
    for i in 0..n {
        let (p1, p2) = edge(i);
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (q1, q2) = edge(j);
            if segments_intersect(p1, p2, q1, q2) {
                return false;
            }
        }
    }
    true
}

/// Every integral of the sharpened isoperimetric and reverse Sachs chains.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveAudit {
    pub length: f64,
    pub area: f64,
    /// `L^2 - 4 pi A`
    pub deficit: f64,
    pub centroid: Point,
    /// `(2 pi^2 / L) int |X - G - (L / 2pi) N|^2 ds`
    pub t1: f64,
    /// `(2 pi^2 / (3L)) int |X - G - (L / 2pi)^2 kappa N|^2 ds`
    pub t2: f64,
    /// `int |X - G|^2 ds`
    pub moment: f64,
    /// `int kappa^2 ds`
    pub bending: f64,
    /// `L^3 / (4 pi^2) - int |X - G|^2 ds`
    pub sachs_gap: f64,
    /// `L^4 / (64 pi^4) (int kappa^2 ds - 4 pi^2 / L)`
    pub reverse_sachs_rhs: f64,
    /// `int kappa <X - G, N> ds`
    pub minkowski: f64,
    /// `int <X - G, N> ds`
    pub divergence: f64,
    pub quadrature_nodes: usize,
    pub quadrature_converged: bool,
    /// `0 <= D - T1` and `D - T1 <= T2`
    pub isoperimetric_chain: [InequalityReport; 2],
    /// `0 <= sachs_gap` and `sachs_gap <= reverse_sachs_rhs`
    pub sachs_chain: [InequalityReport; 2],
}

impl CurveAudit {
    pub fn passed(&self) -> bool {
        self.isoperimetric_chain.iter().chain(&self.sachs_chain).all(InequalityReport::holds)
    }

    pub fn reports(&self) -> Vec<InequalityReport> {
        self.isoperimetric_chain.iter().chain(&self.sachs_chain).cloned().collect()
    }
}

/// Computes all quantities without the simplicity gate.
pub fn measure(c: &PlaneCurve) -> CurveAudit {
    let base = c.length_and_moments();
    let length = base.values[0];
    let g = [base.values[1] / length, base.values[2] / length];
    let r = length / (2.0 * PI);
    let r2 = r * r;
    let l3 = length.powi(3);
    let q = integrate_periodic(
        |t| {
            let j = c.jet(t);
            let v = j.speed();
            let k = j.curvature();
            let n = j.normal();
            let p = [j.pos[0] - g[0], j.pos[1] - g[1]];
            let pn = dot(p, n);
            [
                norm_sq(p) * v,
                k * k * v,
                norm_sq([p[0] - r * n[0], p[1] - r * n[1]]) * v,
                norm_sq([p[0] - r2 * k * n[0], p[1] - r2 * k * n[1]]) * v,
                k * pn * v,
                pn * v,
            ]
        },
        [l3, 1.0 / length, l3, l3, length, length * length],
    );
    let [moment, bending, dist_n, dist_kn, minkowski, divergence] = q.values;
    let area = c.area();
    let deficit = length * length - 4.0 * PI * area;
    let t1 = 2.0 * PI * PI / length * dist_n;
    let t2 = 2.0 * PI * PI / (3.0 * length) * dist_kn;
    let sachs_gap = l3 / (4.0 * PI * PI) - moment;
    let reverse_sachs_rhs = length.powi(4) / (64.0 * PI.powi(4)) * (bending - 4.0 * PI * PI / length);

    let tol2 = Tolerance::scaled(RTOL, length * length);
    let tol3 = Tolerance::scaled(RTOL, l3);
    let isoperimetric_chain = [
        InequalityReport::new("0 <= D - T1", "sharpened isoperimetric inequality", 0.0, deficit - t1, tol2),
        InequalityReport::new("D - T1 <= T2", "reverse isoperimetric inequality via reverse Wirtinger", deficit - t1, t2, tol2),
    ];
    let sachs_chain = [
        InequalityReport::new("0 <= L^3/(4pi^2) - int |X-G|^2 ds", "Sachs inequality", 0.0, sachs_gap, tol3),
        InequalityReport::new("Sachs gap <= L^4/(64pi^4)(int k^2 ds - 4pi^2/L)", "reverse Sachs inequality", sachs_gap, reverse_sachs_rhs, tol3),
    ];
    CurveAudit {
        length,
        area,
        deficit,
        centroid: g,
        t1,
        t2,
        moment,
        bending,
        sachs_gap,
        reverse_sachs_rhs,
        minkowski,
        divergence,
        quadrature_nodes: q.nodes.max(base.nodes),
        quadrature_converged: q.converged && base.converged,
        isoperimetric_chain,
        sachs_chain,
    }
}

fn require_simple(c: &PlaneCurve, nodes: usize) -> Result<()> {
    if simplicity_check(c, nodes) {
        Ok(())
    } else {
        Err(Error::NotSimple { samples: nodes })
    }
}

/// Audit of `0 <= D - T1 <= T2`; the curve must pass [`simplicity_check`].
pub fn thm31a_audit(c: &PlaneCurve) -> Result<CurveAudit> {
    require_simple(c, SIMPLICITY_NODES)?;
    Ok(measure(c))
}

/// Audit of `0 <= sachs_gap <= reverse_sachs_rhs`; same gate.
pub fn thm31b_audit(c: &PlaneCurve) -> Result<CurveAudit> {
    thm31a_audit(c)
}

/// Simplicity-gated audit at a caller-chosen polygon resolution.
pub fn audit_with_grid(c: &PlaneCurve, simplicity_nodes: usize) -> Result<CurveAudit> {
    require_simple(c, simplicity_nodes)?;
    Ok(measure(c))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_error: f64,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(name: &str, lhs: f64, rhs: f64, magnitude: f64, rtol: f64) -> Self {
        let denom = lhs.abs().max(rhs.abs()).max(magnitude);
        let rel_error = if denom == 0.0 { 0.0 } else { (lhs - rhs).abs() / denom };
        Self { name: name.into(), lhs, rhs, rel_error, holds: rel_error <= rtol }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Expansions of the two comparison-field integrals, the Minkowski length
/// formula and the divergence-theorem area formula, with the centroid at the
/// origin. Each side is computed by its own quadrature.
pub fn identity_checks(c: &PlaneCurve) -> Result<IdentityReport> {
    require_simple(c, SIMPLICITY_NODES)?;
    let a = measure(c);
    let l = a.length;
    let r = l / (2.0 * PI);
    let l3_term = l.powi(3) / (4.0 * PI * PI);
    let dist_kn = a.t2 * 3.0 * l / (2.0 * PI * PI);
    let dist_n = a.t1 * l / (2.0 * PI * PI);
    let bending_term = r.powi(4) * a.bending;
    let area_term = 2.0 * a.area * l / PI;
    let checks = vec![
        IdentityCheck::new(
            "int |X - (L/2pi)^2 k N|^2 ds = int |X|^2 ds - 2L^3/(2pi)^2 + (L/2pi)^4 int k^2 ds",
            dist_kn,
            a.moment - 2.0 * l3_term + bending_term,
            a.moment.max(2.0 * l3_term).max(bending_term),
            RTOL,
        ),
        IdentityCheck::new(
            "int |X - (L/2pi) N|^2 ds = int |X|^2 ds - 2AL/pi + L^3/(2pi)^2",
            dist_n,
            a.moment - area_term + l3_term,
            a.moment.max(area_term).max(l3_term),
            RTOL,
        ),
        IdentityCheck::new("L = int k <X, N> ds", a.minkowski, l, l, RTOL),
        IdentityCheck::new("2A = int <X, N> ds", a.divergence, 2.0 * a.area, 2.0 * a.area, RTOL),
    ];
    Ok(IdentityReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Elliptic perimeter by the arithmetic-geometric mean, independent of the
    /// quadrature route.
    fn ellipse_perimeter_agm(a: f64, b: f64) -> f64 {
        let (mut x, mut y) = (a, b);
        let mut sum = 0.0;
        let mut pow = 0.5;
        let mut c2 = a * a - b * b;
        sum += pow * c2;
        for _ in 0..30 {
            let nx = 0.5 * (x + y);
            let ny = (x * y).sqrt();
            c2 = (0.5 * (x - y)).powi(2);
            pow *= 2.0;
            sum += pow * c2;
            x = nx;
            y = ny;
        }
        2.0 * PI * (a * a - sum) / x
    }

    #[test]
    fn unit_circle_measurements() {
        let c = PlaneCurve::circle(1.0, [0.0, 0.0]).unwrap();
        assert_relative_eq!(c.length(), 2.0 * PI, max_relative = 1e-14);
        assert_relative_eq!(c.area(), PI, max_relative = 1e-15);
        let g = c.centroid();
        assert!(g[0].abs() < 1e-15 && g[1].abs() < 1e-15);
        for &t in &[0.0, 1.0, 2.5] {
            assert_relative_eq!(c.curvature(t), 1.0, max_relative = 1e-14);
            let (_, n) = c.frames(t);
            assert_relative_eq!(n[0], t.cos(), epsilon = 1e-14);
            assert_relative_eq!(n[1], t.sin(), epsilon = 1e-14);
        }
    }

    #[test]
    fn shifted_circle_measurements() {
        let c = PlaneCurve::circle(2.0, [3.0, -1.0]).unwrap();
        assert_relative_eq!(c.length(), 4.0 * PI, max_relative = 1e-14);
        assert_relative_eq!(c.area(), 4.0 * PI, max_relative = 1e-14);
        let g = c.centroid();
        assert_relative_eq!(g[0], 3.0, max_relative = 1e-14);
        assert_relative_eq!(g[1], -1.0, max_relative = 1e-14);
        assert_relative_eq!(c.curvature(0.3), 0.5, max_relative = 1e-14);
    }

    #[test]
    fn ellipse_measurements() {
        let c = PlaneCurve::ellipse(2.0, 1.0).unwrap();
        let oracle = ellipse_perimeter_agm(2.0, 1.0);
        assert_relative_eq!(oracle, 9.688_448_220_547_675, max_relative = 1e-14);
        assert_relative_eq!(c.length(), oracle, max_relative = 1e-12);
        assert_relative_eq!(c.area(), 2.0 * PI, max_relative = 1e-15);
        // kappa = ab / (a^2 sin^2 + b^2 cos^2)^{3/2}
        for &t in &[0.0, 0.4, 1.2] {
            let (s, co) = f64::sin_cos(t);
            let exact = 2.0 / (4.0 * s * s + co * co).powf(1.5);
            assert_relative_eq!(c.curvature(t), exact, max_relative = 1e-13);
        }
        assert_relative_eq!(c.curvature(0.0), 2.0, max_relative = 1e-14);
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let c = PlaneCurve::new(TrigSeries::cos_n(1), TrigSeries::sin_n(1).scale(-1.0)).unwrap();
        assert!(c.was_reversed());
        assert_relative_eq!(c.area(), PI, max_relative = 1e-15);
        assert_relative_eq!(c.curvature(0.7), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn irregular_curve_rejected() {
        // cusp: (cos^3 t, sin^3 t) has X' = 0 at t = 0
        let c3 = TrigSeries::new(0.0, vec![0.75, 0.0, 0.25], vec![]).unwrap();
        let s3 = TrigSeries::new(0.0, vec![], vec![0.75, 0.0, -0.25]).unwrap();
        assert!(matches!(PlaneCurve::new(c3, s3), Err(Error::NotRegular { .. })));
        assert!(matches!(PlaneCurve::new(TrigSeries::zero(), TrigSeries::zero()), Err(Error::NotRegular { .. })));
    }

    #[test]
    fn curvature_rate_matches_finite_difference() {
        let c = PlaneCurve::ellipse(2.0, 1.0).unwrap();
        let h = 1e-5;
        for &t in &[0.3, 1.1, 2.0] {
            let fd = (c.curvature(t + h) - c.curvature(t - h)) / (2.0 * h);
            assert_relative_eq!(c.curvature_arclength_derivative(t) * c.speed(t), fd, max_relative = 1e-7);
        }
    }

    #[test]
    fn simplicity_examples() {
        assert!(simplicity_check(&PlaneCurve::circle(1.0, [0.0, 0.0]).unwrap(), 64));
        assert!(simplicity_check(&PlaneCurve::ellipse(2.0, 1.0).unwrap(), 128));
        let eight = PlaneCurve::new(TrigSeries::sin_n(2), TrigSeries::sin_n(1)).unwrap();
        assert!(!simplicity_check(&eight, 256));
        assert_eq!(thm31a_audit(&eight), Err(Error::NotSimple { samples: SIMPLICITY_NODES }));
        // a limacon with an inner loop: r = 0.5 + cos t
        let r = &TrigSeries::constant(0.5) + &TrigSeries::cos_n(1);
        let loop_curve = PlaneCurve::new(r.product(&TrigSeries::cos_n(1)), r.product(&TrigSeries::sin_n(1))).unwrap();
        assert!(!simplicity_check(&loop_curve, 256));
    }

    #[test]
    fn circle_audit_is_extremal() {
        let c = PlaneCurve::circle(1.5, [0.2, 0.1]).unwrap();
        let a = thm31a_audit(&c).unwrap();
        let scale = a.length * a.length;
        for v in [a.deficit, a.t1, a.t2, a.sachs_gap, a.reverse_sachs_rhs] {
            assert!(v.abs() <= 1e-9 * scale, "{v}");
        }
        assert!(a.passed());
        // int |X - G|^2 ds = 2 pi R^3 and int kappa^2 ds = 4 pi^2 / L
        assert_relative_eq!(a.moment, 2.0 * PI * 1.5f64.powi(3), max_relative = 1e-13);
        assert_relative_eq!(a.bending, 4.0 * PI * PI / a.length, max_relative = 1e-13);
    }

    #[test]
    fn ellipse_audit_chain() {
        let c = PlaneCurve::ellipse(2.0, 1.0).unwrap();
        let a = thm31b_audit(&c).unwrap();
        let expected_l = ellipse_perimeter_agm(2.0, 1.0);
        assert_relative_eq!(a.deficit, expected_l * expected_l - 8.0 * PI * PI, max_relative = 1e-10);
        assert!((a.deficit - 14.909).abs() < 1e-3);
        assert!(a.passed(), "{:#?}", a.reports());
        assert!(a.deficit - a.t1 >= 0.0 && a.deficit - a.t1 <= a.t2);
        assert!(a.sachs_gap >= 0.0 && a.sachs_gap <= a.reverse_sachs_rhs);
    }

    #[test]
    fn identities_on_ellipse_and_circle() {
        let c = PlaneCurve::circle(1.0, [0.0, 0.0]).unwrap();
        let rep = identity_checks(&c).unwrap();
        for chk in &rep.checks {
            assert!(chk.rel_error <= 1e-12, "{chk:?}");
        }
        let e = PlaneCurve::ellipse(2.0, 1.0).unwrap();
        assert!(identity_checks(&e).unwrap().passed());
    }

    #[test]
    fn perturbed_circles_are_simple() {
        for seed in 0..10 {
            let c = random_perturbed_circle(5, 0.3, seed).unwrap();
            assert!(simplicity_check(&c, 256));
            assert!(c.area() > 0.0);
        }
    }
}
