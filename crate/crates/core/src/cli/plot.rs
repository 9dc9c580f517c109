//! CSV traces for external plotting tools.

use std::f64::consts::PI;
use std::io::Write;

use super::{fmt_num, CliError};
use crate::convexgeom::{self, SupportFunction};
use crate::curvegeom::PlaneCurve;

fn check_points(n: usize) -> Result<(), CliError> {
    if n < 3 {
        return Err(CliError::Usage(format!("--emit-points needs at least 3 samples (got {n})")));
    }
    Ok(())
}

fn rows(n: usize, close: bool) -> impl Iterator<Item = (usize, f64)> {
    let last = if close { n + 1 } else { n };
    (0..last).map(move |i| (i, 2.0 * PI * (i % n) as f64 / n as f64))
}

/// `i,t,x,y,speed,curvature` on `n` uniform parameter values. With `close`
/// the first sample is repeated as row `n`.
pub fn curve_plot_data(curve: &PlaneCurve, n: usize, close: bool, out: &mut dyn Write) -> Result<(), CliError> {
    check_points(n)?;
    writeln!(out, "i,t,x,y,speed,curvature")?;
    for (i, t) in rows(n, close) {
        let [x, y] = curve.point(t);
        let cols = [t, x, y, curve.speed(t), curve.curvature(t)].map(fmt_num);
        writeln!(out, "{i},{}", cols.join(","))?;
    }
    Ok(())
}

/// `i,theta,x,y,rho,rho_prime_sq` along the reconstructed boundary.
pub fn convex_plot_data(h: &SupportFunction, n: usize, close: bool, out: &mut dyn Write) -> Result<(), CliError> {
    check_points(n)?;
    let curve = convexgeom::reconstruct_curve(h)?;
    writeln!(out, "i,theta,x,y,rho,rho_prime_sq")?;
    for (i, t) in rows(n, close) {
        let [x, y] = curve.point(t);
        let [r, dr]: [f64; 2] = h.rho().eval_with_derivatives(t);
        let cols = [t, x, y, r, dr * dr].map(fmt_num);
        writeln!(out, "{i},{}", cols.join(","))?;
    }
    Ok(())
}
