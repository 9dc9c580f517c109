//! Sharpened isoperimetric and reverse Sachs chains for an ellipse and a
//! random star-shaped curve, plus the integral identities behind them.

use wirtinger_lab::curvegeom::{self, random_perturbed_circle, PlaneCurve};

fn report(label: &str, c: &PlaneCurve) -> wirtinger_lab::Result<()> {
    let a = curvegeom::thm31a_audit(c)?;
    println!("{label}: L = {:.10}, A = {:.10}, D = {:.10}", a.length, a.area, a.deficit);
    println!("  0 <= D - T1 = {:.6e} <= T2 = {:.6e}", a.deficit - a.t1, a.t2);
    println!("  0 <= Sachs gap = {:.6e} <= {:.6e}", a.sachs_gap, a.reverse_sachs_rhs);
    for r in a.reports() {
        println!("  [{}] {}", r.verdict, r.name);
    }
    for chk in curvegeom::identity_checks(c)?.checks {
        println!("  identity rel. error {:.2e}: {}", chk.rel_error, chk.name);
    }
    Ok(())
}

fn main() -> wirtinger_lab::Result<()> {
    report("ellipse (2cos t, sin t)", &PlaneCurve::ellipse(2.0, 1.0)?)?;
    report("perturbed circle, seed 7", &random_perturbed_circle(5, 0.3, 7)?)?;

    let eight = PlaneCurve::new(wirtinger_lab::TrigSeries::sin_n(2), wirtinger_lab::TrigSeries::sin_n(1))?;
    match curvegeom::thm31a_audit(&eight) {
        Ok(_) => println!("figure eight unexpectedly accepted"),
        Err(e) => println!("figure eight: {e}"),
    }
    Ok(())
}
