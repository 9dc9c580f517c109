//! Higher-order isoperimetric bounds, the Lin-Tsai chain and the reverse
//! isoperimetric inequalities for the oval h = 1 + 0.2cos 2t and a random
//! convex body.

use wirtinger_lab::convexgeom::{self, SupportFunction};
use wirtinger_lab::TrigSeries;

fn report(label: &str, h: &SupportFunction) -> wirtinger_lab::Result<()> {
    let r = convexgeom::convex_report(h, &[1, 2, 3, 4, 5])?;
    println!("{label}: L = {:.10}, A = {:.10}, D = {:.10}, min rho = {:.4}", r.geometry.length, r.geometry.area, r.geometry.deficit, r.geometry.min_rho);
    for a in &r.higher_order {
        println!("  m = {}: D = {:.10} vs bound {:.10} ({:?}) [{}]", a.m, a.deficit, a.bound, a.kind, a.report.verdict);
    }
    println!("  Lin-Tsai: g2 = {:.3e}, upper = {:.3e}", r.lin_tsai.g2, r.lin_tsai.upper);
    for rep in r.lin_tsai.reports.iter().chain(&r.reverse.reports) {
        println!("  [{}] {} (slack {:.3e})", rep.verdict, rep.provenance, rep.slack);
    }
    Ok(())
}

fn main() -> wirtinger_lab::Result<()> {
    report("oval", &SupportFunction::new(TrigSeries::new(1.0, vec![0.0, 0.2], vec![])?)?)?;
    report("random body, seed 3", &convexgeom::random_convex(6, 3, 0.3)?)?;
    if let Err(e) = SupportFunction::new(TrigSeries::new(1.0, vec![0.0, 0.4], vec![])?) {
        println!("h = 1 + 0.4cos 2t: {e}");
    }
    Ok(())
}
