//! Parallel audit of a random convex corpus, summarised per order.

use wirtinger_lab::cli::sweep_rows;

fn main() -> wirtinger_lab::Result<()> {
    for m in 1..=5 {
        let rows = sweep_rows(6, 200, 2024, m, 0.3)?;
        let worst = rows.iter().map(|r| r.order_slack).fold(f64::INFINITY, f64::min);
        let passed = rows.iter().filter(|r| r.passed).count();
        println!("m = {m}: {passed}/{} pass, smallest order slack {worst:.3e}", rows.len());
    }
    Ok(())
}
