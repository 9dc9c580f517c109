//! Exact coefficient tables for the first few orders.
//!
//! cargo run --example coefficients -- 6

use wirtinger_lab::exactcoeff::{check_recurrences, s0_closed_form, CoefficientTable};

fn main() -> wirtinger_lab::Result<()> {
    let top: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let mut prev: Option<CoefficientTable> = None;
    for m in 1..=top {
        let t = CoefficientTable::new(m)?;
        let r = t.to_record();
        println!("m = {m}");
        println!("  c      = [{}]", r.c.join(", "));
        println!("  lambda = [{}]", r.lambda.join(", "));
        println!("  S      = [{}]", r.s.join(", "));
        println!("  S_0 closed form = {}, invariants hold: {}", s0_closed_form(m), t.check_invariants());
        if let Some(p) = &prev {
            println!("  recurrences from m = {}: {}", m - 1, check_recurrences(p, &t)?);
        }
        prev = Some(t);
    }
    Ok(())
}
