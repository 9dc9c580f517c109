//! The three order-m functionals, the certificate and the sandwich bounds
//! for a few series.

use wirtinger_lab::wirtinger::{self, Form};
use wirtinger_lab::TrigSeries;

fn show(label: &str, f: &TrigSeries, m: usize) -> wirtinger_lab::Result<()> {
    let a = wirtinger::audit(f, m, &Form::ALL, true)?;
    println!("{label}, m = {m}");
    println!("  a = {:.12}  b = {:.12}  c = {:.12}", a.form_a, a.form_b, a.form_c);
    println!("  certificate = {:.12}  equality case: {}", a.certificate, a.equality_flag);
    for s in &a.sandwich {
        println!("  sandwich ({}): {:.12} <= {:.12}", s.form.label(), s.lower, s.upper);
    }
    println!("  all reports hold: {}", a.passed());
    Ok(())
}

fn main() -> wirtinger_lab::Result<()> {
    let band_limited = &TrigSeries::cos_n(1) + &TrigSeries::sin_n(2);
    show("cos t + sin 2t", &band_limited, 2)?;
    show("sin 4t", &TrigSeries::sin_n(4), 3)?;
    show("cos 3t", &TrigSeries::cos_n(3), 2)?;
    show("cos 5t", &TrigSeries::cos_n(5), 2)?;

    let h = &TrigSeries::constant(1.5) + &TrigSeries::harmonic(3, 0.2, -0.4);
    println!("mean form of 1.5 + 0.2cos3t - 0.4sin3t at m = 2: {:.12}", wirtinger::mean_form(&h, 2)?);
    println!("form c of the projection:                      {:.12}", wirtinger::form_c(&h.project_mean_zero(), 2)?);
    Ok(())
}
