//! Sampling, discrete analysis, spectral differentiation and quadrature.

use std::f64::consts::PI;

use wirtinger_lab::spectral::{analyze, integrate_periodic, quad_trapezoid, sample};
use wirtinger_lab::TrigSeries;

fn main() -> wirtinger_lab::Result<()> {
    let f = TrigSeries::new(0.5, vec![1.0, 0.0, -0.25], vec![0.0, 0.75])?;
    let grid = sample(&f, 32)?;
    let back = analyze(&grid, 15)?;
    println!("round trip max coefficient error: {:.3e}", (&back - &f).max_abs_coeff());

    let d2 = grid.spectral_derivative(2);
    let exact = sample(&f.derivative(2), 32)?;
    let err = d2.values().iter().zip(exact.values()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    println!("second spectral derivative max error: {err:.3e}");

    println!("int f^2 by Parseval:  {:.15}", f.l2_integral());
    println!("int f^2 by trapezoid: {:.15}", quad_trapezoid(&grid.map(|v| v * v)));

    // exp(cos t) integrates to 2 pi I_0(1)
    let q = integrate_periodic(|t| [t.cos().exp()], [0.0]);
    println!("int exp(cos t) = {:.15} on {} nodes (2 pi I0(1) = {:.15})", q.values[0], q.nodes, 2.0 * PI * 1.266_065_877_752_008_4);
    Ok(())
}
