//! Finite real Fourier series on `[0, 2pi)`.
//!
//! [`TrigSeries`] carries the coefficients, [`SampleGrid`] a uniform sampling
//! of a periodic function. Integrals of trigonometric polynomials are taken
//! exactly through Parseval; everything else goes through the periodic
//! trapezoid rule in [`quadrature`], which converges spectrally for smooth
//! integrands.

pub mod dd;
mod grid;
pub mod quadrature;
mod series;

pub use dd::Dd;
pub use grid::{analyze, quad_trapezoid, sample, SampleGrid};
pub use quadrature::{integrate_periodic, trapezoid_fixed, PeriodicQuadrature};
pub use series::{derivative, l2_integral, project_mean_zero, random_series, PowerSpectrum, TrigSeries};
