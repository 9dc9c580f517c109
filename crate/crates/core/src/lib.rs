//! Higher-order Wirtinger inequalities and their geometric consequences for
//! closed plane curves.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactcoeff`] builds the integer coefficient families of the order-`m`
//!   functionals in exact arithmetic and checks their identities.
//! - [`spectral`] is a small finite-Fourier-series toolkit: spectral
//!   derivatives, Parseval integrals, discrete analysis of uniform samples and
//!   trapezoid quadrature.
//! - [`wirtinger`] evaluates the three equivalent order-`m` functionals, their
//!   sandwich refinements and the mean-value version.
//! - [`curvegeom`] measures closed parametric curves and audits the sharpened
//!   isoperimetric and reverse Sachs chains.
//! - [`convexgeom`] works with convex bodies through their support function.
//! - [`report`] holds the pass/fail record shared by every audit, and [`cli`]
//!   is the command-line front end.

#![forbid(unsafe_code)]

pub mod cli;
pub mod convexgeom;
pub mod curvegeom;
pub mod error;
pub mod exactcoeff;
pub mod report;
pub mod spectral;
pub mod wirtinger;

pub use convexgeom::{ConvexAudit, SupportFunction};
pub use curvegeom::{CurveAudit, PlaneCurve};
pub use error::{Error, Result};
pub use exactcoeff::{CoefficientTable, IntPolynomial};
pub use report::{InequalityReport, Tolerance, Verdict};
pub use spectral::{SampleGrid, TrigSeries};
pub use wirtinger::{Form, WirtingerAudit};
