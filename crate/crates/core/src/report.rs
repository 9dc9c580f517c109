//! Pass/fail records for individual inequality instances.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Equality,
}

impl Verdict {
    /// `Equality` counts as passing.
    pub fn holds(self) -> bool {
        !matches!(self, Verdict::Fail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Equality => "equality",
        })
    }
}

/// Threshold `atol + rtol * max(|lhs|, |rhs|)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerance {
    pub rtol: f64,
    pub atol: f64,
}

impl Tolerance {
    pub const fn new(rtol: f64, atol: f64) -> Self {
        Self { rtol, atol }
    }

    /// Relative tolerance with the absolute part scaled by the natural
    /// magnitude of the quantities being compared.
    pub fn scaled(rtol: f64, scale: f64) -> Self {
        Self { rtol, atol: rtol * scale.abs() }
    }

    pub fn threshold(&self, lhs: f64, rhs: f64) -> f64 {
        self.atol + self.rtol * lhs.abs().max(rhs.abs())
    }
}

/// One instance of `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`
    pub slack: f64,
    pub verdict: Verdict,
    pub rtol: f64,
    pub atol: f64,
    /// Which named inequality this row instantiates.
    pub provenance: String,
}

impl InequalityReport {
    pub fn new(name: impl Into<String>, provenance: impl Into<String>, lhs: f64, rhs: f64, tol: Tolerance) -> Self {
        let slack = rhs - lhs;
        let threshold = tol.threshold(lhs, rhs);
        let verdict = if !slack.is_finite() {
            Verdict::Fail
        } else if slack.abs() <= threshold {
            Verdict::Equality
        } else if slack >= -threshold {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self {
            name: name.into(),
            lhs,
            rhs,
            slack,
            verdict,
            rtol: tol.rtol,
            atol: tol.atol,
            provenance: provenance.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }

    pub fn threshold(&self) -> f64 {
        Tolerance::new(self.rtol, self.atol).threshold(self.lhs, self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let tol = Tolerance::new(0.0, 1e-9);
        assert_eq!(InequalityReport::new("a", "", 0.0, 1.0, tol).verdict, Verdict::Pass);
        assert_eq!(InequalityReport::new("a", "", 1.0, 1.0 + 1e-12, tol).verdict, Verdict::Equality);
        assert_eq!(InequalityReport::new("a", "", 1.0 + 1e-12, 1.0, tol).verdict, Verdict::Equality);
        assert_eq!(InequalityReport::new("a", "", 1.0, 0.5, tol).verdict, Verdict::Fail);
        assert_eq!(InequalityReport::new("a", "", f64::NAN, 0.5, tol).verdict, Verdict::Fail);
    }

    #[test]
    fn relative_part_scales_with_operands() {
        let tol = Tolerance::new(1e-9, 0.0);
        let r = InequalityReport::new("big", "", 1e12, 1e12 - 100.0, tol);
        assert_eq!(r.verdict, Verdict::Equality);
        assert!(r.holds());
    }

    #[test]
    fn serialises_lowercase_verdict() {
        let r = InequalityReport::new("x", "anchor", 0.0, 1.0, Tolerance::scaled(1e-9, 2.0));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["atol"], 2e-9);
    }
}
