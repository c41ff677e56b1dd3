use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::time::Duration;

use num_rational::BigRational;

use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    /// Cross-multiplied difference of two rational functions; holds iff zero.
    Identity,
    /// Expansion under a region parameterization; holds iff every
    /// coefficient is positive.
    Positivity,
}

/// Outcome of one identity or positivity step.
///
/// For a positivity step `min_coefficient` and `attaining` describe the
/// smallest coefficient of the expansion. For an identity step they describe
/// the smallest coefficient of the cross difference, which is absent when
/// the identity holds.
#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub step: String,
    pub region: String,
    pub bindings: String,
    pub kind: ReportKind,
    pub input_count: usize,
    pub output_count: usize,
    pub min_coefficient: Option<BigRational>,
    pub attaining: Option<String>,
    pub all_positive: bool,
    pub all_integer: bool,
    pub require_integer: bool,
    /// Positivity: no admissible boundary of nonnegative parameters makes the
    /// expansion vanish. Identity: the side condition of the step holds.
    pub strict: bool,
    /// Product of the binding denominators cleared from the expansion.
    pub cleared_denominator: String,
    pub cleared_positive: bool,
    pub elapsed: Duration,
    pub output: Poly,
}

impl CertificateReport {
    pub(crate) fn identity(
        step: &str,
        region: &str,
        input_count: usize,
        diff: Poly,
        side_condition: bool,
        elapsed: Duration,
    ) -> Self {
        let min = diff.min_coefficient().ok();
        CertificateReport {
            step: step.to_string(),
            region: region.to_string(),
            bindings: String::new(),
            kind: ReportKind::Identity,
            input_count,
            output_count: diff.monomial_count(),
            attaining: min.as_ref().map(|(_, m)| m.to_text(diff.vars())),
            min_coefficient: min.map(|(c, _)| c),
            all_positive: false,
            all_integer: diff.all_coefficients_integer(),
            require_integer: false,
            strict: side_condition,
            cleared_denominator: "1".to_string(),
            cleared_positive: true,
            elapsed,
            output: diff,
        }
    }

    pub fn passed(&self) -> bool {
        match self.kind {
            ReportKind::Identity => self.output.is_zero() && self.strict,
            ReportKind::Positivity => {
                self.all_positive
                    && self.strict
                    && self.cleared_positive
                    && (self.all_integer || !self.require_integer)
            }
        }
    }

    /// Monomial exhibiting the failure: a nonpositive coefficient of a
    /// positivity expansion or a surviving term of an identity difference.
    pub fn witness(&self) -> Option<&str> {
        match self.kind {
            ReportKind::Identity => self.attaining.as_deref(),
            ReportKind::Positivity if !self.all_positive => self.attaining.as_deref(),
            ReportKind::Positivity => None,
        }
    }
}

/// Monomial counts of the three headline expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    /// Reduced numerator of `g - g∘T∘T`.
    pub delta2_numerator: usize,
    /// That numerator after `x -> x0 + u, y -> y0 + u`.
    pub eq16: usize,
    /// First-quadrant expansion above the diagonal with `u -> 1 + t`.
    pub eq17: usize,
}

#[derive(Clone, Debug)]
pub struct CertificateSummary {
    pub reports: Vec<CertificateReport>,
    pub counts: Counts,
}

impl CertificateSummary {
    pub fn new(reports: Vec<CertificateReport>, counts: Counts) -> Self {
        CertificateSummary { reports, counts }
    }

    pub fn overall_pass(&self) -> bool {
        !self.reports.is_empty() && self.reports.iter().all(CertificateReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertificateReport> {
        self.reports.iter().filter(|r| !r.passed())
    }
}
