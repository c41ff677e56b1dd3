//! Positivity certificates for the descent of `g` under `T` and `T∘T`.
//!
//! A certificate substitutes a parameterization of a region into a
//! polynomial, expands, and checks that every coefficient is positive. The
//! parameters are positive (or nonnegative where declared), so a positive
//! expansion that is not identically zero is positive on the region.

mod report;
mod steps;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::time::Duration;

use num_traits::Signed;

use crate::model::SymbolicModel;
use crate::poly::{Poly, RationalFn};
use crate::Result;

pub use report::{CertificateReport, CertificateSummary, Counts, ReportKind};
pub use steps::{CaseDecomposition, Quadrant, SubstitutionStep};

/// Monotonic time source used only to fill `elapsed` in reports.
pub trait Clock: Sync {
    fn now(&self) -> Duration;
}

/// Reports zero elapsed time; makes reports reproducible byte for byte.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now(&self) -> Duration {
        Duration::ZERO
    }
}

/// Runs certificate steps against a symbolic model.
///
/// `u_shift` is the expression substituted for `u` once the region
/// parameters are in place. The sound choice is `1 + t`, encoding `u > 1`.
#[derive(Clone, Debug)]
pub struct Certifier<'m> {
    model: &'m SymbolicModel,
    u_shift: Poly,
}

impl<'m> Certifier<'m> {
    pub fn new(model: &'m SymbolicModel) -> Self {
        Certifier::with_u_shift(model, Poly::one() + Poly::var("t"))
    }

    /// Same pipeline with `u -> 1 - t`, i.e. `u < 1`. Some step must fail.
    pub fn negative_control(model: &'m SymbolicModel) -> Self {
        Certifier::with_u_shift(model, Poly::one() - Poly::var("t"))
    }

    pub fn with_u_shift(model: &'m SymbolicModel, u_shift: Poly) -> Self {
        Certifier { model, u_shift }
    }

    pub fn model(&self) -> &'m SymbolicModel {
        self.model
    }

    pub fn u_shift(&self) -> &Poly {
        &self.u_shift
    }

    /// `g - g∘T` against its factored closed form.
    pub fn verify_delta1_identity(&self, clock: &dyn Clock) -> CertificateReport {
        let start = clock.now();
        let diff = self
            .model
            .delta1()
            .cross_difference(&SymbolicModel::delta1_closed_form());
        CertificateReport::identity(
            "delta1 closed form",
            "all (x, y, u, A)",
            self.model.delta1().num().monomial_count(),
            diff,
            true,
            clock.now().saturating_sub(start),
        )
    }

    /// `g - g∘T∘T` over the six-factor denominator, and that denominator in
    /// lowest terms.
    pub fn verify_delta2_denominator(&self, clock: &dyn Clock) -> Result<CertificateReport> {
        let start = clock.now();
        let diff = self
            .model
            .delta2()
            .cross_difference(self.model.delta2_composed());
        let reduced = self.model.delta2_denominator_is_reduced()?;
        Ok(CertificateReport::identity(
            "delta2 reduced form",
            "all (x, y, u, A)",
            self.model.delta2_composed().num().monomial_count(),
            diff,
            reduced,
            clock.now().saturating_sub(start),
        ))
    }

    /// Generic identity check `lhs == rhs` by cross-multiplication.
    pub fn verify_identity(
        &self,
        name: &str,
        lhs: &RationalFn,
        rhs: &RationalFn,
        clock: &dyn Clock,
    ) -> CertificateReport {
        let start = clock.now();
        let diff = lhs.cross_difference(rhs);
        CertificateReport::identity(
            name,
            "all (x, y, u, A)",
            lhs.num().monomial_count(),
            diff,
            true,
            clock.now().saturating_sub(start),
        )
    }

    /// Expands one step and inspects its coefficients.
    pub fn run_step(
        &self,
        step: &SubstitutionStep,
        clock: &dyn Clock,
    ) -> Result<CertificateReport> {
        let start = clock.now();
        let expanded = step.expand()?;
        let (output, cleared) = expanded.into_parts();
        let strict = strictly_positive(&output, step.nonnegative());
        let cleared_positive = !cleared.is_zero() && cleared.terms().all(|(_, c)| c.is_positive());
        let min = output.min_coefficient().ok();
        Ok(CertificateReport {
            step: step.name().to_string(),
            region: step.region().to_string(),
            bindings: step.composed_bindings()?.to_text(),
            kind: ReportKind::Positivity,
            input_count: step.source().monomial_count(),
            output_count: output.monomial_count(),
            all_positive: min.as_ref().is_some_and(|(c, _)| c.is_positive()),
            all_integer: output.all_coefficients_integer(),
            require_integer: step.require_integer(),
            attaining: min.as_ref().map(|(_, m)| m.to_text(output.vars())),
            min_coefficient: min.map(|(c, _)| c),
            strict,
            cleared_denominator: cleared.to_text(),
            cleared_positive,
            elapsed: clock.now().saturating_sub(start),
            output,
        })
    }

    fn run_all(
        &self,
        steps: &[SubstitutionStep],
        clock: &dyn Clock,
    ) -> Result<Vec<CertificateReport>> {
        steps.iter().map(|s| self.run_step(s, clock)).collect()
    }

    /// Sign certificates for the factors of `g - g∘T` on the second and
    /// fourth quadrants around `(u, u)`.
    pub fn certify_q2q4(&self, clock: &dyn Clock) -> Result<Vec<CertificateReport>> {
        self.run_all(&self.steps_q2q4(), clock)
    }

    pub fn certify_q1(&self, clock: &dyn Clock) -> Result<Vec<CertificateReport>> {
        self.run_all(&self.steps_q1(), clock)
    }

    pub fn certify_q3(&self, clock: &dyn Clock) -> Result<Vec<CertificateReport>> {
        self.run_all(&self.steps_q3(), clock)
    }

    pub fn certify_segments(&self, clock: &dyn Clock) -> Result<Vec<CertificateReport>> {
        self.run_all(&self.steps_segments(), clock)
    }

    /// Every positivity step, in report order.
    pub fn all_steps(&self) -> Vec<SubstitutionStep> {
        let mut steps = self.steps_delta1_global();
        steps.extend(self.steps_q2q4());
        steps.push(self.step_delta2_denominator());
        steps.extend(self.steps_q1());
        steps.extend(self.steps_q3());
        steps.extend(self.steps_segments());
        steps
    }

    pub fn step(&self, name: &str) -> Option<SubstitutionStep> {
        self.all_steps().into_iter().find(|s| s.name() == name)
    }

    /// Monomial counts of the reduced numerator of `g - g∘T∘T`, of its shift
    /// to `(u, u)`, and of the first-quadrant subcase above the diagonal.
    pub fn counts(&self) -> Result<Counts> {
        let numerator = self.model.delta2_numerator();
        let shifted = numerator.substitute(&steps::shift_to_equilibrium())?;
        let above = self
            .step(steps::Q1_ABOVE)
            .expect("registered step")
            .expand()?;
        Ok(Counts {
            delta2_numerator: numerator.monomial_count(),
            eq16: shifted.num().monomial_count(),
            eq17: above.num().monomial_count(),
        })
    }

    /// Identities followed by every positivity step.
    pub fn run_full(&self, clock: &dyn Clock) -> Result<CertificateSummary> {
        let mut reports = Vec::new();
        reports.push(self.verify_delta1_identity(clock));
        reports.push(self.verify_delta2_denominator(clock)?);
        reports.extend(self.run_all(&self.all_steps(), clock)?);
        Ok(CertificateSummary::new(reports, self.counts()?))
    }
}

/// All coefficients positive, and no nonempty set of nonnegative parameters
/// can be zeroed to make the expansion vanish.
fn strictly_positive(p: &Poly, nonnegative: &[String]) -> bool {
    if p.is_zero() || !p.all_coefficients_positive() {
        return false;
    }
    let present: Vec<&str> = nonnegative
        .iter()
        .map(String::as_str)
        .filter(|v| p.degree_in(v) > 0)
        .collect();
    (1u32..(1 << present.len())).all(|mask| {
        let mut q = p.clone();
        for (i, v) in present.iter().enumerate() {
            if mask & (1 << i) != 0 {
                q = q.at_zero(v);
            }
        }
        !q.is_zero()
    })
}
