use std::env;
use std::time::Instant;

use lyness_core::certify::{CertificateReport, CertificateSummary, Certifier, Clock, NoClock};
use lyness_core::Result;
use rayon::prelude::*;

/// Wall-clock time since construction.
#[derive(Clone, Copy, Debug)]
pub struct StdClock {
    start: Instant,
}

impl StdClock {
    pub fn new() -> Self {
        StdClock {
            start: Instant::now(),
        }
    }
}

impl Default for StdClock {
    fn default() -> Self {
        StdClock::new()
    }
}

impl Clock for StdClock {
    fn now(&self) -> std::time::Duration {
        self.start.elapsed()
    }
}

/// `LYNESS_THREADS`, when set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    env::var("LYNESS_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
}

/// Full certificate run with positivity steps spread over a thread pool.
/// Report order is the step order regardless of scheduling.
pub fn run_full_parallel(certifier: &Certifier<'_>, timing: bool) -> Result<CertificateSummary> {
    let std_clock = StdClock::new();
    let clock: &dyn Clock = if timing { &std_clock } else { &NoClock };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| lyness_core::Error::Inconsistent(e.to_string()))?;

    let mut reports = vec![
        certifier.verify_delta1_identity(clock),
        certifier.verify_delta2_denominator(clock)?,
    ];
    let steps = certifier.all_steps();
    let positivity: Vec<Result<CertificateReport>> = pool.install(|| {
        steps
            .par_iter()
            .map(|s| certifier.run_step(s, clock))
            .collect()
    });
    for r in positivity {
        reports.push(r?);
    }
    Ok(CertificateSummary::new(reports, certifier.counts()?))
}
