use crate::error::{BoundError, Result};
use crate::io::{fmt_num, fmt_probability};
use crate::par::{count_where, Execution};
use crate::tail::{one_sided_bound, DeviationForm, IntervalSet};
use crate::mgf::MgfBoundKind;

use super::ci::{clopper_pearson_upper, CI_CONFIDENCE};
use super::distribution::DiscreteDistribution;
use super::rng::StreamRng;

/// Largest product-support size [`enumerate_tail`] will walk.
pub const MAX_ENUMERATION_OUTCOMES: usize = 4096;

/// Empirical estimate of a tail probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailEstimate {
    /// `hits / reps`.
    pub estimate: f64,
    /// One-sided 99% Clopper–Pearson upper limit.
    pub ci_upper_99: f64,
    pub reps: u64,
    pub seed: u64,
    pub hits: u64,
}

fn check_family(set: &IntervalSet, dists: &[DiscreteDistribution]) -> Result<()> {
    if dists.len() != set.len() {
        return Err(BoundError::LengthMismatch {
            what: "distributions per interval",
            expected: set.len(),
            got: dists.len(),
        });
    }
    for (i, (iv, d)) in set.iter().zip(dists).enumerate() {
        if d.host() != iv {
            return Err(BoundError::InvalidDistribution(format!(
                "distribution {i} is hosted on {} but interval {i} is {iv}",
                d.host()
            )));
        }
    }
    Ok(())
}

fn event(sum: f64, n: usize, t: f64, form: DeviationForm) -> bool {
    match form {
        DeviationForm::SumForm => sum >= t,
        DeviationForm::MeanForm => sum / n as f64 >= t,
    }
}

/// Seeded Monte Carlo estimate of `P(S_n >= t)` (or `P(S_n / n >= t)`).
///
/// Replication `r` draws all of its variables from stream `r` of the seed,
/// so the hit count is identical for every execution mode and thread count.
pub fn empirical_tail(
    set: &IntervalSet,
    dists: &[DiscreteDistribution],
    t: f64,
    form: DeviationForm,
    reps: u64,
    seed: u64,
) -> Result<TailEstimate> {
    empirical_tail_with(set, dists, t, form, reps, seed, Execution::default())
}

pub fn empirical_tail_with(
    set: &IntervalSet,
    dists: &[DiscreteDistribution],
    t: f64,
    form: DeviationForm,
    reps: u64,
    seed: u64,
    exec: Execution,
) -> Result<TailEstimate> {
    check_family(set, dists)?;
    if reps < 1 {
        return Err(BoundError::invalid("reps", reps as f64, "must be at least 1"));
    }
    if !t.is_finite() {
        return Err(BoundError::invalid("t", t, "must be finite"));
    }
    let streams = StreamRng::new(seed);
    let n = dists.len();
    let hits = count_where(exec, reps, |r| {
        let mut rng = streams.stream(r);
        let sum: f64 = dists.iter().map(|d| d.sample(&mut rng)).sum();
        event(sum, n, t, form)
    });
    Ok(TailEstimate {
        estimate: hits as f64 / reps as f64,
        ci_upper_99: clopper_pearson_upper(hits, reps, CI_CONFIDENCE),
        reps,
        seed,
        hits,
    })
}

/// Exact tail probability by walking the product of the supports.
pub fn enumerate_tail(dists: &[DiscreteDistribution], t: f64, form: DeviationForm) -> Result<f64> {
    if dists.is_empty() {
        return Err(BoundError::EmptySet);
    }
    let outcomes = dists
        .iter()
        .try_fold(1usize, |acc, d| acc.checked_mul(d.support().len()))
        .filter(|&total| total <= MAX_ENUMERATION_OUTCOMES)
        .ok_or_else(|| {
            BoundError::InvalidDistribution(format!(
                "product support exceeds {MAX_ENUMERATION_OUTCOMES} outcomes"
            ))
        })?;
    let n = dists.len();
    let mut digits = vec![0usize; n];
    let mut total = 0.0;
    for _ in 0..outcomes {
        let mut sum = 0.0;
        let mut prob = 1.0;
        for (d, &k) in dists.iter().zip(&digits) {
            sum += d.support()[k];
            prob *= d.probs()[k];
        }
        if event(sum, n, t, form) {
            total += prob;
        }
        for (d, k) in dists.iter().zip(digits.iter_mut()) {
            *k += 1;
            if *k < d.support().len() {
                break;
            }
            *k = 0;
        }
    }
    Ok(total)
}

/// Monte Carlo estimate next to the improved one-sided bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McComparison {
    pub estimate: TailEstimate,
    pub bound: f64,
    pub ln_bound: f64,
    /// `ci_upper_99 <= bound`.
    pub pass: bool,
}

impl McComparison {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            fmt_num(self.estimate.estimate),
            fmt_num(self.estimate.ci_upper_99),
            fmt_probability(self.bound, self.ln_bound),
            self.pass
        )
    }
}

pub fn compare_with_bound(
    set: &IntervalSet,
    dists: &[DiscreteDistribution],
    t: f64,
    form: DeviationForm,
    reps: u64,
    seed: u64,
    exec: Execution,
) -> Result<McComparison> {
    let report = one_sided_bound(set, t, form, MgfBoundKind::Improved)?;
    let estimate = empirical_tail_with(set, dists, t, form, reps, seed, exec)?;
    Ok(McComparison {
        estimate,
        bound: report.bound,
        ln_bound: report.ln_bound,
        pass: estimate.ci_upper_99 <= report.bound,
    })
}
