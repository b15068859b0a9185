use crate::error::{BoundError, Result};
use crate::interval::{Interval, SkewClass};
use crate::io::fmt_num;
use crate::mgf::{ln_mgf_bound, ln_two_point_mgf, psi_second, psi_second_cap, MgfBoundKind};
use crate::par::{map_indexed, Execution};

use super::distribution::random_zero_mean;
use super::rng::StreamRng;

/// A lemma margin below `-LEMMA_MARGIN_TOL` is a violation.
pub const LEMMA_MARGIN_TOL: f64 = 1e-12;
/// Relative slack allowed when comparing an MGF against the extremal one.
pub const EXTREMALITY_REL_TOL: f64 = 1e-12;
/// Right end of the `μ`-grid scanned by [`verify_psi_second_max`].
pub const PSI_SECOND_MU_MAX: f64 = 50.0;
const PSI_SECOND_TOL: f64 = 1e-15;
/// Smallest grid point of [`log_spaced_grid`] relative to its largest.
const GRID_SPAN: f64 = 1e-4;

/// `steps` log-spaced points ending at `s_max`, starting at `1e-4 s_max`.
pub fn log_spaced_grid(s_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !s_max.is_finite() || s_max <= 0.0 {
        return Err(BoundError::invalid("s_max", s_max, "must be positive and finite"));
    }
    if steps < 1 {
        return Err(BoundError::invalid("s_steps", steps as f64, "must be at least 1"));
    }
    if steps == 1 {
        return Ok(vec![s_max]);
    }
    let ln_lo = (s_max * GRID_SPAN).ln();
    let ln_hi = s_max.ln();
    let step = (ln_hi - ln_lo) / (steps - 1) as f64;
    let mut grid: Vec<f64> = (0..steps).map(|i| (ln_lo + step * i as f64).exp()).collect();
    grid[steps - 1] = s_max;
    Ok(grid)
}

/// Lemma check on one interval: `ln bound - ln E[exp(sX)]` for the
/// extremal law at every grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaReport {
    pub interval: Interval,
    pub s_grid: Vec<f64>,
    pub margins: Vec<f64>,
    pub min_margin: f64,
    pub pass: bool,
}

impl LemmaReport {
    /// `s,margin` rows without the header.
    pub fn csv_rows(&self) -> impl Iterator<Item = String> + '_ {
        self.s_grid
            .iter()
            .zip(&self.margins)
            .map(|(s, m)| format!("{},{}", fmt_num(*s), fmt_num(*m)))
    }
}

pub fn verify_lemma(iv: &Interval, s_max: f64, s_steps: usize) -> Result<LemmaReport> {
    let s_grid = log_spaced_grid(s_max, s_steps)?;
    let margins = s_grid
        .iter()
        .map(|&s| Ok(ln_mgf_bound(iv, s, MgfBoundKind::Improved)? - ln_two_point_mgf(iv, s)?))
        .collect::<Result<Vec<f64>>>()?;
    let min_margin = margins.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(LemmaReport {
        interval: *iv,
        s_grid,
        pass: min_margin >= -LEMMA_MARGIN_TOL,
        margins,
        min_margin,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalityReport {
    pub pass: bool,
    /// Largest `ln mgf(dist, s) - ln two_point_mgf(iv, s)` seen.
    pub worst_gap: f64,
    pub trials: usize,
}

/// Draws `trials` random zero-mean laws on `iv` and checks none has a larger
/// MGF at `s` than the extremal two-point law.
pub fn verify_extremality(iv: &Interval, s: f64, trials: usize, seed: u64) -> Result<ExtremalityReport> {
    verify_extremality_with(iv, s, trials, seed, Execution::default())
}

pub fn verify_extremality_with(
    iv: &Interval,
    s: f64,
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Result<ExtremalityReport> {
    if trials < 1 {
        return Err(BoundError::invalid("trials", trials as f64, "must be at least 1"));
    }
    if !s.is_finite() || s < 0.0 {
        return Err(BoundError::invalid("s", s, "must be non-negative and finite"));
    }
    let reference = ln_two_point_mgf(iv, s)?;
    let streams = StreamRng::new(seed);
    let gaps = map_indexed(exec, trials, |k| {
        let dist = random_zero_mean(iv, &mut streams.stream(k as u64));
        dist.ln_mgf(s).map(|v| v - reference)
    });
    let worst_gap = gaps
        .into_iter()
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(ExtremalityReport {
        pass: worst_gap <= EXTREMALITY_REL_TOL.ln_1p(),
        worst_gap,
        trials,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiSecondMaxReport {
    pub pass: bool,
    pub max_value: f64,
    pub argmax_mu: f64,
    /// `λ(1 - λ)` on left-skewed supports, `1/4` otherwise.
    pub cap: f64,
}

/// Scans `ψ''` on `grid_size` evenly spaced points of `[0, 50]`.
///
/// Left-skewed supports pass when the maximum is at `μ = 0` and never exceeds
/// `λ(1 - λ)`; right-skewed ones when `ψ''` never exceeds `1/4`.
pub fn verify_psi_second_max(iv: &Interval, grid_size: usize) -> Result<PsiSecondMaxReport> {
    if grid_size < 2 {
        return Err(BoundError::invalid("grid_size", grid_size as f64, "must be at least 2"));
    }
    let cap = psi_second_cap(iv);
    let step = PSI_SECOND_MU_MAX / (grid_size - 1) as f64;
    let mut max_value = f64::NEG_INFINITY;
    let mut argmax_mu = 0.0;
    for i in 0..grid_size {
        let mu = step * i as f64;
        let v = psi_second(iv, mu)?;
        if v > max_value {
            max_value = v;
            argmax_mu = mu;
        }
    }
    let within = max_value <= cap + PSI_SECOND_TOL;
    let pass = match iv.skew_class() {
        SkewClass::Left => within && argmax_mu == 0.0,
        SkewClass::Right => within,
    };
    Ok(PsiSecondMaxReport {
        pass,
        max_value,
        argmax_mu,
        cap,
    })
}
