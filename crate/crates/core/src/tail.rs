//! Tail bounds for `S_n = X_1 + ... + X_n` with independent, zero-mean
//! `X_i ∈ [a_i, b_i]`.
//!
//! The Chernoff step gives `P(S_n >= t) <= exp(-st + s² M² / 2)` where
//! `M² = Σ_{right-skewed} A_i² + Σ_{left-skewed} G_i²`. Minimising over `s`
//! yields `exp(-t² / (2M²))` at `s = t / M²`. The lower tail is the upper tail
//! of the reflected sum, whose mixed scale `N²` swaps the roles of `A` and
//! `G`, and the two-sided bound is the union of both.
//!
//! Everything is evaluated in log space and exponentiated once at the end.

use crate::error::{BoundError, Result};
use crate::interval::{Interval, SkewClass};
use crate::mgf::{log_add_exp, MgfBoundKind};

/// Bisection iteration cap for the two-sided inversion.
const MAX_BISECTION_STEPS: usize = 200;

/// Bounds below this are reported through their logarithm.
pub const LOG_REPORT_THRESHOLD: f64 = 1e-300;

/// Non-empty ordered family of supports.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSet {
    items: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(items: Vec<Interval>) -> Result<Self> {
        if items.is_empty() {
            return Err(BoundError::EmptySet);
        }
        Ok(IntervalSet { items })
    }

    /// `n` copies of the same support.
    pub fn repeated(iv: Interval, n: usize) -> Result<Self> {
        Self::new(vec![iv; n])
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Interval] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.items.iter()
    }

    /// Support of `-S_n`.
    pub fn reflect(&self) -> IntervalSet {
        IntervalSet {
            items: self.items.iter().map(Interval::reflect).collect(),
        }
    }

    pub fn concat(&self, other: &IntervalSet) -> IntervalSet {
        let mut items = self.items.clone();
        items.extend_from_slice(&other.items);
        IntervalSet { items }
    }

    /// Largest value `S_n` can take.
    pub fn max_sum(&self) -> f64 {
        self.items.iter().map(Interval::b).sum()
    }
}

impl<'a> IntoIterator for &'a IntervalSet {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// Indices of right-skewed (`I`, ties included) and left-skewed (`J`)
/// supports, each in ascending order.
pub fn index_sets(set: &IntervalSet) -> (Vec<usize>, Vec<usize>) {
    let mut right = Vec::new();
    let mut left = Vec::new();
    for (i, iv) in set.iter().enumerate() {
        match iv.skew_class() {
            SkewClass::Right => right.push(i),
            SkewClass::Left => left.push(i),
        }
    }
    (right, left)
}

/// Sums of squared scales over a family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedScales {
    /// `M²`: `A²` on right-skewed supports plus `G²` on left-skewed ones.
    pub m_sq: f64,
    /// `N²`: the same for the reflected family.
    pub n_sq: f64,
    /// `Σ A_i²`.
    pub sum_a_sq: f64,
    /// `Σ G_i²`.
    pub sum_g_sq: f64,
    pub n: usize,
}

impl MixedScales {
    pub fn bar_m_sq(&self) -> f64 {
        self.m_sq / self.n as f64
    }

    pub fn bar_n_sq(&self) -> f64 {
        self.n_sq / self.n as f64
    }

    pub fn bar_a_sq(&self) -> f64 {
        self.sum_a_sq / self.n as f64
    }

    pub fn bar_g_sq(&self) -> f64 {
        self.sum_g_sq / self.n as f64
    }

    pub fn bar_m(&self) -> f64 {
        self.bar_m_sq().sqrt()
    }

    pub fn bar_n(&self) -> f64 {
        self.bar_n_sq().sqrt()
    }

    pub fn bar_a(&self) -> f64 {
        self.bar_a_sq().sqrt()
    }

    pub fn bar_g(&self) -> f64 {
        self.bar_g_sq().sqrt()
    }

    /// Squared scale of the upper-tail bound for `kind`.
    pub fn upper_sq(&self, kind: MgfBoundKind) -> f64 {
        match kind {
            MgfBoundKind::Improved => self.m_sq,
            MgfBoundKind::Original => self.sum_a_sq,
        }
    }

    /// Squared scale of the lower-tail bound for `kind`.
    pub fn lower_sq(&self, kind: MgfBoundKind) -> f64 {
        match kind {
            MgfBoundKind::Improved => self.n_sq,
            MgfBoundKind::Original => self.sum_a_sq,
        }
    }
}

impl std::ops::Add for MixedScales {
    type Output = MixedScales;

    fn add(self, rhs: MixedScales) -> MixedScales {
        MixedScales {
            m_sq: self.m_sq + rhs.m_sq,
            n_sq: self.n_sq + rhs.n_sq,
            sum_a_sq: self.sum_a_sq + rhs.sum_a_sq,
            sum_g_sq: self.sum_g_sq + rhs.sum_g_sq,
            n: self.n + rhs.n,
        }
    }
}

pub fn mixed_scales(set: &IntervalSet) -> MixedScales {
    let mut scales = MixedScales {
        m_sq: 0.0,
        n_sq: 0.0,
        sum_a_sq: 0.0,
        sum_g_sq: 0.0,
        n: set.len(),
    };
    for iv in set {
        let (a_sq, g_sq) = (iv.arithmetic_mean_sq(), iv.geometric_mean_sq());
        scales.sum_a_sq += a_sq;
        scales.sum_g_sq += g_sq;
        match iv.skew_class() {
            SkewClass::Right => {
                scales.m_sq += a_sq;
                scales.n_sq += g_sq;
            }
            SkewClass::Left => {
                scales.m_sq += g_sq;
                scales.n_sq += a_sq;
            }
        }
    }
    scales
}

/// Whether `t` measures a deviation of `S_n` or of the sample mean `S_n / n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeviationForm {
    SumForm,
    MeanForm,
}

impl DeviationForm {
    /// Deviation of `S_n` equivalent to `t` in this form.
    pub fn sum_deviation(self, t: f64, n: usize) -> f64 {
        match self {
            DeviationForm::SumForm => t,
            DeviationForm::MeanForm => n as f64 * t,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DeviationForm::SumForm => "sum",
            DeviationForm::MeanForm => "mean",
        }
    }
}

impl std::str::FromStr for DeviationForm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "sum" => Ok(DeviationForm::SumForm),
            "mean" => Ok(DeviationForm::MeanForm),
            other => Err(format!("unknown form '{other}' (expected sum|mean)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sidedness {
    /// `P(S_n >= t)`.
    One,
    /// `P(|S_n| >= t)`.
    Two,
}

impl Sidedness {
    pub fn as_str(self) -> &'static str {
        match self {
            Sidedness::One => "one",
            Sidedness::Two => "two",
        }
    }
}

impl std::str::FromStr for Sidedness {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "one" => Ok(Sidedness::One),
            "two" => Ok(Sidedness::Two),
            other => Err(format!("unknown sidedness '{other}' (expected one|two)")),
        }
    }
}

/// Outcome of a tail-bound evaluation.
///
/// `bound` and `ln_bound` belong to `kind`; both the improved and the
/// original value are always carried for comparison. Bounds that underflow
/// below [`LOG_REPORT_THRESHOLD`] remain exact in their `ln_*` fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBoundReport {
    pub t: f64,
    pub form: DeviationForm,
    pub sidedness: Sidedness,
    pub kind: MgfBoundKind,
    pub scales: MixedScales,
    pub bound: f64,
    pub ln_bound: f64,
    pub bound_improved: f64,
    pub ln_bound_improved: f64,
    pub bound_original: f64,
    pub ln_bound_original: f64,
    /// Chernoff parameter minimising the upper-tail exponent for `S_n`.
    pub optimal_s: f64,
}

impl TailBoundReport {
    /// True when `bound` is too small to print as a plain number.
    pub fn is_log_reported(&self) -> bool {
        self.bound < LOG_REPORT_THRESHOLD
    }
}

fn check_t(t: f64) -> Result<()> {
    if !t.is_finite() {
        return Err(BoundError::invalid("t", t, "must be finite"));
    }
    if t <= 0.0 {
        return Err(BoundError::invalid("t", t, "t must be positive"));
    }
    Ok(())
}

fn check_delta(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(BoundError::invalid("delta", delta, "must lie in (0, 1)"));
    }
    Ok(())
}

/// `ln exp(-t² / (2 scale²))`.
#[inline]
fn ln_gaussian_tail(t_sum: f64, scale_sq: f64) -> f64 {
    -(t_sum * t_sum) / (2.0 * scale_sq)
}

fn ln_one_sided(scales: &MixedScales, t_sum: f64, kind: MgfBoundKind) -> f64 {
    ln_gaussian_tail(t_sum, scales.upper_sq(kind))
}

fn ln_two_sided(scales: &MixedScales, t_sum: f64, kind: MgfBoundKind) -> f64 {
    let upper = ln_gaussian_tail(t_sum, scales.upper_sq(kind));
    let lower = ln_gaussian_tail(t_sum, scales.lower_sq(kind));
    log_add_exp(upper, lower).min(0.0)
}

/// Log of the tail bound for a deviation `t_sum` of `S_n`.
pub fn ln_tail_bound(
    scales: &MixedScales,
    t_sum: f64,
    sidedness: Sidedness,
    kind: MgfBoundKind,
) -> f64 {
    match sidedness {
        Sidedness::One => ln_one_sided(scales, t_sum, kind),
        Sidedness::Two => ln_two_sided(scales, t_sum, kind),
    }
}

/// General entry point behind [`one_sided_bound`] and [`two_sided_bound`].
pub fn tail_bound(
    set: &IntervalSet,
    t: f64,
    form: DeviationForm,
    sidedness: Sidedness,
    kind: MgfBoundKind,
) -> Result<TailBoundReport> {
    check_t(t)?;
    let scales = mixed_scales(set);
    let t_sum = form.sum_deviation(t, set.len());
    let ln_improved = ln_tail_bound(&scales, t_sum, sidedness, MgfBoundKind::Improved);
    let ln_original = ln_tail_bound(&scales, t_sum, sidedness, MgfBoundKind::Original);
    let ln_bound = match kind {
        MgfBoundKind::Improved => ln_improved,
        MgfBoundKind::Original => ln_original,
    };
    Ok(TailBoundReport {
        t,
        form,
        sidedness,
        kind,
        scales,
        bound: ln_bound.exp(),
        ln_bound,
        bound_improved: ln_improved.exp(),
        ln_bound_improved: ln_improved,
        bound_original: ln_original.exp(),
        ln_bound_original: ln_original,
        optimal_s: t_sum / scales.upper_sq(kind),
    })
}

/// Bound on `P(S_n >= t)` (sum form) or `P(S_n / n >= t)` (mean form).
pub fn one_sided_bound(
    set: &IntervalSet,
    t: f64,
    form: DeviationForm,
    kind: MgfBoundKind,
) -> Result<TailBoundReport> {
    tail_bound(set, t, form, Sidedness::One, kind)
}

/// Improved bound on `P(|S_n| >= t)`: the sum of the upper-tail bound with
/// scale `M²` and the lower-tail bound with scale `N²`, clamped to 1.
pub fn two_sided_bound(set: &IntervalSet, t: f64, form: DeviationForm) -> Result<TailBoundReport> {
    tail_bound(set, t, form, Sidedness::Two, MgfBoundKind::Improved)
}

/// One-sided bound for `n` independent copies supported on `iv`.
pub fn iid_one_sided_bound(
    iv: &Interval,
    n: usize,
    t: f64,
    form: DeviationForm,
    kind: MgfBoundKind,
) -> Result<f64> {
    Ok(ln_iid_one_sided_bound(iv, n, t, form, kind)?.exp())
}

/// Log of [`iid_one_sided_bound`].
pub fn ln_iid_one_sided_bound(
    iv: &Interval,
    n: usize,
    t: f64,
    form: DeviationForm,
    kind: MgfBoundKind,
) -> Result<f64> {
    check_t(t)?;
    if n < 1 {
        return Err(BoundError::invalid("n", n as f64, "must be at least 1"));
    }
    let mean_t = match form {
        DeviationForm::MeanForm => t,
        DeviationForm::SumForm => t / n as f64,
    };
    Ok(-0.5 * mean_t * mean_t * n as f64 / kind.scale_sq(iv))
}

/// `exp(-k² n / 2)` for a mean deviation of `k` natural units.
pub fn standardized_bound(k: f64, n: usize) -> Result<f64> {
    if !k.is_finite() || k <= 0.0 {
        return Err(BoundError::invalid("k", k, "must be positive and finite"));
    }
    if n < 1 {
        return Err(BoundError::invalid("n", n as f64, "must be at least 1"));
    }
    Ok((-0.5 * k * k * n as f64).exp())
}

/// Smallest `n` for which the iid mean-form bound at deviation `t` is at
/// most `delta`.
pub fn invert_for_n(iv: &Interval, t: f64, delta: f64, kind: MgfBoundKind) -> Result<u64> {
    check_t(t)?;
    check_delta(delta)?;
    let ln_delta = delta.ln();
    let scale_sq = kind.scale_sq(iv);
    let estimate = (2.0 * scale_sq * (-ln_delta) / (t * t)).ceil().max(1.0);
    if !estimate.is_finite() || estimate >= u64::MAX as f64 / 2.0 {
        return Err(BoundError::Overflow("required sample size"));
    }
    let within = |n: u64| -> Result<bool> {
        Ok(ln_iid_one_sided_bound(iv, n as usize, t, DeviationForm::MeanForm, kind)? <= ln_delta)
    };
    let mut n = estimate as u64;
    // the closed form can land one off after rounding
    while !within(n)? {
        n += 1;
    }
    while n > 1 && within(n - 1)? {
        n -= 1;
    }
    Ok(n)
}

/// Sum-form deviation `t` at which the bound equals `delta`.
pub fn invert_for_t(
    set: &IntervalSet,
    delta: f64,
    sidedness: Sidedness,
    kind: MgfBoundKind,
) -> Result<f64> {
    check_delta(delta)?;
    let scales = mixed_scales(set);
    let upper = scales.upper_sq(kind);
    let lower = scales.lower_sq(kind);
    let ln_inv_delta = -delta.ln();
    match sidedness {
        Sidedness::One => Ok((2.0 * upper * ln_inv_delta).sqrt()),
        Sidedness::Two if upper == lower => {
            Ok((2.0 * upper * (std::f64::consts::LN_2 + ln_inv_delta)).sqrt())
        }
        Sidedness::Two => {
            // f(t) = ln(e^{-t²/2U} + e^{-t²/2L}) - ln δ is strictly decreasing.
            // With W = max(U, L): f >= 0 at sqrt(2W ln(1/δ)), f <= 0 at sqrt(2W ln(2/δ)).
            let wide = upper.max(lower);
            let ln_delta = -ln_inv_delta;
            let f = |t: f64| log_add_exp(ln_gaussian_tail(t, upper), ln_gaussian_tail(t, lower)) - ln_delta;
            let mut lo = (2.0 * wide * ln_inv_delta).sqrt();
            let mut hi = (2.0 * wide * (std::f64::consts::LN_2 + ln_inv_delta)).sqrt();
            for _ in 0..MAX_BISECTION_STEPS {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if f(mid) > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Ok(0.5 * (lo + hi))
        }
    }
}
