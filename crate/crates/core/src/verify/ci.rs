use statrs::function::beta::beta_reg;

/// Confidence level of the reported one-sided upper limits.
pub const CI_CONFIDENCE: f64 = 0.99;

/// One-sided Clopper–Pearson upper confidence limit for a binomial
/// proportion after `hits` successes in `trials` trials.
///
/// Returns the `p` with `P(Bin(trials, p) <= hits) = 1 - confidence`, i.e.
/// the `confidence` quantile of `Beta(hits + 1, trials - hits)`.
pub fn clopper_pearson_upper(hits: u64, trials: u64, confidence: f64) -> f64 {
    assert!(trials > 0, "trials must be positive");
    assert!(hits <= trials, "hits cannot exceed trials");
    assert!(confidence > 0.0 && confidence < 1.0, "confidence must lie in (0, 1)");
    if hits == trials {
        return 1.0;
    }
    let (alpha, beta) = ((hits + 1) as f64, (trials - hits) as f64);
    let mut lo = hits as f64 / trials as f64;
    let mut hi = 1.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if beta_reg(alpha, beta, mid) < confidence {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}
