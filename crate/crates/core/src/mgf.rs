//! Cumulant function of the extremal two-point law and the per-variable MGF
//! bounds.
//!
//! With `λ = -a / (b - a)` and `u = s (b - a)`, the two-point law on `{a, b}`
//! has log-MGF `ψ(u) = -λu + ln(1 - λ + λeᵘ)`. Its second derivative is
//! `τ(1 - τ)` with `τ(μ) = λ / (λ + (1 - λ)e^{-μ})`, and `τ` sweeps `[λ, 1)`
//! as `μ` grows. The maximum of `τ(1 - τ)` over that range is `1/4` when
//! `λ <= 1/2` and `λ(1 - λ)` otherwise, which gives the two scales of
//! [`MgfBoundKind::Improved`].
//!
//! `ψ` is evaluated as `-λu + ln(1 + λ(eᵘ - 1))` when `λ <= 1/2` and
//! `u <= 30`, and otherwise as `(1 - λ)u + ln(1 + (1 - λ)(e^{-u} - 1))`,
//! which never forms `eᵘ` and avoids cancelling two large terms when `λ` is
//! close to 1.

use crate::error::{BoundError, Result};
use crate::interval::{Interval, SkewClass, TailDirection};

/// Above this `u` the log-argument of `ψ` is rewritten to keep `eᵘ` out of
/// the computation.
const PSI_BRANCH_U: f64 = 30.0;

/// Which MGF bound to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MgfBoundKind {
    /// Classical scale `A` for every support.
    Original,
    /// `A` on right-skewed supports, `G` on left-skewed ones.
    Improved,
}

impl MgfBoundKind {
    /// Squared sub-Gaussian scale used for the upper tail of `iv`.
    pub fn scale_sq(self, iv: &Interval) -> f64 {
        match self {
            MgfBoundKind::Original => iv.arithmetic_mean_sq(),
            MgfBoundKind::Improved => iv.subgaussian_scale_sq(TailDirection::Upper),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MgfBoundKind::Original => "original",
            MgfBoundKind::Improved => "improved",
        }
    }
}

impl std::str::FromStr for MgfBoundKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "original" => Ok(MgfBoundKind::Original),
            "improved" => Ok(MgfBoundKind::Improved),
            other => Err(format!("unknown bound kind '{other}' (expected improved|original)")),
        }
    }
}

fn check_nonneg(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(BoundError::invalid(name, value, "must be finite"));
    }
    if value < 0.0 {
        return Err(BoundError::invalid(name, value, "must be non-negative"));
    }
    Ok(())
}

/// Numerically stable `ln(eˣ + eʸ)`.
pub(crate) fn log_add_exp(x: f64, y: f64) -> f64 {
    if x == f64::NEG_INFINITY {
        return y;
    }
    if y == f64::NEG_INFINITY {
        return x;
    }
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    hi + (lo - hi).exp().ln_1p()
}

/// `ψ(u) = -λu + ln(1 - λ + λeᵘ)` for `u >= 0`.
pub fn psi(iv: &Interval, u: f64) -> Result<f64> {
    check_nonneg("u", u)?;
    Ok(psi_unchecked(iv.lambda(), iv.one_minus_lambda(), u))
}

fn psi_unchecked(lambda: f64, one_minus_lambda: f64, u: f64) -> f64 {
    // Two algebraically identical forms. The first cancels badly when λ is
    // near 1 and overflows for huge u; the second needs no eᵘ at all.
    let value = if lambda <= 0.5 && u <= PSI_BRANCH_U {
        -lambda * u + (lambda * u.exp_m1()).ln_1p()
    } else {
        one_minus_lambda * u + (one_minus_lambda * (-u).exp_m1()).ln_1p()
    };
    // ψ >= 0 on u >= 0; rounding near u = 0 can dip a few ulps below.
    value.max(0.0)
}

/// `τ(μ) = λ / (λ + (1 - λ)e^{-μ})`; `τ(0) = λ` exactly.
pub fn tau(iv: &Interval, mu: f64) -> Result<f64> {
    check_nonneg("mu", mu)?;
    Ok(tau_pair(iv, mu).0)
}

/// `(τ, 1 - τ)` with the complement evaluated without cancellation.
fn tau_pair(iv: &Interval, mu: f64) -> (f64, f64) {
    let lambda = iv.lambda();
    let one_minus = iv.one_minus_lambda();
    if mu == 0.0 {
        return (lambda, one_minus);
    }
    let damped = one_minus * (-mu).exp();
    let denom = lambda + damped;
    (lambda / denom, damped / denom)
}

/// `ψ''(μ) = τ(μ)(1 - τ(μ))`, in `(0, 1/4]`.
pub fn psi_second(iv: &Interval, mu: f64) -> Result<f64> {
    check_nonneg("mu", mu)?;
    let (t, one_minus_t) = tau_pair(iv, mu);
    Ok(t * one_minus_t)
}

/// Largest value of `ψ''` the two-case rule allows: `1/4` on right-skewed
/// supports and `λ(1 - λ)` on left-skewed ones.
pub fn psi_second_cap(iv: &Interval) -> f64 {
    match iv.skew_class() {
        SkewClass::Right => 0.25,
        SkewClass::Left => iv.lambda() * iv.one_minus_lambda(),
    }
}

/// Quadratic majorant `c u² / 2` of `ψ(u)` with `c` = [`psi_second_cap`].
pub fn psi_quadratic_bound(iv: &Interval, u: f64) -> Result<f64> {
    check_nonneg("u", u)?;
    Ok(0.5 * psi_second_cap(iv) * u * u)
}

/// Log-MGF of the two-point law on `{a, b}` for any finite `s`.
///
/// For `s >= 0` this is `ψ(s(b - a))`; for `s < 0` it is `ψ` of the
/// reflected support at `-s(b - a)`.
pub fn ln_two_point_mgf(iv: &Interval, s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(BoundError::invalid("s", s, "must be finite"));
    }
    let (host, u) = if s >= 0.0 {
        (*iv, s * iv.width())
    } else {
        (iv.reflect(), -s * iv.width())
    };
    if !u.is_finite() {
        return Err(BoundError::Overflow("s (b - a)"));
    }
    Ok(psi_unchecked(host.lambda(), host.one_minus_lambda(), u))
}

/// `(1 - λ)e^{sa} + λe^{sb}`.
pub fn two_point_mgf(iv: &Interval, s: f64) -> Result<f64> {
    let value = ln_two_point_mgf(iv, s)?.exp();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(BoundError::Overflow("two-point MGF"))
    }
}

fn check_positive_s(s: f64) -> Result<()> {
    if !s.is_finite() {
        return Err(BoundError::invalid("s", s, "must be finite"));
    }
    if s <= 0.0 {
        return Err(BoundError::invalid(
            "s",
            s,
            "must be positive; reflect the interval to bound the lower tail",
        ));
    }
    Ok(())
}

/// Exponent `s² σ² / 2` of [`mgf_bound`].
pub fn ln_mgf_bound(iv: &Interval, s: f64, kind: MgfBoundKind) -> Result<f64> {
    check_positive_s(s)?;
    let value = 0.5 * s * s * kind.scale_sq(iv);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(BoundError::Overflow("MGF bound exponent"))
    }
}

/// Upper bound `exp(s² σ² / 2)` on `E[exp(sX)]`, valid for `s > 0`.
pub fn mgf_bound(iv: &Interval, s: f64, kind: MgfBoundKind) -> Result<f64> {
    let value = ln_mgf_bound(iv, s, kind)?.exp();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(BoundError::Overflow("MGF bound"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn psi_values() {
        assert_relative_eq!(psi(&iv(-2.0, 1.0), 3.0).unwrap(), 0.61912, epsilon = 1e-5);
        assert_relative_eq!(psi(&iv(-1.0, 1.0), 2.0).unwrap(), 0.433781, epsilon = 1e-5);
        assert_eq!(psi(&iv(-3.0, 0.5), 0.0).unwrap(), 0.0);
        assert!(psi(&iv(-1.0, 1.0), -0.1).is_err());
        assert!(psi(&iv(-1.0, 1.0), f64::NAN).is_err());
        assert!(psi(&iv(-1.0, 1.0), f64::INFINITY).is_err());
    }

    #[test]
    fn psi_branches_agree_at_seam() {
        for x in [iv(-2.0, 1.0), iv(-1.0, 3.0), iv(-1.0, 1.0), iv(-100.0, 0.01)] {
            let (l, m) = (x.lambda(), x.one_minus_lambda());
            let u = PSI_BRANCH_U;
            let small = -l * u + (l * u.exp_m1()).ln_1p();
            let large = m * u + (m * (-u).exp_m1()).ln_1p();
            assert_relative_eq!(small, large, max_relative = 1e-12);
        }
    }

    #[test]
    fn psi_survives_huge_u() {
        let x = iv(-2.0, 1.0);
        let v = psi(&x, 5000.0).unwrap();
        assert!(v.is_finite());
        assert_relative_eq!(v, x.one_minus_lambda() * 5000.0 + x.lambda().ln(), max_relative = 1e-12);
    }

    #[test]
    fn tau_values() {
        let x = iv(-2.0, 1.0);
        assert_eq!(tau(&x, 0.0).unwrap(), x.lambda());
        assert_relative_eq!(tau(&x, 3.0).unwrap(), 0.97571, epsilon = 1e-5);
        assert_eq!(tau(&iv(-1.0, 1.0), 0.0).unwrap(), 0.5);
        assert!(tau(&x, -1.0).is_err());
        let big = tau(&x, 1e4).unwrap();
        assert!(big <= 1.0 && big > 0.999_999);
    }

    #[test]
    fn psi_second_values() {
        assert_relative_eq!(psi_second(&iv(-2.0, 1.0), 0.0).unwrap(), 2.0 / 9.0, epsilon = 1e-15);
        assert_eq!(psi_second(&iv(-1.0, 1.0), 0.0).unwrap(), 0.25);
        assert_relative_eq!(psi_second(&iv(-2.0, 1.0), 3.0).unwrap(), 0.02370, epsilon = 1e-5);
        assert!(psi_second(&iv(-2.0, 1.0), -1e-9).is_err());
    }

    #[test]
    fn quadratic_bound_values() {
        assert_relative_eq!(psi_quadratic_bound(&iv(-2.0, 1.0), 3.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_eq!(psi_quadratic_bound(&iv(-1.0, 1.0), 2.0).unwrap(), 0.5);
        assert_eq!(psi_quadratic_bound(&iv(-1.0, 3.0), 4.0).unwrap(), 2.0);
        assert!(psi_quadratic_bound(&iv(-1.0, 3.0), -4.0).is_err());
    }

    #[test]
    fn two_point_values() {
        assert_relative_eq!(two_point_mgf(&iv(-2.0, 1.0), 1.0).unwrap(), 1.8572997, epsilon = 1e-6);
        assert_eq!(two_point_mgf(&iv(-0.3, 7.0), 0.0).unwrap(), 1.0);
        assert_relative_eq!(two_point_mgf(&iv(-1.0, 1.0), 1.0).unwrap(), 1.0_f64.cosh(), max_relative = 1e-14);
        assert_relative_eq!(two_point_mgf(&iv(-1.0, 1.0), -1.0).unwrap(), 1.0_f64.cosh(), max_relative = 1e-14);
        // direct formula on the negative side
        let x = iv(-2.0, 1.0);
        let s = -0.7;
        let direct = x.one_minus_lambda() * (s * x.a()).exp() + x.lambda() * (s * x.b()).exp();
        assert_relative_eq!(two_point_mgf(&x, s).unwrap(), direct, max_relative = 1e-14);
        assert_eq!(two_point_mgf(&x, 1e6), Err(BoundError::Overflow("two-point MGF")));
        assert!(ln_two_point_mgf(&x, 1e6).unwrap().is_finite());
        assert!(two_point_mgf(&x, f64::NAN).is_err());
    }

    #[test]
    fn mgf_bound_values() {
        let x = iv(-2.0, 1.0);
        assert_relative_eq!(mgf_bound(&x, 1.0, MgfBoundKind::Improved).unwrap(), 1.0_f64.exp(), max_relative = 1e-15);
        assert_relative_eq!(mgf_bound(&x, 1.0, MgfBoundKind::Original).unwrap(), 3.0802169, epsilon = 1e-6);
        let sym = iv(-1.0, 1.0);
        assert_eq!(
            mgf_bound(&sym, 2.0, MgfBoundKind::Improved).unwrap(),
            mgf_bound(&sym, 2.0, MgfBoundKind::Original).unwrap()
        );
        assert_relative_eq!(mgf_bound(&sym, 2.0, MgfBoundKind::Improved).unwrap(), 2.0_f64.exp(), max_relative = 1e-15);
        assert!(mgf_bound(&x, 0.0, MgfBoundKind::Improved).is_err());
        assert!(mgf_bound(&x, -1.0, MgfBoundKind::Improved).is_err());
        assert_eq!(mgf_bound(&x, 1e3, MgfBoundKind::Improved), Err(BoundError::Overflow("MGF bound")));
        assert!(ln_mgf_bound(&x, 1e3, MgfBoundKind::Improved).is_ok());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("improved".parse::<MgfBoundKind>(), Ok(MgfBoundKind::Improved));
        assert_eq!("original".parse::<MgfBoundKind>(), Ok(MgfBoundKind::Original));
        assert!("better".parse::<MgfBoundKind>().is_err());
    }

    #[test]
    fn log_add_exp_edges() {
        assert_eq!(log_add_exp(f64::NEG_INFINITY, 2.0), 2.0);
        assert_relative_eq!(log_add_exp(0.0, 0.0), std::f64::consts::LN_2, max_relative = 1e-15);
        assert_relative_eq!(log_add_exp(-1000.0, -1000.0), -1000.0 + std::f64::consts::LN_2, max_relative = 1e-15);
    }
}
