//! Validated supports `[a, b]` with `a < 0 < b` and their per-interval scales.

use crate::error::{BoundError, Result};

/// Which side of the support has more room.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SkewClass {
    /// `b >= -a`; the tie `b = -a` belongs here.
    Right,
    /// `b < -a`.
    Left,
}

/// Tail of a sum being bounded. `Upper` bounds `P(S >= t)` and corresponds to
/// a positive Chernoff parameter; `Lower` bounds `P(-S >= t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TailDirection {
    Upper,
    Lower,
}

/// Support of a bounded zero-mean random variable.
///
/// Endpoint comparisons are exact: endpoints are user-supplied constants, so
/// no tolerance is applied when classifying skew.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    a: f64,
    b: f64,
}

/// Free-function form of [`Interval::new`].
pub fn make_interval(a: f64, b: f64) -> Result<Interval> {
    Interval::new(a, b)
}

impl Interval {
    /// Validates `a < 0 < b` with both endpoints and the width finite.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(BoundError::NonFiniteEndpoint { a, b });
        }
        if a >= b {
            return Err(BoundError::EmptyInterval { a, b });
        }
        if a >= 0.0 {
            return Err(BoundError::LowerNotNegative(a));
        }
        if b <= 0.0 {
            return Err(BoundError::UpperNotPositive(b));
        }
        if !(b - a).is_finite() {
            return Err(BoundError::WidthOverflow { a, b });
        }
        Ok(Interval { a, b })
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    #[inline]
    pub fn width(&self) -> f64 {
        self.b - self.a
    }

    /// `A = (b + |a|) / 2`.
    #[inline]
    pub fn arithmetic_mean(&self) -> f64 {
        0.5 * self.width()
    }

    /// `G = sqrt(|a| b)`. Never exceeds [`Interval::arithmetic_mean`].
    #[inline]
    pub fn geometric_mean(&self) -> f64 {
        (-self.a).sqrt() * self.b.sqrt()
    }

    /// `A²`.
    #[inline]
    pub fn arithmetic_mean_sq(&self) -> f64 {
        let half = self.arithmetic_mean();
        half * half
    }

    /// `G² = |a| b`, computed without the square root round trip.
    #[inline]
    pub fn geometric_mean_sq(&self) -> f64 {
        -self.a * self.b
    }

    /// `λ = -a / (b - a)`, the probability the extremal two-point law puts on `b`.
    #[inline]
    pub fn lambda(&self) -> f64 {
        -self.a / self.width()
    }

    /// `1 - λ = b / (b - a)`, evaluated directly rather than by subtraction.
    #[inline]
    pub fn one_minus_lambda(&self) -> f64 {
        self.b / self.width()
    }

    #[inline]
    pub fn skew_class(&self) -> SkewClass {
        if self.b >= -self.a {
            SkewClass::Right
        } else {
            SkewClass::Left
        }
    }

    #[inline]
    pub fn is_symmetric(&self) -> bool {
        self.b == -self.a
    }

    /// Support of `-X`: `[-b, -a]`.
    #[inline]
    pub fn reflect(&self) -> Interval {
        Interval {
            a: -self.b,
            b: -self.a,
        }
    }

    /// Smallest scale `σ` this crate can certify in
    /// `E[exp(sX)] <= exp(s² σ² / 2)` for the given tail: `A` for
    /// right-skewed supports, `G` for left-skewed ones. The lower tail is the
    /// upper tail of the reflected support.
    pub fn subgaussian_scale(&self, dir: TailDirection) -> f64 {
        match (dir, self.skew_class()) {
            (TailDirection::Upper, SkewClass::Right) => self.arithmetic_mean(),
            (TailDirection::Upper, SkewClass::Left) => self.geometric_mean(),
            (TailDirection::Lower, _) => self.reflect().subgaussian_scale(TailDirection::Upper),
        }
    }

    /// Square of [`Interval::subgaussian_scale`].
    pub fn subgaussian_scale_sq(&self, dir: TailDirection) -> f64 {
        match (dir, self.skew_class()) {
            (TailDirection::Upper, SkewClass::Right) => self.arithmetic_mean_sq(),
            (TailDirection::Upper, SkewClass::Left) => self.geometric_mean_sq(),
            (TailDirection::Lower, _) => self.reflect().subgaussian_scale_sq(TailDirection::Upper),
        }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}
