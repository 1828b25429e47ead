//! Geometric arithmetic over the strictly positive reals.
//!
//! A geometric number is stored as its natural logarithm, so every geometric
//! operation reduces to ordinary arithmetic on exponents: `x ⊕ y = xy` is an
//! addition of logs, `x ⊙ y = x^(ln y)` a multiplication of logs, and so on.
//! The geometric zero is the number 1 (log 0) and the geometric identity is
//! e (log 1). Working in log coordinates makes ⊕/⊖ exact and keeps values
//! like `e^120` representable.

use crate::error::{GeoError, Result};
use std::fmt;

/// Divisors whose `|ln y|` falls below this are treated as the geometric zero.
pub const DEFAULT_ZERO_TOLERANCE: f64 = 1e-12;

/// A strictly positive real stored in log coordinates.
///
/// The derived ordering compares log values, which coincides with the
/// ordinary order on the represented positive reals (geometric order).
#[derive(Clone, Copy, PartialEq, PartialOrd)]
pub struct GNum {
    log_value: f64,
}

impl fmt::Debug for GNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GNum(e^{:?})", self.log_value)
    }
}

impl fmt::Display for GNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_real())
    }
}

impl GNum {
    /// Geometric zero: the number 1.
    pub const ZERO: GNum = GNum { log_value: 0.0 };
    /// Geometric identity: the number e.
    pub const IDENTITY: GNum = GNum { log_value: 1.0 };

    /// Builds a geometric number from its represented decimal value.
    pub fn from_real(v: f64) -> Result<Self> {
        if !v.is_finite() || v <= 0.0 {
            return Err(GeoError::NonPositiveValue(v));
        }
        Ok(GNum { log_value: v.ln() })
    }

    /// Builds `e^t` directly from the exponent, with no exp/ln round trip.
    pub fn from_exponent(t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(GeoError::Overflow);
        }
        Ok(GNum { log_value: t })
    }

    /// Internal constructor for logs that are finite by construction.
    pub(crate) fn from_finite_log(t: f64) -> Self {
        debug_assert!(t.is_finite());
        GNum { log_value: t }
    }

    fn from_log(t: f64) -> Result<Self> {
        if t.is_finite() {
            Ok(GNum { log_value: t })
        } else {
            Err(GeoError::Overflow)
        }
    }

    /// The represented positive real, `e^log_value`.
    pub fn to_real(self) -> f64 {
        self.log_value.exp()
    }

    /// The log coordinate `t` with represented value `e^t`.
    pub fn log_value(self) -> f64 {
        self.log_value
    }

    /// True when the number is the geometric zero 1 within `tol` on the log scale.
    pub fn is_geometric_zero(self, tol: f64) -> bool {
        self.log_value.abs() < tol
    }

    /// Geometric addition: `x ⊕ y = xy`.
    pub fn gadd(self, rhs: Self) -> Result<Self> {
        Self::from_log(self.log_value + rhs.log_value)
    }

    /// Geometric subtraction: `x ⊖ y = x/y`.
    pub fn gsub(self, rhs: Self) -> Result<Self> {
        Self::from_log(self.log_value - rhs.log_value)
    }

    /// Geometric multiplication: `x ⊙ y = x^(ln y) = y^(ln x)`.
    pub fn gmul(self, rhs: Self) -> Result<Self> {
        Self::from_log(self.log_value * rhs.log_value)
    }

    /// Geometric division: `x ⊘ y = x^(1/ln y)`, undefined for `y = 1`.
    pub fn gdiv(self, rhs: Self) -> Result<Self> {
        self.gdiv_with_tolerance(rhs, DEFAULT_ZERO_TOLERANCE)
    }

    /// Geometric division with an explicit zero-divisor tolerance on the log scale.
    pub fn gdiv_with_tolerance(self, rhs: Self, zero_tol: f64) -> Result<Self> {
        if rhs.is_geometric_zero(zero_tol) {
            return Err(GeoError::GeometricZeroDivisor);
        }
        Self::from_log(self.log_value / rhs.log_value)
    }

    /// Geometric absolute value: `x` for `x > 1`, `1/x` for `x < 1`, `1` at `1`.
    /// Always at least 1 in geometric order.
    pub fn gabs(self) -> Self {
        GNum {
            log_value: self.log_value.abs(),
        }
    }

    /// Geometric power `x^(p_G) = e^((ln x)^p)` for rational exponent `p`.
    ///
    /// Integer `p` is valid for any `x`. A non-integer `p` needs `ln x >= 0`
    /// (real branch only); a negative `p` needs `x != 1`.
    pub fn gpow(self, p: f64) -> Result<Self> {
        if !p.is_finite() {
            return Err(GeoError::Domain("power exponent must be finite".into()));
        }
        if p < 0.0 && self.is_geometric_zero(DEFAULT_ZERO_TOLERANCE) {
            return Err(GeoError::GeometricZeroDivisor);
        }
        let t = self.log_value;
        let r = if p.fract() == 0.0 {
            if p.abs() <= i32::MAX as f64 {
                t.powi(p as i32)
            } else {
                // Integer exponents beyond i32: |p| >= 2^53 is always even.
                let mag = t.abs().powf(p);
                if t < 0.0 && p.abs() % 2.0 == 1.0 {
                    -mag
                } else {
                    mag
                }
            }
        } else {
            if t < 0.0 {
                return Err(GeoError::Domain(format!(
                    "fractional power {p} needs a nonnegative log, got ln x = {t}"
                )));
            }
            t.powf(p)
        };
        Self::from_log(r)
    }
}

/// Iterated geometric sum. The empty sum is the geometric zero 1.
pub fn gsum<I>(xs: I) -> Result<GNum>
where
    I: IntoIterator<Item = GNum>,
{
    xs.into_iter().try_fold(GNum::ZERO, |acc, x| acc.gadd(x))
}

/// The geometric factorial `n!_G = e^(n!)` together with its argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GFactorialValue {
    pub n: u32,
    pub value: GNum,
}

/// Geometric factorial `n!_G = e^n ⊙ e^(n-1) ⊙ ... ⊙ e = e^(n!)`.
///
/// The log coordinate equals `n!` exactly. `n!` is computed in exact integer
/// arithmetic and must convert to `f64` without rounding, which holds for
/// `n <= 22`; larger `n` returns [`GeoError::Overflow`].
pub fn gfactorial(n: u32) -> Result<GFactorialValue> {
    let mut fact: u128 = 1;
    for k in 2..=n as u128 {
        fact = fact.checked_mul(k).ok_or(GeoError::Overflow)?;
    }
    let as_float = fact as f64;
    if as_float as u128 != fact {
        return Err(GeoError::Overflow);
    }
    Ok(GFactorialValue {
        n,
        value: GNum {
            log_value: as_float,
        },
    })
}

/// Disagreement of two geometric numbers on the log scale, relative to the
/// magnitude of `reference` (with an absolute floor of 1).
pub fn rel_log_error(a: GNum, reference: GNum) -> f64 {
    (a.log_value - reference.log_value).abs() / reference.log_value.abs().max(1.0)
}

/// Absolute disagreement of two geometric numbers on the log scale.
pub fn abs_log_error(a: GNum, b: GNum) -> f64 {
    (a.log_value - b.log_value).abs()
}
