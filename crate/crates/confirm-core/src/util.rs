//! Small numeric helpers shared across modules.

use crate::error::{Error, Result};

/// Logarithm of `x` in an arbitrary base, using the precise intrinsic when one
/// exists for the base.
pub(crate) fn log_with(x: f64, base: f64) -> f64 {
    if base == 2.0 {
        x.log2()
    } else if base == 10.0 {
        x.log10()
    } else {
        x.ln() / base.ln()
    }
}

/// Information logs need a finite positive base other than 1.
pub(crate) fn validate_log_base(base: f64) -> Result<()> {
    if base.is_finite() && base > 0.0 && base != 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "log base",
            value: base,
            expected: "finite, positive, and != 1",
        })
    }
}

/// `x * log(y)` under the convention that a zero weight contributes nothing,
/// even when the log diverges.
pub(crate) fn weighted_log(weight: f64, y: f64, base: f64) -> f64 {
    if weight == 0.0 {
        0.0
    } else {
        weight * log_with(y, base)
    }
}
