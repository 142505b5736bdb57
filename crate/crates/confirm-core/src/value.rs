//! The value type produced by measure evaluation.

use std::fmt;
use std::ops::Neg;

use serde::{Serialize, Serializer};

/// Result of evaluating a confirmation measure.
///
/// Log-ratio measures reach `±inf` when one conditional is zero and the other
/// is not; `Undefined` marks genuine 0/0 situations. Keeping these distinct
/// (instead of overloading IEEE NaN) lets callers and reports say which one
/// happened.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConfirmationValue {
    Finite(f64),
    PosInfinite,
    NegInfinite,
    Undefined,
}

impl ConfirmationValue {
    /// Classify a raw float: NaN becomes `Undefined`, infinities fold into
    /// their named variants.
    pub fn from_f64(x: f64) -> Self {
        if x.is_nan() {
            ConfirmationValue::Undefined
        } else if x == f64::INFINITY {
            ConfirmationValue::PosInfinite
        } else if x == f64::NEG_INFINITY {
            ConfirmationValue::NegInfinite
        } else {
            ConfirmationValue::Finite(x)
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ConfirmationValue::Finite(_))
    }

    pub fn as_finite(self) -> Option<f64> {
        match self {
            ConfirmationValue::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Finite values compare within `tol`; non-finite variants must match exactly.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        match (self, other) {
            (ConfirmationValue::Finite(a), ConfirmationValue::Finite(b)) => (a - b).abs() <= tol,
            (a, b) => a == b,
        }
    }
}

impl Neg for ConfirmationValue {
    type Output = ConfirmationValue;

    fn neg(self) -> ConfirmationValue {
        match self {
            ConfirmationValue::Finite(v) => ConfirmationValue::Finite(-v),
            ConfirmationValue::PosInfinite => ConfirmationValue::NegInfinite,
            ConfirmationValue::NegInfinite => ConfirmationValue::PosInfinite,
            ConfirmationValue::Undefined => ConfirmationValue::Undefined,
        }
    }
}

/// JSON form: finite values are numbers, infinities are the strings
/// `"+inf"` / `"-inf"`, undefined is `null`. (Raw IEEE specials would all
/// collapse to `null` and lose the distinction.)
impl Serialize for ConfirmationValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ConfirmationValue::Finite(v) => serializer.serialize_f64(*v),
            ConfirmationValue::PosInfinite => serializer.serialize_str("+inf"),
            ConfirmationValue::NegInfinite => serializer.serialize_str("-inf"),
            ConfirmationValue::Undefined => serializer.serialize_none(),
        }
    }
}

impl fmt::Display for ConfirmationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfirmationValue::Finite(v) => write!(f, "{v}"),
            ConfirmationValue::PosInfinite => write!(f, "+inf"),
            ConfirmationValue::NegInfinite => write!(f, "-inf"),
            ConfirmationValue::Undefined => write!(f, "undefined"),
        }
    }
}
