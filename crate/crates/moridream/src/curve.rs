//! The genus/degree pair indexing every query.

use std::fmt;

use thiserror::Error;

/// The numerical type `(g, d)` of a space curve: arithmetic genus and
/// degree under the hyperplane class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveNumerics {
    g: i64,
    d: i64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvalidNumerics {
    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(i64),
    #[error("genus must be non-negative, got {0}")]
    NegativeGenus(i64),
}

impl CurveNumerics {
    pub fn new(g: i64, d: i64) -> Result<Self, InvalidNumerics> {
        if d < 1 {
            return Err(InvalidNumerics::NonPositiveDegree(d));
        }
        if g < 0 {
            return Err(InvalidNumerics::NegativeGenus(g));
        }
        Ok(CurveNumerics { g, d })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn d(&self) -> i64 {
        self.d
    }
}

impl fmt::Display for CurveNumerics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            CurveNumerics::new(3, 0),
            Err(InvalidNumerics::NonPositiveDegree(0))
        );
        assert_eq!(
            CurveNumerics::new(-1, 4),
            Err(InvalidNumerics::NegativeGenus(-1))
        );
        assert!(CurveNumerics::new(0, 1).is_ok());
    }
}
