use crate::error::GyroError;
use alloc::format;

/// Approximate-equality thresholds and the sampling distance kept from the
/// carrier boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub boundary_margin: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            rel_tol: 1e-9,
            boundary_margin: 1e-6,
        }
    }
}

impl ToleranceConfig {
    /// Exact comparison, used for finite carriers.
    pub const EXACT: Self = Self {
        abs_tol: 0.0,
        rel_tol: 0.0,
        boundary_margin: 0.0,
    };

    /// Same absolute and relative tolerance, default boundary margin.
    pub fn uniform(tol: f64) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), GyroError> {
        for (name, v) in [
            ("abs_tol", self.abs_tol),
            ("rel_tol", self.rel_tol),
            ("boundary_margin", self.boundary_margin),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(GyroError::Tolerance(format!("{name} must be finite and nonnegative, got {v}")));
            }
        }
        if self.boundary_margin >= 1.0 {
            return Err(GyroError::Tolerance(format!(
                "boundary_margin must be < 1, got {}",
                self.boundary_margin
            )));
        }
        Ok(())
    }

    /// The threshold a distance is compared against at the given magnitude:
    /// `max(abs_tol, rel_tol * magnitude)`.
    pub fn threshold(&self, magnitude: f64) -> f64 {
        let rel = self.rel_tol * magnitude;
        if rel > self.abs_tol {
            rel
        } else {
            self.abs_tol
        }
    }

    pub fn accepts(&self, distance: f64, magnitude: f64) -> bool {
        distance <= self.threshold(magnitude)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_negative_and_wide_margin() {
        let mut t = ToleranceConfig::default();
        assert!(t.validate().is_ok());
        t.abs_tol = -1.0;
        assert!(t.validate().is_err());
        let t = ToleranceConfig {
            boundary_margin: 1.0,
            ..ToleranceConfig::default()
        };
        assert!(t.validate().is_err());
        let t = ToleranceConfig {
            rel_tol: f64::NAN,
            ..ToleranceConfig::default()
        };
        assert!(t.validate().is_err());
    }

    #[test]
    fn threshold_is_max_of_abs_and_scaled_rel() {
        let t = ToleranceConfig {
            abs_tol: 1e-9,
            rel_tol: 1e-6,
            boundary_margin: 0.0,
        };
        assert_eq!(t.threshold(0.0), 1e-9);
        assert_eq!(t.threshold(1.0), 1e-6);
        assert!(t.accepts(5e-7, 1.0));
        assert!(!t.accepts(5e-7, 1e-3));
        assert!(ToleranceConfig::EXACT.accepts(0.0, 10.0));
        assert!(!ToleranceConfig::EXACT.accepts(1e-300, 10.0));
    }
}
