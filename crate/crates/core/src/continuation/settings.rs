use super::real::bits_for_digits;

/// Configuration of the Newton refinement.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonSettings {
    /// Working precision in decimal digits.
    pub precision_digits: u32,
    /// Success threshold on the largest residual component.
    pub residual_target: f64,
    pub max_iterations: usize,
    /// Initial step scale in (0, 1]; halved while the residual grows.
    pub damping: f64,
}

impl Default for NewtonSettings {
    fn default() -> Self {
        Self { precision_digits: 60, residual_target: 1e-40, max_iterations: 100, damping: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SettingsError {
    #[error("residual target {target:e} is below the precision floor 1e{floor}")]
    TargetBelowFloor { target: f64, floor: i64 },
    #[error("damping must lie in (0, 1]")]
    BadDamping,
    #[error("residual target must be positive")]
    NonPositiveTarget,
}

impl NewtonSettings {
    pub fn bits(&self) -> u32 {
        bits_for_digits(self.precision_digits)
    }

    /// The target must not ask for more than precision minus ten digits.
    pub fn validate(&self) -> Result<(), SettingsError> {
        if self.residual_target <= 0.0 || self.residual_target.is_nan() {
            return Err(SettingsError::NonPositiveTarget);
        }
        if !(self.damping > 0.0 && self.damping <= 1.0) {
            return Err(SettingsError::BadDamping);
        }
        let floor = -(i64::from(self.precision_digits)) + 10;
        if self.residual_target.log10() < floor as f64 - 1e-9 {
            return Err(SettingsError::TargetBelowFloor { target: self.residual_target, floor });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        assert!(NewtonSettings::default().validate().is_ok());
        let s = NewtonSettings { residual_target: 1e-55, ..Default::default() };
        assert!(matches!(s.validate(), Err(SettingsError::TargetBelowFloor { .. })));
        let s = NewtonSettings { damping: 0.0, ..Default::default() };
        assert_eq!(s.validate(), Err(SettingsError::BadDamping));
    }
}
