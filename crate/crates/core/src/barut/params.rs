use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BarutParams {
    pub a: f64,
    pub b: f64,
    #[serde(default)]
    pub b1: f64,
    #[serde(default)]
    pub b2: f64,
    pub m: f64,
}

/// (α₂, κ) of p̂ − α₂p² − κ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CanonicalParams {
    pub alpha2: f64,
    pub kappa: f64,
}

impl BarutParams {
    pub fn new(a: f64, b: f64, m: f64) -> Result<Self> {
        Self::third_order(a, b, 0.0, 0.0, m)
    }

    pub fn third_order(a: f64, b: f64, b1: f64, b2: f64, m: f64) -> Result<Self> {
        let p = Self { a, b, b1, b2, m };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.m > 0.0) {
            return Err(Error::NonPositiveMass(self.m));
        }
        if self.a == 0.0 || !self.a.is_finite() {
            return Err(Error::ZeroCoupling);
        }
        for (name, v) in [("b", self.b), ("b1", self.b1), ("b2", self.b2)] {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!("{name} must be finite")));
            }
        }
        Ok(())
    }
}

/// α₂ = a/2m, κ = (1 − b²)m/2a.
pub fn param_map(p: &BarutParams) -> Result<CanonicalParams> {
    p.validate()?;
    Ok(CanonicalParams { alpha2: p.a / (2.0 * p.m), kappa: (1.0 - p.b * p.b) * p.m / (2.0 * p.a) })
}

/// Inverse of [`param_map`] at fixed m, taking b ≥ 0.
pub fn param_map_inverse(c: &CanonicalParams, m: f64) -> Result<BarutParams> {
    if !(m > 0.0) {
        return Err(Error::NonPositiveMass(m));
    }
    if c.alpha2 == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    let a = 2.0 * m * c.alpha2;
    let b2 = 1.0 - 4.0 * c.alpha2 * c.kappa;
    if b2 < 0.0 {
        return Err(Error::InvalidParameter(format!("4α₂κ = {} exceeds 1; masses would be complex", 1.0 - b2)));
    }
    BarutParams::new(a, b2.sqrt(), m)
}

/// α₂ = (1/m)(2α/3)/(1 + 4α/3), the value fixed by an anomalous moment of 4α/3.
pub fn alpha2_physical(m: f64, alpha: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(Error::NonPositiveMass(m));
    }
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!("fine-structure constant must be finite and ≥ 0, got {alpha}")));
    }
    Ok((2.0 * alpha / 3.0) / (1.0 + 4.0 * alpha / 3.0) / m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_spot_values() {
        let c = param_map(&BarutParams::new(1.0, 0.0, 1.0).unwrap()).unwrap();
        assert_eq!(c, CanonicalParams { alpha2: 0.5, kappa: 0.5 });
        let c = param_map(&BarutParams::new(1.0, 1.0, 3.0).unwrap()).unwrap();
        assert_eq!(c.kappa, 0.0);
    }

    #[test]
    fn round_trip() {
        let p = BarutParams::new(1.7, 0.35, 2.5).unwrap();
        let back = param_map_inverse(&param_map(&p).unwrap(), p.m).unwrap();
        assert!((back.a - p.a).abs() < 1e-14 && (back.b - p.b).abs() < 1e-14);
    }

    #[test]
    fn zero_coupling_rejected() {
        assert_eq!(BarutParams::new(0.0, 0.1, 1.0).unwrap_err(), Error::ZeroCoupling);
        assert_eq!(BarutParams::new(1.0, 0.1, -1.0).unwrap_err(), Error::NonPositiveMass(-1.0));
    }

    #[test]
    fn alpha2_values() {
        assert!((alpha2_physical(1.0, 1.5).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(alpha2_physical(1.0, 0.0).unwrap(), 0.0);
        // Oracle: (2/3)/137.03 / (1 + (4/3)/137.03) evaluated stepwise.
        let alpha = 1.0 / 137.03;
        let num = 2.0 / (3.0 * 137.03);
        let den = 1.0 + 4.0 / (3.0 * 137.03);
        assert!((alpha2_physical(1.0, alpha).unwrap() - num / den).abs() < 1e-17);
        assert!((alpha2_physical(1.0, alpha).unwrap() - 4.8182e-3).abs() < 1e-7);
    }
}
