use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// m_μ = m_e(1 + 3/(2α)).
pub fn muon_mass(m_e: f64, alpha: f64) -> Result<f64> {
    tau_mass_with(m_e, alpha, &[1])
}

/// M_τ = M_e(1 + (3/2)α⁻¹ Σ n⁴) over n ∈ {1, 2}.
pub fn tau_mass(m_e: f64, alpha: f64) -> Result<f64> {
    tau_mass_with(m_e, alpha, &[1, 2])
}

/// M_e(1 + (3/2)α⁻¹ Σ_{n ∈ ns} n⁴).
pub fn tau_mass_with(m_e: f64, alpha: f64, ns: &[u32]) -> Result<f64> {
    if !(m_e > 0.0) {
        return Err(Error::NonPositiveMass(m_e));
    }
    if !(alpha > 0.0) {
        return Err(Error::InvalidParameter(format!("fine-structure constant must be positive, got {alpha}")));
    }
    let weight: f64 = ns.iter().map(|&n| (n as f64).powi(4)).sum();
    Ok(m_e * (1.0 + 1.5 / alpha * weight))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LeptonTable {
    pub electron: f64,
    pub muon: f64,
    pub tau: f64,
}

pub fn lepton_table(m_e: f64, alpha: f64) -> Result<LeptonTable> {
    Ok(LeptonTable { electron: m_e, muon: muon_mass(m_e, alpha)?, tau: tau_mass(m_e, alpha)? })
}
