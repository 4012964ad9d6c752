use std::sync::Arc;

use num_traits::Zero;

use super::error::WhittakerError;
use super::functionals::in_line_ipsi;
use super::solver::whittaker_vectors;
use crate::modules::{ModuleFamily, NPlusModule};

/// Predictions about `V_N` from its Whittaker vectors and superdiagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    /// `dim Wh_ψ(V_N)` among vectors with `F ≤ level`.
    pub dim_wh: usize,
    pub level: u32,
    /// `ℓ(V_N) = dim N`.
    pub length: usize,
    /// `|W|`, the number of superdiagonal functionals `α(k,k+1) ∈ ℂ·iψ`.
    pub w_count: usize,
    pub is_uniserial_predicted: bool,
    /// Complete reducibility holds exactly when `dim Wh = ℓ`.
    pub is_completely_reducible_predicted: bool,
    /// `1 ≤ dim Wh ≤ ℓ`, and `dim Wh ≤ |W| + 1` when `ψ_2 ≠ 0` and `n ≥ 2`.
    pub bound_ok: bool,
}

pub fn structure_predicates(module: &NPlusModule, level: u32) -> Result<StructureReport, WhittakerError> {
    let family = Arc::new(ModuleFamily::induced(module.clone())?);
    let psi = module.psi();
    if psi.is_zero() {
        return Err(WhittakerError::ZeroFunctional);
    }
    let n = module.dim();
    let dim_wh = whittaker_vectors(&family, &psi, level)?.dim();
    let w_count = module.superdiagonal().iter().filter(|a| in_line_ipsi(a, &psi)).count();
    let is_uniserial_predicted = if psi.psi2.is_zero() { n < 2 } else { w_count == 0 };
    let mut bound_ok = (1..=n).contains(&dim_wh);
    if !psi.psi2.is_zero() && n >= 2 {
        bound_ok &= dim_wh <= w_count + 1;
    }
    Ok(StructureReport {
        dim_wh,
        level,
        length: n,
        w_count,
        is_uniserial_predicted,
        is_completely_reducible_predicted: dim_wh == n,
        bound_ok,
    })
}
