use std::cmp::Reverse;

use num_traits::One;

use super::error::WhittakerError;
use crate::algebra::{CentralPolynomial, Partition, PbwMonomial, UeaElement};
use crate::modules::{act, ModuleElement, ModuleFamily};

/// The pair `(γ, j)` chosen by [`extract_wxi`]: among support terms
/// `d_{−γ} w_j` with `|γ|` maximal, the one maximizing `#γ + j`, ties going
/// to the lexicographically smallest `γ`, then the smallest `j`.
pub fn extract_wxi_choice(v: &ModuleElement) -> Result<(Partition, u32), WhittakerError> {
    if !matches!(**v.family(), ModuleFamily::Universal { .. }) {
        return Err(WhittakerError::WrongFamily { expected: "M(0, xi)" });
    }
    let top = v.terms().keys().map(|k| k.lambda.size()).max().ok_or(WhittakerError::ZeroElement)?;
    let chosen = v
        .terms()
        .keys()
        .filter(|k| k.lambda.size() == top)
        .min_by_key(|k| (Reverse(k.lambda.len() as u32 + k.j), k.lambda.clone(), k.j))
        .expect("support is nonempty");
    Ok((chosen.lambda.clone(), chosen.j))
}

/// Moves a nonzero `v ∈ M(0,ξ)` into `W_ξ = span{w_j}` by applying
/// `d_γ = d_{γ_1} ⋯ d_{γ_r}` for the pair of [`extract_wxi_choice`].
pub fn extract_wxi(v: &ModuleElement) -> Result<ModuleElement, WhittakerError> {
    let (gamma, _) = extract_wxi_choice(v)?;
    let d_gamma = UeaElement::term(
        PbwMonomial { neg: Partition::empty(), d0: 0, pos: gamma, z: 0 },
        One::one(),
    );
    Ok(act(&d_gamma, v))
}

/// The monic generator of `Ann_{ℂ[z]}(w)`: the lcm of `z − ξ_c` over the
/// components on which `w` is nonzero.
pub fn annihilator_in_z(w: &ModuleElement) -> Result<CentralPolynomial, WhittakerError> {
    if w.is_zero() {
        return Err(WhittakerError::ZeroElement);
    }
    Ok(w
        .support_components()
        .into_iter()
        .map(|c| CentralPolynomial::linear(w.family().xi(c)))
        .fold(CentralPolynomial::one(), |acc, f| acc.lcm(&f)))
}
