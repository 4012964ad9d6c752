use std::collections::BTreeSet;

use super::error::WhittakerError;
use crate::algebra::{poly_gcd, CentralPolynomial, Rational};

/// `Hom(U(g)v, U(g)w) ≅ ℂ[z]/⟨g⟩` for cyclic modules whose generators have
/// annihilators `p(z)`, `q(z)` in the centre, `g = gcd(p, q)`. Every map
/// sends `v ↦ s(z)·(q/g)·w` for some `s`; `multiplier` is `q/g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpaceData {
    pub p: CentralPolynomial,
    pub q: CentralPolynomial,
    pub gcd: CentralPolynomial,
    pub dimension: usize,
    pub multiplier: CentralPolynomial,
}

fn require_monic(p: &CentralPolynomial) -> Result<(), WhittakerError> {
    if p.is_zero() || !p.is_monic() {
        return Err(WhittakerError::NotMonic(p.to_string()));
    }
    Ok(())
}

pub fn hom_space(p: &CentralPolynomial, q: &CentralPolynomial) -> Result<HomSpaceData, WhittakerError> {
    require_monic(p)?;
    require_monic(q)?;
    let gcd = poly_gcd(p, q)?;
    let (multiplier, _) = q.div_rem(&gcd)?;
    Ok(HomSpaceData {
        p: p.clone(),
        q: q.clone(),
        dimension: gcd.degree().unwrap_or(0),
        gcd,
        multiplier,
    })
}

/// The map `v ↦ r(z)·w` is surjective iff `gcd(r, q) = 1`.
pub fn is_surjective_hom(r: &CentralPolynomial, q: &CentralPolynomial) -> Result<bool, WhittakerError> {
    require_monic(q)?;
    Ok(poly_gcd(r, q)?.is_one())
}

/// `V = ⊕ V_i` with `(z − ξ_i)^{a_i}` annihilating the generator of `V_i`
/// and `ℓ(V_i) = a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralDecomposition {
    pub factors: Vec<(Rational, u32)>,
}

impl CentralDecomposition {
    pub fn lengths(&self) -> Vec<u32> {
        self.factors.iter().map(|(_, a)| *a).collect()
    }

    pub fn total_length(&self) -> u32 {
        self.factors.iter().map(|(_, a)| a).sum()
    }

    pub fn polynomial(&self) -> CentralPolynomial {
        CentralPolynomial::from_factors(&self.factors)
    }

    pub fn summand_annihilator(&self, i: usize) -> CentralPolynomial {
        CentralPolynomial::from_factors(&self.factors[i..=i])
    }

    /// `dim Hom(V_i, V_j)`.
    pub fn hom_dimension(&self, i: usize, j: usize) -> usize {
        hom_space(&self.summand_annihilator(i), &self.summand_annihilator(j))
            .map(|h| h.dimension)
            .unwrap_or(0)
    }
}

pub fn central_decomposition(factors: &[(Rational, u32)]) -> Result<CentralDecomposition, WhittakerError> {
    if factors.is_empty() {
        return Err(WhittakerError::NoFactors);
    }
    let mut seen = BTreeSet::new();
    for (xi, a) in factors {
        if *a == 0 {
            return Err(WhittakerError::ZeroMultiplicity);
        }
        if !seen.insert(xi) {
            return Err(WhittakerError::RepeatedXi(xi.to_string()));
        }
    }
    Ok(CentralDecomposition { factors: factors.to_vec() })
}
