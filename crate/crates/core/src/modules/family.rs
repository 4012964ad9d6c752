use std::fmt;

use num_traits::Zero;

use super::error::ModuleError;
use super::functional::WhittakerFunctional;
use super::nplus::NPlusModule;
use crate::algebra::rewrite::Reduction;
use crate::algebra::Rational;

/// The module families the library can act on. Each is induced from a
/// finite-dimensional seed, so its elements are combinations of
/// `d_{−λ} d_0^j ⊗ s` over seed basis vectors `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleFamily {
    /// `M(0,ξ)`: `d_k w_0 = 0` for `k > 0`, `z w_0 = ξ w_0`, `w_j = d_0^j w_0`.
    Universal { xi: Rational },
    /// Lowest-weight Verma module `M(0,ξ,h)`: `d_0 v⁺ = h v⁺`.
    Verma { xi: Rational, h: Rational },
    /// `L(ψ,ξ)` generated by a Whittaker vector `w`, `ψ ≠ 0`.
    Whittaker { psi: WhittakerFunctional, xi: Rational },
    /// `V_N` induced from a valid finite-dimensional `n⁺ ⊕ ℂz`-module.
    Induced(NPlusModule),
    /// `L(ψ_1,ξ_1) ⊕ … ⊕ L(ψ_k,ξ_k)`.
    DirectSum(Vec<(WhittakerFunctional, Rational)>),
}

impl ModuleFamily {
    pub fn universal(xi: Rational) -> Self {
        ModuleFamily::Universal { xi }
    }

    pub fn verma(xi: Rational, h: Rational) -> Self {
        ModuleFamily::Verma { xi, h }
    }

    pub fn whittaker(psi: WhittakerFunctional, xi: Rational) -> Result<Self, ModuleError> {
        if psi.is_zero() {
            return Err(ModuleError::ZeroFunctional);
        }
        Ok(ModuleFamily::Whittaker { psi, xi })
    }

    pub fn induced(module: NPlusModule) -> Result<Self, ModuleError> {
        let report = module.validate();
        if !report.is_valid() {
            return Err(ModuleError::InvalidNPlusModule(report.reasons().join("; ")));
        }
        Ok(ModuleFamily::Induced(module))
    }

    pub fn direct_sum(summands: Vec<(WhittakerFunctional, Rational)>) -> Result<Self, ModuleError> {
        if summands.is_empty() {
            return Err(ModuleError::EmptyDirectSum);
        }
        if summands.iter().any(|(psi, _)| psi.is_zero()) {
            return Err(ModuleError::ZeroFunctional);
        }
        Ok(ModuleFamily::DirectSum(summands))
    }

    /// Number of seed basis vectors (generators over `U(n⁻ ⊕ ℂd_0)`).
    pub fn components(&self) -> usize {
        match self {
            ModuleFamily::Induced(n) => n.dim(),
            ModuleFamily::DirectSum(s) => s.len(),
            _ => 1,
        }
    }

    /// The scalar by which `z` acts on seed vector `c`.
    pub fn xi(&self, component: usize) -> &Rational {
        match self {
            ModuleFamily::Universal { xi } | ModuleFamily::Verma { xi, .. } | ModuleFamily::Whittaker { xi, .. } => xi,
            ModuleFamily::Induced(n) => n.xi(),
            ModuleFamily::DirectSum(s) => &s[component].1,
        }
    }

    /// Whether `d_0` acts freely (every family except the Verma module).
    pub fn has_free_d0(&self) -> bool {
        !matches!(self, ModuleFamily::Verma { .. })
    }

    /// The functional `ψ` with `d_k − ψ_k` locally nilpotent on the seed
    /// of component `c`, when the family has one.
    pub fn functional(&self, component: usize) -> Option<WhittakerFunctional> {
        match self {
            ModuleFamily::Whittaker { psi, .. } => Some(psi.clone()),
            ModuleFamily::Induced(n) => Some(n.psi()),
            ModuleFamily::DirectSum(s) => Some(s[component].0.clone()),
            ModuleFamily::Universal { .. } | ModuleFamily::Verma { .. } => Some(WhittakerFunctional::zero()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ModuleFamily::Universal { .. } => "universal",
            ModuleFamily::Verma { .. } => "verma",
            ModuleFamily::Whittaker { .. } => "whittaker",
            ModuleFamily::Induced(_) => "induced",
            ModuleFamily::DirectSum(_) => "direct-sum",
        }
    }
}

impl fmt::Display for ModuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleFamily::Universal { xi } => write!(f, "M(0, {xi})"),
            ModuleFamily::Verma { xi, h } => write!(f, "M(0, {xi}, {h})"),
            ModuleFamily::Whittaker { psi, xi } => write!(f, "L({psi}, {xi})"),
            ModuleFamily::Induced(n) => write!(f, "V_N (n = {}, xi = {}, psi = {})", n.dim(), n.xi(), n.psi()),
            ModuleFamily::DirectSum(s) => {
                let parts: Vec<String> = s.iter().map(|(psi, xi)| format!("L({psi}, {xi})")).collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

/// Defining relations of the seed, used by the rewrite engine. The tail is
/// the seed component index.
pub(crate) struct Seed<'a>(pub &'a ModuleFamily);

impl Reduction for Seed<'_> {
    type Tail = usize;

    fn central(&self, tail: &usize) -> (usize, Rational) {
        (*tail, self.0.xi(*tail).clone())
    }

    fn absorb(&self, letter: i64, tail: &usize) -> Option<Vec<(usize, Rational)>> {
        let c = *tail;
        let scalar = |v: Rational| if v.is_zero() { vec![] } else { vec![(c, v)] };
        match (self.0, letter) {
            (_, k) if k < 0 => None,
            (ModuleFamily::Verma { h, .. }, 0) => Some(scalar(h.clone())),
            (_, 0) => None,
            (ModuleFamily::Universal { .. } | ModuleFamily::Verma { .. }, _) => Some(vec![]),
            (ModuleFamily::Whittaker { psi, .. }, k) => Some(scalar(psi.value(k))),
            (ModuleFamily::DirectSum(s), k) => Some(scalar(s[c].0.value(k))),
            (ModuleFamily::Induced(n), k) => {
                let k = k as usize;
                Some(
                    (0..n.dim())
                        .map(|row| (row, n.action_entry(k, row, c)))
                        .filter(|(_, v)| !v.is_zero())
                        .collect(),
                )
            }
        }
    }
}
