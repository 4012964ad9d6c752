use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::Rational;

/// A Lie homomorphism `ψ: n⁺ → ℚ`. It vanishes on `[n⁺, n⁺]`, so it is
/// determined by `ψ_1 = ψ(d_1)` and `ψ_2 = ψ(d_2)`; `ψ_k = 0` for `k ≥ 3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WhittakerFunctional {
    pub psi1: Rational,
    pub psi2: Rational,
}

impl WhittakerFunctional {
    pub fn new(psi1: Rational, psi2: Rational) -> Self {
        WhittakerFunctional { psi1, psi2 }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    /// `ψ(d_k)` for `k ≥ 1`.
    pub fn value(&self, k: i64) -> Rational {
        match k {
            1 => self.psi1.clone(),
            2 => self.psi2.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.psi1.is_zero() && self.psi2.is_zero()
    }

    pub fn as_functional(&self) -> NPlusFunctional {
        NPlusFunctional::from_values([(1, self.psi1.clone()), (2, self.psi2.clone())])
    }
}

impl fmt::Display for WhittakerFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.psi1, self.psi2)
    }
}

/// A finitely supported linear functional on `n⁺`, `k ↦ α(d_k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NPlusFunctional {
    values: BTreeMap<u32, Rational>,
}

impl NPlusFunctional {
    pub fn from_values(values: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        NPlusFunctional {
            values: values.into_iter().filter(|(k, v)| *k > 0 && !v.is_zero()).collect(),
        }
    }

    pub fn get(&self, k: u32) -> Rational {
        self.values.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.values.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_values(self.values.iter().map(|(&k, v)| (k, v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut values = self.values.clone();
        for (&k, v) in &other.values {
            *values.entry(k).or_insert_with(Rational::zero) += v;
        }
        Self::from_values(values)
    }

    /// `(iγ)(d_k) = k·γ_k`
    pub fn times_index(&self) -> Self {
        Self::from_values(self.values.iter().map(|(&k, v)| (k, v * Rational::from_integer(k.into()))))
    }

    pub fn is_one_at(&self, k: u32) -> bool {
        self.get(k).is_one()
    }
}

impl fmt::Display for NPlusFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.values.keys().next_back().copied().unwrap_or(2).max(2);
        let parts: Vec<String> = (1..=top).map(|k| self.get(k).to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn functional_values() {
        let psi = WhittakerFunctional::new(int(3), int(-1));
        assert_eq!(psi.value(1), int(3));
        assert_eq!(psi.value(2), int(-1));
        assert_eq!(psi.value(7), int(0));
        assert!(!psi.is_zero());
        assert!(WhittakerFunctional::zero().is_zero());
    }

    #[test]
    fn index_twist() {
        let psi = WhittakerFunctional::new(int(1), int(1)).as_functional();
        let i_psi = psi.times_index();
        assert_eq!(i_psi.get(1), int(1));
        assert_eq!(i_psi.get(2), int(2));
        assert_eq!(i_psi.to_string(), "(1, 2)");
    }
}
