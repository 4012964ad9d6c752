use num_traits::Zero;

use crate::algebra::rational::int;
use crate::algebra::Rational;
use crate::modules::{NPlusFunctional, WhittakerFunctional};

/// `ψ̃ = (ψ_1, −3ψ_1², 0, …)` and `iψ = (ψ_1, 2ψ_2, 0, …)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedFunctionals {
    pub tilde_psi: NPlusFunctional,
    pub i_psi: NPlusFunctional,
}

pub fn derived_functionals(psi: &WhittakerFunctional) -> DerivedFunctionals {
    let p1 = &psi.psi1;
    DerivedFunctionals {
        tilde_psi: NPlusFunctional::from_values([(1, p1.clone()), (2, int(-3) * p1 * p1)]),
        i_psi: psi.as_functional().times_index(),
    }
}

/// Whether `α ∈ ℂ·iψ`.
pub fn in_line_ipsi(alpha: &NPlusFunctional, psi: &WhittakerFunctional) -> bool {
    if alpha.support().any(|k| k >= 3) {
        return false;
    }
    let i_psi = derived_functionals(psi).i_psi;
    let (a1, a2) = (alpha.get(1), alpha.get(2));
    let (b1, b2) = (i_psi.get(1), i_psi.get(2));
    if b1.is_zero() && b2.is_zero() {
        return alpha.is_zero();
    }
    a1 * b2 - a2 * b1 == Rational::zero()
}

/// Coordinates `(c_0, c_1)` with `α = c_0·ψ̃ + c_1·iψ`. Defined when
/// `ψ_2 = 0 ≠ ψ_1` and `α` vanishes on `[n⁺, n⁺]`.
pub fn decompose_alpha(alpha: &NPlusFunctional, psi: &WhittakerFunctional) -> Option<(Rational, Rational)> {
    if !psi.psi2.is_zero() || psi.psi1.is_zero() || alpha.support().any(|k| k >= 3) {
        return None;
    }
    let p1 = &psi.psi1;
    let c0 = -alpha.get(2) / (int(3) * p1 * p1);
    let c1 = alpha.get(1) / p1 - &c0;
    Some((c0, c1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: i64, b: i64) -> NPlusFunctional {
        NPlusFunctional::from_values([(1, int(a)), (2, int(b))])
    }

    #[test]
    fn tilde_psi_values() {
        let d = derived_functionals(&WhittakerFunctional::new(int(1), int(0)));
        assert_eq!(d.tilde_psi, f(1, -3));
        assert_eq!(d.i_psi, f(1, 0));
    }

    #[test]
    fn membership() {
        let psi = WhittakerFunctional::new(int(1), int(1));
        assert!(in_line_ipsi(&f(2, 4), &psi));
        assert!(!in_line_ipsi(&f(1, 0), &psi));
        assert!(in_line_ipsi(&f(0, 0), &psi));
        assert!(in_line_ipsi(&f(0, 0), &WhittakerFunctional::zero()));
        assert!(!in_line_ipsi(&f(1, 0), &WhittakerFunctional::zero()));
        let with_third = NPlusFunctional::from_values([(1, int(2)), (2, int(4)), (3, int(1))]);
        assert!(!in_line_ipsi(&with_third, &psi));
    }

    #[test]
    fn coordinates_reconstruct_alpha() {
        let psi = WhittakerFunctional::new(int(2), int(0));
        let alpha = f(5, -7);
        let (c0, c1) = decompose_alpha(&alpha, &psi).unwrap();
        let d = derived_functionals(&psi);
        assert_eq!(d.tilde_psi.scale(&c0).add(&d.i_psi.scale(&c1)), alpha);
        assert_eq!(decompose_alpha(&alpha, &WhittakerFunctional::new(int(1), int(1))), None);
    }
}
