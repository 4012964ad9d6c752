use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use super::error::WhittakerError;
use crate::algebra::UeaElement;
use crate::linalg::{self, SparseVec};
use crate::modules::{act, enumerate_basis, BasisIndex, ModuleElement, ModuleFamily, WhittakerFunctional};

/// A basis of the Whittaker vectors of filtration degree at most `level`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerBasis {
    pub family: Arc<ModuleFamily>,
    pub functional: WhittakerFunctional,
    pub level: u32,
    pub vectors: Vec<ModuleElement>,
}

impl WhittakerBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Solves `(d_1 − ψ_1)v = (d_2 − ψ_2)v = 0` over the span of basis vectors
/// with `F ≤ level`. These two conditions suffice since `d_1`, `d_2`
/// generate `n⁺`. The basis is in reduced echelon form: each vector has
/// coefficient 1 at its lowest basis index, where every other vector
/// vanishes.
pub fn whittaker_vectors(
    family: &Arc<ModuleFamily>,
    psi: &WhittakerFunctional,
    level: u32,
) -> Result<WhittakerBasis, WhittakerError> {
    let needs_nonzero = !matches!(**family, ModuleFamily::Universal { .. } | ModuleFamily::Verma { .. });
    if needs_nonzero && psi.is_zero() {
        return Err(WhittakerError::ZeroFunctional);
    }
    let basis = enumerate_basis(family, level);
    let position: BTreeMap<&BasisIndex, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();

    // rows[(generator, output index)] is one linear equation in the coefficients
    let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for (col, index) in basis.iter().enumerate() {
        let v = ModuleElement::basis(family, index.clone())?;
        for (g, k) in [(0usize, 1i64), (1, 2)] {
            let image = &act(&UeaElement::d(k), &v) - &v.scale(&psi.value(k));
            for (out, c) in image.terms() {
                let Some(&row) = position.get(out) else {
                    return Err(WhittakerError::LevelNotPreserved { generator: k, level, index: out.to_string() });
                };
                rows.entry((g, row)).or_default().insert(col, c.clone());
            }
        }
    }
    let vectors = linalg::nullspace(rows.values(), basis.len())
        .into_iter()
        .map(|v| ModuleElement::from_terms(family, v.into_iter().map(|(i, c)| (basis[i].clone(), c))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WhittakerBasis { family: Arc::clone(family), functional: psi.clone(), level, vectors })
}

/// `(L, dim)` for `L = 0, …, max_level`.
pub fn level_sweep(
    family: &Arc<ModuleFamily>,
    psi: &WhittakerFunctional,
    max_level: u32,
) -> Result<Vec<(u32, usize)>, WhittakerError> {
    (0..=max_level).map(|l| Ok((l, whittaker_vectors(family, psi, l)?.dim()))).collect()
}

/// Whether `(d_k − ψ_k)v = 0`.
pub(crate) fn is_whittaker_for(v: &ModuleElement, psi: &WhittakerFunctional, k: i64) -> bool {
    let image = &act(&UeaElement::d(k), v) - &v.scale(&psi.value(k));
    image.is_zero()
}

pub(crate) fn lowest_coefficient_is_one(v: &ModuleElement) -> bool {
    v.terms().values().next().is_some_and(One::is_one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    use crate::algebra::rational::{frac, int};
    use crate::algebra::Rational;
    use crate::algebra::Partition;
    use crate::modules::{Matrix, NPlusModule};

    fn psi(a: Rational, b: Rational) -> WhittakerFunctional {
        WhittakerFunctional::new(a, b)
    }

    fn v_n2(p: &WhittakerFunctional, alpha: (Rational, Rational)) -> Arc<ModuleFamily> {
        let d1 = Matrix::from_rows(vec![vec![p.psi1.clone(), alpha.0], vec![int(0), p.psi1.clone()]]).unwrap();
        let d2 = Matrix::from_rows(vec![vec![p.psi2.clone(), alpha.1], vec![int(0), p.psi2.clone()]]).unwrap();
        Arc::new(ModuleFamily::induced(NPlusModule::new(int(0), d1, d2).unwrap()).unwrap())
    }

    fn idx(parts: &[u32], j: u32, c: usize) -> BasisIndex {
        BasisIndex::new(Partition::new(parts.to_vec()).unwrap(), j, c)
    }

    #[test]
    fn simple_whittaker_module_has_one_vector() {
        let p = psi(int(1), int(1));
        let family = Arc::new(ModuleFamily::whittaker(p.clone(), int(0)).unwrap());
        let basis = whittaker_vectors(&family, &p, 5).unwrap();
        assert_eq!(basis.vectors, vec![ModuleElement::generator(&family, 0).unwrap()]);
    }

    #[test]
    fn generic_superdiagonal_gives_one_vector() {
        let p = psi(int(1), int(1));
        let family = v_n2(&p, (int(1), int(0)));
        let basis = whittaker_vectors(&family, &p, 4).unwrap();
        assert_eq!(basis.vectors, vec![ModuleElement::generator(&family, 0).unwrap()]);
    }

    #[test]
    fn superdiagonal_on_the_line_gives_two_vectors() {
        let p = psi(int(1), int(1));
        let family = v_n2(&p, (int(2), int(4)));
        let basis = whittaker_vectors(&family, &p, 3).unwrap();
        assert_eq!(basis.dim(), 2);
        let v1 = ModuleElement::generator(&family, 0).unwrap();
        let v2 = ModuleElement::generator(&family, 1).unwrap();
        let d0v1 = ModuleElement::basis(&family, idx(&[], 1, 0)).unwrap();
        assert_eq!(basis.vectors[1], &v2 - &d0v1.scale(&int(2)));
        assert_eq!(basis.vectors[0], v1);
    }

    #[test]
    fn psi2_zero_second_vector_formula() {
        let p = psi(int(1), int(0));
        let (c0, c1) = (frac(1, 3), int(-2));
        // α = c0·ψ̃ + c1·iψ with ψ̃ = (1, −3), iψ = (1, 0)
        let alpha = (&c0 + &c1, &c0 * int(-3));
        let family = v_n2(&p, alpha);
        let basis = whittaker_vectors(&family, &p, 3).unwrap();
        assert_eq!(basis.dim(), 2);
        let e = |parts: &[u32], j, c| ModuleElement::basis(&family, idx(parts, j, c)).unwrap();
        let expected = &(&e(&[], 0, 1) - &(&e(&[], 2, 0) - &e(&[1], 0, 0).scale(&p.psi1)).scale(&c0)) - &e(&[], 1, 0).scale(&c1);
        assert_eq!(basis.vectors[1], expected);
    }

    #[test]
    fn vectors_satisfy_all_modes() {
        let p = psi(int(2), int(-1));
        let family = v_n2(&p, (int(2), int(-4)));
        for v in whittaker_vectors(&family, &p, 3).unwrap().vectors {
            assert!(lowest_coefficient_is_one(&v));
            for k in 1..=6 {
                assert!(is_whittaker_for(&v, &p, k));
            }
        }
    }

    #[test]
    fn zero_functional_is_rejected_for_whittaker_families() {
        let p = psi(int(1), int(1));
        let family = v_n2(&p, (int(1), int(0)));
        assert_eq!(whittaker_vectors(&family, &WhittakerFunctional::zero(), 2), Err(WhittakerError::ZeroFunctional));
        let universal = Arc::new(ModuleFamily::universal(int(0)));
        assert!(whittaker_vectors(&universal, &WhittakerFunctional::zero(), 2).is_ok());
    }

    #[test]
    fn verma_singular_vectors() {
        let family = Arc::new(ModuleFamily::verma(int(0), int(0)));
        let basis = whittaker_vectors(&family, &WhittakerFunctional::zero(), 2).unwrap();
        let found: Vec<BasisIndex> = basis.vectors.iter().flat_map(|v| v.terms().keys().cloned()).collect();
        assert!(found.contains(&idx(&[1], 0, 0)));
        assert!(found.contains(&idx(&[], 0, 0)));
    }

    #[test]
    fn sweep_is_monotone() {
        let p = psi(int(1), int(0));
        let family = v_n2(&p, (int(1), int(1)));
        let sweep = level_sweep(&family, &p, 4).unwrap();
        assert!(sweep.windows(2).all(|w| w[0].1 <= w[1].1));
        assert_eq!(sweep.last().unwrap().1, 2);
        assert!(sweep.iter().all(|(_, d)| !d.is_zero()));
    }
}
