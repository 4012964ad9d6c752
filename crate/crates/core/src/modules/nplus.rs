//! Finite-dimensional `n⁺ ⊕ ℂz`-modules given by the matrices of `d_1` and
//! `d_2`, and their decomposition into generalized `ψ`-eigenspaces.

use std::fmt;

use num_traits::Zero;

use super::error::ModuleError;
use super::functional::{NPlusFunctional, WhittakerFunctional};
use super::matrix::Matrix;
use crate::algebra::rational::int;
use crate::algebra::{CentralPolynomial, Rational};
use crate::linalg::{self, SparseVec};

/// `D_3, …, D_{2n+2}` from `D_{k+1} = [D_1, D_k]/(1−k)`.
pub fn derive_positive_actions(d1: &Matrix, d2: &Matrix) -> Vec<Matrix> {
    let n = d1.dim();
    let mut out: Vec<Matrix> = Vec::with_capacity(2 * n);
    let mut current = d2.clone();
    for k in 2..2 * n as i64 + 2 {
        let next = d1.commutator(&current).scale(&(int(1) / int(1 - k)));
        out.push(next.clone());
        current = next;
    }
    out
}

/// A module `N` of dimension `n` with basis `v_1, …, v_n`. Column `j` of
/// `D_k` holds the coordinates of `d_k v_j`; `z` acts by `ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NPlusModule {
    xi: Rational,
    actions: Vec<Matrix>,
}

/// A relation `[D_i, D_j] = (i−j)D_{i+j}` that fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationViolation {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = self.i as i64 - self.j as i64;
        write!(f, "[D{}, D{}] = {}*D{}", self.i, self.j, coeff, self.i + self.j)
    }
}

/// Outcome of [`NPlusModule::validate`]. Every failed check is listed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidityReport {
    pub dimension: usize,
    pub relation_violations: Vec<RelationViolation>,
    /// Generators (1 or 2) whose diagonal is not constant.
    pub nonconstant_diagonals: Vec<usize>,
    /// Generators (1 or 2) with a nonzero entry below the diagonal.
    pub non_triangular: Vec<usize>,
    /// Derived `D_k`, `k ≥ max(n+1, 3)`, that fail to vanish.
    pub nonvanishing: Vec<usize>,
}

impl ValidityReport {
    /// `N` is an `n⁺`-module: every relation holds and high modes vanish.
    pub fn is_representation(&self) -> bool {
        self.relation_violations.is_empty() && self.nonvanishing.is_empty()
    }

    /// A representation in flag form as well.
    pub fn is_valid(&self) -> bool {
        self.is_representation() && self.nonconstant_diagonals.is_empty() && self.non_triangular.is_empty()
    }

    pub fn reasons(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .relation_violations
            .iter()
            .map(|v| format!("relation {v} violated"))
            .collect();
        out.extend(self.nonvanishing.iter().map(|k| format!("D{k} does not vanish")));
        out.extend(self.nonconstant_diagonals.iter().map(|k| format!("diagonal of D{k} is not constant")));
        out.extend(self.non_triangular.iter().map(|k| format!("D{k} is not upper triangular")));
        out
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid (n = {})", self.dimension);
        }
        write!(f, "invalid (n = {}): {}", self.dimension, self.reasons().join("; "))
    }
}

impl NPlusModule {
    /// Stores `D_1`, `D_2` and the derived higher modes. No validity check
    /// is made here; see [`NPlusModule::validate`].
    pub fn new(xi: Rational, d1: Matrix, d2: Matrix) -> Result<Self, ModuleError> {
        if d1.dim() != d2.dim() {
            return Err(ModuleError::DimensionMismatch { expected: d1.dim(), found: d2.dim() });
        }
        if d1.dim() == 0 {
            return Err(ModuleError::EmptyModule);
        }
        let mut actions = vec![d1.clone(), d2.clone()];
        actions.extend(derive_positive_actions(&d1, &d2));
        Ok(NPlusModule { xi, actions })
    }

    /// Like [`NPlusModule::new`] but rejects anything that fails validation.
    pub fn new_valid(xi: Rational, d1: Matrix, d2: Matrix) -> Result<Self, ModuleError> {
        let module = Self::new(xi, d1, d2)?;
        let report = module.validate();
        if !report.is_valid() {
            return Err(ModuleError::InvalidNPlusModule(report.reasons().join("; ")));
        }
        Ok(module)
    }

    pub fn dim(&self) -> usize {
        self.actions[0].dim()
    }

    pub fn xi(&self) -> &Rational {
        &self.xi
    }

    pub fn d1(&self) -> &Matrix {
        &self.actions[0]
    }

    pub fn d2(&self) -> &Matrix {
        &self.actions[1]
    }

    /// The matrix of `d_k` for `k ≥ 1`; zero beyond the derived range.
    pub fn action(&self, k: usize) -> Matrix {
        match k {
            0 => panic!("d_0 does not act on N"),
            k if k <= self.actions.len() => self.actions[k - 1].clone(),
            _ => Matrix::zeros(self.dim()),
        }
    }

    pub(crate) fn action_entry(&self, k: usize, row: usize, col: usize) -> Rational {
        match self.actions.get(k.wrapping_sub(1)) {
            Some(m) => m[(row, col)].clone(),
            None => Rational::zero(),
        }
    }

    /// `ψ = (D_1[0][0], D_2[0][0])`, the functional by which `n⁺` acts on `v_1`.
    pub fn psi(&self) -> WhittakerFunctional {
        WhittakerFunctional::new(self.d1()[(0, 0)].clone(), self.d2()[(0, 0)].clone())
    }

    /// `α(i, j)` for `1 ≤ i < j ≤ n`: `k ↦ D_k[i][j]` (1-based).
    pub fn alpha(&self, i: usize, j: usize) -> NPlusFunctional {
        NPlusFunctional::from_values(
            self.actions
                .iter()
                .enumerate()
                .map(|(k, m)| (k as u32 + 1, m[(i - 1, j - 1)].clone())),
        )
    }

    /// The functionals `α(k, k+1)`, `k = 1, …, n−1`.
    pub fn superdiagonal(&self) -> Vec<NPlusFunctional> {
        (1..self.dim()).map(|k| self.alpha(k, k + 1)).collect()
    }

    pub fn validate(&self) -> ValidityReport {
        let n = self.dim();
        let top = 2 * n + 2;
        let mut report = ValidityReport { dimension: n, ..Default::default() };
        for i in 1..top {
            for j in i + 1..=top - i {
                let lhs = self.action(i).commutator(&self.action(j));
                let rhs = self.action(i + j).scale(&int(i as i64 - j as i64));
                if lhs != rhs {
                    report.relation_violations.push(RelationViolation { i, j });
                }
            }
        }
        for k in (n + 1).max(3)..=top {
            if !self.action(k).is_zero() {
                report.nonvanishing.push(k);
            }
        }
        for k in 1..=2 {
            let m = self.action(k);
            if (1..n).any(|i| m[(i, i)] != m[(0, 0)]) {
                report.nonconstant_diagonals.push(k);
            }
            if !m.is_upper_triangular() {
                report.non_triangular.push(k);
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}

/// One summand of [`psi_decompose`]: the functional and a basis (as
/// coordinate columns) of its generalized eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiBlock {
    pub functional: WhittakerFunctional,
    pub basis: Vec<Vec<Rational>>,
}

impl PsiBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn rational_spectrum(m: &Matrix) -> Result<Vec<Rational>, ModuleError> {
    let roots = CentralPolynomial::new(m.characteristic_polynomial()).rational_roots();
    let total: u32 = roots.iter().map(|(_, mult)| mult).sum();
    if total as usize != m.dim() {
        return Err(ModuleError::NonRationalSpectrum);
    }
    Ok(roots.into_iter().map(|(r, _)| r).collect())
}

fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let rows: Vec<SparseVec> = basis.iter().map(|b| linalg::sparse(b)).collect();
    let before = linalg::rank(rows.iter());
    let mut extended = rows;
    extended.push(linalg::sparse(v));
    linalg::rank(extended.iter()) == before
}

/// Splits `N` into simultaneous generalized eigenspaces of `(D_1, D_2)`,
/// ordered by `(ψ_1, ψ_2)`. Accepts any representation of `n⁺`, not only
/// flag-form ones; the spectrum of `D_1` and `D_2` must be rational.
pub fn psi_decompose(module: &NPlusModule) -> Result<Vec<PsiBlock>, ModuleError> {
    let report = module.validate();
    if !report.is_representation() {
        return Err(ModuleError::InvalidNPlusModule(report.reasons().join("; ")));
    }
    let n = module.dim();
    let exp = n as u32;
    let (d1, d2) = (module.d1(), module.d2());
    let shifted = |m: &Matrix, c: &Rational| (m - &Matrix::scalar(n, c)).pow(exp);

    let mut blocks = Vec::new();
    for a in rational_spectrum(d1)? {
        let p1 = shifted(d1, &a);
        for b in rational_spectrum(d2)? {
            let p2 = shifted(d2, &b);
            let mut rows: Vec<SparseVec> = p1.rows().iter().map(|r| linalg::sparse(r)).collect();
            rows.extend(p2.rows().iter().map(|r| linalg::sparse(r)));
            let basis: Vec<Vec<Rational>> = linalg::nullspace(rows.iter(), n)
                .into_iter()
                .map(|v| (0..n).map(|i| v.get(&i).cloned().unwrap_or_else(Rational::zero)).collect())
                .collect();
            if !basis.is_empty() {
                blocks.push(PsiBlock { functional: WhittakerFunctional::new(a.clone(), b.clone()), basis });
            }
        }
    }

    let all: Vec<SparseVec> = blocks.iter().flat_map(|b| b.basis.iter().map(|v| linalg::sparse(v))).collect();
    if all.len() != n || linalg::rank(all.iter()) != n {
        return Err(ModuleError::NotDecomposable);
    }
    for block in &blocks {
        for k in 1..=2 * n + 2 {
            let m = module.action(k);
            let psi_k = block.functional.value(k as i64);
            let nil = shifted(&m, &psi_k);
            for v in &block.basis {
                if !in_span(&block.basis, &m.apply(v)) || nil.apply(v).iter().any(|x| !x.is_zero()) {
                    return Err(ModuleError::NotDecomposable);
                }
            }
        }
    }
    Ok(blocks)
}
