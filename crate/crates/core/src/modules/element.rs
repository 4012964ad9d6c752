use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::error::ModuleError;
use super::family::{ModuleFamily, Seed};
use crate::algebra::rational::pow;
use crate::algebra::rewrite::{rewrite, StructureConstants, Virasoro};
use crate::algebra::{write_linear_combination, Partition, Rational, UeaElement};

/// Basis vector `d_{−λ} d_0^j ⊗ s_c` of an induced module, where `s_c` is
/// seed vector `c` (0-based). For `M(0,ξ)` this is `d_{−λ} w_j`; Verma
/// indices always have `j = 0`.
///
/// Ordered by filtration degree `F = |λ| + j`, then `λ`, then `j`, then `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub lambda: Partition,
    pub j: u32,
    pub component: usize,
}

impl BasisIndex {
    pub fn new(lambda: Partition, j: u32, component: usize) -> Self {
        BasisIndex { lambda, j, component }
    }

    pub fn generator(component: usize) -> Self {
        Self::new(Partition::empty(), 0, component)
    }

    /// `F = |λ| + j`
    pub fn filtration(&self) -> u32 {
        self.lambda.size() + self.j
    }

    /// The sorted word `d_{−λ_r} ⋯ d_{−λ_1} d_0^j`.
    pub fn letters(&self) -> Vec<i64> {
        let mut word: Vec<i64> = self.lambda.parts().iter().rev().map(|&p| -i64::from(p)).collect();
        word.extend(std::iter::repeat_n(0, self.j as usize));
        word
    }

    fn from_letters(word: &[i64], component: usize) -> Self {
        let j = word.iter().filter(|&&k| k == 0).count() as u32;
        let mut parts: Vec<u32> = word.iter().filter(|&&k| k < 0).map(|&k| (-k) as u32).collect();
        parts.sort_unstable();
        BasisIndex::new(Partition::new(parts).expect("parts are positive"), j, component)
    }

    /// The PBW monomial `d_{−λ} d_0^j`.
    pub fn monomial(&self) -> UeaElement {
        UeaElement::term(
            crate::algebra::PbwMonomial { neg: self.lambda.clone(), d0: self.j, pos: Partition::empty(), z: 0 },
            Rational::one(),
        )
    }

    fn is_valid_for(&self, family: &ModuleFamily) -> bool {
        self.component < family.components() && (family.has_free_d0() || self.j == 0)
    }
}

impl Ord for BasisIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.filtration()
            .cmp(&other.filtration())
            .then_with(|| self.lambda.cmp(&other.lambda))
            .then_with(|| self.j.cmp(&other.j))
            .then_with(|| self.component.cmp(&other.component))
    }
}

impl PartialOrd for BasisIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.lambda, self.j, self.component + 1)
    }
}

/// A finite combination of basis vectors of one module family.
#[derive(Clone, Debug)]
pub struct ModuleElement {
    family: Arc<ModuleFamily>,
    terms: BTreeMap<BasisIndex, Rational>,
}

impl PartialEq for ModuleElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_family(other) && self.terms == other.terms
    }
}

impl Eq for ModuleElement {}

impl ModuleElement {
    pub fn zero(family: &Arc<ModuleFamily>) -> Self {
        ModuleElement { family: Arc::clone(family), terms: BTreeMap::new() }
    }

    pub fn basis(family: &Arc<ModuleFamily>, index: BasisIndex) -> Result<Self, ModuleError> {
        Self::from_terms(family, [(index, Rational::one())])
    }

    /// The seed vector `c` (`w_0`, `v⁺`, `w`, `1 ⊗ v_{c+1}`, or `w_{c+1}`).
    pub fn generator(family: &Arc<ModuleFamily>, component: usize) -> Result<Self, ModuleError> {
        Self::basis(family, BasisIndex::generator(component))
    }

    pub fn from_terms(
        family: &Arc<ModuleFamily>,
        terms: impl IntoIterator<Item = (BasisIndex, Rational)>,
    ) -> Result<Self, ModuleError> {
        let mut out = Self::zero(family);
        for (index, c) in terms {
            if !index.is_valid_for(family) {
                return Err(ModuleError::BadIndex(index.to_string()));
            }
            out.add_term(index, c);
        }
        Ok(out)
    }

    pub fn family(&self) -> &Arc<ModuleFamily> {
        &self.family
    }

    pub fn terms(&self) -> &BTreeMap<BasisIndex, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, index: &BasisIndex) -> Rational {
        self.terms.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn same_family(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.family, &other.family) || self.family == other.family
    }

    /// Largest filtration degree in the support.
    pub fn filtration(&self) -> Option<u32> {
        self.terms.keys().map(BasisIndex::filtration).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(&self.family);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    /// Components `c` on which the element has nonzero projection.
    pub fn support_components(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.keys().map(|k| k.component).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn projection(&self, component: usize) -> Self {
        ModuleElement {
            family: Arc::clone(&self.family),
            terms: self.terms.iter().filter(|(k, _)| k.component == component).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    pub(crate) fn add_term(&mut self, index: BasisIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ModuleError> {
        if !self.same_family(other) {
            return Err(ModuleError::FamilyMismatch);
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    fn render_index(&self, index: &BasisIndex) -> String {
        let mut word = String::new();
        let mut parts = index.lambda.parts().iter().rev().peekable();
        while let Some(&p) = parts.next() {
            let mut e = 1;
            while parts.peek() == Some(&&p) {
                parts.next();
                e += 1;
            }
            word.push_str(&power(&format!("d[-{p}]"), e));
        }
        let c = index.component + 1;
        match &*self.family {
            ModuleFamily::Universal { .. } => format!("{word}w[{}]", index.j),
            ModuleFamily::Verma { .. } => format!("{word}v+"),
            ModuleFamily::Whittaker { .. } => format!("{word}{}w", d0_power(index.j)),
            ModuleFamily::DirectSum(_) => format!("{word}{}w[{c}]", d0_power(index.j)),
            ModuleFamily::Induced(_) => {
                let head = format!("{word}{}", d0_power(index.j));
                if head.is_empty() {
                    format!("v[{c}]")
                } else {
                    format!("{head} ⊗ v[{c}]")
                }
            }
        }
    }
}

fn power(base: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn d0_power(j: u32) -> String {
    power("d[0]", j)
}

/// Terms are written from the highest basis index down.
impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter().rev(), |_| false, |k| self.render_index(k))
    }
}

impl Add for &ModuleElement {
    type Output = ModuleElement;
    fn add(self, rhs: &ModuleElement) -> ModuleElement {
        self.checked_add(rhs).expect("adding elements of different families")
    }
}

impl Add for ModuleElement {
    type Output = ModuleElement;
    fn add(self, rhs: ModuleElement) -> ModuleElement {
        &self + &rhs
    }
}

impl Neg for &ModuleElement {
    type Output = ModuleElement;
    fn neg(self) -> ModuleElement {
        self.scale(&-Rational::one())
    }
}

impl Sub for &ModuleElement {
    type Output = ModuleElement;
    fn sub(self, rhs: &ModuleElement) -> ModuleElement {
        self + &-rhs
    }
}

impl Sub for ModuleElement {
    type Output = ModuleElement;
    fn sub(self, rhs: ModuleElement) -> ModuleElement {
        &self - &rhs
    }
}

/// The action `u·m`.
pub fn act(u: &UeaElement, m: &ModuleElement) -> ModuleElement {
    act_with(&Virasoro, u, m)
}

/// The action `u·m` with the bracket replaced by `rules`.
pub fn act_with<S: StructureConstants + ?Sized>(rules: &S, u: &UeaElement, m: &ModuleElement) -> ModuleElement {
    let family = &*m.family;
    let mut input = Vec::new();
    for (mono, cu) in u.terms() {
        let mut head = mono.letters();
        let head_len = head.len();
        for (index, cm) in &m.terms {
            head.truncate(head_len);
            head.extend(index.letters());
            let coeff = cu * cm * pow(family.xi(index.component), mono.z);
            input.push((head.clone(), index.component, coeff));
        }
    }
    let reduced = rewrite(rules, &Seed(family), input);
    let mut out = ModuleElement::zero(&m.family);
    for ((word, component), c) in reduced {
        out.add_term(BasisIndex::from_letters(&word, component), c);
    }
    out
}

/// Every basis index with `F ≤ level`, in ascending [`BasisIndex`] order.
pub fn enumerate_basis(family: &ModuleFamily, level: u32) -> Vec<BasisIndex> {
    let mut out = Vec::new();
    for lambda in Partition::up_to_size(level) {
        let max_j = if family.has_free_d0() { level - lambda.size() } else { 0 };
        for j in 0..=max_j {
            for c in 0..family.components() {
                out.push(BasisIndex::new(lambda.clone(), j, c));
            }
        }
    }
    out.sort();
    out
}

/// The map `V_N → V` determined by `1 ⊗ v_i ↦ w_i`.
pub fn universal_map(x: &ModuleElement, images: &[ModuleElement]) -> Result<ModuleElement, ModuleError> {
    let ModuleFamily::Induced(n) = &*x.family else {
        return Err(ModuleError::FamilyMismatch);
    };
    if images.len() != n.dim() {
        return Err(ModuleError::ComponentCountMismatch { expected: n.dim(), found: images.len() });
    }
    let Some(first) = images.first() else {
        return Err(ModuleError::EmptyModule);
    };
    if images.iter().any(|w| !w.same_family(first)) {
        return Err(ModuleError::FamilyMismatch);
    }
    for w in images {
        for c in w.support_components() {
            let target = w.family.xi(c);
            if target != n.xi() {
                return Err(ModuleError::CentralCharacterMismatch {
                    source_xi: n.xi().to_string(),
                    target_xi: target.to_string(),
                });
            }
        }
    }
    let mut out = ModuleElement::zero(&first.family);
    for (index, c) in &x.terms {
        let b = BasisIndex::new(index.lambda.clone(), index.j, 0).monomial().scale(c);
        out = &out + &act(&b, &images[index.component]);
    }
    Ok(out)
}
