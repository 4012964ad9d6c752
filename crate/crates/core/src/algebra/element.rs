use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Generator, PbwMonomial};
use super::rational::Rational;
use super::rewrite::{rewrite, FreeAlgebra, StructureConstants, Virasoro};

/// A finite rational linear combination of PBW monomials. No stored
/// coefficient is ever zero, so structural equality is algebraic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::term(PbwMonomial::one(), c)
    }

    pub fn term(m: PbwMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        UeaElement { terms }
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(PbwMonomial::generator(g), Rational::one())
    }

    /// `d_k`
    pub fn d(k: i64) -> Self {
        Self::generator(Generator::D(k))
    }

    pub fn z() -> Self {
        Self::generator(Generator::Z)
    }

    pub fn terms(&self) -> &BTreeMap<PbwMonomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UeaElement {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Returns `Some(weight)` when every monomial has the same weight.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut weights = self.terms.keys().map(PbwMonomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// Product under caller-supplied structure constants.
    pub fn multiply_with<S: StructureConstants + ?Sized>(&self, other: &Self, rules: &S) -> Self {
        let mut words = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut word = a.letters();
                word.extend(b.letters());
                words.push((word, a.z + b.z, ca * cb));
            }
        }
        from_rewritten(rewrite(rules, &FreeAlgebra, words))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = multiply(&acc, self);
        }
        acc
    }

    /// `[self, other]`
    pub fn commutator(&self, other: &Self) -> Self {
        multiply(self, other) - multiply(other, self)
    }

    /// Reads off the element as a polynomial in `z` when no `d` occurs.
    pub fn as_z_polynomial(&self) -> Option<Vec<Rational>> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            if m.degree() != m.z as usize {
                return None;
            }
            let e = m.z as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] = c.clone();
        }
        Some(coeffs)
    }
}

fn from_rewritten(map: BTreeMap<(Vec<i64>, u32), Rational>) -> UeaElement {
    UeaElement {
        terms: map
            .into_iter()
            .map(|((word, z), c)| (PbwMonomial::from_sorted_letters(&word, z), c))
            .collect(),
    }
}

/// `[d_k, d_j]` in normal form.
pub fn bracket(k: i64, j: i64) -> UeaElement {
    let (structure, central) = Virasoro.bracket(k, j);
    UeaElement::d(k + j).scale(&structure) + UeaElement::z().scale(&central)
}

/// Normal-orders the product of a word of generators.
pub fn normal_order(word: &[Generator]) -> UeaElement {
    normal_order_with(word, &Virasoro)
}

pub fn normal_order_with<S: StructureConstants + ?Sized>(word: &[Generator], rules: &S) -> UeaElement {
    let letters: Vec<i64> = word
        .iter()
        .filter_map(|g| match g {
            Generator::D(k) => Some(*k),
            Generator::Z => None,
        })
        .collect();
    let z = word.iter().filter(|g| matches!(g, Generator::Z)).count() as u32;
    from_rewritten(rewrite(rules, &FreeAlgebra, vec![(letters, z, Rational::one())]))
}

pub fn multiply(u: &UeaElement, v: &UeaElement) -> UeaElement {
    u.multiply_with(v, &Virasoro)
}

impl Add for UeaElement {
    type Output = UeaElement;
    fn add(mut self, rhs: UeaElement) -> UeaElement {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: UeaElement) -> UeaElement {
        self + (-rhs)
    }
}

impl Neg for UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        UeaElement {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &UeaElement {
    type Output = UeaElement;
    fn mul(self, rhs: &UeaElement) -> UeaElement {
        multiply(self, rhs)
    }
}

/// Writes `c*m` terms joined by ` + ` / ` - `, the first sign attached.
pub(crate) fn write_linear_combination<'a, K: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a Rational)>,
    is_unit: impl Fn(&K) -> bool,
    render: impl Fn(&K) -> String,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let negative = c.is_negative();
        let magnitude = c.abs();
        let body = if is_unit(key) {
            magnitude.to_string()
        } else if magnitude.is_one() {
            render(key)
        } else {
            format!("{}*{}", magnitude, render(key))
        };
        match (first, negative) {
            (true, false) => write!(f, "{body}")?,
            (true, true) => write!(f, "-{body}")?,
            (false, false) => write!(f, " + {body}")?,
            (false, true) => write!(f, " - {body}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter(), PbwMonomial::is_one, |m| m.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};
    use Generator::{Z, D};

    fn mono(letters: &[i64], z: u32) -> PbwMonomial {
        PbwMonomial::from_sorted_letters(letters, z)
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(2, -2), UeaElement::d(0).scale(&int(4)) + UeaElement::z().scale(&frac(1, 2)));
        assert_eq!(bracket(1, -1), UeaElement::d(0).scale(&int(2)));
        assert!(bracket(5, 5).is_zero());
    }

    #[test]
    fn normal_order_examples() {
        // oracle: one application of bracket(1, −1)
        let expected = UeaElement::term(mono(&[-1, 1], 0), int(1)) + bracket(1, -1);
        assert_eq!(normal_order(&[D(1), D(-1)]), expected);

        let zd = normal_order(&[Z, D(5)]);
        assert_eq!(zd, UeaElement::term(mono(&[5], 1), int(1)));

        // oracle: bracket(1, −3) = 4·d_{−2}
        let expected = UeaElement::term(mono(&[-3, 1], 0), int(1)) + bracket(1, -3);
        assert_eq!(normal_order(&[D(1), D(-3)]), expected);
        assert_eq!(bracket(1, -3), UeaElement::d(-2).scale(&int(4)));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(multiply(&UeaElement::d(1), &UeaElement::d(-1)), normal_order(&[D(1), D(-1)]));
        let c = UeaElement::d(2).commutator(&UeaElement::d(-2));
        assert_eq!(c.to_string(), "4*d(0) + 1/2*z");
    }

    #[test]
    fn rendering() {
        let e = normal_order(&[D(2), D(-2)]);
        assert_eq!(e.to_string(), "d(-2)*d(2) + 4*d(0) + 1/2*z");
        assert_eq!(UeaElement::zero().to_string(), "0");
        let neg = UeaElement::d(1).scale(&int(-1)) + UeaElement::scalar(frac(-3, 4));
        assert_eq!(neg.to_string(), "-d(1) - 3/4");
    }

    #[test]
    fn cancellation_purges_terms() {
        let e = UeaElement::d(3) - UeaElement::d(3);
        assert!(e.is_zero());
        assert_eq!(e, UeaElement::zero());
    }

    #[test]
    fn z_polynomial_view() {
        let p = UeaElement::z().pow(2) - UeaElement::scalar(int(1));
        assert_eq!(p.as_z_polynomial(), Some(vec![int(-1), int(0), int(1)]));
        assert_eq!(UeaElement::d(0).as_z_polynomial(), None);
    }
}
