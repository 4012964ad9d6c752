//! The normal-ordering rewrite engine.
//!
//! A state is a word of `d` indices together with a tail (a `z` power for
//! bare algebra elements, a seed basis vector for module actions). Each step
//! either absorbs the last letter into the tail or swaps the leftmost
//! out-of-order adjacent pair through the bracket. Both moves strictly
//! decrease `(length, inversions)`, and states are processed in decreasing
//! order of that measure, so every distinct state is expanded exactly once
//! after all of its contributions have been summed.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::rational::{frac, int, Rational};

/// Structure constants `[d_k, d_j] = a·d_{k+j} + c·z`, returned as `(a, c)`.
pub trait StructureConstants {
    fn bracket(&self, k: i64, j: i64) -> (Rational, Rational);
}

/// The Virasoro bracket `[d_k, d_j] = (k−j)d_{k+j} + δ_{j,−k}(k³−k)/12·z`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Virasoro;

impl StructureConstants for Virasoro {
    fn bracket(&self, k: i64, j: i64) -> (Rational, Rational) {
        let central = if j == -k { frac(k * k * k - k, 12) } else { Rational::zero() };
        (int(k - j), central)
    }
}

/// What happens at the right end of a word.
pub(crate) trait Reduction {
    type Tail: Clone + Ord;

    /// Absorbs one `z` produced by a bracket, returning the new tail and a
    /// scalar factor.
    fn central(&self, tail: &Self::Tail) -> (Self::Tail, Rational);

    /// Absorbs `d_letter` standing immediately left of the tail, or `None`
    /// if the letter must stay in the word.
    fn absorb(&self, letter: i64, tail: &Self::Tail) -> Option<Vec<(Self::Tail, Rational)>>;
}

/// Bare algebra elements: the tail is the power of `z`.
pub(crate) struct FreeAlgebra;

impl Reduction for FreeAlgebra {
    type Tail = u32;

    fn central(&self, tail: &u32) -> (u32, Rational) {
        (tail + 1, int(1))
    }

    fn absorb(&self, _letter: i64, _tail: &u32) -> Option<Vec<(u32, Rational)>> {
        None
    }
}

fn inversions(word: &[i64]) -> usize {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

type QueueKey<T> = (usize, usize, Vec<i64>, T);

fn push<T: Clone + Ord>(queue: &mut BTreeMap<QueueKey<T>, Rational>, word: Vec<i64>, tail: T, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    let key = (word.len(), inversions(&word), word, tail);
    let slot = queue.entry(key).or_insert_with(Rational::zero);
    *slot += coeff;
}

/// Rewrites a linear combination of words into sorted words that the
/// reduction can no longer absorb. Zero coefficients are dropped.
pub(crate) fn rewrite<S, R>(
    rules: &S,
    reduction: &R,
    input: impl IntoIterator<Item = (Vec<i64>, R::Tail, Rational)>,
) -> BTreeMap<(Vec<i64>, R::Tail), Rational>
where
    S: StructureConstants + ?Sized,
    R: Reduction,
{
    let mut queue: BTreeMap<QueueKey<R::Tail>, Rational> = BTreeMap::new();
    for (word, tail, coeff) in input {
        push(&mut queue, word, tail, coeff);
    }
    let mut done: BTreeMap<(Vec<i64>, R::Tail), Rational> = BTreeMap::new();

    while let Some(((_, _, word, tail), coeff)) = queue.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        if let Some(&last) = word.last() {
            if let Some(outcomes) = reduction.absorb(last, &tail) {
                let head = word[..word.len() - 1].to_vec();
                for (new_tail, factor) in outcomes {
                    push(&mut queue, head.clone(), new_tail, &coeff * factor);
                }
                continue;
            }
        }
        let Some(i) = (0..word.len().saturating_sub(1)).find(|&i| word[i] > word[i + 1]) else {
            let slot = done.entry((word, tail)).or_insert_with(Rational::zero);
            *slot += coeff;
            continue;
        };
        let (k, j) = (word[i], word[i + 1]);

        let mut swapped = word.clone();
        swapped.swap(i, i + 1);
        push(&mut queue, swapped, tail.clone(), coeff.clone());

        let (structure, central) = rules.bracket(k, j);
        if !structure.is_zero() {
            let mut merged = Vec::with_capacity(word.len() - 1);
            merged.extend_from_slice(&word[..i]);
            merged.push(k + j);
            merged.extend_from_slice(&word[i + 2..]);
            push(&mut queue, merged, tail.clone(), &coeff * structure);
        }
        if !central.is_zero() {
            let mut shortened = Vec::with_capacity(word.len() - 2);
            shortened.extend_from_slice(&word[..i]);
            shortened.extend_from_slice(&word[i + 2..]);
            let (new_tail, factor) = reduction.central(&tail);
            push(&mut queue, shortened, new_tail, coeff * central * factor);
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn virasoro_constants() {
        assert_eq!(Virasoro.bracket(2, -2), (int(4), frac(1, 2)));
        assert_eq!(Virasoro.bracket(1, -1), (int(2), int(0)));
        assert_eq!(Virasoro.bracket(3, 1), (int(2), int(0)));
        assert_eq!(Virasoro.bracket(-3, 3), (int(-6), int(-2)));
    }

    #[test]
    fn sorted_word_is_fixed() {
        let out = rewrite(&Virasoro, &FreeAlgebra, vec![(vec![-2, 0, 3], 0u32, int(5))]);
        assert_eq!(out.len(), 1);
        assert_eq!(out[&(vec![-2, 0, 3], 0)], int(5));
    }

    #[test]
    fn single_swap() {
        let out = rewrite(&Virasoro, &FreeAlgebra, vec![(vec![2, -2], 0u32, int(1))]);
        assert_eq!(out[&(vec![-2, 2], 0)], int(1));
        assert_eq!(out[&(vec![0], 0)], int(4));
        assert_eq!(out[&(vec![], 1)], frac(1, 2));
        assert_eq!(out.len(), 3);
    }
}
