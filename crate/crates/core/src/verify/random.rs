use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::rational::{frac, int};
use crate::algebra::Rational;
use crate::modules::{enumerate_basis, Matrix, ModuleElement, ModuleFamily, NPlusModule, WhittakerFunctional};
use crate::whittaker::in_line_ipsi;

/// Seeded sampler. Each property derives its own stream from the campaign
/// seed and its name, so results do not depend on which suites run.
pub(crate) struct Sampler {
    rng: ChaCha8Rng,
}

fn grid() -> Vec<Rational> {
    vec![int(-2), int(-1), frac(-1, 2), int(0), frac(1, 2), int(1), frac(3, 2), int(2), int(3)]
}

impl Sampler {
    pub fn new(seed: u64, label: &str) -> Self {
        // FNV-1a over the label
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed ^ h) }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn grid(&mut self) -> Rational {
        let g = grid();
        g[self.below(g.len())].clone()
    }

    pub fn nonzero(&mut self) -> Rational {
        loop {
            let r = self.grid();
            if r != int(0) {
                return r;
            }
        }
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }

    /// A random element of `U(Vir)` in expression syntax: up to `terms`
    /// terms, words of length at most `len`, indices in `[−bound, bound]`.
    pub fn uea_text(&mut self, terms: usize, len: usize, bound: i64, with_z: bool) -> String {
        let count = 1 + self.below(terms);
        let mut out = String::new();
        for t in 0..count {
            let c = self.nonzero();
            let negative = c < int(0);
            let magnitude = if negative { -c } else { c };
            let letters: Vec<String> = (0..self.below(len + 1))
                .map(|_| {
                    if with_z && self.below(8) == 0 {
                        "z".to_string()
                    } else {
                        format!("d({})", self.range(-bound, bound))
                    }
                })
                .collect();
            let body = if letters.is_empty() { magnitude.to_string() } else { format!("{magnitude}*{}", letters.join("*")) };
            match (t, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }

    /// A single word (a weight-homogeneous element) and its weight.
    pub fn word_text(&mut self, len: usize, bound: i64) -> (String, i64) {
        let letters: Vec<i64> = (0..self.below(len + 1)).map(|_| self.range(-bound, bound)).collect();
        let weight = letters.iter().sum();
        let c = self.nonzero();
        let mut text = format!("({c})");
        for k in letters {
            text.push_str(&format!("*d({k})"));
        }
        (text, weight)
    }

    /// A random nonzero element with support in `F ≤ level`.
    pub fn module_element(&mut self, family: &Arc<ModuleFamily>, level: u32, terms: usize) -> ModuleElement {
        let basis = enumerate_basis(family, level);
        loop {
            let picked: Vec<_> = (0..1 + self.below(terms)).map(|_| (self.pick(&basis).clone(), self.nonzero())).collect();
            let v = ModuleElement::from_terms(family, picked).expect("enumerated indices are valid");
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn functional_with_psi2(&mut self, psi2_zero: bool) -> WhittakerFunctional {
        let psi1 = if psi2_zero { self.nonzero() } else { self.grid() };
        let psi2 = if psi2_zero { int(0) } else { self.nonzero() };
        WhittakerFunctional::new(psi1, psi2)
    }

    /// A valid flag-form module of dimension `n` with functional `psi`.
    /// Every flag-form pair with `n ≤ 3` is valid; for larger `n` the
    /// retry loop rarely terminates.
    /// `members[k]` decides whether `α(k+1, k+2)` lies on the line `ℂ·iψ`.
    pub fn nplus(&mut self, xi: &Rational, psi: &WhittakerFunctional, members: &[bool]) -> NPlusModule {
        let n = members.len() + 1;
        loop {
            let mut d1 = Matrix::scalar(n, &psi.psi1);
            let mut d2 = Matrix::scalar(n, &psi.psi2);
            for (k, &member) in members.iter().enumerate() {
                let (a1, a2) = if member {
                    let c = self.nonzero();
                    (&c * &psi.psi1, c * int(2) * &psi.psi2)
                } else {
                    loop {
                        let (a1, a2) = (self.grid(), self.grid());
                        let alpha = crate::modules::NPlusFunctional::from_values([(1, a1.clone()), (2, a2.clone())]);
                        if !in_line_ipsi(&alpha, psi) {
                            break (a1, a2);
                        }
                    }
                };
                d1[(k, k + 1)] = a1;
                d2[(k, k + 1)] = a2;
            }
            for i in 0..n {
                for j in i + 2..n {
                    d1[(i, j)] = self.grid();
                    d2[(i, j)] = self.grid();
                }
            }
            let module = NPlusModule::new(xi.clone(), d1, d2).expect("square matrices of equal size");
            if module.is_valid() {
                return module;
            }
        }
    }
}
