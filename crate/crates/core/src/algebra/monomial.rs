use std::cmp::Ordering;
use std::fmt;

use super::partition::Partition;

/// A basis element `z` or `d_k` of the Virasoro algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    D(i64),
    Z,
}

/// A PBW monomial `d_{−λ} d_0^a d_μ z^b`, i.e. the ordered word
/// `d_{−λ_r}···d_{−λ_1} d_0^a d_{μ_1}···d_{μ_s} z^b` with generator indices
/// non-decreasing from left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    pub neg: Partition,
    pub d0: u32,
    pub pos: Partition,
    pub z: u32,
}

impl PbwMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::Z => PbwMonomial { z: 1, ..Self::default() },
            Generator::D(k) => Self::from_sorted_letters(&[k], 0),
        }
    }

    /// Builds the monomial for a non-decreasing sequence of `d` indices.
    pub(crate) fn from_sorted_letters(letters: &[i64], z: u32) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] <= w[1]));
        let mut neg: Vec<u32> = letters.iter().filter(|&&k| k < 0).map(|&k| (-k) as u32).collect();
        neg.reverse();
        let d0 = letters.iter().filter(|&&k| k == 0).count() as u32;
        let pos: Vec<u32> = letters.iter().filter(|&&k| k > 0).map(|&k| k as u32).collect();
        PbwMonomial {
            neg: Partition::from_sorted(neg),
            d0,
            pos: Partition::from_sorted(pos),
            z,
        }
    }

    /// The `d` indices of the ordered word, left to right.
    pub fn letters(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.neg.len() + self.d0 as usize + self.pos.len());
        out.extend(self.neg.parts().iter().rev().map(|&p| -(p as i64)));
        out.extend(std::iter::repeat_n(0, self.d0 as usize));
        out.extend(self.pos.parts().iter().map(|&p| p as i64));
        out
    }

    /// Number of generator factors, counting `z`.
    pub fn degree(&self) -> usize {
        self.neg.len() + self.d0 as usize + self.pos.len() + self.z as usize
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    /// Eigenvalue of `ad d_0` up to sign: `|pos| − |neg|`.
    pub fn weight(&self) -> i64 {
        self.pos.size() as i64 - self.neg.size() as i64
    }
}

/// `weight(m) = |pos| − |neg|`
pub fn weight(m: &PbwMonomial) -> i64 {
    m.weight()
}

// Canonical term order: higher degree first, then fewer z factors, then the
// ordered word lexicographically.
impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then(self.z.cmp(&other.z))
            .then_with(|| self.letters().cmp(&other.letters()))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let letters = self.letters();
        let mut factors = Vec::new();
        let mut i = 0;
        while i < letters.len() {
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == letters[i] {
                run += 1;
            }
            if run == 1 {
                factors.push(format!("d({})", letters[i]));
            } else {
                factors.push(format!("d({})^{}", letters[i], run));
            }
            i += run;
        }
        match self.z {
            0 => {}
            1 => factors.push("z".to_string()),
            e => factors.push(format!("z^{e}")),
        }
        write!(f, "{}", factors.join("*"))
    }
}
