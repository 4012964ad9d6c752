use crate::algebra::rational::{frac, int};
use crate::algebra::rewrite::{StructureConstants, Virasoro};
use crate::algebra::Rational;
use crate::modules::WhittakerFunctional;

/// Which bracket the identity checks multiply with. `Corrupted` replaces
/// the structure constant `k − j` by `k² − j²`: still antisymmetric, but it
/// violates the Jacobi identity, so a working harness must report it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BracketRules {
    #[default]
    Virasoro,
    Corrupted,
}

impl BracketRules {
    pub fn name(self) -> &'static str {
        match self {
            BracketRules::Virasoro => "virasoro",
            BracketRules::Corrupted => "corrupted",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "virasoro" => Some(BracketRules::Virasoro),
            "corrupted" => Some(BracketRules::Corrupted),
            _ => None,
        }
    }
}

impl StructureConstants for BracketRules {
    fn bracket(&self, k: i64, j: i64) -> (Rational, Rational) {
        let (a, c) = Virasoro.bracket(k, j);
        match self {
            BracketRules::Virasoro => (a, c),
            BracketRules::Corrupted => (int(k * k - j * j), c),
        }
    }
}

/// Ranges, sample sizes and the seed of a verification campaign. A fixed
/// configuration always produces the same report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Index bound for antisymmetry, PBW stability and random products.
    pub index_bound: i64,
    /// Longest sorted word checked for PBW stability.
    pub word_length_bound: usize,
    /// `|i|, |j|, |k|` bound for the Jacobi identity.
    pub jacobi_bound: i64,
    /// Random products checked for associativity and centrality.
    pub product_cases: usize,
    /// `|λ|` bound for the expansion lemmas.
    pub partition_bound: u32,
    /// Largest positive mode `n` (and part of `μ`) in the expansion lemmas.
    pub mode_bound: u32,
    /// `#μ` bound for the `d_μ` expansion lemma.
    pub mu_length_bound: usize,
    /// `j` bound for `w_j` in the expansion lemmas.
    pub j_bound: u32,
    /// `i` and `k` bounds for `[d_i, d_0^k]w = ψ_i((d_0+i)^k − d_0^k)w`.
    pub d0_index_bound: i64,
    pub d0_power_bound: u32,
    /// Random cases per parametric family; `0` disables every property.
    pub cases: usize,
    /// Central characters used wherever `ξ` is a free parameter.
    pub xis: Vec<Rational>,
    /// Whittaker functionals used wherever `ψ` is a free parameter.
    pub psis: Vec<WhittakerFunctional>,
    /// `|i|` bound for action and bracket compatibility.
    pub action_bound: i64,
    /// Largest number of summands in direct-sum checks.
    pub direct_sum_bound: usize,
    pub rules: BracketRules,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            index_bound: 6,
            word_length_bound: 6,
            jacobi_bound: 5,
            product_cases: 50,
            partition_bound: 6,
            mode_bound: 6,
            mu_length_bound: 3,
            j_bound: 4,
            d0_index_bound: 5,
            d0_power_bound: 5,
            cases: 20,
            xis: vec![int(0), int(1), frac(7, 2)],
            psis: vec![
                WhittakerFunctional::new(int(1), int(0)),
                WhittakerFunctional::new(int(1), int(1)),
                WhittakerFunctional::new(int(-2), frac(3, 2)),
            ],
            action_bound: 4,
            direct_sum_bound: 4,
            rules: BracketRules::Virasoro,
        }
    }
}

impl SuiteConfig {
    /// A configuration that runs nothing.
    pub fn empty() -> Self {
        SuiteConfig { cases: 0, ..Self::default() }
    }

    pub fn with_seed(seed: u64) -> Self {
        SuiteConfig { seed, ..Self::default() }
    }

    pub(crate) fn enabled(&self) -> bool {
        self.cases > 0
    }
}
