use std::fmt;

/// A partition stored as a non-decreasing sequence of positive parts.
///
/// The derived ordering is lexicographic on the part sequence, so
/// `() < (1) < (1,1) < (2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable();
        Some(Partition(parts))
    }

    /// Builds a partition from parts already sorted and positive.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|μ|`
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `#μ`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Removes one copy of each part of `other`; `None` when some part of
    /// `other` does not occur often enough.
    pub fn diff(&self, other: &Partition) -> Option<Partition> {
        let mut rest = self.0.clone();
        for part in &other.0 {
            let pos = rest.iter().position(|p| p == part)?;
            rest.remove(pos);
        }
        Some(Partition(rest))
    }

    /// Removes one copy of `part`, if present.
    pub fn without(&self, part: u32) -> Option<Partition> {
        self.diff(&Partition(vec![part]))
    }

    /// Distinct part values in increasing order.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut out = self.0.clone();
        out.dedup();
        out
    }

    /// All partitions of `n`, in lexicographic order.
    pub fn of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, 1, &mut current, &mut out);
        out.sort();
        out
    }

    /// All partitions with `|λ| ≤ n`, ordered by size then lexicographically.
    pub fn up_to_size(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::of_size).collect()
    }

    /// Multisets of at most `max_len` parts drawn from `1..=max_part`.
    pub fn bounded(max_len: usize, max_part: u32) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut frontier = vec![Vec::<u32>::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for parts in &frontier {
                let start = parts.last().copied().unwrap_or(1);
                for p in start..=max_part {
                    let mut grown = parts.clone();
                    grown.push(p);
                    out.push(Partition(grown.clone()));
                    next.push(grown);
                }
            }
            frontier = next;
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }
}

fn fill(remaining: u32, min_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in min_part..=remaining {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// `λ − μ`: `λ` with one copy of each part of `μ` removed, or `None` when
/// undefined.
pub fn partition_diff(lambda: &Partition, mu: &Partition) -> Option<Partition> {
    lambda.diff(mu)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn diff_examples() {
        assert_eq!(partition_diff(&p(&[1, 2, 2, 5]), &p(&[2, 5])), Some(p(&[1, 2])));
        assert_eq!(partition_diff(&p(&[3, 4]), &Partition::empty()), Some(p(&[3, 4])));
        assert_eq!(partition_diff(&p(&[1, 2]), &p(&[3])), None);
        assert_eq!(partition_diff(&p(&[2]), &p(&[2, 2])), None);
    }

    #[test]
    fn counts_match_partition_numbers() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::up_to_size(6).len(), 30);
    }

    #[test]
    fn bounded_multisets() {
        // 1 + 6 + 21 + 56 multisets of size ≤ 3 over six values
        assert_eq!(Partition::bounded(3, 6).len(), 84);
    }

    #[test]
    fn rejects_zero_parts_and_sorts() {
        assert!(Partition::new(vec![0, 1]).is_none());
        assert_eq!(p(&[3, 1, 2]).parts(), &[1, 2, 3]);
        assert!(p(&[1]) < p(&[1, 1]) && p(&[1, 1]) < p(&[2]));
    }

    proptest! {
        #[test]
        fn diff_sizes_consistent(
            lam in proptest::collection::vec(1u32..5, 0..6),
            mu in proptest::collection::vec(1u32..5, 0..4),
        ) {
            let lam = Partition::new(lam).unwrap();
            let mu = Partition::new(mu).unwrap();
            if let Some(d) = partition_diff(&lam, &mu) {
                prop_assert_eq!(d.size(), lam.size() - mu.size());
                prop_assert_eq!(d.len(), lam.len() - mu.len());
            }
        }
    }
}
