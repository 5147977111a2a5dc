use std::fmt;

/// Finitely supported sequence `(s_1, s_2, ...)`; `parts[i]` holds `s_(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartitionSequence {
    parts: Vec<u32>,
    size: u32,
}

impl PartitionSequence {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let size = parts.iter().sum();
        PartitionSequence { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `s_i` for `i >= 1`.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|s| = sum s_i`.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// `sum i * s_i`.
    pub fn weight(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, s)| (i as u32 + 1) * s)
            .sum()
    }

    /// Adds `delta` to `s_i`.
    pub(crate) fn bumped(&self, i: usize, delta: i32) -> Self {
        let mut p = self.parts.clone();
        if p.len() < i {
            p.resize(i, 0);
        }
        p[i - 1] = (p[i - 1] as i32 + delta) as u32;
        Self::new(p)
    }
}

impl fmt::Display for PartitionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.parts.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// All of `S_p`: sequences with `sum i * s_i = p`, in lexicographic order of
/// `(s_1, s_2, ...)`, largest first.
pub fn enumerate_partitions(p: usize) -> Vec<PartitionSequence> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; p];
    fn rec(i: usize, remaining: usize, cur: &mut Vec<u32>, out: &mut Vec<PartitionSequence>) {
        if i == 0 {
            if remaining == 0 {
                out.push(PartitionSequence::new(cur.clone()));
            }
            return;
        }
        // part size i, choose multiplicity
        for m in (0..=remaining / i).rev() {
            cur[i - 1] = m as u32;
            rec(i - 1, remaining - m * i, cur, out);
        }
        cur[i - 1] = 0;
    }
    rec(p, p, &mut cur, &mut out);
    out.sort_by_key(|s| std::cmp::Reverse(s.parts_padded(p)));
    out
}

impl PartitionSequence {
    fn parts_padded(&self, p: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(p.max(v.len()), 0);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partition_sets() {
        let p1 = enumerate_partitions(1);
        assert_eq!(p1, vec![PartitionSequence::new(vec![1])]);
        let p3 = enumerate_partitions(3);
        let want = vec![
            PartitionSequence::new(vec![3, 0, 0]),
            PartitionSequence::new(vec![1, 1, 0]),
            PartitionSequence::new(vec![0, 0, 1]),
        ];
        assert_eq!(p3, want);
        assert_eq!(enumerate_partitions(4).len(), 5);
    }

    #[test]
    fn every_sequence_has_the_right_weight() {
        for p in 1..=8 {
            for s in enumerate_partitions(p) {
                assert_eq!(s.weight() as usize, p);
                assert!(s.parts().len() <= p);
            }
        }
    }

    #[test]
    fn size_is_cached_sum() {
        let s = PartitionSequence::new(vec![2, 0, 1, 0, 0]);
        assert_eq!(s.size(), 3);
        assert_eq!(s.parts(), &[2, 0, 1]);
        assert_eq!(s.get(3), 1);
        assert_eq!(s.get(7), 0);
    }
}
