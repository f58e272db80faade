//! Lexicographic k-subset enumeration.

/// Iterates over the `k`-subsets of `0..n` in lexicographic order.
///
/// ```
/// use greedy_mis::combinatorics::KSubsets;
/// let all: Vec<Vec<usize>> = KSubsets::new(4, 2).collect();
/// assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
/// ```
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        KSubsets {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        // rightmost position that can still move right
        if let Some(i) = (0..k).rev().find(|&i| next[i] < self.n - k + i) {
            next[i] += 1;
            for j in i + 1..k {
                next[j] = next[j - 1] + 1;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Advances `subset` to the next `k`-subset of `0..n` whose first `keep`
/// entries differ from the current prefix, i.e. skips every subset that
/// shares `subset[..keep]`. Returns `false` when no such subset exists.
pub(crate) fn skip_prefix(subset: &mut [usize], n: usize, keep: usize) -> bool {
    let k = subset.len();
    let Some(i) = (0..keep).rev().find(|&i| subset[i] < n - k + i) else {
        return false;
    };
    subset[i] += 1;
    for j in i + 1..k {
        subset[j] = subset[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn counts_match_binomials() {
        for n in 0..9 {
            for k in 0..=n + 1 {
                let expected = if k > n { 0 } else { binomial(n, k) };
                assert_eq!(KSubsets::new(n, k).count(), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn strictly_increasing_order() {
        let all: Vec<_> = KSubsets::new(7, 3).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|s| s.windows(2).all(|p| p[0] < p[1])));
    }

    #[test]
    fn zero_subset() {
        assert_eq!(KSubsets::new(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn skip_prefix_jumps_past_block() {
        let mut s = vec![0, 1, 2];
        assert!(skip_prefix(&mut s, 5, 2));
        assert_eq!(s, vec![0, 2, 3]);
        let mut s = vec![0, 4, 5];
        assert!(skip_prefix(&mut s, 6, 2));
        assert_eq!(s, vec![1, 2, 3]);
        let mut s = vec![3, 4, 5];
        assert!(!skip_prefix(&mut s, 6, 1));
    }
}
