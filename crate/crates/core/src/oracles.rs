//! Slow reference computations that work straight from the definitions.
//!
//! Nothing here goes through RS insertion's shape, so agreement with the
//! fast paths is real evidence rather than a tautology. All of these are
//! exponential; each takes an explicit cap.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;

/// One fast-path value checked against its oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub instance: String,
    pub fast_value: u64,
    pub oracle_value: u64,
    pub agree: bool,
}

impl OracleReport {
    pub fn new(instance: impl Into<String>, fast_value: u64, oracle_value: u64) -> Self {
        OracleReport { instance: instance.into(), fast_value, oracle_value, agree: fast_value == oracle_value }
    }
}

/// Longest chain in `values` under `related(earlier, later)`, O(m^2).
fn longest_chain(values: &[usize], related: impl Fn(usize, usize) -> bool) -> usize {
    let mut best = vec![1usize; values.len()];
    for j in 0..values.len() {
        for i in 0..j {
            if related(values[i], values[j]) && best[i] + 1 > best[j] {
                best[j] = best[i] + 1;
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Largest subset of positions whose subsequence has no `related`-chain
/// longer than `k`. Feasibility is closed under taking subsets, so the first
/// size (from `n` down) with a feasible subset is the answer.
fn largest_subset_with_short_chains(word: &[usize], k: usize, related: impl Fn(usize, usize) -> bool + Copy) -> usize {
    let n = word.len();
    if longest_chain(word, related) <= k {
        return n;
    }
    let mut kept = Vec::with_capacity(n);
    for size in (1..n).rev() {
        // Gosper's hack walks the masks of a fixed popcount
        let mut mask: u32 = (1 << size) - 1;
        while mask < (1 << n) {
            kept.clear();
            kept.extend((0..n).filter(|&i| mask & (1 << i) != 0).map(|i| word[i]));
            if longest_chain(&kept, related) <= k {
                return size;
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    0
}

/// `I_k(π)`: the largest union of `k` increasing subsequences, found as the
/// largest subsequence whose longest decreasing subsequence is at most `k`.
pub fn greene_i(p: &Permutation, k: usize, cap: usize) -> Result<usize> {
    check_cap("greene_I", p.len(), cap)?;
    if k == 0 {
        return Ok(0);
    }
    Ok(largest_subset_with_short_chains(p.as_slice(), k, |a, b| a > b))
}

/// `D_k(π)`: the largest union of `k` decreasing subsequences.
pub fn greene_d(p: &Permutation, k: usize, cap: usize) -> Result<usize> {
    check_cap("greene_D", p.len(), cap)?;
    if k == 0 {
        return Ok(0);
    }
    Ok(largest_subset_with_short_chains(p.as_slice(), k, |a, b| a < b))
}

/// Fewest deletions leaving a union of `i` increasing subsequences.
pub fn alpha_by_removal(p: &Permutation, i: usize, cap: usize) -> Result<usize> {
    Ok(p.len() - greene_i(p, i, cap)?)
}

/// Breadth-first distance to the identity where one move lifts a card out
/// and reinserts it anywhere.
pub fn min_deletion_insertion_moves(p: &Permutation, cap: usize) -> Result<usize> {
    check_cap("deletion-insertion distance", p.len(), cap)?;
    let target: Vec<usize> = (1..=p.len()).collect();
    let start = p.as_slice().to_vec();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((state, dist)) = queue.pop_front() {
        if state == target {
            return Ok(dist);
        }
        for from in 0..state.len() {
            let mut lifted = state.clone();
            let card = lifted.remove(from);
            for to in 0..=lifted.len() {
                if to == from {
                    continue;
                }
                let mut next = lifted.clone();
                next.insert(to, card);
                if seen.insert(next.clone()) {
                    queue.push_back((next, dist + 1));
                }
            }
        }
    }
    unreachable!("S_n is connected under deletion-insertion moves")
}

/// Applies the letters of `word` as adjacent transpositions of positions
/// `(i, i+1)`, starting from the identity of size `n`.
pub fn word_to_permutation(n: usize, word: &[usize]) -> Result<Permutation> {
    let mut w: Vec<usize> = (1..=n).collect();
    for &i in word {
        if i == 0 || i >= n {
            return Err(crate::Error::MalformedInput(format!("letter {i} out of range for n = {n}")));
        }
        w.swap(i - 1, i);
    }
    Permutation::new(w)
}

/// Every reduced word of `p`, built by peeling off right descents.
pub fn reduced_words(p: &Permutation, cap: usize) -> Result<Vec<Vec<usize>>> {
    check_cap("reduced words", p.len(), cap)?;
    let mut memo = HashMap::new();
    Ok(reduced_words_memo(p.as_slice(), &mut memo))
}

fn reduced_words_memo(w: &[usize], memo: &mut HashMap<Vec<usize>, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if let Some(words) = memo.get(w) {
        return words.clone();
    }
    let mut words = Vec::new();
    let mut has_descent = false;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            has_descent = true;
            let mut shorter = w.to_vec();
            shorter.swap(i - 1, i);
            for mut prefix in reduced_words_memo(&shorter, memo) {
                prefix.push(i);
                words.push(prefix);
            }
        }
    }
    if !has_descent {
        words.push(Vec::new());
    }
    memo.insert(w.to_vec(), words.clone());
    words
}

/// Number of blocks in the greedy left-to-right split of `word` into runs of
/// consecutive integers going up by one or down by one. A lone letter is a
/// run of its own.
pub fn count_runs(word: &[usize]) -> usize {
    let mut runs = 0;
    let mut i = 0;
    while i < word.len() {
        runs += 1;
        let mut j = i + 1;
        if j < word.len() && word[j].abs_diff(word[i]) == 1 {
            let up = word[j] > word[i];
            while j < word.len() && (if up { word[j] == word[j - 1] + 1 } else { word[j] + 1 == word[j - 1] }) {
                j += 1;
            }
        }
        i = j;
    }
    runs
}

/// `run(π)`: fewest runs over all reduced words of `π`.
pub fn run_statistic_bruteforce(p: &Permutation, cap: usize) -> Result<usize> {
    Ok(reduced_words(p, cap)?.iter().map(|w| count_runs(w)).min().unwrap_or(0))
}

/// Counts displacement events while inserting `p` with a plain linear scan
/// of each row.
pub fn bump_by_simulation(p: &Permutation) -> usize {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut bumps = 0;
    for &value in p.as_slice() {
        let mut k = value;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![k]);
                break;
            }
            match rows[r].iter().position(|&y| y > k) {
                None => {
                    rows[r].push(k);
                    break;
                }
                Some(c) => {
                    k = std::mem::replace(&mut rows[r][c], k);
                    bumps += 1;
                    r += 1;
                }
            }
        }
    }
    bumps
}

/// `f^λ` by recursively removing the corner that holds the largest entry.
pub fn count_syt_by_backtracking(lambda: &Partition) -> BigUint {
    let mut memo = HashMap::new();
    syt_memo(lambda.parts().to_vec(), &mut memo)
}

fn syt_memo(parts: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
    if parts.is_empty() {
        return BigUint::from(1u32);
    }
    if let Some(v) = memo.get(&parts) {
        return v.clone();
    }
    let mut total = BigUint::from(0u32);
    for r in 0..parts.len() {
        let is_corner = r + 1 == parts.len() || parts[r + 1] < parts[r];
        if is_corner {
            let mut smaller = parts.clone();
            smaller[r] -= 1;
            if smaller[r] == 0 {
                smaller.pop();
            }
            total += syt_memo(smaller, memo);
        }
    }
    memo.insert(parts, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::permutation::permutations_of;
    use crate::rs::shape_of;
    use crate::statistics::{alpha, bump, bump_from_shape, weakbump};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn greene_on_example() {
        let pi = perm("475382691");
        assert_eq!(greene_i(&pi, 1, 10).unwrap(), 4);
        assert_eq!(greene_i(&pi, 2, 10).unwrap(), 6);
        assert_eq!(greene_d(&pi, 1, 10).unwrap(), 5);
        assert_eq!(alpha_by_removal(&pi, 1, 10).unwrap(), 5);
        assert_eq!(alpha_by_removal(&pi, 2, 10).unwrap(), 3);
        assert_eq!(greene_i(&Permutation::identity(7), 1, 10).unwrap(), 7);
        assert_eq!(greene_d(&Permutation::decreasing(7), 1, 10).unwrap(), 7);
        assert!(greene_i(&Permutation::identity(11), 1, 10).is_err());
    }

    #[test]
    fn greene_matches_shape_prefix_sums() {
        for n in 0..=6 {
            for pi in permutations_of(n, 10).unwrap() {
                let lambda = shape_of(&pi);
                let conj = lambda.conjugate();
                let mut previous = 0;
                for k in 1..=n {
                    let ik = greene_i(&pi, k, 10).unwrap();
                    assert_eq!(ik, lambda.prefix_sum(k), "{pi} k={k}");
                    assert_eq!(greene_d(&pi, k, 10).unwrap(), conj.prefix_sum(k), "{pi} k={k}");
                    assert_eq!(alpha_by_removal(&pi, k, 10).unwrap(), alpha(&pi, k));
                    assert!(ik >= previous);
                    previous = ik;
                }
            }
        }
    }

    #[test]
    fn sorting_distance() {
        assert_eq!(min_deletion_insertion_moves(&Permutation::identity(4), 6).unwrap(), 0);
        assert_eq!(min_deletion_insertion_moves(&perm("21"), 6).unwrap(), 1);
        assert_eq!(min_deletion_insertion_moves(&Permutation::identity(0), 6).unwrap(), 0);
        for pi in permutations_of(5, 10).unwrap() {
            assert_eq!(min_deletion_insertion_moves(&pi, 6).unwrap(), weakbump(&pi), "{pi}");
        }
        assert!(min_deletion_insertion_moves(&Permutation::identity(7), 6).is_err());
    }

    #[test]
    fn runs_in_words() {
        assert_eq!(count_runs(&[]), 0);
        assert_eq!(count_runs(&[2, 1, 8, 7, 3, 4, 5, 6]), 3);
        assert_eq!(count_runs(&[8, 7, 2, 1, 3, 4, 5, 6]), 3);
        assert_eq!(count_runs(&[6, 7, 5, 3, 4, 5, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 7, 8]), 5);
        assert_eq!(count_runs(&[1, 3, 5]), 3);
        assert_eq!(count_runs(&[3, 2, 3]), 2);
    }

    #[test]
    fn printed_reduced_words() {
        let sigma = perm("314569278");
        for word in [[2, 1, 8, 7, 3, 4, 5, 6], [8, 7, 2, 1, 3, 4, 5, 6]] {
            let w = word_to_permutation(9, &word).unwrap();
            assert_eq!(w, sigma);
        }
        let words = reduced_words(&sigma, 9).unwrap();
        assert!(words.contains(&vec![2, 1, 8, 7, 3, 4, 5, 6]));
        assert!(words.iter().all(|w| w.len() == sigma.inversions()));
        assert_eq!(run_statistic_bruteforce(&sigma, 9).unwrap(), 3);
        assert_eq!(run_statistic_bruteforce(&sigma.inverse(), 9).unwrap(), 3);

        let pi = perm("475382691");
        let word = [6, 7, 5, 3, 4, 5, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 7, 8];
        assert_eq!(word.len(), pi.inversions());
        assert_eq!(word_to_permutation(9, &word).unwrap(), pi);
    }

    #[test]
    fn run_statistic() {
        assert_eq!(run_statistic_bruteforce(&Permutation::identity(4), 5).unwrap(), 0);
        assert_eq!(run_statistic_bruteforce(&perm("21345"), 5).unwrap(), 1);
        for n in 0..=5 {
            for pi in permutations_of(n, 10).unwrap() {
                assert_eq!(run_statistic_bruteforce(&pi, 5).unwrap(), weakbump(&pi), "{pi}");
            }
        }
        assert!(run_statistic_bruteforce(&Permutation::identity(6), 5).is_err());
    }

    #[test]
    fn simulation() {
        assert_eq!(bump_by_simulation(&perm("475382691")), 11);
        assert_eq!(bump_by_simulation(&Permutation::identity(5)), 0);
        for pi in permutations_of(7, 10).unwrap() {
            assert_eq!(bump_by_simulation(&pi), bump_from_shape(&shape_of(&pi)));
            assert_eq!(bump_by_simulation(&pi), bump(&pi));
        }
    }

    #[test]
    fn syt_backtracking() {
        for n in 0..=14 {
            for lambda in partitions_of(n) {
                assert_eq!(count_syt_by_backtracking(&lambda), lambda.count_syt().unwrap(), "{lambda}");
            }
        }
    }

    #[test]
    fn report_agreement_flag() {
        assert!(OracleReport::new("x", 3, 3).agree);
        assert!(!OracleReport::new("x", 3, 4).agree);
        let r = OracleReport::new("bump 21", 1, 1);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"instance":"bump 21","fast_value":1,"oracle_value":1,"agree":true}"#);
        assert_eq!(serde_json::from_str::<OracleReport>(&json).unwrap(), r);
    }
}
