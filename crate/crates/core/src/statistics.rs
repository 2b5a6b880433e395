//! The bump statistic and its relatives, computed from the RS shape.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::rs::{inverse_rs, rs, shape_of, shape_of_word};
use crate::tableau::StandardTableau;

/// A sequence where, in every prefix, the value `i` occurs at least as often
/// as any larger value `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct WeakBallotSequence(Vec<usize>);

impl WeakBallotSequence {
    pub fn new(terms: Vec<usize>) -> Result<Self> {
        let mut tally: Vec<usize> = Vec::new();
        for (k, &a) in terms.iter().enumerate() {
            if a > tally.len() {
                return Err(Error::NotABallotSequence(format!("term {} = {a} appears before any {}", k + 1, a - 1)));
            }
            if a == tally.len() {
                tally.push(0);
            }
            // Tallies are non-increasing, so comparing neighbours covers every pair i < j.
            if a > 0 && tally[a] == tally[a - 1] {
                return Err(Error::NotABallotSequence(format!("after term {}, {a} would lead {}", k + 1, a - 1)));
            }
            tally[a] += 1;
        }
        Ok(WeakBallotSequence(terms))
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<usize>> for WeakBallotSequence {
    type Error = Error;

    fn try_from(terms: Vec<usize>) -> Result<Self> {
        WeakBallotSequence::new(terms)
    }
}

impl From<WeakBallotSequence> for Vec<usize> {
    fn from(b: WeakBallotSequence) -> Self {
        b.0
    }
}

impl fmt::Display for WeakBallotSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "({})", terms.join(","))
    }
}

/// `Σ_i (i-1) λ_i`.
pub fn bump_from_shape(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, &part)| i * part).sum()
}

/// Total number of bumps during `RS(π)`.
pub fn bump(p: &Permutation) -> usize {
    bump_from_shape(&shape_of(p))
}

/// Bumps caused by each insertion, `(bump_1, ..., bump_n)`.
pub fn bump_sequence(p: &Permutation) -> WeakBallotSequence {
    WeakBallotSequence(rs(p).bump_sequence)
}

/// An involution whose bump sequence is `b`: build `Q` by appending `i` to
/// row `b_i + 1`, then invert RS on `(Q, Q)`.
pub fn ballot_to_permutation(b: &WeakBallotSequence) -> Result<Permutation> {
    let rows: Vec<usize> = b.terms().iter().map(|&a| a + 1).collect();
    let q = StandardTableau::from_row_indices(&rows).map_err(|e| Error::NotABallotSequence(e.to_string()))?;
    inverse_rs(&q, &q)
}

/// Every weak ballot sequence of length `n`, in lexicographic order.
pub fn enumerate_ballot_sequences(n: usize, cap: usize) -> Result<impl Iterator<Item = WeakBallotSequence>> {
    check_cap("ballot sequence enumeration", n, cap)?;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut tally = Vec::new();
    extend_ballots(n, &mut prefix, &mut tally, &mut out);
    Ok(out.into_iter())
}

fn extend_ballots(n: usize, prefix: &mut Vec<usize>, tally: &mut Vec<usize>, out: &mut Vec<WeakBallotSequence>) {
    if prefix.len() == n {
        out.push(WeakBallotSequence(prefix.clone()));
        return;
    }
    for a in 0..=tally.len() {
        let opens_candidate = a == tally.len();
        if !opens_candidate && a > 0 && tally[a] == tally[a - 1] {
            continue;
        }
        if opens_candidate {
            tally.push(0);
        }
        tally[a] += 1;
        prefix.push(a);
        extend_ballots(n, prefix, tally, out);
        prefix.pop();
        tally[a] -= 1;
        if opens_candidate {
            tally.pop();
        }
    }
}

/// `α_i(π) = n - (λ_1 + ... + λ_i)`; zero once `i` reaches the number of rows.
pub fn alpha(p: &Permutation, i: usize) -> usize {
    p.len() - shape_of(p).prefix_sum(i)
}

/// `(α_1, ..., α_ℓ)` where `ℓ` is the number of rows, so the last term is 0.
pub fn alpha_sequence(p: &Permutation) -> Vec<usize> {
    let lambda = shape_of(p);
    let n = p.len();
    (1..=lambda.len()).map(|i| n - lambda.prefix_sum(i)).collect()
}

/// Number of insertions that bump at least once; equals `n - λ_1`.
pub fn weakbump(p: &Permutation) -> usize {
    p.len() - shape_of(p).part(1)
}

/// Recovers `bump_i` from Greene sums alone: one less than the smallest `j`
/// for which the prefix `π_1..π_i` admits a larger union of `j` increasing
/// subsequences than `π_1..π_{i-1}`.
pub fn bump_i_minimality_check(p: &Permutation, i: usize) -> Result<usize> {
    if i == 0 || i > p.len() {
        return Err(Error::MalformedInput(format!("position {i} is outside 1..{}", p.len())));
    }
    let before = shape_of_word(&p.as_slice()[..i - 1]);
    let after = shape_of_word(&p.as_slice()[..i]);
    let j = (1..=after.len())
        .find(|&j| before.prefix_sum(j) < after.prefix_sum(j))
        .ok_or_else(|| Error::Internal("prefix shapes do not grow".into()))?;
    Ok(j - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::{parse_permutation, permutations_of};

    fn p(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    /// The defining inequality, checked literally for every pair and prefix.
    fn is_weak_ballot_by_definition(terms: &[usize]) -> bool {
        let max = terms.iter().copied().max().unwrap_or(0);
        (1..=terms.len()).all(|k| {
            let count = |v: usize| terms[..k].iter().filter(|&&a| a == v).count();
            (0..=max).all(|i| (i + 1..=max).all(|j| count(i) >= count(j)))
        })
    }

    #[test]
    fn bump_values() {
        assert_eq!(bump(&p("475382691")), 11);
        assert_eq!(bump(&Permutation::identity(8)), 0);
        for n in 0..=9 {
            assert_eq!(bump(&Permutation::decreasing(n)), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn shape_formula() {
        let lambda = Partition::new(vec![4, 2, 1, 1, 1]).unwrap();
        assert_eq!(bump_from_shape(&lambda), 11);
        assert_eq!(bump_from_shape(&Partition::new(vec![6]).unwrap()), 0);
        assert_eq!(bump_from_shape(&Partition::new(vec![2, 2]).unwrap()), 2);
        for n in 0..=15 {
            for lambda in crate::partition::partitions_of(n) {
                let parts = lambda.parts();
                let by_rows: usize = (1..parts.len()).map(|i| parts[i..].iter().sum::<usize>()).sum();
                assert_eq!(bump_from_shape(&lambda), by_rows);
            }
        }
    }

    #[test]
    fn bump_sequences() {
        assert_eq!(bump_sequence(&p("475382691")).terms(), &[0, 0, 1, 2, 0, 3, 1, 0, 4]);
        assert_eq!(bump_sequence(&p("51324")).terms(), &[0, 1, 0, 2, 0]);
        assert_eq!(bump_sequence(&Permutation::identity(4)).terms(), &[0, 0, 0, 0]);
    }

    #[test]
    fn ballot_validation() {
        assert!(WeakBallotSequence::new(vec![0, 0, 1, 2, 0, 3, 1, 0, 4]).is_ok());
        assert!(WeakBallotSequence::new(vec![1]).is_err());
        assert!(WeakBallotSequence::new(vec![0, 1, 1]).is_err());
        assert!(WeakBallotSequence::new(vec![0, 2]).is_err());
        assert!(WeakBallotSequence::new(vec![]).is_ok());
    }

    #[test]
    fn ballot_validation_matches_definition() {
        // every word over {0,1,2,3} of length <= 6
        for len in 0..=6u32 {
            for code in 0..4usize.pow(len) {
                let terms: Vec<usize> = (0..len).map(|d| code / 4usize.pow(d) % 4).collect();
                assert_eq!(
                    WeakBallotSequence::new(terms.clone()).is_ok(),
                    is_weak_ballot_by_definition(&terms),
                    "{terms:?}"
                );
            }
        }
    }

    #[test]
    fn ballot_enumeration() {
        let three: Vec<Vec<usize>> = enumerate_ballot_sequences(3, 12).unwrap().map(Vec::from).collect();
        assert_eq!(three, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 2]]);
        let one: Vec<Vec<usize>> = enumerate_ballot_sequences(1, 12).unwrap().map(Vec::from).collect();
        assert_eq!(one, vec![vec![0]]);
        assert_eq!(enumerate_ballot_sequences(6, 12).unwrap().count(), 76);
        assert!(enumerate_ballot_sequences(13, 12).is_err());
    }

    #[test]
    fn ballots_to_permutations() {
        let zeros = WeakBallotSequence::new(vec![0; 5]).unwrap();
        assert_eq!(ballot_to_permutation(&zeros).unwrap(), Permutation::identity(5));
        let staircase = WeakBallotSequence::new((0..6).collect()).unwrap();
        assert_eq!(ballot_to_permutation(&staircase).unwrap(), Permutation::decreasing(6));

        let mut images: Vec<Permutation> =
            enumerate_ballot_sequences(4, 12).unwrap().map(|b| ballot_to_permutation(&b).unwrap()).collect();
        assert!(images.iter().all(|pi| pi.inverse() == *pi));
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 10);
    }

    #[test]
    fn alpha_values() {
        let pi = p("475382691");
        let alphas: Vec<usize> = (1..=5).map(|i| alpha(&pi, i)).collect();
        assert_eq!(alphas, vec![5, 3, 2, 1, 0]);
        assert_eq!(alpha(&pi, 17), 0);
        assert_eq!(alpha_sequence(&pi), vec![5, 3, 2, 1, 0]);
        assert_eq!(alpha(&Permutation::identity(4), 1), 0);
        assert_eq!(alpha(&Permutation::identity(4), 3), 0);
    }

    #[test]
    fn weakbump_values() {
        assert_eq!(weakbump(&p("475382691")), 5);
        assert_eq!(weakbump(&Permutation::identity(7)), 0);
        assert_eq!(weakbump(&p("314569278")), 3);
    }

    #[test]
    fn minimality_check() {
        let pi = p("475382691");
        assert_eq!(bump_i_minimality_check(&pi, 4).unwrap(), 2);
        assert_eq!(bump_i_minimality_check(&pi, 1).unwrap(), 0);
        assert!(bump_i_minimality_check(&pi, 0).is_err());
        assert!(bump_i_minimality_check(&pi, 10).is_err());
        for n in 1..=5 {
            for pi in permutations_of(n, 10).unwrap() {
                let seq = bump_sequence(&pi);
                for i in 1..=n {
                    assert_eq!(bump_i_minimality_check(&pi, i).unwrap(), seq.terms()[i - 1]);
                }
            }
        }
    }

    #[test]
    fn exhaustive_shape_identities() {
        for n in 0..=7 {
            for pi in permutations_of(n, 10).unwrap() {
                let seq = bump_sequence(&pi);
                assert!(is_weak_ballot_by_definition(seq.terms()));
                assert_eq!(seq.sum(), bump(&pi));
                assert_eq!(bump(&pi), bump(&pi.inverse()));
                let positive = seq.terms().iter().filter(|&&b| b > 0).count();
                assert_eq!(weakbump(&pi), positive);
                let alphas: usize = (1..=n).map(|i| alpha(&pi, i)).sum();
                assert_eq!(alphas, bump(&pi));
            }
        }
    }

    #[test]
    fn avoiders_have_bump_equal_weakbump() {
        for n in 0..=8 {
            for pi in permutations_of(n, 10).unwrap().filter(|p| p.avoids_321()) {
                assert_eq!(bump(&pi), weakbump(&pi));
            }
        }
    }

    #[test]
    fn ballot_round_trip_up_to_seven() {
        for n in 0..=7 {
            let mut images = Vec::new();
            for b in enumerate_ballot_sequences(n, 12).unwrap() {
                let pi = ballot_to_permutation(&b).unwrap();
                assert_eq!(bump_sequence(&pi), b);
                images.push(pi);
            }
            let count = images.len();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), count);
        }
    }
}
