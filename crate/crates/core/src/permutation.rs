//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};

/// A permutation of `{1, ..., n}` stored as its one-line word.
///
/// All positions and values exposed by the public API are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` is a bijection on `{1..n}`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation(format!("value {v} is outside 1..{n}")));
            }
            if seen[v] {
                return Err(Error::NotAPermutation(format!("value {v} repeats")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    /// The decreasing word `n ... 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation { word: (1..=n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// The inverse permutation `q` with `q[p[i]] = i`.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// The word read right to left.
    pub fn reverse(&self) -> Self {
        Permutation { word: self.word.iter().rev().copied().collect() }
    }

    /// Positions `i` (1-based) with `p_i > p_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.word.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).collect()
    }

    /// True when no `i < j < k` has `p_i > p_j > p_k`.
    pub fn avoids_321(&self) -> bool {
        let w = &self.word;
        (0..w.len()).all(|j| {
            let larger_before = w[..j].iter().any(|&a| a > w[j]);
            let smaller_after = w[j + 1..].iter().any(|&c| c < w[j]);
            !(larger_before && smaller_after)
        })
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn inversions(&self) -> usize {
        let w = &self.word;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count()).sum()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

/// Parses a permutation from text.
///
/// Accepts integers separated by commas and/or whitespace, or a bare digit
/// string such as `475382691`. A bare digit string is read one digit per
/// value, so it can only describe permutations with `n <= 9`; anything
/// larger needs separators. The empty string is the empty permutation.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let text = text.trim();
    let has_separator = text.chars().any(|c| c == ',' || c.is_whitespace());
    let word: Vec<usize> = if has_separator {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::MalformedInput(format!("`{tok}` is not a non-negative integer")))
            })
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::MalformedInput(format!("`{c}` is not a digit")))
            })
            .collect::<Result<_>>()?
    };
    Permutation::new(word)
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

impl fmt::Display for Permutation {
    /// Digit string when every value fits in one digit, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Iterator over all of `S_n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

fn next_lexicographic(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).expect("pivot has a successor");
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

/// All `n!` permutations of `{1..n}`, lexicographically; `n` must not exceed `cap`.
pub fn permutations_of(n: usize, cap: usize) -> Result<Permutations> {
    check_cap("permutation enumeration", n, cap)?;
    Ok(Permutations { next: Some((1..=n).collect()) })
}
