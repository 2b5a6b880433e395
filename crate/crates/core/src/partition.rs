//! Integer partitions, hook lengths and `f^λ`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram, 1-based, row 1 on top and column 1 on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::MalformedInput(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedInput(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Drops zero parts; the remaining parts must already be weakly decreasing.
    pub(crate) fn from_row_lengths(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ'_i = #{j : λ_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width).map(|i| self.parts.iter().take_while(|&&p| p >= i).count()).collect();
        Partition { parts }
    }

    /// `λ_1 + ... + λ_k`.
    pub fn prefix_sum(&self, k: usize) -> usize {
        self.parts.iter().take(k).sum()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// One plus the cells below `cell` in its column plus the cells right of it in its row.
    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return Err(Error::CellOutsideShape { row: cell.row, col: cell.col });
        }
        let arm = self.part(cell.row) - cell.col;
        let leg = self.parts[cell.row..].iter().take_while(|&&p| p >= cell.col).count();
        Ok(1 + arm + leg)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// Hook lengths row by row, computed from the conjugate in one pass.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| len - c + conj.parts[c] - r - 1).collect())
            .collect()
    }

    /// `Σ_c h(c)`.
    pub fn hook_sum(&self) -> usize {
        self.hook_lengths().iter().flatten().sum()
    }

    /// `f^λ = n! / Π h(c)`, the number of standard Young tableaux of this shape.
    pub fn count_syt(&self) -> Result<BigUint> {
        let mut hook_product = BigUint::one();
        // Multiply in u64 chunks; hook lengths are at most n.
        let mut chunk: u64 = 1;
        for h in self.hook_lengths().into_iter().flatten() {
            let h = h as u64;
            match chunk.checked_mul(h) {
                Some(c) => chunk = c,
                None => {
                    hook_product *= chunk;
                    chunk = h;
                }
            }
        }
        hook_product *= chunk;
        let (quotient, remainder) = factorial(self.size()).div_rem(&hook_product);
        if !remainder.is_zero() {
            return Err(Error::Internal(format!("hook product does not divide n! for {self}")));
        }
        Ok(quotient)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= (n - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

/// Partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
///
/// `partitions_of(0)` yields the empty partition once.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = reverse_lex_successor(&current);
        Some(Partition { parts: current })
    }
}

fn reverse_lex_successor(parts: &[usize]) -> Option<Vec<usize>> {
    let pos = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..pos].to_vec();
    let bound = parts[pos] - 1;
    // Everything after `pos` is a 1; redistribute it plus the unit taken from `pos`.
    let mut rest = parts.len() - pos;
    next.push(bound);
    while rest > 0 {
        let piece = rest.min(bound);
        next.push(piece);
        rest -= piece;
    }
    Some(next)
}

/// `p(n)` by Euler's pentagonal number recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut table: Vec<num_bigint::BigInt> = vec![num_bigint::BigInt::zero(); n + 1];
    table[0] = num_bigint::BigInt::one();
    for i in 1..=n {
        let mut sum = num_bigint::BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = table[i - g1].clone();
            if g2 <= i {
                term += &table[i - g2];
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        table[i] = sum;
    }
    table[n].to_biguint().expect("partition counts are non-negative")
}
