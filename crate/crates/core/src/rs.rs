//! Row insertion and the Robinson-Schensted correspondence, instrumented to
//! record every bump.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::tableau::{StandardTableau, Tableau};

/// What happened during a single row insertion `P <- k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionTrace {
    /// 1-based row where the last displaced value came to rest.
    pub final_row: usize,
    /// Number of bump events; always `final_row - 1`.
    pub bumps: usize,
    /// `(row, displaced value)` for every bump, top to bottom.
    pub path: Vec<(usize, usize)>,
}

/// `RS(π) = (P, Q)` together with the per-step bump counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsResult {
    pub p: StandardTableau,
    pub q: StandardTableau,
    pub bump_sequence: Vec<usize>,
}

impl RsResult {
    pub fn shape(&self) -> Partition {
        self.p.shape()
    }

    /// Total number of bumps.
    pub fn bumps(&self) -> usize {
        self.bump_sequence.iter().sum()
    }
}

/// Inserts `k` into `rows` in place.
///
/// Each row is sorted, so the displaced entry is found by binary search: it is
/// the leftmost entry strictly greater than `k`, which is the same cell as
/// the rightmost entry `y` with `k < y` that the classical rule names.
fn insert_in_place(rows: &mut Vec<Vec<usize>>, mut k: usize) -> InsertionTrace {
    let mut path = Vec::new();
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![k]);
            break;
        }
        let row = &mut rows[r];
        let pos = row.partition_point(|&y| y < k);
        if pos == row.len() {
            row.push(k);
            break;
        }
        let displaced = std::mem::replace(&mut row[pos], k);
        path.push((r + 1, displaced));
        k = displaced;
        r += 1;
    }
    InsertionTrace { final_row: r + 1, bumps: path.len(), path }
}

/// `P <- k`.
pub fn insert(tableau: &Tableau, k: usize) -> Result<(Tableau, InsertionTrace)> {
    if k == 0 {
        return Err(Error::MalformedInput("tableau entries must be positive".into()));
    }
    if tableau.contains(k) {
        return Err(Error::DuplicateEntry(k));
    }
    let mut rows = tableau.rows().to_vec();
    let trace = insert_in_place(&mut rows, k);
    Ok((Tableau::from_rows_unchecked(rows), trace))
}

/// Runs row insertion over a word of distinct values, returning the final
/// insertion tableau rows, the recording rows and the bump counts.
pub(crate) fn rs_word(word: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<usize>) {
    let mut p_rows: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    let mut bumps = Vec::with_capacity(word.len());
    for (i, &v) in word.iter().enumerate() {
        let trace = insert_in_place(&mut p_rows, v);
        let r = trace.final_row - 1;
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[r].push(i + 1);
        bumps.push(trace.bumps);
    }
    (p_rows, q_rows, bumps)
}

/// Row lengths of the insertion tableau of a word of distinct values.
pub(crate) fn shape_of_word(word: &[usize]) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &v in word {
        insert_in_place(&mut rows, v);
    }
    Partition::from_row_lengths(rows.iter().map(Vec::len).collect())
}

pub fn rs(p: &Permutation) -> RsResult {
    let (p_rows, q_rows, bump_sequence) = rs_word(p.as_slice());
    RsResult {
        p: StandardTableau::try_from(Tableau::from_rows_unchecked(p_rows)).expect("P is standard"),
        q: StandardTableau::try_from(Tableau::from_rows_unchecked(q_rows)).expect("Q is standard"),
        bump_sequence,
    }
}

/// `shape(π)`.
pub fn shape_of(p: &Permutation) -> Partition {
    shape_of_word(p.as_slice())
}

/// The unique permutation with `RS(π) = (P, Q)`, by reverse row insertion.
pub fn inverse_rs(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(p.shape().to_string(), q.shape().to_string()));
    }
    let n = p.size();
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    let mut word = vec![0; n];
    for step in (1..=n).rev() {
        // The largest entry of Q sits at the end of its row, which is a corner.
        let r = q_rows
            .iter()
            .position(|row| row.last() == Some(&step))
            .ok_or_else(|| Error::NotStandard(format!("{step} is not at a corner of Q")))?;
        q_rows[r].pop();
        let mut y = p_rows[r].pop().expect("shapes agree");
        if q_rows[r].is_empty() {
            q_rows.pop();
            p_rows.pop();
        }
        for row in p_rows[..r].iter_mut().rev() {
            // Rightmost entry smaller than y.
            let pos = row.partition_point(|&x| x < y) - 1;
            y = std::mem::replace(&mut row[pos], y);
        }
        word[step - 1] = y;
    }
    Ok(Permutation::from_word_unchecked(word))
}
