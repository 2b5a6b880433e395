//! Young tableaux stored as ragged row lists.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A filling of a Young diagram by distinct positive integers, strictly
/// increasing along rows and down columns.
///
/// Intermediate tableaux of the RS insertion hold arbitrary distinct values,
/// so this type does not require the entries to be exactly `1..n`; see
/// [`StandardTableau`] for that.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::NotStandard("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::NotStandard("row lengths are not weakly decreasing".into()));
        }
        for row in &rows {
            if row.contains(&0) {
                return Err(Error::NotStandard("entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NotStandard(format!("row {row:?} is not strictly increasing")));
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(Error::NotStandard("a column is not strictly increasing".into()));
            }
        }
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotStandard("repeated entry".into()));
        }
        Ok(Tableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(Tableau::from_rows(rows.clone()).is_ok(), "{rows:?}");
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_row_lengths(self.rows.iter().map(Vec::len).collect())
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// 1-based row holding `value`, if present.
    pub fn row_of(&self, value: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.binary_search(&value).is_ok()).map(|i| i + 1)
    }

    pub fn contains(&self, value: usize) -> bool {
        self.row_of(value).is_some()
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::from_rows(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    /// Rows separated by `/`, entries by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join(" / "))
    }
}

/// A tableau whose entries are exactly `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau(Tableau);

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::try_from(Tableau::from_rows(rows)?)
    }

    pub fn into_inner(self) -> Tableau {
        self.0
    }

    /// Builds the tableau that puts `i` at the end of row `rows[i-1]` (1-based rows).
    ///
    /// Fails with `NotStandard` unless the resulting row lengths stay weakly
    /// decreasing after every step.
    pub fn from_row_indices(rows_of_values: &[usize]) -> Result<Self> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (i, &r) in rows_of_values.iter().enumerate() {
            if r == 0 || r > rows.len() + 1 {
                return Err(Error::NotStandard(format!("value {} placed in row {r}", i + 1)));
            }
            if r == rows.len() + 1 {
                rows.push(Vec::new());
            }
            if r > 1 && rows[r - 2].len() <= rows[r - 1].len() {
                return Err(Error::NotStandard(format!("value {} overflows row {r}", i + 1)));
            }
            rows[r - 1].push(i + 1);
        }
        Ok(StandardTableau(Tableau::from_rows_unchecked(rows)))
    }
}

impl TryFrom<Tableau> for StandardTableau {
    type Error = Error;

    fn try_from(t: Tableau) -> Result<Self> {
        let n = t.size();
        if t.rows.iter().flatten().any(|&v| v > n) {
            return Err(Error::NotStandard(format!("entries are not exactly 1..{n}")));
        }
        Ok(StandardTableau(t))
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::from_rows(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.0.rows
    }
}

impl Deref for StandardTableau {
    type Target = Tableau;

    fn deref(&self) -> &Tableau {
        &self.0
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
