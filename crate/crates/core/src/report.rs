//! Serializable summaries used by the command-line front end.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::permutation::Permutation;
use crate::rs::rs;
use crate::statistics::{alpha_sequence, WeakBallotSequence};
use crate::tableau::StandardTableau;

/// Every statistic of a single permutation.
///
/// JSON field names are stable: `permutation`, `n`, `shape`, `p`, `q`,
/// `bump`, `bump_sequence`, `weakbump`, `descent_set`, `alpha_sequence`.
/// Sequences and tableaux are plain integer arrays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationReport {
    pub permutation: Permutation,
    pub n: usize,
    pub shape: Partition,
    pub p: StandardTableau,
    pub q: StandardTableau,
    pub bump: usize,
    pub bump_sequence: WeakBallotSequence,
    pub weakbump: usize,
    pub descent_set: Vec<usize>,
    pub alpha_sequence: Vec<usize>,
}

impl PermutationReport {
    pub fn new(pi: &Permutation) -> Self {
        let r = rs(pi);
        let shape = r.shape();
        let bump_sequence =
            WeakBallotSequence::new(r.bump_sequence.clone()).expect("RS bump sequences are ballot sequences");
        PermutationReport {
            permutation: pi.clone(),
            n: pi.len(),
            bump: r.bumps(),
            weakbump: pi.len() - shape.part(1),
            shape,
            p: r.p,
            q: r.q,
            bump_sequence,
            descent_set: pi.descent_set(),
            alpha_sequence: alpha_sequence(pi),
        }
    }

    /// Aligned `key: value` lines.
    pub fn to_text(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        let lines: [(&str, String); 10] = [
            ("permutation", self.permutation.to_string()),
            ("n", self.n.to_string()),
            ("shape", self.shape.to_string()),
            ("P", self.p.to_string()),
            ("Q", self.q.to_string()),
            ("bump", self.bump.to_string()),
            ("bump sequence", self.bump_sequence.to_string()),
            ("weakbump", self.weakbump.to_string()),
            ("descent set", format!("{{{}}}", join(&self.descent_set))),
            ("alpha sequence", format!("({})", join(&self.alpha_sequence))),
        ];
        for (key, value) in lines {
            let _ = writeln!(out, "{:<16}{value}", format!("{key}:"));
        }
        out
    }
}
