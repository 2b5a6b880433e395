//! Size limits for the exhaustive enumerations.
//!
//! Every routine that walks all of `S_n` (or some other exponentially large
//! set) takes its cap as an explicit argument. [`Caps`] bundles the defaults
//! and lets the `BUMPKIT_MAX_N` environment variable raise or lower the
//! permutation-enumeration family in one place.

/// Environment variable that overrides the permutation-enumeration caps.
pub const MAX_N_ENV: &str = "BUMPKIT_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// `permutations_of`.
    pub permutations: usize,
    /// `B_n(q)`, `B_n(q,t)` and the weakbump polynomial by enumeration.
    pub polynomial_enumeration: usize,
    /// Weak ballot sequence enumeration.
    pub ballots: usize,
    /// Greene subset-search oracles.
    pub greene: usize,
    /// Breadth-first deletion-insertion distance.
    pub sorting_moves: usize,
    /// Reduced-word run statistic.
    pub runs: usize,
    /// Exact mean bump over partitions of n.
    pub mean_bump: usize,
    /// Other sums over partitions of n (`B_n` by shapes, `T_n`, ...).
    pub shape_sums: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            permutations: 10,
            polynomial_enumeration: 8,
            ballots: 12,
            greene: 10,
            sorting_moves: 6,
            runs: 5,
            mean_bump: 60,
            shape_sums: 60,
        }
    }
}

impl Caps {
    /// Defaults, with `BUMPKIT_MAX_N` applied when it parses as an integer.
    pub fn from_env() -> Self {
        let caps = Caps::default();
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => caps.with_permutation_cap(n),
            None => caps,
        }
    }

    /// Sets every cap that bounds a walk over `S_n`.
    pub fn with_permutation_cap(mut self, n: usize) -> Self {
        self.permutations = n;
        self.polynomial_enumeration = n;
        self.ballots = n.max(self.ballots);
        self
    }
}
