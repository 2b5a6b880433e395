//! Named cross-check suites: every fast path against an independent oracle.
//!
//! A suite is one entry in [`registry`]. It declares whether it walks
//! permutations or partitions (which fixes its hard size cap) and how far
//! its own oracle is practical; the runner clamps `max_n` to that and calls
//! the suite once per size. Adding an invariant means adding one entry.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bump_diagram::build_bump_diagram;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::oracles::{
    alpha_by_removal, bump_by_simulation, count_syt_by_backtracking, greene_d, greene_i, run_statistic_bruteforce,
    OracleReport,
};
use crate::partition::{partition_count, partitions_of};
use crate::permutation::{permutations_of, Permutation};
use crate::poly::{
    bn_321_by_enumeration, bn_321_closed_form, bn_bivariate, bn_by_enumeration, bn_by_shapes, bn_diagonal_via_hooks,
    tn_direct, tn_head_series, tn_via_product, weakbump_polynomial, Method, SparsePolynomial,
};
use crate::rs::{inverse_rs, rs, shape_of};
use crate::statistics::{
    alpha, ballot_to_permutation, bump, bump_from_shape, bump_sequence, enumerate_ballot_sequences, weakbump,
};
use crate::viennot::bump_via_shadows;

/// Default largest `max_n` for suites that walk `S_n`.
pub const PERMUTATION_HARD_CAP: usize = 8;
/// Largest `max_n` accepted for suites that walk partitions of `n`.
pub const PARTITION_HARD_CAP: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Permutations,
    Partitions,
}

pub struct Suite {
    pub name: &'static str,
    pub domain: Domain,
    /// The oracle is too slow past this size; larger `max_n` is clamped.
    pub oracle_limit: usize,
    pub about: &'static str,
    run: fn(usize, &Caps) -> Result<Vec<OracleReport>>,
}

impl Suite {
    pub fn run_for(&self, n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
        (self.run)(n, caps)
    }
}

/// A report tagged with the suite that produced it; one JSON line each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(flatten)]
    pub report: OracleReport,
}

pub fn registry() -> &'static [Suite] {
    use Domain::*;
    const SUITES: &[Suite] = &[
        Suite {
            name: "bump-simulation",
            domain: Permutations,
            oracle_limit: 8,
            about: "shape formula vs counted insertion bumps",
            run: bump_simulation,
        },
        Suite {
            name: "bump-shadows",
            domain: Permutations,
            oracle_limit: 8,
            about: "bump vs Viennot intermediate points",
            run: bump_shadows,
        },
        Suite {
            name: "bump-diagram",
            domain: Permutations,
            oracle_limit: 8,
            about: "bump sequences of pi and its inverse vs bump-diagram edge readings",
            run: bump_diagram,
        },
        Suite {
            name: "descents",
            domain: Permutations,
            oracle_limit: 8,
            about: "descent i iff bump_i < bump_(i+1)",
            run: descents,
        },
        Suite {
            name: "rs-roundtrip",
            domain: Permutations,
            oracle_limit: 8,
            about: "inverse RS recovers pi",
            run: rs_roundtrip,
        },
        Suite {
            name: "greene",
            domain: Permutations,
            oracle_limit: 6,
            about: "subset-search I_k, D_k vs shape prefix sums",
            run: greene,
        },
        Suite {
            name: "alpha",
            domain: Permutations,
            oracle_limit: 6,
            about: "alpha by removal vs n - (l_1 + ... + l_i)",
            run: alpha_suite,
        },
        Suite {
            name: "sorting-moves",
            domain: Permutations,
            oracle_limit: 6,
            about: "deletion-insertion distance vs weakbump",
            run: sorting_moves,
        },
        Suite {
            name: "runs",
            domain: Permutations,
            oracle_limit: 5,
            about: "run statistic over reduced words vs weakbump",
            run: runs,
        },
        Suite {
            name: "ballots",
            domain: Permutations,
            oracle_limit: 8,
            about: "ballot count vs sum of f^l, and ballot round trips",
            run: ballots,
        },
        Suite {
            name: "bn-shapes",
            domain: Permutations,
            oracle_limit: 8,
            about: "B_n(q) over shapes vs enumeration",
            run: bn_shapes,
        },
        Suite {
            name: "bn321",
            domain: Permutations,
            oracle_limit: 8,
            about: "321-avoiding closed form vs filtered enumeration",
            run: bn321,
        },
        Suite {
            name: "bivariate",
            domain: Permutations,
            oracle_limit: 7,
            about: "B_n(q,t) symmetry and diagonal vs hook sums",
            run: bivariate,
        },
        Suite {
            name: "weakbump-poly",
            domain: Permutations,
            oracle_limit: 8,
            about: "weakbump distribution over shapes vs enumeration",
            run: weakbump_poly,
        },
        Suite {
            name: "hook-identity",
            domain: Partitions,
            oracle_limit: 40,
            about: "hook sum vs bump(l) + bump(l') + |l|",
            run: hook_identity,
        },
        Suite {
            name: "syt-count",
            domain: Partitions,
            oracle_limit: 16,
            about: "hook length formula vs corner-removal recursion",
            run: syt_count,
        },
        Suite {
            name: "partition-count",
            domain: Partitions,
            oracle_limit: 40,
            about: "partition stream length vs pentagonal recurrence",
            run: partition_count_suite,
        },
        Suite {
            name: "tn-product",
            domain: Partitions,
            oracle_limit: 40,
            about: "T_n(q) direct vs product coefficient extraction",
            run: tn_product,
        },
        Suite {
            name: "tn-head",
            domain: Partitions,
            oracle_limit: 40,
            about: "stable low coefficients of T_n(q) vs head series",
            run: tn_head,
        },
    ];
    SUITES
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    registry().iter().find(|s| s.name == name)
}

pub fn hard_cap(domain: Domain, caps: &Caps) -> usize {
    match domain {
        // the polynomial-enumeration cap defaults to the same value and is
        // what BUMPKIT_MAX_N moves
        Domain::Permutations => caps.polynomial_enumeration,
        Domain::Partitions => PARTITION_HARD_CAP,
    }
}

/// Resolves suite names (all suites when empty) and checks `max_n` against
/// each one's hard cap before anything runs.
pub fn select_suites(names: &[String], max_n: usize, caps: &Caps) -> Result<Vec<&'static Suite>> {
    let selected: Vec<&'static Suite> = if names.is_empty() {
        registry().iter().collect()
    } else {
        names
            .iter()
            .map(|name| find_suite(name).ok_or_else(|| Error::MalformedInput(format!("unknown suite `{name}`"))))
            .collect::<Result<_>>()?
    };
    for suite in &selected {
        let cap = hard_cap(suite.domain, caps);
        if max_n > cap {
            return Err(Error::CapExceeded { what: suite.name, n: max_n, cap });
        }
    }
    Ok(selected)
}

/// Runs `suite` for every size `1..=min(max_n, oracle_limit)`, in order.
pub fn run_suite(suite: &Suite, max_n: usize, caps: &Caps) -> Result<Vec<SuiteReport>> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(suite.oracle_limit) {
        out.extend(
            suite.run_for(n, caps)?.into_iter().map(|report| SuiteReport { suite: suite.name.to_string(), report }),
        );
    }
    Ok(out)
}

fn big(v: &BigUint) -> Result<u64> {
    v.to_u64().ok_or_else(|| Error::Internal(format!("{v} does not fit in 64 bits")))
}

fn count(v: usize) -> u64 {
    v as u64
}

/// One report per permutation of `S_n`, computed in parallel; `collect`
/// keeps the lexicographic order, so output is deterministic.
fn per_permutation<F>(n: usize, caps: &Caps, check: F) -> Result<Vec<OracleReport>>
where
    F: Fn(&Permutation) -> Result<Vec<OracleReport>> + Sync + Send,
{
    let perms: Vec<Permutation> = permutations_of(n, caps.permutations)?.collect();
    let nested: Vec<Vec<OracleReport>> = perms.par_iter().map(check).collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

/// Coefficient-by-coefficient comparison over the union of supports.
fn compare_polynomials(label: &str, fast: &SparsePolynomial, oracle: &SparsePolynomial) -> Result<Vec<OracleReport>> {
    let mut exponents: Vec<usize> = fast.terms().map(|(e, _)| e).chain(oracle.terms().map(|(e, _)| e)).collect();
    exponents.sort_unstable();
    exponents.dedup();
    exponents
        .into_iter()
        .map(|e| Ok(OracleReport::new(format!("{label} [q^{e}]"), big(&fast.coeff(e))?, big(&oracle.coeff(e))?)))
        .collect()
}

fn bump_simulation(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    per_permutation(n, caps, |p| {
        Ok(vec![OracleReport::new(p.to_string(), count(bump_from_shape(&shape_of(p))), count(bump_by_simulation(p)))])
    })
}

fn bump_shadows(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    per_permutation(n, caps, |p| Ok(vec![OracleReport::new(p.to_string(), count(bump(p)), count(bump_via_shadows(p)))]))
}

fn bump_diagram(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    per_permutation(n, caps, |p| {
        let d = build_bump_diagram(p)?;
        let matches = |a: &[usize], b: &[usize]| count(a.iter().zip(b).filter(|(x, y)| x == y).count());
        let top = bump_sequence(p);
        let right = bump_sequence(&p.inverse());
        Ok(vec![
            OracleReport::new(format!("{p} top"), count(n), matches(top.terms(), &d.top_reading)),
            OracleReport::new(format!("{p} right"), count(n), matches(right.terms(), &d.right_reading)),
        ])
    })
}

fn descents(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    per_permutation(n, caps, |p| {
        let seq = bump_sequence(p);
        let b = seq.terms();
        let descent_set = p.descent_set();
        let consistent = (1..n).filter(|&i| descent_set.contains(&i) == (b[i - 1] < b[i])).count();
        Ok(vec![OracleReport::new(p.to_string(), count(n - 1), count(consistent))])
    })
}

fn rs_roundtrip(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    per_permutation(n, caps, |p| {
        let r = rs(p);
        let back = inverse_rs(&r.p, &r.q)?;
        let same = p.as_slice().iter().zip(back.as_slice()).filter(|(a, b)| a == b).count();
        Ok(vec![OracleReport::new(p.to_string(), count(n), count(same))])
    })
}

fn greene(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    per_permutation(n, caps, |p| {
        let lambda = shape_of(p);
        let conj = lambda.conjugate();
        let mut out = Vec::with_capacity(2 * n);
        for k in 1..=n {
            out.push(OracleReport::new(
                format!("{p} I_{k}"),
                count(lambda.prefix_sum(k)),
                count(greene_i(p, k, caps.greene)?),
            ));
            out.push(OracleReport::new(
                format!("{p} D_{k}"),
                count(conj.prefix_sum(k)),
                count(greene_d(p, k, caps.greene)?),
            ));
        }
        Ok(out)
    })
}

fn alpha_suite(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    per_permutation(n, caps, |p| {
        (1..=n)
            .map(|i| {
                Ok(OracleReport::new(
                    format!("{p} alpha_{i}"),
                    count(alpha(p, i)),
                    count(alpha_by_removal(p, i, caps.greene)?),
                ))
            })
            .collect()
    })
}

/// One BFS from the identity covers every permutation at once; moves are
/// reversible, so the distance from the identity equals the distance to it.
fn sorting_moves(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    crate::error::check_cap("deletion-insertion distance", n, caps.sorting_moves)?;
    let distances = all_deletion_insertion_distances(n);
    per_permutation(n, caps, |p| {
        let d = distances.get(p.as_slice()).copied().ok_or_else(|| Error::Internal(format!("{p} unreachable")))?;
        Ok(vec![OracleReport::new(p.to_string(), count(weakbump(p)), count(d))])
    })
}

fn all_deletion_insertion_distances(n: usize) -> HashMap<Vec<usize>, usize> {
    let start: Vec<usize> = (1..=n).collect();
    let mut dist = HashMap::from([(start.clone(), 0usize)]);
    let mut frontier = vec![start];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next_frontier = Vec::new();
        for state in &frontier {
            for from in 0..n {
                let mut lifted = state.clone();
                let card = lifted.remove(from);
                for to in (0..n).filter(|&to| to != from) {
                    let mut next = lifted.clone();
                    next.insert(to, card);
                    if !dist.contains_key(&next) {
                        dist.insert(next.clone(), level);
                        next_frontier.push(next);
                    }
                }
            }
        }
        frontier = next_frontier;
    }
    dist
}

fn runs(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    per_permutation(n, caps, |p| {
        Ok(vec![OracleReport::new(p.to_string(), count(weakbump(p)), count(run_statistic_bruteforce(p, caps.runs)?))])
    })
}

fn ballots(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    let all: Vec<_> = enumerate_ballot_sequences(n, caps.ballots)?.collect();
    let mut syt_total = BigUint::from(0u32);
    for lambda in partitions_of(n) {
        syt_total += count_syt_by_backtracking(&lambda);
    }
    let mut out = vec![OracleReport::new(format!("n={n} count"), count(all.len()), big(&syt_total)?)];
    let round_trips: Vec<OracleReport> = all
        .par_iter()
        .map(|b| {
            let back = bump_sequence(&ballot_to_permutation(b)?);
            let same = b.terms().iter().zip(back.terms()).filter(|(x, y)| x == y).count();
            Ok(OracleReport::new(format!("{b} round trip"), count(n), count(same)))
        })
        .collect::<Result<_>>()?;
    out.extend(round_trips);
    Ok(out)
}

fn bn_shapes(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    compare_polynomials(&format!("B_{n}"), &bn_by_shapes(n)?, &bn_by_enumeration(n, caps.polynomial_enumeration)?)
}

fn bn321(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    compare_polynomials(&format!("B_{n}^321"), &bn_321_closed_form(n)?, &bn_321_by_enumeration(n, caps.permutations)?)
}

fn bivariate(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    let b = bn_bivariate(n, Method::Enumeration, caps.polynomial_enumeration)?;
    let mut out = Vec::new();
    for ((a, c), coeff) in b.terms() {
        out.push(OracleReport::new(format!("B_{n} [q^{a} t^{c}] vs [q^{c} t^{a}]"), big(coeff)?, big(&b.coeff(c, a))?));
    }
    out.extend(compare_polynomials(&format!("B_{n}(q,q)"), &b.diagonal(), &bn_diagonal_via_hooks(n)?)?);
    let by_shape = bn_bivariate(n, Method::Shape, caps.polynomial_enumeration)?;
    out.push(OracleReport::new(format!("B_{n}(q,t) shapes vs enumeration"), 1, u64::from(by_shape == b)));
    Ok(out)
}

fn weakbump_poly(n: usize, caps: &Caps) -> Result<Vec<OracleReport>> {
    compare_polynomials(
        &format!("W_{n}"),
        &weakbump_polynomial(n, Method::Shape, caps.polynomial_enumeration)?,
        &weakbump_polynomial(n, Method::Enumeration, caps.polynomial_enumeration)?,
    )
}

fn hook_identity(n: usize, _: &Caps) -> Result<Vec<OracleReport>> {
    Ok(partitions_of(n)
        .map(|lambda| {
            let rhs = bump_from_shape(&lambda) + bump_from_shape(&lambda.conjugate()) + n;
            OracleReport::new(lambda.to_string(), count(lambda.hook_sum()), count(rhs))
        })
        .collect())
}

fn syt_count(n: usize, _: &Caps) -> Result<Vec<OracleReport>> {
    partitions_of(n)
        .map(|lambda| {
            Ok(OracleReport::new(
                lambda.to_string(),
                big(&lambda.count_syt()?)?,
                big(&count_syt_by_backtracking(&lambda))?,
            ))
        })
        .collect()
}

fn partition_count_suite(n: usize, _: &Caps) -> Result<Vec<OracleReport>> {
    Ok(vec![OracleReport::new(format!("p({n})"), count(partitions_of(n).count()), big(&partition_count(n))?)])
}

fn tn_product(n: usize, _: &Caps) -> Result<Vec<OracleReport>> {
    compare_polynomials(&format!("T_{n}"), &tn_direct(n), &tn_via_product(n))
}

fn tn_head(n: usize, _: &Caps) -> Result<Vec<OracleReport>> {
    let direct = tn_direct(n);
    let head = tn_head_series(n / 2);
    (0..=n / 2)
        .map(|i| Ok(OracleReport::new(format!("T_{n} [q^{i}]"), big(&direct.coeff(i))?, big(&head.coeff(i))?)))
        .collect()
}
