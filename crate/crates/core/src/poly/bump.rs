//! Generating polynomials of the bump statistic.
//!
//! Permutation sums either walk `S_n` directly or group permutations by RS
//! shape, weighting each shape by `(f^λ)^2`. Shape sums fan out over
//! partitions with rayon and merge partial polynomials, which is safe
//! because polynomial addition is associative and commutative.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::partition::{binomial, factorial, partitions_of, Partition};
use crate::permutation::permutations_of;
use crate::poly::sparse::{BivariatePolynomial, PowerSeriesTruncated, SparsePolynomial};
use crate::statistics::{bump, bump_from_shape, weakbump};

/// Which computation path to use where several exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Walk every permutation (or partition).
    Enumeration,
    /// Group by RS shape and weight by `(f^λ)^2`.
    Shape,
    /// Truncated power-series product.
    Product,
    /// Closed-form coefficients.
    Closed,
}

/// Sums `weight(λ) q^{exponent(λ)}` over `λ ⊢ n` in parallel.
fn sum_over_partitions<F>(n: usize, term: F) -> Result<SparsePolynomial>
where
    F: Fn(&Partition) -> Result<(usize, BigUint)> + Sync,
{
    let shapes: Vec<Partition> = partitions_of(n).collect();
    shapes
        .par_iter()
        .try_fold(SparsePolynomial::zero, |mut acc, lambda| {
            let (e, c) = term(lambda)?;
            acc.add_term(e, c);
            Ok(acc)
        })
        .try_reduce(SparsePolynomial::zero, |mut a, b| {
            a += b;
            Ok(a)
        })
}

fn squared_syt(lambda: &Partition) -> Result<BigUint> {
    let f = lambda.count_syt()?;
    Ok(&f * &f)
}

/// `B_n(q) = Σ_{π ∈ S_n} q^{bump(π)}` by walking `S_n`.
pub fn bn_by_enumeration(n: usize, cap: usize) -> Result<SparsePolynomial> {
    check_cap("B_n(q) by enumeration", n, cap)?;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for pi in permutations_of(n, cap)? {
        *counts.entry(bump(&pi)).or_default() += 1;
    }
    Ok(SparsePolynomial::from_terms(counts))
}

/// `B_n(q) = Σ_{λ ⊢ n} (f^λ)^2 q^{λ_2 + 2λ_3 + 3λ_4 + ...}`.
pub fn bn_by_shapes(n: usize) -> Result<SparsePolynomial> {
    sum_over_partitions(n, |lambda| Ok((bump_from_shape(lambda), squared_syt(lambda)?)))
}

/// `f^{(n-k,k)} = C(n; k, k, n-2k) / C(n-k+1, k)`, failing on inexact division.
fn two_row_syt(n: usize, k: usize) -> Result<BigUint> {
    let multinomial = factorial(n) / (factorial(k) * factorial(k) * factorial(n - 2 * k));
    let denominator = binomial(n - k + 1, k);
    if !(&multinomial % &denominator).is_zero() {
        return Err(Error::Internal(format!("C({n};{k},{k},{}) is not divisible by C({},{k})", n - 2 * k, n - k + 1)));
    }
    Ok(multinomial / denominator)
}

/// Bump generating function over 321-avoiding permutations:
/// `1 + Σ_{1 <= k <= n/2} [C(n; k, k, n-2k) / C(n-k+1, k)]^2 q^k`.
pub fn bn_321_closed_form(n: usize) -> Result<SparsePolynomial> {
    let mut poly = SparsePolynomial::one();
    for k in 1..=n / 2 {
        let f = two_row_syt(n, k)?;
        poly.add_term(k, &f * &f);
    }
    Ok(poly)
}

/// The same polynomial by filtering `S_n` for 321-avoiders.
pub fn bn_321_by_enumeration(n: usize, cap: usize) -> Result<SparsePolynomial> {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for pi in permutations_of(n, cap)?.filter(|p| p.avoids_321()) {
        *counts.entry(bump(&pi)).or_default() += 1;
    }
    Ok(SparsePolynomial::from_terms(counts))
}

/// `a_k^2 >= a_{k-1} a_{k+1}` for every interior `k` of `support`, with
/// missing coefficients read as zero.
pub fn is_log_concave(p: &SparsePolynomial, support: RangeInclusive<usize>) -> bool {
    let (lo, hi) = (*support.start(), *support.end());
    if hi < lo + 2 {
        return true;
    }
    (lo + 1..hi).all(|k| {
        let a = p.coeff(k);
        &a * &a >= p.coeff(k - 1) * p.coeff(k + 1)
    })
}

/// `B_n(q, t) = Σ_π q^{bump(π)} t^{bump(r(π))}` where `r` reverses the word.
///
/// The shape path uses that reversal conjugates the RS shape.
pub fn bn_bivariate(n: usize, method: Method, cap: usize) -> Result<BivariatePolynomial> {
    let mut poly = BivariatePolynomial::zero();
    match method {
        Method::Enumeration => {
            check_cap("B_n(q,t) by enumeration", n, cap)?;
            let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            for pi in permutations_of(n, cap)? {
                *counts.entry((bump(&pi), bump(&pi.reverse()))).or_default() += 1;
            }
            for ((a, b), c) in counts {
                poly.add_term(a, b, c.into());
            }
        }
        Method::Shape => {
            for lambda in partitions_of(n) {
                let a = bump_from_shape(&lambda);
                let b = bump_from_shape(&lambda.conjugate());
                poly.add_term(a, b, squared_syt(&lambda)?);
            }
        }
        other => {
            return Err(Error::MalformedInput(format!("B_n(q,t) has no {other:?} method")));
        }
    }
    Ok(poly)
}

/// `q^{-n} Σ_{λ ⊢ n} (f^λ)^2 Π_{c ∈ λ} q^{h(c)}`.
pub fn bn_diagonal_via_hooks(n: usize) -> Result<SparsePolynomial> {
    sum_over_partitions(n, |lambda| {
        let exponent = lambda
            .hook_sum()
            .checked_sub(n)
            .ok_or_else(|| Error::Internal(format!("hook sum of {lambda} is below n")))?;
        Ok((exponent, squared_syt(lambda)?))
    })
}

/// `Σ_{c ∈ λ} h(c) == bump(λ) + bump(λ') + |λ|`.
pub fn hook_sum_identity_check(lambda: &Partition) -> bool {
    lambda.hook_sum() == bump_from_shape(lambda) + bump_from_shape(&lambda.conjugate()) + lambda.size()
}

/// `T_n(q) = Σ_{λ ⊢ n} q^{bump(λ)}`.
pub fn tn_direct(n: usize) -> SparsePolynomial {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for lambda in partitions_of(n) {
        *counts.entry(bump_from_shape(&lambda)).or_default() += 1;
    }
    SparsePolynomial::from_terms(counts)
}

/// `T_n(q) = [t^n] Π_{i=1}^{n} 1 / (1 - q^{C(i,2)} t^i)`.
pub fn tn_via_product(n: usize) -> SparsePolynomial {
    let mut series = PowerSeriesTruncated::one(n);
    for i in 1..=n {
        series.mul_geometric(i * (i - 1) / 2, i);
    }
    series.coeff(n).clone()
}

/// Stable head of `T_n(q)`: `[z^i] Π_{k >= 2} 1 / (1 - z^{C(k,2)})` for
/// `i <= max_exponent`, i.e. partitions of `i` into triangular numbers.
pub fn tn_head_series(max_exponent: usize) -> SparsePolynomial {
    let mut ways = vec![BigUint::zero(); max_exponent + 1];
    ways[0] = 1u32.into();
    for k in 2.. {
        let part = k * (k - 1) / 2;
        if part > max_exponent {
            break;
        }
        for i in part..=max_exponent {
            let carried = ways[i - part].clone();
            ways[i] += carried;
        }
    }
    SparsePolynomial::from_terms(ways.into_iter().enumerate())
}

/// Exact average of `bump` over `S_n`, with its leading-order estimate
/// `128 n^{3/2} / (27 π^2)` for comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeanBump {
    pub n: usize,
    /// Reduced to lowest terms.
    #[serde(with = "rational_string")]
    pub exact: BigRational,
    pub approx: f64,
    pub asymptotic: f64,
    pub ratio: f64,
}

pub fn asymptotic_mean_bump(n: usize) -> f64 {
    128.0 * (n as f64).powf(1.5) / (27.0 * std::f64::consts::PI.powi(2))
}

/// `Σ_{λ ⊢ n} (f^λ)^2 bump(λ) / n!`.
pub fn mean_bump_exact(n: usize, cap: usize) -> Result<MeanBump> {
    check_cap("mean bump", n, cap)?;
    let shapes: Vec<Partition> = partitions_of(n).collect();
    let total: BigUint = shapes
        .par_iter()
        .map(|lambda| -> Result<BigUint> { Ok(squared_syt(lambda)? * bump_from_shape(lambda)) })
        .try_reduce(BigUint::zero, |a, b| Ok(a + b))?;
    let exact = BigRational::new(BigInt::from(total), BigInt::from(factorial(n)));
    let approx = exact.to_f64().unwrap_or(f64::NAN);
    let asymptotic = asymptotic_mean_bump(n);
    let ratio = if asymptotic > 0.0 { approx / asymptotic } else { f64::NAN };
    Ok(MeanBump { n, exact, approx, asymptotic, ratio })
}

mod rational_string {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(|_| D::Error::custom(format!("bad rational `{raw}`")))
    }
}

/// JSON form of a computed polynomial: `{"n": .., "coeffs": {"e": "c", ..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialReport<P> {
    pub n: usize,
    pub coeffs: P,
}

/// `Σ_π q^{weakbump(π)} = Σ_{λ ⊢ n} (f^λ)^2 q^{n - λ_1}`.
pub fn weakbump_polynomial(n: usize, method: Method, cap: usize) -> Result<SparsePolynomial> {
    match method {
        Method::Enumeration => {
            let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
            for pi in permutations_of(n, cap)? {
                *counts.entry(weakbump(&pi)).or_default() += 1;
            }
            Ok(SparsePolynomial::from_terms(counts))
        }
        Method::Shape => sum_over_partitions(n, |lambda| Ok((n - lambda.part(1), squared_syt(lambda)?))),
        other => Err(Error::MalformedInput(format!("the weakbump polynomial has no {other:?} method"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_count;
    use crate::permutation::permutations_of;

    fn poly(dense: &[u64]) -> SparsePolynomial {
        SparsePolynomial::from_dense(dense)
    }

    fn b8_printed() -> SparsePolynomial {
        SparsePolynomial::from_terms([
            (0usize, 1u64),
            (1, 49),
            (2, 400),
            (3, 1225),
            (4, 4292),
            (5, 4900),
            (6, 4361),
            (7, 9864),
            (8, 3136),
            (9, 4900),
            (10, 1225),
            (11, 4096),
            (12, 196),
            (13, 784),
            (15, 441),
            (16, 400),
            (21, 49),
            (28, 1),
        ])
    }

    #[test]
    fn first_permutation_polynomials() {
        assert_eq!(bn_by_enumeration(1, 8).unwrap(), poly(&[1]));
        assert_eq!(bn_by_enumeration(2, 8).unwrap(), poly(&[1, 1]));
        assert_eq!(bn_by_enumeration(3, 8).unwrap(), poly(&[1, 4, 0, 1]));
        assert_eq!(bn_by_enumeration(4, 8).unwrap(), poly(&[1, 9, 4, 9, 0, 0, 1]));
        assert_eq!(bn_by_enumeration(5, 8).unwrap(), poly(&[1, 16, 25, 36, 25, 0, 16, 0, 0, 0, 1]));
        assert!(bn_by_enumeration(9, 8).is_err());
    }

    #[test]
    fn b8_by_shapes() {
        let b8 = bn_by_shapes(8).unwrap();
        assert_eq!(b8, b8_printed());
        assert_eq!(b8.term_count(), 18);
        assert!(b8.coeff(25).is_zero());
        assert_eq!(b8.eval_at_one(), factorial(8));
    }

    #[test]
    fn shapes_match_enumeration() {
        for n in 0..=8 {
            assert_eq!(bn_by_shapes(n).unwrap(), bn_by_enumeration(n, 8).unwrap(), "n={n}");
        }
        for n in 0..=12 {
            let b = bn_by_shapes(n).unwrap();
            assert_eq!(b.eval_at_one(), factorial(n));
            // top exponent C(n,2) comes only from the single column
            assert_eq!(b.degree(), Some(n * n.saturating_sub(1) / 2));
            assert_eq!(b.coeff(n * n.saturating_sub(1) / 2), BigUint::from(1u32));
        }
    }

    #[test]
    fn avoiders() {
        assert_eq!(bn_321_closed_form(4).unwrap(), poly(&[1, 9, 4]));
        assert_eq!(bn_321_closed_form(2).unwrap(), poly(&[1, 1]));
        assert_eq!(bn_321_closed_form(1).unwrap(), poly(&[1]));
        for n in 1..=9 {
            assert_eq!(bn_321_closed_form(n).unwrap(), bn_321_by_enumeration(n, 10).unwrap(), "n={n}");
        }
    }

    #[test]
    fn log_concavity() {
        for n in 2..=60 {
            let p = bn_321_closed_form(n).unwrap();
            assert!(is_log_concave(&p, 1..=n / 2), "n={n}");
        }
        assert!(!is_log_concave(&poly(&[1, 4, 0, 1]), 0..=3));
        assert!(is_log_concave(&poly(&[5]), 0..=0));
    }

    #[test]
    fn bivariate() {
        let mut expected = BivariatePolynomial::zero();
        expected.add_term(0, 1, 1u32.into());
        expected.add_term(1, 0, 1u32.into());
        assert_eq!(bn_bivariate(2, Method::Enumeration, 8).unwrap(), expected);
        let one = bn_bivariate(1, Method::Enumeration, 8).unwrap();
        assert_eq!(one.coeff(0, 0), BigUint::from(1u32));
        assert_eq!(one.term_count(), 1);
        for n in 0..=7 {
            let b = bn_bivariate(n, Method::Enumeration, 8).unwrap();
            assert!(b.is_symmetric());
            assert_eq!(b, bn_bivariate(n, Method::Shape, 8).unwrap());
            assert_eq!(b.diagonal(), bn_diagonal_via_hooks(n).unwrap());
        }
        assert!(bn_bivariate(3, Method::Product, 8).is_err());
    }

    #[test]
    fn diagonal_small_cases() {
        assert_eq!(bn_diagonal_via_hooks(1).unwrap(), poly(&[1]));
        assert_eq!(bn_diagonal_via_hooks(2).unwrap(), poly(&[0, 2]));
    }

    #[test]
    fn hook_identity() {
        let lambda = Partition::new(vec![4, 2, 1, 1, 1]).unwrap();
        // hooks 8 4 2 1 / 5 1 / 3 / 2 / 1; bump(λ) = 11, bump(λ') = 7
        assert_eq!(lambda.hook_sum(), 27);
        assert_eq!(bump_from_shape(&lambda), 11);
        assert_eq!(bump_from_shape(&lambda.conjugate()), 7);
        assert!(hook_sum_identity_check(&lambda));
        assert!(hook_sum_identity_check(&Partition::new(vec![1]).unwrap()));
        for n in 0..=30 {
            assert!(partitions_of(n).all(|l| hook_sum_identity_check(&l)), "n={n}");
        }
    }

    #[test]
    fn partition_polynomials() {
        assert_eq!(tn_direct(0), poly(&[1]));
        assert_eq!(tn_direct(3), poly(&[1, 1, 0, 1]));
        assert_eq!(tn_direct(4), poly(&[1, 1, 1, 1, 0, 0, 1]));
        assert_eq!(tn_direct(5), poly(&[1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 1]));
        assert_eq!(tn_via_product(0), poly(&[1]));
        assert_eq!(tn_via_product(3), poly(&[1, 1, 0, 1]));
        for n in 0..=40 {
            let t = tn_direct(n);
            assert_eq!(t, tn_via_product(n), "n={n}");
            assert_eq!(t.eval_at_one(), partition_count(n));
        }
    }

    #[test]
    fn head_series() {
        assert_eq!(tn_head_series(5), poly(&[1, 1, 1, 2, 2, 2]));
        assert_eq!(tn_head_series(6).coeff(6), BigUint::from(4u32));
        let head = tn_head_series(10);
        for i in 0..=10 {
            for n in 2 * i..=30 {
                assert_eq!(tn_direct(n).coeff(i), head.coeff(i), "i={i} n={n}");
            }
        }
    }

    #[test]
    fn mean_bump() {
        let m3 = mean_bump_exact(3, 60).unwrap();
        assert_eq!(m3.exact, BigRational::new(7.into(), 6.into()));
        assert_eq!(mean_bump_exact(1, 60).unwrap().exact, BigRational::zero());
        assert!(mean_bump_exact(61, 60).is_err());
        // against direct enumeration
        for n in 1..=7 {
            let total: usize = permutations_of(n, 10).unwrap().map(|p| bump(&p)).sum();
            let expected = BigRational::new(total.into(), BigInt::from(factorial(n)));
            assert_eq!(mean_bump_exact(n, 60).unwrap().exact, expected);
        }
        let report = PolynomialReport { n: 3, coeffs: bn_by_shapes(3).unwrap() };
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(text, r#"{"n":3,"coeffs":{"0":"1","1":"4","3":"1"}}"#);
        assert_eq!(serde_json::from_str::<PolynomialReport<SparsePolynomial>>(&text).unwrap(), report);
        let json = serde_json::to_string(&m3).unwrap();
        assert_eq!(serde_json::from_str::<MeanBump>(&json).unwrap(), m3);
    }

    #[test]
    fn weakbump_distribution() {
        assert_eq!(weakbump_polynomial(3, Method::Shape, 8).unwrap(), poly(&[1, 4, 1]));
        assert_eq!(weakbump_polynomial(1, Method::Shape, 8).unwrap(), poly(&[1]));
        for n in 0..=8 {
            assert_eq!(
                weakbump_polynomial(n, Method::Shape, 8).unwrap(),
                weakbump_polynomial(n, Method::Enumeration, 8).unwrap()
            );
        }
        // reversed LIS distribution of S_4
        let mut lis_counts = [0u64; 5];
        for pi in permutations_of(4, 10).unwrap() {
            let w = pi.as_slice();
            let mut best = [1usize; 4];
            for j in 0..4 {
                for i in 0..j {
                    if w[i] < w[j] {
                        best[j] = best[j].max(best[i] + 1);
                    }
                }
            }
            lis_counts[*best.iter().max().unwrap()] += 1;
        }
        let reversed: Vec<u64> = (0..4).map(|k| lis_counts[4 - k]).collect();
        assert_eq!(weakbump_polynomial(4, Method::Shape, 8).unwrap(), poly(&reversed));
        assert_eq!(reversed, vec![1, 9, 13, 1]);
    }
}
