//! Sparse polynomials with arbitrary-precision non-negative coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `Σ c_e q^e` with no zero coefficient stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePolynomial {
    coeffs: BTreeMap<usize, BigUint>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial::default()
    }

    pub fn one() -> Self {
        SparsePolynomial::monomial(0, BigUint::one())
    }

    pub fn monomial(exponent: usize, coeff: BigUint) -> Self {
        let mut p = SparsePolynomial::zero();
        p.add_term(exponent, coeff);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigUint>,
    {
        let mut p = SparsePolynomial::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficient list starting at `q^0`.
    pub fn from_dense<C: Into<BigUint> + Clone>(coeffs: &[C]) -> Self {
        SparsePolynomial::from_terms(coeffs.iter().cloned().enumerate())
    }

    pub fn add_term(&mut self, exponent: usize, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.coeffs.entry(exponent).or_default() += coeff;
    }

    pub fn coeff(&self, exponent: usize) -> BigUint {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a non-zero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Number of stored (non-zero) terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    /// `q^k · self`.
    pub fn shifted(&self, k: usize) -> Self {
        SparsePolynomial { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &other.coeffs {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }

    /// Coefficients `q^0 .. q^deg` including zeros.
    pub fn dense(&self) -> Vec<BigUint> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }
}

impl AddAssign<&SparsePolynomial> for SparsePolynomial {
    fn add_assign(&mut self, rhs: &SparsePolynomial) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for SparsePolynomial {
    fn add_assign(&mut self, rhs: SparsePolynomial) {
        for (e, c) in rhs.coeffs {
            self.add_term(e, c);
        }
    }
}

fn format_term(f: &mut fmt::Formatter<'_>, exponent: usize, coeff: &BigUint, var: &str) -> fmt::Result {
    if exponent == 0 {
        return write!(f, "{coeff}");
    }
    if !coeff.is_one() {
        write!(f, "{coeff}")?;
    }
    if exponent == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{exponent}")
    }
}

impl fmt::Display for SparsePolynomial {
    /// Ascending exponents joined by ` + `, e.g. `1 + 9q + 4q^2 + 9q^3 + q^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            format_term(f, e, c, "q")?;
        }
        Ok(())
    }
}

impl Serialize for SparsePolynomial {
    /// `{"exponent": "decimal coefficient", ...}` in ascending exponent order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.coeffs.iter().map(|(e, c)| (e.to_string(), c.to_string())))
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(deserializer)?;
        let mut p = SparsePolynomial::zero();
        for (e, c) in raw {
            let e: usize = e.parse().map_err(|_| D::Error::custom(format!("bad exponent `{e}`")))?;
            let c: BigUint = c.parse().map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficients are not stored"));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// `Σ c_{a,b} q^a t^b` with no zero coefficient stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(usize, usize), BigUint>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial::default()
    }

    pub fn add_term(&mut self, q_exp: usize, t_exp: usize, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.coeffs.entry((q_exp, t_exp)).or_default() += coeff;
    }

    pub fn coeff(&self, q_exp: usize, t_exp: usize) -> BigUint {
        self.coeffs.get(&(q_exp, t_exp)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigUint)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// `B(t, q)`.
    pub fn swapped(&self) -> BivariatePolynomial {
        BivariatePolynomial { coeffs: self.coeffs.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swapped()
    }

    /// The specialization `t = q`.
    pub fn diagonal(&self) -> SparsePolynomial {
        SparsePolynomial::from_terms(self.coeffs.iter().map(|(&(a, b), c)| (a + b, c.clone())))
    }

    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(a, b), c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (a, b) {
                (0, 0) => write!(f, "{c}")?,
                (_, 0) => format_term(f, a, c, "q")?,
                (0, _) => format_term(f, b, c, "t")?,
                _ => {
                    format_term(f, a, c, "q")?;
                    format_term(f, b, &BigUint::one(), "t")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for BivariatePolynomial {
    /// `{"a,b": "decimal coefficient", ...}` for the term `q^a t^b`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.coeffs.iter().map(|((a, b), c)| (format!("{a},{b}"), c.to_string())))
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(deserializer)?;
        let mut p = BivariatePolynomial::zero();
        for (k, c) in raw {
            let (a, b) = k
                .split_once(',')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| D::Error::custom(format!("bad exponent pair `{k}`")))?;
            let c: BigUint = c.parse().map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficients are not stored"));
            }
            p.add_term(a, b, c);
        }
        Ok(p)
    }
}

/// A power series in `t` truncated after `t^order`, with coefficients in `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeriesTruncated {
    coeffs: Vec<SparsePolynomial>,
}

impl PowerSeriesTruncated {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![SparsePolynomial::zero(); order + 1];
        coeffs[0] = SparsePolynomial::one();
        PowerSeriesTruncated { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[t^k]`.
    pub fn coeff(&self, k: usize) -> &SparsePolynomial {
        &self.coeffs[k]
    }

    /// Multiplies in place by `1 / (1 - q^q_exp t^t_exp)`, i.e. by the
    /// geometric series `Σ_m q^{m·q_exp} t^{m·t_exp}`, dropping powers of `t`
    /// above the order.
    pub fn mul_geometric(&mut self, q_exp: usize, t_exp: usize) {
        assert!(t_exp > 0, "a t^0 factor does not have a truncated expansion");
        for d in t_exp..self.coeffs.len() {
            let carried = self.coeffs[d - t_exp].shifted(q_exp);
            self.coeffs[d] += carried;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_table_style() {
        let b4 = SparsePolynomial::from_dense(&[1u32, 9, 4, 9, 0, 0, 1]);
        assert_eq!(b4.to_string(), "1 + 9q + 4q^2 + 9q^3 + q^6");
        assert_eq!(SparsePolynomial::one().to_string(), "1");
        assert_eq!(SparsePolynomial::zero().to_string(), "0");
        assert_eq!(SparsePolynomial::monomial(1, BigUint::from(2u32)).to_string(), "2q");
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let p = SparsePolynomial::from_dense(&[0u32, 0, 3, 0]);
        assert_eq!(p.term_count(), 1);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval_at_one(), BigUint::from(3u32));
    }

    #[test]
    fn json_shape() {
        let p = SparsePolynomial::from_dense(&[1u32, 4, 0, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"0":"1","1":"4","3":"1"}"#);
        assert_eq!(serde_json::from_str::<SparsePolynomial>(&s).unwrap(), p);
        assert!(serde_json::from_str::<SparsePolynomial>(r#"{"1":"0"}"#).is_err());
    }

    #[test]
    fn bivariate_basics() {
        let mut b = BivariatePolynomial::zero();
        b.add_term(0, 1, BigUint::one());
        b.add_term(1, 0, BigUint::one());
        assert!(b.is_symmetric());
        assert_eq!(b.diagonal().to_string(), "2q");
        assert_eq!(b.to_string(), "t + q");
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"0,1":"1","1,0":"1"}"#);
        assert_eq!(serde_json::from_str::<BivariatePolynomial>(&s).unwrap(), b);
    }

    #[test]
    fn geometric_series_counts_partitions() {
        // Π_{i<=n} 1/(1-t^i) truncated at t^n counts partitions
        let n = 12;
        let mut s = PowerSeriesTruncated::one(n);
        for i in 1..=n {
            s.mul_geometric(0, i);
        }
        let counts: Vec<BigUint> = (0..=n).map(|k| s.coeff(k).eval_at_one()).collect();
        let expected: Vec<BigUint> =
            [1u32, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77].iter().map(|&c| c.into()).collect();
        assert_eq!(counts, expected);
    }
}
