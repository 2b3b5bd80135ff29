//! Truncated power series over the rationals and the generating-function
//! identities for the two-colour and sign-colour families.
//!
//! Coefficients are stored as the coefficient of `t^n` in both kinds, so an
//! EGF for counts `a_n` holds `a_n / n!`. Arithmetic is identical for the two
//! kinds; the tag only guards against mixing them.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::closed_forms::{f_product, factorial, positive_compositions, rational_to_count, AvSequence};
use crate::error::{invalid, Error, Result};

pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Ogf,
    Egf,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Ogf => "ogf",
            SeriesKind::Egf => "egf",
        })
    }
}

/// `Σ_{n ≤ order} c_n t^n`, known exactly up to `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
    kind: SeriesKind,
}

fn ratio(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigRational>, kind: SeriesKind) -> Result<Self> {
        if coeffs.is_empty() {
            return invalid("a truncated series needs at least the constant term");
        }
        Ok(TruncatedSeries { coeffs, kind })
    }

    pub fn zero(order: usize, kind: SeriesKind) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
            kind,
        }
    }

    pub fn one(order: usize, kind: SeriesKind) -> Self {
        let mut s = Self::zero(order, kind);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The series `t`.
    pub fn variable(order: usize, kind: SeriesKind) -> Self {
        let mut s = Self::zero(order, kind);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// OGF `Σ a_n t^n`.
    pub fn ogf(counts: &[BigUint]) -> Result<Self> {
        Self::new(counts.iter().map(ratio).collect(), SeriesKind::Ogf)
    }

    /// EGF `Σ a_n t^n / n!`.
    pub fn egf(counts: &[BigUint]) -> Result<Self> {
        Self::new(
            counts
                .iter()
                .enumerate()
                .map(|(n, a)| ratio(a) / ratio(&factorial(n)))
                .collect(),
            SeriesKind::Egf,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^n`, or `None` past the known order.
    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    /// The counted sequence: `c_n` for an OGF, `n! c_n` for an EGF. Fails if
    /// some entry is not a non-negative integer.
    pub fn counts(&self) -> Result<Vec<BigUint>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let scaled = match self.kind {
                    SeriesKind::Ogf => c.clone(),
                    SeriesKind::Egf => c * ratio(&factorial(n)),
                };
                rational_to_count(scaled, &format!("coefficient {n}"))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = self.clone();
        s.coeffs.truncate(order + 1);
        s
    }

    fn same_kind(&self, other: &Self) -> Result<usize> {
        if self.kind != other.kind {
            return invalid(format!("cannot combine {} with {}", self.kind, other.kind));
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let order = self.same_kind(other)?;
        let coeffs = (0..=order).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect();
        Ok(TruncatedSeries { coeffs, kind: self.kind })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let order = self.same_kind(other)?;
        let coeffs = (0..=order).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect();
        Ok(TruncatedSeries { coeffs, kind: self.kind })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            kind: self.kind,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.same_kind(other)?;
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&i| !self.coeffs[i].is_zero())
                    .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                    .sum()
            })
            .collect();
        Ok(TruncatedSeries { coeffs, kind: self.kind })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order(), self.kind);
        for _ in 0..e {
            acc = acc.mul(self).expect("same kind");
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return invalid("series with zero constant term has no reciprocal");
        }
        let mut inv: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        inv.push(c0.recip());
        for n in 1..self.coeffs.len() {
            let s: BigRational = (1..=n).map(|i| &self.coeffs[i] * &inv[n - i]).sum();
            inv.push(-s / c0);
        }
        Ok(TruncatedSeries { coeffs: inv, kind: self.kind })
    }

    /// `d/dt`; the result is known to one order less (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        let coeffs: Vec<BigRational> = if self.order() == 0 {
            vec![BigRational::zero()]
        } else {
            (1..self.coeffs.len())
                .map(|n| &self.coeffs[n] * BigRational::from_integer(BigInt::from(n)))
                .collect()
        };
        TruncatedSeries { coeffs, kind: self.kind }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// Avoiders of `(1-2, 0 1)` in `C_2 ≀ S_n` from
/// `A_{n+1} = Σ_{i=0}^{n} (n!/i!) A_i + (n+1) A_n`, `A_0 = 1`.
pub fn pat2_coeffs(n_max: usize) -> AvSequence {
    let mut a: Vec<BigUint> = vec![BigUint::one()];
    for n in 0..n_max {
        // n!/i! accumulated from i = n downwards
        let mut ratio_fact = BigUint::one();
        let mut next = BigUint::zero();
        for i in (0..=n).rev() {
            next += &ratio_fact * &a[i];
            ratio_fact *= i.max(1);
        }
        next += BigUint::from(n + 1) * &a[n];
        a.push(next);
    }
    AvSequence::new(a, "pat2 recursion")
}

/// `(1-x)^2 A'(x) - (2-x) A(x)` for the EGF of [`pat2_coeffs`], known up to
/// `order`. Zero iff the recursion satisfies the ODE to that order.
pub fn pat2_ode_residual(order: usize) -> TruncatedSeries {
    let a = TruncatedSeries::egf(pat2_coeffs(order + 1).values()).expect("non-empty");
    let da = a.derivative();
    let x = TruncatedSeries::variable(order, SeriesKind::Egf);
    let one = TruncatedSeries::one(order, SeriesKind::Egf);
    let one_minus_x = one.sub(&x).expect("same kind");
    let two_minus_x = one.add(&one_minus_x).expect("same kind");
    let lhs = one_minus_x.pow(2).mul(&da).expect("same kind");
    let rhs = two_minus_x.mul(&a).expect("same kind");
    lhs.sub(&rhs).expect("same kind")
}

/// `C(t) = Σ_{n≥1} n! t^n`.
fn factorial_ogf_tail(order: usize) -> TruncatedSeries {
    let mut counts: Vec<BigUint> = (0..=order).map(factorial).collect();
    counts[0] = BigUint::zero();
    TruncatedSeries::ogf(&counts).expect("non-empty")
}

/// Coefficients of `(1 + C(t)) / (1 - (k-1) C(t))`: avoiders of
/// `{(1-2,1 0), (1-2,0 1)}` in `C_k ≀ S_n` for `n ≤ n_max`.
pub fn ogf_upsilon_coeffs(k: usize, n_max: usize) -> Result<Vec<BigUint>> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let c = factorial_ogf_tail(n_max);
    let one = TruncatedSeries::one(n_max, SeriesKind::Ogf);
    let km1 = BigRational::from_integer(BigInt::from(k - 1));
    let den = one.sub(&c.scale(&km1))?;
    one.add(&c)?.mul(&den.reciprocal()?)?.counts()
}

/// The same count as an explicit double sum: `k n!` plus, for every
/// composition of `n` into `s ≥ 2` positive parts, `k (k-1)^{s-1} ∏ a_i!`.
pub fn ogf_upsilon_double_sum(k: usize, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let kk = BigUint::from(k);
    let mut total = &kk * factorial(n);
    for s in 2..=n {
        let weight = &kk * num_traits::pow(BigUint::from(k.saturating_sub(1)), s - 1);
        let inner: BigUint = positive_compositions(n, s)
            .map(|c| c.iter().map(|&a| factorial(a)).product::<BigUint>())
            .sum();
        total += weight * inner;
    }
    total
}

/// Checks that `n! [t^n] (Σ A_i t^i / i!)^k` equals the multinomial product
/// formula for every `n ≤ n_max`.
pub fn egf_product_check(a: &AvSequence, k: usize, n_max: usize) -> Result<bool> {
    if a.len() <= n_max {
        return Err(Error::InvalidInput(format!(
            "sequence has {} terms, need {}",
            a.len(),
            n_max + 1
        )));
    }
    let egf = TruncatedSeries::egf(&a.values()[..=n_max])?;
    let counts = egf.pow(k).counts()?;
    for (n, c) in counts.iter().enumerate() {
        if *c != f_product(n, k, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn reciprocal_of_one_minus_t() {
        let s = TruncatedSeries::new(vec![q(1), q(-1)], SeriesKind::Ogf).unwrap();
        let inv = s.reciprocal().unwrap();
        assert_eq!(inv.coeffs(), &[q(1), q(1)]);
        let long = TruncatedSeries::one(5, SeriesKind::Ogf)
            .sub(&TruncatedSeries::variable(5, SeriesKind::Ogf))
            .unwrap();
        assert_eq!(long.reciprocal().unwrap().coeffs(), vec![q(1); 6].as_slice());
    }

    #[test]
    fn reciprocal_needs_constant_term() {
        let s = TruncatedSeries::variable(3, SeriesKind::Ogf);
        assert!(s.reciprocal().is_err());
    }

    #[test]
    fn derivative_of_constant() {
        let d = TruncatedSeries::one(0, SeriesKind::Egf).derivative();
        assert!(d.is_zero());
        let d = TruncatedSeries::one(4, SeriesKind::Egf).derivative();
        assert_eq!(d.order(), 3);
        assert!(d.is_zero());
    }

    #[test]
    fn kinds_do_not_mix() {
        let a = TruncatedSeries::one(3, SeriesKind::Ogf);
        let b = TruncatedSeries::one(3, SeriesKind::Egf);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = TruncatedSeries::one(3, SeriesKind::Ogf);
        let b = TruncatedSeries::one(5, SeriesKind::Ogf);
        assert_eq!(a.mul(&b).unwrap().order(), 3);
    }

    #[test]
    fn pat2_prefix() {
        let a = pat2_coeffs(6);
        let want = [1u64, 2, 7, 34, 209, 1546, 13327];
        assert_eq!(a.values(), want.iter().map(|&x| u(x)).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn pat2_ode_holds() {
        let r = pat2_ode_residual(DEFAULT_ORDER);
        assert_eq!(r.order(), DEFAULT_ORDER);
        assert!(r.is_zero(), "{r}");
    }

    #[test]
    fn ogf_examples() {
        assert_eq!(ogf_upsilon_coeffs(2, 3).unwrap(), vec![u(1), u(2), u(6), u(22)]);
        assert_eq!(ogf_upsilon_coeffs(1, 4).unwrap(), vec![u(1), u(1), u(2), u(6), u(24)]);
        assert!(ogf_upsilon_coeffs(0, 3).is_err());
    }

    #[test]
    fn ogf_double_sum_agrees() {
        for k in 1..=6 {
            let coeffs = ogf_upsilon_coeffs(k, 10).unwrap();
            for (n, c) in coeffs.iter().enumerate() {
                assert_eq!(*c, ogf_upsilon_double_sum(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn ogf_double_sum_with_short_range_undercounts() {
        // stopping the outer sum at s = n - 1 drops the all-singletons term
        let short = |k: usize, n: usize| -> BigUint {
            let kk = BigUint::from(k);
            let mut t = &kk * factorial(n);
            for s in 2..n {
                let w = &kk * num_traits::pow(BigUint::from(k - 1), s - 1);
                let inner: BigUint = positive_compositions(n, s)
                    .map(|c| c.iter().map(|&a| factorial(a)).product::<BigUint>())
                    .sum();
                t += w * inner;
            }
            t
        };
        assert_eq!(short(2, 2), u(4));
        assert_eq!(ogf_upsilon_double_sum(2, 2), u(6));
    }

    #[test]
    fn egf_product_examples() {
        assert!(egf_product_check(&AvSequence::ones(8), 3, 8).unwrap());
        assert!(egf_product_check(&AvSequence::catalan(8), 2, 8).unwrap());
        assert!(egf_product_check(&AvSequence::ones(2), 2, 4).is_err());
    }

    #[test]
    fn egf_counts_round_trip() {
        let a: Vec<BigUint> = (0..8u64).map(|n| u(n * n + 1)).collect();
        assert_eq!(TruncatedSeries::egf(&a).unwrap().counts().unwrap(), a);
    }

    #[test]
    fn display_is_readable() {
        let s = TruncatedSeries::new(vec![q(1), q(0), q(3)], SeriesKind::Ogf).unwrap();
        assert_eq!(s.to_string(), "1 + 3*t^2 + O(t^3)");
    }
}
