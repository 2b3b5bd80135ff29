//! Closed-form counts of avoiders in `C_k ≀ S_n`.
//!
//! Every function here is a transcription of a counting formula; none of
//! them enumerates. [`registry`] pairs each one with the pattern set it
//! counts so it can be checked against [`crate::enumeration`].

mod numbers;
pub mod registry;

pub use numbers::{
    binomial, catalan, factorial, falling, fibonacci, multinomial, positive_compositions,
    WeakCompositions,
};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{invalid, Error, Result};

/// Values `A_0, A_1, ...` of an avoidance sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvSequence {
    values: Vec<BigUint>,
    description: String,
}

impl AvSequence {
    pub fn new(values: Vec<BigUint>, description: impl Into<String>) -> Self {
        AvSequence {
            values,
            description: description.into(),
        }
    }

    /// `A_i = 1`, e.g. permutations avoiding `1-2`.
    pub fn ones(n_max: usize) -> Self {
        AvSequence::new(vec![BigUint::one(); n_max + 1], "all ones")
    }

    /// `A_i = C_i`, permutations avoiding any length-3 pattern.
    pub fn catalan(n_max: usize) -> Self {
        AvSequence::new((0..=n_max).map(catalan).collect(), "Catalan")
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> Result<&BigUint> {
        self.values.get(i).ok_or_else(|| {
            Error::InvalidInput(format!(
                "sequence `{}` has {} terms, index {i} requested",
                self.description,
                self.values.len()
            ))
        })
    }

    fn require(&self, n: usize) -> Result<()> {
        self.get(n).map(|_| ())
    }
}

/// Table `A_{i,j}` of `i`-permutations with statistic value `j`. Entries
/// past the end of a row are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatMatrix {
    rows: Vec<Vec<BigUint>>,
    width: usize,
}

impl StatMatrix {
    pub fn new(rows: Vec<Vec<BigUint>>, width: usize) -> Self {
        StatMatrix { rows, width }
    }

    /// Mahonian numbers for `i ≤ n_max`, `j ≤ j_max`.
    pub fn mahonian(n_max: usize, j_max: usize) -> Self {
        let rows = (0..=n_max)
            .map(|i| {
                let mut row = mahonian_row(i);
                row.truncate(j_max + 1);
                row
            })
            .collect();
        StatMatrix::new(rows, j_max + 1)
    }

    fn row(&self, i: usize) -> &[BigUint] {
        &self.rows[i]
    }
}

/// `Σ_{i_1+⋯+i_k=n} C(n; i_1,…,i_k)²`
pub fn f_mult(n: usize, k: usize) -> BigUint {
    WeakCompositions::new(n, k)
        .map(|c| multinomial(n, &c).pow(2u32))
        .sum()
}

/// `Σ A_{i_1}⋯A_{i_k} C(n; i_1,…,i_k)²`
pub fn f_mult_general(n: usize, k: usize, a: &AvSequence) -> Result<BigUint> {
    a.require(n)?;
    Ok(WeakCompositions::new(n, k)
        .map(|c| {
            let weight: BigUint = c.iter().map(|&i| a.values[i].clone()).product();
            weight * multinomial(n, &c).pow(2u32)
        })
        .sum())
}

/// Length-3 dashed count written with central binomials:
/// `Σ ∏ C(2i_m, i_m) / ∏ (i_m + 1) · C(n; i)²`.
pub fn f_length3_dashed(n: usize, k: usize) -> Result<BigUint> {
    let total: BigRational = WeakCompositions::new(n, k)
        .map(|c| {
            let num: BigUint = c.iter().map(|&i| binomial(2 * i as i64, i as i64)).product();
            let den: BigUint = c.iter().map(|&i| BigUint::from(i + 1)).product();
            let m = multinomial(n, &c).pow(2u32);
            BigRational::new(BigInt::from(num * m), BigInt::from(den))
        })
        .sum();
    rational_to_count(total, "length-3 dashed formula")
}

/// Coefficients of `∏_{m=1}^{i} (1 + q + ⋯ + q^{m-1})`.
pub fn mahonian_row(i: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=i {
        let mut next = vec![BigUint::zero(); row.len() + m - 1];
        for (d, c) in row.iter().enumerate() {
            for e in 0..m {
                next[d + e] += c;
            }
        }
        row = next;
    }
    row
}

/// Coefficient of `q^j` in the q-factorial `[i]_q!`.
pub fn mahonian(i: usize, j: usize) -> BigUint {
    mahonian_row(i).get(j).cloned().unwrap_or_default()
}

/// `Σ A_{i_1,j_1}⋯A_{i_k,j_k} C(n; i_1,…,i_k)²` over compositions of both
/// `n` and `j` into `k` parts.
pub fn distribution_formula(n: usize, k: usize, j: usize, a: &StatMatrix) -> Result<BigUint> {
    if a.rows.len() <= n {
        return invalid(format!("statistic table has {} rows, need {}", a.rows.len(), n + 1));
    }
    if a.width <= j {
        return invalid(format!("statistic table has {} columns, need {}", a.width, j + 1));
    }
    let mut total = BigUint::zero();
    for c in WeakCompositions::new(n, k) {
        // coefficient of q^j in ∏_m Σ_t A_{i_m,t} q^t, i.e. the inner
        // sum over j_1 + ⋯ + j_k = j
        let mut poly = vec![BigUint::zero(); j + 1];
        poly[0] = BigUint::one();
        for &i in &c {
            let row = a.row(i);
            let mut next = vec![BigUint::zero(); j + 1];
            for (d, x) in poly.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (t, y) in row.iter().enumerate().take(j + 1 - d) {
                    next[d + t] += x * y;
                }
            }
            poly = next;
        }
        total += &poly[j] * multinomial(n, &c).pow(2u32);
    }
    Ok(total)
}

/// `Σ_{j=0}^{n} j! C(n,j)²`
pub fn f_simion(n: usize) -> BigUint {
    (0..=n)
        .map(|j| factorial(j) * binomial(n as i64, j as i64).pow(2u32))
        .sum()
}

/// Counts for the four sign-forcing sets:
/// 1. `C(k,n) n! n!`, 2. `C(n+k-1,n) n!`, 3. `C(k,n) n!`, 4. `k n!`.
pub fn f_signs(variant: u8, n: usize, k: usize) -> Result<BigUint> {
    let (n_i, k_i) = (n as i64, k as i64);
    let nf = factorial(n);
    Ok(match variant {
        1 => binomial(k_i, n_i) * &nf * &nf,
        2 => binomial(n_i + k_i - 1, n_i) * nf,
        3 => binomial(k_i, n_i) * nf,
        4 => BigUint::from(k) * nf,
        other => return invalid(format!("unknown sign variant {other} (expected 1-4)")),
    })
}

/// `Σ C(n; a_1,…,a_k) A_{a_1}⋯A_{a_k}`: the `k`-th power of the EGF of `A`.
pub fn f_product(n: usize, k: usize, a: &AvSequence) -> Result<BigUint> {
    a.require(n)?;
    Ok(WeakCompositions::new(n, k)
        .map(|c| {
            let weight: BigUint = c.iter().map(|&i| a.values[i].clone()).product();
            weight * multinomial(n, &c)
        })
        .sum())
}

/// 1. `k Av_n`, 2. `C(k,n) Av_n`, 3. `C(k,n) n! Av_n`.
pub fn f_gamma(variant: u8, n: usize, k: usize, av_n: &BigUint) -> Result<BigUint> {
    let c = binomial(k as i64, n as i64);
    Ok(match variant {
        1 => BigUint::from(k) * av_n,
        2 => c * av_n,
        3 => c * factorial(n) * av_n,
        other => return invalid(format!("unknown gamma variant {other} (expected 1-3)")),
    })
}

/// `Σ_{a_1+⋯+a_k=n} a_1!⋯a_k!`
pub fn f_upsilon1(n: usize, k: usize) -> BigUint {
    WeakCompositions::new(n, k)
        .map(|c| c.iter().map(|&a| factorial(a)).product::<BigUint>())
        .sum()
}

/// `C(n+k-1, k-1)`
pub fn f_upsilon2(n: usize, k: usize) -> BigUint {
    binomial((n + k) as i64 - 1, k as i64 - 1)
}

/// Avoiders of `{(1-2,0 1), (1-2,1 0), (2-1,0 0)}` by falling factorials:
/// `k + Σ_{j=2}^{min(n,k)} (k)↓_j C(n-1, j-1)`.
///
/// An avoider's colour word is `i_1^{a_1} ⋯ i_s^{a_s}` with pairwise
/// distinct colours and increasing blocks of decreasing value ranges, so
/// there are `(k)↓_s` colourings for each of the `C(n-1, s-1)` block shapes.
pub fn f_falling(n: usize, k: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let tail: BigUint = (2..=n.min(k))
        .map(|j| falling(k, j) * binomial(n as i64 - 1, j as i64 - 1))
        .sum();
    BigUint::from(k) + tail
}

/// The falling-factorial form as printed in the source:
/// `1` for `k = 1`, `2n` for `k = 2`, `k + Σ_{j=2}^{k-1} (k)↓_j C(n,j)` for
/// `k ≥ 3`. It agrees with the recursion for `k ≤ 3` only.
pub fn f_falling_printed(n: usize, k: usize) -> BigUint {
    match k {
        0 => BigUint::zero(),
        1 => BigUint::one(),
        2 => BigUint::from(2 * n),
        _ => {
            let tail: BigUint = (2..k)
                .map(|j| falling(k, j) * binomial(n as i64, j as i64))
                .sum();
            BigUint::from(k) + tail
        }
    }
}

/// `Av_{n,1} = 1`, `Av_{n,k} = k + Σ_{s=1}^{n-1} k Av_{s,k-1}`.
pub fn f_falling_rec(n: usize, k: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    if k == 0 {
        return BigUint::zero();
    }
    // prev[s] = Av_{s, c-1} for s = 1..n
    let mut prev = vec![BigUint::one(); n + 1];
    for c in 2..=k {
        let mut cur = vec![BigUint::zero(); n + 1];
        let mut running = BigUint::zero();
        for s in 1..=n {
            cur[s] = BigUint::from(c) + BigUint::from(c) * &running;
            running += &prev[s];
        }
        prev = cur;
    }
    prev[n].clone()
}

/// `Σ_{j=0}^{n} j! (k-1)^j C(n,j)²`: exact-colour avoiders of any single
/// pattern of length 2.
pub fn f_mansour_single(n: usize, k: usize) -> BigUint {
    let base = BigUint::from(k.saturating_sub(1));
    (0..=n)
        .map(|j| factorial(j) * Pow::pow(&base, j as u32) * binomial(n as i64, j as i64).pow(2u32))
        .sum()
}

/// The three triple-pattern counts in `C_2 ≀ S_n`:
/// 1. `F_{2n+1}`, 2. `n! Σ_{j=0}^{n} C(n,j)^{-1}`, 3. `n! + n! Σ_{j=1}^{n} 1/j`.
///
/// Variants 2 and 3 are evaluated over the rationals and must come out
/// integral.
pub fn f_mw(variant: u8, n: usize) -> Result<BigUint> {
    let nf = BigRational::from_integer(BigInt::from(factorial(n)));
    match variant {
        1 => Ok(fibonacci(2 * n + 1)),
        2 => {
            let s: BigRational = (0..=n)
                .map(|j| {
                    BigRational::new(BigInt::one(), BigInt::from(binomial(n as i64, j as i64)))
                })
                .sum();
            rational_to_count(nf * s, "mw-2")
        }
        3 => {
            let h: BigRational = (1..=n)
                .map(|j| BigRational::new(BigInt::one(), BigInt::from(j)))
                .sum();
            rational_to_count(&nf + &nf * h, "mw-3")
        }
        other => invalid(format!("unknown variant {other} (expected 1-3)")),
    }
}

/// `C_{n+1}`: avoiders of `{(1-2,0 0), (1-2,0 1)}` in `C_2 ≀ S_n`.
pub fn f_catalan_pair(n: usize) -> BigUint {
    catalan(n + 1)
}

pub(crate) fn rational_to_count(x: BigRational, what: &str) -> Result<BigUint> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::Inconsistent(format!("{what} evaluated to {x}, not a count")));
    }
    Ok(x.to_integer().to_biguint().expect("non-negative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn mult_examples() {
        assert_eq!(f_mult(2, 2), u(6));
        assert_eq!(f_mult(0, 5), u(1));
        assert_eq!(f_mult(3, 1), u(1));
    }

    #[test]
    fn mult_general_examples() {
        assert_eq!(f_mult_general(2, 2, &AvSequence::catalan(2)).unwrap(), u(8));
        assert_eq!(f_mult_general(3, 2, &AvSequence::catalan(3)).unwrap(), u(46));
        assert_eq!(f_mult_general(2, 1, &AvSequence::ones(2)).unwrap(), u(1));
        assert!(f_mult_general(3, 2, &AvSequence::ones(2)).is_err());
    }

    #[test]
    fn length3_examples() {
        assert_eq!(f_length3_dashed(3, 2).unwrap(), u(46));
        assert_eq!(f_length3_dashed(3, 1).unwrap(), u(5));
        assert_eq!(f_length3_dashed(1, 3).unwrap(), u(3));
        for n in 0..8 {
            for k in 1..5 {
                assert_eq!(
                    f_length3_dashed(n, k).unwrap(),
                    f_mult_general(n, k, &AvSequence::catalan(n)).unwrap()
                );
            }
        }
    }

    #[test]
    fn mahonian_values() {
        assert_eq!(mahonian(3, 1), u(2));
        assert_eq!(mahonian(0, 0), u(1));
        assert_eq!(mahonian(3, 3), u(1));
        assert_eq!(mahonian(3, 4), u(0));
        for i in 0..=10 {
            assert_eq!(mahonian_row(i).iter().sum::<BigUint>(), factorial(i));
        }
    }

    #[test]
    fn distribution_formula_examples() {
        let m = StatMatrix::mahonian(3, 3);
        assert_eq!(distribution_formula(2, 2, 1, &m).unwrap(), u(2));
        assert_eq!(distribution_formula(3, 2, 3, &m).unwrap(), u(2));
        for n in 0..=3 {
            for k in 1..4 {
                assert_eq!(distribution_formula(n, k, 0, &m).unwrap(), f_mult(n, k));
            }
        }
        assert!(distribution_formula(4, 2, 0, &m).is_err());
        assert!(distribution_formula(3, 2, 4, &m).is_err());
    }

    #[test]
    fn simion_values() {
        let want = [1u64, 2, 7, 34, 209, 1546, 13327];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(f_simion(n), u(w));
        }
    }

    #[test]
    fn signs_examples() {
        assert_eq!(f_signs(1, 2, 2).unwrap(), u(4));
        assert_eq!(f_signs(2, 2, 2).unwrap(), u(6));
        assert_eq!(f_signs(4, 3, 2).unwrap(), u(12));
        assert_eq!(f_signs(3, 3, 2).unwrap(), u(0));
        assert!(f_signs(5, 1, 1).is_err());
    }

    #[test]
    fn product_examples() {
        assert_eq!(f_product(3, 2, &AvSequence::ones(3)).unwrap(), u(8));
        assert_eq!(f_product(0, 4, &AvSequence::ones(0)).unwrap(), u(1));
        assert_eq!(f_product(2, 2, &AvSequence::catalan(2)).unwrap(), u(6));
        assert!(f_product(3, 2, &AvSequence::ones(1)).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(f_gamma(1, 3, 2, &u(5)).unwrap(), u(10));
        assert_eq!(f_gamma(2, 2, 3, &u(1)).unwrap(), u(3));
        assert_eq!(f_gamma(3, 2, 2, &u(2)).unwrap(), u(4));
        assert!(f_gamma(4, 2, 2, &u(2)).is_err());
    }

    #[test]
    fn upsilon_examples() {
        assert_eq!(f_upsilon1(2, 2), u(5));
        assert_eq!(f_upsilon2(3, 2), u(4));
        for n in 1..8 {
            assert_eq!(f_upsilon1(n, 1), factorial(n));
        }
    }

    #[test]
    fn falling_examples() {
        assert_eq!(f_falling(4, 2), u(8));
        assert_eq!(f_falling(2, 3), u(9));
        assert_eq!(f_falling(5, 1), u(1));
        assert_eq!(f_falling_rec(4, 2), u(8));
        assert_eq!(f_falling_rec(2, 3), u(9));
        assert_eq!(f_falling_rec(5, 1), u(1));
    }

    #[test]
    fn falling_closed_form_matches_recursion() {
        for n in 1..=30 {
            for k in 1..=10 {
                assert_eq!(f_falling(n, k), f_falling_rec(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn printed_falling_form_diverges_from_k4() {
        for n in 1..=30 {
            for k in 1..=3 {
                assert_eq!(f_falling_printed(n, k), f_falling_rec(n, k), "n={n} k={k}");
            }
        }
        assert_eq!(f_falling_printed(2, 4), u(16));
        assert_eq!(f_falling_printed(3, 4), u(64));
        assert_eq!(f_falling_rec(3, 4), u(52));
    }

    #[test]
    fn mansour_examples() {
        assert_eq!(f_mansour_single(2, 2), u(7));
        assert_eq!(f_mansour_single(3, 1), u(1));
        assert_eq!(f_mansour_single(2, 3), u(17));
        // k = 2 recovers the Simion sum
        for n in 0..10 {
            assert_eq!(f_mansour_single(n, 2), f_simion(n));
        }
    }

    #[test]
    fn mw_examples() {
        assert_eq!(f_mw(1, 2).unwrap(), u(5));
        assert_eq!(f_mw(2, 2).unwrap(), u(5));
        assert_eq!(f_mw(3, 2).unwrap(), u(5));
        assert_eq!(f_mw(1, 1).unwrap(), u(2));
        assert_eq!(f_mw(2, 1).unwrap(), u(2));
        assert!(f_mw(4, 2).is_err());
    }

    #[test]
    fn mw_rational_forms_are_integral() {
        for n in 1..=20 {
            assert!(f_mw(2, n).is_ok(), "mw-2 at n={n}");
            assert!(f_mw(3, n).is_ok(), "mw-3 at n={n}");
        }
    }

    #[test]
    fn non_integer_is_reported() {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert!(matches!(rational_to_count(half, "x"), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn catalan_pair_values() {
        let want = [1u64, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(f_catalan_pair(n), u(w));
        }
    }
}
