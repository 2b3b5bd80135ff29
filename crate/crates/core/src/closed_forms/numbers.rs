//! Exact integer helpers and composition iterators.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, m| acc * m)
}

/// `C(n, r)`, zero outside `0 ≤ r ≤ n`.
pub fn binomial(n: i64, r: i64) -> BigUint {
    if n < 0 || r < 0 || r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n; parts)`; zero when the parts do not sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> BigUint {
    if parts.iter().sum::<usize>() != n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    let mut remaining = n as i64;
    for &p in parts {
        acc *= binomial(remaining, p as i64);
        remaining -= p as i64;
    }
    acc
}

/// `(k)↓_j = k(k-1)⋯(k-j+1)`, with `(k)↓_0 = 1`.
pub fn falling(k: usize, j: usize) -> BigUint {
    if j > k {
        return BigUint::zero();
    }
    (0..j).fold(BigUint::one(), |acc, i| acc * (k - i))
}

/// `C_n = C(2n, n) / (n + 1)`
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Weak compositions of `n` into exactly `parts` non-negative parts, in
/// lexicographic order starting from `(0, .., 0, n)`.
pub struct WeakCompositions {
    current: Option<Vec<usize>>,
}

impl WeakCompositions {
    pub fn new(n: usize, parts: usize) -> Self {
        let current = match parts {
            0 if n == 0 => Some(Vec::new()),
            0 => None,
            _ => {
                let mut v = vec![0; parts];
                v[parts - 1] = n;
                Some(v)
            }
        };
        WeakCompositions { current }
    }
}

impl Iterator for WeakCompositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let len = out.len();
        // rightmost i (not the last slot) with something to its right
        let mut suffix = 0;
        for i in (0..len.saturating_sub(1)).rev() {
            suffix += out[i + 1];
            if suffix > 0 {
                let mut next = out.clone();
                next[i] += 1;
                next[i + 1..].iter_mut().for_each(|x| *x = 0);
                next[len - 1] = suffix - 1;
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Compositions of `n` into exactly `parts` positive parts.
pub fn positive_compositions(n: usize, parts: usize) -> impl Iterator<Item = Vec<usize>> {
    let slack = if parts <= n { Some(n - parts) } else { None };
    let inner = slack.map(|s| WeakCompositions::new(s, parts));
    inner
        .into_iter()
        .flatten()
        .map(|c| c.into_iter().map(|x| x + 1).collect())
}
