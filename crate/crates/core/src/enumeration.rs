//! Exhaustive enumeration of `C_k ≀ S_n`: the brute-force oracle every
//! closed form is checked against.
//!
//! Avoider counting extends elements one position at a time and abandons a
//! prefix as soon as it contains an occurrence, since occurrences inside a
//! prefix survive every extension. Work is split over the first
//! (value, color) pair and merged by exact addition, so the parallel result
//! is identical to a serial run.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::matching::{count_ending_at, occurs_ending_at};
use crate::pattern::{ColoredPattern, PatternSet};
use crate::perm::ColoredPermutation;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Size parameters of an exhaustive run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub k: usize,
    pub budget: u64,
}

impl EnumSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return invalid("number of colors must be at least 1");
        }
        Ok(EnumSpec {
            n,
            k,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// `k^n · n!`
    pub fn size(&self) -> BigUint {
        group_order(self.n, self.k)
    }

    pub fn check_budget(&self) -> Result<()> {
        let required = self.size();
        if required > BigUint::from(self.budget) {
            return Err(Error::BudgetExceeded {
                required,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Order of `C_k ≀ S_n`.
pub fn group_order(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for m in 1..=n {
        acc *= m;
        acc *= k;
    }
    acc
}

/// Counts indexed by a statistic value.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountTable {
    entries: BTreeMap<usize, BigUint>,
}

impl CountTable {
    pub fn get(&self, j: usize) -> BigUint {
        self.entries.get(&j).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn max_stat(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.entries.iter().map(|(&j, c)| (j, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn add(&mut self, j: usize, count: u64) {
        *self.entries.entry(j).or_insert_with(BigUint::zero) += count;
    }
}

impl FromIterator<(usize, BigUint)> for CountTable {
    fn from_iter<I: IntoIterator<Item = (usize, BigUint)>>(iter: I) -> Self {
        CountTable {
            entries: iter.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Every element of `C_k ≀ S_n`, lexicographic in `(σ, w)`.
pub struct AllElements {
    n: usize,
    k: usize,
    sigma: Vec<usize>,
    word: Vec<usize>,
    done: bool,
}

impl Iterator for AllElements {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        if self.done {
            return None;
        }
        let item = ColoredPermutation::from_raw_unchecked(self.sigma.clone(), self.word.clone(), self.k);
        if !advance_word(&mut self.word, self.k) && !next_permutation(&mut self.sigma) {
            self.done = true;
        }
        debug_assert!(self.n == self.sigma.len());
        Some(item)
    }
}

fn advance_word(word: &mut [usize], k: usize) -> bool {
    for c in word.iter_mut().rev() {
        if *c + 1 < k {
            *c += 1;
            return true;
        }
        *c = 0;
    }
    false
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| xs[j] > xs[i]).expect("successor exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

pub fn generate_all(spec: EnumSpec) -> Result<AllElements> {
    spec.check_budget()?;
    Ok(AllElements {
        n: spec.n,
        k: spec.k,
        sigma: (1..=spec.n).collect(),
        word: vec![0; spec.n],
        done: false,
    })
}

/// Prefix state shared by the depth-first enumerators.
struct Prefix {
    n: usize,
    k: usize,
    sigma: Vec<usize>,
    word: Vec<usize>,
    used: Vec<bool>,
    scratch: Vec<usize>,
}

impl Prefix {
    fn new(n: usize, k: usize) -> Self {
        Prefix {
            n,
            k,
            sigma: Vec::with_capacity(n),
            word: Vec::with_capacity(n),
            used: vec![false; n + 1],
            scratch: Vec::new(),
        }
    }

    fn push(&mut self, v: usize, c: usize) {
        self.sigma.push(v);
        self.word.push(c);
        self.used[v] = true;
    }

    fn pop(&mut self) {
        let v = self.sigma.pop().expect("non-empty prefix");
        self.word.pop();
        self.used[v] = false;
    }

    fn last_extension_clean(&mut self, patterns: &[ColoredPattern]) -> bool {
        let last = self.sigma.len() - 1;
        !patterns
            .iter()
            .any(|p| occurs_ending_at(p, &self.sigma, &self.word, last, &mut self.scratch))
    }

    /// Visits every avoiding completion of the current prefix.
    fn walk_avoiders<F: FnMut(&Prefix)>(&mut self, patterns: &[ColoredPattern], visit: &mut F) {
        if self.sigma.len() == self.n {
            visit(self);
            return;
        }
        for v in 1..=self.n {
            if self.used[v] {
                continue;
            }
            for c in 0..self.k {
                self.push(v, c);
                if self.last_extension_clean(patterns) {
                    self.walk_avoiders(patterns, visit);
                }
                self.pop();
            }
        }
    }

    fn walk_counts(&mut self, p: &ColoredPattern, so_far: usize, table: &mut BTreeMap<usize, u64>) {
        if self.sigma.len() == self.n {
            *table.entry(so_far).or_default() += 1;
            return;
        }
        for v in 1..=self.n {
            if self.used[v] {
                continue;
            }
            for c in 0..self.k {
                self.push(v, c);
                let last = self.sigma.len() - 1;
                let new = count_ending_at(p, &self.sigma, &self.word, last, &mut self.scratch);
                self.walk_counts(p, so_far + new, table);
                self.pop();
            }
        }
    }
}

fn first_moves(spec: &EnumSpec) -> Vec<(usize, usize)> {
    (1..=spec.n)
        .flat_map(|v| (0..spec.k).map(move |c| (v, c)))
        .collect()
}

/// Number of elements avoiding every pattern of `set`.
pub fn count_avoiders(spec: EnumSpec, set: &PatternSet) -> Result<BigUint> {
    spec.check_budget()?;
    if spec.n == 0 {
        return Ok(BigUint::from(1u32));
    }
    let patterns = set.patterns();
    let total: u64 = first_moves(&spec)
        .into_par_iter()
        .map(|(v, c)| {
            let mut prefix = Prefix::new(spec.n, spec.k);
            prefix.push(v, c);
            let mut count = 0u64;
            if prefix.last_extension_clean(patterns) {
                prefix.walk_avoiders(patterns, &mut |_| count += 1);
            }
            count
        })
        .sum();
    Ok(BigUint::from(total))
}

/// All avoiders of `set`, lexicographic in `(σ, w)`.
pub fn avoiders(spec: EnumSpec, set: &PatternSet) -> Result<Vec<ColoredPermutation>> {
    spec.check_budget()?;
    let patterns = set.patterns();
    let mut out: Vec<ColoredPermutation> = if spec.n == 0 {
        vec![ColoredPermutation::from_raw_unchecked(Vec::new(), Vec::new(), spec.k)]
    } else {
        first_moves(&spec)
            .into_par_iter()
            .map(|(v, c)| {
                let mut prefix = Prefix::new(spec.n, spec.k);
                prefix.push(v, c);
                let mut found = Vec::new();
                if prefix.last_extension_clean(patterns) {
                    prefix.walk_avoiders(patterns, &mut |pre| {
                        found.push(ColoredPermutation::from_raw_unchecked(
                            pre.sigma.clone(),
                            pre.word.clone(),
                            pre.k,
                        ))
                    });
                }
                found
            })
            .flatten()
            .collect()
    };
    out.sort();
    Ok(out)
}

/// Distribution of the number of occurrences of `p` over `C_k ≀ S_n`.
pub fn distribution(spec: EnumSpec, p: &ColoredPattern) -> Result<CountTable> {
    spec.check_budget()?;
    let mut table = CountTable::default();
    if spec.n == 0 {
        table.add(0, 1);
        return Ok(table);
    }
    let partials: Vec<BTreeMap<usize, u64>> = first_moves(&spec)
        .into_par_iter()
        .map(|(v, c)| {
            let mut prefix = Prefix::new(spec.n, spec.k);
            prefix.push(v, c);
            let mut local = BTreeMap::new();
            let first = count_ending_at(p, &prefix.sigma, &prefix.word, 0, &mut prefix.scratch);
            prefix.walk_counts(p, first, &mut local);
            local
        })
        .collect();
    for part in partials {
        for (j, c) in part {
            table.add(j, c);
        }
    }
    Ok(table)
}

/// Avoider counts for `n = 1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    pub values: Vec<BigUint>,
    /// First `n` that was refused by the budget, if any.
    pub truncated_at: Option<usize>,
}

pub fn sequence(k: usize, set: &PatternSet, n_max: usize, budget: u64) -> Result<Sequence> {
    let mut values = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let spec = EnumSpec::new(n, k)?.with_budget(budget);
        match count_avoiders(spec, set) {
            Ok(v) => values.push(v),
            Err(Error::BudgetExceeded { .. }) => {
                return Ok(Sequence {
                    values,
                    truncated_at: Some(n),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Sequence {
        values,
        truncated_at: None,
    })
}

/// Convenience for tests and the CLI: a count that is known to fit.
pub fn to_u64(x: &BigUint) -> u64 {
    x.to_u64().expect("count fits in u64")
}
