//! Cross-checks every registered formula against the enumeration oracle,
//! plus the series identities and the Catalan bijection.

use num_bigint::BigUint;

use crate::bijection::certify_bijection;
use crate::closed_forms::registry::{registry, FormulaEntry, KDomain};
use crate::closed_forms::{
    distribution_formula, f_falling, f_falling_rec, f_simion, AvSequence, StatMatrix,
};
use crate::enumeration::{count_avoiders, distribution, group_order, EnumSpec};
use crate::error::Result;
use crate::pattern::{ColoredPattern, Mode};
use crate::series::{
    egf_product_check, ogf_upsilon_coeffs, ogf_upsilon_double_sum, pat2_coeffs, pat2_ode_residual,
};

/// Largest `k` tried for formulas valid for every `k`.
pub const MAX_K: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    /// `(n, k)` pairs or terms compared.
    pub cases: usize,
    pub mismatches: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.cases > 0
    }
}

/// `(n, k)` pairs in the entry's domain with `k^n n! ≤ max_budget`.
pub fn oracle_cases(entry: &FormulaEntry, max_budget: u64) -> Vec<(usize, usize)> {
    let ks: Vec<usize> = match entry.k_domain {
        KDomain::Any => (1..=MAX_K).collect(),
        KDomain::Fixed(k) => vec![k],
    };
    let cap = BigUint::from(max_budget);
    let mut out = Vec::new();
    for k in ks {
        let mut n = entry.n_min;
        while group_order(n, k) <= cap {
            out.push((n, k));
            n += 1;
        }
    }
    out
}

pub fn verify_formula(entry: &FormulaEntry, max_budget: u64) -> Result<CheckResult> {
    let set = entry.pattern_set()?;
    let mut mismatches = Vec::new();
    let cases = oracle_cases(entry, max_budget);
    for &(n, k) in &cases {
        let formula = entry.evaluate(n, k)?;
        let oracle = count_avoiders(EnumSpec::new(n, k)?.with_budget(max_budget), &set)?;
        if formula != oracle {
            mismatches.push(format!("n={n} k={k}: formula {formula}, oracle {oracle}"));
        }
    }
    Ok(CheckResult {
        id: entry.id.clone(),
        cases: cases.len(),
        mismatches,
    })
}

fn compare<T: PartialEq + std::fmt::Display>(
    id: &str,
    pairs: impl IntoIterator<Item = (String, T, T)>,
) -> CheckResult {
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for (label, a, b) in pairs {
        cases += 1;
        if a != b {
            mismatches.push(format!("{label}: {a} vs {b}"));
        }
    }
    CheckResult {
        id: id.to_string(),
        cases,
        mismatches,
    }
}

/// Recursion against the Simion sum, `n ≤ n_max`.
pub fn check_pat2(n_max: usize) -> CheckResult {
    let a = pat2_coeffs(n_max);
    compare(
        "pat2-simion",
        (0..=n_max).map(|n| (format!("n={n}"), a.values()[n].clone(), f_simion(n))),
    )
}

pub fn check_pat2_ode(order: usize) -> CheckResult {
    let r = pat2_ode_residual(order);
    compare(
        "pat2-ode",
        r.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("t^{i}"), c.clone(), num_rational::BigRational::default())),
    )
}

/// Rational-function coefficients against the double sum.
pub fn check_ogf_forms(k_max: usize, n_max: usize) -> Result<CheckResult> {
    let mut pairs = Vec::new();
    for k in 1..=k_max {
        let coeffs = ogf_upsilon_coeffs(k, n_max)?;
        for (n, c) in coeffs.into_iter().enumerate() {
            pairs.push((format!("n={n} k={k}"), c, ogf_upsilon_double_sum(k, n)));
        }
    }
    Ok(compare("ogf-double-sum", pairs))
}

pub fn check_egf_products(k_max: usize, n_max: usize) -> Result<CheckResult> {
    let mut pairs = Vec::new();
    for k in 1..=k_max {
        for (name, a) in [("ones", AvSequence::ones(n_max)), ("catalan", AvSequence::catalan(n_max))] {
            pairs.push((format!("{name} k={k}"), egf_product_check(&a, k, n_max)?, true));
        }
    }
    Ok(compare("egf-product", pairs))
}

pub fn check_falling_recursion(n_max: usize, k_max: usize) -> CheckResult {
    let pairs = (1..=n_max).flat_map(|n| {
        (1..=k_max).map(move |k| (format!("n={n} k={k}"), f_falling(n, k), f_falling_rec(n, k)))
    });
    compare("falling-closed-vs-rec", pairs)
}

/// Oracle distribution of occurrences of `(1-2, 0 0)` against the Mahonian
/// convolution, every statistic value.
pub fn check_mahonian_distribution(n_max: usize, k_max: usize, budget: u64) -> Result<CheckResult> {
    let p = ColoredPattern::parse("1-2/0,0", Mode::Reduced)?;
    let j_max = n_max * n_max.saturating_sub(1) / 2;
    let m = StatMatrix::mahonian(n_max, j_max);
    let mut pairs = Vec::new();
    for k in 1..=k_max {
        for n in 0..=n_max {
            let table = distribution(EnumSpec::new(n, k)?.with_budget(budget), &p)?;
            for j in 0..=j_max {
                pairs.push((format!("n={n} k={k} j={j}"), table.get(j), distribution_formula(n, k, j, &m)?));
            }
        }
    }
    Ok(compare("mahonian-distribution", pairs))
}

pub fn check_bijection(n_max: usize, budget: u64) -> Result<CheckResult> {
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for n in 0..=n_max {
        let r = certify_bijection(n, budget)?;
        cases += 1;
        if !r.passed() {
            mismatches.push(format!(
                "n={n}: {} avoiders, {} valid, {} distinct, expected {}; {}",
                r.avoiders,
                r.valid_images,
                r.distinct_images,
                r.expected,
                r.counterexample.unwrap_or_default()
            ));
        }
    }
    Ok(CheckResult {
        id: "cat-bijection".into(),
        cases,
        mismatches,
    })
}

/// Every registered formula against the oracle, then the identity checks,
/// each bounded by `max_budget` elements per enumeration.
pub fn verify_all(max_budget: u64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for entry in registry() {
        out.push(verify_formula(&entry, max_budget)?);
    }
    out.push(check_falling_recursion(30, 10));
    out.push(check_pat2(12));
    out.push(check_pat2_ode(15));
    out.push(check_ogf_forms(6, 12)?);
    out.push(check_egf_products(4, 8)?);
    let mut n = 0;
    while n < 5 && group_order(n + 1, 3) <= BigUint::from(max_budget) {
        n += 1;
    }
    out.push(check_mahonian_distribution(n, 3, max_budget)?);
    let mut n = 0;
    while n < 8 && group_order(n + 1, 2) <= BigUint::from(max_budget) {
        n += 1;
    }
    out.push(check_bijection(n, max_budget)?);
    Ok(out)
}
