//! Stable identifiers for every closed form, with the pattern set each one
//! counts and the `(n, k)` domain where it applies.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Pow;

use super::*;
use crate::error::{Error, Result};
use crate::pattern::{Mode, PatternSet};
use crate::series::{ogf_upsilon_coeffs, pat2_coeffs};

/// Which `k` a formula is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KDomain {
    Any,
    Fixed(usize),
}

impl fmt::Display for KDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KDomain::Any => f.write_str("k>=1"),
            KDomain::Fixed(k) => write!(f, "k={k}"),
        }
    }
}

type EvalFn = Box<dyn Fn(usize, usize) -> Result<BigUint> + Send + Sync>;

pub struct FormulaEntry {
    pub id: String,
    pub title: String,
    /// `;`-separated pattern encodings.
    pub patterns: String,
    pub mode: Mode,
    pub n_min: usize,
    pub k_domain: KDomain,
    eval: EvalFn,
}

impl fmt::Debug for FormulaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FormulaEntry")
            .field("id", &self.id)
            .field("patterns", &self.patterns)
            .field("mode", &self.mode)
            .field("n_min", &self.n_min)
            .field("k_domain", &self.k_domain)
            .finish()
    }
}

impl FormulaEntry {
    pub fn accepts(&self, n: usize, k: usize) -> bool {
        n >= self.n_min
            && k >= 1
            && match self.k_domain {
                KDomain::Any => true,
                KDomain::Fixed(f) => k == f,
            }
    }

    pub fn evaluate(&self, n: usize, k: usize) -> Result<BigUint> {
        if !self.accepts(n, k) {
            return Err(Error::InvalidInput(format!(
                "formula `{}` is stated for n>={} and {}, got n={n} k={k}",
                self.id, self.n_min, self.k_domain
            )));
        }
        (self.eval)(n, k)
    }

    pub fn pattern_set(&self) -> Result<PatternSet> {
        PatternSet::parse(&self.patterns, self.mode)
    }

    /// `k` to use when the caller does not give one.
    pub fn default_k(&self) -> usize {
        match self.k_domain {
            KDomain::Any => 2,
            KDomain::Fixed(k) => k,
        }
    }
}

/// A classical pattern family `Υ` used to build coloured sets.
struct Base {
    name: &'static str,
    tau: &'static [usize],
    av: fn(usize) -> BigUint,
}

const BASES: [Base; 3] = [
    Base { name: "12", tau: &[1, 2], av: one },
    Base { name: "21", tau: &[2, 1], av: one },
    Base { name: "123", tau: &[1, 2, 3], av: catalan },
];

fn one(_: usize) -> BigUint {
    BigUint::from(1u8)
}

fn encode(tau: &[usize], u: &[usize]) -> String {
    let t: Vec<String> = tau.iter().map(|x| x.to_string()).collect();
    let c: Vec<String> = u.iter().map(|x| x.to_string()).collect();
    format!("{}/{}", t.join("-"), c.join(","))
}

fn upsilon_zero(b: &Base) -> String {
    encode(b.tau, &vec![0; b.tau.len()])
}

/// All orderings of `0..j` in lexicographic order.
fn permutations_of(j: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..j).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let m = (i..cur.len()).rev().find(|&m| cur[m] > cur[i - 1]).unwrap();
        cur.swap(i - 1, m);
        cur[i..].reverse();
    }
}

fn entry(
    id: impl Into<String>,
    title: impl Into<String>,
    patterns: impl Into<String>,
    mode: Mode,
    n_min: usize,
    k_domain: KDomain,
    eval: impl Fn(usize, usize) -> Result<BigUint> + Send + Sync + 'static,
) -> FormulaEntry {
    FormulaEntry {
        id: id.into(),
        title: title.into(),
        patterns: patterns.into(),
        mode,
        n_min,
        k_domain,
        eval: Box::new(eval),
    }
}

const R: Mode = Mode::Reduced;
const E: Mode = Mode::Exact;

/// Every registered formula, in a fixed order.
pub fn registry() -> Vec<FormulaEntry> {
    use KDomain::{Any, Fixed};
    let mut v = vec![
        entry("mult", "sum of squared multinomials", "1-2/0,0", R, 0, Any, |n, k| {
            Ok(f_mult(n, k))
        }),
        entry("mult1-ones", "squared multinomials weighted by Av(2-1) = 1", "2-1/0,0", R, 0, Any, |n, k| {
            f_mult_general(n, k, &AvSequence::ones(n))
        }),
        entry("mult1-catalan", "squared multinomials weighted by Catalan numbers", "1-2-3/0,0,0", R, 0, Any, |n, k| {
            f_mult_general(n, k, &AvSequence::catalan(n))
        }),
    ];
    for tau in permutations_of(3) {
        let t: Vec<usize> = tau.iter().map(|x| x + 1).collect();
        let name: String = t.iter().map(|x| x.to_string()).collect();
        v.push(entry(
            format!("length3-{name}"),
            "central binomial form for a dashed length-3 pattern",
            encode(&t, &[0, 0, 0]),
            R,
            0,
            Any,
            f_length3_dashed,
        ));
    }
    v.push(entry("simion", "sum of j! C(n,j)^2", "1-2/0,1", R, 0, Fixed(2), |n, _| Ok(f_simion(n))));
    v.push(entry("pat2", "recursion for (1-2,0 1)", "1-2/0,1", R, 0, Fixed(2), |n, _| {
        Ok(pat2_coeffs(n).values()[n].clone())
    }));
    let signs = [
        "1-2/0,0;2-1/0,0",
        "1-2/1,0;2-1/1,0",
        "1-2/0,0;1-2/1,0;2-1/0,0;2-1/1,0",
        "1-2/0,1;1-2/1,0;2-1/0,1;2-1/1,0",
    ];
    let sign_titles = ["C(k,n) n! n!", "C(n+k-1,n) n!", "C(k,n) n!", "k n!"];
    for (i, (p, t)) in signs.iter().zip(sign_titles).enumerate() {
        let variant = i as u8 + 1;
        v.push(entry(format!("signs-{variant}"), t, *p, R, 1, Any, move |n, k| {
            f_signs(variant, n, k)
        }));
    }
    for b in &BASES {
        let av = b.av;
        v.push(entry(
            format!("product-{}", b.name),
            "EGF power of the classical avoiders",
            format!("{};1-2/1,0;2-1/1,0", upsilon_zero(b)),
            R,
            0,
            Any,
            move |n, k| f_product(n, k, &AvSequence::new((0..=n).map(av).collect(), "base")),
        ));
    }
    v.push(entry("kn-1", "k^n", "1-2/0,0;1-2/1,0;2-1/1,0", R, 0, Any, |n, k| {
        Ok(Pow::pow(BigUint::from(k), n))
    }));
    v.push(entry("kn-2", "k^n", "2-1/0,0;1-2/1,0;2-1/1,0", R, 0, Any, |n, k| {
        Ok(Pow::pow(BigUint::from(k), n))
    }));
    for b in &BASES {
        let j = b.tau.len();
        let av = b.av;
        let increasing: Vec<usize> = (0..j).collect();
        let distinct: Vec<String> = permutations_of(j).iter().map(|u| encode(b.tau, u)).collect();
        let sets = [
            format!("{};1-2/0,1;1-2/1,0;2-1/0,1;2-1/1,0", upsilon_zero(b)),
            format!("{};1-2/1,0;1-2/0,0;2-1/1,0;2-1/0,0", encode(b.tau, &increasing)),
            format!("{};1-2/0,0;2-1/0,0", distinct.join(";")),
        ];
        let titles = ["k Av_n", "C(k,n) Av_n", "C(k,n) n! Av_n"];
        for (i, (set, title)) in sets.into_iter().zip(titles).enumerate() {
            let variant = i as u8 + 1;
            v.push(entry(
                format!("gamma-{variant}-{}", b.name),
                title,
                set,
                R,
                1,
                Any,
                move |n, k| f_gamma(variant, n, k, &av(n)),
            ));
        }
    }
    v.extend([
        entry("upsilon-1", "sum of a_1!...a_k!", "1-2/0,1;1-2/1,0;2-1/1,0", R, 1, Any, |n, k| {
            Ok(f_upsilon1(n, k))
        }),
        entry("upsilon-2", "C(n+k-1,k-1)", "1-2/0,1;1-2/1,0;2-1/1,0;2-1/0,0", R, 1, Any, |n, k| {
            Ok(f_upsilon2(n, k))
        }),
        entry("falling", "falling-factorial closed form", "1-2/0,1;1-2/1,0;2-1/0,0", R, 1, Any, |n, k| {
            Ok(f_falling(n, k))
        }),
        entry("falling-rec", "falling-factorial recursion", "1-2/0,1;1-2/1,0;2-1/0,0", R, 1, Any, |n, k| {
            Ok(f_falling_rec(n, k))
        }),
        entry("ogf-upsilon", "(1+C(t))/(1-(k-1)C(t))", "1-2/1,0;1-2/0,1", R, 0, Any, |n, k| {
            Ok(ogf_upsilon_coeffs(k, n)?[n].clone())
        }),
        entry("mansour", "sum of j!(k-1)^j C(n,j)^2", "1-2/0,0", E, 0, Any, |n, k| {
            Ok(f_mansour_single(n, k))
        }),
        entry("mw-1", "F_{2n+1}", "1-2/0,0;1-2/0,1;2-1/1,1", E, 1, Fixed(2), |n, _| f_mw(1, n)),
        entry("mw-2", "n! sum of C(n,j)^-1", "1-2/0,1;1-2/1,0;2-1/0,1", E, 1, Fixed(2), |n, _| {
            f_mw(2, n)
        }),
        entry("mw-3", "n! + n! H_n", "1-2/0,0;1-2/0,1;2-1/0,0", E, 1, Fixed(2), |n, _| f_mw(3, n)),
        entry("cat", "C_{n+1}", "1-2/0,0;1-2/0,1", R, 0, Fixed(2), |n, _| Ok(f_catalan_pair(n))),
    ]);
    v
}

pub fn ids() -> Vec<String> {
    registry().into_iter().map(|e| e.id).collect()
}

/// The entry with this id; the error lists every valid id.
pub fn lookup(id: &str) -> Result<FormulaEntry> {
    let all = registry();
    let names: Vec<String> = all.iter().map(|e| e.id.clone()).collect();
    all.into_iter().find(|e| e.id == id).ok_or_else(|| {
        Error::InvalidInput(format!("unknown formula id `{id}`; known ids: {}", names.join(", ")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sets_parse() {
        let all = registry();
        let mut names: Vec<&str> = all.iter().map(|e| e.id.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), all.len());
        for e in &all {
            assert!(e.pattern_set().is_ok(), "{}: {}", e.id, e.patterns);
        }
    }

    #[test]
    fn lookup_lists_ids_on_failure() {
        let err = lookup("nope").unwrap_err().to_string();
        assert!(err.contains("mw-1") && err.contains("cat"));
        assert_eq!(lookup("cat").unwrap().evaluate(3, 2).unwrap(), BigUint::from(14u8));
    }

    #[test]
    fn domain_is_enforced() {
        let e = lookup("mw-1").unwrap();
        assert!(e.evaluate(2, 3).is_err());
        assert!(e.evaluate(0, 2).is_err());
        assert!(lookup("mult").unwrap().evaluate(0, 3).is_ok());
    }

    #[test]
    fn distinct_word_set_has_all_orderings() {
        let e = lookup("gamma-3-123").unwrap();
        assert_eq!(e.pattern_set().unwrap().len(), 8);
    }
}
