//! Occurrence and match search for colored vincular patterns.
//!
//! A single backtracking engine serves both color semantics and every gap
//! structure. Candidate positions are extended left to right; each new
//! position is checked pairwise against the ones already chosen, which is
//! equivalent to comparing reductions since `red(x) = red(y)` exactly when
//! `x` and `y` agree on every pairwise comparison.

use crate::error::{invalid, Result};
use crate::pattern::{ColoredPattern, Gap, Mode, PatternSet};
use crate::perm::ColoredPermutation;

/// All occurrences of `p` in `g` as strictly increasing 1-based position
/// tuples, in lexicographic order. A pattern longer than `g` has none.
pub fn occurrences(p: &ColoredPattern, g: &ColoredPermutation) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    let mut scratch = Vec::with_capacity(p.len());
    search(p, g.sigma(), g.word(), None, &mut scratch, &mut |t| {
        found.push(t.iter().map(|i| i + 1).collect());
        true
    });
    found
}

pub fn count_occurrences(p: &ColoredPattern, g: &ColoredPermutation) -> usize {
    let mut scratch = Vec::with_capacity(p.len());
    count_in(p, g.sigma(), g.word(), None, &mut scratch)
}

pub fn contains(p: &ColoredPattern, g: &ColoredPermutation) -> bool {
    let mut scratch = Vec::with_capacity(p.len());
    occurs_in(p, g.sigma(), g.word(), None, &mut scratch)
}

/// Number of (bi-)matches: starting positions of a consecutive occurrence.
pub fn count_matches(p: &ColoredPattern, g: &ColoredPermutation) -> Result<usize> {
    if !p.is_all_adjacent() {
        return invalid(format!("matches are defined for consecutive patterns only, got {p}"));
    }
    Ok(count_occurrences(p, g))
}

/// True iff no pattern of `set` occurs in `g`.
pub fn avoids(set: &PatternSet, g: &ColoredPermutation) -> bool {
    set.patterns().iter().all(|p| !contains(p, g))
}

/// Whether `p` has an occurrence in `(sigma, colors)` whose last position is
/// `last` (0-based). Used by prefix-extending enumerators.
pub(crate) fn occurs_ending_at(
    p: &ColoredPattern,
    sigma: &[usize],
    colors: &[usize],
    last: usize,
    scratch: &mut Vec<usize>,
) -> bool {
    occurs_in(p, sigma, colors, Some(last), scratch)
}

pub(crate) fn count_ending_at(
    p: &ColoredPattern,
    sigma: &[usize],
    colors: &[usize],
    last: usize,
    scratch: &mut Vec<usize>,
) -> usize {
    count_in(p, sigma, colors, Some(last), scratch)
}

fn occurs_in(
    p: &ColoredPattern,
    sigma: &[usize],
    colors: &[usize],
    last: Option<usize>,
    scratch: &mut Vec<usize>,
) -> bool {
    let mut hit = false;
    search(p, sigma, colors, last, scratch, &mut |_| {
        hit = true;
        false
    });
    hit
}

fn count_in(
    p: &ColoredPattern,
    sigma: &[usize],
    colors: &[usize],
    last: Option<usize>,
    scratch: &mut Vec<usize>,
) -> usize {
    let mut hits = 0;
    search(p, sigma, colors, last, scratch, &mut |_| {
        hits += 1;
        true
    });
    hits
}

/// Calls `visit` on every occurrence (0-based tuple); stops early when
/// `visit` returns false.
fn search<F: FnMut(&[usize]) -> bool>(
    p: &ColoredPattern,
    sigma: &[usize],
    colors: &[usize],
    last: Option<usize>,
    chosen: &mut Vec<usize>,
    visit: &mut F,
) {
    chosen.clear();
    let j = p.len();
    if j > sigma.len() || last.is_some_and(|l| l + 1 < j || l >= sigma.len()) {
        return;
    }
    extend(p, sigma, colors, last, chosen, visit);
}

fn extend<F: FnMut(&[usize]) -> bool>(
    p: &ColoredPattern,
    sigma: &[usize],
    colors: &[usize],
    last: Option<usize>,
    chosen: &mut Vec<usize>,
    visit: &mut F,
) -> bool {
    let q = chosen.len();
    let j = p.len();
    if q == j {
        return visit(chosen);
    }
    let n = sigma.len();
    let first_free = chosen.last().map_or(0, |&i| i + 1);
    // latest position letting the remaining j - q - 1 letters fit
    let mut hi = match last {
        Some(l) if q + 1 == j => l,
        Some(l) => l - (j - q - 1),
        None => n - (j - q),
    };
    if q > 0 && p.gaps()[q - 1] == Gap::Adjacent {
        hi = hi.min(first_free);
    }
    let lo = match last {
        Some(l) if q + 1 == j => first_free.max(l),
        _ => first_free,
    };
    if lo > hi {
        return true;
    }
    for i in lo..=hi {
        if compatible(p, sigma, colors, chosen, i) {
            chosen.push(i);
            let go_on = extend(p, sigma, colors, last, chosen, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

fn compatible(p: &ColoredPattern, sigma: &[usize], colors: &[usize], chosen: &[usize], i: usize) -> bool {
    let q = chosen.len();
    let tau = p.tau().entries();
    let u = p.colors();
    if p.mode() == Mode::Exact && colors[i] != u[q] {
        return false;
    }
    chosen.iter().enumerate().all(|(r, &c)| {
        (sigma[c] < sigma[i]) == (tau[r] < tau[q])
            && (p.mode() == Mode::Exact || colors[c].cmp(&colors[i]) == u[r].cmp(&u[q]))
    })
}
