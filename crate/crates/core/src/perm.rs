//! Permutations, color words and their pairing into elements of `C_k ≀ S_n`.
//!
//! Colors are stored as exponents `0..k`. Values of a permutation are `1..=n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// One of the two involutions used by the symmetry maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r" | "reverse" => Ok(Symmetry::Reverse),
            "c" | "complement" => Ok(Symmetry::Complement),
            other => Err(Error::Parse(format!("unknown symmetry `{other}` (expected r or c)"))),
        }
    }
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return invalid(format!("entry {v} outside 1..={n}"));
            }
            if seen[v] {
                return invalid(format!("entry {v} repeated"));
            }
            seen[v] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `σ^r = σ_n ⋯ σ_1`
    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// `σ^c = (n+1-σ_1) ⋯ (n+1-σ_n)`
    pub fn complement(&self) -> Self {
        let n = self.len();
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn apply(&self, sym: Symmetry) -> Self {
        match sym {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// A word over the alphabet `[k] = {0, ..., k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorWord {
    letters: Vec<usize>,
    k: usize,
}

impl ColorWord {
    pub fn new(letters: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 {
            return invalid("number of colors must be at least 1");
        }
        if let Some(&bad) = letters.iter().find(|&&c| c >= k) {
            return invalid(format!("color {bad} outside 0..{k}"));
        }
        Ok(ColorWord { letters, k })
    }

    /// A word whose alphabet is the smallest one containing its letters.
    pub fn tight(letters: Vec<usize>) -> Self {
        let k = letters.iter().max().map_or(1, |m| m + 1);
        ColorWord { letters, k }
    }

    pub fn constant(color: usize, len: usize, k: usize) -> Result<Self> {
        ColorWord::new(vec![color; len], k)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn reverse(&self) -> Self {
        ColorWord {
            letters: self.letters.iter().rev().copied().collect(),
            k: self.k,
        }
    }

    /// `w^c = (k-1-w_1) ⋯ (k-1-w_n)`
    pub fn complement(&self) -> Self {
        ColorWord {
            letters: self.letters.iter().map(|&c| self.k - 1 - c).collect(),
            k: self.k,
        }
    }

    pub fn apply(&self, sym: Symmetry) -> Self {
        match sym {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
        }
    }

    pub fn is_reduced(&self) -> bool {
        reduce_word(&self.letters) == self.letters
    }
}

impl fmt::Display for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.letters)
    }
}

/// An element `(σ, w)` of `C_k ≀ S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPermutation {
    perm: Permutation,
    colors: ColorWord,
}

impl ColoredPermutation {
    pub fn new(perm: Permutation, colors: ColorWord) -> Result<Self> {
        if perm.len() != colors.len() {
            return invalid(format!(
                "permutation has length {} but color word has length {}",
                perm.len(),
                colors.len()
            ));
        }
        Ok(ColoredPermutation { perm, colors })
    }

    /// Builds from raw slices, validating everything.
    pub fn from_parts(sigma: &[usize], colors: &[usize], k: usize) -> Result<Self> {
        ColoredPermutation::new(
            Permutation::new(sigma.to_vec())?,
            ColorWord::new(colors.to_vec(), k)?,
        )
    }

    pub(crate) fn from_raw_unchecked(sigma: Vec<usize>, colors: Vec<usize>, k: usize) -> Self {
        ColoredPermutation {
            perm: Permutation::from_vec_unchecked(sigma),
            colors: ColorWord { letters: colors, k },
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn colors(&self) -> &ColorWord {
        &self.colors
    }

    pub fn sigma(&self) -> &[usize] {
        self.perm.entries()
    }

    pub fn word(&self) -> &[usize] {
        self.colors.letters()
    }

    pub fn k(&self) -> usize {
        self.colors.k()
    }

    /// Reverses the positions; every entry keeps its color.
    pub fn reverse(&self) -> Self {
        ColoredPermutation {
            perm: self.perm.reverse(),
            colors: self.colors.reverse(),
        }
    }

    /// Complements both the values and the colors.
    pub fn complement(&self) -> Self {
        ColoredPermutation {
            perm: self.perm.complement(),
            colors: self.colors.complement(),
        }
    }

    /// `φ_{a,b}((σ, w)) = (σ^a, w^b)`, with `a` and `b` applied independently.
    pub fn apply_phi(&self, a: Symmetry, b: Symmetry) -> Self {
        ColoredPermutation {
            perm: self.perm.apply(a),
            colors: self.colors.apply(b),
        }
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma={} colors={} k={}", self.perm, self.colors, self.k())
    }
}

/// Parses `sigma=1,3,2,4 colors=1,2,2,2 k=3`. When `k=` is absent the
/// smallest alphabet holding the colors is used.
impl FromStr for ColoredPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut sigma = None;
        let mut colors = None;
        let mut k = None;
        for field in s.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, found `{field}`")))?;
            match key {
                "sigma" => sigma = Some(parse_list(value)?),
                "colors" => colors = Some(parse_list(value)?),
                "k" => {
                    k = Some(value.parse::<usize>().map_err(|e| Error::Parse(format!("k: {e}")))?)
                }
                other => return Err(Error::Parse(format!("unknown field `{other}`"))),
            }
        }
        let sigma = sigma.ok_or_else(|| Error::Parse("missing sigma=".into()))?;
        let colors = colors.unwrap_or_else(|| vec![0; sigma.len()]);
        let k = k.unwrap_or_else(|| colors.iter().max().map_or(1, |m| m + 1));
        ColoredPermutation::from_parts(&sigma, &colors, k)
    }
}

/// Replaces the i-th smallest entry by `i` (1-based).
pub fn reduce_perm<T: Ord>(seq: &[T]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
    if order.windows(2).any(|w| seq[w[0]] == seq[w[1]]) {
        return invalid("sequence has repeated entries");
    }
    let mut out = vec![0; seq.len()];
    for (rank, &pos) in order.iter().enumerate() {
        out[pos] = rank + 1;
    }
    Ok(Permutation(out))
}

/// Replaces the i-th smallest distinct letter by `i - 1`.
pub fn reduce_word<T: Ord>(word: &[T]) -> Vec<usize> {
    let mut distinct: Vec<&T> = word.iter().collect();
    distinct.sort();
    distinct.dedup();
    word.iter()
        .map(|x| distinct.binary_search(&x).expect("letter present"))
        .collect()
}

/// [`reduce_word`] wrapped in a [`ColorWord`] over the smallest alphabet.
pub fn reduce_color_word<T: Ord>(word: &[T]) -> ColorWord {
    ColorWord::tight(reduce_word(word))
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("`{t}`: {e}")))
        })
        .collect()
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}
