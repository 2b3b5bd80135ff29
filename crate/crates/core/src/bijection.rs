//! Catalan bijection for `C_2 ≀ S_n` bi-avoiding `{(1-2,0 0), (1-2,0 1)}`.
//!
//! An avoider is drawn in the `n × n` matrix with the dot of position `i` at
//! `(i - 1/2, σ_i - 1/2)`. The reverse irreducible blocks sit on the
//! anti-diagonal as squares with corners on `x + y = n`. The path starts at
//! `(0, n+1)`, steps down onto that diagonal, walks around or through each
//! block, and leaves with one right step to `(n+1, 0)`:
//!
//! * singleton coloured 0: down, right;
//! * singleton coloured 1: right, down (the only move touching `x+y = n+1`);
//! * larger block: the staircase that keeps every dot of the block above it,
//!   crossing column `c` at height `min(σ_1..σ_c) - 1`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;

use crate::closed_forms::catalan;
use crate::enumeration::{avoiders, EnumSpec};
use crate::error::{invalid, Error, Result};
use crate::matching::contains;
use crate::pattern::{Mode, PatternSet};
use crate::perm::{ColoredPermutation, Permutation};

/// The avoided pair, as a text encoding.
pub const CAT_PATTERNS: &str = "1-2/0,0;1-2/0,1";

pub fn cat_patterns() -> PatternSet {
    PatternSet::parse(CAT_PATTERNS, Mode::Reduced).expect("fixed encoding")
}

/// 1-based inclusive position interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub first: usize,
    pub last: usize,
}

impl Block {
    pub fn len(&self) -> usize {
        self.last + 1 - self.first
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.first == self.last
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn singletons(&self) -> usize {
        self.blocks.iter().filter(|b| b.is_singleton()).count()
    }
}

impl fmt::Display for BlockDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "[{}..{}]", b.first, b.last)?;
        }
        Ok(())
    }
}

/// Finest factorisation `σ = F_1 F_2 ⋯` with every value in `F_i` above
/// every value in `F_{i+1}`. A block closes after prefix length `m` exactly
/// when that prefix holds the top `m` values.
pub fn reverse_irreducible_blocks(perm: &Permutation) -> BlockDecomposition {
    let n = perm.len();
    let mut blocks = Vec::new();
    let mut first = 1;
    let mut min = usize::MAX;
    for (m, &v) in perm.entries().iter().enumerate().map(|(i, v)| (i + 1, v)) {
        min = min.min(v);
        if min == n - m + 1 {
            blocks.push(Block { first, last: m });
            first = m + 1;
        }
    }
    BlockDecomposition { blocks }
}

/// Colour forced on each position of an avoider with underlying `σ`;
/// `None` marks a free singleton. Left-to-right minima of a larger block
/// get 1, the rest 0.
pub fn forced_colors(perm: &Permutation) -> Result<Vec<Option<usize>>> {
    let s = perm.entries();
    let mut min = usize::MAX;
    let mut rl_max = vec![false; s.len()];
    let mut max = 0;
    for i in (0..s.len()).rev() {
        if s[i] > max {
            max = s[i];
            rl_max[i] = true;
        }
    }
    let mut out = vec![None; s.len()];
    let decomposition = reverse_irreducible_blocks(perm);
    for b in decomposition.blocks() {
        for i in b.first - 1..b.last {
            let lr_min = s[i] < min;
            min = min.min(s[i]);
            if b.is_singleton() {
                continue;
            }
            out[i] = Some(match (lr_min, rl_max[i]) {
                (true, _) => 1,
                (false, true) => 0,
                (false, false) => {
                    return invalid(format!("{perm} contains 1-2-3 (position {} is in the middle of one)", i + 1))
                }
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Down,
}

/// Path from `(0, n+1)` to `(n+1, 0)` by unit right and down steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    n: usize,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(n: usize, steps: Vec<Step>) -> Result<Self> {
        let p = LatticePath { n, steps };
        p.validate()?;
        Ok(p)
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'R' => Ok(Step::Right),
                'D' => Ok(Step::Down),
                other => Err(Error::Parse(format!("lattice step `{other}` (expected R or D)"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(n, steps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Lattice points visited, start included.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pts = vec![(0, self.n + 1)];
        let (mut x, mut y) = (0, self.n + 1);
        for s in &self.steps {
            match s {
                Step::Right => x += 1,
                Step::Down => y -= 1,
            }
            pts.push((x, y));
        }
        pts
    }

    /// Lattice points strictly between the endpoints on `x + y = n + 1`.
    pub fn boundary_touches(&self) -> usize {
        let pts = self.points();
        pts[1..pts.len() - 1]
            .iter()
            .filter(|(x, y)| x + y == self.n + 1)
            .count()
    }

    fn validate(&self) -> Result<()> {
        let side = self.n + 1;
        let rights = self.steps.iter().filter(|s| **s == Step::Right).count();
        let downs = self.steps.len() - rights;
        if rights != side || downs != side {
            return invalid(format!(
                "path needs {side} right and {side} down steps, has {rights} and {downs}"
            ));
        }
        let (mut x, mut y) = (0usize, side);
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::Right => x += 1,
                Step::Down => y -= 1,
            }
            if x + y > side {
                return invalid(format!("path rises above x + y = {side} after step {}", i + 1));
            }
        }
        Ok(())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Right => "R",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

/// `true` = up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<bool>,
}

impl DyckPath {
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(true),
                'D' => Ok(false),
                other => Err(Error::Parse(format!("Dyck step `{other}` (expected U or D)"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let p = DyckPath { steps };
        if !p.is_valid() {
            return invalid(format!("`{s}` is not a Dyck path"));
        }
        Ok(p)
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_valid(&self) -> bool {
        let mut h: i64 = 0;
        for &up in &self.steps {
            h += if up { 1 } else { -1 };
            if h < 0 {
                return false;
            }
        }
        h == 0
    }

    /// Visits to height 0 strictly between the endpoints.
    pub fn interior_returns(&self) -> usize {
        let mut h: i64 = 0;
        let mut returns = 0;
        for &up in &self.steps[..self.steps.len().saturating_sub(1)] {
            h += if up { 1 } else { -1 };
            returns += usize::from(h == 0);
        }
        returns
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &up in &self.steps {
            f.write_str(if up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

fn check_avoider(g: &ColoredPermutation) -> Result<()> {
    if g.k() != 2 {
        return invalid(format!("the bijection is defined on C_2 wr S_n, got k={}", g.k()));
    }
    for p in cat_patterns().patterns() {
        if contains(p, g) {
            return invalid(format!("{g} contains the pattern {p}"));
        }
    }
    Ok(())
}

pub fn to_lattice_path(g: &ColoredPermutation) -> Result<LatticePath> {
    check_avoider(g)?;
    let n = g.len();
    let sigma = g.sigma();
    let w = g.word();
    let mut steps = vec![Step::Down];
    let mut y = n;
    for b in reverse_irreducible_blocks(g.perm()).blocks() {
        if b.is_singleton() {
            match w[b.first - 1] {
                0 => steps.extend([Step::Down, Step::Right]),
                _ => steps.extend([Step::Right, Step::Down]),
            }
            y -= 1;
            continue;
        }
        // drop below the next dot, then run right while the dots stay above
        let mut c = b.first - 1;
        while c < b.last {
            while y >= sigma[c] {
                steps.push(Step::Down);
                y -= 1;
            }
            while c < b.last && sigma[c] > y {
                steps.push(Step::Right);
                c += 1;
            }
        }
    }
    steps.push(Step::Right);
    LatticePath::new(n, steps)
}

/// Reflect in `x + y = n + 1` and rotate: each down step becomes an up step.
pub fn to_dyck(path: &LatticePath) -> Result<DyckPath> {
    path.validate()?;
    Ok(DyckPath {
        steps: path.steps.iter().map(|s| *s == Step::Down).collect(),
    })
}

pub fn to_dyck_word(g: &ColoredPermutation) -> Result<DyckPath> {
    to_dyck(&to_lattice_path(g)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub avoiders: usize,
    pub valid_images: usize,
    pub distinct_images: usize,
    pub expected: BigUint,
    /// First element whose image failed or collided.
    pub counterexample: Option<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
            && self.valid_images == self.avoiders
            && self.distinct_images == self.avoiders
            && BigUint::from(self.avoiders) == self.expected
    }
}

/// Maps every avoider in `C_2 ≀ S_n` and checks validity, injectivity and
/// the count `C_{n+1}`.
pub fn certify_bijection(n: usize, budget: u64) -> Result<BijectionReport> {
    let spec = EnumSpec::new(n, 2)?.with_budget(budget);
    let all = avoiders(spec, &cat_patterns())?;
    let mut seen = HashSet::with_capacity(all.len());
    let mut valid = 0;
    let mut counterexample = None;
    for g in &all {
        match to_dyck_word(g) {
            Ok(d) if d.is_valid() && d.semilength() == n + 1 => {
                valid += 1;
                if !seen.insert(d.clone()) && counterexample.is_none() {
                    counterexample = Some(format!("{g} collides on {d}"));
                }
            }
            Ok(d) => {
                counterexample.get_or_insert_with(|| format!("{g} maps to invalid {d}"));
            }
            Err(e) => {
                counterexample.get_or_insert_with(|| format!("{g}: {e}"));
            }
        }
    }
    Ok(BijectionReport {
        n,
        avoiders: all.len(),
        valid_images: valid,
        distinct_images: seen.len(),
        expected: catalan(n + 1),
        counterexample,
    })
}

/// The permutation matrix with each dot shown as its colour, and every
/// block outlined.
pub fn render_matrix(g: &ColoredPermutation) -> String {
    let n = g.len();
    let size = 2 * n + 1;
    let mut canvas = vec![vec![' '; size]; size];
    // row 0 is the top edge, y = n
    let row = |y: usize| 2 * (n - y);
    for (i, (&v, &c)) in g.sigma().iter().zip(g.word()).enumerate() {
        canvas[row(v) + 1][2 * i + 1] = char::from_digit(c as u32, 36).unwrap_or('?');
    }
    for x in 0..n {
        for y in 1..=n {
            let cell = &mut canvas[row(y) + 1][2 * x + 1];
            if *cell == ' ' {
                *cell = '.';
            }
        }
    }
    for b in reverse_irreducible_blocks(g.perm()).blocks() {
        let (x0, x1) = (b.first - 1, b.last);
        let (y_top, y_bot) = (n - x0, n - x1);
        let (r0, r1, c0, c1) = (row(y_top), row(y_bot), 2 * x0, 2 * x1);
        for r in [r0, r1] {
            for (c, cell) in canvas[r].iter_mut().enumerate().take(c1 + 1).skip(c0) {
                *cell = if c % 2 == 0 { '+' } else { '-' };
            }
        }
        for (r, line) in canvas.iter_mut().enumerate().take(r1).skip(r0 + 1) {
            for c in [c0, c1] {
                line[c] = if r % 2 == 0 { '+' } else { '|' };
            }
        }
    }
    let mut out = String::new();
    for line in canvas {
        let s: String = line.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn g(sigma: &[usize], w: &[usize]) -> ColoredPermutation {
        ColoredPermutation::from_parts(sigma, w, 2).unwrap()
    }

    #[test]
    fn block_examples() {
        let b = reverse_irreducible_blocks(&perm(&[6, 5, 7, 4, 3, 1, 2]));
        assert_eq!(b.to_string(), "[1..3][4..4][5..5][6..7]");
        assert_eq!(b.singletons(), 2);
        assert_eq!(reverse_irreducible_blocks(&perm(&[1])).to_string(), "[1..1]");
        assert_eq!(reverse_irreducible_blocks(&perm(&[3, 2, 1])).singletons(), 3);
        assert!(reverse_irreducible_blocks(&perm(&[])).blocks().is_empty());
    }

    #[test]
    fn forced_color_examples() {
        let f = forced_colors(&perm(&[6, 5, 7, 4, 3, 1, 2])).unwrap();
        assert_eq!(f, vec![Some(1), Some(1), Some(0), None, None, Some(1), Some(0)]);
        assert_eq!(forced_colors(&perm(&[2, 1])).unwrap(), vec![None, None]);
        assert_eq!(forced_colors(&perm(&[1, 2])).unwrap(), vec![Some(1), Some(0)]);
        assert!(forced_colors(&perm(&[1, 2, 3])).is_err());
    }

    #[test]
    fn golden_example() {
        let x = g(&[6, 5, 7, 4, 3, 1, 2], &[1, 1, 0, 1, 0, 1, 0]);
        let p = to_lattice_path(&x).unwrap();
        assert_eq!(p.to_string(), "DDDRDRRRDDRDDRRR");
        assert_eq!(p.boundary_touches(), 1);
        assert_eq!(to_dyck(&p).unwrap().to_string(), "UUUDUDDDUUDUUDDD");
    }

    #[test]
    fn small_cases() {
        let p0 = to_lattice_path(&g(&[1], &[0])).unwrap();
        let p1 = to_lattice_path(&g(&[1], &[1])).unwrap();
        assert_eq!(p0.to_string(), "DDRR");
        assert_eq!(p1.to_string(), "DRDR");
        assert_eq!(p0.boundary_touches(), 0);
        assert_eq!(p1.boundary_touches(), 1);
        assert_eq!(to_dyck(&p0).unwrap().to_string(), "UUDD");
        assert_eq!(to_dyck(&p1).unwrap().to_string(), "UDUD");
        let empty = to_lattice_path(&g(&[], &[])).unwrap();
        assert_eq!(empty.to_string(), "DR");
        assert_eq!(to_dyck(&empty).unwrap().to_string(), "UD");
    }

    #[test]
    fn rejects_containing_elements() {
        let err = to_lattice_path(&g(&[1, 2], &[0, 0])).unwrap_err().to_string();
        assert!(err.contains("1-2/0,0"), "{err}");
        let err = to_lattice_path(&g(&[1, 2], &[0, 1])).unwrap_err().to_string();
        assert!(err.contains("1-2/0,1"), "{err}");
        let three = ColoredPermutation::from_parts(&[1], &[0], 3).unwrap();
        assert!(to_lattice_path(&three).is_err());
    }

    #[test]
    fn lattice_path_validation() {
        assert!(LatticePath::parse(1, "DDRR").is_ok());
        assert!(LatticePath::parse(1, "RDDR").is_err());
        assert!(LatticePath::parse(1, "DDR").is_err());
        assert!(LatticePath::parse(1, "DDXR").is_err());
        assert!(DyckPath::parse("UDDU").is_err());
        assert_eq!(DyckPath::parse("UDUD").unwrap().interior_returns(), 1);
    }

    #[test]
    fn certify_small() {
        for (n, want) in [(0, 1usize), (1, 2), (2, 5), (3, 14), (4, 42)] {
            let r = certify_bijection(n, 1_000_000).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.avoiders, want);
        }
    }

    #[test]
    fn matrix_art() {
        let art = render_matrix(&g(&[2, 1], &[1, 0]));
        assert_eq!(art, "+-+\n|1|.\n+-+-+\n .|0|\n  +-+\n");
        let art = render_matrix(&g(&[1, 2], &[1, 0]));
        assert_eq!(art, "+-+-+\n|. 0|\n+   +\n|1 .|\n+-+-+\n");
    }
}
