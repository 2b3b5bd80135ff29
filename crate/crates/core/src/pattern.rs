//! Colored patterns with vincular (dash) structure, and sets of them.
//!
//! Text encoding: `1-2/0,0` is the pattern `(1-2, 0 0)` where the dash lets
//! the two letters sit anywhere; `12/0,0` forces them to be adjacent. The
//! color semantics ([`Mode`]) travels separately.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::perm::{parse_list, reduce_word, ColorWord, Permutation, Symmetry};

/// Whether two consecutive pattern letters may be separated in the host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gap {
    Dash,
    Adjacent,
}

/// How pattern colors are compared against host colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Host colors must equal the pattern colors letter for letter.
    Exact,
    /// The host color subword must reduce to the pattern colors.
    #[default]
    Reduced,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "reduced" | "bi" => Ok(Mode::Reduced),
            other => Err(Error::Parse(format!("unknown mode `{other}` (expected exact or reduced)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Reduced => "reduced",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredPattern {
    tau: Permutation,
    u: ColorWord,
    gaps: Vec<Gap>,
    mode: Mode,
}

impl ColoredPattern {
    pub fn new(tau: Permutation, u: Vec<usize>, gaps: Vec<Gap>, mode: Mode) -> Result<Self> {
        let j = tau.len();
        if j == 0 {
            return invalid("patterns must have length at least 1");
        }
        if u.len() != j {
            return invalid(format!("pattern of length {j} has {} colors", u.len()));
        }
        if gaps.len() != j - 1 {
            return invalid(format!("pattern of length {j} needs {} gaps, got {}", j - 1, gaps.len()));
        }
        if mode == Mode::Reduced && reduce_word(&u) != u {
            return invalid(format!("color word {} is not reduced", ColorWord::tight(u)));
        }
        Ok(ColoredPattern {
            tau,
            u: ColorWord::tight(u),
            gaps,
            mode,
        })
    }

    /// A pattern with a dash between every pair of letters.
    pub fn dashed(tau: &[usize], u: &[usize], mode: Mode) -> Result<Self> {
        let gaps = vec![Gap::Dash; tau.len().saturating_sub(1)];
        ColoredPattern::new(Permutation::new(tau.to_vec())?, u.to_vec(), gaps, mode)
    }

    /// A pattern whose letters must occupy consecutive positions.
    pub fn consecutive(tau: &[usize], u: &[usize], mode: Mode) -> Result<Self> {
        let gaps = vec![Gap::Adjacent; tau.len().saturating_sub(1)];
        ColoredPattern::new(Permutation::new(tau.to_vec())?, u.to_vec(), gaps, mode)
    }

    pub fn parse(s: &str, mode: Mode) -> Result<Self> {
        let (tau_part, u_part) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("pattern `{s}` lacks `/` between letters and colors")))?;
        let mut tau = Vec::new();
        let mut gaps = Vec::new();
        let mut pending_dash = false;
        for ch in tau_part.trim().chars() {
            match ch {
                '-' => {
                    if tau.is_empty() || pending_dash {
                        return Err(Error::Parse(format!("misplaced dash in `{tau_part}`")));
                    }
                    pending_dash = true;
                }
                d if d.is_ascii_digit() && d != '0' => {
                    if !tau.is_empty() {
                        gaps.push(if pending_dash { Gap::Dash } else { Gap::Adjacent });
                    }
                    pending_dash = false;
                    tau.push(d as usize - '0' as usize);
                }
                other => return Err(Error::Parse(format!("unexpected `{other}` in `{tau_part}`"))),
            }
        }
        if pending_dash {
            return Err(Error::Parse(format!("trailing dash in `{tau_part}`")));
        }
        let u = parse_list(u_part.trim())?;
        let tau = Permutation::new(tau).map_err(|e| Error::Parse(e.to_string()))?;
        ColoredPattern::new(tau, u, gaps, mode).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn colors(&self) -> &[usize] {
        self.u.letters()
    }

    pub fn gaps(&self) -> &[Gap] {
        &self.gaps
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_all_dash(&self) -> bool {
        self.gaps.iter().all(|&g| g == Gap::Dash)
    }

    pub fn is_all_adjacent(&self) -> bool {
        self.gaps.iter().all(|&g| g == Gap::Adjacent)
    }

    /// The same letters and colors with the other mode.
    pub fn with_mode(&self, mode: Mode) -> Result<Self> {
        ColoredPattern::new(self.tau.clone(), self.u.letters().to_vec(), self.gaps.clone(), mode)
    }

    /// Image `(τ^a, u^b)` of the pattern. The gap structure follows `τ`.
    ///
    /// Color complement is taken in the alphabet `[k]` and, in reduced mode,
    /// reduced again afterwards.
    pub fn apply_phi(&self, a: Symmetry, b: Symmetry, k: usize) -> Result<Self> {
        let tau = self.tau.apply(a);
        let mut gaps = self.gaps.clone();
        if a == Symmetry::Reverse {
            gaps.reverse();
        }
        let u = match b {
            Symmetry::Reverse => self.u.letters().iter().rev().copied().collect::<Vec<_>>(),
            Symmetry::Complement => {
                let colors = ColorWord::new(self.u.letters().to_vec(), k)?;
                colors.complement().letters().to_vec()
            }
        };
        let u = match self.mode {
            Mode::Reduced => reduce_word(&u),
            Mode::Exact => u,
        };
        ColoredPattern::new(tau, u, gaps, self.mode)
    }
}

impl fmt::Display for ColoredPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.tau.entries().iter().enumerate() {
            if i > 0 && self.gaps[i - 1] == Gap::Dash {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "/{}", self.u)
    }
}

/// A finite, non-empty set of patterns sharing one [`Mode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<ColoredPattern>,
}

impl PatternSet {
    pub fn new(patterns: Vec<ColoredPattern>) -> Result<Self> {
        let Some(first) = patterns.first() else {
            return invalid("pattern set is empty");
        };
        if patterns.iter().any(|p| p.mode != first.mode) {
            return invalid("patterns in a set must share one mode");
        }
        let mut unique: Vec<ColoredPattern> = Vec::with_capacity(patterns.len());
        for p in patterns {
            if !unique.contains(&p) {
                unique.push(p);
            }
        }
        Ok(PatternSet { patterns: unique })
    }

    pub fn single(p: ColoredPattern) -> Self {
        PatternSet { patterns: vec![p] }
    }

    /// Parses a semicolon-separated list of pattern encodings.
    pub fn parse(s: &str, mode: Mode) -> Result<Self> {
        let patterns = s
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| ColoredPattern::parse(t, mode))
            .collect::<Result<Vec<_>>>()?;
        PatternSet::new(patterns).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn patterns(&self) -> &[ColoredPattern] {
        &self.patterns
    }

    pub fn mode(&self) -> Mode {
        self.patterns[0].mode
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn union(&self, other: &PatternSet) -> Result<Self> {
        PatternSet::new(self.patterns.iter().chain(&other.patterns).cloned().collect())
    }

    pub fn apply_phi(&self, a: Symmetry, b: Symmetry, k: usize) -> Result<Self> {
        PatternSet::new(
            self.patterns
                .iter()
                .map(|p| p.apply_phi(a, b, k))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
