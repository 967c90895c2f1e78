//! Braid words, their permutations, and twisted torus knots.
//!
//! Generators are 1-based: `σ_i` crosses strands `i` and `i + 1`, for
//! `1 <= i <= n - 1`. Words are read left to right.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A generator `σ_index` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Self { index, inverse: false }
    }

    pub fn neg(index: usize) -> Self {
        Self { index, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Self { inverse: !self.inverse, ..self }
    }

    pub fn signed(self) -> i64 {
        if self.inverse {
            -(self.index as i64)
        } else {
            self.index as i64
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidBraid(format!("need at least 2 strands, got {strands}")));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::InvalidBraid(format!(
                "generator {} out of range for {strands} strands",
                l.index
            )));
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace-separated signed generator indices, e.g. `1 2 -1`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad braid letter `{tok}`")))?;
                match v {
                    0 => Err(Error::Parse("braid letter 0 is not a generator".into())),
                    v if v > 0 => Ok(Letter::pos(v as usize)),
                    v => Ok(Letter::neg(v.unsigned_abs() as usize)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| if l.inverse { -1 } else { 1 }).sum()
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::InvalidBraid(format!(
                "cannot concatenate braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// `g · w · g⁻¹`
    pub fn conjugate_by(&self, g: Letter) -> Result<Self> {
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(g.inverted());
        Self::new(self.strands, letters)
    }

    pub fn permutation(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.strands), |acc, l| {
                acc.then(&Permutation::transposition(self.strands, l.index))
            })
    }

    /// Number of components of the braid closure.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l.signed())?;
        }
        Ok(())
    }
}

/// A permutation of `0..n`, stored as the image of each point.
///
/// For braids, the image of `k` is the final position of the strand that
/// starts at position `k`. Composition follows the word: `a.then(b)` applies
/// `a` first, so `perm(u·v) = perm(u).then(perm(v)) = perm(v) ∘ perm(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// Swaps 1-based positions `i` and `i + 1`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidBraid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn then(&self, next: &Self) -> Self {
        assert_eq!(self.len(), next.len(), "permutation size mismatch");
        Self {
            images: self.images.iter().map(|&x| next.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle decomposition, fixed points included, each cycle starting at
    /// its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

/// The twisted torus knot `T(p, q, 2, r)`: the `(p, q)` torus knot with `r/2`
/// full twists added on two adjacent strands.
///
/// Construction validates `p, q >= 2`, `gcd(p, q) = 1` and `r` even, which
/// together guarantee the braid closure is a knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwistedTorusKnot {
    p: i64,
    q: i64,
    r: i64,
}

impl TwistedTorusKnot {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        validate_torus(p, q)?;
        let k = Self { p, q, r };
        if r.is_odd() {
            return Err(Error::NotAKnot {
                components: k.braid_unchecked().closure_components(),
            });
        }
        Ok(k)
    }

    pub fn torus(p: i64, q: i64) -> Result<Self> {
        Self::new(p, q, 0)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    /// Signed number of full twists, `r / 2`.
    pub fn twist_count(&self) -> i64 {
        self.r / 2
    }

    /// `q(p - 1) + |r|`
    pub fn braid_length(&self) -> usize {
        (self.q * (self.p - 1) + self.r.abs()) as usize
    }

    /// `Some(m)` when this knot is `K_m = T(7, 17, 10m - 4)`.
    pub fn family_index(&self) -> Option<i64> {
        (self.p == 7 && self.q == 17 && (self.r + 4) % 10 == 0).then(|| (self.r + 4) / 10)
    }

    /// Closure of `(σ_1 σ_2 … σ_{p-1})^q · σ_1^r` on `p` strands.
    pub fn dean_braid(&self) -> BraidWord {
        self.braid_unchecked()
    }

    fn braid_unchecked(&self) -> BraidWord {
        let p = self.p as usize;
        let twist = if self.r >= 0 { Letter::pos(1) } else { Letter::neg(1) };
        let letters = (0..self.q)
            .flat_map(|_| (1..p).map(Letter::pos))
            .chain(std::iter::repeat_n(twist, self.r.unsigned_abs() as usize))
            .collect();
        BraidWord { strands: p, letters }
    }
}

impl fmt::Display for TwistedTorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{})", self.p, self.q, self.r)
    }
}

pub(crate) fn validate_torus(p: i64, q: i64) -> Result<()> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::InvalidTorusParameters { p, q });
    }
    Ok(())
}

/// `K_m = T(7, 17, 10m - 4)`. Its twist count is `n = 5m - 2`.
pub fn family_km(m: i64) -> TwistedTorusKnot {
    TwistedTorusKnot { p: 7, q: 17, r: 10 * m - 4 }
}
