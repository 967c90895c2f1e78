//! Reduced Burau representation and Alexander polynomials of braid closures.
//!
//! Conventions: matrices act on row vectors, and the image of a word is the
//! left-to-right product of its generator matrices, so
//! `burau(u·v) = burau(u) * burau(v)`. In the reduced representation on `n`
//! strands, `σ_i` differs from the `(n-1)×(n-1)` identity only in column `i`:
//!
//! ```text
//! row i-1:  t
//! row i:   -t
//! row i+1:  1
//! ```
//!
//! (rows outside `1..=n-1` are dropped). For a braid `β` whose closure is a
//! knot, `det(I - burau(β)) = ±t^k · Δ(t) · (1 + t + … + t^(n-1))`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::braid::{validate_torus, BraidWord};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl BurauMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = LaurentPoly::one();
        }
        m
    }

    fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![LaurentPoly::zero(); dim * dim] }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Consistency("matrix is not square".into()));
        }
        Ok(Self { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, v: LaurentPoly) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Matrix of `σ_i` (or its inverse) on `strands` strands, `1 <= i < strands`.
    fn generator(strands: usize, i: usize, inverse: bool) -> Self {
        let dim = strands - 1;
        let k = i - 1;
        let mut m = Self::identity(dim);
        let (above, diag, below) = if inverse {
            (LaurentPoly::one(), -LaurentPoly::t_pow(-1), LaurentPoly::t_pow(-1))
        } else {
            (LaurentPoly::t_pow(1), -LaurentPoly::t_pow(1), LaurentPoly::one())
        };
        m.set(k, k, diag);
        if k > 0 {
            m.set(k - 1, k, above);
        }
        if k + 1 < dim {
            m.set(k + 1, k, below);
        }
        m
    }

    /// `self - I`
    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            let v = m.get(i, i) - LaurentPoly::one();
            m.set(i, i, v);
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division
    /// is exact in `Z[t, t^-1]`; a failure there means a bug and is
    /// reported as an error.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        let n = self.dim;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a: Vec<Vec<LaurentPoly>> =
            (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();

        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num.exact_div(&prev)?;
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }

        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }
}

impl Mul<&BurauMatrix> for &BurauMatrix {
    type Output = BurauMatrix;
    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        self.mul_ref(rhs)
    }
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Generator matrices indexed by strand count; entry `i - 1` holds
/// `(σ_i, σ_i⁻¹)`. Filled once per strand count, first writer wins.
type GeneratorTable = Arc<Vec<(BurauMatrix, BurauMatrix)>>;

fn generator_table(strands: usize) -> GeneratorTable {
    static CACHE: OnceLock<RwLock<HashMap<usize, GeneratorTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);

    if let Some(t) = cache.read().unwrap_or_else(|e| e.into_inner()).get(&strands) {
        return Arc::clone(t);
    }
    let table: GeneratorTable = Arc::new(
        (1..strands)
            .map(|i| {
                (
                    BurauMatrix::generator(strands, i, false),
                    BurauMatrix::generator(strands, i, true),
                )
            })
            .collect(),
    );
    let mut w = cache.write().unwrap_or_else(|e| e.into_inner());
    Arc::clone(w.entry(strands).or_insert(table))
}

/// Image of a braid word under the reduced Burau representation.
pub fn reduced_burau(b: &BraidWord) -> BurauMatrix {
    let table = generator_table(b.strands());
    b.letters()
        .iter()
        .fold(BurauMatrix::identity(b.strands() - 1), |acc, l| {
            let (pos, neg) = &table[l.index - 1];
            &acc * if l.inverse { neg } else { pos }
        })
}

/// An Alexander polynomial in both of its canonical forms.
///
/// `paper_form` spans degrees `0..=breadth`; `symmetric_form` spans
/// `-breadth/2..=breadth/2` and is fixed by `t -> t^-1`. The sign is chosen
/// so that `Δ(1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexanderPolynomial {
    symmetric_form: LaurentPoly,
    paper_form: LaurentPoly,
    genus_breadth: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Paper,
    Symmetric,
}

impl AlexanderPolynomial {
    pub fn symmetric_form(&self) -> &LaurentPoly {
        &self.symmetric_form
    }

    pub fn paper_form(&self) -> &LaurentPoly {
        &self.paper_form
    }

    pub fn form(&self, form: Form) -> &LaurentPoly {
        match form {
            Form::Paper => &self.paper_form,
            Form::Symmetric => &self.symmetric_form,
        }
    }

    /// Twice the genus for fibered knots; always even.
    pub fn genus_breadth(&self) -> i64 {
        self.genus_breadth
    }

    /// Exponent in `symmetric_form` matching exponent `e` of `paper_form`.
    pub fn paper_to_symmetric(&self, e: i64) -> i64 {
        e - self.genus_breadth / 2
    }

    /// Exponent in `paper_form` matching exponent `e` of `symmetric_form`.
    pub fn symmetric_to_paper(&self, e: i64) -> i64 {
        e + self.genus_breadth / 2
    }
}

/// Normalizes a polynomial known up to a unit `±t^k` into an
/// [`AlexanderPolynomial`].
///
/// Rejects inputs that cannot be an Alexander polynomial of a knot: zero,
/// `|p(1)| != 1`, odd breadth, or not palindromic after shifting.
pub fn normalize(raw: &LaurentPoly) -> Result<AlexanderPolynomial> {
    let lo = raw
        .min_exponent()
        .ok_or_else(|| Error::NotAlexanderLike("zero polynomial".into()))?;
    let at_one = raw.evaluate_at_one();
    if !at_one.abs().is_one() {
        return Err(Error::NotAlexanderLike(format!("value at t = 1 is {at_one}, not ±1")));
    }
    let sign = if at_one.is_negative() { -BigInt::one() } else { BigInt::one() };
    let paper_form = raw.shift(-lo).scale(&sign);
    let breadth = paper_form.breadth()?;
    if breadth % 2 != 0 {
        return Err(Error::NotAlexanderLike(format!("odd breadth {breadth}")));
    }
    if paper_form.substitute_inverse().shift(breadth) != paper_form {
        return Err(Error::NotAlexanderLike(format!("{paper_form} is not palindromic")));
    }
    let symmetric_form = paper_form.shift(-breadth / 2);
    Ok(AlexanderPolynomial { symmetric_form, paper_form, genus_breadth: breadth })
}

/// Alexander polynomial of the closure of `b`, via
/// `det(I - burau(b)) / (1 + t + … + t^(n-1))`.
pub fn alexander_from_braid(b: &BraidWord) -> Result<AlexanderPolynomial> {
    let components = b.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let det = reduced_burau(b).minus_identity().determinant()?;
    let reduced = det
        .exact_div(&LaurentPoly::geometric(b.strands()))
        .map_err(|_| Error::Consistency(format!("Burau determinant {det} not divisible by [n]_t")))?;
    normalize(&reduced)
}

/// Closed form for the `(p, q)` torus knot:
/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn alexander_torus_closed_form(p: i64, q: i64) -> Result<AlexanderPolynomial> {
    validate_torus(p, q)?;
    let minus_one = |e: i64| LaurentPoly::t_pow(e) - LaurentPoly::one();
    let num = minus_one(p * q) * minus_one(1);
    let den = minus_one(p) * minus_one(q);
    normalize(&num.exact_div(&den)?)
}
