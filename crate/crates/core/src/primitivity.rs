//! Primitivity of the middle genus-two splitting of a torus knot exterior.
//!
//! The middle splitting of `E(T(p, q))` is μ-primitive exactly when there are
//! integers `r, s` with `|ps - rq| = 1` and `r = 1` or `s = 1`. Here `r, s`
//! are the coefficients of that equation, unrelated to the twist parameter of
//! a twisted torus knot.
//!
//! With `r = 1` the condition is `q ≡ ±1 (mod p)`, with `s = 1` it is
//! `p ≡ ±1 (mod q)`, so it is decided without search.

use std::fmt;

use serde::Serialize;

use crate::braid::validate_torus;
use crate::error::Result;

/// Which coefficient of `|ps - rq| = 1` is pinned to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedUnit {
    R,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimitivityWitness {
    pub r: i64,
    pub s: i64,
    pub fixed: FixedUnit,
}

impl PrimitivityWitness {
    pub fn verifies(&self, p: i64, q: i64) -> bool {
        (p * self.s - self.r * q).abs() == 1 && (self.r == 1 || self.s == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimitivityResult {
    pub p: i64,
    pub q: i64,
    pub primitive: bool,
    pub witness: Option<PrimitivityWitness>,
}

impl PrimitivityResult {
    /// JSON object `{p, q, primitive, witness: [r, s] | null, fixed: "r" | "s" | null}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out {
            p: i64,
            q: i64,
            primitive: bool,
            witness: Option<[i64; 2]>,
            fixed: Option<FixedUnit>,
        }
        let out = Out {
            p: self.p,
            q: self.q,
            primitive: self.primitive,
            witness: self.witness.map(|w| [w.r, w.s]),
            fixed: self.witness.map(|w| w.fixed),
        };
        serde_json::to_string(&out).expect("result serializes")
    }
}

impl fmt::Display for PrimitivityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness {
            None => write!(f, "not primitive"),
            Some(w) => match w.fixed {
                FixedUnit::S => write!(f, "primitive (s=1, r={})", w.r),
                FixedUnit::R => write!(f, "primitive (r=1, s={})", w.s),
            },
        }
    }
}

/// Decides `|ps - rq| = 1` with `r = 1` or `s = 1`.
///
/// Witness selection is deterministic: the `s = 1` family is tried before
/// `r = 1`, and within a family `ps - rq = +1` is preferred over `-1`.
pub fn middle_splitting_primitive(p: i64, q: i64) -> Result<PrimitivityResult> {
    validate_torus(p, q)?;

    // s = 1: p - rq = ±1  ⇔  r = (p ∓ 1) / q
    let with_s = [1, -1].into_iter().find_map(|sign| {
        let num = p - sign;
        (num % q == 0).then(|| PrimitivityWitness { r: num / q, s: 1, fixed: FixedUnit::S })
    });
    // r = 1: ps - q = ±1  ⇔  s = (q ± 1) / p
    let with_r = || {
        [1, -1].into_iter().find_map(|sign| {
            let num = q + sign;
            (num % p == 0).then(|| PrimitivityWitness { r: 1, s: num / p, fixed: FixedUnit::R })
        })
    };
    let witness = with_s.or_else(with_r);
    debug_assert!(witness.is_none_or(|w| w.verifies(p, q)));

    Ok(PrimitivityResult { p, q, primitive: witness.is_some(), witness })
}
