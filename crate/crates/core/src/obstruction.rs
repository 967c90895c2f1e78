//! Coefficient obstructions to lens-space surgeries.
//!
//! A knot with a lens-space surgery has an Alexander polynomial of the form
//! `±1 + Σ ±(t^n_j + t^-n_j)` whose nonzero coefficients are all `±1` and
//! alternate in sign. Morton's theorem on twisted torus knots predicts a
//! coefficient `<= -2` at `t^(ps+2)` (with `s = p⁻¹ mod q`), which breaks
//! that form. For the knots `K_m = T(7, 17, 10m - 4)` this rules out lens
//! surgeries, and with μ-primitivity already excluded by Morimoto, Sakuma and
//! Yokota it rules out γ-primitivity for every slope γ. Integral surgeries
//! that give `S³` are excluded by the Culler–Gordon–Luecke–Shalen theorem and
//! need no computation.
//!
//! All exponents reported here are in `paper_form` indexing (degrees
//! `0..=breadth`). Translation to the symmetric form goes through
//! [`AlexanderPolynomial::paper_to_symmetric`] only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::braid::TwistedTorusKnot;
use crate::burau::{alexander_from_braid, AlexanderPolynomial};
use crate::error::{Error, Result};

/// First coefficient breaking the lens-space form, in `paper_form` indexing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub exponent: i64,
    pub coefficient: i64,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.exponent)?;
        t.serialize_element(&self.coefficient)?;
        t.end()
    }
}

fn to_i64(c: &BigInt) -> Result<i64> {
    c.to_i64().ok_or_else(|| Error::CoefficientOverflow(c.to_string()))
}

/// Checks the symmetric form for "all nonzero coefficients are ±1 and they
/// alternate in sign". Returns `(true, None)` on success, otherwise `false`
/// with the lowest violating term.
///
/// The global sign of the alternating sum is not pinned beyond `Δ(1) = 1`.
pub fn os_lens_form_check(d: &AlexanderPolynomial) -> (bool, Option<Witness>) {
    let mut prev_negative: Option<bool> = None;
    for (e, c) in d.symmetric_form().terms() {
        let negative = c.is_negative();
        let unit = c.magnitude() == &1u32.into();
        if !unit || prev_negative == Some(negative) {
            let witness = Witness {
                exponent: d.symmetric_to_paper(e),
                // saturates on overflow
                coefficient: c.to_i64().unwrap_or(if negative { i64::MIN } else { i64::MAX }),
            };
            return (false, Some(witness));
        }
        prev_negative = Some(negative);
    }
    (true, None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MortonInverse {
    /// The unique `s` in `(0, q)` with `ps ≡ 1 (mod q)`.
    pub s: i64,
    /// Whether `0 < s < q/3`.
    pub hypothesis_holds: bool,
}

pub fn morton_inverse_s(p: i64, q: i64) -> Result<MortonInverse> {
    if q < 2 {
        return Err(Error::NoInverse { p, q });
    }
    let eg = p.extended_gcd(&q);
    if eg.gcd != 1 {
        return Err(Error::NoInverse { p, q });
    }
    let s = eg.x.mod_floor(&q);
    Ok(MortonInverse { s, hypothesis_holds: s > 0 && 3 * s < q })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MortonPart {
    /// `n >= 2`: coefficient of `t^(ps+2)` in `Δ_{T(p,q,2n)}` is `<= -2`.
    Positive,
    /// `n >= 2`: one of `t^(ps+1)`, `t^(ps+2)`, `t^(ps+3)` in
    /// `t^(2n) Δ_{T(p,q,-2n)}` has coefficient `±2`.
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MortonOutcome {
    Holds,
    Violated,
    /// Negative part only: none of the three examined `paper_form`
    /// coefficients is `±2`. The normalization behind the negative-twist
    /// statement is not pinned down, so this is not reported as a violation.
    FormUncertain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MortonReport {
    pub part: MortonPart,
    pub s: i64,
    /// `ps + 2`, in `paper_form` indexing.
    pub target_exponent: i64,
    /// `(paper_form exponent, coefficient)` for every examined term.
    pub examined: Vec<(i64, i64)>,
    pub outcome: MortonOutcome,
}

impl MortonReport {
    pub fn holds(&self) -> bool {
        self.outcome == MortonOutcome::Holds
    }
}

/// Compares `d` against Morton's prediction for `T(p, q, 2n)`.
///
/// `n` is the signed twist count: `n >= 2` selects the positive statement,
/// `n <= -2` the negative one (with `|n|` in the role of Morton's `n`).
pub fn morton_check(p: i64, q: i64, n: i64, d: &AlexanderPolynomial) -> Result<MortonReport> {
    let inv = morton_inverse_s(p, q)?;
    if !inv.hypothesis_holds {
        return Err(Error::HypothesisNotMet(format!(
            "s = {} is not in (0, q/3) for (p, q) = ({p}, {q})",
            inv.s
        )));
    }
    if n.abs() < 2 {
        return Err(Error::HypothesisNotMet(format!("twist count |n| = {} < 2", n.abs())));
    }
    let target = p * inv.s + 2;
    let coeff_at = |e: i64| -> Result<i64> {
        let paper = d.paper_form().coefficient(e);
        let symmetric = d.symmetric_form().coefficient(d.paper_to_symmetric(e));
        if paper != symmetric {
            return Err(Error::Consistency(format!(
                "paper/symmetric coefficient mismatch at t^{e}: {paper} vs {symmetric}"
            )));
        }
        to_i64(&paper)
    };

    let report = if n > 0 {
        let c = coeff_at(target)?;
        MortonReport {
            part: MortonPart::Positive,
            s: inv.s,
            target_exponent: target,
            examined: vec![(target, c)],
            outcome: if c <= -2 { MortonOutcome::Holds } else { MortonOutcome::Violated },
        }
    } else {
        let examined = (target - 1..=target + 1)
            .map(|e| coeff_at(e).map(|c| (e, c)))
            .collect::<Result<Vec<_>>>()?;
        let hit = examined.iter().any(|(_, c)| c.abs() == 2);
        MortonReport {
            part: MortonPart::Negative,
            s: inv.s,
            target_exponent: target,
            examined,
            outcome: if hit { MortonOutcome::Holds } else { MortonOutcome::FormUncertain },
        }
    };
    Ok(report)
}

/// Whether μ-primitivity is excluded by the literature for this knot. True
/// exactly for the `K_m` family, where Morimoto, Sakuma and Yokota prove it;
/// this crate does not verify that result.
pub fn default_mu_excluded(k: &TwistedTorusKnot) -> bool {
    k.family_index().is_some()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub knot: TwistedTorusKnot,
    pub lens_form_ok: bool,
    pub lens_witness: Option<Witness>,
    pub morton_target_exponent: i64,
    pub morton_coefficient: i64,
    /// `None` when Morton's hypotheses are not met, or when the negative
    /// statement's normalization is uncertain.
    pub morton_prediction_holds: Option<bool>,
    pub gamma_primitive_excluded: bool,
    pub mu_primitive_excluded_by_msy: bool,
}

impl ObstructionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the full chain for one knot: Alexander polynomial, lens-form check,
/// Morton check, and the γ-primitivity verdict. γ-primitivity is excluded
/// only when the lens form fails *and* μ-primitivity is excluded.
pub fn gamma_primitivity_verdict(k: &TwistedTorusKnot, mu_excluded: bool) -> Result<ObstructionReport> {
    let d = alexander_from_braid(&k.dean_braid())?;
    obstruction_report(k, &d, mu_excluded)
}

/// Same as [`gamma_primitivity_verdict`] for an already computed polynomial.
pub fn obstruction_report(
    k: &TwistedTorusKnot,
    d: &AlexanderPolynomial,
    mu_excluded: bool,
) -> Result<ObstructionReport> {
    let (lens_form_ok, lens_witness) = os_lens_form_check(d);
    let inv = morton_inverse_s(k.p(), k.q())?;
    let target = k.p() * inv.s + 2;
    let morton_prediction_holds = match morton_check(k.p(), k.q(), k.twist_count(), d) {
        Ok(r) => match r.outcome {
            MortonOutcome::Holds => Some(true),
            MortonOutcome::Violated => Some(false),
            MortonOutcome::FormUncertain => None,
        },
        Err(Error::HypothesisNotMet(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(ObstructionReport {
        knot: *k,
        lens_form_ok,
        lens_witness,
        morton_target_exponent: target,
        morton_coefficient: to_i64(&d.paper_form().coefficient(target))?,
        morton_prediction_holds,
        gamma_primitive_excluded: !lens_form_ok && mu_excluded,
        mu_primitive_excluded_by_msy: mu_excluded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::family_km;
    use crate::burau::{alexander_torus_closed_form, normalize};

    fn family_poly(m: i64) -> AlexanderPolynomial {
        alexander_from_braid(&family_km(m).dean_braid()).unwrap()
    }

    #[test]
    fn lens_form_examples() {
        assert_eq!(os_lens_form_check(&alexander_torus_closed_form(2, 3).unwrap()), (true, None));
        assert_eq!(os_lens_form_check(&alexander_torus_closed_form(2, 7).unwrap()), (true, None));
        assert_eq!(
            os_lens_form_check(&family_poly(1)),
            (false, Some(Witness { exponent: 37, coefficient: -2 }))
        );
    }

    #[test]
    fn lens_form_catches_repeated_sign() {
        // 5_1-like shape but with two adjacent positive terms.
        let d = normalize(&"t^4 + t^3 - 3t^2 + t + 1".parse().unwrap()).unwrap();
        assert_eq!(os_lens_form_check(&d), (false, Some(Witness { exponent: 1, coefficient: 1 })));
        // Figure eight: -t + 3 - t^-1.
        let d = normalize(&"-t^2 + 3t - 1".parse().unwrap()).unwrap();
        assert_eq!(os_lens_form_check(&d), (false, Some(Witness { exponent: 1, coefficient: 3 })));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(morton_inverse_s(7, 17).unwrap(), MortonInverse { s: 5, hypothesis_holds: true });
        assert_eq!(morton_inverse_s(2, 3).unwrap(), MortonInverse { s: 2, hypothesis_holds: false });
        assert_eq!(morton_inverse_s(3, 7).unwrap(), MortonInverse { s: 5, hypothesis_holds: false });
        assert_eq!(morton_inverse_s(4, 6), Err(Error::NoInverse { p: 4, q: 6 }));
        assert_eq!(morton_inverse_s(-3, 7).unwrap().s, 2);
    }

    #[test]
    fn morton_positive_part() {
        let r = morton_check(7, 17, 3, &family_poly(1)).unwrap();
        assert_eq!(r.part, MortonPart::Positive);
        assert_eq!(r.examined, vec![(37, -2)]);
        assert!(r.holds());

        let r = morton_check(7, 17, 8, &family_poly(2)).unwrap();
        assert_eq!(r.target_exponent, 37);
        assert!(r.examined[0].1 <= -2);
        assert!(r.holds());
    }

    #[test]
    fn morton_hypothesis_gate() {
        let d = family_poly(1);
        assert!(matches!(morton_check(7, 17, 1, &d), Err(Error::HypothesisNotMet(_))));
        assert!(matches!(morton_check(7, 17, -1, &d), Err(Error::HypothesisNotMet(_))));
        let trefoil = alexander_torus_closed_form(2, 3).unwrap();
        assert!(matches!(morton_check(2, 3, 3, &trefoil), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn morton_negative_part_examines_three_terms() {
        let r = morton_check(7, 17, -7, &family_poly(-1)).unwrap();
        assert_eq!(r.part, MortonPart::Negative);
        let exps: Vec<i64> = r.examined.iter().map(|(e, _)| *e).collect();
        assert_eq!(exps, vec![36, 37, 38]);
    }

    #[test]
    fn verdict_examples() {
        let r = gamma_primitivity_verdict(&family_km(1), true).unwrap();
        assert!(r.gamma_primitive_excluded);
        assert_eq!(r.lens_witness, Some(Witness { exponent: 37, coefficient: -2 }));
        assert_eq!(r.morton_target_exponent, 37);
        assert_eq!(r.morton_coefficient, -2);
        assert_eq!(r.morton_prediction_holds, Some(true));

        let trefoil = TwistedTorusKnot::torus(2, 3).unwrap();
        let r = gamma_primitivity_verdict(&trefoil, false).unwrap();
        assert!(r.lens_form_ok);
        assert!(!r.gamma_primitive_excluded);
        assert_eq!(r.morton_prediction_holds, None);

        let r = gamma_primitivity_verdict(&family_km(3), true).unwrap();
        assert!(r.gamma_primitive_excluded);
        assert_eq!(r.lens_witness.unwrap().exponent, 37);
    }

    #[test]
    fn verdict_requires_mu_exclusion() {
        let r = gamma_primitivity_verdict(&family_km(1), false).unwrap();
        assert!(!r.lens_form_ok);
        assert!(!r.gamma_primitive_excluded);
    }

    #[test]
    fn default_mu_only_for_family() {
        assert!(default_mu_excluded(&family_km(4)));
        assert!(default_mu_excluded(&family_km(-2)));
        assert!(!default_mu_excluded(&TwistedTorusKnot::new(7, 17, 8).unwrap()));
        assert!(!default_mu_excluded(&TwistedTorusKnot::torus(2, 3).unwrap()));
    }

    #[test]
    fn report_json_shape() {
        let r = gamma_primitivity_verdict(&family_km(1), true).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["lens_witness"], serde_json::json!([37, -2]));
        assert_eq!(v["knot"], serde_json::json!({"p": 7, "q": 17, "r": 6}));
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = vec![
            "knot",
            "lens_form_ok",
            "lens_witness",
            "morton_target_exponent",
            "morton_coefficient",
            "morton_prediction_holds",
            "gamma_primitive_excluded",
            "mu_primitive_excluded_by_msy",
        ];
        expected.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, expected);
    }
}
