//! Exact decision procedures for the sharp exponent characterizations:
//! weighted and unweighted discrete convolution inclusions, weighted
//! embeddings, boundedness of the tau-Wigner bilinear map into modulation
//! (BMM) and Wiener-amalgam (BMW) targets, and the pseudodifferential
//! operator variants (BPM / BPW) obtained by duality.
//!
//! All comparisons are exact: exponents and weights are rational, and every
//! condition is evaluated with integer cross-multiplication, so equality-
//! triggered side conditions are decided without floating-point noise.

mod bmm;
mod bmw;
pub mod consistency;
mod conv;
mod embed;
mod pseudo;

use crate::rational::Rational;
use crate::spaces::Exponent;
use serde::{Deserialize, Serialize};
use std::borrow::Cow;

pub use bmm::{bmm_branch_verdicts, decide_bmm};
pub use bmw::{decide_bmw, endpoint_printed_conditions, endpoint_row_discrepancies, Discrepancy};
pub use conv::{
    a_conditions, decide_unweighted_convolution, decide_weighted_convolution,
    unweighted_convolution_holds,
};
pub use embed::{decide_embedding, decide_lqp_embedding};
pub use pseudo::{bmm_to_bpm, bpm_to_bmm, bpw_to_bmw, decide_bpm, decide_bpw};

/// A 1-d weighted convolution query: does
/// `l^{q1}_{s1} * l^{q2}_{s2} embed into l^q_s` on `Z^d`?
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvQuery {
    pub q: Exponent,
    pub q1: Exponent,
    pub q2: Exponent,
    pub s: Rational,
    pub s1: Rational,
    pub s2: Rational,
    pub d: u32,
}

impl ConvQuery {
    pub fn unweighted(q: Exponent, q1: Exponent, q2: Exponent) -> ConvQuery {
        ConvQuery {
            q,
            q1,
            q2,
            s: Rational::ZERO,
            s1: Rational::ZERO,
            s2: Rational::ZERO,
            d: 1,
        }
    }
}

/// Query for the map from a pair of weighted modulation spaces into a
/// modulation-space target: inputs carry separable weights `<z1>^{s_i}<z2>^{t_i}`,
/// the target carries the radial weight `<.>^s` on the second slot.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BmmQuery {
    pub tau: f64,
    pub p1: Exponent,
    pub q1: Exponent,
    pub s1: Rational,
    pub t1: Rational,
    pub p2: Exponent,
    pub q2: Exponent,
    pub s2: Rational,
    pub t2: Rational,
    pub p: Exponent,
    pub q: Exponent,
    pub s: Rational,
    pub d: u32,
}

impl BmmQuery {
    /// An unweighted query; `tau` defaults to 1/2 and is immaterial.
    pub fn unweighted(
        p1: Exponent,
        q1: Exponent,
        p2: Exponent,
        q2: Exponent,
        p: Exponent,
        q: Exponent,
    ) -> BmmQuery {
        BmmQuery {
            tau: 0.5,
            p1,
            q1,
            s1: Rational::ZERO,
            t1: Rational::ZERO,
            p2,
            q2,
            s2: Rational::ZERO,
            t2: Rational::ZERO,
            p,
            q,
            s: Rational::ZERO,
            d: 1,
        }
    }
}

/// Query for the map into a Wiener-amalgam target.
///
/// The target carries weight `s`; `t` is the weight appearing in the second
/// condition of the non-endpoint characterization (set `t = s` for the
/// radial-weight target `L^q_s`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BmwQuery {
    pub tau: f64,
    pub p1: Exponent,
    pub q1: Exponent,
    pub s1: Rational,
    pub t1: Rational,
    pub p2: Exponent,
    pub q2: Exponent,
    pub s2: Rational,
    pub t2: Rational,
    pub p: Exponent,
    pub q: Exponent,
    pub s: Rational,
    pub t: Rational,
    pub d: u32,
}

impl BmwQuery {
    pub fn unweighted(
        tau: f64,
        p1: Exponent,
        q1: Exponent,
        p2: Exponent,
        q2: Exponent,
        p: Exponent,
        q: Exponent,
    ) -> BmwQuery {
        BmwQuery {
            tau,
            p1,
            q1,
            s1: Rational::ZERO,
            t1: Rational::ZERO,
            p2,
            q2,
            s2: Rational::ZERO,
            t2: Rational::ZERO,
            p,
            q,
            s: Rational::ZERO,
            t: Rational::ZERO,
            d: 1,
        }
    }
}

/// Query for a pseudodifferential operator with symbol in `M^{p,q}_{1 x v_s}`
/// (BPM) or `W(FL^p, L^q_s)` (BPW), acting from the `1`-indexed input
/// modulation space to the `2`-indexed output space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BpQuery {
    pub tau: f64,
    pub symbol_p: Exponent,
    pub symbol_q: Exponent,
    pub symbol_s: Rational,
    pub p1: Exponent,
    pub q1: Exponent,
    pub s1: Rational,
    pub t1: Rational,
    pub p2: Exponent,
    pub q2: Exponent,
    pub s2: Rational,
    pub t2: Rational,
    pub d: u32,
}

impl BpQuery {
    /// Unweighted operator query with the given symbol-space exponents.
    pub fn unweighted(
        tau: f64,
        symbol_p: Exponent,
        symbol_q: Exponent,
        p1: Exponent,
        q1: Exponent,
        p2: Exponent,
        q2: Exponent,
    ) -> BpQuery {
        BpQuery {
            tau,
            symbol_p,
            symbol_q,
            symbol_s: Rational::ZERO,
            p1,
            q1,
            s1: Rational::ZERO,
            t1: Rational::ZERO,
            p2,
            q2,
            s2: Rational::ZERO,
            t2: Rational::ZERO,
            d: 1,
        }
    }
}

/// Decision outcome. Exit-code mapping for the CLI: 0 / 10 / 20 / 30.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    BoundedSharp,
    BoundedSufficient,
    Unbounded,
    OutOfScope,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::BoundedSharp => 0,
            Outcome::BoundedSufficient => 10,
            Outcome::Unbounded => 20,
            Outcome::OutOfScope => 30,
        }
    }
}

/// One named condition evaluated on the way to a verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisCheck {
    pub condition: Cow<'static, str>,
    pub holds: bool,
}

impl BasisCheck {
    pub fn new(condition: impl Into<Cow<'static, str>>, holds: bool) -> BasisCheck {
        BasisCheck {
            condition: condition.into(),
            holds,
        }
    }
}

/// A decision together with the conditions that produced it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub basis: Vec<BasisCheck>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Cow<'static, str>>,
    pub theorem: Cow<'static, str>,
}

impl Verdict {
    pub fn new(
        outcome: Outcome,
        basis: Vec<BasisCheck>,
        witness: Option<Cow<'static, str>>,
        theorem: impl Into<Cow<'static, str>>,
    ) -> Verdict {
        let v = Verdict {
            outcome,
            basis,
            witness,
            theorem: theorem.into(),
        };
        debug_assert!(
            v.outcome != Outcome::Unbounded || v.witness.is_some(),
            "unbounded verdicts carry a witness"
        );
        v
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self.outcome, Outcome::BoundedSharp | Outcome::BoundedSufficient)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serialization cannot fail")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Verdict> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_json_round_trip() {
        let v = Verdict::new(
            Outcome::Unbounded,
            vec![BasisCheck::new("A1", false), BasisCheck::new("A2", false)],
            Some("no convolution condition holds".into()),
            "weighted-convolution-sharp-conditions",
        );
        let back = Verdict::from_json(&v.to_json()).unwrap();
        assert_eq!(v, back);
    }

    #[test]
    fn outcome_exit_codes() {
        assert_eq!(Outcome::BoundedSharp.exit_code(), 0);
        assert_eq!(Outcome::BoundedSufficient.exit_code(), 10);
        assert_eq!(Outcome::Unbounded.exit_code(), 20);
        assert_eq!(Outcome::OutOfScope.exit_code(), 30);
    }
}
