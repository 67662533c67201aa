//! Decision procedure for the bilinear tau-Wigner map into a weighted
//! modulation-space target.
//!
//! Three sharp routes cover the decidable region:
//!
//! * `p >= q`: four 1-d embeddings into `l^q_s` (always decidable);
//! * all weights zero: closed exponent conditions, valid for every
//!   positive exponent;
//! * `p < inf` with all scaled exponents in `[1, inf]`: two weighted
//!   convolution inclusions decided by the `A1..A4` conditions.
//!
//! Outside those, the query reduces to the two scaled convolution
//! inclusions, which may still resolve sharply (zero weights on one side),
//! as bounded-sufficient (the `(|s|, s)` pattern), or as out of scope.
//!
//! The verdict never depends on `tau`.

use super::conv::decide_weighted_convolution;
use super::embed::decide_embedding;
use super::{BasisCheck, BmmQuery, ConvQuery, Outcome, Verdict};
use crate::rational::Rational;
use crate::spaces::Exponent;
use std::borrow::Cow;

pub(crate) struct BranchResult {
    pub name: &'static str,
    pub bounded: bool,
    pub basis: Vec<BasisCheck>,
    pub witness: Option<Cow<'static, str>>,
}

pub(crate) fn embedding_row(bq: &BmmQuery) -> Option<BranchResult> {
    if bq.p < bq.q {
        return None;
    }
    let relations: [(&'static str, &Exponent, Rational); 4] = [
        ("l^{p1}_{s1} -> l^q_s", &bq.p1, bq.s1),
        ("l^{p2}_{s2} -> l^q_s", &bq.p2, bq.s2),
        ("l^{q1}_{t1} -> l^q_s", &bq.q1, bq.t1),
        ("l^{q2}_{t2} -> l^q_s", &bq.q2, bq.t2),
    ];
    let mut basis = Vec::with_capacity(4);
    let mut witness = None;
    for (name, e, w) in relations {
        let holds = decide_embedding(e, w, &bq.q, bq.s, bq.d);
        if !holds && witness.is_none() {
            witness = Some(Cow::Borrowed(name));
        }
        basis.push(BasisCheck::new(name, holds));
    }
    Some(BranchResult {
        name: "embedding-row",
        bounded: witness.is_none(),
        basis,
        witness,
    })
}

pub(crate) fn unweighted_row(bq: &BmmQuery) -> Option<BranchResult> {
    let zero = bq.s.is_zero()
        && bq.s1.is_zero()
        && bq.t1.is_zero()
        && bq.s2.is_zero()
        && bq.t2.is_zero();
    if !zero {
        return None;
    }
    let inputs_below = bq.p1 <= bq.q && bq.p2 <= bq.q && bq.q1 <= bq.q && bq.q2 <= bq.q;
    let target_line = bq.p.reciprocal() + bq.q.reciprocal();
    let p_sum = bq.p1.reciprocal() + bq.p2.reciprocal() >= target_line;
    let q_sum = bq.q1.reciprocal() + bq.q2.reciprocal() >= target_line;
    let basis = vec![
        BasisCheck::new("p_i, q_i <= q", inputs_below),
        BasisCheck::new("1/p1 + 1/p2 >= 1/p + 1/q", p_sum),
        BasisCheck::new("1/q1 + 1/q2 >= 1/p + 1/q", q_sum),
    ];
    let bounded = inputs_below && p_sum && q_sum;
    let witness = if bounded {
        None
    } else if !inputs_below {
        Some(Cow::Borrowed("an input exponent exceeds q"))
    } else {
        Some(Cow::Borrowed("a reciprocal-sum condition fails"))
    };
    Some(BranchResult {
        name: "unweighted-sharp-conditions",
        bounded,
        basis,
        witness,
    })
}

/// The two scaled 1-d convolution queries the bilinear inequality separates
/// into (for `p < inf`): the p-side pairs first indices, the q-side second
/// indices; both targets carry the scaled weight `p*s`.
pub(crate) fn scaled_conv_queries(bq: &BmmQuery) -> Option<(ConvQuery, ConvQuery)> {
    let pv = bq.p.value()?;
    let cq1 = ConvQuery {
        q: bq.q.div_by(&bq.p),
        q1: bq.p1.div_by(&bq.p),
        q2: bq.p2.div_by(&bq.p),
        s: pv * bq.s,
        s1: pv * bq.s1,
        s2: pv * bq.s2,
        d: bq.d,
    };
    let cq2 = ConvQuery {
        q: bq.q.div_by(&bq.p),
        q1: bq.q1.div_by(&bq.p),
        q2: bq.q2.div_by(&bq.p),
        s: pv * bq.s,
        s1: pv * bq.t1,
        s2: pv * bq.t2,
        d: bq.d,
    };
    Some((cq1, cq2))
}

fn banach(e: &Exponent) -> bool {
    *e >= Exponent::ONE
}

fn prefixed(side: &str, v: &Verdict) -> Vec<BasisCheck> {
    v.basis
        .iter()
        .map(|c| BasisCheck::new(format!("{side}: {}", c.condition), c.holds))
        .collect()
}

pub(crate) fn convolution_row(bq: &BmmQuery) -> Option<BranchResult> {
    let (cq1, cq2) = scaled_conv_queries(bq)?;
    let all_banach = banach(&cq1.q)
        && banach(&cq1.q1)
        && banach(&cq1.q2)
        && banach(&cq2.q1)
        && banach(&cq2.q2);
    if !all_banach {
        return None;
    }
    let v1 = decide_weighted_convolution(&cq1);
    let v2 = decide_weighted_convolution(&cq2);
    debug_assert!(matches!(v1.outcome, Outcome::BoundedSharp | Outcome::Unbounded));
    debug_assert!(matches!(v2.outcome, Outcome::BoundedSharp | Outcome::Unbounded));
    let mut basis = prefixed("p-side", &v1);
    basis.extend(prefixed("q-side", &v2));
    let bounded = v1.outcome == Outcome::BoundedSharp && v2.outcome == Outcome::BoundedSharp;
    let witness = if bounded {
        None
    } else if v1.outcome == Outcome::Unbounded {
        Some(Cow::Borrowed("p-side convolution inclusion fails"))
    } else {
        Some(Cow::Borrowed("q-side convolution inclusion fails"))
    };
    Some(BranchResult {
        name: "convolution-row",
        bounded,
        basis,
        witness,
    })
}

/// The sharp branches applicable to a query, in precedence order.
pub(crate) fn sharp_branches(bq: &BmmQuery) -> Vec<BranchResult> {
    [embedding_row(bq), unweighted_row(bq), convolution_row(bq)]
        .into_iter()
        .flatten()
        .collect()
}

/// For consistency sweeps: the embedding-row and convolution-row booleans,
/// where applicable.
pub fn bmm_branch_verdicts(bq: &BmmQuery) -> (Option<bool>, Option<bool>) {
    (
        embedding_row(bq).map(|b| b.bounded),
        convolution_row(bq).map(|b| b.bounded),
    )
}

pub(crate) fn resolve_sharp_rows(branches: Vec<BranchResult>, theorem_prefix: &str) -> Verdict {
    debug_assert!(!branches.is_empty());
    let agree = branches.windows(2).all(|w| w[0].bounded == w[1].bounded);
    if agree {
        let mut it = branches.into_iter();
        let first = it.next().unwrap();
        let outcome = if first.bounded {
            Outcome::BoundedSharp
        } else {
            Outcome::Unbounded
        };
        return Verdict::new(
            outcome,
            first.basis,
            first.witness,
            format!("{theorem_prefix}-{}", first.name),
        );
    }
    // The printed rows disagree. This is reachable only on the boundary where
    // the separation argument needs a submultiplicative target weight (s >= 0)
    // and the query has s < 0: there the row claiming boundedness is
    // unsupported, while an unbounded row rests on explicit test sequences.
    // Necessity wins.
    let mut basis = Vec::new();
    let mut witness = None;
    for b in &branches {
        basis.push(BasisCheck::new(format!("row applies: {}", b.name), true));
        basis.extend(b.basis.iter().cloned());
        if !b.bounded && witness.is_none() {
            witness = b.witness.clone();
        }
    }
    basis.push(BasisCheck::new("printed rows agree", false));
    Verdict::new(
        Outcome::Unbounded,
        basis,
        witness.or(Some(Cow::Borrowed("a necessary condition fails"))),
        format!("{theorem_prefix}-necessity-resolution"),
    )
}

pub(crate) fn combine_conv_reduction(
    v1: Verdict,
    v2: Verdict,
    theorem: &'static str,
) -> Verdict {
    let mut basis = prefixed("p-side", &v1);
    basis.extend(prefixed("q-side", &v2));
    if v1.outcome == Outcome::Unbounded || v2.outcome == Outcome::Unbounded {
        let witness = if v1.outcome == Outcome::Unbounded {
            "p-side convolution inclusion fails"
        } else {
            "q-side convolution inclusion fails"
        };
        return Verdict::new(Outcome::Unbounded, basis, Some(witness.into()), theorem);
    }
    if v1.outcome == Outcome::OutOfScope || v2.outcome == Outcome::OutOfScope {
        return Verdict::new(
            Outcome::OutOfScope,
            basis,
            Some("a scaled convolution inclusion is outside the decidable range".into()),
            theorem,
        );
    }
    let outcome = if v1.outcome == Outcome::BoundedSharp && v2.outcome == Outcome::BoundedSharp {
        Outcome::BoundedSharp
    } else {
        Outcome::BoundedSufficient
    };
    Verdict::new(outcome, basis, None, theorem)
}

/// Decides boundedness into the modulation-space target. Ignores `tau`
/// by design: the answer is the same for every `tau` in `[0, 1]`.
pub fn decide_bmm(bq: &BmmQuery) -> Verdict {
    let branches = sharp_branches(bq);
    if !branches.is_empty() {
        return resolve_sharp_rows(branches, "bmm");
    }
    // Here p < q (hence p finite), weights are not all zero, and some scaled
    // exponent is quasi-Banach; fall back to the convolution reduction.
    let (cq1, cq2) = scaled_conv_queries(bq).expect("p < q implies p finite");
    combine_conv_reduction(
        decide_weighted_convolution(&cq1),
        decide_weighted_convolution(&cq2),
        "bmm-convolution-reduction",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp(s: &str) -> Exponent {
        s.parse().unwrap()
    }

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn all_twos_is_bounded() {
        let q = BmmQuery::unweighted(exp("2"), exp("2"), exp("2"), exp("2"), exp("2"), exp("2"));
        assert_eq!(decide_bmm(&q).outcome, Outcome::BoundedSharp);
    }

    #[test]
    fn l1_inputs_into_sup_one() {
        let q = BmmQuery::unweighted(exp("1"), exp("1"), exp("1"), exp("1"), exp("inf"), exp("1"));
        assert_eq!(decide_bmm(&q).outcome, Outcome::BoundedSharp);
    }

    #[test]
    fn weighted_target_defeats_unweighted_inputs() {
        let mut q =
            BmmQuery::unweighted(exp("2"), exp("2"), exp("2"), exp("2"), exp("2"), exp("2"));
        q.s = rat(1);
        let v = decide_bmm(&q);
        assert_eq!(v.outcome, Outcome::Unbounded);
        assert_eq!(v.theorem, "bmm-embedding-row");
        assert!(v.witness.is_some());
    }

    #[test]
    fn scaled_convolution_route() {
        // p = 2 < q = inf with heavy input weights: both scaled convolutions
        // land in the Banach range and decide sharply.
        let q = BmmQuery {
            tau: 0.5,
            p1: exp("2"),
            q1: exp("2"),
            s1: rat(1),
            t1: rat(2),
            p2: exp("2"),
            q2: exp("2"),
            s2: rat(1),
            t2: rat(2),
            p: exp("2"),
            q: exp("inf"),
            s: rat(0),
            d: 1,
        };
        let v = decide_bmm(&q);
        assert_eq!(v.outcome, Outcome::BoundedSharp);
        assert_eq!(v.theorem, "bmm-convolution-row");
    }

    #[test]
    fn tau_is_immaterial() {
        let mut q = BmmQuery::unweighted(exp("4"), exp("2"), exp("1"), exp("inf"), exp("2"), exp("4"));
        let v0 = decide_bmm(&q);
        for tau in [0.0, 0.3, 0.5, 1.0] {
            q.tau = tau;
            assert_eq!(decide_bmm(&q), v0);
        }
    }

    #[test]
    fn quasi_banach_weighted_fallback() {
        // p = 1 exceeds p1 = 1/2, so the p-side scaled convolution is
        // quasi-Banach with non-pattern weights (out of scope), while the
        // q-side decides bounded; the combination stays out of scope.
        let q = BmmQuery {
            tau: 0.0,
            p1: exp("1/2"),
            q1: exp("2"),
            s1: rat(2),
            t1: rat(2),
            p2: exp("2"),
            q2: exp("2"),
            s2: rat(0),
            t2: rat(2),
            p: exp("1"),
            q: exp("inf"),
            s: rat(-1),
            d: 1,
        };
        assert_eq!(decide_bmm(&q).outcome, Outcome::OutOfScope);
    }

    #[test]
    fn abs_weight_pattern_gives_sufficient() {
        // p = 1 exceeds p1 = 1/2 so the p-side leaves the Banach range, but
        // its weights follow (|s|, s) -> s and the unweighted conditions
        // hold; the q-side decides sharply. Combined: bounded, sufficient.
        let q = BmmQuery {
            tau: 0.5,
            p1: exp("1/2"),
            q1: exp("1"),
            s1: rat(1),
            t1: rat(1),
            p2: exp("1"),
            q2: exp("1"),
            s2: rat(-1),
            t2: rat(-1),
            p: exp("1"),
            q: exp("2"),
            s: rat(-1),
            d: 1,
        };
        let v = decide_bmm(&q);
        assert_eq!(v.outcome, Outcome::BoundedSufficient);
        assert_eq!(v.theorem, "bmm-convolution-reduction");
    }

    #[test]
    fn printed_rows_can_disagree_on_negative_weights() {
        // p = q = 1 with inputs (2, inf) and target weight s = -2: the four
        // embeddings hold, but the q-side scaled convolution
        // l^inf * l^inf -> l^1_{-2} fails (truncated constants witness
        // growth). Necessity must win: the verdict is Unbounded.
        let q = BmmQuery {
            tau: 0.5,
            p1: exp("2"),
            q1: exp("inf"),
            s1: rat(0),
            t1: rat(0),
            p2: exp("2"),
            q2: exp("inf"),
            s2: rat(0),
            t2: rat(0),
            p: exp("1"),
            q: exp("1"),
            s: rat(-2),
            d: 1,
        };
        let (emb, conv) = bmm_branch_verdicts(&q);
        assert_eq!(emb, Some(true));
        assert_eq!(conv, Some(false));
        let v = decide_bmm(&q);
        assert_eq!(v.outcome, Outcome::Unbounded);
        assert_eq!(v.theorem, "bmm-necessity-resolution");
    }
}
