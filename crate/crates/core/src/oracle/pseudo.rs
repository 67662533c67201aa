//! Pseudodifferential operator boundedness (BPM / BPW) via duality.
//!
//! An operator with symbol in `M^{p,q}_{1 x v_s}` maps the input modulation
//! space to the output one iff the bilinear tau-Wigner map is bounded on the
//! dual configuration: conjugate the output and target exponents, negate the
//! output weights and the symbol weight. Symbols in `W(FL^p, L^q_s)` reduce
//! the same way to the Wiener-amalgam target. The reduction needs Banach
//! exponents throughout; anything else is out of scope.

use super::{BasisCheck, BmmQuery, BmwQuery, BpQuery, Outcome, Verdict};
use crate::spaces::Exponent;

fn all_banach(bp: &BpQuery) -> bool {
    [bp.symbol_p, bp.symbol_q, bp.p1, bp.q1, bp.p2, bp.q2]
        .iter()
        .all(|e| *e >= Exponent::ONE)
}

/// Maps an operator query with modulation-space symbol to the equivalent
/// bilinear query. `None` when an exponent lies outside `[1, inf]`.
pub fn bpm_to_bmm(bp: &BpQuery) -> Option<BmmQuery> {
    if !all_banach(bp) {
        return None;
    }
    Some(BmmQuery {
        tau: bp.tau,
        // First factor: the dual of the output space, with negated weights.
        p1: bp.p2.conjugate()?,
        q1: bp.q2.conjugate()?,
        s1: -bp.s2,
        t1: -bp.t2,
        // Second factor: the input space, unchanged.
        p2: bp.p1,
        q2: bp.q1,
        s2: bp.s1,
        t2: bp.t1,
        // Target: the dual of the symbol space.
        p: bp.symbol_p.conjugate()?,
        q: bp.symbol_q.conjugate()?,
        s: -bp.symbol_s,
        d: bp.d,
    })
}

/// Inverse of [`bpm_to_bmm`]: reconstructs the operator query whose dual
/// configuration is the given bilinear query.
pub fn bmm_to_bpm(bq: &BmmQuery) -> Option<BpQuery> {
    Some(BpQuery {
        tau: bq.tau,
        symbol_p: bq.p.conjugate()?,
        symbol_q: bq.q.conjugate()?,
        symbol_s: -bq.s,
        p1: bq.p2,
        q1: bq.q2,
        s1: bq.s2,
        t1: bq.t2,
        p2: bq.p1.conjugate()?,
        q2: bq.q1.conjugate()?,
        s2: -bq.s1,
        t2: -bq.t1,
        d: bq.d,
    })
}

/// Maps an operator query with Wiener-amalgam symbol to the equivalent
/// bilinear query into the amalgam target (`t = s`: radial symbol weight).
pub fn bpw_to_bmw(bp: &BpQuery) -> Option<BmwQuery> {
    if !all_banach(bp) {
        return None;
    }
    Some(BmwQuery {
        tau: bp.tau,
        p1: bp.p2.conjugate()?,
        q1: bp.q2.conjugate()?,
        s1: -bp.s2,
        t1: -bp.t2,
        p2: bp.p1,
        q2: bp.q1,
        s2: bp.s1,
        t2: bp.t1,
        p: bp.symbol_p.conjugate()?,
        q: bp.symbol_q.conjugate()?,
        s: -bp.symbol_s,
        t: -bp.symbol_s,
        d: bp.d,
    })
}

fn out_of_scope(theorem: &'static str) -> Verdict {
    Verdict::new(
        Outcome::OutOfScope,
        vec![BasisCheck::new("all exponents within [1, inf]", false)],
        Some("the duality reduction requires Banach exponents".into()),
        theorem,
    )
}

/// Decides boundedness of the operator with symbol in `M^{p,q}_{1 x v_s}`.
pub fn decide_bpm(bp: &BpQuery) -> Verdict {
    let Some(bmm) = bpm_to_bmm(bp) else {
        return out_of_scope("pseudodiff-modulation-symbol-duality");
    };
    let inner = super::decide_bmm(&bmm);
    let mut basis = vec![BasisCheck::new(
        "duality: conjugate output and symbol exponents, negate their weights",
        true,
    )];
    basis.extend(inner.basis);
    Verdict::new(
        inner.outcome,
        basis,
        inner.witness,
        format!("pseudodiff-modulation-symbol-duality + {}", inner.theorem),
    )
}

/// Decides boundedness of the operator with symbol in `W(FL^p, L^q_s)`.
pub fn decide_bpw(bp: &BpQuery) -> Verdict {
    let Some(bmw) = bpw_to_bmw(bp) else {
        return out_of_scope("pseudodiff-amalgam-symbol-duality");
    };
    let inner = super::decide_bmw(&bmw);
    let mut basis = vec![BasisCheck::new(
        "duality: conjugate output and symbol exponents, negate their weights",
        true,
    )];
    basis.extend(inner.basis);
    Verdict::new(
        inner.outcome,
        basis,
        inner.witness,
        format!("pseudodiff-amalgam-symbol-duality + {}", inner.theorem),
    )
}
