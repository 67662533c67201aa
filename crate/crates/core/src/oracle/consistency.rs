//! Exhaustive internal-consistency sweeps for the decision procedures:
//! branch agreement on the jointly-applicable region, tau-independence,
//! reproduction of the published sharp operator regions, and the endpoint
//! printed-form discrepancy scan. Shared by the CLI suite command and the
//! acceptance tests.

use super::bmm::bmm_branch_verdicts;
use super::{
    decide_bmm, decide_bpm, decide_bpw, endpoint_row_discrepancies, BmmQuery, BmwQuery, BpQuery,
    Discrepancy, Outcome,
};
use crate::rational::Rational;
use crate::spaces::Exponent;
use rayon::prelude::*;
use serde::Serialize;

/// The exponent grid used by the consistency sweeps.
pub fn standard_exponents() -> Vec<Exponent> {
    ["1", "4/3", "2", "4", "inf"].iter().map(|s| s.parse().unwrap()).collect()
}

/// A finer grid including a quasi-Banach value, for sampled property tests.
pub fn extended_exponents() -> Vec<Exponent> {
    ["1/2", "1", "4/3", "2", "4", "inf"].iter().map(|s| s.parse().unwrap()).collect()
}

/// The weight grid used by the consistency sweeps.
pub fn standard_weights() -> Vec<Rational> {
    (-2..=2).map(Rational::from_int).collect()
}

/// Exponent tuples `(p, q, p1, q1, p2, q2, d)` on which both the embedding
/// row and the convolution row apply: `p >= q`, `p` finite, and all scaled
/// exponents in `[1, inf]`, which forces `p = q <= min(p1, q1, p2, q2)`.
fn jointly_applicable_tuples() -> Vec<(Exponent, Exponent, Exponent, Exponent, Exponent, u32)> {
    let exps = standard_exponents();
    let mut out = Vec::new();
    for &p in &exps {
        if p.is_infinite() {
            continue;
        }
        for &p1 in &exps {
            for &q1 in &exps {
                for &p2 in &exps {
                    for &q2 in &exps {
                        if p <= p1 && p <= q1 && p <= p2 && p <= q2 {
                            for d in [1u32, 2] {
                                out.push((p, p1, q1, p2, q2, d));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct OverlapReport {
    pub checked: u64,
    pub disagreements: u64,
    /// First few disagreeing queries, for inspection.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<BmmQuery>,
}

/// Sweeps the jointly-applicable region and counts tuples where the
/// embedding row and the convolution row return different verdicts.
///
/// Mathematically the two rows are equivalent wherever the separation
/// argument applies, which needs the target weight to be submultiplicative
/// (`s >= 0`); `restrict_to_submultiplicative` selects whether the sweep
/// stays inside that hypothesis or covers the full printed weight grid.
pub fn overlap_agreement(restrict_to_submultiplicative: bool) -> OverlapReport {
    let weights = standard_weights();
    let tuples = jointly_applicable_tuples();
    let partials: Vec<(u64, u64, Vec<BmmQuery>)> = tuples
        .par_iter()
        .map(|&(p, p1, q1, p2, q2, d)| {
            let mut checked = 0u64;
            let mut disagreements = 0u64;
            let mut samples = Vec::new();
            for &s1 in &weights {
                for &t1 in &weights {
                    for &s2 in &weights {
                        for &t2 in &weights {
                            for &s in &weights {
                                if restrict_to_submultiplicative && s.is_negative() {
                                    continue;
                                }
                                let q = BmmQuery {
                                    tau: 0.5,
                                    p1,
                                    q1,
                                    s1,
                                    t1,
                                    p2,
                                    q2,
                                    s2,
                                    t2,
                                    p,
                                    q: p,
                                    s,
                                    d,
                                };
                                let (emb, conv) = bmm_branch_verdicts(&q);
                                let (emb, conv) = (
                                    emb.expect("embedding row applies on the overlap region"),
                                    conv.expect("convolution row applies on the overlap region"),
                                );
                                checked += 1;
                                if emb != conv {
                                    disagreements += 1;
                                    if samples.len() < 4 {
                                        samples.push(q);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            (checked, disagreements, samples)
        })
        .collect();
    let mut report = OverlapReport {
        checked: 0,
        disagreements: 0,
        samples: Vec::new(),
    };
    for (c, dis, samples) in partials {
        report.checked += c;
        report.disagreements += dis;
        if report.samples.len() < 16 {
            report.samples.extend(samples);
            report.samples.truncate(16);
        }
    }
    report
}

#[derive(Clone, Debug, Serialize)]
pub struct TauIndependenceReport {
    pub checked: u64,
    pub mismatches: u64,
}

/// Verifies that the modulation-target verdict is identical across
/// `tau in {0, 0.3, 0.5, 1}` on the overlap grid.
pub fn tau_independence() -> TauIndependenceReport {
    let weights = standard_weights();
    let tuples = jointly_applicable_tuples();
    let taus = [0.0, 0.3, 0.5, 1.0];
    let partials: Vec<(u64, u64)> = tuples
        .par_iter()
        .map(|&(p, p1, q1, p2, q2, d)| {
            let mut checked = 0u64;
            let mut mismatches = 0u64;
            for &s1 in &weights {
                for &t1 in &weights {
                    for &s2 in &weights {
                        for &t2 in &weights {
                            for &s in &weights {
                                let mut q = BmmQuery {
                                    tau: taus[0],
                                    p1,
                                    q1,
                                    s1,
                                    t1,
                                    p2,
                                    q2,
                                    s2,
                                    t2,
                                    p,
                                    q: p,
                                    s,
                                    d,
                                };
                                let reference = decide_bmm(&q);
                                checked += 1;
                                for &tau in &taus[1..] {
                                    q.tau = tau;
                                    if decide_bmm(&q) != reference {
                                        mismatches += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            (checked, mismatches)
        })
        .collect();
    let (checked, mismatches) = partials
        .into_iter()
        .fold((0, 0), |(a, b), (c, d)| (a + c, b + d));
    TauIndependenceReport { checked, mismatches }
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionReport {
    pub checked: u64,
    pub mismatches: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<BpQuery>,
}

fn region_exponents() -> Vec<Exponent> {
    ["1", "4/3", "2", "3", "4", "inf"].iter().map(|s| s.parse().unwrap()).collect()
}

/// Sharp region for operators with symbols in `M^{inf,1}`: bounded from
/// `M^{p1,q1}` to `M^{p2,q2}` exactly when `p1 <= p2` and `q1 <= q2`.
pub fn sjostrand_region_check() -> RegionReport {
    let exps = region_exponents();
    let mut report = RegionReport {
        checked: 0,
        mismatches: 0,
        samples: Vec::new(),
    };
    for &p1 in &exps {
        for &q1 in &exps {
            for &p2 in &exps {
                for &q2 in &exps {
                    let bp = BpQuery::unweighted(
                        0.5,
                        Exponent::INFINITY,
                        Exponent::ONE,
                        p1,
                        q1,
                        p2,
                        q2,
                    );
                    let expected = p1 <= p2 && q1 <= q2;
                    let got = decide_bpm(&bp).outcome == Outcome::BoundedSharp;
                    report.checked += 1;
                    if expected != got {
                        report.mismatches += 1;
                        if report.samples.len() < 8 {
                            report.samples.push(bp);
                        }
                    }
                }
            }
        }
    }
    report
}

/// Sharp region for interior-`tau` operators with symbols in
/// `W(FL^1, L^inf)`: bounded exactly for input `M^{1,1}`, output `M^{inf,inf}`.
pub fn amalgam_region_check() -> RegionReport {
    let exps = region_exponents();
    let mut report = RegionReport {
        checked: 0,
        mismatches: 0,
        samples: Vec::new(),
    };
    for &p1 in &exps {
        for &q1 in &exps {
            for &p2 in &exps {
                for &q2 in &exps {
                    let bp = BpQuery::unweighted(
                        0.5,
                        Exponent::ONE,
                        Exponent::INFINITY,
                        p1,
                        q1,
                        p2,
                        q2,
                    );
                    let expected = p1 == Exponent::ONE
                        && q1 == Exponent::ONE
                        && p2.is_infinite()
                        && q2.is_infinite();
                    let got = decide_bpw(&bp).outcome == Outcome::BoundedSharp;
                    report.checked += 1;
                    if expected != got {
                        report.mismatches += 1;
                        if report.samples.len() < 8 {
                            report.samples.push(bp);
                        }
                    }
                }
            }
        }
    }
    report
}

#[derive(Debug)]
pub struct EndpointScan {
    pub checked: u64,
    pub discrepancies: Vec<Discrepancy>,
    /// Whether every discrepancy is a one-sided equality-boundary case:
    /// the printed form holds, the derived decision fails, and each flagged
    /// relation meets its line condition with equality.
    pub all_boundary: bool,
}

/// Scans endpoint queries over a moderate grid and reports where the printed
/// conditions and the embedding-derived decision differ.
pub fn endpoint_discrepancy_scan() -> EndpointScan {
    let exps: Vec<Exponent> = ["1", "2", "inf"].iter().map(|s| s.parse().unwrap()).collect();
    let ws: Vec<Rational> = (-1..=1).map(Rational::from_int).collect();
    let mut queries = Vec::new();
    for &tau in &[0.0, 1.0] {
        for &p in &exps {
            for &q in &exps {
                for &p1 in &exps {
                    for &q1 in &exps {
                        for &p2 in &exps {
                            for &q2 in &exps {
                                for &s1 in &ws {
                                    for &t1 in &ws {
                                        for &s2 in &ws {
                                            for &t2 in &ws {
                                                for &s in &ws {
                                                    queries.push(BmwQuery {
                                                        tau,
                                                        p1,
                                                        q1,
                                                        s1,
                                                        t1,
                                                        p2,
                                                        q2,
                                                        s2,
                                                        t2,
                                                        p,
                                                        q,
                                                        s,
                                                        t: s,
                                                        d: 1,
                                                    });
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let checked = queries.len() as u64;
    let discrepancies = endpoint_row_discrepancies(queries);
    let all_boundary = discrepancies
        .iter()
        .all(|d| d.printed && !d.derived && !d.relations.is_empty());
    EndpointScan {
        checked,
        discrepancies,
        all_boundary,
    }
}
