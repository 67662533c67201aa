//! Sharp conditions for weighted discrete convolution inclusions
//! `l^{q1}_{s1} * l^{q2}_{s2}  into  l^q_s` on `Z^d`.
//!
//! Within the Banach range `q, q1, q2 in [1, inf]` the inclusion holds iff
//! one of four exact exponent conditions `A1..A4` does; outside that range
//! only the unweighted case is sharply decided, plus a sufficient branch for
//! the `(|s|, s) -> s` weight pattern. Out-of-hypothesis weighted
//! quasi-Banach queries are reported as such, never guessed.

use super::{BasisCheck, ConvQuery, Outcome, Verdict};
use crate::rational::Rational;
use crate::spaces::Exponent;

/// `1/q + s/d`, the quantity every condition is built from.
fn line(q: &Exponent, s: Rational, d: u32) -> Rational {
    q.reciprocal() + s / Rational::from_int(d as i64)
}

fn pos(v: Rational) -> Rational {
    v.max(Rational::ZERO)
}

/// Evaluates the four sharp conditions. Only meaningful when
/// `q, q1, q2` all lie in `[1, inf]`.
pub fn a_conditions(cq: &ConvQuery) -> [bool; 4] {
    let one = Rational::ONE;
    let l = line(&cq.q, cq.s, cq.d);
    let l1 = line(&cq.q1, cq.s1, cq.d);
    let l2 = line(&cq.q2, cq.s2, cq.d);
    let s_below = cq.s <= cq.s1 && cq.s <= cq.s2;
    let sum_nonneg = !(cq.s1 + cq.s2).is_negative();

    let a1 = {
        let strict = one + pos(l) < pos(l1) + pos(l2);
        let dominated = l <= l1 && l <= l2 && one <= l1 + l2;
        let eq1 = l != l1 || (cq.q == cq.q1 && cq.s == cq.s1);
        let eq2 = l != l2 || (cq.q == cq.q2 && cq.s == cq.s2);
        let eq12 = l1 + l2 != one
            || (cq.q1.conjugate() == Some(cq.q2) && -cq.s1 == cq.s2);
        s_below && sum_nonneg && strict && dominated && eq1 && eq2 && eq12
    };

    let a2 = {
        let zero_weights = cq.s.is_zero() && cq.s1.is_zero() && cq.s2.is_zero();
        zero_weights
            && ((cq.q == cq.q1 && cq.q2 == Exponent::ONE)
                || (cq.q == cq.q2 && cq.q1 == Exponent::ONE)
                || (cq.q.is_infinite()
                    && cq.q1.reciprocal() + cq.q2.reciprocal() == one))
    };

    let a3 = s_below
        && cq.q1.reciprocal() + cq.q2.reciprocal() == one
        && (cq.s1 + cq.s2).is_zero()
        && l.is_negative()
        && !l1.is_negative()
        && !l2.is_negative();

    let a4 = {
        let balance = one + l == l1 + l2 && cq.q.reciprocal() <= cq.q1.reciprocal() + cq.q2.reciprocal();
        let strict = l < l1 && l < l2 && l.is_positive();
        let edge = if cq.s == cq.s1 || cq.s == cq.s2 {
            !cq.q.is_infinite() && cq.q1 != Exponent::ONE && cq.q2 != Exponent::ONE
        } else {
            true
        };
        s_below && sum_nonneg && balance && strict && edge
    };

    [a1, a2, a3, a4]
}

/// The unweighted convolution condition, valid for all exponents in `(0, inf]`:
/// `1 + 1/q <= 1/q1 + 1/q2`, `1/q <= 1/q1`, `1/q <= 1/q2`.
pub fn unweighted_convolution_holds(q: &Exponent, q1: &Exponent, q2: &Exponent) -> bool {
    Rational::ONE + q.reciprocal() <= q1.reciprocal() + q2.reciprocal()
        && q.reciprocal() <= q1.reciprocal()
        && q.reciprocal() <= q2.reciprocal()
}

fn unweighted_basis(q: &Exponent, q1: &Exponent, q2: &Exponent) -> Vec<BasisCheck> {
    vec![
        BasisCheck::new(
            "1 + 1/q <= 1/q1 + 1/q2",
            Rational::ONE + q.reciprocal() <= q1.reciprocal() + q2.reciprocal(),
        ),
        BasisCheck::new("1/q <= 1/q1", q.reciprocal() <= q1.reciprocal()),
        BasisCheck::new("1/q <= 1/q2", q.reciprocal() <= q2.reciprocal()),
    ]
}

/// Decides the unweighted inclusion `l^{q1} * l^{q2} into l^q`, valid over
/// the full quasi-Banach range.
pub fn decide_unweighted_convolution(q: &Exponent, q1: &Exponent, q2: &Exponent) -> Verdict {
    let basis = unweighted_basis(q, q1, q2);
    if unweighted_convolution_holds(q, q1, q2) {
        Verdict::new(Outcome::BoundedSharp, basis, None, "unweighted-convolution-sharp")
    } else {
        Verdict::new(
            Outcome::Unbounded,
            basis,
            Some("an unweighted convolution condition fails".into()),
            "unweighted-convolution-sharp",
        )
    }
}

fn in_banach_range(cq: &ConvQuery) -> bool {
    cq.q >= Exponent::ONE && cq.q1 >= Exponent::ONE && cq.q2 >= Exponent::ONE
}

/// Whether the weights follow the sufficient pattern
/// `l^{q1}_{|s|} * l^{q2}_{s} into l^q_s` (in either source order).
fn abs_weight_pattern(cq: &ConvQuery) -> bool {
    (cq.s1 == cq.s.abs() && cq.s2 == cq.s) || (cq.s2 == cq.s.abs() && cq.s1 == cq.s)
}

/// Decides a weighted convolution inclusion.
///
/// * Banach exponents: sharp, via the `A1..A4` conditions.
/// * All weights zero: sharp for every positive exponent.
/// * The `(|s|, s) -> s` pattern with the unweighted condition: bounded,
///   sufficient-only.
/// * Anything else outside the Banach range: out of scope.
pub fn decide_weighted_convolution(cq: &ConvQuery) -> Verdict {
    let zero_weights = cq.s.is_zero() && cq.s1.is_zero() && cq.s2.is_zero();
    if in_banach_range(cq) {
        let a = a_conditions(cq);
        let basis = vec![
            BasisCheck::new("A1", a[0]),
            BasisCheck::new("A2", a[1]),
            BasisCheck::new("A3", a[2]),
            BasisCheck::new("A4", a[3]),
        ];
        let any = a.iter().any(|&b| b);
        if zero_weights {
            // Internal cross-check: on zero weights the sharp conditions must
            // collapse to the unweighted ones.
            assert_eq!(
                any,
                unweighted_convolution_holds(&cq.q, &cq.q1, &cq.q2),
                "zero-weight A-conditions disagree with the unweighted test at {cq:?}"
            );
        }
        return if any {
            Verdict::new(Outcome::BoundedSharp, basis, None, "weighted-convolution-sharp-conditions")
        } else {
            Verdict::new(
                Outcome::Unbounded,
                basis,
                Some("none of A1..A4 holds".into()),
                "weighted-convolution-sharp-conditions",
            )
        };
    }
    if zero_weights {
        return decide_unweighted_convolution(&cq.q, &cq.q1, &cq.q2);
    }
    if abs_weight_pattern(cq) {
        let mut basis = unweighted_basis(&cq.q, &cq.q1, &cq.q2);
        basis.push(BasisCheck::new("weights follow (|s|, s) -> s", true));
        if unweighted_convolution_holds(&cq.q, &cq.q1, &cq.q2) {
            return Verdict::new(
                Outcome::BoundedSufficient,
                basis,
                None,
                "abs-weight-convolution-sufficient",
            );
        }
        return Verdict::new(
            Outcome::OutOfScope,
            basis,
            Some("sufficient branch inconclusive: unweighted condition fails".into()),
            "abs-weight-convolution-sufficient",
        );
    }
    Verdict::new(
        Outcome::OutOfScope,
        vec![BasisCheck::new("exponents within [1, inf]", false)],
        Some("weighted quasi-Banach convolution is outside the decidable range".into()),
        "weighted-convolution-sharp-conditions",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp(s: &str) -> Exponent {
        s.parse().unwrap()
    }

    fn rat(s: i64) -> Rational {
        Rational::from_int(s)
    }

    fn query(q: &str, q1: &str, q2: &str, s: i64, s1: i64, s2: i64, d: u32) -> ConvQuery {
        ConvQuery {
            q: exp(q),
            q1: exp(q1),
            q2: exp(q2),
            s: rat(s),
            s1: rat(s1),
            s2: rat(s2),
            d,
        }
    }

    #[test]
    fn young_l1_into_l1() {
        let v = decide_weighted_convolution(&query("1", "1", "1", 0, 0, 0, 1));
        assert_eq!(v.outcome, Outcome::BoundedSharp);
        // A2 with q = q1, q2 = 1.
        assert!(v.basis.iter().any(|c| c.condition == "A2" && c.holds));
    }

    #[test]
    fn dual_pair_into_sup() {
        let v = decide_weighted_convolution(&query("inf", "2", "2", 0, 0, 0, 1));
        assert_eq!(v.outcome, Outcome::BoundedSharp);
        assert!(v.basis.iter().any(|c| c.condition == "A2" && c.holds));
    }

    #[test]
    fn weighted_sup_target_via_a1() {
        let v = decide_weighted_convolution(&query("inf", "inf", "inf", 0, 1, 1, 1));
        assert_eq!(v.outcome, Outcome::BoundedSharp);
        assert!(v.basis.iter().any(|c| c.condition == "A1" && c.holds));
    }

    #[test]
    fn l2_pair_into_l1_fails() {
        let v = decide_weighted_convolution(&query("1", "2", "2", 0, 0, 0, 1));
        assert_eq!(v.outcome, Outcome::Unbounded);
        assert!(v.basis.iter().all(|c| !c.holds));
    }

    #[test]
    fn unweighted_quasi_banach() {
        assert_eq!(
            decide_unweighted_convolution(&exp("1"), &exp("1"), &exp("1")).outcome,
            Outcome::BoundedSharp
        );
        // 1 + 0 <= 2/3 + 1/3.
        assert_eq!(
            decide_unweighted_convolution(&exp("inf"), &exp("3/2"), &exp("3")).outcome,
            Outcome::BoundedSharp
        );
        // 1/2 <= 0 fails.
        assert_eq!(
            decide_unweighted_convolution(&exp("2"), &exp("1/2"), &exp("inf")).outcome,
            Outcome::Unbounded
        );
    }

    #[test]
    fn quasi_banach_routing() {
        // All weights zero: routed to the unweighted sharp test.
        let v = decide_weighted_convolution(&query("1", "1/2", "1", 0, 0, 0, 1));
        assert_eq!(v.outcome, Outcome::BoundedSharp);
        assert_eq!(v.theorem, "unweighted-convolution-sharp");
        // |s|-pattern: bounded but sufficient-only.
        let v = decide_weighted_convolution(&query("1", "1/2", "1", -1, 1, -1, 1));
        assert_eq!(v.outcome, Outcome::BoundedSufficient);
        // |s|-pattern with a failing unweighted condition: inconclusive.
        let v = decide_weighted_convolution(&query("1/2", "1", "1/2", -1, 1, -1, 1));
        assert_eq!(v.outcome, Outcome::OutOfScope);
        // Generic weighted quasi-Banach query: out of scope.
        let v = decide_weighted_convolution(&query("1", "1/2", "1", 2, 1, 0, 1));
        assert_eq!(v.outcome, Outcome::OutOfScope);
    }

    #[test]
    fn equality_side_conditions_fire() {
        // q = inf, s = 0 target with a zero-line source: l1 = 0 forces
        // (q1, s1) = (inf, 0); here q1 = 2, s1 = -1/2 gives l1 = 0 with d = 1.
        let cq = ConvQuery {
            q: exp("inf"),
            q1: exp("2"),
            q2: exp("1"),
            s: Rational::ZERO,
            s1: Rational::new(-1, 2),
            s2: Rational::from_int(2),
            d: 1,
        };
        let a = a_conditions(&cq);
        assert!(!a[0], "A1 must reject the unmatched equality pair");
        // Restoring the pair (q1, s1) = (inf, 0) satisfies A1:
        // lines are l = 0, l1 = 0, l2 = 3; the first equality pair matches.
        let cq2 = ConvQuery {
            q: exp("inf"),
            q1: exp("inf"),
            q2: exp("1"),
            s: Rational::ZERO,
            s1: Rational::ZERO,
            s2: Rational::from_int(2),
            d: 1,
        };
        assert!(a_conditions(&cq2)[0]);
    }

    #[test]
    fn sj_class_special_case_matches_a_conditions() {
        // Independent form of the sharp conditions for the target l^inf:
        // either s1 = s2 = 0 with 1/q1 + 1/q2 = 1, or
        // 0 <= s1, s2; 1 < l1 + l2; with (q_i, s_i) = (inf, 0) forced when
        // l_i = 0. Cross-check the A-disjunction against it on a grid.
        let exps = ["1", "4/3", "2", "4", "inf"];
        let weights = [-2i64, -1, 0, 1, 2];
        for d in [1u32, 2] {
            for q1 in exps {
                for q2 in exps {
                    for s1 in weights {
                        for s2 in weights {
                            let cq = query("inf", q1, q2, 0, s1, s2, d);
                            let l1 = line(&cq.q1, cq.s1, d);
                            let l2 = line(&cq.q2, cq.s2, d);
                            let first = s1 == 0
                                && s2 == 0
                                && cq.q1.reciprocal() + cq.q2.reciprocal() == Rational::ONE;
                            let second = s1 >= 0
                                && s2 >= 0
                                && Rational::ONE < l1 + l2
                                && (!l1.is_zero() || (cq.q1.is_infinite() && s1 == 0))
                                && (!l2.is_zero() || (cq.q2.is_infinite() && s2 == 0));
                            let expected = first || second;
                            let got = a_conditions(&cq).iter().any(|&b| b);
                            assert_eq!(
                                got, expected,
                                "target l^inf mismatch at q1={q1} q2={q2} s1={s1} s2={s2} d={d}"
                            );
                        }
                    }
                }
            }
        }
    }
}
