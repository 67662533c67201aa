//! Weighted discrete mixed-norm quasi-norms on finitely supported sequences.

use super::exponent::Exponent;
use super::sequence::{Sequence1D, Sequence2D};
use super::weight::{PowerWeight, Weight1D};
use std::collections::BTreeMap;

/// Which index the inner sum runs over.
///
/// `InnerFirstIndex` is the `l^{p,q}_m` convention (inner sum over the first
/// index `k` with exponent `p`, outer sum over `n` with `q`);
/// `InnerSecondIndex` is `l^{(p,q)}_m` (inner sum over the second index with
/// exponent `q`, outer over the first with `p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NestingOrder {
    InnerFirstIndex,
    InnerSecondIndex,
}

/// A weighted discrete mixed-norm space specification.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpaceSpec {
    pub p: Exponent,
    pub q: Exponent,
    pub weight: PowerWeight,
    pub order: NestingOrder,
}

impl SpaceSpec {
    pub fn new(p: Exponent, q: Exponent, weight: PowerWeight, order: NestingOrder) -> SpaceSpec {
        SpaceSpec { p, q, weight, order }
    }

    pub fn unweighted(p: Exponent, q: Exponent) -> SpaceSpec {
        SpaceSpec::new(p, q, PowerWeight::Constant, NestingOrder::InnerFirstIndex)
    }
}

/// Accumulates an `l^p` (quasi-)norm of nonnegative terms; `p = inf` is a sup.
/// Empty accumulations evaluate to zero.
struct LpAcc {
    p: Option<f64>,
    acc: f64,
}

impl LpAcc {
    fn new(p: &Exponent) -> LpAcc {
        LpAcc {
            p: p.value().map(|_| p.to_f64()),
            acc: 0.0,
        }
    }

    fn push(&mut self, magnitude: f64) {
        match self.p {
            Some(p) => self.acc += magnitude.powf(p),
            None => self.acc = self.acc.max(magnitude),
        }
    }

    fn finish(self) -> f64 {
        match self.p {
            Some(p) => self.acc.powf(1.0 / p),
            None => self.acc,
        }
    }
}

/// Core mixed-norm engine over explicit entries with an arbitrary weight map.
///
/// `inner_exp` applies to the inner index, `outer_exp` to the outer one;
/// `weight` is evaluated at the original `(k, n)` lattice point.
pub fn mixed_norm_entries<I, W>(
    entries: I,
    inner_exp: &Exponent,
    outer_exp: &Exponent,
    weight: W,
    order: NestingOrder,
) -> f64
where
    I: IntoIterator<Item = ((i64, i64), f64)>,
    W: Fn(i64, i64) -> f64,
{
    // Group by outer index; BTreeMap keeps evaluation order deterministic.
    let mut groups: BTreeMap<i64, Vec<(i64, f64)>> = BTreeMap::new();
    for ((k, n), mag) in entries {
        let (outer, inner) = match order {
            NestingOrder::InnerFirstIndex => (n, k),
            NestingOrder::InnerSecondIndex => (k, n),
        };
        groups.entry(outer).or_default().push((inner, mag));
    }
    let mut outer_acc = LpAcc::new(outer_exp);
    for (outer, terms) in groups {
        let mut inner_acc = LpAcc::new(inner_exp);
        for (inner, mag) in terms {
            let (k, n) = match order {
                NestingOrder::InnerFirstIndex => (inner, outer),
                NestingOrder::InnerSecondIndex => (outer, inner),
            };
            inner_acc.push(mag * weight(k, n));
        }
        outer_acc.push(inner_acc.finish());
    }
    outer_acc.finish()
}

/// The weighted mixed-norm quasi-norm of a finitely supported sequence.
///
/// With `order = InnerFirstIndex` this is
/// `( sum_n ( sum_k |a_{k,n}|^p m(k,n)^p )^{q/p} )^{1/q}`,
/// with sups replacing sums at infinite exponents; `InnerSecondIndex` nests
/// the other way with `q` inside.
pub fn mixed_norm(a: &Sequence2D, spec: &SpaceSpec) -> f64 {
    let (inner_exp, outer_exp) = match spec.order {
        NestingOrder::InnerFirstIndex => (&spec.p, &spec.q),
        NestingOrder::InnerSecondIndex => (&spec.q, &spec.p),
    };
    mixed_norm_entries(
        a.iter().map(|(&(k, n), v)| ((k, n), v.norm())),
        inner_exp,
        outer_exp,
        |k, n| spec.weight.eval_lattice(k, n),
        spec.order,
    )
}

/// The weighted `l^p` quasi-norm of a finitely supported 1-d sequence:
/// `( sum_k |b_k|^p <k>^{sp} )^{1/p}`, sup form at `p = inf`.
pub fn sequence_norm_1d(b: &Sequence1D, p: &Exponent, weight: &Weight1D) -> f64 {
    let mut acc = LpAcc::new(p);
    for (&k, v) in b.iter() {
        acc.push(v.norm() * weight.eval_lattice(k));
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use num_complex::Complex64;

    fn exp(s: &str) -> Exponent {
        s.parse().unwrap()
    }

    fn atom(k1: i64, k2: i64) -> Sequence2D {
        Sequence2D::from_entries([((k1, k2), Complex64::new(1.0, 0.0))])
    }

    #[test]
    fn single_atom_l22_is_one() {
        let spec = SpaceSpec::unweighted(exp("2"), exp("2"));
        assert_eq!(mixed_norm(&atom(0, 0), &spec), 1.0);
    }

    #[test]
    fn inner_l1_outer_sup() {
        // Four ones in the row n = 0: inner l^1 sum is 4, outer sup picks it.
        let a = Sequence2D::from_entries((0..4).map(|k| ((k, 0), Complex64::new(1.0, 0.0))));
        let spec = SpaceSpec::unweighted(exp("1"), exp("inf"));
        assert_eq!(mixed_norm(&a, &spec), 4.0);
    }

    #[test]
    fn weighted_atom_matches_hand_evaluation() {
        // Atom at (1,2) in l^{1,1} with weight <k>^1 <n>^1: norm = sqrt(2)*sqrt(5).
        let spec = SpaceSpec::new(
            exp("1"),
            exp("1"),
            PowerWeight::separable(Rational::ONE, Rational::ONE),
            NestingOrder::InnerFirstIndex,
        );
        let v = mixed_norm(&atom(1, 2), &spec);
        assert!((v - 2f64.sqrt() * 5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn both_infinite_is_weighted_sup() {
        let a = Sequence2D::from_entries([
            ((0, 0), Complex64::new(1.0, 0.0)),
            ((3, 4), Complex64::new(0.5, 0.0)),
        ]);
        let spec = SpaceSpec::new(
            exp("inf"),
            exp("inf"),
            PowerWeight::radial(Rational::from_int(1)),
            NestingOrder::InnerFirstIndex,
        );
        // sup of |a| * <(k,n)>: max(1*1, 0.5*sqrt(26)).
        let expected = (0.5 * 26f64.sqrt()).max(1.0);
        assert!((mixed_norm(&a, &spec) - expected).abs() < 1e-14);
    }

    #[test]
    fn order_consistency_at_equal_exponents() {
        let a = Sequence2D::from_entries([
            ((0, 1), Complex64::new(0.3, 0.1)),
            ((2, -1), Complex64::new(-1.5, 2.0)),
            ((2, 3), Complex64::new(0.0, 0.7)),
        ]);
        for pstr in ["1/2", "1", "3/2", "inf"] {
            let p = exp(pstr);
            let w = PowerWeight::separable(Rational::new(1, 2), Rational::new(-1, 2));
            let first = SpaceSpec::new(p, p, w, NestingOrder::InnerFirstIndex);
            let second = SpaceSpec::new(p, p, w, NestingOrder::InnerSecondIndex);
            let (a1, a2) = (mixed_norm(&a, &first), mixed_norm(&a, &second));
            assert!((a1 - a2).abs() <= 1e-12 * a1.max(1.0), "p={pstr}: {a1} vs {a2}");
        }
    }

    #[test]
    fn sequence_norm_1d_examples() {
        let b = Sequence1D::from_entries([(0, Complex64::new(1.0, 0.0))]);
        for (p, s) in [("1", 0), ("2", 3), ("inf", -2)] {
            let w = Weight1D::new(Rational::from_int(s));
            assert_eq!(sequence_norm_1d(&b, &exp(p), &w), 1.0);
        }
        let b2 = Sequence1D::from_entries([
            (0, Complex64::new(1.0, 0.0)),
            (1, Complex64::new(1.0, 0.0)),
        ]);
        let w0 = Weight1D::new(Rational::ZERO);
        assert!((sequence_norm_1d(&b2, &exp("2"), &w0) - 2f64.sqrt()).abs() < 1e-15);
        // Atom at 2 with p = inf, s = -1: <2>^{-1} = 5^{-1/2}.
        let b3 = Sequence1D::from_entries([(2, Complex64::new(1.0, 0.0))]);
        let wm1 = Weight1D::new(Rational::from_int(-1));
        assert!((sequence_norm_1d(&b3, &exp("inf"), &wm1) - 1.0 / 5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn zero_sequence_has_zero_norm() {
        let spec = SpaceSpec::unweighted(exp("1/2"), exp("inf"));
        assert_eq!(mixed_norm(&Sequence2D::new(), &spec), 0.0);
    }
}
