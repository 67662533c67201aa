//! Power weights on the phase-space lattice and their transforms.

use crate::rational::Rational;
use serde::{Deserialize, Serialize};

/// Japanese bracket `<z> = (1 + |z|^2)^{1/2}` for a scalar coordinate.
pub fn bracket(z: f64) -> f64 {
    (1.0 + z * z).sqrt()
}

/// A power weight on pairs `(z1, z2)`.
///
/// `Separable(s, t)` is `<z1>^s <z2>^t`, `Radial(s)` is `<z>^s` with
/// `<z>^2 = 1 + |z1|^2 + |z2|^2`, and `Constant` is identically one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PowerWeight {
    Constant,
    Radial { s: Rational },
    Separable { s: Rational, t: Rational },
}

impl PowerWeight {
    pub fn separable(s: Rational, t: Rational) -> PowerWeight {
        PowerWeight::Separable { s, t }
    }

    pub fn radial(s: Rational) -> PowerWeight {
        PowerWeight::Radial { s }
    }

    /// Evaluates the weight at real coordinates.
    pub fn eval(&self, z1: f64, z2: f64) -> f64 {
        match self {
            PowerWeight::Constant => 1.0,
            PowerWeight::Radial { s } => {
                (1.0 + z1 * z1 + z2 * z2).powf(0.5 * s.to_f64())
            }
            PowerWeight::Separable { s, t } => {
                bracket(z1).powf(s.to_f64()) * bracket(z2).powf(t.to_f64())
            }
        }
    }

    /// Evaluates the weight at a lattice point.
    pub fn eval_lattice(&self, k: i64, n: i64) -> f64 {
        self.eval(k as f64, n as f64)
    }

    /// The involution `(Im)(z) = m(-z)`. Power weights are even, so this is
    /// the identity; it exists so call sites can mirror the formulas.
    pub fn involution(&self) -> PowerWeight {
        *self
    }

    /// The symplectic rotation `m_J(z1, z2) = m(z2, -z1)`.
    pub fn rotated_j(&self) -> PowerWeight {
        match self {
            PowerWeight::Separable { s, t } => PowerWeight::Separable { s: *t, t: *s },
            other => *other,
        }
    }

    /// The restriction `m_alpha(z1) = m(z1, 0)`.
    pub fn restrict_alpha(&self) -> Weight1D {
        match self {
            PowerWeight::Constant => Weight1D::new(Rational::ZERO),
            PowerWeight::Radial { s } => Weight1D::new(*s),
            PowerWeight::Separable { s, .. } => Weight1D::new(*s),
        }
    }

    /// The restriction `m_beta(z2) = m(0, z2)`.
    pub fn restrict_beta(&self) -> Weight1D {
        match self {
            PowerWeight::Constant => Weight1D::new(Rational::ZERO),
            PowerWeight::Radial { s } => Weight1D::new(*s),
            PowerWeight::Separable { t, .. } => Weight1D::new(*t),
        }
    }
}

/// A one-dimensional power weight `<k>^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight1D {
    pub s: Rational,
}

impl Weight1D {
    pub fn new(s: Rational) -> Weight1D {
        Weight1D { s }
    }

    pub fn eval(&self, k: f64) -> f64 {
        bracket(k).powf(self.s.to_f64())
    }

    pub fn eval_lattice(&self, k: i64) -> f64 {
        self.eval(k as f64)
    }
}

/// Which weight transform to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightTransform {
    Involution,
    JRotation,
    AlphaRestriction,
    BetaRestriction,
}

/// Result of [`weight_transform`]: restrictions drop to one dimension.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TransformedWeight {
    TwoD(PowerWeight),
    OneD(Weight1D),
}

/// Applies one of the closed-form weight transforms.
pub fn weight_transform(m: &PowerWeight, which: WeightTransform) -> TransformedWeight {
    match which {
        WeightTransform::Involution => TransformedWeight::TwoD(m.involution()),
        WeightTransform::JRotation => TransformedWeight::TwoD(m.rotated_j()),
        WeightTransform::AlphaRestriction => TransformedWeight::OneD(m.restrict_alpha()),
        WeightTransform::BetaRestriction => TransformedWeight::OneD(m.restrict_beta()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn separable_matches_defining_formula() {
        let m = PowerWeight::separable(rat(1, 1), rat(1, 1));
        // <1> * <2> = sqrt(2) * sqrt(5)
        let v = m.eval_lattice(1, 2);
        assert!((v - 2f64.sqrt() * 5f64.sqrt()).abs() < 1e-14);
        assert!(m.eval(0.0, 0.0) == 1.0);
    }

    #[test]
    fn rotation_swaps_separable_orders() {
        let m = PowerWeight::separable(rat(1, 1), rat(2, 1));
        assert_eq!(m.rotated_j(), PowerWeight::separable(rat(2, 1), rat(1, 1)));
        // Pointwise: m_J(z1, z2) = m(z2, -z1).
        for (z1, z2) in [(0.3, -1.7), (2.0, 5.0), (-4.0, 0.0)] {
            assert!((m.rotated_j().eval(z1, z2) - m.eval(z2, -z1)).abs() < 1e-12);
        }
        // Four rotations are the identity on the separable family.
        let mut w = m;
        for _ in 0..4 {
            w = w.rotated_j();
        }
        assert_eq!(w, m);
    }

    #[test]
    fn involution_is_identity_pointwise() {
        for m in [
            PowerWeight::Constant,
            PowerWeight::radial(rat(-3, 2)),
            PowerWeight::separable(rat(1, 1), rat(-2, 1)),
        ] {
            for (z1, z2) in [(1.0, 2.0), (-0.5, 3.25)] {
                assert!((m.involution().eval(-z1, -z2) - m.eval(z1, z2)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn restrictions() {
        let m = PowerWeight::separable(rat(3, 1), rat(5, 1));
        // <0>^t = 1, so the alpha restriction keeps only <k>^s.
        assert_eq!(m.restrict_alpha(), Weight1D::new(rat(3, 1)));
        assert_eq!(m.restrict_beta(), Weight1D::new(rat(5, 1)));
        let r = PowerWeight::radial(rat(2, 1));
        assert_eq!(r.restrict_alpha(), Weight1D::new(rat(2, 1)));
        for k in [-3i64, 0, 7] {
            assert!((r.restrict_alpha().eval_lattice(k) - r.eval_lattice(k, 0)).abs() < 1e-12);
        }
    }

    #[test]
    fn radial_is_rotation_invariant() {
        let m = PowerWeight::radial(rat(-1, 1));
        for (z1, z2) in [(1.0, 2.0), (3.5, -0.25)] {
            assert!((m.rotated_j().eval(z1, z2) - m.eval(z1, z2)).abs() < 1e-15);
        }
    }
}
