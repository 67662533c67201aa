//! Sharp conditions for weighted `l^p` embeddings on `Z^d`.

use crate::rational::Rational;
use crate::spaces::Exponent;

fn line(q: &Exponent, s: Rational, d: u32) -> Rational {
    q.reciprocal() + s / Rational::from_int(d as i64)
}

/// Whether `l^{q1}_{v_{s1}}(Z^d)` embeds into `l^{q2}_{v_{s2}}(Z^d)`:
/// either `s2 <= s1` with `1/q2 + s2/d < 1/q1 + s1/d` strictly, or the two
/// spaces coincide. Valid for every positive exponent.
pub fn decide_embedding(q1: &Exponent, s1: Rational, q2: &Exponent, s2: Rational, d: u32) -> bool {
    (s2 <= s1 && line(q2, s2, d) < line(q1, s1, d)) || (s2 == s1 && q2 == q1)
}

/// Whether `l^{p1,q1}(Z^{2d})` embeds into the reversed-nesting space
/// `l^{(q,p)}_{v_{s,t}}(Z^{2d})`: equivalent to the conjunction of the three
/// separated embeddings obtained from axis- and diagonal-supported sequences.
pub fn decide_lqp_embedding(
    p1: &Exponent,
    q1: &Exponent,
    s: Rational,
    t: Rational,
    q: &Exponent,
    p: &Exponent,
    d: u32,
) -> bool {
    decide_embedding(p1, Rational::ZERO, q, s, d)
        && decide_embedding(q1, Rational::ZERO, p, t, d)
        && decide_embedding(q1, Rational::ZERO, q, s + t, d)
}
