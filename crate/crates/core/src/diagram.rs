//! The diagram 𝒟 in the uv-plane: vertices, edges, curve-system coordinates,
//! edge signs and partial-edge lengths.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::Fraction;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Vertex {
    /// ⟨p/q⟩
    Tangle(Fraction),
    /// ∘⟨p/q⟩
    Circle(Fraction),
    /// ⟨∞⟩
    Infinity,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Tangle(x) => write!(f, "<{x}>"),
            Vertex::Circle(x) => write!(f, "o<{x}>"),
            Vertex::Infinity => write!(f, "<inf>"),
        }
    }
}

/// `(q − 1)/q` for the denominator of `f`.
pub fn u_of_fraction(f: &Fraction) -> Fraction {
    Fraction::one() - f.denom_fraction().recip()
}

pub fn uv_of(v: &Vertex) -> (Fraction, Fraction) {
    match v {
        Vertex::Tangle(x) => (u_of_fraction(x), x.clone()),
        Vertex::Circle(x) => (Fraction::one(), x.clone()),
        Vertex::Infinity => (Fraction::integer(-1), Fraction::zero()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeKind {
    Ordinary,
    Vertical,
    Infinity,
    Horizontal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: Vertex,
    pub to: Vertex,
    pub kind: EdgeKind,
    /// Fraction of the edge actually covered, 1 for a complete edge.
    pub completeness: Fraction,
}

impl Edge {
    /// A complete edge, classified by its endpoints.
    pub fn new(from: Vertex, to: Vertex) -> Result<Edge> {
        let kind = classify(&from, &to)?;
        Ok(Edge { from, to, kind, completeness: Fraction::one() })
    }

    /// The part of the edge from `from` covering `completeness` of its length.
    pub fn partial(from: Vertex, to: Vertex, completeness: Fraction) -> Result<Edge> {
        let mut e = Edge::new(from, to)?;
        if completeness.is_negative() || completeness > Fraction::one() {
            return Err(Error::OutOfRange { u: completeness, range: "[0, 1]".into() });
        }
        e.completeness = completeness;
        Ok(e)
    }
}

fn classify(a: &Vertex, b: &Vertex) -> Result<EdgeKind> {
    use Vertex::*;
    match (a, b) {
        (Tangle(x), Circle(y)) | (Circle(y), Tangle(x)) if x == y => Ok(EdgeKind::Horizontal),
        (Infinity, Tangle(z)) | (Tangle(z), Infinity) if z.is_integer() => Ok(EdgeKind::Infinity),
        (Tangle(x), Tangle(y)) if x.is_farey_neighbour(y) => {
            if x.is_integer() && y.is_integer() {
                Ok(EdgeKind::Vertical)
            } else {
                Ok(EdgeKind::Ordinary)
            }
        }
        (Tangle(x), Tangle(y)) => Err(Error::NotAdjacent(x.clone(), y.clone())),
        _ => Err(Error::InternalAssumption(format!("no edge of the diagram joins {a} and {b}"))),
    }
}

/// Sign σ of the edge traversed from ⟨r/s⟩ to ⟨p/q⟩: +1 when v increases.
///
/// For ordinary edges the traversal is leftward (`s > q`); for vertical edges
/// either direction is allowed and the same formula applies.
pub fn edge_sign(pq: &Fraction, rs: &Fraction) -> Result<i32> {
    if !pq.is_farey_neighbour(rs) {
        return Err(Error::NotAdjacent(pq.clone(), rs.clone()));
    }
    Ok(if pq.cross(rs) > BigInt::zero() { 1 } else { -1 })
}

/// Length `|e|` of the part of the edge ⟨p/q⟩–⟨r/s⟩ (`s > q`) lying right of `u0`.
pub fn partial_edge_length(q: &BigInt, s: &BigInt, u0: &Fraction) -> Result<Fraction> {
    if !(q >= &BigInt::one() && s > q) {
        return Err(Error::InternalAssumption(format!(
            "edge denominators must satisfy s > q >= 1, got q = {q}, s = {s}"
        )));
    }
    edge_length(&Fraction::from(q.clone()), &Fraction::from(s.clone()), u0)
}

pub(crate) fn edge_length(q: &Fraction, s: &Fraction, u0: &Fraction) -> Result<Fraction> {
    let lo = Fraction::one() - q.recip();
    let hi = Fraction::one() - s.recip();
    if u0 < &lo || u0 > &hi {
        return Err(Error::OutOfRange { u: u0.clone(), range: format!("[{lo}, {hi}]") });
    }
    let t = u0 - 1;
    Ok((s * &t + 1) / ((s - q) * &t))
}

/// Curve-system coordinates `(a, b, c)` plus the count `d` of ∞-tangles.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CurveSystemCoords {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl CurveSystemCoords {
    /// `(u, v) = (b/(a+b), c/(a+b))`.
    pub fn projection(&self) -> Result<(Fraction, Fraction)> {
        let n = &self.a + &self.b;
        Ok((Fraction::new(self.b.clone(), n.clone())?, Fraction::new(self.c.clone(), n)?))
    }

    pub fn scaled(&self, k: &BigInt) -> CurveSystemCoords {
        CurveSystemCoords { a: &self.a * k, b: &self.b * k, c: &self.c * k, d: &self.d * k }
    }
}

impl Add for CurveSystemCoords {
    type Output = CurveSystemCoords;
    fn add(self, o: CurveSystemCoords) -> CurveSystemCoords {
        CurveSystemCoords { a: self.a + o.a, b: self.b + o.b, c: self.c + o.c, d: self.d + o.d }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Tangle,
    Circle,
}

/// Tangle ⟨p/q⟩ ↦ (1, q−1, p, 0); circle ∘⟨p/q⟩ ↦ (0, q, p, 0).
pub fn abc_of(kind: CurveKind, f: &Fraction) -> CurveSystemCoords {
    let (p, q) = (f.numer(), f.denom());
    match kind {
        CurveKind::Tangle => {
            CurveSystemCoords { a: BigInt::one(), b: q - 1, c: p, d: BigInt::zero() }
        }
        CurveKind::Circle => CurveSystemCoords { a: BigInt::zero(), b: q, c: p, d: BigInt::zero() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn coordinates() {
        assert_eq!(uv_of(&Vertex::Tangle(f("1/3"))), (f("2/3"), f("1/3")));
        assert_eq!(uv_of(&Vertex::Circle(f("1/2"))), (f("1"), f("1/2")));
        assert_eq!(uv_of(&Vertex::Infinity), (f("-1"), f("0")));
        let t = abc_of(CurveKind::Tangle, &f("1/3"));
        assert_eq!((t.a.clone(), t.b.clone(), t.c.clone(), t.d.clone()), (big(1), big(2), big(1), big(0)));
        let c = abc_of(CurveKind::Circle, &f("1/2"));
        assert_eq!((c.a, c.b, c.c), (big(0), big(2), big(1)));
        let z = abc_of(CurveKind::Tangle, &f("0"));
        assert_eq!((z.a, z.b, z.c), (big(1), big(0), big(0)));
    }

    #[test]
    fn projection_matches_uv() {
        for s in ["1/3", "-2/5", "7/4", "0", "3"] {
            let x = f(s);
            assert_eq!(abc_of(CurveKind::Tangle, &x).projection().unwrap(), uv_of(&Vertex::Tangle(x)));
        }
        let mix = abc_of(CurveKind::Tangle, &f("1/2")).scaled(&big(2)) + abc_of(CurveKind::Tangle, &f("0"));
        assert_eq!(mix.projection().unwrap(), (f("2/5"), f("2/5")));
    }

    #[test]
    fn signs() {
        assert_eq!(edge_sign(&f("1/2"), &f("1/3")).unwrap(), 1);
        assert_eq!(edge_sign(&f("0"), &f("1/3")).unwrap(), -1);
        assert_eq!(edge_sign(&f("-1"), &f("-1/2")).unwrap(), -1);
        assert_eq!(edge_sign(&f("3"), &f("2")).unwrap(), 1);
        assert!(matches!(edge_sign(&f("1/5"), &f("1/2")), Err(Error::NotAdjacent(..))));
    }

    #[test]
    fn lengths() {
        assert_eq!(partial_edge_length(&big(1), &big(3), &f("2/5")).unwrap(), f("2/3"));
        assert_eq!(partial_edge_length(&big(1), &big(2), &f("2/5")).unwrap(), f("1/3"));
        assert_eq!(partial_edge_length(&big(2), &big(5), &f("4/5")).unwrap(), f("0"));
        assert_eq!(partial_edge_length(&big(2), &big(5), &f("1/2")).unwrap(), f("1"));
        assert!(partial_edge_length(&big(2), &big(5), &f("1/3")).is_err());
        assert!(partial_edge_length(&big(3), &big(3), &f("2/3")).is_err());
    }

    #[test]
    fn edge_kinds() {
        let t = |s: &str| Vertex::Tangle(f(s));
        assert_eq!(Edge::new(t("1/3"), t("1/2")).unwrap().kind, EdgeKind::Ordinary);
        assert_eq!(Edge::new(t("1"), t("2")).unwrap().kind, EdgeKind::Vertical);
        assert_eq!(Edge::new(t("0"), Vertex::Infinity).unwrap().kind, EdgeKind::Infinity);
        assert_eq!(
            Edge::new(t("1/3"), Vertex::Circle(f("1/3"))).unwrap().kind,
            EdgeKind::Horizontal
        );
        assert!(Edge::new(t("1/3"), t("2/3")).is_err());
        assert!(Edge::partial(t("1/3"), t("0"), f("3/2")).is_err());
    }
}
