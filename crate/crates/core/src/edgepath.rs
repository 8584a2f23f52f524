//! Edgepaths in the diagram: basic edgepaths from a tangle vertex, their
//! horizontal extensions, truncations, vertical runs and ∞-edges.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{farey_parents, mediant, Fraction};
use crate::diagram::{u_of_fraction, Vertex};
use crate::error::{Error, Result};

/// The last, incomplete edge of a truncated edgepath.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialEdge {
    /// The vertex the edge heads toward, left of the cut.
    pub toward: Fraction,
    /// Covered fraction of the edge, in `[0, 1]`.
    pub length: Fraction,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edgepath {
    pub start: Fraction,
    /// Tangle vertices from `⟨start⟩` leftward; empty for a constant edgepath.
    pub vertices: Vec<Fraction>,
    pub final_partial: Option<PartialEdge>,
    /// Ratio `k/m` of the point on the horizontal edge of `⟨start⟩`.
    pub constant_ratio: Option<Fraction>,
    pub to_infinity: bool,
    /// Signed count of unit vertical edges appended at `u = 0`; positive moves up.
    pub vertical_run: BigInt,
}

impl Edgepath {
    /// A path through `vertices`, which must start at the tangle.
    pub fn through(vertices: Vec<Fraction>) -> Edgepath {
        Edgepath {
            start: vertices[0].clone(),
            vertices,
            final_partial: None,
            constant_ratio: None,
            to_infinity: false,
            vertical_run: BigInt::zero(),
        }
    }

    pub fn constant(start: Fraction, ratio: Fraction) -> Edgepath {
        Edgepath {
            start,
            vertices: Vec::new(),
            final_partial: None,
            constant_ratio: Some(ratio),
            to_infinity: false,
            vertical_run: BigInt::zero(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_ratio.is_some()
    }

    pub fn last_vertex(&self) -> Option<&Fraction> {
        self.vertices.last()
    }

    /// Complete ordinary and vertical edges between consecutive recorded vertices.
    pub fn edges(&self) -> impl Iterator<Item = (&Fraction, &Fraction)> {
        self.vertices.iter().zip(self.vertices.iter().skip(1))
    }

    /// Full vertex sequence including the vertical run and ⟨∞⟩.
    pub fn vertex_sequence(&self) -> Vec<Vertex> {
        if self.is_constant() {
            return vec![Vertex::Circle(self.start.clone())];
        }
        let mut out: Vec<Vertex> = self.vertices.iter().cloned().map(Vertex::Tangle).collect();
        if let Some(last) = self.vertices.last() {
            let step = Fraction::integer(self.vertical_run.signum().try_into().unwrap_or(0));
            let mut z = last.clone();
            let mut k = BigInt::zero();
            while k < self.vertical_run.abs() {
                z = z + &step;
                out.push(Vertex::Tangle(z.clone()));
                k += 1;
            }
        }
        if self.to_infinity {
            out.push(Vertex::Infinity);
        }
        out
    }

    /// Mirror image under `v ↦ −v`.
    pub fn mirror(&self) -> Edgepath {
        Edgepath {
            start: -&self.start,
            vertices: self.vertices.iter().map(|v| -v).collect(),
            final_partial: self
                .final_partial
                .as_ref()
                .map(|p| PartialEdge { toward: -&p.toward, length: p.length.clone() }),
            constant_ratio: self.constant_ratio.clone(),
            to_infinity: self.to_infinity,
            vertical_run: -&self.vertical_run,
        }
    }

    /// Lengths `(l₊, l₋)` of increasing and decreasing non-∞ edges.
    pub fn signed_lengths(&self) -> (Fraction, Fraction) {
        let mut up = Fraction::zero();
        let mut down = Fraction::zero();
        if self.is_constant() {
            return (up, down);
        }
        for (a, b) in self.edges() {
            if b > a {
                up = up + 1;
            } else {
                down = down + 1;
            }
        }
        if let (Some(p), Some(a)) = (&self.final_partial, self.vertices.last()) {
            if &p.toward > a {
                up = up + &p.length;
            } else {
                down = down + &p.length;
            }
        }
        let run = Fraction::from(self.vertical_run.abs());
        if self.vertical_run.is_positive() {
            up = up + run;
        } else {
            down = down + run;
        }
        (up, down)
    }
}

fn fmt_frac_arrow(f: &mut fmt::Formatter<'_>, v: &[Fraction]) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(" -> ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Edgepath {
    /// `1/3 -> 1/2 -> 1 -> inf`, `2/5 -> 1/3 ~(2/3)~> 0`, `1/3 const 2/3`, `1/2 -> 0 | +1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = &self.constant_ratio {
            return write!(f, "{} const {}", self.start, r);
        }
        fmt_frac_arrow(f, &self.vertices)?;
        if let Some(p) = &self.final_partial {
            write!(f, " ~({})~> {}", p.length, p.toward)?;
        }
        if !self.vertical_run.is_zero() {
            let sign = if self.vertical_run.is_positive() { "+" } else { "" };
            write!(f, " | {sign}{}", self.vertical_run)?;
        }
        if self.to_infinity {
            f.write_str(" -> inf")?;
        }
        Ok(())
    }
}

/// Every basic edgepath from `⟨k⟩`: leftward through Farey parents until the
/// first integer, never turning back along a triangle.
pub fn enumerate_basic_edgepaths(k: &Fraction) -> Result<Vec<Edgepath>> {
    if k.is_integer() {
        return Err(Error::IntegralTangle(k.clone()));
    }
    let mut out = Vec::new();
    let mut path = vec![k.clone()];
    extend(&mut path, &mut out)?;
    Ok(out)
}

fn extend(path: &mut Vec<Fraction>, out: &mut Vec<Edgepath>) -> Result<()> {
    let cur = path.last().expect("nonempty").clone();
    if cur.is_integer() {
        out.push(Edgepath::through(path.clone()));
        return Ok(());
    }
    let (lo, hi) = farey_parents(&cur)?;
    for next in [lo, hi] {
        // ⟨prev⟩, ⟨cur⟩, ⟨next⟩ span a triangle exactly when prev is their mediant
        if path.len() >= 2 && path[path.len() - 2] == mediant(&cur, &next) {
            continue;
        }
        path.push(next);
        extend(path, out)?;
        path.pop();
    }
    Ok(())
}

/// `λ̃(u)`: the path's v-coordinate at `u`, constant `K` right of `⟨K⟩`.
pub fn eval_extended(path: &Edgepath, u: &Fraction) -> Result<Fraction> {
    if !u.is_positive() || u >= &Fraction::one() {
        return Err(Error::OutOfRange { u: u.clone(), range: "(0, 1)".into() });
    }
    Ok(eval_on_vertices(&path.vertices, u))
}

// u must lie in [u(last vertex), 1)
pub(crate) fn eval_on_vertices(vertices: &[Fraction], u: &Fraction) -> Fraction {
    let mut ua = u_of_fraction(&vertices[0]);
    if u >= &ua {
        return vertices[0].clone();
    }
    for w in vertices.windows(2) {
        let ub = u_of_fraction(&w[1]);
        if u >= &ub {
            return interpolate(&w[1], &ub, &w[0], &ua, u);
        }
        ua = ub;
    }
    vertices.last().expect("nonempty").clone()
}

// value at u on the segment from (ub, b) to (ua, a)
pub(crate) fn interpolate(b: &Fraction, ub: &Fraction, a: &Fraction, ua: &Fraction, u: &Fraction) -> Fraction {
    b + (a - b) * (u - ub) / (ua - ub)
}

/// `γ(+0)`, the terminal integer of a basic edgepath before any vertical run.
pub fn value_at_zero(path: &Edgepath) -> Result<Fraction> {
    if path.is_constant() {
        return Err(Error::ConstantEdgepath);
    }
    match path.vertices.last() {
        Some(z) if z.is_integer() && path.final_partial.is_none() => Ok(z.clone()),
        _ => Err(Error::InternalAssumption(format!("{path} does not reach u = 0"))),
    }
}

/// Sum of edge lengths. Restricted to `u > 0`, vertical runs and ∞-edges are dropped.
pub fn path_length(path: &Edgepath, restrict_positive_u: bool) -> Fraction {
    if path.is_constant() {
        return Fraction::zero();
    }
    let mut len = Fraction::integer(path.vertices.len().saturating_sub(1) as i64);
    if let Some(p) = &path.final_partial {
        len = len + &p.length;
    }
    if !restrict_positive_u {
        len = len + Fraction::from(path.vertical_run.abs());
        if path.to_infinity {
            len = len + 1;
        }
    }
    len
}

/// Length over `u ≥ 0`: everything except the ∞-edge.
pub fn path_length_nonnegative(path: &Edgepath) -> Fraction {
    let mut len = path_length(path, true);
    if !path.is_constant() {
        len = len + Fraction::from(path.vertical_run.abs());
    }
    len
}

/// `Σ −2σ(e)|e|` over the non-∞ edges of the path.
pub fn twist_of_edgepath(path: &Edgepath) -> Fraction {
    let (up, down) = path.signed_lengths();
    (down - up) * 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn fs(v: &[&str]) -> Vec<Fraction> {
        v.iter().map(|s| f(s)).collect()
    }

    fn vertex_lists(k: &str) -> Vec<Vec<Fraction>> {
        enumerate_basic_edgepaths(&f(k)).unwrap().into_iter().map(|p| p.vertices).collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(vertex_lists("1/2"), vec![fs(&["1/2", "0"]), fs(&["1/2", "1"])]);
        assert_eq!(vertex_lists("1/3"), vec![fs(&["1/3", "0"]), fs(&["1/3", "1/2", "1"])]);
        let mut got = vertex_lists("2/5");
        got.sort();
        let mut want = vec![
            fs(&["2/5", "1/3", "0"]),
            fs(&["2/5", "1/2", "0"]),
            fs(&["2/5", "1/2", "1"]),
        ];
        want.sort();
        assert_eq!(got, want);
        assert!(enumerate_basic_edgepaths(&f("2")).is_err());
    }

    #[test]
    fn evaluation() {
        let a = Edgepath::through(fs(&["1/3", "0"]));
        let b = Edgepath::through(fs(&["1/3", "1/2", "1"]));
        assert_eq!(eval_extended(&a, &f("1/2")).unwrap(), f("1/4"));
        assert_eq!(eval_extended(&a, &f("5/6")).unwrap(), f("1/3"));
        assert_eq!(eval_extended(&b, &f("1/4")).unwrap(), f("3/4"));
        assert!(eval_extended(&a, &f("0")).is_err());
        assert!(eval_extended(&a, &f("1")).is_err());
        assert_eq!(value_at_zero(&a).unwrap(), f("0"));
        assert_eq!(value_at_zero(&b).unwrap(), f("1"));
        assert_eq!(value_at_zero(&Edgepath::through(fs(&["-1/2", "-1"]))).unwrap(), f("-1"));
        assert_eq!(value_at_zero(&Edgepath::constant(f("1/3"), f("1/2"))), Err(Error::ConstantEdgepath));
    }

    #[test]
    fn lengths_and_twists() {
        let mut p = Edgepath::through(fs(&["2/5", "1/3"]));
        p.final_partial = Some(PartialEdge { toward: f("0"), length: f("2/3") });
        assert_eq!(path_length(&p, true), f("5/3"));
        assert_eq!(twist_of_edgepath(&p), f("10/3"));
        assert_eq!(path_length(&Edgepath::constant(f("1/3"), f("1/2")), false), f("0"));
        let b = Edgepath::through(fs(&["1/3", "1/2", "1"]));
        assert_eq!(twist_of_edgepath(&b), f("-4"));
        let mut c = b.clone();
        c.to_infinity = true;
        assert_eq!(twist_of_edgepath(&c), f("-4"));
        assert_eq!(path_length(&c, false), f("3"));
        assert_eq!(path_length(&c, true), f("2"));
        let mut d = Edgepath::through(fs(&["-1/2", "-1"]));
        d.vertical_run = BigInt::from(1);
        assert_eq!(twist_of_edgepath(&d), f("0"));
        assert_eq!(path_length_nonnegative(&d), f("2"));
        assert_eq!(d.to_string(), "-1/2 -> -1 | +1");
        assert_eq!(c.to_string(), "1/3 -> 1/2 -> 1 -> inf");
        assert_eq!(p.to_string(), "2/5 -> 1/3 ~(2/3)~> 0");
        assert_eq!(d.vertex_sequence().last(), Some(&Vertex::Tangle(f("0"))));
    }

    #[test]
    fn mirror_negates_twist() {
        for k in ["1/3", "2/5", "-7/4", "5/9"] {
            let paths = enumerate_basic_edgepaths(&f(k)).unwrap();
            let mirrored = enumerate_basic_edgepaths(&-f(k)).unwrap();
            for p in &paths {
                let m = p.mirror();
                assert!(mirrored.contains(&m));
                assert_eq!(twist_of_edgepath(&m), -twist_of_edgepath(p));
            }
        }
    }
}
