//! Candidate edgepath systems of types I, II and III, and simplification.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{mediant, Fraction, TangleList};
use crate::diagram::{edge_length, u_of_fraction};
use crate::edgepath::{enumerate_basic_edgepaths, eval_on_vertices, interpolate, value_at_zero, Edgepath, PartialEdge};
use crate::error::{Error, Result};
use crate::invariants::EvaluatedCandidate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CandidateKind {
    I,
    II,
    III,
}

impl fmt::Display for CandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CandidateKind::I => "I",
            CandidateKind::II => "II",
            CandidateKind::III => "III",
        })
    }
}

/// A zero of `Σ λ̃_i(u)` on `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Root {
    Point(Fraction),
    /// The sum vanishes identically on this closed interval.
    Interval(Fraction, Fraction),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CandidateSystem {
    pub tangles: TangleList,
    pub kind: CandidateKind,
    pub paths: Vec<Edgepath>,
    pub u0: Option<Fraction>,
    /// `Γ(+0)` of the underlying basic system (types II and III).
    pub sum_at_zero: Fraction,
    pub source_interval: Option<(Fraction, Fraction)>,
}

impl CandidateSystem {
    /// Path encodings joined by `" ; "`.
    pub fn encoding(&self) -> String {
        self.paths.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ; ")
    }

    pub fn constant_count(&self) -> usize {
        self.paths.iter().filter(|p| p.is_constant()).count()
    }

    pub fn mirror(&self) -> CandidateSystem {
        CandidateSystem {
            tangles: self.tangles.mirror(),
            kind: self.kind,
            paths: self.paths.iter().map(Edgepath::mirror).collect(),
            u0: self.u0.clone(),
            sum_at_zero: -&self.sum_at_zero,
            source_interval: self.source_interval.clone(),
        }
    }
}

impl fmt::Display for CandidateSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type {} ", self.kind)?;
        if let Some(u) = &self.u0 {
            write!(f, "at u = {u} ")?;
        }
        write!(f, "[{}]", self.encoding())
    }
}

/// Zeros of `Σ λ̃_i` over `[0, 1)`, where the value at 0 is `Σ γ_i(+0)`.
///
/// The sum is linear between consecutive vertex u-coordinates, so it is
/// enough to evaluate it at those breakpoints.
pub fn solve_type_one(system: &[Edgepath]) -> Vec<Root> {
    let mut bps: Vec<Fraction> = vec![Fraction::zero(), Fraction::one()];
    for p in system {
        bps.extend(p.vertices.iter().map(u_of_fraction));
    }
    bps.sort();
    bps.dedup();
    let vals: Vec<Fraction> = bps
        .iter()
        .map(|u| {
            if u.is_zero() {
                system.iter().map(|p| p.vertices.last().expect("basic path")).sum()
            } else if u == &Fraction::one() {
                system.iter().map(|p| &p.start).sum()
            } else {
                system.iter().map(|p| eval_on_vertices(&p.vertices, u)).sum()
            }
        })
        .collect();

    let mut roots = Vec::new();
    let n = bps.len();
    let mut j = 0;
    while j < n {
        if vals[j].is_zero() {
            let mut k = j;
            while k + 1 < n && vals[k + 1].is_zero() {
                k += 1;
            }
            if k > j {
                roots.push(Root::Interval(bps[j].clone(), bps[k].clone()));
            } else {
                roots.push(Root::Point(bps[j].clone()));
            }
            j = k + 1;
            continue;
        }
        if j + 1 < n && vals[j].signum() * vals[j + 1].signum() < 0 {
            let (a, b) = (&bps[j], &bps[j + 1]);
            let (fa, fb) = (&vals[j], &vals[j + 1]);
            roots.push(Root::Point(a - fa * (b - a) / (fb - fa)));
        }
        j += 1;
    }
    let one = Fraction::one();
    roots.retain(|r| match r {
        Root::Point(u) => u.is_positive() && u < &one,
        Root::Interval(_, b) => b.is_positive(),
    });
    roots
}

/// Truncates every basic path at `u0`; tangles right of `u0` become constant.
pub fn cut_at(tangles: &TangleList, system: &[Edgepath], u0: &Fraction) -> Result<CandidateSystem> {
    if !u0.is_positive() || u0 >= &Fraction::one() {
        return Err(Error::OutOfRange { u: u0.clone(), range: "(0, 1)".into() });
    }
    let mut paths = Vec::with_capacity(system.len());
    for p in system {
        let k = &p.start;
        let q = k.denom_fraction();
        if &u_of_fraction(k) < u0 {
            paths.push(Edgepath::constant(k.clone(), q * (Fraction::one() - u0)));
            continue;
        }
        let mut kept = vec![k.clone()];
        let mut partial = None;
        for w in p.vertices.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            if &u_of_fraction(b) >= u0 {
                kept.push(b.clone());
            } else {
                let length = edge_length(&b.denom_fraction(), &a.denom_fraction(), u0)?;
                partial = Some(PartialEdge { toward: b.clone(), length });
                break;
            }
        }
        if partial.is_none() {
            return Err(Error::OutOfRange { u: u0.clone(), range: format!("the u-range of {p}") });
        }
        let mut cut = Edgepath::through(kept);
        cut.final_partial = partial;
        paths.push(cut);
    }
    if paths.iter().all(Edgepath::is_constant) {
        return Err(Error::AllConstant);
    }
    Ok(CandidateSystem {
        tangles: tangles.clone(),
        kind: CandidateKind::I,
        paths,
        u0: Some(u0.clone()),
        sum_at_zero: Fraction::zero(),
        source_interval: None,
    })
}

fn sum_at_zero(system: &[Edgepath]) -> Result<Fraction> {
    let mut g = Fraction::zero();
    for p in system {
        g = g + value_at_zero(p)?;
    }
    Ok(g)
}

/// Appends `|Γ(+0)|` vertical unit edges, all in one direction, to the first
/// path whose last edge does not span a triangle with the first vertical edge.
/// Returns `None` when every path would retrace a triangle.
pub fn build_type_two(tangles: &TangleList, system: &[Edgepath]) -> Result<Option<CandidateSystem>> {
    let g = sum_at_zero(system)?;
    let mut paths = system.to_vec();
    if !g.is_zero() {
        let d = Fraction::integer(-g.signum() as i64);
        let half = &d / 2;
        let slot = paths.iter().position(|p| {
            let n = p.vertices.len();
            p.vertices[n - 2] != &p.vertices[n - 1] + &half
        });
        let Some(i) = slot else { return Ok(None) };
        paths[i].vertical_run = -g.numer();
    }
    Ok(Some(CandidateSystem {
        tangles: tangles.clone(),
        kind: CandidateKind::II,
        paths,
        u0: None,
        sum_at_zero: g,
        source_interval: None,
    }))
}

/// Appends one complete ∞-edge to every path.
pub fn build_type_three(tangles: &TangleList, system: &[Edgepath]) -> Result<CandidateSystem> {
    let g = sum_at_zero(system)?;
    let paths = system
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.to_infinity = true;
            p
        })
        .collect();
    Ok(CandidateSystem {
        tangles: tangles.clone(),
        kind: CandidateKind::III,
        paths,
        u0: None,
        sum_at_zero: g,
        source_interval: None,
    })
}

/// Basic edgepaths of each tangle.
pub fn basic_paths(t: &TangleList) -> Result<Vec<Vec<Edgepath>>> {
    t.tangles().iter().map(enumerate_basic_edgepaths).collect()
}

pub fn enumerate_candidates(t: &TangleList) -> Result<Vec<CandidateSystem>> {
    let basic = basic_paths(t)?;
    let refs: Vec<&[Edgepath]> = basic.iter().map(Vec::as_slice).collect();
    enumerate_candidates_from(t, &refs)
}

/// Candidates built from precomputed basic edgepaths, one slice per tangle.
pub fn enumerate_candidates_from(t: &TangleList, basic: &[&[Edgepath]]) -> Result<Vec<CandidateSystem>> {
    if basic.len() != t.len() || basic.iter().any(|b| b.is_empty()) {
        return Err(Error::InternalAssumption(format!("missing basic edgepaths for {t}")));
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |c: CandidateSystem, out: &mut Vec<CandidateSystem>| {
        if seen.insert((c.kind, c.paths.clone(), c.u0.clone())) {
            out.push(c);
        }
    };
    let mut idx = vec![0usize; basic.len()];
    let mut system: Vec<Edgepath> = basic.iter().map(|b| b[0].clone()).collect();
    loop {
        for root in solve_type_one(&system) {
            let (points, interval) = match root {
                Root::Point(u) => (vec![u], None),
                Root::Interval(a, b) => (vec![a.clone(), b.clone()], Some((a, b))),
            };
            for u in points.into_iter().filter(Fraction::is_positive) {
                match cut_at(t, &system, &u) {
                    Ok(mut c) => {
                        c.source_interval = interval.clone();
                        push(c, &mut out);
                    }
                    Err(Error::AllConstant) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        if let Some(c) = build_type_two(t, &system)? {
            push(c, &mut out);
        }
        push(build_type_three(t, &system)?, &mut out);

        // odometer over the Cartesian product
        let mut i = basic.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < basic[i].len() {
                system[i] = basic[i][idx[i]].clone();
                break;
            }
            idx[i] = 0;
            system[i] = basic[i][0].clone();
        }
    }
}

/// One candidate of least `−χ/#s` per boundary slope, ties broken by the
/// least encoding; output sorted by slope.
pub fn simplify(cands: Vec<EvaluatedCandidate>) -> Vec<EvaluatedCandidate> {
    let mut best: BTreeMap<Fraction, EvaluatedCandidate> = BTreeMap::new();
    for c in cands {
        match best.get(&c.invariants.slope) {
            Some(b) if !better(&c, b) => {}
            _ => {
                best.insert(c.invariants.slope.clone(), c);
            }
        }
    }
    best.into_values().collect()
}

fn better(a: &EvaluatedCandidate, b: &EvaluatedCandidate) -> bool {
    match a.invariants.chi_over_s.cmp(&b.invariants.chi_over_s) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => a.candidate.encoding() < b.candidate.encoding(),
    }
}

/// The v-coordinate where a path of a type I system meets `u = u0`.
pub fn endpoint_at(p: &Edgepath, u0: &Fraction) -> Fraction {
    if p.is_constant() {
        return p.start.clone();
    }
    let a = p.vertices.last().expect("non-constant path");
    match &p.final_partial {
        Some(e) => interpolate(&e.toward, &u_of_fraction(&e.toward), a, &u_of_fraction(a), u0),
        None => a.clone(),
    }
}

/// Structural check of (E1)–(E4).
pub fn validate(c: &CandidateSystem) -> Result<()> {
    let fail = |msg: String| Err(Error::Inconsistent(format!("{c}: {msg}")));
    if c.paths.len() != c.tangles.len() {
        return fail("path count differs from tangle count".into());
    }
    let one = Fraction::one();
    for (p, k) in c.paths.iter().zip(c.tangles.tangles()) {
        // E1
        if &p.start != k {
            return fail(format!("path starts at {} instead of {k}", p.start));
        }
        if let Some(r) = &p.constant_ratio {
            if !r.is_positive() || r > &one || !p.vertices.is_empty() {
                return fail(format!("bad constant edgepath {p}"));
            }
            continue;
        }
        if p.vertices.first() != Some(k) {
            return fail(format!("{p} does not leave ⟨{k}⟩"));
        }
        // E4 and adjacency
        let mut chain: Vec<&Fraction> = p.vertices.iter().collect();
        if let Some(e) = &p.final_partial {
            if e.length.is_negative() || e.length > one {
                return fail(format!("partial length {} of {p}", e.length));
            }
            chain.push(&e.toward);
        }
        for w in chain.windows(2) {
            if !w[0].is_farey_neighbour(w[1]) {
                return fail(format!("{} and {} are not adjacent", w[0], w[1]));
            }
            if u_of_fraction(w[1]) >= u_of_fraction(w[0]) {
                return fail(format!("{p} does not move leftward"));
            }
        }
        // E2
        for w in chain.windows(3) {
            if w[0] == &mediant(w[1], w[2]) {
                return fail(format!("{p} retraces a triangle at {}", w[1]));
            }
        }
    }
    match c.kind {
        CandidateKind::I => {
            let Some(u0) = &c.u0 else { return fail("type I without u0".into()) };
            if c.paths.iter().all(Edgepath::is_constant) {
                return fail("all edgepaths constant".into());
            }
            for p in &c.paths {
                let right = u_of_fraction(&p.start) < *u0;
                if p.is_constant() != right || (!p.is_constant() && p.final_partial.is_none()) {
                    return fail(format!("{p} does not end at u = {u0}"));
                }
                if p.to_infinity || !p.vertical_run.is_zero() {
                    return fail(format!("{p} leaves u > 0"));
                }
            }
            let total: Fraction = c.paths.iter().map(|p| endpoint_at(p, u0)).sum();
            if !total.is_zero() {
                return fail(format!("endpoint sum {total} at u = {u0}"));
            }
        }
        CandidateKind::II | CandidateKind::III => {
            let mut total = Fraction::zero();
            let mut runs = 0;
            for p in &c.paths {
                let z = value_at_zero(p)?;
                total = total + z + Fraction::from(p.vertical_run.clone());
                if !p.vertical_run.is_zero() {
                    runs += 1;
                    let n = p.vertices.len();
                    let step = Fraction::integer(p.vertical_run.signum().try_into().unwrap_or(0));
                    if p.vertices[n - 2] == &p.vertices[n - 1] + &step / 2 {
                        return fail(format!("{p} turns back into a triangle at u = 0"));
                    }
                }
                if p.to_infinity != (c.kind == CandidateKind::III) {
                    return fail(format!("{p} has the wrong terminal edge"));
                }
            }
            if c.kind == CandidateKind::II {
                if !total.is_zero() {
                    return fail(format!("endpoint sum {total} at u = 0"));
                }
                if runs > 1 || (runs == 1 && c.sum_at_zero.is_zero()) {
                    return fail("vertical correction is not a single run".into());
                }
            } else if runs > 0 {
                return fail("vertical edges in a type III system".into());
            }
        }
    }
    Ok(())
}
