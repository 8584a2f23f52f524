//! The reference candidate `F_S` whose twist fixes the zero of the slope scale.
//!
//! A Seifert surface meets each tangle ball in saddles that respect the knot's
//! orientation. Orienting the knot and reading off, in every ball, which of
//! the three parity classes of tangle would join two ingoing (or two
//! outgoing) punctures singles out one forbidden class per ball. The Seifert
//! edgepath from `⟨K_i⟩` is the basic edgepath that never visits a vertex of
//! that class.

use crate::arith::{convergents, even_cf_expansions, farey_parents, parity_class, Fraction, ParityClass, TangleList};
use crate::candidates::{build_type_three, build_type_two, CandidateSystem};
use crate::edgepath::Edgepath;
use crate::error::{Error, Result};
use crate::invariants::twist;

// punctures: 2h is the top and 2h + 1 the bottom point between ball h and ball h + 1
fn strands(class: ParityClass, ball: usize, n: usize) -> [(usize, usize); 2] {
    let l = (ball + n - 1) % n;
    let r = ball;
    let (tl, bl, tr, br) = (2 * l, 2 * l + 1, 2 * r, 2 * r + 1);
    match class {
        ParityClass::Infinite => [(tl, bl), (tr, br)],
        ParityClass::Even => [(tl, tr), (bl, br)],
        ParityClass::Odd => [(tl, br), (bl, tr)],
    }
}

/// For each tangle, the parity class a Seifert edgepath must avoid.
pub fn forbidden_classes(t: &TangleList) -> Result<Vec<ParityClass>> {
    let n = t.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 2 * n];
    for (ball, k) in t.tangles().iter().enumerate() {
        for (x, y) in strands(parity_class(k), ball, n) {
            adj[x].push((y, ball));
            adj[y].push((x, ball));
        }
    }
    // entering[ball * 2n + puncture]
    let mut entering: Vec<Option<bool>> = vec![None; n * 2 * n];
    let (mut node, mut ball) = (0usize, adj[0][0].1);
    let mut next = adj[0][0].0;
    let mut visited = 0;
    loop {
        entering[ball * 2 * n + node] = Some(true);
        entering[ball * 2 * n + next] = Some(false);
        visited += 1;
        node = next;
        let &(nb, b) = adj[node].iter().find(|&&(_, b)| b != ball).expect("two strands per puncture");
        if entering[b * 2 * n + node].is_some() {
            break;
        }
        next = nb;
        ball = b;
    }
    if visited != 2 * n {
        return Err(Error::NotAKnot(t.tangles().iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")));
    }
    let mut out = Vec::with_capacity(n);
    for ball in 0..n {
        let dir = |p: usize| entering[ball * 2 * n + p];
        let bad: Vec<ParityClass> = [ParityClass::Even, ParityClass::Odd, ParityClass::Infinite]
            .into_iter()
            .filter(|&c| strands(c, ball, n).iter().any(|&(x, y)| dir(x) == dir(y)))
            .collect();
        match bad.as_slice() {
            [c] => out.push(*c),
            _ => {
                return Err(Error::InternalAssumption(format!(
                    "ball {ball} of {t} forbids {} parity classes",
                    bad.len()
                )))
            }
        }
    }
    Ok(out)
}

/// The basic edgepath from `⟨k⟩` avoiding vertices of class `avoid`.
pub fn path_avoiding(k: &Fraction, avoid: ParityClass) -> Result<Edgepath> {
    let mut v = vec![k.clone()];
    while !v.last().expect("nonempty").is_integer() {
        let (a, b) = farey_parents(v.last().expect("nonempty"))?;
        let ok: Vec<Fraction> = [a, b].into_iter().filter(|x| parity_class(x) != avoid).collect();
        if ok.len() != 1 {
            return Err(Error::InternalAssumption(format!(
                "{} has {} parents outside class {avoid:?}",
                v.last().expect("nonempty"),
                ok.len()
            )));
        }
        v.extend(ok);
    }
    Ok(Edgepath::through(v))
}

/// The Seifert reference candidate of `t`.
pub fn seifert_candidate(t: &TangleList) -> Result<CandidateSystem> {
    let forbidden = forbidden_classes(t)?;
    let mut system = Vec::with_capacity(t.len());
    for (k, &c) in t.tangles().iter().zip(&forbidden) {
        system.push(path_avoiding(k, c)?);
    }
    if t.tangles().iter().any(Fraction::denom_is_even) {
        cross_check_even_cf(&system)?;
    }
    if forbidden.contains(&ParityClass::Infinite) {
        return build_type_two(t, &system)?.ok_or_else(|| {
            Error::InternalAssumption(format!("the Seifert system of {t} admits no vertical correction"))
        });
    }
    let gamma: Fraction = system.iter().map(|p| p.vertices.last().expect("basic path")).sum();
    if gamma.is_zero() {
        Ok(build_type_two(t, &system)?.expect("no vertical edges needed"))
    } else {
        build_type_three(t, &system)
    }
}

/// With an even-denominator tangle present, every Seifert edgepath must be
/// the convergent chain of an even continued fraction expansion.
fn cross_check_even_cf(system: &[Edgepath]) -> Result<()> {
    for p in system {
        let chains: Vec<Vec<Fraction>> = even_cf_expansions(&p.start)?
            .iter()
            .map(|cf| convergents(cf).into_iter().rev().collect())
            .collect();
        if !chains.contains(&p.vertices) {
            return Err(Error::InternalAssumption(format!(
                "Seifert edgepath {p} is not an even continued fraction chain"
            )));
        }
    }
    Ok(())
}

/// `τ(F_S)`.
pub fn seifert_twist(t: &TangleList) -> Result<Fraction> {
    Ok(twist(&seifert_candidate(t)?))
}
