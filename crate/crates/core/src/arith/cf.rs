//! Even continued fractions `[a₀; a₁, …, a_m]` with every `a_j` (j ≥ 1) even and `|a_j| ≥ 2`.

use num_bigint::BigInt;
use num_integer::Integer;

use super::Fraction;
use crate::error::{Error, Result};

/// Every expansion of `f`, found by depth-first search over `a₀ ∈ {⌊f⌋, ⌈f⌉}`
/// and, below that, over the two even integers flanking each reciprocal remainder.
pub fn even_cf_expansions(f: &Fraction) -> Result<Vec<Vec<BigInt>>> {
    if f.is_integer() {
        return Err(Error::IntegralTangle(f.clone()));
    }
    let mut out = Vec::new();
    for a0 in [f.floor(), f.ceil()] {
        let mut terms = vec![a0.numer()];
        descend(&(f - &a0).recip(), &mut terms, &mut out);
    }
    Ok(out)
}

fn descend(x: &Fraction, terms: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    if x.is_integer() && !x.numer_is_odd() {
        terms.push(x.numer());
        out.push(terms.clone());
        terms.pop();
        return;
    }
    let fl = x.floor();
    let low = if fl.numer_is_odd() { fl - 1 } else { fl };
    for a in [low.clone(), low + 2] {
        let rest = x - &a;
        // every tail of an admissible expansion exceeds 1 in absolute value
        if a.abs() < Fraction::integer(2) || rest.is_zero() || rest.abs() >= Fraction::one() {
            continue;
        }
        terms.push(a.numer());
        descend(&rest.recip(), terms, out);
        terms.pop();
    }
}

/// The even expansion of `f`.
///
/// Odd denominators admit exactly one expansion. Even denominators admit exactly
/// two, whose leading terms differ by one; the one with even `a₀` is returned.
/// Any other count is reported as a failed assumption.
pub fn even_cf(f: &Fraction) -> Result<Vec<BigInt>> {
    let mut all = even_cf_expansions(f)?;
    let expected = if f.denom_is_even() { 2 } else { 1 };
    if all.len() != expected {
        return Err(Error::InternalAssumption(format!(
            "{f} has {} even continued fraction expansions, expected {expected}",
            all.len()
        )));
    }
    if expected == 1 {
        return Ok(all.pop().expect("one expansion"));
    }
    let pos = all.iter().position(|cf| cf[0].is_even());
    match pos {
        Some(i) if all[1 - i][0].is_odd() => Ok(all.swap_remove(i)),
        _ => Err(Error::InternalAssumption(format!(
            "the two even expansions of {f} do not differ in the parity of a0"
        ))),
    }
}

/// Convergents `c₀ = a₀, c₁, …, c_m` of `[a₀; a₁, …, a_m]`.
pub fn convergents(terms: &[BigInt]) -> Vec<Fraction> {
    let (mut p0, mut q0) = (BigInt::from(1), BigInt::from(0));
    let (mut p1, mut q1) = (terms[0].clone(), BigInt::from(1));
    let mut out = vec![Fraction::from(p1.clone())];
    for a in &terms[1..] {
        let p2 = a * &p1 + &p0;
        let q2 = a * &q1 + &q0;
        out.push(Fraction::new(p2.clone(), q2.clone()).expect("nonzero denominator"));
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    out
}

/// Value of a finite continued fraction.
pub fn evaluate_cf(terms: &[BigInt]) -> Fraction {
    let mut acc = Fraction::from(terms[terms.len() - 1].clone());
    for a in terms[..terms.len() - 1].iter().rev() {
        acc = Fraction::from(a.clone()) + acc.recip();
    }
    acc
}
