//! Farey-graph queries on reduced fractions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::Fraction;
use crate::error::{Error, Result};

/// Parity class of `p/q` modulo 2. Every Farey triangle has one vertex of each class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ParityClass {
    /// p even, q odd (the class of ⟨0⟩)
    Even,
    /// p odd, q odd (the class of ⟨1⟩)
    Odd,
    /// q even (the class of ⟨∞⟩)
    Infinite,
}

pub fn parity_class(f: &Fraction) -> ParityClass {
    if f.denom_is_even() {
        ParityClass::Infinite
    } else if f.numer_is_odd() {
        ParityClass::Odd
    } else {
        ParityClass::Even
    }
}

/// `(a.num + b.num) / (a.den + b.den)`.
pub fn mediant(a: &Fraction, b: &Fraction) -> Fraction {
    match (a.small_parts(), b.small_parts()) {
        (Some((p, q)), Some((r, s))) => {
            let n = p as i128 + r as i128;
            let d = q as i128 + s as i128;
            match (i64::try_from(n), i64::try_from(d)) {
                (Ok(n), Ok(d)) => Fraction::from_i64(n, d).expect("positive denominator"),
                _ => Fraction::new(n, d).expect("positive denominator"),
            }
        }
        _ => Fraction::new(a.numer() + b.numer(), a.denom() + b.denom())
            .expect("positive denominator"),
    }
}

/// The two Farey parents `r₁/s₁ < f < r₂/s₂` of a non-integral `f`, with `s₁ + s₂ = den(f)`.
pub fn farey_parents(f: &Fraction) -> Result<(Fraction, Fraction)> {
    if f.is_integer() {
        return Err(Error::IntegralTangle(f.clone()));
    }
    let (a, b) = match f.small_parts() {
        Some((p, q)) => {
            let (p, q) = (p as i128, q as i128);
            // s ≡ p⁻¹ (mod q) solves p·s − q·r = 1
            let s = mod_inverse_i128(p.rem_euclid(q), q);
            let r = (p * s - 1) / q;
            (
                Fraction::new(r, s).expect("nonzero"),
                Fraction::new(p - r, q - s).expect("nonzero"),
            )
        }
        None => {
            let (p, q) = (f.numer(), f.denom());
            let e = p.mod_floor(&q).extended_gcd(&q);
            debug_assert!(e.gcd.is_one());
            let s = e.x.mod_floor(&q);
            let r: BigInt = (&p * &s - 1) / &q;
            (
                Fraction::new(r.clone(), s.clone()).expect("nonzero"),
                Fraction::new(p - r, q - s).expect("nonzero"),
            )
        }
    };
    Ok(if a < b { (a, b) } else { (b, a) })
}

fn mod_inverse_i128(a: i128, m: i128) -> i128 {
    let (mut old_r, mut r) = (a, m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn brute_parents(x: &Fraction) -> Vec<Fraction> {
        let (p, q) = x.small_parts().unwrap();
        let mut out = Vec::new();
        for s in 1..q {
            for r in (p * s / q - 2)..=(p * s / q + 2) {
                if (p * s - q * r).abs() == 1 {
                    out.push(Fraction::from_i64(r, s).unwrap());
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn parents_examples() {
        assert_eq!(farey_parents(&f("1/2")).unwrap(), (f("0"), f("1")));
        assert_eq!(farey_parents(&f("1/3")).unwrap(), (f("0"), f("1/2")));
        assert_eq!(farey_parents(&f("2/5")).unwrap(), (f("1/3"), f("1/2")));
        assert_eq!(farey_parents(&f("-1/2")).unwrap(), (f("-1"), f("0")));
        assert!(farey_parents(&f("3")).is_err());
    }

    #[test]
    fn parents_match_brute_force() {
        for q in 2..40i64 {
            for p in -3 * q..3 * q {
                let x = Fraction::from_i64(p, q).unwrap();
                if x.denom() != BigInt::from(q) {
                    continue;
                }
                let (a, b) = farey_parents(&x).unwrap();
                assert_eq!(brute_parents(&x), vec![a.clone(), b.clone()], "{x}");
                assert_eq!(mediant(&a, &b), x);
            }
        }
    }

    #[test]
    fn big_parents_agree_with_small_path() {
        let huge = BigInt::from(10).pow(30);
        let x = Fraction::new(&huge * 7 + 3, huge.clone() * 2 + 1).unwrap();
        let (a, b) = farey_parents(&x).unwrap();
        assert!(a < x && x < b);
        assert!(a.is_farey_neighbour(&x) && b.is_farey_neighbour(&x));
        assert_eq!(mediant(&a, &b), x);
    }

    #[test]
    fn parity_classes() {
        assert_eq!(parity_class(&f("0")), ParityClass::Even);
        assert_eq!(parity_class(&f("-3/5")), ParityClass::Odd);
        assert_eq!(parity_class(&f("1/2")), ParityClass::Infinite);
        let (a, b) = farey_parents(&f("5/7")).unwrap();
        let mut classes = [parity_class(&a), parity_class(&b), parity_class(&f("5/7"))];
        classes.sort();
        assert_eq!(classes, [ParityClass::Even, ParityClass::Odd, ParityClass::Infinite]);
    }
}
