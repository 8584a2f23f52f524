//! Tangle lists, the knot condition, and the (−2,3,t)-pretzel family.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use super::Fraction;
use crate::error::{Error, Result};

/// The tangles `K₁, …, K_N` of a Montesinos knot, in order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TangleList {
    tangles: Vec<Fraction>,
}

impl TangleList {
    /// Validates `N ≥ 3`, non-integral entries, and the knot condition.
    pub fn new(tangles: Vec<Fraction>) -> Result<Self> {
        if tangles.len() < 3 {
            return Err(Error::TooFewTangles(tangles.len()));
        }
        if let Some(k) = tangles.iter().find(|k| k.is_integer()) {
            return Err(Error::IntegralTangle(k.clone()));
        }
        if !is_knot(&tangles) {
            return Err(Error::NotAKnot(join(&tangles)));
        }
        Ok(TangleList { tangles })
    }

    /// Like [`TangleList::new`] but accepts two-component links.
    pub fn allowing_links(tangles: Vec<Fraction>) -> Result<Self> {
        if tangles.len() < 3 {
            return Err(Error::TooFewTangles(tangles.len()));
        }
        if let Some(k) = tangles.iter().find(|k| k.is_integer()) {
            return Err(Error::IntegralTangle(k.clone()));
        }
        Ok(TangleList { tangles })
    }

    pub fn tangles(&self) -> &[Fraction] {
        &self.tangles
    }

    pub fn len(&self) -> usize {
        self.tangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tangles.is_empty()
    }

    /// All tangles negated.
    pub fn mirror(&self) -> TangleList {
        TangleList {
            tangles: self.tangles.iter().map(|k| -k).collect(),
        }
    }

    pub fn sum(&self) -> Fraction {
        self.tangles.iter().sum()
    }
}

fn join(ts: &[Fraction]) -> String {
    ts.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for TangleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({})", join(&self.tangles))
    }
}

impl fmt::Debug for TangleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for TangleList {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.tangles.iter())
    }
}

/// One component exactly: a single even denominator, or all odd denominators
/// with an odd number of odd numerators.
pub fn is_knot(tangles: &[Fraction]) -> bool {
    let even_dens = tangles.iter().filter(|k| k.denom_is_even()).count();
    match even_dens {
        1 => true,
        0 => tangles.iter().filter(|k| k.numer_is_odd()).count() % 2 == 1,
        _ => false,
    }
}

/// Membership in the family `K(−1/2 + k, 1/3 + l, 1/t − k − l)` up to order and mirroring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PretzelException {
    #[serde(serialize_with = "crate::arith::ser_bigint")]
    pub t: BigInt,
    pub mirrored: bool,
}

pub fn detect_pretzel_exception(t: &TangleList) -> Option<PretzelException> {
    if t.len() != 3 {
        return None;
    }
    for mirrored in [false, true] {
        let ks: Vec<Fraction> = if mirrored {
            t.tangles().iter().map(|k| -k).collect()
        } else {
            t.tangles().to_vec()
        };
        if let Some(tt) = match_family(&ks) {
            return Some(PretzelException { t: tt, mirrored });
        }
    }
    None
}

fn match_family(ks: &[Fraction]) -> Option<BigInt> {
    let half = Fraction::from_i64(1, 2).unwrap();
    let third = Fraction::from_i64(1, 3).unwrap();
    let mut residues: Vec<Fraction> = ks.iter().map(|k| k.fract_part()).collect();
    residues.sort();
    let sum: Fraction = ks.iter().sum();
    for i in 0..3 {
        let r = &residues[i];
        let mut rest: Vec<&Fraction> = (0..3).filter(|&j| j != i).map(|j| &residues[j]).collect();
        rest.sort();
        if rest != [&third, &half] || r.numer() != BigInt::from(1) {
            continue;
        }
        let den = r.denom();
        if den.is_even() || den < BigInt::from(3) {
            continue;
        }
        if sum == -&half + &third + r {
            return Some(den);
        }
    }
    None
}
