//! Twist, Euler characteristic per sheet, sheet and boundary counts, slope,
//! remainder term and cancellation of a candidate system.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{ser_opt_bigint, Fraction};
use crate::candidates::{CandidateKind, CandidateSystem};
use crate::edgepath::{path_length, path_length_nonnegative, twist_of_edgepath};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub twist: Fraction,
    pub chi_over_s: Fraction,
    #[serde(serialize_with = "crate::arith::ser_bigint")]
    pub sheets: BigInt,
    pub slope: Fraction,
    /// `None` when `Q` does not divide `#s`.
    #[serde(serialize_with = "ser_opt_bigint")]
    pub boundary: Option<BigInt>,
    #[serde(serialize_with = "crate::arith::ser_bigint")]
    pub chi: BigInt,
    pub rho: Fraction,
    pub kappa: Fraction,
    /// `2 − χ − #b`.
    #[serde(serialize_with = "ser_opt_bigint")]
    pub genus_quantity: Option<BigInt>,
}

impl SurfaceInvariants {
    pub fn is_consistent(&self) -> bool {
        self.boundary.is_some()
    }

    /// Denominator `Q` of the slope.
    pub fn q(&self) -> BigInt {
        self.slope.denom()
    }

    /// `−χ/#b`, when `#b` is known.
    pub fn chi_over_b(&self) -> Option<Fraction> {
        let b = self.boundary.as_ref()?;
        Some(Fraction::new(-&self.chi, b.clone()).expect("positive boundary count"))
    }
}

/// A candidate together with its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluatedCandidate {
    pub candidate: CandidateSystem,
    pub invariants: SurfaceInvariants,
}

/// `−χ/#s` by the gluing formula of the candidate's type.
pub fn chi_over_s(c: &CandidateSystem) -> Fraction {
    let positive: Fraction = c.paths.iter().map(|p| path_length(p, true)).sum();
    match c.kind {
        CandidateKind::III => positive,
        CandidateKind::II => positive + c.sum_at_zero.abs() - 2,
        CandidateKind::I => {
            let u0 = c.u0.as_ref().expect("type I candidate carries u0");
            let n = c.paths.len() as i64;
            let mut n_const = 0i64;
            let mut caps = Fraction::zero();
            for p in c.paths.iter().filter(|p| p.is_constant()) {
                n_const += 1;
                caps = caps + p.start.denom_fraction().recip();
            }
            positive + (n_const - n) + (Fraction::integer(n - 2) - caps) / (Fraction::one() - u0)
        }
    }
}

/// `lcm` over paths of `m` (partial edge `k/m`), `k` (constant ratio `k/m`), or 1.
pub fn num_sheets(c: &CandidateSystem) -> BigInt {
    let mut s = BigInt::one();
    for p in &c.paths {
        let part = if let Some(r) = &p.constant_ratio {
            r.numer()
        } else if let Some(e) = &p.final_partial {
            e.length.denom()
        } else {
            continue;
        };
        s = s.lcm(&part);
    }
    s
}

pub fn twist(c: &CandidateSystem) -> Fraction {
    c.paths.iter().map(twist_of_edgepath).sum()
}

/// `R = τ − τ_S`.
pub fn slope(c: &CandidateSystem, tau_s: &Fraction) -> Fraction {
    twist(c) - tau_s
}

/// `#b = #s / Q`.
pub fn boundary_count(sheets: &BigInt, q: &BigInt) -> Result<BigInt> {
    let (b, r) = sheets.div_rem(q);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!("Q = {q} does not divide #s = {sheets}")));
    }
    Ok(b)
}

/// `ρ = |τ| − 2(−χ/#s)`.
pub fn remainder_rho(tau: &Fraction, chi_over_s: &Fraction) -> Fraction {
    tau.abs() - chi_over_s * 2
}

/// `κ = min(l₊, l₋)` over the non-∞ edges of non-constant paths.
pub fn cancellation_kappa(c: &CandidateSystem) -> Fraction {
    let (mut up, mut down) = (Fraction::zero(), Fraction::zero());
    for p in &c.paths {
        let (u, d) = p.signed_lengths();
        up = up + u;
        down = down + d;
    }
    up.min(down)
}

/// `Δ(R₁, R₂) = |P₁Q₂ − P₂Q₁|`.
pub fn distance(r1: &Fraction, r2: &Fraction) -> BigInt {
    r1.cross(r2).abs()
}

/// `Σ |γ_{i,≥0}|` over non-constant paths.
pub fn nonnegative_length(c: &CandidateSystem) -> Fraction {
    c.paths.iter().map(path_length_nonnegative).sum()
}

pub fn evaluate(c: &CandidateSystem, tau_s: &Fraction) -> Result<SurfaceInvariants> {
    let twist = twist(c);
    let chi_over_s = chi_over_s(c);
    let sheets = num_sheets(c);
    let slope = &twist - tau_s;
    let chi_f = -(&chi_over_s * Fraction::from(sheets.clone()));
    if !chi_f.is_integer() {
        return Err(Error::InternalAssumption(format!(
            "χ = {chi_f} is not an integer for {c} (−χ/#s = {chi_over_s}, #s = {sheets})"
        )));
    }
    let chi = chi_f.numer();
    let boundary = boundary_count(&sheets, &slope.denom()).ok();
    let genus_quantity = boundary.as_ref().map(|b| BigInt::from(2) - &chi - b);
    let rho = remainder_rho(&twist, &chi_over_s);
    let kappa = cancellation_kappa(c);
    Ok(SurfaceInvariants { twist, chi_over_s, sheets, slope, boundary, chi, rho, kappa, genus_quantity })
}

pub fn evaluate_all(cands: Vec<CandidateSystem>, tau_s: &Fraction) -> Result<Vec<EvaluatedCandidate>> {
    cands
        .into_iter()
        .map(|candidate| {
            let invariants = evaluate(&candidate, tau_s)?;
            Ok(EvaluatedCandidate { candidate, invariants })
        })
        .collect()
}
