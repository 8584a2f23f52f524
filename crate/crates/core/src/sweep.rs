//! Exhaustive sweeps over Montesinos knots with bounded tangle denominators.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_knot, Fraction, TangleList};
use crate::edgepath::{enumerate_basic_edgepaths, Edgepath};
use crate::harness::{report_with, BoundReport, ReportOptions, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepParams {
    pub n: usize,
    pub max_den: i64,
    /// Keep one tuple per multiset of tangles.
    pub canonicalize: bool,
}

/// Reduced non-integral `p/q` with `2 ≤ q ≤ max_den` and `|p| < 2q`, ascending.
pub fn tangle_values(max_den: i64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for q in 2..=max_den {
        for p in (1 - 2 * q)..(2 * q) {
            if num_integer::gcd(p, q) == 1 {
                out.push(Fraction::from_i64(p, q).expect("q > 0"));
            }
        }
    }
    out.sort();
    out
}

/// Index tuples into [`tangle_values`] that describe knots.
pub fn knot_tuples(params: &SweepParams, values: &[Fraction]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(params.n);
    fill(params, values, &mut cur, &mut out);
    out
}

fn fill(params: &SweepParams, values: &[Fraction], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == params.n {
        let ks: Vec<Fraction> = cur.iter().map(|&i| values[i].clone()).collect();
        if is_knot(&ks) {
            out.push(cur.clone());
        }
        return;
    }
    let from = if params.canonicalize { cur.last().copied().unwrap_or(0) } else { 0 };
    for i in from..values.len() {
        cur.push(i);
        fill(params, values, cur, out);
        cur.pop();
    }
}

/// What a sweep keeps from one knot's report.
#[derive(Debug, Clone, Serialize)]
pub struct KnotOutcome {
    pub knot: String,
    pub candidates: usize,
    pub slopes: usize,
    pub exceptional: bool,
    pub exceptional_candidates: usize,
    pub inconsistent: Vec<String>,
    pub violations: Vec<Violation>,
    pub error: Option<String>,
}

impl KnotOutcome {
    fn from_report(r: &BoundReport) -> KnotOutcome {
        KnotOutcome {
            knot: r.knot.to_string(),
            candidates: r.candidates_enumerated,
            slopes: r.per_candidate.len(),
            exceptional: r.exception_t.is_some(),
            exceptional_candidates: r.exceptional_candidates,
            inconsistent: r.inconsistent.clone(),
            violations: r.violations.clone(),
            error: None,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SweepSummary {
    pub n: usize,
    pub max_den: i64,
    pub canonicalized: bool,
    pub knots: usize,
    pub candidates: usize,
    pub slopes: usize,
    pub exceptional_knots: usize,
    pub exceptional_candidates: usize,
    pub inconsistent_candidates: usize,
    pub violation_count: usize,
    pub error_count: usize,
    /// Knots with violations, inconsistencies or errors, in sweep order.
    pub flagged: Vec<KnotOutcome>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.violation_count == 0 && self.error_count == 0
    }
}

/// Runs the harness on every knot of the sweep on the current rayon pool.
pub fn run_sweep(params: &SweepParams) -> SweepSummary {
    let values = tangle_values(params.max_den);
    let basic: HashMap<&Fraction, Vec<Edgepath>> = values
        .iter()
        .map(|k| (k, enumerate_basic_edgepaths(k).expect("non-integral tangle")))
        .collect();
    let tuples = knot_tuples(params, &values);
    let outcomes: Vec<KnotOutcome> = tuples
        .par_iter()
        .map(|idx| {
            let ks: Vec<Fraction> = idx.iter().map(|&i| values[i].clone()).collect();
            let name = ks.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
            let result = TangleList::new(ks).and_then(|t| {
                let refs = t.tangles().iter().map(|k| basic[k].as_slice()).collect();
                report_with(&t, &ReportOptions { basic: Some(refs), seifert_twist: None })
            });
            match result {
                Ok(r) => KnotOutcome::from_report(&r),
                Err(e) => KnotOutcome {
                    knot: format!("K({name})"),
                    candidates: 0,
                    slopes: 0,
                    exceptional: false,
                    exceptional_candidates: 0,
                    inconsistent: Vec::new(),
                    violations: Vec::new(),
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();

    let mut s = SweepSummary {
        n: params.n,
        max_den: params.max_den,
        canonicalized: params.canonicalize,
        ..Default::default()
    };
    for o in outcomes {
        s.knots += 1;
        s.candidates += o.candidates;
        s.slopes += o.slopes;
        s.exceptional_knots += o.exceptional as usize;
        s.exceptional_candidates += o.exceptional_candidates;
        s.inconsistent_candidates += o.inconsistent.len();
        s.violation_count += o.violations.len();
        s.error_count += o.error.is_some() as usize;
        if !o.violations.is_empty() || !o.inconsistent.is_empty() || o.error.is_some() {
            s.flagged.push(o);
        }
    }
    s
}
