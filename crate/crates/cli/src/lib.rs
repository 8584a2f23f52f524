//! Input grammar, output records and rendering for the `montesinos` binary.

use std::fmt;
use std::str::FromStr;

use montesinos::candidates::{enumerate_candidates, simplify};
use montesinos::invariants::{evaluate_all, EvaluatedCandidate};
use montesinos::seifert::seifert_twist;
use montesinos::{Error, Fraction, TangleList};
use serde::Serialize;
use thiserror::Error as ThisError;

pub mod svg;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum ParseError {
    #[error("empty knot specification")]
    Empty,
    #[error("unbalanced `K(` … `)` wrapper in `{0}`")]
    Wrapper(String),
    #[error("malformed fraction `{0}`; expected p/q with integers p and q > 0")]
    Malformed(String),
    #[error("tangle `{0}` is an integer; every tangle must be a non-integral fraction")]
    Integral(String),
    #[error("need at least 3 tangles, got {0}")]
    TooFew(usize),
    #[error("K({0}) is a link with two components, not a knot")]
    Link(String),
}

/// A parsed knot together with the text it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotSpec {
    pub raw: String,
    pub knot: TangleList,
}

impl FromStr for KnotSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Ok(KnotSpec { raw: s.to_string(), knot: parse_knot(s)? })
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.knot)
    }
}

/// `K(p/q, …)` or a bare comma-separated list; `−` is accepted for `-`.
pub fn parse_knot(text: &str) -> Result<TangleList, ParseError> {
    let s = text.trim().replace('−', "-");
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let body = match s.strip_prefix("K(").or_else(|| s.strip_prefix("k(")) {
        Some(rest) => rest.strip_suffix(')').ok_or_else(|| ParseError::Wrapper(text.to_string()))?,
        None if s.starts_with('(') && s.ends_with(')') => &s[1..s.len() - 1],
        None if s.contains(['(', ')']) => return Err(ParseError::Wrapper(text.to_string())),
        None => &s,
    };
    let mut tangles = Vec::new();
    for tok in body.split(',') {
        let tok = tok.trim();
        if !tok.contains('/') {
            return match Fraction::from_str(tok) {
                Ok(_) => Err(ParseError::Integral(tok.to_string())),
                Err(_) => Err(ParseError::Malformed(tok.to_string())),
            };
        }
        let k = Fraction::from_str(tok).map_err(|_| ParseError::Malformed(tok.to_string()))?;
        if k.is_integer() {
            return Err(ParseError::Integral(tok.to_string()));
        }
        tangles.push(k);
    }
    TangleList::new(tangles).map_err(|e| match e {
        Error::TooFewTangles(n) => ParseError::TooFew(n),
        Error::IntegralTangle(k) => ParseError::Integral(k.to_string()),
        Error::NotAKnot(list) => ParseError::Link(list),
        other => ParseError::Malformed(other.to_string()),
    })
}

/// One simplified candidate, every number as an exact string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub slope: String,
    pub twist: String,
    pub chi_over_s: String,
    pub sheets: String,
    pub boundary: Option<String>,
    pub chi: String,
    pub rho: String,
    pub genus_quantity: Option<String>,
    pub u0: Option<String>,
    pub edgepaths: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slope_decimal: Option<String>,
}

pub const CSV_HEADER: [&str; 11] =
    ["type", "slope", "twist", "chi_over_s", "sheets", "boundary", "chi", "rho", "genus_quantity", "u0", "edgepaths"];

impl SlopeRecord {
    pub fn from_candidate(c: &EvaluatedCandidate, decimal: bool) -> SlopeRecord {
        let inv = &c.invariants;
        SlopeRecord {
            kind: c.candidate.kind.to_string(),
            slope: inv.slope.to_ratio_string(),
            twist: inv.twist.to_ratio_string(),
            chi_over_s: inv.chi_over_s.to_ratio_string(),
            sheets: inv.sheets.to_string(),
            boundary: inv.boundary.as_ref().map(|b| b.to_string()),
            chi: inv.chi.to_string(),
            rho: inv.rho.to_ratio_string(),
            genus_quantity: inv.genus_quantity.as_ref().map(|g| g.to_string()),
            u0: c.candidate.u0.as_ref().map(Fraction::to_ratio_string),
            edgepaths: c.candidate.encoding(),
            slope_decimal: decimal.then(|| inv.slope.to_decimal(6)),
        }
    }

    fn cells(&self) -> Vec<&str> {
        fn opt(o: &Option<String>) -> &str {
            o.as_deref().unwrap_or("")
        }
        let mut v = vec![
            self.kind.as_str(),
            &self.slope,
            &self.twist,
            &self.chi_over_s,
            &self.sheets,
            opt(&self.boundary),
            &self.chi,
            &self.rho,
            opt(&self.genus_quantity),
            opt(&self.u0),
            &self.edgepaths,
        ];
        if let Some(d) = &self.slope_decimal {
            v.push(d);
        }
        v
    }
}

/// Simplified candidates, by slope then `−χ/#s`.
pub fn simplified_candidates(t: &TangleList, tau_s: Option<&Fraction>) -> montesinos::Result<Vec<EvaluatedCandidate>> {
    let tau = match tau_s {
        Some(x) => x.clone(),
        None => seifert_twist(t)?,
    };
    let mut s = simplify(evaluate_all(enumerate_candidates(t)?, &tau)?);
    s.sort_by(|a, b| {
        a.invariants.slope.cmp(&b.invariants.slope).then_with(|| a.invariants.chi_over_s.cmp(&b.invariants.chi_over_s))
    });
    Ok(s)
}

pub fn slope_records(t: &TangleList, tau_s: Option<&Fraction>, decimal: bool) -> montesinos::Result<Vec<SlopeRecord>> {
    Ok(simplified_candidates(t, tau_s)?.iter().map(|c| SlopeRecord::from_candidate(c, decimal)).collect())
}

pub fn render_json(records: &[SlopeRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

pub fn render_csv(records: &[SlopeRecord], decimal: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = CSV_HEADER.to_vec();
    if decimal {
        header.push("slope_decimal");
    }
    w.write_record(&header).expect("in-memory write");
    for r in records {
        w.write_record(r.cells()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Aligned plain-text table.
pub fn render_table(t: &TangleList, records: &[SlopeRecord], decimal: bool) -> String {
    let mut header: Vec<&str> = CSV_HEADER.to_vec();
    if decimal {
        header.push("slope_decimal");
    }
    let rows: Vec<Vec<&str>> = records.iter().map(|r| r.cells()).collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| rows.iter().map(|r| r[i].chars().count()).chain([header[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[&str]| -> String {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  ", w = widths[i]));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = format!("{t}: {} simplified candidates\n", records.len());
    out.push_str(&line(&header));
    for r in &rows {
        out.push_str(&line(r));
    }
    out
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;
pub const EXIT_INCONSISTENT: u8 = 3;

/// Exit status for a finished check: violations outrank consistency flags.
pub fn verdict(violations: usize, flagged: usize) -> u8 {
    if violations > 0 {
        EXIT_VIOLATION
    } else if flagged > 0 {
        EXIT_INCONSISTENT
    } else {
        EXIT_OK
    }
}
