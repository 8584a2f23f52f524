//! SVG rendering of the diagram with candidate edgepath systems drawn over it.

use std::fmt::Write;

use montesinos::arith::farey_parents;
use montesinos::candidates::CandidateKind;
use montesinos::diagram::u_of_fraction;
use montesinos::edgepath::Edgepath;
use montesinos::invariants::EvaluatedCandidate;
use montesinos::{Fraction, TangleList};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 540.0;
const MARGIN: f64 = 40.0;
const LEGEND: f64 = 320.0;

const PALETTE: [&str; 10] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"];

fn fl(x: &Fraction) -> f64 {
    x.to_decimal(9).parse().expect("decimal expansion")
}

struct Frame {
    vmin: f64,
    vmax: f64,
}

impl Frame {
    fn x(&self, u: f64) -> f64 {
        MARGIN + (u + 1.0) / 2.0 * WIDTH
    }

    fn y(&self, v: f64) -> f64 {
        MARGIN + (self.vmax - v) / (self.vmax - self.vmin) * HEIGHT
    }

    fn pt(&self, u: f64, v: f64) -> String {
        format!("{:.2},{:.2}", self.x(u), self.y(v))
    }
}

/// `(u, v)` corners of one edgepath, drawn from its tangle end leftward.
fn polyline(p: &Edgepath, u0: Option<&Fraction>) -> Vec<(f64, f64)> {
    if p.is_constant() {
        let u = u0.map(fl).unwrap_or(1.0);
        return vec![(1.0, fl(&p.start)), (u, fl(&p.start))];
    }
    let mut pts: Vec<(f64, f64)> = p.vertices.iter().map(|v| (fl(&u_of_fraction(v)), fl(v))).collect();
    let last = p.vertices.last().expect("non-constant path");
    if let (Some(e), Some(u0)) = (&p.final_partial, u0) {
        let (ua, ub) = (u_of_fraction(last), u_of_fraction(&e.toward));
        let v = last + (&e.toward - last) * (&ua - u0) / (&ua - &ub);
        pts.push((fl(u0), fl(&v)));
    }
    let mut z = fl(last);
    let run = Fraction::from(p.vertical_run.clone());
    if !run.is_zero() {
        z += fl(&run);
        pts.push((0.0, z));
    }
    if p.to_infinity {
        pts.push((-1.0, z));
    }
    pts
}

fn style(kind: CandidateKind) -> &'static str {
    match kind {
        CandidateKind::I => "",
        CandidateKind::II => " stroke-dasharray=\"8 4\"",
        CandidateKind::III => " stroke-dasharray=\"2 4\"",
    }
}

/// An SVG 1.1 document for `t` and its simplified candidates, showing
/// diagram vertices up to denominator `max_den`.
pub fn render(t: &TangleList, cands: &[EvaluatedCandidate], max_den: u32) -> String {
    let mut vs: Vec<f64> = t.tangles().iter().map(fl).collect();
    for c in cands {
        for p in &c.candidate.paths {
            vs.extend(polyline(p, c.candidate.u0.as_ref()).into_iter().map(|(_, v)| v));
        }
    }
    let lo = vs.iter().cloned().fold(f64::INFINITY, f64::min).floor() - 0.5;
    let hi = vs.iter().cloned().fold(f64::NEG_INFINITY, f64::max).ceil() + 0.5;
    let frame = Frame { vmin: lo, vmax: hi };

    let total_w = WIDTH + 2.0 * MARGIN + LEGEND;
    let total_h = (HEIGHT + 2.0 * MARGIN).max(MARGIN + 20.0 * (cands.len() as f64 + 2.0));
    let mut s = String::new();
    let _ = writeln!(s, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{total_w:.0}\" height=\"{total_h:.0}\" viewBox=\"0 0 {total_w:.0} {total_h:.0}\">"
    );
    let _ = writeln!(s, "<title>{t}</title>");
    let _ = writeln!(s, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");

    // frame: u = -1 is the ∞ line, u = 0 the integer column, u = 1 the circle column
    let _ = writeln!(s, "<g id=\"axes\" stroke=\"#999\" stroke-width=\"1\" fill=\"none\">");
    for u in [-1.0, 0.0, 1.0] {
        let _ = writeln!(
            s,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"{}/>",
            frame.x(u),
            frame.y(hi),
            frame.x(u),
            frame.y(lo),
            if u == -1.0 { " stroke-dasharray=\"4 4\"" } else { "" }
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\">&#8734;</text>",
        frame.x(-1.0) + 4.0,
        frame.y(hi) + 14.0
    );

    // diagram edges and vertices with q ≤ max_den
    let mut verts = Vec::new();
    for q in 1..=i64::from(max_den.max(1)) {
        let lo_p = (lo * q as f64).ceil() as i64;
        let hi_p = (hi * q as f64).floor() as i64;
        for p in lo_p..=hi_p {
            if num_gcd(p, q) == 1 {
                verts.push(Fraction::from_i64(p, q).expect("q > 0"));
            }
        }
    }
    let _ = writeln!(s, "<g id=\"edges\" stroke=\"#ddd\" stroke-width=\"0.8\">");
    for v in &verts {
        let (u, y) = (fl(&u_of_fraction(v)), fl(v));
        let ends: Vec<(f64, f64)> = if v.is_integer() {
            vec![(0.0, y + 1.0)]
        } else {
            let (a, b) = farey_parents(v).expect("non-integral vertex");
            [a, b].iter().map(|w| (fl(&u_of_fraction(w)), fl(w))).collect()
        };
        for (eu, ev) in ends.into_iter().filter(|(_, ev)| *ev >= lo && *ev <= hi) {
            let _ = writeln!(
                s,
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>",
                frame.x(u),
                frame.y(y),
                frame.x(eu),
                frame.y(ev)
            );
        }
    }
    for k in t.tangles() {
        let (u, v) = (fl(&u_of_fraction(k)), fl(k));
        let _ = writeln!(
            s,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#bbb\"/>",
            frame.x(u),
            frame.y(v),
            frame.x(1.0),
            frame.y(v)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "<g id=\"vertices\" fill=\"#555\">");
    for v in &verts {
        let _ = writeln!(
            s,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"1.6\"/>",
            frame.x(fl(&u_of_fraction(v))),
            frame.y(fl(v))
        );
    }
    for k in t.tangles() {
        let _ = writeln!(
            s,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"black\"><title>{k}</title></circle>",
            frame.x(fl(&u_of_fraction(k))),
            frame.y(fl(k))
        );
    }
    let _ = writeln!(s, "</g>");

    for (i, c) in cands.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let slope = &c.invariants.slope;
        let _ = writeln!(
            s,
            "<g class=\"candidate type-{}\" data-slope=\"{}\" stroke=\"{colour}\" stroke-width=\"2\" fill=\"none\"{}>",
            c.candidate.kind,
            slope.to_ratio_string(),
            style(c.candidate.kind)
        );
        for p in &c.candidate.paths {
            let pts: Vec<String> =
                polyline(p, c.candidate.u0.as_ref()).into_iter().map(|(u, v)| frame.pt(u, v)).collect();
            let _ = writeln!(s, "<polyline points=\"{}\"><title>{p}</title></polyline>", pts.join(" "));
        }
        let _ = writeln!(s, "</g>");
    }

    let lx = WIDTH + 2.0 * MARGIN;
    let _ = writeln!(s, "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">");
    let _ = writeln!(s, "<text x=\"{lx:.2}\" y=\"{:.2}\" font-weight=\"bold\">{t}</text>", MARGIN);
    for (i, c) in cands.iter().enumerate() {
        let y = MARGIN + 20.0 * (i as f64 + 1.0);
        let colour = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            s,
            "<line x1=\"{lx:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{colour}\" stroke-width=\"2\"{}/>",
            y - 4.0,
            lx + 24.0,
            y - 4.0,
            style(c.candidate.kind)
        );
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{y:.2}\">R = {} (type {}, -chi/#s = {})</text>",
            lx + 30.0,
            c.invariants.slope,
            c.candidate.kind,
            c.invariants.chi_over_s
        );
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

fn num_gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
