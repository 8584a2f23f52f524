use std::process::{Command, Output};

use montesinos::Fraction;
use montesinos_cli::{parse_knot, slope_records, verdict, ParseError, SlopeRecord, CSV_HEADER};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_montesinos")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn grammar() {
    let a = parse_knot("K(-1/2,1/3,1/7)").unwrap();
    assert_eq!(a, parse_knot("-1/2, 1/3, 1/7").unwrap());
    assert_eq!(a, parse_knot("  K( -1/2 , 1/3,1/7 ) ").unwrap());
    assert_eq!(a, parse_knot("K(−1/2,1/3,1/7)").unwrap());
    assert_eq!(a, parse_knot("K(-2/4,1/3,1/7)").unwrap());
    assert_eq!(parse_knot("1/2,1/3"), Err(ParseError::TooFew(2)));
    assert_eq!(parse_knot("1/2,2,1/3"), Err(ParseError::Integral("2".into())));
    assert_eq!(parse_knot("1/2,4/2,1/3"), Err(ParseError::Integral("4/2".into())));
    assert!(matches!(parse_knot("1/2,1/x,1/3"), Err(ParseError::Malformed(_))));
    assert!(matches!(parse_knot("1/2,1/0,1/3"), Err(ParseError::Malformed(_))));
    assert!(matches!(parse_knot("1/2,,1/3"), Err(ParseError::Malformed(_))));
    assert!(matches!(parse_knot("1/2,1/3,1/2"), Err(ParseError::Link(_))));
    assert!(matches!(parse_knot("K(1/2,1/3,1/5"), Err(ParseError::Wrapper(_))));
    assert_eq!(parse_knot(""), Err(ParseError::Empty));

    let messages: Vec<String> = ["1/2,1/3", "1/2,2,1/3", "1/2,1/x,1/3", "1/2,1/3,1/2", "K(1/2,1/3,1/5", ""]
        .iter()
        .map(|s| parse_knot(s).unwrap_err().to_string())
        .collect();
    let mut uniq = messages.clone();
    uniq.sort();
    uniq.dedup();
    assert_eq!(uniq.len(), messages.len());
}

#[test]
fn print_then_parse_is_identity() {
    for s in ["K(-1/2,1/3,1/7)", "2/5, -3/7, 1/4", "K(1/3,1/3,1/3,-4/3)", "K(-7/2,11/9,1/5)"] {
        let t = parse_knot(s).unwrap();
        assert_eq!(parse_knot(&t.to_string()).unwrap(), t);
    }
}

fn records(knot: &str) -> Vec<SlopeRecord> {
    slope_records(&parse_knot(knot).unwrap(), None, false).unwrap()
}

#[test]
fn pretzel_rows() {
    let r = records("K(-1/2,1/3,1/7)");
    let rb = r.iter().find(|x| x.slope == "37/2").expect("37/2 present");
    assert_eq!((rb.sheets.as_str(), rb.boundary.as_deref()), ("4", Some("2")));
    assert!(r.len() >= 4);
    let r3 = records("K(-1/2,1/3,1/3)");
    assert!(r3.iter().any(|x| x.slope == "0/1"));
    assert!(r3.iter().any(|x| x.slope == "12/1"));
    let slopes: Vec<Fraction> = r.iter().map(|x| x.slope.parse().unwrap()).collect();
    assert!(slopes.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn slopes_output_is_deterministic() {
    for fmt in ["--json", "--csv", "--decimal"] {
        let a = bin(&["slopes", "K(2/5,-3/7,1/4)", fmt]);
        let b = bin(&["slopes", "K(2/5,-3/7,1/4)", fmt]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn json_and_csv_agree() {
    let json: Value = serde_json::from_str(&stdout(&bin(&["slopes", "-1/2,1/3,1/7", "--json"]))).unwrap();
    let csv_text = stdout(&bin(&["slopes", "-1/2,1/3,1/7", "--csv"]));
    let mut rd = csv::Reader::from_reader(csv_text.as_bytes());
    assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>(), CSV_HEADER.to_vec());
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    let arr = json.as_array().unwrap();
    assert_eq!(rows.len(), arr.len());
    for (row, obj) in rows.iter().zip(arr) {
        for (i, key) in CSV_HEADER.iter().enumerate() {
            let j = match &obj[*key] {
                Value::Null => String::new(),
                Value::String(s) => s.clone(),
                other => panic!("{key} serialized as {other}, not a string"),
            };
            assert_eq!(row.get(i).unwrap(), j, "{key}");
        }
        for key in ["slope", "twist", "chi_over_s", "rho"] {
            assert!(obj[key].as_str().unwrap().contains('/'), "{key} is not P/Q");
        }
    }
}

#[test]
fn decimal_column_is_extra() {
    let out = stdout(&bin(&["slopes", "-1/2,1/3,1/7", "--csv", "--decimal"]));
    let header = out.lines().next().unwrap();
    assert!(header.ends_with(",slope_decimal"));
    assert!(out.contains("37/2") && out.contains("18.500000"));
    let json: Value = serde_json::from_str(&stdout(&bin(&["slopes", "-1/2,1/3,1/7", "--json", "--decimal"]))).unwrap();
    assert!(json[0]["slope"].is_string() && json[0]["slope_decimal"].is_string());
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["verify", "K(-1/2,1/3,1/7)"]).status.code(), Some(0));
    assert_eq!(bin(&["verify", "K(-1/2,1/3)"]).status.code(), Some(1));
    assert_eq!(bin(&["slopes", "K(1/2,1/3,1/2)"]).status.code(), Some(1));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(bin(&["slopes", "K(-1/2,1/3,1/7)", "--json", "--csv"]).status.code(), Some(1));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    // a fractional reference twist makes Q miss #s
    assert_eq!(bin(&["verify", "K(-1/2,1/3,1/7)", "--seifert-twist", "1/2"]).status.code(), Some(3));
    assert_eq!(verdict(0, 0), 0);
    assert_eq!(verdict(1, 0), 2);
    assert_eq!(verdict(1, 5), 2);
    assert_eq!(verdict(0, 5), 3);
}

#[test]
fn verify_report_shape() {
    let o = bin(&["verify", "K(-1/2,1/3,1/3)"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exception_t"], "3");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert!(v["per_candidate"].as_array().unwrap().iter().any(|c| c["invariants"]["slope"] == "12/1"));
}

#[test]
fn sweeps() {
    let a = bin(&["verify", "--sweep", "--n", "3", "--max-den", "3", "--jobs", "1"]);
    let b = bin(&["verify", "--sweep", "--n", "3", "--max-den", "3", "--jobs", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let s: Value = serde_json::from_str(&stdout(&a)).unwrap();
    let full: Value =
        serde_json::from_str(&stdout(&bin(&["verify", "--sweep", "--n", "3", "--max-den", "3", "--no-canonicalize"])))
            .unwrap();
    assert!(full["knots"].as_u64().unwrap() > s["knots"].as_u64().unwrap());
    assert_eq!(full["violation_count"], 0);

    let four: Value = serde_json::from_str(&stdout(&bin(&["verify", "--sweep", "--n", "4", "--max-den", "3"]))).unwrap();
    assert_eq!(four["exceptional_knots"], 0);
    assert_eq!(four["violation_count"], 0);

    assert_eq!(bin(&["verify", "--sweep", "--n", "2"]).status.code(), Some(1));
    assert_eq!(bin(&["verify", "--sweep", "--jobs", "0"]).status.code(), Some(1));
}

#[test]
fn diagram() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.svg");
    let p2 = dir.path().join("b.svg");
    for p in [&p1, &p2] {
        let o = bin(&["diagram", "K(-1/2,1/3,1/7)", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let a = std::fs::read_to_string(&p1).unwrap();
    assert_eq!(a, std::fs::read_to_string(&p2).unwrap());
    assert!(a.starts_with("<?xml") && a.trim_end().ends_with("</svg>"));
    assert!(a.contains("version=\"1.1\""));
    assert!(a.matches("<g class=\"candidate").count() >= 4);
    assert!(a.contains("data-slope=\"37/2\""));
    assert!(a.contains("id=\"legend\""));

    let p3 = dir.path().join("c.svg");
    bin(&["diagram", "K(1/3,1/3,1/3)", "--out", p3.to_str().unwrap(), "--max-den-vertices", "3"]);
    let c = std::fs::read_to_string(&p3).unwrap();
    assert!(c.matches("<g class=\"candidate").count() >= 1);

    let bad = dir.path().join("missing").join("x.svg");
    assert_eq!(bin(&["diagram", "K(-1/2,1/3,1/7)", "--out", bad.to_str().unwrap()]).status.code(), Some(1));
}
