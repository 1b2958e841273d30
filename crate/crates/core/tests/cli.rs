use std::process::{Command, Output};

use valuate::cli::{FactorReport, Report, EXIT_INVALID, EXIT_OK, EXIT_PARSE, EXIT_UNKNOWN};
use valuate::valuation::{AtomSet, Property, Tri};

fn valuate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_valuate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn antimatter_text() {
    let o = valuate(&["classify", "x^2+x-1"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).contains("ANTIMATTER (certificate: 1 = α² + α)"));
}

#[test]
fn json_report_round_trips() {
    let o = valuate(&["classify", "--json", "x^2-x-1"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.rank, 2);
    assert!(r.verdicts.values().all(|t| *t == Tri::Yes));
    assert_eq!(r.atoms, AtomSet::FinitePowers { up_to: 1 });
    assert_eq!(
        serde_json::from_str::<Report>(&serde_json::to_string(&r).unwrap()).unwrap(),
        r
    );
}

#[test]
fn negative_leading_input_and_rationals() {
    let o = valuate(&["classify", "--json", "rational:2/3"]);
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.verdicts[&Property::Accp], Tri::No);
    let o = valuate(&["atoms", "-x^2+x+1"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).contains("atoms: {1, α}"));
}

#[test]
fn factor_three_halves() {
    let o = valuate(&["factor", "--json", "rational:3/2", "3"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let r: FactorReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.lengths, vec![2, 3]);
    assert!(r.factorizations.complete);
}

#[test]
fn factor_below_one_is_incomplete() {
    let o = valuate(&["factor", "--exponent-cap", "4", "rational:2/3", "1"]);
    assert_eq!(o.status.code(), Some(EXIT_UNKNOWN));
    assert!(stdout(&o).contains("incomplete"));
}

#[test]
fn group_check_text() {
    let o = valuate(&["group-check", "x^2-x+1"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).starts_with("GROUP: N₀[β] = Z[β], multiplier φ = x + 1"));
}

#[test]
fn family_and_iso() {
    let o = valuate(&["family", "ohfm", "--d", "3", "--param", "2"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let o = valuate(&["iso", "rational:2", "rational:3"]);
    assert!(stdout(&o).contains('≅'));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(
        valuate(&["classify", "x^^2"]).status.code(),
        Some(EXIT_PARSE)
    );
    assert_eq!(
        valuate(&["classify", "x^2-1"]).status.code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(
        valuate(&["classify", "x^2+1"]).status.code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(
        valuate(&["classify", "--root", "index:5", "x^2-3x+1"])
            .status
            .code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(
        valuate(&["family", "ohfm", "--d", "3", "--param", "4"])
            .status
            .code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(valuate(&["bogus"]).status.code(), Some(EXIT_PARSE));
}
