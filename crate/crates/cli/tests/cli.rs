use std::process::Command;

use skeinlab::algebra::EvalPoint;
use skeinlab::diagrams::{borromean_fixture, hopf_fixture, LinkFile};
use skeinlab::wrt::ArithMode;
use skeinlab_cli::{
    cmd_bracket, cmd_colored_bracket, cmd_recoupling, cmd_report, cmd_verify_paper, cmd_wrt, Config, Fixture,
    OutputFormat, Source, Status,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skeinlab"))
}

fn fixture(f: Fixture) -> Source<'static> {
    Source::Fixture(f)
}

#[test]
fn bracket_examples() {
    let cfg = Config::default();
    assert_eq!(cmd_bracket(&fixture(Fixture::Unknot), true, &cfg).unwrap(), "-A^2 - A^-2\n");
    assert_eq!(
        cmd_bracket(&fixture(Fixture::Hopf), true, &cfg).unwrap(),
        "A^6 + A^2 + A^-2 + A^-6\n"
    );
    let dir = tempdir();
    let empty = dir.join("empty.json");
    std::fs::write(&empty, r#"{"crossings":[]}"#).unwrap();
    assert_eq!(cmd_bracket(&Source::File(&empty), false, &cfg).unwrap(), "1\n");
}

#[test]
fn oracle_respects_the_crossing_cap() {
    let cfg = Config {
        crossing_cap: 4,
        ..Config::default()
    };
    let err = cmd_bracket(&fixture(Fixture::Borromean), true, &cfg).unwrap_err();
    assert!(err.to_string().starts_with("E_TOO_LARGE"));
    assert!(cmd_bracket(&fixture(Fixture::Borromean), false, &cfg).is_ok());
}

#[test]
fn colored_brackets() {
    let cfg = Config::default();
    let out = cmd_colored_bracket(&fixture(Fixture::Unknot), Some(&[2]), None, &cfg).unwrap();
    assert!(out.contains("bracket: A^4 + 1 + A^-4"), "{out}");
    let out = cmd_colored_bracket(&fixture(Fixture::Hopf), Some(&[1, 1]), Some(EvalPoint::plus(2)), &cfg).unwrap();
    assert!(out.contains("point: d=2 (+)"));
    let capped = Config {
        jw_cap: 2,
        ..Config::default()
    };
    let err = cmd_colored_bracket(&fixture(Fixture::Unknot), Some(&[3]), None, &capped).unwrap_err();
    assert!(err.to_string().starts_with("E_PRECONDITION"));
    let err = cmd_colored_bracket(&fixture(Fixture::Hopf), Some(&[1]), None, &cfg).unwrap_err();
    assert!(err.to_string().starts_with("E_COMPONENTS"), "{err}");
}

#[test]
fn wrt_outputs() {
    let cfg = Config::default();
    let out = cmd_wrt(&fixture(Fixture::Borromean), 1, EvalPoint::minus(2), &cfg).unwrap();
    assert!(out.contains("mode: exact") && out.contains("value: 1\n"), "{out}");
    let json = Config {
        output_format: Some(OutputFormat::Json),
        ..Config::default()
    };
    let out = cmd_wrt(&fixture(Fixture::Hopf), 0, EvalPoint::plus(2), &json).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mode"], "float");
    assert_eq!(v["value_re"], "0.850650808352039932181540497063");
    assert_eq!(v["value_im"], "0.000000000000000000000000000000");
}

#[test]
fn wrt_from_a_file() {
    // the torus presentation written out and read back
    let pres = skeinlab::wrt::torus_presentation(2);
    let dir = tempdir();
    let path = dir.join("torus.json");
    std::fs::write(&path, LinkFile::from_presentation(&pres).to_json()).unwrap();
    let out = cmd_wrt(&Source::File(&path), 0, EvalPoint::plus(3), &Config::default()).unwrap();
    assert!(out.contains("presentation: torus") && out.contains("value: 2\n"), "{out}");
}

#[test]
fn recoupling_table() {
    let out = cmd_recoupling(EvalPoint::plus(2), 1, &Config::default()).unwrap();
    assert!(out.contains("eta: 0.850650808352039932181540497063"));
    assert!(out.contains("| 1 | -A^2 - A^-2 | -A^4 - A^-4 |"));
    assert!(out.ends_with("sum: 1\n"));
    assert!(cmd_recoupling(EvalPoint::plus(2), 3, &Config::default()).is_err());
}

#[test]
fn report_formats() {
    let cfg = Config {
        d_window: Some(1..=5),
        ..Config::default()
    };
    let (csv, pass) = cmd_report(&cfg).unwrap();
    assert!(pass);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "quantity,d,sign,value_re,value_im,prediction,mode,status");
    assert_eq!(lines.len(), 1 + 5 * 5 * 2);
    for q in ["empty", "K1", "K2", "ratio", "f"] {
        for s in ["+", "-"] {
            let n = lines[1..]
                .iter()
                .filter(|l| l.starts_with(&format!("{q},")) && l.split(',').nth(2) == Some(s))
                .count();
            assert_eq!(n, 5, "{q} {s}");
        }
    }
    let (md, _) = cmd_report(&Config {
        output_format: Some(OutputFormat::Md),
        ..cfg.clone()
    })
    .unwrap();
    assert!(md.starts_with("| quantity | d | sign |"));
    assert_eq!(md.lines().count(), 2 + 50);
    let (json, _) = cmd_report(&Config {
        output_format: Some(OutputFormat::Json),
        ..cfg
    })
    .unwrap();
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 50);
    let keys: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
    for r in &rows {
        assert_eq!(r.as_object().unwrap().keys().collect::<Vec<_>>(), keys);
    }
}

#[test]
fn verify_subsets_and_skips() {
    let cfg = Config {
        d_window: Some(1..=3),
        ..Config::default()
    };
    let small = cmd_verify_paper(&cfg).unwrap();
    assert!(small.all_pass());
    let full = cmd_verify_paper(&Config::default()).unwrap();
    assert!(full.all_pass());
    assert!(small.checks.len() < full.checks.len());
    let exact = Config {
        mode: Some(ArithMode::Exact),
        ..cfg
    };
    let r = cmd_verify_paper(&exact).unwrap();
    assert!(r.all_pass());
    let skipped: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Skipped).collect();
    assert!(!skipped.is_empty());
    assert!(skipped.iter().all(|c| c.got.starts_with("E_ETA_ODD_POWER")));
}

#[test]
fn fixtures_round_trip_through_json() {
    for link in [borromean_fixture(), hopf_fixture()] {
        let file = LinkFile::from_link(&link);
        let back = LinkFile::parse(&file.to_json()).unwrap().link().unwrap();
        assert_eq!(back.diagram(), link.diagram());
        assert_eq!(back.component_groups(), link.component_groups());
    }
}

#[test]
fn exit_codes() {
    let ok = bin().args(["verify-paper", "--window", "1..2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let err = bin().args(["wrt", "--d", "2"]).output().unwrap();
    assert_eq!(err.status.code(), Some(2));
    let err = bin().args(["report", "--precision", "5"]).output().unwrap();
    assert_eq!(err.status.code(), Some(2));
    let err = bin().args(["bracket", "/nonexistent.json"]).output().unwrap();
    assert_eq!(err.status.code(), Some(2));
    let bad = bin().args(["verify-paper"]).env("SKEINLAB_THREADS", "zero").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let one = bin()
        .args(["wrt", "--fixture", "borromean", "--d", "2", "--color", "2"])
        .env("SKEINLAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&one.stdout).contains("value: 1\n"));
}

#[test]
fn sign_flag() {
    let out = bin()
        .args(["wrt", "--fixture", "borromean", "--d", "3", "--sign", "-", "--color", "0"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("point: d=3 (-)") && text.contains("value: 3\n"), "{text}");
}

fn tempdir() -> std::path::PathBuf {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static N: AtomicUsize = AtomicUsize::new(0);
    let dir = std::env::temp_dir().join(format!(
        "skeinlab-cli-{}-{}",
        std::process::id(),
        N.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
