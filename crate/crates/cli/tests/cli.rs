use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use xmlift_cli::{Report, Value};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn xmlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xmlift"))
        .args(args)
        .output()
        .expect("run xmlift")
}

/// Writes `text` to a scratch fixture and runs `command` on it.
fn run_text(tag: &str, command: &str, text: &str) -> Output {
    let path = std::env::temp_dir().join(format!("xmlift-cli-{}-{tag}.xmf", std::process::id()));
    std::fs::File::create(&path)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    let out = xmlift(&[command, "--fixture", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    out
}

fn machine(command: &str, name: &str) -> Report {
    let out = xmlift(&[command, "--fixture", &fixture(name), "--format", "machine"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    Report::from_machine(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn text(r: &Report, key: &str) -> String {
    match r.get(key) {
        Some(Value::Text(t)) => t.clone(),
        other => panic!("{key}: {other:?}"),
    }
}

#[test]
fn derivations_of_mod_two_fixture() {
    let r = machine("derivations", "z4_mod2.xmf");
    assert_eq!(text(&r, "xm.derivations"), "2");
    match r.get("xm.units") {
        Some(Value::Indices { values, .. }) => assert_eq!(values, &[0, 1]),
        other => panic!("{other:?}"),
    }
    match r.get("xm.product") {
        Some(Value::Table(rows)) => {
            assert_eq!(rows, &[vec![Some(0), Some(1)], vec![Some(1), Some(0)]])
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn liftings_of_mod_two_fixture() {
    let r = machine("liftings", "z4_mod2.xmf");
    assert_eq!(text(&r, "xm.liftings"), "2");
}

#[test]
fn seed_catalog_lists_crossed_modules() {
    let out = xmlift(&["--seed-catalog"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    for name in ["a3-in-s3", "aut-z3", "aut-s3", "aut-klein", "z4-mod2"] {
        assert!(stdout.contains(&format!("xmod.{name}")), "{name}");
    }
}

#[test]
fn exit_codes_by_error_category() {
    let code = |o: Output| o.status.code().unwrap();
    assert_eq!(code(run_text("syntax", "check", "G group Z2\n")), 3);
    assert_eq!(code(run_text("unres", "check", "h : hom G identity\n")), 4);
    assert_eq!(
        code(run_text(
            "invalid",
            "check",
            "Z2 : group Z2\nZ3 : group Z3\nh : hom Z3 -> Z2 = 0 1 1\n"
        )),
        5
    );
    assert_eq!(
        code(xmlift(&[
            "frobnicate",
            "--fixture",
            &fixture("z4_mod2.xmf")
        ])),
        6
    );
    assert_eq!(
        code(xmlift(&["check", "--fixture", "/nonexistent/x.xmf"])),
        8
    );
}

#[test]
fn errors_name_the_line() {
    let out = run_text("line", "check", "Z2 : group Z2\n\nh : hom Q identity\n");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 3"), "{stderr}");
    assert!(stderr.contains("`Q`"), "{stderr}");
}

#[test]
fn formats_agree() {
    let human = xmlift(&["whitehead", "--fixture", &fixture("a3_in_s3.xmf")]);
    let r = machine("whitehead", "a3_in_s3.xmf");
    assert_eq!(String::from_utf8(human.stdout).unwrap(), r.to_human());
}
