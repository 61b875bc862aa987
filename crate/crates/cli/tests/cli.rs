//! End-to-end tests of the binary: exit codes, report schema, file formats.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use jjalg::catalog::{self, build_a26, phi_matrix};
use jjalg::field::Field;
use jjalg::fileformat::{export_algebra, export_matrix, parse_algebra};
use jjalg::fingerprint::fingerprint;
use jjalg_cli::report::Report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jjalg"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn machine(args: &[&str]) -> (Report, Output) {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    let out = run(&full);
    let report: Report = serde_json::from_str(&stdout(&out)).expect("valid report JSON");
    (report, out)
}

fn write_entry(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{}.alg", name.replace(['{', '}', ','], "_")));
    let a = &catalog::get(name).unwrap().algebra;
    std::fs::write(&path, export_algebra(a)).unwrap();
    path
}

#[test]
fn check_exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let na5 = write_entry(dir.path(), "A_{NA,5}");
    let out = run(&["check", na5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Jacobi-Jordan algebra"));

    let sut = write_entry(dir.path(), "Suttles");
    let out = run(&["check", sut.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "negative verdict exits 1");
    let text = stdout(&out);
    assert!(text.contains("not a Jacobi-Jordan algebra"));
    assert!(text.contains("nilindex"));

    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "dim 2\nchar 0\ne1*e9 = e1\n").unwrap();
    let out = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "input error exits 2");

    let out = run(&["check", dir.path().join("missing.alg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn machine_reports_round_trip_and_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_entry(dir.path(), "A_{1,4}");
    let (report, out) = machine(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report.schema_version, 1);
    assert_eq!(report.command, "check");
    // Lossless round trip.
    let json = serde_json::to_string(&report).unwrap();
    let back: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
    // Determinism under a fixed seed.
    let again = run(&["--format", "machine", "check", path.to_str().unwrap()]);
    assert_eq!(stdout(&out), stdout(&again));
}

#[test]
fn check_a16_reports_associator_witness() {
    let dir = tempfile::tempdir().unwrap();
    let a16 = write_entry(dir.path(), "A_{1,6}");
    let out = run(&["check", a16.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("jacobi             yes"));
    assert!(text.contains("associative        no  [(e1, e3, e3)]"));
}

#[test]
fn invariants_dumps_fingerprint() {
    let dir = tempfile::tempdir().unwrap();
    let na5 = write_entry(dir.path(), "A_{NA,5}");
    let (report, out) = machine(&["invariants", na5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let chain = report.items.iter().find(|i| i.name == "power-chain").unwrap();
    assert_eq!(chain.value, "(5, 3, 1, 0)");
    let ann = report.items.iter().find(|i| i.name == "annihilator-dim").unwrap();
    assert_eq!(ann.value, "1");
}

#[test]
fn catalog_list_shows_dimension_two() {
    let out = run(&["catalog", "list", "--dim", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("A_{0,1}+A_{0,1}"));
    assert!(text.contains("A_{1,2}"));
    assert!(text.contains("2 entries"));
}

#[test]
fn compare_separates_and_reports_undetermined() {
    let dir = tempfile::tempdir().unwrap();
    let a14 = write_entry(dir.path(), "A_{1,4}");
    let a24 = write_entry(dir.path(), "A_{2,4}");
    let out = run(&["compare", a14.to_str().unwrap(), a24.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("distinct over any extension field"));

    // The known dimension-5 fingerprint collision.
    let a35 = write_entry(dir.path(), "A_{3,5}");
    let sum = write_entry(dir.path(), "A_{1,2}+A_{1,3}");
    let out = run(&["compare", a35.to_str().unwrap(), sum.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("undetermined by invariants"));
}

#[test]
fn quotient_reproduces_catalog_entry_up_to_labeling() {
    let (report, out) = machine(&["quotient", "(xy,yz,z^2,y^2-xz,x^3)"]);
    assert_eq!(out.status.code(), Some(0));
    let gb = report
        .items
        .iter()
        .find(|i| i.name == "groebner-basis")
        .unwrap();
    assert_eq!(gb.value, "{x^3, x*y, x*z - y^2, y^3, y*z, z^2}");
    let artifact = report.artifact.as_ref().expect("algebra file emitted");
    let a = parse_algebra(artifact).unwrap();
    // Same isomorphism class as the catalog entry, presented on the
    // standard-monomial basis (x, y, z, x^2, y^2), so compare by
    // fingerprint rather than literal table.
    let cat = &catalog::get("A_{2,5}").unwrap().algebra;
    assert_eq!(
        fingerprint(&a).unwrap(),
        fingerprint(cat).unwrap(),
        "quotient output matches A_{{2,5}} invariants"
    );
}

#[test]
fn quotient_rejects_unknown_order_and_bad_vars() {
    let out = run(&["quotient", "(x)", "--order", "grevlex"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["quotient", "(x,q)^2", "--vars", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quotient_accepts_custom_variable_precedence() {
    let (report, out) = machine(&["quotient", "(a,b)^3", "--vars", "a,b"]);
    assert_eq!(out.status.code(), Some(0));
    let vars = report.items.iter().find(|i| i.name == "variables").unwrap();
    assert_eq!(vars.value, "a,b");
    let dim = report.items.iter().find(|i| i.name == "algebra-dim").unwrap();
    assert_eq!(dim.value, "5", "(a,b)^3 cuts out the same rank-6 local ring");
}

#[test]
fn catalog_verify_and_export_round_trip() {
    let out = run(&["catalog", "verify", "--dim", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all entries match"));

    let (report, out) = machine(&["catalog", "export", "A_{7,5}"]);
    assert_eq!(out.status.code(), Some(0));
    let artifact = report.artifact.as_ref().unwrap();
    let a = parse_algebra(artifact).unwrap();
    assert_eq!(&a, &catalog::get("A_{7,5}").unwrap().algebra);

    let out = run(&["catalog", "export", "A_{9,9}"]);
    assert_eq!(out.status.code(), Some(2), "unknown entry is an input error");
}

#[test]
fn catalog_verify_reports_dim6_collision() {
    let out = run(&["catalog", "verify", "--dim", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("A_{2,6}(0,1) vs A_{2,6}(1,0)"),
        "the undetermined pair is recorded: {text}"
    );
}

#[test]
fn iso_verify_accepts_phi() {
    let dir = tempfile::tempdir().unwrap();
    let f = Field::rationals();
    let a10 = build_a26(f, &f.integer(1), &f.zero());
    let a20 = build_a26(f, &f.integer(2), &f.zero());
    let pa = dir.path().join("a10.alg");
    let pb = dir.path().join("a20.alg");
    std::fs::write(&pa, export_algebra(&a10)).unwrap();
    std::fs::write(&pb, export_algebra(&a20)).unwrap();
    let phi = phi_matrix(f, &f.integer(2)).unwrap();
    let pm = dir.path().join("phi.mat");
    std::fs::write(&pm, export_matrix(phi.matrix())).unwrap();

    let out = run(&[
        "iso-verify",
        pm.to_str().unwrap(),
        pa.to_str().unwrap(),
        pb.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("homomorphism  yes"));
    assert!(text.contains("determinant   2"));

    // Wrong direction: not a homomorphism, exit 1.
    let out = run(&[
        "iso-verify",
        pm.to_str().unwrap(),
        pb.to_str().unwrap(),
        pa.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn normalize5_outputs_normal_form_and_rejects_associative() {
    let dir = tempfile::tempdir().unwrap();
    // A seeded base change of the normal form.
    use jjalg::matrix::Matrix;
    use jjalg::morphism::{conjugate, LinearMap};
    use jjalg::normalize5::normal_form_dim5;
    use rand::SeedableRng;
    let f = Field::rationals();
    let normal = normal_form_dim5(f);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
    let p = LinearMap::new(Matrix::random_invertible(f, 5, &mut rng));
    let twisted = conjugate(&normal, &p).unwrap();
    let path = dir.path().join("twisted.alg");
    std::fs::write(&path, export_algebra(&twisted)).unwrap();

    let (report, out) = machine(&["normalize5", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let artifact = report.artifact.as_ref().unwrap();
    assert_eq!(parse_algebra(artifact).unwrap(), normal);
    assert!(report
        .items
        .iter()
        .any(|i| i.name == "relation" && i.value.contains("4*beta = -gamma^2")));

    // Associative input: A^3 = 0 is a negative verdict, not a crash.
    let a15 = write_entry(dir.path(), "A_{1,5}");
    let out = run(&["normalize5", a15.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("A^3 = 0"));
}

#[test]
fn field_flag_reinterprets_mod_p() {
    let dir = tempfile::tempdir().unwrap();
    let a75 = write_entry(dir.path(), "A_{7,5}");
    // 1/2 becomes 3 mod 5; the checks still pass.
    let out = run(&["check", a75.to_str().unwrap(), "--field", "fp:5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("characteristic     5"));
    let out = run(&["check", a75.to_str().unwrap(), "--field", "fp:4"]);
    assert_eq!(out.status.code(), Some(2), "composite characteristic rejected");
}

#[test]
fn seed_flag_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_entry(dir.path(), "A_{1,2}");
    let (report, _) = machine(&["--seed", "99", "check", path.to_str().unwrap()]);
    assert_eq!(report.seed, 99);
}
