use kgroup::abelian::FgAbelianGroup;
use kgroup::galois::StructureReport;
use kgroup::kernel::{KTildeDescriptor, VerificationReport};
use kgroup_cli::{run, KGroupReport, KappaReport, RecoverReport, SnfReport, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("kgroup").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Parses the JSON output, re-serializes it and checks the second parse agrees.
fn round_trip<T: DeserializeOwned + Serialize + PartialEq + std::fmt::Debug>(args: &[&str]) -> T {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{err}");
    let x: T = serde_json::from_str(&out).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
    assert_eq!(x, again);
    x
}

#[test]
fn surface_json() {
    let r: StructureReport = round_trip(&["surface", "--family", "p2", "--k", "5", "--json"]);
    assert_eq!(r.projective_galois.as_abelian(), Some(&FgAbelianGroup::cyclic(5).power(23)));
    let (_, out, _) = call(&["surface", "--family", "p2", "--k", "5", "--json"]);
    let keys = [
        "\"family\"",
        "\"params\"",
        "\"degree\"",
        "\"divisibility\"",
        "\"affine_pi1\"",
        "\"affine_galois\"",
        "\"projective_galois\"",
        "\"h1_galois\"",
        "\"assumptions\"",
    ];
    let positions: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));

    for args in [
        &["surface", "--family", "quadric", "--a", "6", "--b", "9", "--json"][..],
        &["surface", "--family", "hirzebruch", "--e", "1", "--a", "5", "--b", "5", "--json"],
        &["surface", "--family", "cxp1", "--g", "2", "--d", "2", "--k", "3", "--json"],
        &["surface", "--family", "custom", "--n", "12", "--div", "4", "--json", "--known-trivial-caff"],
    ] {
        let _: StructureReport = round_trip(args);
    }
}

#[test]
fn other_reports_round_trip() {
    let k: KGroupReport = round_trip(&["kgroup", "--group", "d4", "--n", "3", "--json"]);
    assert_eq!(k.order, 8 * 8 * 8 / 4);
    assert_eq!(k.nilpotency_class, Some(2));
    let r: RecoverReport = round_trip(&["recover", "--gens", "(1 2); (1 2 3)", "--json"]);
    assert!(r.matches);
    assert_eq!(r.order, 6);
    let t: KTildeDescriptor = round_trip(&["ktilde", "--torsion", "3", "--rank", "0", "--n", "4", "--json"]);
    assert!(t.exact_iso.is_some());
    let v: VerificationReport = round_trip(&["verify-snd", "--n", "5", "--d", "1", "--json"]);
    assert!(v.all_identity);
    let s: SnfReport = round_trip(&["snf", "--matrix", "2,4;6,8", "--json"]);
    assert_eq!(s.diagonal.len(), 2);
    let k: KappaReport = round_trip(&["kappa", "--d", "4", "--t", "2", "--m", "3", "--json"]);
    assert_eq!(k.kernel.order(), Some(32.into()));
}

#[test]
fn text_examples() {
    let (code, out, _) = call(&["snf", "--matrix", "2,4;6,8"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some("diag(2,4)"));
    let (code, out, _) = call(&["snf", "--matrix", "-3,0; 0,0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("diag(3,0)"));

    let (code, out, _) = call(&["verify-snd", "--n", "5", "--d", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().starts_with("all 0 failures / "));
    assert!(out.trim_end().ends_with(" relators"));

    let (_, out, _) = call(&["surface", "--family", "cxp1", "--g", "1", "--d", "1", "--k", "3"]);
    assert!(out.contains("H1 of the projective quotient: Z^10"));
    assert!(out.contains("    ker kappa_{n-1}: 1"));
    assert!(out.contains("assumption: C^aff assumed trivial"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &[],
        &["surface", "--family", "torus", "--k", "5"],
        &["surface", "--family", "p2"],
        &["surface", "--family", "p2", "--k", "4"],
        &["surface", "--family", "p2", "--k", "5", "--a", "3"],
        &["surface", "--family", "custom", "--n", "10", "--div", "3"],
        &["surface", "--family", "p2", "--k", "five"],
        &["snf", "--matrix", "1,2;3"],
        &["snf", "--matrix", "1,x"],
        &["kgroup", "--group", "nonsense"],
        &["kgroup", "--group", "s3", "--n", "2"],
        &["kgroup", "--gens", "(1 2"],
        &["kgroup", "--group", "s3", "--gens", "(1 2)"],
        &["verify-snd", "--n", "4", "--d", "1"],
        &["verify-snd", "--n", "7", "--d", "1"],
        &["verify-snd", "--n", "5", "--d", "0"],
        &["kappa", "--d", "4", "--t", "3", "--m", "2"],
        &["kappa", "--d", "0", "--t", "1", "--m", "2"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn computational_failures_exit_1() {
    let (code, _, err) = call(&["kgroup", "--group", "s4", "--n", "4", "--cap", "500"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.contains("cap"));
    let (code, _, _) = call(&["recover", "--group", "s3", "--cap", "10"]);
    assert_eq!(code, EXIT_FAILURE);
    let (code, _, _) = call(&["snf", "--matrix", "1", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(code, EXIT_FAILURE);
}

#[test]
fn small_n_is_allowed_on_request() {
    let (code, out, _) = call(&["verify-snd", "--n", "4", "--d", "2", "--allow-small-n"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("relators"));
    let (code, _, _) = call(&["verify-snd", "--n", "7", "--d", "1", "--sigma-first", "20"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn help_and_out_file() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("surface"));
    let path = std::env::temp_dir().join(format!("kgroup-cli-test-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["kappa", "--d", "3", "--t", "3", "--m", "2", "--json", "--out", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let r: KappaReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.kernel, FgAbelianGroup::cyclic(3));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn hirzebruch_warning_goes_to_stderr() {
    let (code, out, err) = call(&["surface", "--family", "hirzebruch", "--e", "0", "--a", "3", "--b", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.starts_with("warning:"));
    assert!(out.contains("projective Galois quotient: 1\n"));
}
