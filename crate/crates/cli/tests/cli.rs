use std::io::Write;
use std::process::{Command, Stdio};

use resultant_cli::*;
use resultant_core::bezoutian::PolySystem;
use resultant_core::macaulay::build_assembly;
use resultant_core::ring::ParamPoly;

const X1_X2_X3SQ: &str = r#"{"degrees":[1,1,2],"mode":"integer","polys":[
    [{"c":"1","e":[1,0,0]}],
    [{"c":"1","e":[0,1,0]}],
    [{"c":"1","e":[0,0,2]}]]}"#;

fn run_bin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_resultant"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn parses_generic_and_integer_documents() {
    let doc = parse_input(br#"{"degrees":[1,1,2],"mode":"generic"}"#).unwrap();
    assert_eq!(doc.mode, Mode::Generic);
    match doc.system().unwrap() {
        System::Generic(s) => assert_eq!(s.polys().len(), 3),
        other => panic!("unexpected {:?}", other),
    }
    let doc = parse_input(X1_X2_X3SQ.as_bytes()).unwrap();
    assert_eq!(doc.degrees, vec![1, 1, 2]);
    assert!(matches!(doc.system().unwrap(), System::Integer(_)));
}

#[test]
fn rejects_bad_documents_with_field_paths() {
    let wrong_degree = br#"{"degrees":[1,1,2],"mode":"integer","polys":[[{"c":"1","e":[1,0,0]}],[{"c":"1","e":[0,2,0]}],[]]}"#;
    let e = parse_input(wrong_degree).unwrap_err();
    assert!(e.to_string().contains("polys[1][0].e"), "{}", e);
    assert_eq!(e.exit_code(), 1);

    let bad_coeff = br#"{"degrees":[1],"mode":"integer","polys":[[{"c":"1/2","e":[1]}]]}"#;
    assert!(parse_input(bad_coeff).unwrap_err().to_string().contains("polys[0][0].c"));
    let rational = br#"{"degrees":[1],"mode":"rational","polys":[[{"c":"1/2","e":[1]}]]}"#;
    assert!(parse_input(rational).is_ok());

    assert!(parse_input(br#"{"degrees":[1,1],"mode":"complex"}"#).is_err());
    assert!(parse_input(br#"{"degrees":[1,1],"n":3}"#).unwrap_err().to_string().contains("n:"));
    assert!(parse_input(br#"{"degrees":[0,1]}"#).is_err());
    assert!(parse_input(b"{not json").is_err());
}

#[test]
fn sizes_reproduce_table_rows() {
    for (degrees, min, classical) in [(vec![2, 3, 4, 5], 90, 364), (vec![10, 70], 70, 80)] {
        let out = cmd_sizes(&[degrees]).unwrap();
        let Payload::Sizes { rows } = out.result else { panic!() };
        assert_eq!((rows[0].min_size, rows[0].classical_size), (min, classical));
    }
}

#[test]
fn resultant_of_coordinate_system_is_one() {
    let doc = parse_input(X1_X2_X3SQ.as_bytes()).unwrap();
    let out = cmd_resultant(&doc, &Flags::default()).unwrap();
    let Payload::Resultant { value, .. } = &out.result else { panic!() };
    assert_eq!(value, "1");
    assert_eq!(out.t, Some(0));
}

#[test]
fn flags_override_document_options() {
    let doc = parse_input(br#"{"degrees":[2,2],"t":3,"options":{"normalize_sign":false}}"#).unwrap();
    let out = cmd_resultant(&doc, &Flags::default()).unwrap();
    assert_eq!(out.t, Some(3));
    let Payload::Resultant { normalized, .. } = out.result else { panic!() };
    assert!(!normalized);
    let out = cmd_resultant(&doc, &Flags { t: Some(1), normalize_sign: Some(true), max_symbolic_size: None }).unwrap();
    assert_eq!(out.t, Some(1));

    let big = parse_input(br#"{"degrees":[2,2,2]}"#).unwrap();
    let e = cmd_resultant(&big, &Flags { max_symbolic_size: Some(4), ..Flags::default() }).unwrap_err();
    assert_eq!(e.exit_code(), 1);
}

#[test]
fn json_output_round_trips() {
    let doc = parse_input(br#"{"degrees":[1,1,2]}"#).unwrap();
    let out = cmd_matrix(&doc, Some(2)).unwrap();
    let back = parse_output(&out.to_json()).unwrap();
    assert_eq!(back, out);

    // Entries and labels are re-readable and reproduce the assembly.
    let asm = build_assembly(&PolySystem::generic(vec![1, 1, 2]).unwrap(), 2).unwrap();
    let Payload::Matrix { rows, cols, entries, .. } = back.result else { panic!() };
    for (r, label) in rows.iter().enumerate() {
        assert_eq!(parse_label(label).as_ref(), Some(&asm.matrix.row_labels[r]));
        for (c, e) in entries[r].iter().enumerate() {
            assert_eq!(&e.parse::<ParamPoly>().unwrap(), asm.matrix.matrix.get(r, c));
        }
    }
    for (c, label) in cols.iter().enumerate() {
        assert_eq!(parse_label(label).as_ref(), Some(&asm.matrix.col_labels[c]));
    }

    let res = cmd_resultant(&doc, &Flags::default()).unwrap();
    let back = parse_output(&res.to_json()).unwrap();
    let Payload::Resultant { value, .. } = &back.result else { panic!() };
    assert_eq!(value.parse::<ParamPoly>().unwrap().to_string(), *value);
}

#[test]
fn bezoutian_and_gcp_commands() {
    let doc = parse_input(X1_X2_X3SQ.as_bytes()).unwrap();
    let out = cmd_bezoutian(&doc, None).unwrap();
    let Payload::Bezoutian { delta, slices, .. } = &out.result else { panic!() };
    // Delta = X3 + Y3 for (X1, X2, X3^2).
    assert_eq!(delta.len(), 2);
    assert_eq!(slices.len(), 3);

    let gcp_doc = parse_input(br#"{"degrees":[2,2],"mode":"integer","polys":[[{"c":"1","e":[1,1]}],[{"c":"1","e":[2,0]}]]}"#).unwrap();
    let out = cmd_gcp(&gcp_doc, None).unwrap();
    assert_eq!(out.t, Some(3));
    let Payload::Gcp { normalized, lowest_degree, .. } = &out.result else { panic!() };
    assert_eq!(normalized[0], "0");
    assert_eq!(*lowest_degree, Some(1));
    assert_eq!(cmd_gcp(&parse_input(br#"{"degrees":[2,2]}"#).unwrap(), None).unwrap_err().exit_code(), 1);
}

#[test]
fn binary_is_deterministic_and_uses_exit_codes() {
    let a = run_bin(&["resultant", "--format", "json"], X1_X2_X3SQ);
    let b = run_bin(&["resultant", "--format", "json"], X1_X2_X3SQ);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let generic = r#"{"degrees":[1,2,2]}"#;
    assert_eq!(run_bin(&["matrix"], generic).1, run_bin(&["matrix"], generic).1);

    assert_eq!(run_bin(&["resultant"], "{").0, 1);
    assert_eq!(run_bin(&["frobnicate"], "").0, 1);
    assert_eq!(run_bin(&["sizes", "--degrees", "2,3,4,5"], "").0, 0);

    // A rank-deficient linear system has a common root and resultant 0.
    let dependent = r#"{"degrees":[1,1,1],"mode":"integer","polys":[
        [{"c":"1","e":[1,0,0]}],[{"c":"1","e":[1,0,0]}],[{"c":"1","e":[0,1,0]}]]}"#;
    let (code, stdout, _) = run_bin(&["resultant"], dependent);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("value: 0\n"));

    // (1, 2, 5) has no determinantal degree, so the zero system makes every
    // extraneous factor vanish.
    let (code, _, stderr) = run_bin(&["resultant"], r#"{"degrees":[1,2,5],"mode":"integer","polys":[[],[],[]]}"#);
    assert_eq!(code, 2);
    assert!(stderr.contains("degenerate"));

    let (code, stdout, _) = run_bin(&["verify", "4"], "");
    assert_eq!(code, 0);
    assert!(stdout.contains("[PASS]"));
    let (code, _, _) = run_bin(&["verify", "10"], "");
    assert_eq!(code, EXIT_VERIFY_FAILED);
}
