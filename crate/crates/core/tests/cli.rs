// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;
use torus_weyl::acceptance::{harper, random_operator, random_trig_polynomial};
use torus_weyl::dequantize::pauli;
use torus_weyl::io::JsonArtifact;
use torus_weyl::quantize::{quantize_fourier, quantize_sampled};
use torus_weyl::symbols::sample;
use torus_weyl::{
    max_abs_diff, Complex64, Operator, Representation, SampledSymbol, State, TrigPolynomial,
    WignerTable,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_torus-weyl"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn put<T: JsonArtifact>(dir: &TempDir, name: &str, value: &T) -> PathBuf {
    let path = dir.path().join(name);
    value.write(&path).unwrap();
    path
}

fn put_text(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

#[test]
fn quantize_alpha_z_gives_sigma_z() {
    let dir = TempDir::new().unwrap();
    let sym = put(&dir, "az.json", &TrigPolynomial::monomial(1, 0, one()));
    let out = dir.path().join("op.json");
    let o = run(&["quantize", s(&sym), "--n", "2", "-o", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let op = Operator::read(&out).unwrap();
    let z = pauli(&Representation::untwisted(2).unwrap()).unwrap().z;
    assert!(op.max_abs_diff(&z) < 1e-15);
}

#[test]
fn quantize_constant_gives_identity() {
    let dir = TempDir::new().unwrap();
    let sym = put(&dir, "one.json", &TrigPolynomial::constant(one()));
    let o = run(&[
        "quantize",
        s(&sym),
        "--n",
        "3",
        "--theta1",
        "0.3",
        "--theta2",
        "-0.2",
    ]);
    assert_eq!(code(&o), 0);
    let op = Operator::from_json(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert!(op.max_abs_diff(&Operator::identity(3)) < 1e-15);
}

#[test]
fn quantize_sampled_route_reads_theta_and_n_from_the_file() {
    let dir = TempDir::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let rep = Representation::new(0.25, 0.5, 3).unwrap();
    let sym = SampledSymbol::random(rep, &mut rng);
    let path = put(&dir, "sym.json", &sym);
    let o = run(&["quantize", s(&path), "--route", "sampled"]);
    assert_eq!(code(&o), 0);
    let op = Operator::from_json(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(op, quantize_sampled(&sym));

    // agreeing flags are fine, contradicting ones are dimension errors
    assert_eq!(
        code(&run(&[
            "quantize",
            s(&path),
            "--route",
            "sampled",
            "--n",
            "3",
            "--theta1",
            "0.25"
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "quantize",
            s(&path),
            "--route",
            "sampled",
            "--n",
            "4"
        ])),
        3
    );
    assert_eq!(
        code(&run(&[
            "quantize",
            s(&path),
            "--route",
            "sampled",
            "--theta2",
            "0.1"
        ])),
        3
    );
}

#[test]
fn quantize_both_reports_discrepancy() {
    let dir = TempDir::new().unwrap();
    let tp = random_trig_polynomial(&mut ChaCha8Rng::seed_from_u64(9), 4);
    let path = put(&dir, "tp.json", &tp);
    let out = dir.path().join("both.json");
    let report = dir.path().join("report.json");
    let o = run(&[
        "quantize",
        s(&path),
        "--n",
        "4",
        "--theta1",
        "0.7",
        "--route",
        "both",
        "-o",
        s(&out),
        "--report",
        s(&report),
    ]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let gap = doc["max_discrepancy"].as_f64().unwrap();
    assert!(gap < 1e-9);
    let fourier = Operator::from_json(&doc["fourier"].to_string()).unwrap();
    let rep = Representation::new(0.7, 0.0, 4).unwrap();
    assert!(fourier.max_abs_diff(&quantize_fourier(&tp, &rep)) < 1e-15);
    let rep_doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(rep_doc["max_discrepancy"].as_f64().unwrap(), gap);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let tp = random_trig_polynomial(&mut ChaCha8Rng::seed_from_u64(2), 3);
    let path = put(&dir, "tp.json", &tp);
    let a = run(&[
        "quantize",
        s(&path),
        "--n",
        "3",
        "--route",
        "both",
        "--theta2",
        "0.125",
    ]);
    let b = run(&[
        "quantize",
        s(&path),
        "--n",
        "3",
        "--route",
        "both",
        "--theta2",
        "0.125",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dequantize_sigma_x_and_round_trip() {
    let dir = TempDir::new().unwrap();
    let rep = Representation::untwisted(2).unwrap();
    let sx = put(&dir, "sx.json", &pauli(&rep).unwrap().x);
    let sym_path = dir.path().join("sym.json");
    let csv = dir.path().join("sym.csv");
    let o = run(&["dequantize", s(&sx), "-o", s(&sym_path), "--csv", s(&csv)]);
    assert_eq!(code(&o), 0);
    let sym = SampledSymbol::read(&sym_path).unwrap();
    // 2·W̃₂(σx)
    let pattern = [
        [0.0; 4],
        [1.0, 0.0, -1.0, 0.0],
        [0.0; 4],
        [1.0, 0.0, -1.0, 0.0],
    ];
    let expected = DMatrix::from_fn(4, 4, |r, c| Complex64::new(pattern[r][c], 0.0));
    assert!(max_abs_diff(sym.grid(), &expected) < 1e-15);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 17);

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let a = random_operator(&mut rng, 5);
    let a_path = put(&dir, "a.json", &a);
    let sym_path = dir.path().join("a_sym.json");
    assert_eq!(
        code(&run(&[
            "dequantize",
            s(&a_path),
            "--theta1",
            "0.4",
            "-o",
            s(&sym_path)
        ])),
        0
    );
    let back = dir.path().join("back.json");
    assert_eq!(
        code(&run(&[
            "quantize",
            s(&sym_path),
            "--route",
            "sampled",
            "-o",
            s(&back)
        ])),
        0
    );
    assert!(Operator::read(&back).unwrap().max_abs_diff(&a) < 1e-10);
}

#[test]
fn dequantize_zero_and_non_square() {
    let dir = TempDir::new().unwrap();
    let zero = put(&dir, "zero.json", &Operator::zeros(3));
    let o = run(&["dequantize", s(&zero)]);
    assert_eq!(code(&o), 0);
    let sym = SampledSymbol::from_json(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert!(sym.grid().iter().all(|z| *z == Complex64::new(0.0, 0.0)));

    let bad = put_text(&dir, "bad.json", r#"{"N":2,"entries":[[1,0],[0,0],[0,0]]}"#);
    assert_eq!(code(&run(&["dequantize", s(&bad)])), 3);
}

#[test]
fn wigner_ground_state_and_summary() {
    let dir = TempDir::new().unwrap();
    let u0 = put(&dir, "u0.json", &State::basis(2, 0));
    let table_path = dir.path().join("w.json");
    let summary_path = dir.path().join("summary.json");
    let marg = dir.path().join("m.csv");
    let o = run(&[
        "wigner",
        s(&u0),
        "--theta1",
        "0.3",
        "-o",
        s(&table_path),
        "--report",
        s(&summary_path),
        "--marginals-csv",
        s(&marg),
    ]);
    assert_eq!(code(&o), 0);
    let table = WignerTable::read(&table_path).unwrap();
    let pattern = [
        [1.0, 1.0, 1.0, 1.0],
        [0.0; 4],
        [1.0, -1.0, 1.0, -1.0],
        [0.0; 4],
    ];
    let expected = DMatrix::from_fn(4, 4, |r, c| Complex64::new(pattern[r][c] / 4.0, 0.0));
    assert!(max_abs_diff(table.grid(), &expected) < 1e-15);
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&summary_path).unwrap()).unwrap();
    assert_eq!(summary["total_mass"][0].as_f64().unwrap(), 1.0);
    assert_eq!(summary["inner_product"][0].as_f64().unwrap(), 1.0);
    for r in summary["symmetry_residuals"].as_array().unwrap() {
        assert_eq!(r.as_f64().unwrap(), 0.0);
    }
    assert_eq!(summary["marginal_p"][2][0].as_f64().unwrap(), 0.5);
    assert_eq!(std::fs::read_to_string(&marg).unwrap().lines().count(), 5);
}

#[test]
fn wigner_pair_mass_is_the_inner_product() {
    let dir = TempDir::new().unwrap();
    let psi = State::new(vec![
        Complex64::new(0.3, 0.1),
        Complex64::new(-0.2, 0.9),
        Complex64::new(1.0, 0.0),
    ])
    .unwrap();
    let phi = State::new(vec![
        Complex64::new(0.0, 1.0),
        Complex64::new(0.5, 0.5),
        Complex64::new(-0.4, 0.2),
    ])
    .unwrap();
    let (p, f) = (put(&dir, "psi.json", &psi), put(&dir, "phi.json", &phi));
    let report = dir.path().join("r.json");
    assert_eq!(
        code(&run(&["wigner", s(&p), s(&f), "--report", s(&report)])),
        0
    );
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let ip = psi.inner(&phi);
    assert!((summary["total_mass"][0].as_f64().unwrap() - ip.re).abs() < 1e-14);
    assert!((summary["total_mass"][1].as_f64().unwrap() - ip.im).abs() < 1e-14);
}

#[test]
fn wigner_length_mismatch_is_a_dimension_error() {
    let dir = TempDir::new().unwrap();
    let a = put(&dir, "a.json", &State::basis(2, 0));
    let b = put(&dir, "b.json", &State::basis(3, 0));
    assert_eq!(code(&run(&["wigner", s(&a), s(&b)])), 3);
}

fn evolve_fixture(dir: &TempDir, h: &SampledSymbol) -> (PathBuf, PathBuf, SampledSymbol) {
    let a0 = SampledSymbol::random(*h.rep(), &mut ChaCha8Rng::seed_from_u64(6));
    (put(dir, "h.json", h), put(dir, "a0.json", &a0), a0)
}

#[test]
fn evolve_at_time_zero_is_the_identity() {
    let dir = TempDir::new().unwrap();
    let rep = Representation::new(0.0, 0.5, 3).unwrap();
    let h = sample(&harper(0.25), &rep).map(|z| Complex64::new(z.re, 0.0));
    let (hp, ap, a0) = evolve_fixture(&dir, &h);
    let o = run(&["evolve", s(&hp), s(&ap), "--t", "0", "--steps", "10"]);
    assert_eq!(code(&o), 0);
    let out = SampledSymbol::from_json(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(out, a0);
}

#[test]
fn evolve_reports_small_defect() {
    let dir = TempDir::new().unwrap();
    let rep = Representation::untwisted(2).unwrap();
    let h = sample(&harper(0.25), &rep).map(|z| Complex64::new(z.re, 0.0));
    let (hp, ap, _) = evolve_fixture(&dir, &h);
    let report = dir.path().join("r.json");
    let o = run(&[
        "evolve",
        s(&hp),
        s(&ap),
        "--t",
        "1",
        "--steps",
        "200",
        "--report",
        s(&report),
    ]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(doc["defect"].as_f64().unwrap() < 1e-6);
    assert_eq!(doc["steps"].as_u64().unwrap(), 200);

    let constant = SampledSymbol::constant(rep, Complex64::new(0.8, 0.0));
    let (hp, ap, a0) = evolve_fixture(&dir, &constant);
    let o = run(&["evolve", s(&hp), s(&ap), "--t", "2.5", "--steps", "50"]);
    assert_eq!(code(&o), 0);
    let out = SampledSymbol::from_json(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert!(out.max_abs_diff(&a0) < 1e-10);
}

#[test]
fn evolve_rejects_complex_hamiltonians() {
    let dir = TempDir::new().unwrap();
    let rep = Representation::untwisted(2).unwrap();
    let h = SampledSymbol::constant(rep, Complex64::new(1.0, 1e-9));
    let (hp, ap, _) = evolve_fixture(&dir, &h);
    assert_eq!(code(&run(&["evolve", s(&hp), s(&ap), "--t", "1"])), 4);
    let h = SampledSymbol::constant(rep, Complex64::new(1.0, 0.0));
    let (hp, ap, _) = evolve_fixture(&dir, &h);
    assert_eq!(
        code(&run(&[
            "evolve",
            s(&hp),
            s(&ap),
            "--t",
            "1",
            "--steps",
            "0"
        ])),
        4
    );
}

#[test]
fn evolve_mismatched_representations() {
    let dir = TempDir::new().unwrap();
    let h = put(
        &dir,
        "h.json",
        &SampledSymbol::zeros(Representation::untwisted(2).unwrap()),
    );
    let a = put(
        &dir,
        "a.json",
        &SampledSymbol::zeros(Representation::untwisted(3).unwrap()),
    );
    assert_eq!(code(&run(&["evolve", s(&h), s(&a), "--t", "1"])), 3);
}

#[test]
fn parse_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let broken = put_text(&dir, "broken.json", "{\"N\": 2, ");
    assert_eq!(code(&run(&["dequantize", s(&broken)])), 2);
    let tp = put(&dir, "tp.json", &TrigPolynomial::constant(one()));
    assert_eq!(code(&run(&["quantize", s(&tp)])), 2, "missing --n");
    assert_eq!(
        code(&run(&[
            "quantize",
            s(&tp),
            "--n",
            "2",
            "--route",
            "sideways"
        ])),
        2
    );
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}
