use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use gx_cli::{run, CommandOutcome};
use gx_core::arf::{write_form, QuadraticForm};
use gx_core::builtin::{self, BUILTIN_NAMES};
use gx_core::cochain::{parse_cochain, write_cochain, Cochain};
use gx_core::group::{write_triple, Triple};
use gx_core::linalg::Qz;
use gx_core::simplicial::{parse_complex, OrderedComplex};

fn gx(args: &[&str]) -> CommandOutcome {
    let mut argv = vec!["gx".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    run(argv)
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("gx-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&d);
    fs::create_dir_all(&d).unwrap();
    d
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn emit(name: &str, dir: &Path) {
    let out = gx(&["builtin", name, "--emit", s(dir)]);
    assert_eq!(out.exit_code, 0, "{}", out.report);
}

#[test]
fn appendix_ends_with_quarter() {
    let out = gx(&["verify", "appendix"]);
    assert_eq!(out.exit_code, 0, "{}", out.report);
    assert_eq!(out.report.trim_end().lines().last(), Some("evaluation = 1/4"));
}

#[test]
fn sphere_cohomology() {
    let d = scratch("cohom");
    emit("sphere2", &d);
    let osc = d.join("sphere2.osc");
    let out = gx(&["cohom", s(&osc), "--coeff", "z", "--deg", "2"]);
    assert_eq!((out.exit_code, out.report.as_str()), (0, "Z^1\n"));
    assert_eq!(gx(&["cohom", s(&osc), "--coeff", "z", "--deg", "1"]).report, "0\n");
    assert_eq!(gx(&["cohom", s(&osc), "--coeff", "qz", "--deg", "2"]).report, "(Q/Z)^1 (rational model of (R/Z)^1)\n");
    let bad = gx(&["cohom", s(&osc), "--coeff", "z", "--deg", "3"]);
    assert_eq!(bad.exit_code, 2);
}

#[test]
fn builtins_round_trip() {
    for name in BUILTIN_NAMES {
        let d = scratch(&format!("rt-{name}"));
        emit(name, &d);
        let e = builtin::by_name(name).unwrap();
        let x = parse_complex(&fs::read_to_string(d.join(format!("{name}.osc"))).unwrap()).unwrap();
        assert_eq!(x.f_vector(), e.complex.f_vector(), "{name}");
        assert_eq!(x.declared_cycle(), e.fundamental.as_ref(), "{name}");
        let x = Arc::new(x);
        for (cname, c) in &e.named_cochains {
            let nc = parse_cochain(&fs::read_to_string(d.join(format!("{cname}.coc"))).unwrap(), &x).unwrap();
            assert_eq!(&nc.name, cname);
            // the complexes are equal but distinct, so compare the written text
            assert_eq!(write_cochain(cname, &nc.cochain), write_cochain(cname, c), "{name}/{cname}");
        }
    }
}

fn delta4() -> Arc<OrderedComplex> {
    Arc::new(OrderedComplex::from_ids("delta4", &["0", "1", "2", "3", "4"], &[&["0", "1", "2", "3", "4"]]).unwrap())
}

#[test]
fn non_d_cocycle_is_an_input_error() {
    let d = scratch("bad");
    let x = delta4();
    let w = Cochain::from_id_support(&x, 3, &[&["0", "1", "2", "3"]], Qz::HALF).unwrap();
    let bad = d.join("bad.triple");
    fs::write(&bad, write_triple("bad", &Triple::from_w(w), true)).unwrap();
    for op in ["is-identity", "order"] {
        let out = gx(&["op", op, s(&bad)]);
        assert_eq!(out.exit_code, 2, "{op}");
        assert!(out.report.contains("not a D-cocycle"), "{}", out.report);
    }
    let out = gx(&["op", "equal", s(&bad), s(&bad)]);
    assert_eq!(out.exit_code, 2);
    // products are defined on all of C
    assert_eq!(gx(&["op", "product", s(&bad), s(&bad)]).exit_code, 0);
}

#[test]
fn usage_errors() {
    let out = gx(&["frobnicate"]);
    assert_eq!(out.exit_code, 2);
    assert!(out.report.contains("Usage"), "{}", out.report);
    assert_eq!(gx(&["cohom", "x.osc", "--coeff", "z5", "--deg", "1"]).exit_code, 2);
    assert_eq!(gx(&["verify", "laws", "--wat"]).exit_code, 2);
    assert_eq!(gx(&[]).exit_code, 2);
    let missing = gx(&["gstruct", "/nonexistent/x.osc"]);
    assert_eq!(missing.exit_code, 2);
    assert!(missing.report.contains("reading /nonexistent/x.osc"));
}

#[test]
fn every_subcommand_has_help() {
    let cmds: &[&[&str]] = &[
        &[],
        &["cohom"],
        &["gstruct"],
        &["op"],
        &["op", "product"],
        &["op", "inverse"],
        &["op", "power"],
        &["op", "is-identity"],
        &["op", "equal"],
        &["op", "order"],
        &["op", "commutator"],
        &["op", "chi"],
        &["op", "kapustin"],
        &["op", "extension-cocycle"],
        &["eval"],
        &["arf"],
        &["verify"],
        &["verify", "appendix"],
        &["verify", "laws"],
        &["subdivide"],
        &["builtin"],
    ];
    for c in cmds {
        let mut args = c.to_vec();
        args.push("--help");
        let out = gx(&args);
        assert_eq!(out.exit_code, 0, "{c:?}");
        assert!(out.report.contains("Usage: gx"), "{c:?}: {}", out.report);
    }
}

/// Writes (0, 0, c) on T_SS² next to the emitted builtin.
fn tss2_setup(tag: &str) -> (PathBuf, PathBuf) {
    let d = scratch(tag);
    emit("tss2", &d);
    let e = builtin::t_s_sphere();
    let g = d.join("c.triple");
    fs::write(&g, write_triple("c", &Triple::from_a(e.z2("c")), false)).unwrap();
    (d, g)
}

#[test]
fn tss2_operations() {
    let (d, g) = tss2_setup("ops");
    let x = d.join("tss2.osc");
    let cx = ["--complex", s(&x)];
    let with = |args: &[&str]| {
        let mut v = args.to_vec();
        v.extend(cx);
        gx(&v)
    };
    assert_eq!(with(&["op", "order", s(&g)]).report, "order = 8\n");
    assert_eq!(with(&["op", "order", s(&g), "--bound", "7"]).report, "order > 7\n");
    assert_eq!(with(&["op", "is-identity", s(&g)]).report, "false\n");

    let g8 = d.join("g8.triple");
    fs::write(&g8, with(&["op", "power", s(&g), "8"]).report).unwrap();
    assert_eq!(with(&["op", "is-identity", s(&g8)]).report, "true\n");

    let inv = d.join("inv.triple");
    fs::write(&inv, with(&["op", "inverse", s(&g)]).report).unwrap();
    let m1 = d.join("m1.triple");
    fs::write(&m1, with(&["op", "power", s(&g), "-1"]).report).unwrap();
    assert_eq!(with(&["op", "equal", s(&inv), s(&m1)]).report, "true\n");
    let one = d.join("one.triple");
    fs::write(&one, with(&["op", "product", s(&g), s(&inv)]).report).unwrap();
    assert_eq!(with(&["op", "is-identity", s(&one)]).report, "true\n");
    let comm = d.join("comm.triple");
    fs::write(&comm, with(&["op", "commutator", s(&g), s(&inv)]).report).unwrap();
    assert_eq!(with(&["op", "is-identity", s(&comm)]).report, "true\n");

    let chi = d.join("chi.triple");
    fs::write(&chi, with(&["op", "chi", s(&d.join("c.coc")), s(&g)]).report).unwrap();
    let chi2 = d.join("chi2.triple");
    fs::write(&chi2, with(&["op", "chi", s(&d.join("c.coc")), s(&chi)]).report).unwrap();
    assert_eq!(with(&["op", "equal", s(&chi2), s(&g)]).report, "true\n");

    let k = with(&["op", "kapustin", s(&g)]);
    assert_eq!(k.exit_code, 0);
    assert!(k.report.contains("# dw' + p^2/2 + P(a^2)/4 = 0"), "{}", k.report);
}

#[test]
fn extension_cocycle_evaluates_to_a_quarter() {
    let (d, _) = tss2_setup("eval");
    let x = d.join("tss2.osc");
    let c = d.join("c.coc");
    let z = gx(&["op", "extension-cocycle", s(&c), s(&c), "--complex", s(&x)]);
    assert_eq!(z.exit_code, 0, "{}", z.report);
    let zf = d.join("z.triple");
    fs::write(&zf, &z.report).unwrap();
    let t = d.join("t.coc");
    let out = gx(&["eval", s(&zf), "--complex", s(&x), "--t", s(&t)]);
    assert_eq!((out.exit_code, out.report.as_str()), (0, "evaluation = 1/4\n"));
    let out = gx(&["eval", s(&zf), "--complex", s(&x), "--t", s(&t), "--spin", "1/2"]);
    assert_eq!(out.report, "evaluation = 3/4\n");
    assert_eq!(gx(&["eval", s(&zf), "--complex", s(&x), "--spin", "1/3"]).exit_code, 2);
    // a ≠ 0 needs an arf term
    let g = d.join("g.triple");
    fs::write(&g, write_triple("g", &Triple::from_a(builtin::t_s_sphere().z2("c")), false)).unwrap();
    let no_arf = gx(&["eval", s(&g), "--complex", s(&x)]);
    assert_eq!(no_arf.exit_code, 2);
    assert!(no_arf.report.contains("arf term required"));
    assert_eq!(gx(&["op", "extension-cocycle", s(&c), s(&c)]).exit_code, 2);
}

#[test]
fn arf_command() {
    let d = scratch("arf");
    let rank1 = QuadraticForm::new(&[vec![1]], &[1]).unwrap();
    let f = d.join("r1.qf");
    fs::write(&f, write_form("r1", &rank1)).unwrap();
    let out = gx(&["arf", s(&f)]);
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.report.lines().last(), Some("arf = 1 (= 1/8 in Q/Z)"));
    let deg = d.join("deg.qf");
    fs::write(&deg, "quadform d dim 1\nB 0\nq 2\n").unwrap();
    assert_eq!(gx(&["arf", s(&deg)]).report.lines().last(), Some("arf = degenerate"));
    let bad = d.join("bad.qf");
    fs::write(&bad, "quadform b dim 2\nB 0 1\nB 0 0\nq 0 0\n").unwrap();
    assert_eq!(gx(&["arf", s(&bad)]).exit_code, 2);
}

#[test]
fn subdivide_round_trips() {
    let d = scratch("sd");
    emit("rp2", &d);
    let out = gx(&["subdivide", s(&d.join("rp2.osc")), "--emit", s(&d)]);
    assert_eq!(out.exit_code, 0, "{}", out.report);
    let sd = d.join("rp2_sd.osc");
    for k in ["1", "2"] {
        let a = gx(&["cohom", s(&d.join("rp2.osc")), "--coeff", "z2", "--deg", k]);
        let b = gx(&["cohom", s(&sd), "--coeff", "z2", "--deg", k]);
        assert_eq!(a, b);
    }
    let printed = gx(&["subdivide", s(&d.join("rp2.osc"))]).report;
    assert_eq!(printed, fs::read_to_string(&sd).unwrap());
}

#[test]
fn output_is_deterministic() {
    let (d, g) = tss2_setup("det");
    let x = d.join("tss2.osc");
    let runs: &[&[&str]] = &[
        &["gstruct", s(&x)],
        &["verify", "laws", "--seed", "11", "--complexes", "2", "--trials", "2"],
        &["op", "power", s(&g), "3", "--complex", s(&x)],
    ];
    for args in runs {
        let a = gx(args);
        assert_eq!(a.exit_code, 0, "{args:?}: {}", a.report);
        assert_eq!(a, gx(args), "{args:?}");
    }
    let laws = gx(&["verify", "laws", "--seed", "11", "--complexes", "2", "--trials", "2"]);
    assert!(laws.report.trim_end().ends_with("suites passed"), "{}", laws.report);
}

#[test]
fn gstruct_reports() {
    let d = scratch("gs");
    emit("sphere2", &d);
    let out = gx(&["gstruct", s(&d.join("sphere2.osc"))]);
    assert!(out.report.contains("|G| = 2\n"), "{}", out.report);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gx");
    let ok = Command::new(bin).args(["verify", "appendix"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).trim_end().ends_with("evaluation = 1/4"));
    let bad = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("Usage"));
}
