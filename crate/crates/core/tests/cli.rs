mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::read_ppm;

fn raytrace(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raytrace"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("spawn raytrace")
}

#[test]
fn demo_writes_header_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let out = raytrace(
        &["--demo", "--width", "64", "--height", "64", "-o", "t.ppm"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("triangles: 1"), "{stderr}");
    assert!(stderr.contains("64x64"), "{stderr}");
    let bytes = fs::read(dir.path().join("t.ppm")).unwrap();
    assert!(bytes.starts_with(b"P3\n64 64\n255\n"));
    // only the output file, no temp leftovers
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn loads_obj_with_color_and_size() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("m.obj"),
        "v -9 -9 0\nv 9 -9 0\nv 9 9 0\nv -9 9 0\nf 1 2 3 4\n",
    )
    .unwrap();
    let out = raytrace(
        &[
            "--input", "m.obj", "--width", "20", "--height", "10", "--color", "0,0.5,1", "-o",
            "m.ppm",
        ],
        dir.path(),
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let ppm = read_ppm(&fs::read(dir.path().join("m.ppm")).unwrap()).unwrap();
    assert_eq!((ppm.width, ppm.height), (20, 10));
    assert!(ppm.pixels().all(|p| p == [0, 128, 255]));
}

#[test]
fn identical_runs_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--demo",
        "--width",
        "50",
        "--height",
        "30",
        "--position",
        "1,2,6",
    ];
    let a = raytrace(&[&args[..], &["-o", "a.ppm"]].concat(), dir.path());
    let b = raytrace(&[&args[..], &["-o", "b.ppm"]].concat(), dir.path());
    assert!(a.status.success() && b.status.success());
    assert_eq!(
        fs::read(dir.path().join("a.ppm")).unwrap(),
        fs::read(dir.path().join("b.ppm")).unwrap()
    );
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["--position", "0,0"][..],
        &["--input", "x.obj", "--demo"],
        &["--nope"],
        &["--distance", "-1"],
    ] {
        let out = raytrace(args, dir.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn missing_input_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = raytrace(&["--input", "missing.obj", "-o", "x.ppm"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.obj"));
    assert!(!dir.path().join("x.ppm").exists());
}

#[test]
fn unwritable_output_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = raytrace(
        &[
            "--demo",
            "--width",
            "4",
            "--height",
            "4",
            "-o",
            "no/such/dir.ppm",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn zero_index_exit_4_with_line() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("bad.obj"),
        "v 0 0 0\nv 1 0 0\nv 0 1 0\n\nf 0 1 2\n",
    )
    .unwrap();
    let out = raytrace(&["-i", "bad.obj", "-o", "x.ppm"], dir.path());
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"));
    assert!(!dir.path().join("x.ppm").exists());
}

#[test]
fn failed_run_keeps_previous_output() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.obj"), "f 1 2 3\n").unwrap();
    fs::write(dir.path().join("x.ppm"), "previous").unwrap();
    let out = raytrace(&["-i", "bad.obj", "-o", "x.ppm"], dir.path());
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(
        fs::read_to_string(dir.path().join("x.ppm")).unwrap(),
        "previous"
    );
}
