use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use trigmat::{cos_sin, wave_cos_sin, DenseMatrix, Precision};

fn trigmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigmat")).args(args).output().expect("spawn trigmat")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_matrix(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn read(path: &str, suffix: &str) -> DenseMatrix {
    DenseMatrix::read(format!("{path}.{suffix}")).unwrap()
}

#[test]
fn one_by_one_zero() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_matrix(dir.path(), "z.txt", "1 1\n0\n");
    let o = trigmat(&["cossin", &p]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(read(&p, "cos").data(), &[1.0]);
    assert_eq!(read(&p, "sin").data(), &[0.0]);
    assert!(stdout(&o).starts_with("scheme taylor-k3 s 0 products 3"));
}

#[test]
fn scaled_identity() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_matrix(dir.path(), "i.txt", "2 2\n0.1 0\n0 0.1\n");
    for method in ["taylor", "pade"] {
        let o = trigmat(&["cossin", &p, "--method", method]);
        assert!(o.status.success(), "{}", stderr(&o));
        let (c, s) = (read(&p, "cos"), read(&p, "sin"));
        assert!(c.max_abs_diff(&DenseMatrix::diag(&[0.1f64.cos(); 2])) < 1e-15, "{method}");
        assert!(s.max_abs_diff(&DenseMatrix::diag(&[0.1f64.sin(); 2])) < 1e-15, "{method}");
    }
}

#[test]
fn malformed_header_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_matrix(dir.path(), "bad.txt", "\n2 x\n1 2\n3 4\n");
    let o = trigmat(&["cossin", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    assert!(!Path::new(&format!("{p}.cos")).exists());
}

#[test]
fn non_square_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_matrix(dir.path(), "r.txt", "2 3\n1 2 3\n4 5 6\n");
    let o = trigmat(&["cossin", &p]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("square"), "{}", stderr(&o));
}

#[test]
fn missing_file_and_bad_flags() {
    assert_eq!(trigmat(&["cossin", "/nonexistent/m.txt"]).status.code(), Some(2));
    assert_eq!(trigmat(&["cossin", "m.txt", "--method", "lanczos"]).status.code(), Some(2));
    assert_eq!(trigmat(&["cossin", "m.txt", "--wave"]).status.code(), Some(2));
    assert_eq!(trigmat(&["frobnicate"]).status.code(), Some(2));
    let help = trigmat(&["--help"]);
    assert!(help.status.success());
    for sub in ["cossin", "wave", "bench", "theta", "gallery"] {
        assert!(stdout(&help).contains(sub));
    }
}

#[test]
fn wave_matches_closed_form_and_library() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_matrix(dir.path(), "w.txt", "1 1\n4\n");
    let o = trigmat(&["wave", &p, "--t", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!((read(&p, "c").data()[0] - 4f64.cos()).abs() <= 1e-13);
    assert!((read(&p, "s").data()[0] - 4f64.sin() / 2.0).abs() <= 1e-13);

    let q = write_matrix(dir.path(), "w2.txt", "1 1\n4\n");
    let o2 = trigmat(&["cossin", &q, "--wave", "--t", "2"]);
    assert!(o2.status.success());
    assert_eq!(stdout(&o), stdout(&o2));
    assert_eq!(fs::read(format!("{p}.c")).unwrap(), fs::read(format!("{q}.c")).unwrap());
    assert_eq!(fs::read(format!("{p}.s")).unwrap(), fs::read(format!("{q}.s")).unwrap());
}

#[test]
fn output_is_bit_identical_to_library() {
    let dir = tempfile::tempdir().unwrap();
    let a = DenseMatrix::from_fn(4, 4, |i, j| ((i * 7 + j * 3) % 5) as f64 * 0.37 - 0.6);
    let p = dir.path().join("a.txt");
    a.write(&p).unwrap();
    let p = p.to_str().unwrap().to_string();

    let o = trigmat(&["cossin", &p, "--precision", "single"]);
    assert!(o.status.success());
    let lib = cos_sin(&a, Precision::Single).unwrap();
    assert_eq!(read(&p, "cos"), lib.result.cos_part);
    assert_eq!(read(&p, "sin"), lib.result.sin_part);
    assert_eq!(
        stdout(&o),
        format!("scheme {} s {} products {}\n", lib.scheme_used, lib.scaling_exponent, lib.total_products)
    );

    let o = trigmat(&["wave", &p, "--t", "-1.5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let lib = wave_cos_sin(&a, -1.5, Precision::Double).unwrap();
    assert_eq!(read(&p, "c"), lib.result.c_part);
    assert_eq!(read(&p, "s"), lib.result.s_part);
}

#[test]
fn theta_tables_print_published_values() {
    let d = trigmat(&["theta"]);
    assert!(d.status.success());
    assert!(stdout(&d).contains("9.8108e-1"));
    assert!(stdout(&d).contains("1.3959e-1"));
    let s = trigmat(&["theta", "--precision", "single"]);
    assert!(stdout(&s).contains("7.492e-1"));
    assert!(stdout(&s).contains("4.3819e0"));
}

fn delta_columns(text: &str) -> Vec<(String, f64, f64)> {
    text.lines()
        .skip(2)
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            let n = f.len();
            (f[0].to_string(), f[n - 2].parse().unwrap(), f[n - 1].parse().unwrap())
        })
        .collect()
}

#[test]
fn theta_recompute_agrees() {
    for precision in ["double", "single"] {
        let o = trigmat(&["theta", "--precision", precision, "--recompute"]);
        assert!(o.status.success(), "{}", stderr(&o));
        let rows = delta_columns(&stdout(&o));
        assert_eq!(rows.len(), 8);
        for (scheme, dc, ds) in rows {
            assert!(dc <= 1e-4, "{precision} {scheme} cos {dc}");
            assert!(ds <= 1e-4, "{precision} {scheme} sin {ds}");
        }
    }
}

#[test]
fn bench_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = trigmat(&["bench", "--dim-cap", "5", "--count", "12", "--seed", "3", "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stderr(&o));
        let csv = fs::read_to_string(out).unwrap();
        let stripped: Vec<String> = csv
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect();
        (stripped, stdout(&o))
    };
    let (a, sa) = run("a.csv");
    let (b, sb) = run("b.csv");
    assert_eq!(a[0], "matrix_id,class_tag,norm,method,rel_err_cos,rel_err_sin,products,scaling_s");
    assert_eq!(a.len(), 1 + 2 * 12);
    assert_eq!(a, b);
    assert_eq!(sa, sb);
    assert!(sa.starts_with("summary: 12 entries"));
}

#[test]
fn bench_to_stdout() {
    let o = trigmat(&["bench", "--dim-cap", "3", "--count", "6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("matrix_id,class_tag,"));
    assert!(text.contains("\nsummary: 6 entries"));
}

#[test]
fn gallery_writes_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("corpus");
    let o = trigmat(&["gallery", "--dim-cap", "6", "--count", "20", "--seed", "9", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let manifest = fs::read_to_string(out.join("manifest.csv")).unwrap();
    assert_eq!(manifest.lines().next(), Some("index,class,dimension,norm"));
    assert_eq!(manifest.lines().count(), 21);
    let m = DenseMatrix::read(out.join("m00000.txt")).unwrap();
    assert!(m.is_square() && m.rows() <= 6);
    assert_eq!(trigmat(&["gallery", "--count", "0", "--out", out.to_str().unwrap()]).status.code(), Some(2));
}
