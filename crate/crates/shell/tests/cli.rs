use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn symsh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symsh")).args(args).output().expect("symsh runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("symsh-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let _ = fs::remove_file(&path);
    path
}

const SCRIPT: &str = "\
# deferred evaluation
sin(Pi*(x+y/2));
sin(subs(Pi*(x+y/2), y==1));
sin(subs(subs(Pi*(x+y/2), y==1), x==11));
sin(evalf(subs(subs(Pi*(x+y/2), y==1), x==11)));
series(1/sqrt(1-v^2/c^2), v==0, 6);
series(1/%^2, v==0, 6);
normal(diff(exp(-z^2), z, 3)*exp(z^2));
lsolve([a*x+b*y==3, x-y==b], [x, y]);
1/2+1/3; %-%; %%*2;
x +;
";

const TRANSCRIPT: &str = "\
sin(Pi*(x+1/2*y))
sin(Pi*(1/2+x))
-1
-1.0
1+v^2/(2*c^2)+3*v^4/(8*c^4)+O(v^6)
1-v^2/c^2+O(v^6)
12*z-8*z^3
[x==(3+b^2)/(a+b),y==(3-a*b)/(a+b)]
5/6
0
5/3
error: syntax error at position 4: unexpected end of input
";

#[test]
fn script_transcript_is_reproducible() {
    let path = scratch("session.txt");
    fs::write(&path, SCRIPT).unwrap();
    let p = path.to_str().unwrap();
    let first = symsh(&["shell", "--script", p]);
    let second = symsh(&["shell", "--script", p]);
    assert!(first.status.success());
    assert_eq!(String::from_utf8_lossy(&first.stdout), TRANSCRIPT);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn missing_script_fails() {
    let out = symsh(&["shell", "--script", "/nonexistent/script.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_writes_csv() {
    let path = scratch("bench.csv");
    let p = path.to_str().unwrap();
    let out = symsh(&["bench", "--test", "B", "--n", "50", "--reps", "2", "--csv", p]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows: Vec<String> = String::from_utf8(out.stdout).unwrap().lines().map(str::to_string).collect();
    assert_eq!(rows.len(), 2);
    let fields: Vec<&str> = rows[0].split(',').collect();
    assert_eq!(fields[..2], ["B", "50"]);
    assert!(fields[2].parse::<f64>().unwrap() >= 0.0);
    assert_eq!(fields[3].len(), 16);
    assert_eq!(rows[0].split(',').nth(3), rows[1].split(',').nth(3));

    symsh(&["bench", "--test", "A", "--n", "10", "--csv", p]);
    let file = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = file.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "test_id,n,seconds,digest");
    assert!(lines[3].starts_with("A,10,"));
}

#[test]
fn bench_errors_exit_nonzero() {
    let out = symsh(&["bench", "--test", "nope", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown test nope"));
    let out = symsh(&["bench", "--test", "expand-subs-collapse", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn list_names_every_test() {
    let out = symsh(&["list"]);
    let ids = String::from_utf8(out.stdout).unwrap();
    for id in ["expand-subs-collapse", "gamma-series", "A", "M1", "Q'"] {
        assert!(ids.lines().any(|l| l == id), "{id} missing");
    }
}
