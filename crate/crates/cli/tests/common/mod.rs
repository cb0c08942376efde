#![allow(dead_code)]

use std::path::PathBuf;

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

/// The documented command corpus, one `name | args` line per case.
pub fn corpus() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("commands.txt")).expect("corpus file");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once('|').expect("name | args");
            Case {
                name: name.trim().to_string(),
                args: args.split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

pub fn normalize(s: &str) -> String {
    s.replace("\r\n", "\n")
}

pub fn expected(case: &Case) -> String {
    let path = golden_dir().join(format!("{}.out", case.name));
    normalize(&std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display())))
}

/// Runs the CLI in-process and returns (status, stdout, stderr).
pub fn run<S: AsRef<str>>(args: &[S]) -> (i32, String, String) {
    let mut argv = vec!["qforms".to_string()];
    argv.extend(args.iter().map(|a| a.as_ref().to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qforms_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 stdout"),
        String::from_utf8(err).expect("utf-8 stderr"),
    )
}
