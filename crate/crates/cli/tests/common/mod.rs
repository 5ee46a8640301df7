//! Golden transcripts: each suite runs a list of invocations of the binary
//! from the crate root and records stdout, stderr and the exit code.

#![allow(dead_code)]

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::Command;

use prelie_cli::fixtures::catalog_documents;

pub fn crate_root() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_dir() -> PathBuf {
    crate_root().join("tests").join("golden")
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(args: &[String]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_prelie-coh"))
        .args(args)
        .current_dir(crate_root())
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

fn args(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

fn catalog_paths(dir: &str) -> Vec<String> {
    catalog_documents()
        .into_iter()
        .map(|(p, _)| p)
        .filter(|p| p.starts_with(&format!("{dir}/")))
        .map(|p| format!("fixtures/{p}"))
        .collect()
}

pub struct Suite {
    pub name: &'static str,
    pub invocations: Vec<Vec<String>>,
}

pub fn suites() -> Vec<Suite> {
    let every: Vec<String> = catalog_documents()
        .into_iter()
        .map(|(p, _)| format!("fixtures/{p}"))
        .collect();
    let map = |paths: Vec<String>, f: &dyn Fn(&str) -> String| -> Vec<Vec<String>> {
        paths.iter().map(|p| args(&f(p))).collect()
    };
    let list = |items: &[&str]| -> Vec<Vec<String>> { items.iter().map(|s| args(s)).collect() };
    let mut convert = map(catalog_paths("crossed_module"), &|p| format!("convert {p} --from prelie"));
    convert.extend(map(catalog_paths("rblie_xmod"), &|p| format!("convert {p} --from rblie")));
    convert.extend(map(catalog_paths("dendriform_xmod"), &|p| {
        format!("convert {p} --from dendriform")
    }));
    convert.extend(list(&[
        "convert fixtures/extension/e_conn.json --from prelie",
        "convert fixtures/crossed_module/identity_affine.json --from rblie",
    ]));
    vec![
        Suite {
            name: "validate_catalog",
            invocations: map(every, &|p| format!("validate {p}")),
        },
        Suite {
            name: "validate_inputs",
            invocations: list(&[
                "validate fixtures/input/idem.json",
                "validate fixtures/input/abelian2_unversioned.json",
                "validate fixtures/input/zero_denominator.json",
                "validate fixtures/input/malformed.json",
                "validate fixtures/input/index_out_of_range.json",
                "validate fixtures/input/unknown_version.json",
                "validate fixtures/input/missing.json",
                "--json validate fixtures/prelie/idem.json",
                "--json validate fixtures/prelie/negative.json",
                "--json validate fixtures/extension/negative.json",
                "--json validate fixtures/dendriform_xmod/negative_input.json",
            ]),
        },
        Suite {
            name: "cohomology_catalog",
            invocations: map(catalog_paths("representation"), &|p| {
                format!("cohomology {p} --n 3 --phi --verify")
            }),
        },
        Suite {
            name: "cohomology_flags",
            invocations: list(&[
                "cohomology fixtures/prelie/abelian2.json --trivial 1 --n 3",
                "cohomology fixtures/prelie/idem.json --regular --n 1",
                "cohomology fixtures/prelie/abelian3.json --trivial 2 --n 4",
                "cohomology fixtures/representation/affine_regular.json --n 3 --reps",
                "cohomology fixtures/representation/idem_l2r0.json --n 3 --reps --phi",
                "--json cohomology fixtures/representation/affine_l1.json --n 3 --reps --phi --verify",
                "cohomology fixtures/prelie/negative.json --trivial 1",
                "cohomology fixtures/prelie/affine.json",
                "cohomology fixtures/prelie/affine.json --regular --n 0",
                "cohomology fixtures/representation/affine_regular.json --regular",
                "cohomology fixtures/extension/e_conn.json",
            ]),
        },
        Suite {
            name: "tmap_catalog",
            invocations: map(catalog_paths("extension"), &|p| format!("tmap {p}")),
        },
        Suite {
            name: "tmap_random_sections",
            invocations: {
                let mut v = map(catalog_paths("extension"), &|p| {
                    format!("tmap {p} --sections random --seed 7")
                });
                v.extend(list(&[
                    "--json tmap fixtures/extension/e_conn.json --sections random --seed 3",
                    "tmap fixtures/prelie/affine.json",
                ]));
                v
            },
        },
        Suite {
            name: "convert",
            invocations: convert,
        },
        Suite {
            name: "trees",
            invocations: list(&[
                "trees --labels 1 --degree 1",
                "trees --labels 1 --degree 2",
                "trees --labels 1 --degree 3",
                "trees --labels 1 --degree 4",
                "trees --labels 1 --degree 5",
                "trees --labels 2 --degree 3",
                "trees --labels 3 --degree 2",
                "trees --product a b(c)",
                "trees --product b(c) a",
                "trees --product a(b) c(d,e)",
                "trees --labels 3 --product a b(c)",
                "trees --labels 2 --degree 2 --product a b",
                "trees --labels 2 --product a b",
                "--json trees --labels 1 --degree 4",
                "--json trees --product a b(c)",
                "trees --labels 2 --product a b(c)",
                "trees --labels 0 --degree 2",
                "trees --degree 2",
                "trees --product a b(",
                "trees",
            ]),
        },
        Suite {
            name: "cohomologous",
            invocations: list(&[
                "cohomologous fixtures/representation/affine_regular.json fixtures/cochain/affine_regular_coboundary.json fixtures/cochain/affine_regular_zero.json",
                "cohomologous fixtures/representation/affine_regular.json fixtures/cochain/affine_regular_unit.json fixtures/cochain/affine_regular_zero.json",
                "cohomologous fixtures/representation/affine_regular.json fixtures/cochain/affine_regular_zero.json fixtures/cochain/affine_regular_zero.json",
                "cohomologous fixtures/prelie/affine.json --regular fixtures/cochain/affine_regular_coboundary.json fixtures/cochain/affine_regular_unit.json",
                "--json cohomologous fixtures/representation/affine_regular.json fixtures/cochain/affine_regular_coboundary.json fixtures/cochain/affine_regular_zero.json",
                "cohomologous fixtures/representation/abelian2_trivial1.json fixtures/cochain/affine_regular_unit.json fixtures/cochain/affine_regular_zero.json",
                "cohomologous fixtures/representation/affine_regular.json fixtures/prelie/affine.json fixtures/cochain/affine_regular_zero.json",
            ]),
        },
        Suite {
            name: "usage",
            invocations: list(&["", "bogus", "validate", "convert fixtures/prelie/idem.json --from lie"]),
        },
    ]
}

pub fn transcript(suite: &Suite) -> String {
    let mut out = String::new();
    for a in &suite.invocations {
        let r = run(a);
        writeln!(out, "$ prelie-coh {}", a.join(" ")).unwrap();
        out.push_str(&r.stdout);
        for line in r.stderr.lines() {
            writeln!(out, "stderr| {line}").unwrap();
        }
        writeln!(out, "[exit {}]", r.code).unwrap();
        out.push('\n');
    }
    out
}
