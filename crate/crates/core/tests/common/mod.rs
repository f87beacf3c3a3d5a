#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use symlie::report::{read_ideal_file, read_matrix_file};
use symlie::{ColoredGraph, IdealSpec, Scalar, ScalarMatrix, StagedTree};

pub fn fixture_path(file: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(file)
        .to_string_lossy()
        .into_owned()
}

pub fn fixture_ideal(name: &str) -> IdealSpec {
    read_ideal_file(&PathBuf::from(fixture_path(&format!("{name}.ideal")))).unwrap()
}

pub fn fixture_matrix(file: &str) -> ScalarMatrix {
    read_matrix_file(&PathBuf::from(fixture_path(file))).unwrap()
}

pub fn fixture_graph(file: &str) -> ColoredGraph {
    ColoredGraph::parse(&std::fs::read_to_string(fixture_path(file)).unwrap()).unwrap()
}

pub fn fixture_tree(file: &str) -> StagedTree {
    StagedTree::parse(&std::fs::read_to_string(fixture_path(file)).unwrap()).unwrap()
}

pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_cli(args: &[&str]) -> CliOutput {
    let out = Command::new(env!("CARGO_BIN_EXE_symlie")).args(args).output().unwrap();
    CliOutput {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn dense(rows: &[&[i64]]) -> ScalarMatrix {
    ScalarMatrix::from_i64_rows(rows)
}

pub fn diag(entries: &[i64]) -> ScalarMatrix {
    ScalarMatrix::diagonal(&entries.iter().map(|&v| Scalar::from_int(v)).collect::<Vec<_>>())
}

/// `entries` are `(row, col, value)`, 1-based.
pub fn sparse(n: usize, entries: &[(usize, usize, i64)]) -> ScalarMatrix {
    let mut m = ScalarMatrix::zeros(n, n);
    for &(i, j, v) in entries {
        m[(i - 1, j - 1)] = Scalar::from_int(v);
    }
    m
}

/// Basis printed for the kernel of the binary staged tree.
pub fn staged_tree_displayed() -> Vec<ScalarMatrix> {
    vec![
        sparse(8, &[(1, 1, 1), (2, 2, 1), (4, 3, 1), (4, 4, 1), (6, 5, 1), (6, 6, 1), (7, 7, 1), (8, 8, 1)]),
        sparse(8, &[(3, 3, 1), (4, 3, -1), (6, 5, -1), (6, 6, -1), (7, 7, -1), (8, 8, -1)]),
        sparse(8, &[(3, 4, 1), (4, 4, -1), (5, 6, 1), (6, 6, -1)]),
        diag(&[0, 0, 0, 0, 1, 1, 1, 1]),
    ]
}

/// Basis printed for the caterpillar minors.
pub fn caterpillar_displayed() -> Vec<ScalarMatrix> {
    vec![
        ScalarMatrix::identity(9),
        dense(&[
            &[-2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, -3, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, -3, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, -4, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, -4, 0, 0, 0, 0],
            &[0, 0, 0, 2, 2, -2, 0, 0, 0],
            &[1, 1, 1, 1, 1, 1, -1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, -1, 0],
            &[1, 1, 1, 1, 1, 1, 1, 1, 0],
        ]),
    ]
}

/// Basis printed for the four-cycle.
pub fn four_cycle_displayed() -> Vec<ScalarMatrix> {
    vec![
        diag(&[1, 0, -1, 0, -1, -1, 0, -1, -1, -1]),
        diag(&[0, 1, 2, 0, 1, 0, 0, 1, 0, 0]),
        diag(&[0, 0, 0, 1, 1, 2, 0, 0, 1, 0]),
        diag(&[0, 0, 0, 0, 0, 0, 1, 1, 1, 2]),
    ]
}

/// Identity and the three rotation generators.
pub fn sphere_displayed() -> Vec<ScalarMatrix> {
    vec![
        ScalarMatrix::identity(3),
        dense(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]),
        dense(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
        dense(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0]]),
    ]
}
