//! Ideal files, the toricity analysis and its JSON and text reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::IdealSpec;
use crate::groebner::krull_dimension;
use crate::lie::{graded_symmetry_algebra, symmetry_lie_algebra, symmetry_lie_algebra_multidegree, LieAlgebraBasis};
use crate::matrix::ScalarMatrix;
use crate::parse::parse_polynomial;
use crate::poly::PolyRing;

/// Parses an ideal file:
///
/// ```text
/// # comment
/// ring: x1, x2, x3
/// prime: true
/// generators:
/// x1^2 + x2^2 + x3^2
/// ```
///
/// Generators may be inhomogeneous here; callers that need homogeneity check
/// it. Syntax errors report the line within the file.
pub fn parse_ideal_file(text: &str) -> Result<IdealSpec> {
    let mut ring = None;
    let mut prime = true;
    let mut gens = Vec::new();
    let mut in_generators = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if in_generators {
            let ring = ring.as_ref().expect("ring precedes generators");
            gens.push(parse_polynomial(line, ring).map_err(|e| e.offset_line(lineno))?);
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::MalformedFile(format!("line {}: expected `key: value`", lineno + 1)))?;
        match key.trim() {
            "ring" => {
                let vars: Vec<&str> = value.split(',').map(str::trim).filter(|v| !v.is_empty()).collect();
                ring = Some(PolyRing::new(vars)?);
            }
            "prime" => {
                prime = match value.trim() {
                    "true" => true,
                    "false" => false,
                    other => {
                        return Err(Error::MalformedFile(format!(
                            "line {}: `prime` must be true or false, found `{other}`",
                            lineno + 1
                        )))
                    }
                }
            }
            "generators" => {
                if ring.is_none() {
                    return Err(Error::MalformedFile("`generators:` before `ring:`".into()));
                }
                if !value.trim().is_empty() {
                    return Err(Error::MalformedFile(format!(
                        "line {}: list generators one per line after `generators:`",
                        lineno + 1
                    )));
                }
                in_generators = true;
            }
            other => return Err(Error::MalformedFile(format!("line {}: unknown key `{other}`", lineno + 1))),
        }
    }
    let ring = ring.ok_or_else(|| Error::MalformedFile("missing `ring:`".into()))?;
    if !in_generators || gens.is_empty() {
        return Err(Error::MalformedFile("no generators".into()));
    }
    Ok(IdealSpec::new_affine(&ring, gens)?.with_asserted_prime(prime))
}

pub fn read_ideal_file(path: &Path) -> Result<IdealSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_ideal_file(&text)
}

pub fn read_matrix_file(path: &Path) -> Result<ScalarMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    crate::parse::parse_matrix(&text)
}

/// Outcome of comparing the symmetry algebra with the ideal's dimension.
/// A large algebra never proves toricity, hence no `TORIC` value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotToric,
    Inconclusive,
    Skipped,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    /// Degree to stabilize; defaults to the maximal generator degree.
    pub degree: Option<u32>,
    pub skip_dimension: bool,
    /// Intersect the graded stabilizers over every generator degree.
    pub nonprime: bool,
    /// Record wall-clock phase timings. Off gives byte-identical output.
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub ring: Vec<String>,
    pub generators: Vec<String>,
    pub degree_used: u32,
    pub graded_rank: usize,
    pub lie_dimension: usize,
    pub lie_basis: Vec<Vec<Vec<String>>>,
    /// Krull dimension of `R/I`, the affine cone.
    pub ideal_dimension: Option<usize>,
    pub verdict: Verdict,
    pub diagonal_subalgebra_dimension: usize,
    pub bracket_closed: bool,
    pub asserted_prime: bool,
    pub graded_only: bool,
    pub timings_ms: BTreeMap<String, f64>,
}

impl AnalysisReport {
    /// Basis matrices parsed back into exact form.
    pub fn basis_matrices(&self) -> Result<Vec<ScalarMatrix>> {
        self.lie_basis
            .iter()
            .map(|rows| {
                let text: Vec<String> = rows.iter().map(|r| r.join(", ")).collect();
                crate::parse::parse_matrix(&text.join("\n"))
            })
            .collect()
    }
}

pub fn verdict_for(lie_dimension: usize, ideal_dimension: Option<usize>) -> Verdict {
    match ideal_dimension {
        None => Verdict::Skipped,
        Some(d) if lie_dimension < d => Verdict::NotToric,
        Some(_) => Verdict::Inconclusive,
    }
}

fn matrix_strings(m: &ScalarMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

fn elapsed_ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// The symmetry algebra selected by the options.
pub fn algebra_for(ideal: &IdealSpec, options: &AnalyzeOptions) -> Result<LieAlgebraBasis> {
    if !ideal.is_homogeneous() {
        let g = ideal.generators().iter().find(|g| !g.is_homogeneous()).expect("one exists");
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    if options.nonprime || !ideal.asserted_prime() {
        let mut degrees = ideal.degrees();
        if let Some(d) = options.degree {
            degrees.push(d);
        }
        degrees.sort_unstable();
        degrees.dedup();
        return symmetry_lie_algebra_multidegree(ideal, &degrees);
    }
    match options.degree {
        Some(d) => graded_symmetry_algebra(ideal, d, true),
        None => symmetry_lie_algebra(ideal),
    }
}

/// Runs the analysis on an ideal: symmetry algebra, affine dimension and verdict.
pub fn analyze_ideal(ideal: &IdealSpec, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut timings = BTreeMap::new();
    let t = Instant::now();
    let algebra = algebra_for(ideal, options)?;
    timings.insert("symmetry".to_string(), elapsed_ms(t));

    let t = Instant::now();
    let ideal_dimension = if options.skip_dimension {
        None
    } else {
        Some(krull_dimension(ideal)?)
    };
    if !options.skip_dimension {
        timings.insert("dimension".to_string(), elapsed_ms(t));
    }

    let t = Instant::now();
    let bracket_closed = algebra.is_bracket_closed();
    let diagonal = algebra.diagonal_subalgebra_dim();
    timings.insert("checks".to_string(), elapsed_ms(t));

    Ok(AnalysisReport {
        ring: ideal.ring().variables().to_vec(),
        generators: ideal.generators().iter().map(ToString::to_string).collect(),
        degree_used: algebra.degree_used(),
        graded_rank: algebra.graded_rank(),
        lie_dimension: algebra.dim(),
        lie_basis: algebra.basis().iter().map(matrix_strings).collect(),
        ideal_dimension,
        verdict: verdict_for(algebra.dim(), ideal_dimension),
        diagonal_subalgebra_dimension: diagonal,
        bracket_closed,
        asserted_prime: ideal.asserted_prime() && !options.nonprime,
        graded_only: algebra.graded_only(),
        timings_ms: if options.timings { timings } else { BTreeMap::new() },
    })
}

pub fn analyze(path: &Path, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    analyze_ideal(&read_ideal_file(path)?, options)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

/// The verdict sentence, as printed on the last line of a text report.
pub fn verdict_line(report: &AnalysisReport) -> String {
    let g = report.lie_dimension;
    match (report.verdict, report.ideal_dimension) {
        (Verdict::NotToric, Some(d)) => format!("VERDICT: NOT TORIC (dim g = {g} < dim I = {d})"),
        (Verdict::Inconclusive, Some(d)) => format!("VERDICT: INCONCLUSIVE (dim g = {g} >= dim I = {d})"),
        _ => "VERDICT: SKIPPED (dimension not computed)".to_string(),
    }
}

/// Renders a report. JSON keys follow the field order of [`AnalysisReport`].
pub fn emit_report(report: &AnalysisReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Text => emit_text(report),
    }
}

fn emit_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ring: {}", r.ring.join(", "));
    let _ = writeln!(s, "generators:");
    for g in &r.generators {
        let _ = writeln!(s, "  {g}");
    }
    let _ = writeln!(s, "asserted prime: {}", r.asserted_prime);
    let only = if r.graded_only { " (graded stabilizer only)" } else { "" };
    let _ = writeln!(s, "degree used: {}{only}", r.degree_used);
    let _ = writeln!(s, "graded rank: {}", r.graded_rank);
    let _ = writeln!(s, "symmetry Lie algebra dimension: {}", r.lie_dimension);
    for (k, m) in r.lie_basis.iter().enumerate() {
        let _ = writeln!(s, "basis element {}:", k + 1);
        s.push_str(&format_grid(m));
    }
    let _ = writeln!(s, "bracket closed: {}", r.bracket_closed);
    let _ = writeln!(s, "diagonal subalgebra dimension: {}", r.diagonal_subalgebra_dimension);
    match r.ideal_dimension {
        Some(d) => {
            let _ = writeln!(s, "affine cone dimension: {d}");
        }
        None => {
            let _ = writeln!(s, "affine cone dimension: skipped");
        }
    }
    if !r.timings_ms.is_empty() {
        let parts: Vec<String> = r.timings_ms.iter().map(|(k, v)| format!("{k} {v} ms")).collect();
        let _ = writeln!(s, "timings: {}", parts.join(", "));
    }
    let _ = writeln!(s, "{}", verdict_line(r));
    s
}

/// Right-aligned grid with two-space indent.
pub fn format_grid(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    let mut s = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(s, "  [ {} ]", cells.join("  "));
    }
    s
}
