//! The `symlie` command line. Commands write to the given sink and return
//! an exit status: 0 on success whatever the verdict, 1 for unreadable or
//! unparsable input, 2 for input that violates a precondition.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::graded::IdealSpec;
use crate::groebner::{buchberger, krull_dimension, MonomialOrder};
use crate::lie::{symmetry_lie_algebra, StabilizerSystem};
use crate::models::{
    gaussian_cofactor_map, kernel_via_elimination, staged_tree_parametrization, verify_gaussian_kernel,
    verify_staged_kernel, ColoredGraph, StagedTree,
};
use crate::poly::{is_binomial_set, Monomial, PolyRing, Polynomial};
use crate::report::{
    algebra_for, analyze_ideal, emit_report, format_grid, read_ideal_file, read_matrix_file, AnalyzeOptions,
    ReportFormat,
};

#[derive(Parser, Debug)]
#[command(name = "symlie", version, about = "Symmetry Lie algebras of homogeneous ideals and a non-toricity test")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Symmetry algebra, dimension and verdict for an ideal file.
    Analyze {
        file: PathBuf,
        /// Stabilize [I]_D instead of the maximal generator degree.
        #[arg(long)]
        degree: Option<u32>,
        /// Skip the Gröbner dimension computation.
        #[arg(long)]
        no_dimension: bool,
        /// Intersect the stabilizers over all generator degrees.
        #[arg(long)]
        nonprime: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock timings.
        #[arg(long)]
        timings: bool,
    },
    /// Symmetry algebra basis and its defining linear system.
    Lie { file: PathBuf },
    /// Krull dimension of R/I (the affine cone).
    Dim { file: PathBuf },
    /// Conjugate the symmetry algebra: B⁻¹ A B for each basis element.
    Conjugate {
        file: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Apply x_i ↦ Σ_j B_ij x_j to the generators.
    ChangeVars {
        file: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Statistical model parametrizations.
    #[command(subcommand)]
    Model(ModelCommand),
}

#[derive(Subcommand, Debug)]
pub enum ModelCommand {
    /// Monomial parametrization of a staged tree.
    StagedTree {
        tree: PathBuf,
        /// Check that the generators of this ideal file lie in the kernel.
        #[arg(long)]
        verify: Option<PathBuf>,
        /// Compute the kernel by elimination (small trees only).
        #[arg(long)]
        kernel: bool,
    },
    /// Adjugate parametrization of a (colored) Gaussian graphical model.
    Gaussian {
        graph: PathBuf,
        #[arg(long)]
        verify: Option<PathBuf>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            1
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            0
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(&cli.command) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn execute(cmd: &Command) -> Result<String> {
    match cmd {
        Command::Analyze {
            file,
            degree,
            no_dimension,
            nonprime,
            format,
            out,
            timings,
        } => {
            let ideal = read_ideal_file(file)?;
            let opts = AnalyzeOptions {
                degree: *degree,
                skip_dimension: *no_dimension,
                nonprime: *nonprime,
                timings: *timings,
            };
            let report = analyze_ideal(&ideal, &opts)?;
            let fmt = match format {
                Format::Json => ReportFormat::Json,
                Format::Text => ReportFormat::Text,
            };
            let text = emit_report(&report, fmt);
            match out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Lie { file } => lie(&read_ideal_file(file)?),
        Command::Dim { file } => dim(&read_ideal_file(file)?),
        Command::Conjugate { file, matrix } => conjugate(&read_ideal_file(file)?, &read_matrix_file(matrix)?),
        Command::ChangeVars { file, matrix } => change_vars(&read_ideal_file(file)?, &read_matrix_file(matrix)?),
        Command::Model(ModelCommand::StagedTree { tree, verify, kernel }) => {
            staged(&StagedTree::parse(&read_text(tree)?)?, verify.as_deref(), *kernel)
        }
        Command::Model(ModelCommand::Gaussian { graph, verify }) => {
            gaussian(&ColoredGraph::parse(&read_text(graph)?)?, verify.as_deref())
        }
    }
}

/// The system rows as linear forms in `g11, …, gnn`.
pub fn system_equations(system: &StabilizerSystem) -> Result<Vec<Polynomial>> {
    let n = system.n();
    let names = (1..=n).flat_map(|a| (1..=n).map(move |b| format!("g{a}{b}")));
    let ring = PolyRing::new(names)?;
    Ok(system
        .rows()
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                &ring,
                row.iter()
                    .enumerate()
                    .map(|(k, c)| (Monomial::var(n * n, k), c.clone())),
            )
        })
        .collect())
}

fn grid(m: &crate::matrix::ScalarMatrix) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect();
    format_grid(&rows)
}

fn lie(ideal: &IdealSpec) -> Result<String> {
    let algebra = algebra_for(ideal, &AnalyzeOptions::default())?;
    let mut s = String::new();
    let _ = writeln!(s, "dimension: {}", algebra.dim());
    let _ = writeln!(s, "degree used: {}", algebra.degree_used());
    let _ = writeln!(s, "graded rank: {}", algebra.graded_rank());
    if algebra.is_vacuous() {
        let _ = writeln!(s, "warning: the graded component is zero, so every matrix stabilizes it");
    }
    let system = crate::lie::stabilizer_system(ideal, algebra.degree_used(), true)?;
    if ideal.asserted_prime() {
        let eqs = system_equations(&system)?;
        let _ = writeln!(s, "stabilizer system ({} equations):", eqs.len());
        for e in eqs {
            let _ = writeln!(s, "  {e} = 0");
        }
    }
    for (k, m) in algebra.basis().iter().enumerate() {
        let _ = writeln!(s, "basis element {}:", k + 1);
        s.push_str(&grid(m));
    }
    let _ = writeln!(s, "bracket closed: {}", algebra.is_bracket_closed());
    Ok(s)
}

fn dim(ideal: &IdealSpec) -> Result<String> {
    let d = krull_dimension(ideal)?;
    let gb = buchberger(ideal.ring(), ideal.generators(), MonomialOrder::Grevlex)?;
    Ok(format!(
        "affine cone dimension: {d}\ngrevlex Groebner basis size: {}\n",
        gb.len()
    ))
}

fn conjugate(ideal: &IdealSpec, b: &crate::matrix::ScalarMatrix) -> Result<String> {
    let algebra = symmetry_lie_algebra(ideal)?;
    let conj = algebra.conjugate(b)?;
    let mut s = String::new();
    let _ = writeln!(s, "dimension: {}", algebra.dim());
    for (k, m) in conj.iter().enumerate() {
        let _ = writeln!(s, "conjugated basis element {}:", k + 1);
        s.push_str(&grid(m));
    }
    let _ = writeln!(
        s,
        "diagonal subalgebra dimension: {} before, {} after",
        algebra.diagonal_subalgebra_dim(),
        crate::lie::diagonal_subalgebra_dim(&conj)
    );
    Ok(s)
}

fn change_vars(ideal: &IdealSpec, b: &crate::matrix::ScalarMatrix) -> Result<String> {
    let images = ideal
        .generators()
        .iter()
        .map(|g| g.change_variables(b))
        .collect::<Result<Vec<_>>>()?;
    let mut s = String::new();
    let _ = writeln!(s, "ring: {}", ideal.ring().variables().join(", "));
    let _ = writeln!(s, "generators:");
    for p in &images {
        let _ = writeln!(s, "{p}");
    }
    let _ = writeln!(s, "# binomial generators: {}", is_binomial_set(&images));
    let reduced = row_reduced(&images);
    let _ = writeln!(s, "# binomial after row reduction: {}", is_binomial_set(&reduced));
    if !is_binomial_set(&images) && is_binomial_set(&reduced) {
        for p in &reduced {
            let _ = writeln!(s, "#   {p}");
        }
    }
    Ok(s)
}

/// Reduced row echelon form of the generators, one block per degree. Two
/// spanning sets of the same space give the same output.
fn row_reduced(gens: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = gens.first() else { return Vec::new() };
    let ring = first.ring();
    let mut degrees: Vec<u32> = gens.iter().filter_map(Polynomial::total_degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = Vec::new();
    for d in degrees {
        let block: Vec<&Polynomial> = gens.iter().filter(|g| g.total_degree() == Some(d)).collect();
        let mut monos: Vec<Monomial> = block.iter().flat_map(|g| g.terms().map(|(m, _)| m.clone())).collect();
        monos.sort_by(|a, b| b.grevlex_cmp(a));
        monos.dedup();
        let rows = block
            .iter()
            .map(|g| monos.iter().map(|m| g.coefficient(m)).collect())
            .collect();
        let Ok(m) = crate::matrix::ScalarMatrix::from_rows(rows) else { continue };
        let (r, pivots) = m.rref();
        for i in 0..pivots.len() {
            out.push(Polynomial::from_terms(
                ring,
                monos.iter().cloned().zip(r.row(i).iter().cloned()),
            ));
        }
    }
    out
}

fn verification_lines(s: &mut String, gens: &[Polynomial], ok: &[bool]) {
    for (g, v) in gens.iter().zip(ok) {
        let _ = writeln!(s, "  {}: {g}", if *v { "in kernel" } else { "NOT in kernel" });
    }
}

fn staged(tree: &StagedTree, verify: Option<&Path>, kernel: bool) -> Result<String> {
    let param = staged_tree_parametrization(tree)?;
    let mut s = String::new();
    let _ = writeln!(s, "leaves: {}", tree.num_leaves());
    let _ = writeln!(s, "stages: {}", tree.num_stages());
    let _ = writeln!(s, "parameters: {}", param.ring().variables().join(", "));
    for (r, img) in param.images().iter().enumerate() {
        let _ = writeln!(s, "  x{} -> {img}", r + 1);
    }
    if let Some(path) = verify {
        let ideal = read_ideal_file(path)?;
        let ok = verify_staged_kernel(tree, ideal.generators())?;
        let _ = writeln!(s, "verification:");
        verification_lines(&mut s, ideal.generators(), &ok);
    }
    if kernel {
        let _ = writeln!(s, "kernel:");
        match kernel_via_elimination(param.images(), &param.stage_relations())? {
            Some(k) => {
                for g in k.generators() {
                    let _ = writeln!(s, "  {g}");
                }
            }
            None => {
                let _ = writeln!(s, "  0");
            }
        }
    }
    Ok(s)
}

fn gaussian(graph: &ColoredGraph, verify: Option<&Path>) -> Result<String> {
    let map = gaussian_cofactor_map(graph)?;
    let n = graph.n();
    let mut s = String::new();
    let _ = writeln!(s, "parameters: {}", map.k_ring().variables().join(", "));
    let _ = writeln!(s, "K:");
    let k: Vec<Vec<String>> = map
        .k_matrix()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    s.push_str(&format_grid(&k));
    let _ = writeln!(s, "det K = {}", map.determinant());
    for (i, j) in crate::models::symmetric_positions(n) {
        let _ = writeln!(s, "  s{i}{j} -> {}", map.adjugate()[i - 1][j - 1]);
    }
    if let Some(path) = verify {
        let ideal = read_ideal_file(path)?;
        let ok = verify_gaussian_kernel(graph, ideal.generators())?;
        let _ = writeln!(s, "verification:");
        verification_lines(&mut s, ideal.generators(), &ok);
    }
    Ok(s)
}
