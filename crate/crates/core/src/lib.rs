pub mod cli;
pub mod error;
pub mod graded;
pub mod groebner;
pub mod lie;
pub mod matrix;
pub mod models;
pub mod parse;
pub mod poly;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use graded::{graded_basis, spanning_set, GradedBasis, IdealSpec};
pub use groebner::{
    buchberger, elimination_ideal, ideal_membership, krull_dimension, normal_form, GroebnerBasis, MonomialOrder,
};
pub use lie::{
    bracket_closure_check, conjugate_matrices, diagonal_subalgebra_dim, graded_symmetry_algebra, membership,
    stabilizer_system, star_action, star_action_elementary, symmetry_lie_algebra,
    symmetry_lie_algebra_multidegree, LieAlgebraBasis, StabilizerSystem,
};
pub use matrix::{EchelonBasis, ScalarMatrix};
pub use models::{
    gaussian_cofactor_map, kernel_via_elimination, sigma_ring, staged_tree_parametrization, verify_gaussian_kernel,
    verify_staged_kernel, ColoredGraph, GaussianCofactors, StagedParametrization, StagedTree,
};
pub use parse::{parse_matrix, parse_polynomial, parse_scalar};
pub use poly::{is_binomial_set, monomial_basis, Homogeneity, Monomial, PolyRing, Polynomial};
pub use report::{analyze, analyze_ideal, emit_report, parse_ideal_file, AnalysisReport, AnalyzeOptions, ReportFormat, Verdict};
pub use scalar::Scalar;
