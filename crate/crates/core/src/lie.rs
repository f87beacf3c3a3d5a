//! The star action of `M_n` on polynomials and the symmetry Lie algebra of a
//! homogeneous ideal, computed as the exact nullspace of a linear system.
//!
//! For `g ∈ M_n` the action is the derivation
//!
//! ```text
//! g * p = − Σ_{a,b} g_ab · x_b · ∂p/∂x_a
//! ```
//!
//! so `g * x_a = −Σ_b g_ab x_b`. The algebra of an ideal generated in degrees
//! at most `d` is `{ g : g * [I]_d ⊆ [I]_d }`. Because `g ↦ g * f` is linear,
//! membership of `g * f_i` in `[I]_d` for every basis element `f_i` is a
//! linear condition on the `n²` entries of `g`: reduce `vec(E_ab * f_i)`
//! modulo `[I]_d` and require the combined residual to vanish.

use crate::error::{Error, Result};
use crate::graded::{graded_basis, IdealSpec};
use crate::matrix::{EchelonBasis, ScalarMatrix};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

use num_traits::Zero;

/// `g * p`.
pub fn star_action(g: &ScalarMatrix, p: &Polynomial) -> Result<Polynomial> {
    let n = p.ring().arity();
    if g.rows() != n || g.cols() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: g.rows(),
        });
    }
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        for (a, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let factor = -(c * &Scalar::from_int(e as i64));
            for b in 0..n {
                let gab = &g[(a, b)];
                if gab.is_zero() {
                    continue;
                }
                let mut exps = m.exponents().to_vec();
                exps[a] -= 1;
                exps[b] += 1;
                terms.push((Monomial::new(exps), &factor * gab));
            }
        }
    }
    Ok(Polynomial::from_terms(p.ring(), terms))
}

/// `E_ab * p = −x_b · ∂p/∂x_a`.
pub fn star_action_elementary(a: usize, b: usize, p: &Polynomial) -> Polynomial {
    let n = p.ring().arity();
    let terms = p.terms().filter_map(|(m, c)| {
        let e = m.exponents()[a];
        if e == 0 {
            return None;
        }
        let mut exps = m.exponents().to_vec();
        exps[a] -= 1;
        exps[b] += 1;
        debug_assert!(b < n);
        Some((Monomial::new(exps), -(c * &Scalar::from_int(e as i64))))
    });
    Polynomial::from_terms(p.ring(), terms)
}

/// The linear constraints on the entries of `g` (row-major unknown order
/// `g11, g12, …, gnn`) expressing `g * [I]_d ⊆ [I]_d`.
#[derive(Clone, Debug)]
pub struct StabilizerSystem {
    n: usize,
    degree: u32,
    graded_rank: usize,
    graded_only: bool,
    rows: Vec<Vec<Scalar>>,
}

impl StabilizerSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn graded_rank(&self) -> usize {
        self.graded_rank
    }

    /// Set when `d` is below the maximal generator degree, so the solution is
    /// the stabilizer of `[I]_d` alone.
    pub fn graded_only(&self) -> bool {
        self.graded_only
    }

    /// `[I]_d = 0`: every matrix stabilizes it.
    pub fn is_vacuous(&self) -> bool {
        self.graded_rank == 0
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn num_unknowns(&self) -> usize {
        self.n * self.n
    }

    pub fn to_matrix(&self) -> ScalarMatrix {
        if self.rows.is_empty() {
            ScalarMatrix::zeros(0, self.num_unknowns())
        } else {
            ScalarMatrix::from_rows(self.rows.clone()).expect("rectangular system")
        }
    }

    /// Whether `g` satisfies every constraint.
    pub fn is_satisfied_by(&self, g: &ScalarMatrix) -> Result<bool> {
        check_square(g, self.n)?;
        let v = g.as_row_major();
        Ok(self.rows.iter().all(|r| crate::matrix::dot(r, v).is_zero()))
    }

    /// Exact nullspace in canonical form.
    pub fn solve(&self) -> LieAlgebraBasis {
        let nn = self.num_unknowns();
        let vectors = if self.rows.is_empty() {
            (0..nn)
                .map(|k| {
                    let mut v = vec![Scalar::zero(); nn];
                    v[k] = Scalar::from_int(1);
                    v
                })
                .collect()
        } else {
            self.to_matrix().nullspace()
        };
        let basis = vectors
            .into_iter()
            .map(|v| ScalarMatrix::from_row_major(self.n, v).expect("n² entries"))
            .collect();
        LieAlgebraBasis {
            n: self.n,
            basis,
            degree_used: self.degree,
            graded_rank: self.graded_rank,
            system_rows: self.rows.len(),
            graded_only: self.graded_only,
        }
    }

    fn stack(mut self, other: StabilizerSystem) -> StabilizerSystem {
        if other.degree > self.degree {
            self.degree = other.degree;
            self.graded_rank = other.graded_rank;
        }
        self.graded_only &= other.graded_only;
        self.rows.extend(other.rows);
        self
    }
}

fn check_square(g: &ScalarMatrix, n: usize) -> Result<()> {
    if g.rows() != n || g.cols() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: g.rows(),
        });
    }
    Ok(())
}

fn require_homogeneous(ideal: &IdealSpec) -> Result<()> {
    match ideal.generators().iter().find(|g| !g.is_homogeneous()) {
        Some(g) => Err(Error::NotHomogeneous(g.to_string())),
        None => Ok(()),
    }
}

/// Builds the constraint system at degree `d`.
///
/// `d` below the maximal generator degree is refused unless `graded_only` is
/// set, in which case the system describes the stabilizer of `[I]_d` only.
pub fn stabilizer_system(ideal: &IdealSpec, d: u32, graded_only: bool) -> Result<StabilizerSystem> {
    require_homogeneous(ideal)?;
    let max = ideal.max_degree();
    if d < max && !graded_only {
        return Err(Error::DegreeBelowMax { degree: d, max });
    }
    let n = ideal.ring().arity();
    let basis = graded_basis(ideal, d);
    let pivots: Vec<usize> = basis.echelon().pivots().collect();
    let mut is_pivot = vec![false; basis.frame().len()];
    for p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..basis.frame().len()).filter(|&c| !is_pivot[c]).collect();

    let mut rows = Vec::new();
    for f in basis.members() {
        // columns[ab][c]: residual coordinate c of E_ab * f
        let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let image = star_action_elementary(a, b, f);
                if image.is_zero() {
                    columns.push(Vec::new());
                    continue;
                }
                let v = image.vectorize_against(basis.frame());
                columns.push(basis.residual(&v));
            }
        }
        for &c in &free {
            let row: Vec<Scalar> = columns
                .iter()
                .map(|col| col.get(c).cloned().unwrap_or_else(Scalar::zero))
                .collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    Ok(StabilizerSystem {
        n,
        degree: d,
        graded_rank: basis.rank(),
        graded_only: d < max,
        rows,
    })
}

/// A basis of a Lie subalgebra of `M_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraBasis {
    n: usize,
    basis: Vec<ScalarMatrix>,
    degree_used: u32,
    graded_rank: usize,
    system_rows: usize,
    graded_only: bool,
}

impl LieAlgebraBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ScalarMatrix] {
        &self.basis
    }

    pub fn degree_used(&self) -> u32 {
        self.degree_used
    }

    pub fn graded_rank(&self) -> usize {
        self.graded_rank
    }

    pub fn system_rows(&self) -> usize {
        self.system_rows
    }

    pub fn graded_only(&self) -> bool {
        self.graded_only
    }

    /// `[I]_d` was zero, so the result is all of `M_n`.
    pub fn is_vacuous(&self) -> bool {
        self.graded_rank == 0
    }

    fn span(&self) -> EchelonBasis {
        let mut e = EchelonBasis::new(self.n * self.n);
        for m in &self.basis {
            e.insert(m.as_row_major());
        }
        e
    }

    /// Whether `a` lies in the span of the basis.
    pub fn contains(&self, a: &ScalarMatrix) -> Result<bool> {
        check_square(a, self.n)?;
        Ok(self.span().contains(a.as_row_major()))
    }

    /// Whether every commutator of basis elements lies in the span.
    pub fn is_bracket_closed(&self) -> bool {
        let span = self.span();
        self.basis.iter().enumerate().all(|(k, a)| {
            self.basis[k + 1..]
                .iter()
                .all(|b| span.contains(a.commutator(b).as_row_major()))
        })
    }

    /// `[B⁻¹ A B for A in basis]`.
    pub fn conjugate(&self, b: &ScalarMatrix) -> Result<Vec<ScalarMatrix>> {
        conjugate_matrices(&self.basis, b)
    }

    pub fn diagonal_subalgebra_dim(&self) -> usize {
        diagonal_subalgebra_dim(&self.basis)
    }
}

/// `g_I` at the maximal generator degree.
pub fn symmetry_lie_algebra(ideal: &IdealSpec) -> Result<LieAlgebraBasis> {
    require_homogeneous(ideal)?;
    Ok(stabilizer_system(ideal, ideal.max_degree(), false)?.solve())
}

/// The stabilizer of `[I]_d` for an explicit degree.
pub fn graded_symmetry_algebra(ideal: &IdealSpec, d: u32, graded_only: bool) -> Result<LieAlgebraBasis> {
    Ok(stabilizer_system(ideal, d, graded_only)?.solve())
}

/// Intersection of the graded stabilizers over the listed degrees, by
/// stacking their systems. Suited to ideals not known to be prime.
pub fn symmetry_lie_algebra_multidegree(ideal: &IdealSpec, degrees: &[u32]) -> Result<LieAlgebraBasis> {
    let mut systems = degrees
        .iter()
        .map(|&d| stabilizer_system(ideal, d, true));
    let first = systems.next().ok_or(Error::EmptyIdeal)??;
    let stacked = systems.try_fold(first, |acc, s| s.map(|s| acc.stack(s)))?;
    Ok(stacked.solve())
}

/// Whether `a` belongs to the algebra.
pub fn membership(algebra: &LieAlgebraBasis, a: &ScalarMatrix) -> Result<bool> {
    algebra.contains(a)
}

pub fn bracket_closure_check(algebra: &LieAlgebraBasis) -> bool {
    algebra.is_bracket_closed()
}

/// `[B⁻¹ A B for A in matrices]`.
pub fn conjugate_matrices(matrices: &[ScalarMatrix], b: &ScalarMatrix) -> Result<Vec<ScalarMatrix>> {
    let inv = b.inverse()?;
    matrices
        .iter()
        .map(|a| {
            if a.rows() != b.rows() || a.cols() != b.cols() {
                return Err(Error::SizeMismatch {
                    expected: b.rows(),
                    found: a.rows(),
                });
            }
            Ok(&(&inv * a) * b)
        })
        .collect()
}

/// Dimension of the diagonal matrices inside the span of `matrices`.
pub fn diagonal_subalgebra_dim(matrices: &[ScalarMatrix]) -> usize {
    let Some(first) = matrices.first() else {
        return 0;
    };
    let (r, c) = (first.rows(), first.cols());
    let mut span = EchelonBasis::new(r * c);
    let independent: Vec<&ScalarMatrix> = matrices
        .iter()
        .filter(|m| span.insert(m.as_row_major()))
        .collect();
    // coefficients λ with Σ λ_k A_k diagonal: one equation per off-diagonal slot
    let rows: Vec<Vec<Scalar>> = (0..r)
        .flat_map(|i| (0..c).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| independent.iter().map(|a| a[(i, j)].clone()).collect::<Vec<_>>())
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();
    if rows.is_empty() {
        return independent.len();
    }
    let system = ScalarMatrix::from_rows(rows).expect("rectangular");
    independent.len() - system.rank()
}
