//! Graded components `[I]_d` of homogeneous ideals.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::EchelonBasis;
use crate::poly::{monomial_basis, Homogeneity, Monomial, PolyRing, Polynomial};
use crate::scalar::Scalar;

/// A finitely generated ideal given by its generators, in input order.
///
/// `asserted_prime` is never checked; it records what the caller claims and
/// decides whether the maximal generator degree is enough to pin the
/// symmetry algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSpec {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    asserted_prime: bool,
}

impl IdealSpec {
    /// A homogeneous ideal: generators must be nonzero and homogeneous.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        let ideal = Self::new_affine(ring, generators)?;
        if let Some(g) = ideal.generators.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
        Ok(ideal)
    }

    /// An ideal with arbitrary nonzero generators, for Gröbner computations
    /// such as elimination where inhomogeneous input is natural.
    pub fn new_affine(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        if generators.iter().any(Polynomial::is_zero) {
            return Err(Error::ZeroGenerator);
        }
        if let Some(g) = generators.iter().find(|g| g.ring() != ring) {
            return Err(Error::InvalidRing(format!("generator `{g}` belongs to another ring")));
        }
        Ok(IdealSpec {
            ring: ring.clone(),
            generators,
            asserted_prime: true,
        })
    }

    /// Parses one generator per entry.
    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing>, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| crate::parse::parse_polynomial(g.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn with_asserted_prime(mut self, prime: bool) -> Self {
        self.asserted_prime = prime;
        self
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn asserted_prime(&self) -> bool {
        self.asserted_prime
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// Degrees of the generators (total degree for inhomogeneous ones).
    pub fn degrees(&self) -> Vec<u32> {
        self.generators
            .iter()
            .map(|g| g.total_degree().unwrap_or(0))
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.degrees().into_iter().min().unwrap_or(0)
    }
}

/// All products `m·p_i` with `deg p_i ≤ d` and `m` a monomial of degree
/// `d − deg p_i`, in generator order and ascending monomial order.
pub fn spanning_set(ideal: &IdealSpec, d: u32) -> Vec<Polynomial> {
    let n = ideal.ring.arity();
    let one = Scalar::from_int(1);
    let mut out = Vec::new();
    for g in &ideal.generators {
        let e = match g.homogeneity() {
            Homogeneity::Degree(e) => e,
            _ => continue,
        };
        if e > d {
            continue;
        }
        out.extend(monomial_basis(n, d - e).iter().map(|m| g.mul_monomial(m, &one)));
    }
    out
}

/// A basis of `[I]_d` drawn from the spanning set, with the coordinate frame
/// it was vectorized against.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    degree: u32,
    frame: Vec<Monomial>,
    members: Vec<Polynomial>,
    member_vectors: Vec<Vec<Scalar>>,
    echelon: EchelonBasis,
}

impl GradedBasis {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Ascending grevlex monomials of degree `d`.
    pub fn frame(&self) -> &[Monomial] {
        &self.frame
    }

    pub fn members(&self) -> &[Polynomial] {
        &self.members
    }

    pub fn member_vectors(&self) -> &[Vec<Scalar>] {
        &self.member_vectors
    }

    pub fn rank(&self) -> usize {
        self.members.len()
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.echelon
    }

    /// Whether a homogeneous polynomial of this degree (or zero) lies in `[I]_d`.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        let v = p.vectorize(self.degree)?;
        Ok(self.echelon.contains(&v))
    }

    /// Residual of a degree-`d` coordinate vector modulo `[I]_d`.
    pub fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.echelon.reduce(v)
    }
}

/// Greedy left-to-right independent subset of [`spanning_set`], selected by
/// exact elimination.
pub fn graded_basis(ideal: &IdealSpec, d: u32) -> GradedBasis {
    let frame = monomial_basis(ideal.ring.arity(), d);
    let mut echelon = EchelonBasis::new(frame.len());
    let mut members = Vec::new();
    let mut member_vectors = Vec::new();
    for p in spanning_set(ideal, d) {
        let v = p.vectorize_against(&frame);
        if echelon.insert(&v) {
            members.push(p);
            member_vectors.push(v);
        }
    }
    GradedBasis {
        degree: d,
        frame,
        members,
        member_vectors,
        echelon,
    }
}
