//! Polynomial rings, monomials and sparse polynomials over `Q(i)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ScalarMatrix;
use crate::scalar::Scalar;

/// An ordered list of distinct variable names. Earlier variables are greater.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "i"
}

impl PolyRing {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (k, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if vars[..k].contains(v) {
                return Err(Error::InvalidRing(format!("variable `{v}` declared twice")));
            }
        }
        Ok(Arc::new(PolyRing { vars }))
    }

    /// `x1, …, xn`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Arc<Self>> {
        Self::new((1..=n).map(|k| format!("{prefix}{k}")))
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.vars.join(", "))
    }
}

/// An exponent vector. `Ord` is graded reverse lexicographic with the first
/// variable greatest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Bit mask of the variables that occur. Only meaningful for arity ≤ 64.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (k, _)| m | (1 << k))
    }

    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    // smaller exponent in the last differing variable wins
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }

    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub(crate) fn format(&self, ring: &PolyRing) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                if e == 1 {
                    ring.vars[k].clone()
                } else {
                    format!("{}^{}", ring.vars[k], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All degree-`d` monomials in `n` variables in ascending grevlex order.
pub fn monomial_basis(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if k + 1 == n {
            cur[k] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[k] = e;
            rec(k + 1, left - e, cur, out);
        }
    }
    if n == 0 {
        return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    rec(0, d, &mut cur, &mut out);
    out.sort();
    out
}

/// Result of a homogeneity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Degree(u32),
    Inhomogeneous,
}

/// A sparse polynomial; terms are keyed by monomial in grevlex order and no
/// stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.arity()), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Scalar::one())
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::term(ring, Monomial::var(ring.arity(), index), Scalar::one())
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.arity(), ring.arity(), "monomial arity does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity does not match ring");
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) if degrees.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Inhomogeneous,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity() != Homogeneity::Inhomogeneous
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        if index >= self.ring.arity() {
            return Err(Error::VariableOutOfRange {
                index,
                arity: self.ring.arity(),
            });
        }
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[index] -= 1;
            out.add_term(Monomial(exps), &(c * &Scalar::from_int(e as i64)));
        }
        Ok(out)
    }

    /// Substitutes `x_k ↦ images[k]` and expands. The images fix the target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::SizeMismatch {
                expected: self.ring.arity(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Err(Error::InvalidRing("empty substitution".into())),
        };
        let mut cache: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[k].len() <= e as usize {
                    let next = &cache[k][cache[k].len() - 1] * &images[k];
                    cache[k].push(next);
                }
                t = &t * &cache[k][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Linear change of variables `x_i ↦ Σ_j B[i][j]·y_j`, where `y` are the
    /// variables of `target` (which may be the polynomial's own ring).
    pub fn change_variables_into(&self, b: &ScalarMatrix, target: &Arc<PolyRing>) -> Result<Polynomial> {
        let n = self.ring.arity();
        if b.rows() != n || b.cols() != target.arity() {
            return Err(Error::SizeMismatch {
                expected: n,
                found: b.rows(),
            });
        }
        if !b.is_square() || b.determinant()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                Polynomial::from_terms(
                    target,
                    (0..n).map(|j| (Monomial::var(n, j), b[(i, j)].clone())),
                )
            })
            .collect();
        self.substitute(&images)
    }

    /// [`Polynomial::change_variables_into`] with the polynomial's own ring.
    pub fn change_variables(&self, b: &ScalarMatrix) -> Result<Polynomial> {
        let ring = self.ring.clone();
        self.change_variables_into(b, &ring)
    }

    /// Coefficient vector against [`monomial_basis`]`(n, d)`.
    pub fn vectorize(&self, d: u32) -> Result<Vec<Scalar>> {
        match self.homogeneity() {
            Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous(self.to_string())),
            Homogeneity::Degree(e) if e != d => {
                return Err(Error::DegreeMismatch {
                    expected: d,
                    found: e,
                })
            }
            _ => {}
        }
        let basis = monomial_basis(self.ring.arity(), d);
        Ok(self.vectorize_against(&basis))
    }

    /// Coefficients read off against an ascending monomial frame; monomials
    /// outside the frame are ignored.
    pub(crate) fn vectorize_against(&self, frame: &[Monomial]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); frame.len()];
        for (m, c) in &self.terms {
            if let Ok(k) = frame.binary_search(m) {
                v[k] = c.clone();
            }
        }
        v
    }

    /// Leading monomial and coefficient under grevlex.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Moves the polynomial into another ring with identical variables in a
    /// possibly different order, mapping variables by name.
    pub fn rename_into(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .ring
            .vars
            .iter()
            .map(|v| {
                target.index_of(v).ok_or_else(|| Error::UndeclaredIdentifier {
                    name: v.clone(),
                    line: 0,
                    column: 0,
                })
            })
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.arity()];
            for (k, &x) in m.0.iter().enumerate() {
                e[map[k]] += x;
            }
            (Monomial(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }
}

/// True iff every generator has at most two terms.
pub fn is_binomial_set(gens: &[Polynomial]) -> bool {
    gens.iter().all(|g| g.num_terms() <= 2)
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = Polynomial::zero(&self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), &(x * y));
            }
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

fn format_coefficient(c: &Scalar) -> (bool, String) {
    // returns (negative, magnitude text); "" stands for a unit coefficient
    if c.is_negative_real() || c.is_negative_imaginary() {
        let (_, s) = format_coefficient(&-c);
        return (true, s);
    }
    if c.is_one() {
        return (false, String::new());
    }
    let s = c.to_string();
    if !c.is_real() && !c.re().is_zero() {
        (false, format!("({s})"))
    } else {
        (false, s)
    }
}

/// Canonical text: descending grevlex terms, `*` between factors, `^` for
/// powers, coefficients in lowest terms. The output re-parses to the same
/// polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, coef) = format_coefficient(c);
            let body = match (coef.is_empty(), m.is_one()) {
                (true, true) => "1".to_string(),
                (true, false) => m.format(&self.ring),
                (false, true) => coef,
                (false, false) => format!("{}*{}", coef, m.format(&self.ring)),
            };
            match (k, neg) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring(n: usize) -> Arc<PolyRing> {
        PolyRing::numbered("x", n).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::new(Vec::<String>::new()).is_err());
        assert!(PolyRing::new(["x", "x"]).is_err());
        assert!(PolyRing::new(["i"]).is_err());
        assert!(PolyRing::new(["1x"]).is_err());
        assert!(PolyRing::new(["s_11", "y2"]).is_ok());
    }

    #[test]
    fn grevlex_basis_n3_d2() {
        let r = ring(3);
        let names: Vec<String> = monomial_basis(3, 2).iter().map(|m| m.format(&r)).collect();
        assert_eq!(names, ["x3^2", "x2*x3", "x1*x3", "x2^2", "x1*x2", "x1^2"]);
    }

    #[test]
    fn small_bases() {
        let r1 = ring(1);
        let b = monomial_basis(1, 3);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].format(&r1), "x1^3");
        let r2 = ring(2);
        let names: Vec<String> = monomial_basis(2, 1).iter().map(|m| m.format(&r2)).collect();
        assert_eq!(names, ["x2", "x1"]);
    }

    #[test]
    fn basis_sizes() {
        // C(n+d-1, d)
        fn binom(n: u64, k: u64) -> u64 {
            (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
        }
        for n in 1..6usize {
            for d in 0..5u32 {
                let b = monomial_basis(n, d);
                assert_eq!(b.len() as u64, binom(n as u64 + d as u64 - 1, d as u64));
                assert!(b.iter().all(|m| m.degree() == d));
                assert!(b.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn vectorize_reference_vector() {
        let r = ring(3);
        let v = p(&r, "x1^2 + 2*x1*x3 - x2*x3").vectorize(2).unwrap();
        assert_eq!(v, ints(&[0, -1, 2, 0, 0, 1]));
        assert_eq!(Polynomial::zero(&r).vectorize(2).unwrap(), ints(&[0; 6]));
        let r2 = ring(2);
        assert_eq!(p(&r2, "x2^2").vectorize(2).unwrap(), ints(&[1, 0, 0]));
    }

    #[test]
    fn vectorize_rejects_bad_degree() {
        let r = ring(2);
        assert!(matches!(p(&r, "x1 + x1^2").vectorize(2), Err(Error::NotHomogeneous(_))));
        assert!(matches!(p(&r, "x1^3").vectorize(2), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn homogeneity() {
        let r = ring(3);
        assert_eq!(p(&r, "x1*x3 - x2*x3 - x2^2").homogeneity(), Homogeneity::Degree(2));
        assert_eq!(p(&r, "x1 + x1^2").homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(Polynomial::zero(&r).homogeneity(), Homogeneity::Zero);
    }

    #[test]
    fn binomial_sets() {
        let r = PolyRing::new(["s11", "s12", "s22", "s13", "s23", "s33"]).unwrap();
        let gens = [p(&r, "i*s12^2 + s11*s33"), p(&r, "i*s22^2 - s13*s33")];
        assert!(is_binomial_set(&gens));
        let r2 = ring(2);
        assert!(!is_binomial_set(&[p(&r2, "x1^2 + x2^2 + x1*x2")]));
        assert!(is_binomial_set(&[]));
    }

    #[test]
    fn derivatives() {
        let r = ring(3);
        assert_eq!(p(&r, "x1^2*x2").partial_derivative(0).unwrap(), p(&r, "2*x1*x2"));
        assert!(p(&r, "7").partial_derivative(0).unwrap().is_zero());
        assert_eq!(
            p(&r, "x1*x3 - x2*x3 - x2^2").partial_derivative(1).unwrap(),
            p(&r, "-x3 - 2*x2")
        );
        assert!(p(&r, "x1").partial_derivative(3).is_err());
    }

    #[test]
    fn difference_of_squares_substitution() {
        let r = ring(2);
        let b = ScalarMatrix::from_i64_rows(&[&[1, 1], &[1, -1]]);
        let q = p(&r, "x1^2 - x2^2").change_variables(&b).unwrap();
        assert_eq!(q, p(&r, "4*x1*x2"));
        let id = ScalarMatrix::identity(2);
        let f = p(&r, "x1^2 + 3*x1*x2");
        assert_eq!(f.change_variables(&id).unwrap(), f);
        let singular = ScalarMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(f.change_variables(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn composition_order() {
        // applying C then B equals applying the product C·B
        let r = ring(2);
        let f = p(&r, "x1^2 + 3*x1*x2 - x2^2");
        let b = ScalarMatrix::from_i64_rows(&[&[1, 2], &[0, 1]]);
        let c = ScalarMatrix::from_i64_rows(&[&[2, 0], &[1, 1]]);
        let lhs = f.change_variables(&c).unwrap().change_variables(&b).unwrap();
        assert_eq!(lhs, f.change_variables(&(&c * &b)).unwrap());
        assert_ne!(lhs, f.change_variables(&(&b * &c)).unwrap());
    }

    #[test]
    fn display_canonical() {
        let r = ring(2);
        assert_eq!(p(&r, "(x1 - x2)^2").to_string(), "x1^2 - 2*x1*x2 + x2^2");
        assert_eq!(p(&r, "-1/2*x1 + (1+2*i)*x2 - 3").to_string(), "-1/2*x1 + (1+2*i)*x2 - 3");
        assert_eq!(p(&r, "-i*x1").to_string(), "-i*x1");
        assert_eq!(p(&r, "0").to_string(), "0");
    }
}
