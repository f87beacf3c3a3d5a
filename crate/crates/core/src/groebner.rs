//! Buchberger's algorithm over `Q(i)`, with normal forms, ideal membership,
//! elimination and the Krull dimension of `R/I`.
//!
//! Every supported order is induced by a linear weight map on exponent
//! vectors compared lexicographically, so each term carries an integer sort
//! key and keys add under multiplication. Pairs are chosen by the normal
//! strategy (smallest lcm degree, ties broken by generator index) and pruned
//! with the coprime and chain criteria. Desk-scale only: no sugar, no F4.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graded::IdealSpec;
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::scalar::Scalar;

/// A monomial order on the ring's variables, first variable greatest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Grevlex on the first `k` variables, ties broken by grevlex on the rest.
    /// Any monomial involving the first block beats every monomial free of it.
    Block(usize),
}

impl MonomialOrder {
    fn key(self, e: &[u32]) -> Vec<i64> {
        fn grevlex(e: &[u32], out: &mut Vec<i64>) {
            out.push(e.iter().map(|&x| x as i64).sum());
            out.extend(e.iter().skip(1).rev().map(|&x| -(x as i64)));
        }
        let mut out = Vec::with_capacity(e.len() + 2);
        match self {
            MonomialOrder::Grevlex => grevlex(e, &mut out),
            MonomialOrder::Lex => out.extend(e.iter().map(|&x| x as i64)),
            MonomialOrder::Block(k) => {
                let k = k.min(e.len());
                grevlex(&e[..k], &mut out);
                grevlex(&e[k..], &mut out);
            }
        }
        out
    }

    /// Compares two monomials of equal arity.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.key(a.exponents()).cmp(&self.key(b.exponents()))
    }
}

#[derive(Clone, Debug)]
struct Term {
    key: Vec<i64>,
    mono: Monomial,
    coef: Scalar,
}

/// Terms in descending order.
#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<Term>,
    mask: u64,
}

impl GPoly {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| Term {
                key: order.key(m.exponents()),
                mono: m.clone(),
                coef: c.clone(),
            })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        Self::from_sorted(terms)
    }

    fn from_sorted(terms: Vec<Term>) -> Self {
        let mask = terms.first().map_or(0, |t| t.mono.support_mask());
        GPoly { terms, mask }
    }

    fn lead(&self) -> &Term {
        &self.terms[0]
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some(inv) = self.terms.first().and_then(|t| t.coef.inv()) {
            for t in &mut self.terms {
                t.coef = &t.coef * &inv;
            }
        }
    }

    fn to_poly(&self, ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|t| (t.mono.clone(), t.coef.clone())))
    }
}

fn add_key(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn quotient_key(order: MonomialOrder, q: &Monomial) -> Vec<i64> {
    order.key(q.exponents())
}

/// Full reduction of `p` by `basis`. Returns the remainder in descending order.
fn reduce(p: GPoly, basis: &[GPoly], order: MonomialOrder) -> GPoly {
    // working set keyed by order key; the largest entry is the current lead
    let mut work: BTreeMap<Vec<i64>, (Monomial, Scalar)> =
        p.terms.into_iter().map(|t| (t.key, (t.mono, t.coef))).collect();
    let mut rem = Vec::new();
    while let Some((key, (mono, coef))) = work.pop_last() {
        let mask = mono.support_mask();
        let divisor = basis
            .iter()
            .find(|g| g.mask & !mask == 0 && g.lead().mono.divides(&mono));
        let Some(g) = divisor else {
            rem.push(Term { key, mono, coef });
            continue;
        };
        let lead = g.lead();
        let factor = &coef / &lead.coef;
        let q = lead.mono.quotient_of(&mono);
        let qkey = quotient_key(order, &q);
        for t in &g.terms[1..] {
            let k = add_key(&t.key, &qkey);
            let c = &factor * &t.coef;
            match work.entry(k) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert((t.mono.mul(&q), -c));
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    o.get_mut().1 -= &c;
                    if o.get().1.is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }
    GPoly::from_sorted(rem)
}

fn s_polynomial(f: &GPoly, g: &GPoly, order: MonomialOrder) -> GPoly {
    let lcm = f.lead().mono.lcm(&g.lead().mono);
    let scaled = |p: &GPoly| {
        let q = p.lead().mono.quotient_of(&lcm);
        let qkey = quotient_key(order, &q);
        let inv = p.lead().coef.inv().expect("nonzero lead");
        p.terms[1..]
            .iter()
            .map(|t| (add_key(&t.key, &qkey), (t.mono.mul(&q), &t.coef * &inv)))
            .collect::<Vec<_>>()
    };
    let mut acc: BTreeMap<Vec<i64>, (Monomial, Scalar)> = BTreeMap::new();
    for (k, (m, c)) in scaled(f) {
        acc.insert(k, (m, c));
    }
    for (k, (m, c)) in scaled(g) {
        let entry = acc.entry(k).or_insert_with(|| (m, Scalar::zero()));
        entry.1 -= &c;
    }
    let terms = acc
        .into_iter()
        .rev()
        .filter(|(_, (_, c))| !c.is_zero())
        .map(|(key, (mono, coef))| Term { key, mono, coef })
        .collect();
    GPoly::from_sorted(terms)
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by ascending
/// leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    elems: Vec<GPoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.elems.iter().map(|g| g.to_poly(&self.ring)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|g| g.lead().mono.clone()).collect()
    }

    /// Whether the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|g| g.lead().mono.is_one())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        check_ring(&self.ring, p)?;
        let r = reduce(GPoly::from_poly(p, self.order), &self.elems, self.order);
        Ok(r.to_poly(&self.ring))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Whether every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        (0..self.elems.len()).all(|j| {
            (0..j).all(|i| {
                let s = s_polynomial(&self.elems[i], &self.elems[j], self.order);
                reduce(s, &self.elems, self.order).is_zero()
            })
        })
    }
}

fn check_ring(ring: &Arc<PolyRing>, p: &Polynomial) -> Result<()> {
    if p.ring() != ring {
        return Err(Error::InvalidRing(format!("`{p}` does not belong to ring {ring}")));
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `gens`. Zero generators
/// are ignored; an empty list gives the empty basis of the zero ideal.
pub fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    for g in gens {
        check_ring(ring, g)?;
    }
    let mut basis: Vec<GPoly> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let push = |mut h: GPoly, basis: &mut Vec<GPoly>, pairs: &mut Vec<(usize, usize)>| {
        h.make_monic();
        let j = basis.len();
        pairs.extend((0..j).map(|i| (i, j)));
        basis.push(h);
    };

    for g in gens {
        let h = reduce(GPoly::from_poly(g, order), &basis, order);
        if !h.is_zero() {
            push(h, &mut basis, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        let lcm_deg = |&(i, j): &(usize, usize)| basis[i].lead().mono.lcm(&basis[j].lead().mono).degree();
        let pos = (0..pairs.len())
            .min_by_key(|&k| (lcm_deg(&pairs[k]), pairs[k].1, pairs[k].0))
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pos);
        let (li, lj) = (&basis[i].lead().mono, &basis[j].lead().mono);
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let pending = |a: usize, b: usize| pairs.contains(&(a.min(b), a.max(b)));
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && basis[k].lead().mono.divides(&lcm) && !pending(i, k) && !pending(j, k)
        });
        if chain {
            continue;
        }
        let h = reduce(s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if !h.is_zero() {
            if h.lead().mono.is_one() {
                let one = Polynomial::one(ring);
                return Ok(GroebnerBasis {
                    ring: ring.clone(),
                    order,
                    elems: vec![GPoly::from_poly(&one, order)],
                });
            }
            push(h, &mut basis, &mut pairs);
        }
    }

    // minimal basis, then inter-reduction
    basis.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    let mut minimal: Vec<GPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| m.lead().mono.divides(&g.lead().mono)) {
            minimal.push(g);
        }
    }
    let reduced = (0..minimal.len())
        .map(|k| {
            let others: Vec<GPoly> = minimal
                .iter()
                .enumerate()
                .filter(|&(o, _)| o != k)
                .map(|(_, g)| g.clone())
                .collect();
            let g = &minimal[k];
            let tail = GPoly::from_sorted(g.terms[1..].to_vec());
            let mut terms = vec![g.lead().clone()];
            terms.extend(reduce(tail, &others, order).terms);
            let mut r = GPoly::from_sorted(terms);
            r.make_monic();
            r
        })
        .collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order,
        elems: reduced,
    })
}

/// Remainder of `p` modulo a Gröbner basis.
pub fn normal_form(p: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(p)
}

/// Whether `p` lies in the ideal (grevlex basis).
pub fn ideal_membership(p: &Polynomial, ideal: &IdealSpec) -> Result<bool> {
    check_ring(ideal.ring(), p)?;
    buchberger(ideal.ring(), ideal.generators(), MonomialOrder::Grevlex)?.contains(p)
}

/// Largest number of variables no leading monomial is supported on, that is
/// the dimension of `R/in(I)`.
pub fn dimension_from_leading_monomials(n: usize, leading: &[Monomial]) -> usize {
    assert!(n <= 32, "independent-set search is limited to 32 variables");
    let mut supports: Vec<u64> = leading.iter().map(Monomial::support_mask).collect();
    supports.sort_unstable();
    supports.dedup();
    // a subset S is independent iff no support lies inside S
    let independent = |s: u64| supports.iter().all(|&m| m & !s != 0);
    (0..=n)
        .rev()
        .find(|&size| {
            let mut found = false;
            subsets_of_size(n, size, &mut |s| {
                if independent(s) {
                    found = true;
                }
                found
            });
            found
        })
        .unwrap_or(0)
}

/// Visits every `size`-subset of `0..n` as a bit mask until `visit` returns true.
fn subsets_of_size(n: usize, size: usize, visit: &mut dyn FnMut(u64) -> bool) {
    fn go(start: usize, n: usize, left: usize, acc: u64, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        if left == 0 {
            return visit(acc);
        }
        (start..=n - left).any(|k| go(k + 1, n, left - 1, acc | (1 << k), visit))
    }
    go(0, n, size, 0, visit);
}

/// Krull dimension of `R/I`, the dimension of the affine cone.
pub fn krull_dimension(ideal: &IdealSpec) -> Result<usize> {
    let gb = buchberger(ideal.ring(), ideal.generators(), MonomialOrder::Grevlex)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(dimension_from_leading_monomials(ideal.ring().arity(), &gb.leading_monomials()))
}

/// `I ∩ k[remaining variables]`, with generators in the ring of the
/// variables not eliminated (original order kept). `None` when the
/// intersection is the zero ideal.
pub fn elimination_ideal(ideal: &IdealSpec, eliminate: &[usize]) -> Result<Option<IdealSpec>> {
    let ring = ideal.ring();
    let n = ring.arity();
    if let Some(&bad) = eliminate.iter().find(|&&k| k >= n) {
        return Err(Error::VariableOutOfRange { index: bad, arity: n });
    }
    let mut front: Vec<usize> = eliminate.to_vec();
    front.sort_unstable();
    front.dedup();
    let rest: Vec<usize> = (0..n).filter(|k| !front.contains(k)).collect();
    if rest.is_empty() {
        return Err(Error::InvalidRing("cannot eliminate every variable".into()));
    }
    let perm: Vec<usize> = front.iter().chain(&rest).copied().collect();
    let names = |idx: &[usize]| idx.iter().map(|&k| ring.variables()[k].clone()).collect::<Vec<_>>();
    let work_ring = PolyRing::new(names(&perm))?;
    let sub_ring = PolyRing::new(names(&rest))?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.rename_into(&work_ring))
        .collect::<Result<Vec<_>>>()?;
    let k = front.len();
    let gb = buchberger(&work_ring, &gens, MonomialOrder::Block(k))?;
    let kept: Vec<Polynomial> = gb
        .elems
        .iter()
        .filter(|g| g.terms.iter().all(|t| t.mono.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|g| {
            Polynomial::from_terms(
                &sub_ring,
                g.terms
                    .iter()
                    .map(|t| (Monomial::new(t.mono.exponents()[k..].to_vec()), t.coef.clone())),
            )
        })
        .collect();
    if kept.is_empty() {
        return Ok(None);
    }
    let asserted = ideal.asserted_prime();
    Ok(Some(IdealSpec::new_affine(&sub_ring, kept)?.with_asserted_prime(asserted)))
}

/// Whether `p` is `1` up to a unit.
pub fn is_unit_polynomial(p: &Polynomial) -> bool {
    p.num_terms() == 1 && p.leading_term().is_some_and(|(m, c)| m.is_one() && !c.is_zero())
}
