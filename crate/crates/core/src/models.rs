//! Staged trees and (colored) Gaussian graphical models: their monomial and
//! rational parametrizations, kernel verification by substitution, and a
//! small-scale kernel computation by elimination.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::IdealSpec;
use crate::groebner::elimination_ideal;
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::scalar::Scalar;

/// Largest graph handled by [`gaussian_cofactor_map`].
pub const GAUSSIAN_VERTEX_LIMIT: usize = 6;
/// Largest total variable count handled by [`kernel_via_elimination`].
pub const ELIMINATION_VARIABLE_LIMIT: usize = 12;

/// A rooted tree with edges directed away from the root and interior nodes
/// grouped into stages. Nodes of a stage share their outgoing edge labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StagedTree {
    nodes: Vec<String>,
    root: usize,
    children: Vec<Vec<usize>>,
    /// stage index per node, `None` for leaves
    stage: Vec<Option<usize>>,
    stage_names: Vec<String>,
    /// leaves in depth-first order of the child listing
    leaves: Vec<usize>,
}

impl StagedTree {
    /// Builds a tree from `(parent, child)` edges in child-listing order and a
    /// stage label per interior node. Interior nodes without a label get a
    /// stage of their own.
    pub fn new<S: AsRef<str>>(edges: &[(S, S)], stages: &[(S, S)]) -> Result<Self> {
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut nodes: Vec<String> = Vec::new();
        let mut intern = |name: &str, nodes: &mut Vec<String>| -> usize {
            *index.entry(name.to_string()).or_insert_with(|| {
                nodes.push(name.to_string());
                nodes.len() - 1
            })
        };
        let mut parent: Vec<Option<usize>> = Vec::new();
        let mut children: Vec<Vec<usize>> = Vec::new();
        for (p, c) in edges {
            let (p, c) = (p.as_ref(), c.as_ref());
            if p == c {
                return Err(Error::MalformedTree(format!("self-loop at `{p}`")));
            }
            let pi = intern(p, &mut nodes);
            let ci = intern(c, &mut nodes);
            parent.resize(nodes.len(), None);
            children.resize(nodes.len(), Vec::new());
            if parent[ci].is_some() {
                return Err(Error::MalformedTree(format!("node `{c}` has two parents")));
            }
            parent[ci] = Some(pi);
            children[pi].push(ci);
        }
        if nodes.is_empty() {
            return Err(Error::MalformedTree("no edges".into()));
        }
        let roots: Vec<usize> = (0..nodes.len()).filter(|&k| parent[k].is_none()).collect();
        let root = match roots.as_slice() {
            [r] => *r,
            [] => return Err(Error::MalformedTree("no root: the edges contain a cycle".into())),
            _ => {
                return Err(Error::MalformedTree(format!(
                    "several roots: {}",
                    roots.iter().map(|&k| nodes[k].as_str()).collect::<Vec<_>>().join(", ")
                )))
            }
        };

        // preorder walk: leaf order, reachability, stage numbering
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(children[v].iter().rev());
        }
        if order.len() != nodes.len() {
            return Err(Error::MalformedTree("not connected: some nodes lie on a cycle".into()));
        }
        let mut label: HashMap<&str, &str> = HashMap::new();
        for (node, st) in stages {
            let node = node.as_ref();
            match index.get(node) {
                None => return Err(Error::MalformedTree(format!("stage given for unknown node `{node}`"))),
                Some(&k) if children[k].is_empty() => {
                    return Err(Error::MalformedTree(format!("stage given for leaf `{node}`")))
                }
                _ => {}
            }
            if label.insert(node, st.as_ref()).is_some() {
                return Err(Error::MalformedTree(format!("node `{node}` staged twice")));
            }
        }
        let mut stage = vec![None; nodes.len()];
        let mut stage_names: Vec<String> = Vec::new();
        let mut stage_width: Vec<usize> = Vec::new();
        let mut leaves = Vec::new();
        for &v in &order {
            if children[v].is_empty() {
                leaves.push(v);
                continue;
            }
            let name = label.get(nodes[v].as_str()).map_or_else(|| format!("{}*", nodes[v]), |s| s.to_string());
            let s = match stage_names.iter().position(|n| *n == name) {
                Some(s) => s,
                None => {
                    stage_names.push(name);
                    stage_width.push(children[v].len());
                    stage_names.len() - 1
                }
            };
            if stage_width[s] != children[v].len() {
                return Err(Error::MalformedTree(format!(
                    "stage `{}` mixes out-degrees {} and {}",
                    stage_names[s],
                    stage_width[s],
                    children[v].len()
                )));
            }
            stage[v] = Some(s);
        }
        Ok(StagedTree {
            nodes,
            root,
            children,
            stage,
            stage_names,
            leaves,
        })
    }

    /// Parses the `tree:` / `stages:` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut stages = Vec::new();
        let mut section = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::MalformedFile(format!("line {}: unexpected `{line}`", lineno + 1));
            match line {
                "tree:" => section = Some(0),
                "stages:" => section = Some(1),
                _ => {
                    let words: Vec<&str> = line.split_whitespace().collect();
                    match (section, words.as_slice()) {
                        (Some(0), ["edge", p, c]) => edges.push((p.to_string(), c.to_string())),
                        (Some(1), [node, st]) => stages.push((node.to_string(), st.to_string())),
                        _ => return Err(bad()),
                    }
                }
            }
        }
        Self::new(&edges, &stages)
    }

    pub fn num_leaves(&self) -> usize {
        self.leaves.len()
    }

    pub fn num_stages(&self) -> usize {
        self.stage_names.len()
    }

    pub fn root(&self) -> &str {
        &self.nodes[self.root]
    }

    /// Leaf names; the `r`-th leaf is the variable `x_{r+1}`.
    pub fn leaves(&self) -> Vec<&str> {
        self.leaves.iter().map(|&k| self.nodes[k].as_str()).collect()
    }

    /// Out-degree of each stage, in stage-index order.
    pub fn stage_widths(&self) -> Vec<usize> {
        let mut w = vec![0; self.num_stages()];
        for (v, s) in self.stage.iter().enumerate() {
            if let Some(s) = s {
                w[*s] = self.children[v].len();
            }
        }
        w
    }

    /// Root-to-leaf path of each leaf as `(stage, slot)` labels.
    fn paths(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Vec<(usize, usize)>)> = vec![(self.root, Vec::new())];
        while let Some((v, path)) = stack.pop() {
            if self.children[v].is_empty() {
                out.push(path);
                continue;
            }
            let s = self.stage[v].expect("interior node has a stage");
            for (slot, &c) in self.children[v].iter().enumerate().rev() {
                let mut p = path.clone();
                p.push((s, slot));
                stack.push((c, p));
            }
        }
        out
    }
}

/// The monomial map of a staged tree into `k[θ, z]`.
#[derive(Clone, Debug)]
pub struct StagedParametrization {
    ring: Arc<PolyRing>,
    widths: Vec<usize>,
    images: Vec<Polynomial>,
}

impl StagedParametrization {
    /// Variables `theta_<stage>_<slot>` in stage-major order, then `z`.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Image of `x_{r+1}` at position `r`.
    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    fn theta_index(&self, stage: usize, slot: usize) -> usize {
        self.widths[..stage].iter().sum::<usize>() + slot
    }

    pub fn z_index(&self) -> usize {
        self.ring.arity() - 1
    }

    /// `Σ_k θ_{s,k} − z` for every stage.
    pub fn stage_relations(&self) -> Vec<Polynomial> {
        let n = self.ring.arity();
        let one = Scalar::from_int(1);
        (0..self.widths.len())
            .map(|s| {
                let mut terms: Vec<(Monomial, Scalar)> = (0..self.widths[s])
                    .map(|k| (Monomial::var(n, self.theta_index(s, k)), one.clone()))
                    .collect();
                terms.push((Monomial::var(n, self.z_index()), -one.clone()));
                Polynomial::from_terms(&self.ring, terms)
            })
            .collect()
    }

    /// Substitution eliminating the stage relations: the last label of each
    /// stage becomes `z` minus the other labels.
    pub fn relation_substitution(&self) -> Vec<Polynomial> {
        let mut images: Vec<Polynomial> = (0..self.ring.arity()).map(|k| Polynomial::var(&self.ring, k)).collect();
        for (s, &w) in self.widths.iter().enumerate() {
            let last = self.theta_index(s, w - 1);
            let mut e = Polynomial::var(&self.ring, self.z_index());
            for k in 0..w - 1 {
                e = &e - &Polynomial::var(&self.ring, self.theta_index(s, k));
            }
            images[last] = e;
        }
        images
    }
}

/// `x_r ↦ z^{n−ℓ(r)} · Π θ` over the root-to-leaf path of leaf `r`, with `n`
/// the number of leaves and `ℓ(r)` the path length.
pub fn staged_tree_parametrization(tree: &StagedTree) -> Result<StagedParametrization> {
    let widths = tree.stage_widths();
    let mut names = Vec::new();
    for (s, &w) in widths.iter().enumerate() {
        names.extend((0..w).map(|k| format!("theta_{s}_{k}")));
    }
    names.push("z".to_string());
    let ring = PolyRing::new(names)?;
    let n = tree.num_leaves();
    let mut param = StagedParametrization {
        ring: ring.clone(),
        widths,
        images: Vec::new(),
    };
    for path in tree.paths() {
        if path.len() > n {
            return Err(Error::MalformedTree(format!(
                "a leaf at depth {} exceeds the leaf count {n}",
                path.len()
            )));
        }
        let mut e = vec![0u32; ring.arity()];
        for &(s, k) in &path {
            e[param.theta_index(s, k)] += 1;
        }
        e[param.z_index()] = (n - path.len()) as u32;
        param.images.push(Polynomial::term(&ring, Monomial::new(e), Scalar::from_int(1)));
    }
    Ok(param)
}

/// For each generator, whether it vanishes under the staged parametrization
/// modulo the stage-sum relations.
pub fn verify_staged_kernel(tree: &StagedTree, gens: &[Polynomial]) -> Result<Vec<bool>> {
    let param = staged_tree_parametrization(tree)?;
    let sub = param.relation_substitution();
    let images = param
        .images()
        .iter()
        .map(|p| p.substitute(&sub))
        .collect::<Result<Vec<_>>>()?;
    gens.iter()
        .map(|g| {
            if g.ring().arity() != images.len() {
                return Err(Error::SizeMismatch {
                    expected: images.len(),
                    found: g.ring().arity(),
                });
            }
            Ok(g.substitute(&images)?.is_zero())
        })
        .collect()
}

/// An undirected graph on vertices `1..=n` with optional vertex and edge
/// colorings. Uncolored vertices and edges each form their own class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    vertex_colors: BTreeMap<usize, String>,
    edge_colors: BTreeMap<(usize, usize), String>,
}

impl ColoredGraph {
    /// Vertices are 1-based. Edges are stored as `(min, max)`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out = ColoredGraph {
            n,
            edges: Vec::new(),
            vertex_colors: BTreeMap::new(),
            edge_colors: BTreeMap::new(),
        };
        if n == 0 {
            return Err(Error::MalformedGraph("no vertices".into()));
        }
        for &(a, b) in edges {
            let e = out.check_edge(a, b)?;
            if out.edges.contains(&e) {
                return Err(Error::MalformedGraph(format!("edge {a}-{b} listed twice")));
            }
            out.edges.push(e);
        }
        Ok(out)
    }

    fn check_edge(&self, a: usize, b: usize) -> Result<(usize, usize)> {
        for v in [a, b] {
            if v == 0 || v > self.n {
                return Err(Error::MalformedGraph(format!("vertex {v} outside 1..={}", self.n)));
            }
        }
        if a == b {
            return Err(Error::MalformedGraph(format!("loop at vertex {a}")));
        }
        Ok((a.min(b), a.max(b)))
    }

    pub fn color_vertex(mut self, v: usize, color: &str) -> Result<Self> {
        if v == 0 || v > self.n {
            return Err(Error::MalformedGraph(format!("vertex {v} outside 1..={}", self.n)));
        }
        self.vertex_colors.insert(v, color.to_string());
        Ok(self)
    }

    pub fn color_edge(mut self, a: usize, b: usize, color: &str) -> Result<Self> {
        let e = self.check_edge(a, b)?;
        if !self.edges.contains(&e) {
            return Err(Error::MalformedGraph(format!("colored edge {a}-{b} is not an edge")));
        }
        self.edge_colors.insert(e, color.to_string());
        Ok(self)
    }

    /// Parses the `vertices:` / `edges:` / `vertex_colors:` / `edge_colors:` format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        let mut vcolors = Vec::new();
        let mut ecolors = Vec::new();
        let pair = |s: &str| -> Result<(usize, usize)> {
            let (a, b) = s
                .split_once('-')
                .ok_or_else(|| Error::MalformedGraph(format!("expected `i-j`, found `{s}`")))?;
            let num = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedGraph(format!("bad vertex `{t}`")))
            };
            Ok((num(a)?, num(b)?))
        };
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::MalformedFile(format!("expected `key: value`, found `{line}`")))?;
            let items = rest.split([',', ' ', '\t']).map(str::trim).filter(|s| !s.is_empty());
            match key.trim() {
                "vertices" => {
                    n = Some(
                        rest.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::MalformedGraph(format!("bad vertex count `{}`", rest.trim())))?,
                    )
                }
                "edges" => {
                    for it in items {
                        edges.push(pair(it)?);
                    }
                }
                "vertex_colors" => {
                    for it in items {
                        let (v, c) = it
                            .split_once(':')
                            .ok_or_else(|| Error::MalformedGraph(format!("expected `v:color`, found `{it}`")))?;
                        let v = v
                            .parse::<usize>()
                            .map_err(|_| Error::MalformedGraph(format!("bad vertex `{v}`")))?;
                        vcolors.push((v, c.to_string()));
                    }
                }
                "edge_colors" => {
                    for it in items {
                        let (e, c) = it
                            .rsplit_once(':')
                            .ok_or_else(|| Error::MalformedGraph(format!("expected `i-j:color`, found `{it}`")))?;
                        ecolors.push((pair(e)?, c.to_string()));
                    }
                }
                other => return Err(Error::MalformedFile(format!("unknown key `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::MalformedFile("missing `vertices:`".into()))?;
        let mut g = ColoredGraph::new(n, &edges)?;
        for (v, c) in vcolors {
            g = g.color_vertex(v, &c)?;
        }
        for ((a, b), c) in ecolors {
            g = g.color_edge(a, b, &c)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Class representative of matrix position `(i, j)`, `None` for a
    /// structural zero.
    fn class_of(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        let (i, j) = (i.min(j), i.max(j));
        if i == j {
            let rep = match self.vertex_colors.get(&i) {
                Some(c) => *self.vertex_colors.iter().find(|(_, d)| *d == c).expect("present").0,
                None => i,
            };
            return Some((rep, rep));
        }
        if !self.has_edge(i, j) {
            return None;
        }
        Some(match self.edge_colors.get(&(i, j)) {
            Some(c) => *self.edge_colors.iter().find(|(_, d)| *d == c).expect("present").0,
            None => (i, j),
        })
    }
}

/// Positions `(i, j)` with `i ≤ j`, 1-based, ordered column by column:
/// `(1,1), (1,2), (2,2), (1,3), …`. This is the variable order of the σ-ring.
pub fn symmetric_positions(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|j| (1..=j).map(move |i| (i, j))).collect()
}

/// The ring `k[s11, s12, s22, s13, …]` of a symmetric `n×n` matrix.
pub fn sigma_ring(n: usize) -> Result<Arc<PolyRing>> {
    PolyRing::new(symmetric_positions(n).into_iter().map(|(i, j)| format!("s{i}{j}")))
}

/// Symbolic concentration matrix, its adjugate and determinant.
#[derive(Clone, Debug)]
pub struct GaussianCofactors {
    k_ring: Arc<PolyRing>,
    k: Vec<Vec<Polynomial>>,
    adjugate: Vec<Vec<Polynomial>>,
    det: Polynomial,
}

impl GaussianCofactors {
    /// Variables `k{i}{j}`, one per vertex or edge color class.
    pub fn k_ring(&self) -> &Arc<PolyRing> {
        &self.k_ring
    }

    pub fn k_matrix(&self) -> &[Vec<Polynomial>] {
        &self.k
    }

    pub fn adjugate(&self) -> &[Vec<Polynomial>] {
        &self.adjugate
    }

    pub fn determinant(&self) -> &Polynomial {
        &self.det
    }

    /// Adjugate entries in σ-ring variable order.
    pub fn sigma_images(&self) -> Vec<Polynomial> {
        symmetric_positions(self.k.len())
            .into_iter()
            .map(|(i, j)| self.adjugate[i - 1][j - 1].clone())
            .collect()
    }

    /// Whether `K · adj(K) = det(K) · Id` holds exactly.
    pub fn adjugate_identity_holds(&self) -> bool {
        let n = self.k.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut s = Polynomial::zero(&self.k_ring);
                for l in 0..n {
                    s = &s + &(&self.k[i][l] * &self.adjugate[l][j]);
                }
                if i == j {
                    s == self.det
                } else {
                    s.is_zero()
                }
            })
        })
    }
}

/// Determinant of the submatrix on the given row and column masks, by
/// Laplace expansion along the first row with memoization.
fn minor(
    k: &[Vec<Polynomial>],
    rows: u32,
    cols: u32,
    ring: &Arc<PolyRing>,
    memo: &mut HashMap<(u32, u32), Polynomial>,
) -> Polynomial {
    if rows == 0 {
        return Polynomial::one(ring);
    }
    if let Some(p) = memo.get(&(rows, cols)) {
        return p.clone();
    }
    let r = rows.trailing_zeros() as usize;
    let mut acc = Polynomial::zero(ring);
    let mut sign_positive = true;
    for c in 0..k.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        if !k[r][c].is_zero() {
            let sub = minor(k, rows & !(1 << r), cols & !(1 << c), ring, memo);
            let t = &k[r][c] * &sub;
            acc = if sign_positive { &acc + &t } else { &acc - &t };
        }
        sign_positive = !sign_positive;
    }
    memo.insert((rows, cols), acc.clone());
    acc
}

/// Builds `K` with structural zeros and color identifications, then its
/// adjugate (numerators of `Σ = K⁻¹`) and determinant.
pub fn gaussian_cofactor_map(graph: &ColoredGraph) -> Result<GaussianCofactors> {
    let n = graph.n();
    if n > GAUSSIAN_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!(
            "cofactor expansion is limited to {GAUSSIAN_VERTEX_LIMIT} vertices, got {n}"
        )));
    }
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for (i, j) in symmetric_positions(n) {
        if let Some(c) = graph.class_of(i, j) {
            if !classes.contains(&c) {
                classes.push(c);
            }
        }
    }
    let k_ring = PolyRing::new(classes.iter().map(|(i, j)| format!("k{i}{j}")))?;
    let k: Vec<Vec<Polynomial>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| match graph.class_of(i, j) {
                    Some(c) => Polynomial::var(&k_ring, classes.iter().position(|d| *d == c).expect("class")),
                    None => Polynomial::zero(&k_ring),
                })
                .collect()
        })
        .collect();
    let full: u32 = (1 << n) - 1;
    let mut memo = HashMap::new();
    let det = minor(&k, full, full, &k_ring, &mut memo);
    // adj(K)[i][j] = (−1)^{i+j} · det K with row j and column i removed
    let adjugate = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let m = minor(&k, full & !(1 << j), full & !(1 << i), &k_ring, &mut memo);
                    if (i + j) % 2 == 0 {
                        m
                    } else {
                        -&m
                    }
                })
                .collect()
        })
        .collect();
    Ok(GaussianCofactors {
        k_ring,
        k,
        adjugate,
        det,
    })
}

/// For each homogeneous generator in the σ-ring, whether it vanishes after
/// `σ_ij ↦ adj(K)_ij`. Homogeneity lets `det(K)^{deg}` clear denominators.
pub fn verify_gaussian_kernel(graph: &ColoredGraph, gens: &[Polynomial]) -> Result<Vec<bool>> {
    let map = gaussian_cofactor_map(graph)?;
    let images = map.sigma_images();
    gens.iter()
        .map(|g| {
            if g.ring().arity() != images.len() {
                return Err(Error::SizeMismatch {
                    expected: images.len(),
                    found: g.ring().arity(),
                });
            }
            if g.is_zero() {
                return Ok(true);
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
            Ok(g.substitute(&images)?.is_zero())
        })
        .collect()
}

/// Kernel of `x_r ↦ images[r]` modulo `relations`, as the elimination ideal
/// of `⟨x_r − images[r]⟩ + ⟨relations⟩` with the parameters eliminated.
/// The result lives in `k[x1, …, xm]`; `None` means the map is injective.
pub fn kernel_via_elimination(images: &[Polynomial], relations: &[Polynomial]) -> Result<Option<IdealSpec>> {
    let first = images.first().ok_or(Error::EmptyIdeal)?;
    let params = first.ring().clone();
    if let Some(p) = images.iter().chain(relations).find(|p| p.ring() != &params) {
        return Err(Error::InvalidRing(format!("`{p}` is not in the parameter ring")));
    }
    let m = images.len();
    let total = params.arity() + m;
    if total > ELIMINATION_VARIABLE_LIMIT {
        return Err(Error::TooLarge(format!(
            "{total} variables is too large for naive elimination (limit {ELIMINATION_VARIABLE_LIMIT})"
        )));
    }
    let x_names: Vec<String> = (1..=m).map(|k| format!("x{k}")).collect();
    if let Some(clash) = x_names.iter().find(|x| params.index_of(x).is_some()) {
        return Err(Error::InvalidRing(format!("parameter `{clash}` clashes with an image variable")));
    }
    let ring = PolyRing::new(params.variables().iter().cloned().chain(x_names))?;
    let lift = |p: &Polynomial| -> Result<Polynomial> {
        let sub: Vec<Polynomial> = (0..params.arity()).map(|k| Polynomial::var(&ring, k)).collect();
        p.substitute(&sub)
    };
    let mut gens = Vec::new();
    for (r, img) in images.iter().enumerate() {
        gens.push(&Polynomial::var(&ring, params.arity() + r) - &lift(img)?);
    }
    for rel in relations {
        let l = lift(rel)?;
        if !l.is_zero() {
            gens.push(l);
        }
    }
    let ideal = IdealSpec::new_affine(&ring, gens)?;
    let eliminate: Vec<usize> = (0..params.arity()).collect();
    elimination_ideal(&ideal, &eliminate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    const BINARY: &str = "tree:\nedge r a\nedge r b\nedge a l1\nedge a l2\nedge b l3\nedge b l4\nstages:\nr 0\na 1\nb 2\n";

    #[test]
    fn depth_one_tree() {
        let t = StagedTree::new(&[("r", "a"), ("r", "b"), ("r", "c")], &[]).unwrap();
        let p = staged_tree_parametrization(&t).unwrap();
        assert_eq!(p.ring().variables(), ["theta_0_0", "theta_0_1", "theta_0_2", "z"]);
        let expect = ["theta_0_0*z^2", "theta_0_1*z^2", "theta_0_2*z^2"];
        for (img, e) in p.images().iter().zip(expect) {
            assert_eq!(img, &parse_polynomial(e, p.ring()).unwrap());
        }
    }

    #[test]
    fn two_level_binary_tree() {
        let t = StagedTree::parse(BINARY).unwrap();
        assert_eq!(t.leaves(), ["l1", "l2", "l3", "l4"]);
        let p = staged_tree_parametrization(&t).unwrap();
        let e = |s: &str| parse_polynomial(s, p.ring()).unwrap();
        assert_eq!(p.images()[0], e("z^2*theta_0_0*theta_1_0"));
        assert_eq!(p.images()[3], e("z^2*theta_0_1*theta_2_1"));
        // the leaf sum collapses to z^4 modulo the stage relations
        let sub = p.relation_substitution();
        let mut total = Polynomial::zero(p.ring());
        for img in p.images() {
            total = &total + &img.substitute(&sub).unwrap();
        }
        assert_eq!(total, e("z^4"));
    }

    #[test]
    fn stage_sums_become_z() {
        let t = StagedTree::parse(BINARY).unwrap();
        let p = staged_tree_parametrization(&t).unwrap();
        let sub = p.relation_substitution();
        for rel in p.stage_relations() {
            assert!(rel.substitute(&sub).unwrap().is_zero());
        }
    }

    #[test]
    fn independence_model_kernel() {
        // two independent binary choices: x1*x4 − x2*x3 lies in the kernel
        let t = StagedTree::parse("tree:\nedge r a\nedge r b\nedge a l1\nedge a l2\nedge b l3\nedge b l4\nstages:\nr 0\na 1\nb 1\n").unwrap();
        let ring = PolyRing::numbered("x", 4).unwrap();
        let gens = vec![
            parse_polynomial("x1*x4 - x2*x3", &ring).unwrap(),
            parse_polynomial("x1 - x1", &ring).unwrap(),
            parse_polynomial("x1*x3 - x2*x4", &ring).unwrap(),
        ];
        assert_eq!(verify_staged_kernel(&t, &gens).unwrap(), [true, true, false]);
        let wrong = PolyRing::numbered("x", 3).unwrap();
        assert!(verify_staged_kernel(&t, &[Polynomial::var(&wrong, 0)]).is_err());
    }

    #[test]
    fn malformed_trees() {
        assert!(matches!(StagedTree::new(&[("a", "b"), ("c", "b")], &[]), Err(Error::MalformedTree(_))));
        assert!(matches!(StagedTree::new(&[("a", "b"), ("b", "a")], &[]), Err(Error::MalformedTree(_))));
        assert!(matches!(
            StagedTree::new(&[("r", "a"), ("r", "b"), ("a", "c"), ("a", "d"), ("a", "e")], &[("r", "s"), ("a", "s")]),
            Err(Error::MalformedTree(_))
        ));
        assert!(matches!(StagedTree::new(&[("r", "a")], &[("a", "s")]), Err(Error::MalformedTree(_))));
        assert!(matches!(StagedTree::parse("edge r a"), Err(Error::MalformedFile(_))));
    }

    #[test]
    fn complete_graph_two_vertices() {
        let g = ColoredGraph::new(2, &[(1, 2)]).unwrap();
        let m = gaussian_cofactor_map(&g).unwrap();
        assert_eq!(m.k_ring().variables(), ["k11", "k12", "k22"]);
        let e = |s: &str| parse_polynomial(s, m.k_ring()).unwrap();
        assert_eq!(m.adjugate()[0][0], e("k22"));
        assert_eq!(m.adjugate()[0][1], e("-k12"));
        assert_eq!(m.adjugate()[1][0], e("-k12"));
        assert_eq!(m.adjugate()[1][1], e("k11"));
        assert_eq!(m.determinant(), &e("k11*k22 - k12^2"));
        assert!(m.adjugate_identity_holds());
    }

    #[test]
    fn colors_identify_parameters() {
        let g = ColoredGraph::parse("vertices: 3\nedges: 1-2, 2-3\nvertex_colors: 1:g 3:g\nedge_colors: 1-2:c 2-3:c\n").unwrap();
        let m = gaussian_cofactor_map(&g).unwrap();
        assert_eq!(m.k_ring().variables(), ["k11", "k12", "k22"]);
        assert!(m.k_matrix()[0][2].is_zero());
        assert_eq!(m.k_matrix()[2][2], m.k_matrix()[0][0]);
        assert_eq!(m.k_matrix()[1][2], m.k_matrix()[0][1]);
        assert!(m.adjugate_identity_holds());
    }

    #[test]
    fn graph_errors() {
        assert!(ColoredGraph::new(2, &[(1, 3)]).is_err());
        assert!(ColoredGraph::new(2, &[(1, 1)]).is_err());
        assert!(ColoredGraph::parse("vertices: 2\nedges: 1-2\nedge_colors: 1-3:a\n").is_err());
        assert!(ColoredGraph::parse("edges: 1-2\n").is_err());
        let big = ColoredGraph::new(7, &[]).unwrap();
        assert!(matches!(gaussian_cofactor_map(&big), Err(Error::TooLarge(_))));
    }

    #[test]
    fn gaussian_kernel_rejects_inhomogeneous() {
        let g = ColoredGraph::new(2, &[]).unwrap();
        let r = sigma_ring(2).unwrap();
        let ok = verify_gaussian_kernel(&g, &[parse_polynomial("s12", &r).unwrap(), Polynomial::zero(&r)]).unwrap();
        assert_eq!(ok, [true, true]);
        let bad = parse_polynomial("s12 + s11^2", &r).unwrap();
        assert!(matches!(verify_gaussian_kernel(&g, &[bad]), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn veronese_and_parabola_kernels() {
        let uv = PolyRing::new(["u", "v"]).unwrap();
        let e = |s: &str, r: &Arc<PolyRing>| parse_polynomial(s, r).unwrap();
        let k = kernel_via_elimination(&[e("u^2", &uv), e("u*v", &uv), e("v^2", &uv)], &[]).unwrap().unwrap();
        assert_eq!(k.generators(), [e("x2^2 - x1*x3", k.ring())]);
        let t = PolyRing::new(["t"]).unwrap();
        let k = kernel_via_elimination(&[e("t", &t), e("t^2", &t)], &[]).unwrap().unwrap();
        assert_eq!(k.generators(), [e("x1^2 - x2", k.ring())]);
    }

    #[test]
    fn small_tree_kernels_self_consistent() {
        // three leaves under one stage: the image is dense, so the kernel is zero
        let t = StagedTree::new(&[("r", "a"), ("r", "b"), ("r", "c")], &[]).unwrap();
        let p = staged_tree_parametrization(&t).unwrap();
        assert!(kernel_via_elimination(p.images(), &p.stage_relations()).unwrap().is_none());

        let t = StagedTree::parse("tree:\nedge r a\nedge r b\nedge a l1\nedge a l2\nedge b l3\nedge b l4\nstages:\nr 0\na 1\nb 1\n").unwrap();
        let p = staged_tree_parametrization(&t).unwrap();
        let k = kernel_via_elimination(p.images(), &p.stage_relations()).unwrap().unwrap();
        let binomial = parse_polynomial("x1*x4 - x2*x3", k.ring()).unwrap();
        assert!(crate::groebner::ideal_membership(&binomial, &k).unwrap());
        assert!(verify_staged_kernel(&t, k.generators()).unwrap().iter().all(|&b| b));
    }

    #[test]
    fn elimination_size_bound() {
        let r = PolyRing::numbered("t", 8).unwrap();
        let imgs: Vec<Polynomial> = (0..5).map(|k| Polynomial::var(&r, k)).collect();
        assert!(matches!(kernel_via_elimination(&imgs, &[]), Err(Error::TooLarge(_))));
    }
}
