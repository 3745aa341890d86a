//! Open strings in a finite directed graph.
//!
//! Objects are vertex subsets, open string states from `L_a` to `L_b` are formal
//! sums of edge paths starting in `L_a` and ending in `L_b`. Joining is path
//! concatenation when endpoints agree; cutting splits a path at an interior
//! vertex lying in a label. The boundary cuts put a constant path on one side.

pub mod text;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::linear::{FormalSum, Graded, Tensor, TensorSum};
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate identifier `{0}`")]
    Duplicate(String),
    #[error("edges `{0}` and `{1}` do not compose")]
    Broken(String, String),
    #[error("label is not a subset of the object it restricts")]
    NotSubset,
    #[error("codomain and domain labels differ")]
    LabelMismatch,
    #[error("path `{0}` does not run between the chain's labels")]
    OutsideLabel(String),
    #[error("malformed path `{0}`")]
    MalformedPath(String),
}

pub type VertexId = Arc<str>;
pub type EdgeId = Arc<str>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AmbientGraph {
    name: String,
    vertices: Vec<VertexId>,
    edges: Vec<(EdgeId, VertexId, VertexId)>,
    edge_index: BTreeMap<EdgeId, usize>,
    labels: BTreeMap<String, ObjectLabel>,
}

/// A subset of the ambient graph's vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectLabel(BTreeSet<VertexId>);

impl ObjectLabel {
    pub fn new<I, V>(vs: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        Self(vs.into_iter().map(Into::into).collect())
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0.contains(v)
    }

    pub fn is_subset(&self, other: &ObjectLabel) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ObjectLabel) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// An edge path: visited vertices `v0..vk` and edges `e1..ek`. `k = 0` is the constant path.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphPath {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl GraphPath {
    pub fn constant(v: impl Into<VertexId>) -> Self {
        Self { vertices: vec![v.into()], edges: vec![] }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_constant(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_constant()
    }

    pub fn start(&self) -> &VertexId {
        &self.vertices[0]
    }

    pub fn end(&self) -> &VertexId {
        self.vertices.last().unwrap()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Concatenation when `self` ends where `other` starts.
    pub fn concat(&self, other: &GraphPath) -> Option<GraphPath> {
        if self.end() != other.start() {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(GraphPath { vertices, edges })
    }

    /// Prefix ending at `v_i` and suffix starting there.
    pub fn split(&self, i: usize) -> (GraphPath, GraphPath) {
        let prefix = GraphPath { vertices: self.vertices[..=i].to_vec(), edges: self.edges[..i].to_vec() };
        let suffix = GraphPath { vertices: self.vertices[i..].to_vec(), edges: self.edges[i..].to_vec() };
        (prefix, suffix)
    }
}

impl Graded for GraphPath {}

impl fmt::Display for GraphPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "@{}", self.vertices[0]);
        }
        let names: Vec<&str> = self.edges.iter().map(|e| &**e).collect();
        f.write_str(&names.join("."))
    }
}

impl AmbientGraph {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), ..Default::default() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn add_vertex(&mut self, v: &str) -> Result<(), GraphError> {
        if self.has_vertex(v) {
            return Err(GraphError::Duplicate(v.to_string()));
        }
        self.vertices.push(v.into());
        Ok(())
    }

    pub fn add_edge(&mut self, id: &str, from: &str, to: &str) -> Result<(), GraphError> {
        if self.edge_index.contains_key(id) {
            return Err(GraphError::Duplicate(id.to_string()));
        }
        let from = self.vertex(from)?;
        let to = self.vertex(to)?;
        self.edge_index.insert(id.into(), self.edges.len());
        self.edges.push((id.into(), from, to));
        Ok(())
    }

    pub fn add_label(&mut self, name: &str, vs: &[&str]) -> Result<(), GraphError> {
        if self.labels.contains_key(name) {
            return Err(GraphError::Duplicate(name.to_string()));
        }
        let l = ObjectLabel(vs.iter().map(|v| self.vertex(v)).collect::<Result<_, _>>()?);
        self.labels.insert(name.to_string(), l);
        Ok(())
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.iter().any(|x| &**x == v)
    }

    fn vertex(&self, v: &str) -> Result<VertexId, GraphError> {
        self.vertices.iter().find(|x| &***x == v).cloned().ok_or_else(|| GraphError::UnknownVertex(v.to_string()))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(EdgeId, VertexId, VertexId)] {
        &self.edges
    }

    pub fn labels(&self) -> &BTreeMap<String, ObjectLabel> {
        &self.labels
    }

    pub fn label(&self, name: &str) -> Result<&ObjectLabel, GraphError> {
        self.labels.get(name).ok_or_else(|| GraphError::UnknownLabel(name.to_string()))
    }

    /// The object consisting of every vertex.
    pub fn everything(&self) -> ObjectLabel {
        ObjectLabel(self.vertices.iter().cloned().collect())
    }

    pub fn path_from_edges(&self, edges: &[&str]) -> Result<GraphPath, GraphError> {
        let mut vertices: Vec<VertexId> = Vec::new();
        let mut ids = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            let &idx = self.edge_index.get(*e).ok_or_else(|| GraphError::UnknownEdge(e.to_string()))?;
            let (id, from, to) = &self.edges[idx];
            match vertices.last() {
                None => vertices.push(from.clone()),
                Some(last) if last == from => {}
                Some(_) => return Err(GraphError::Broken(edges[i - 1].to_string(), e.to_string())),
            }
            vertices.push(to.clone());
            ids.push(id.clone());
        }
        if ids.is_empty() {
            return Err(GraphError::MalformedPath(String::new()));
        }
        Ok(GraphPath { vertices, edges: ids })
    }

    /// Parses `e1.e2.e3` or `@v`.
    pub fn parse_path(&self, s: &str) -> Result<GraphPath, GraphError> {
        if let Some(v) = s.strip_prefix('@') {
            return Ok(GraphPath::constant(self.vertex(v)?));
        }
        if s.is_empty() || s.split('.').any(str::is_empty) {
            return Err(GraphError::MalformedPath(s.to_string()));
        }
        self.path_from_edges(&s.split('.').collect::<Vec<_>>())
    }

    /// Every path with at most `max_len` edges (constant paths included).
    pub fn paths_up_to(&self, max_len: usize) -> Vec<GraphPath> {
        let mut all: Vec<GraphPath> = self.vertices.iter().map(|v| GraphPath::constant(v.clone())).collect();
        let mut frontier = all.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for (id, from, to) in &self.edges {
                    if from == p.end() {
                        let mut q = p.clone();
                        q.vertices.push(to.clone());
                        q.edges.push(id.clone());
                        next.push(q);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    /// Seeded random multigraph with vertices `1..=n` and edges `e1..=em` (loops allowed).
    pub fn random<R: Rng>(rng: &mut R, name: &str, vertices: usize, edges: usize) -> Self {
        let mut g = Self::new(name);
        for i in 1..=vertices {
            g.add_vertex(&i.to_string()).unwrap();
        }
        for j in 1..=edges {
            let a = rng.gen_range(1..=vertices).to_string();
            let b = rng.gen_range(1..=vertices).to_string();
            g.add_edge(&format!("e{j}"), &a, &b).unwrap();
        }
        g
    }
}

/// An open string state in `ϑ_ab`.
#[derive(Clone, Debug, PartialEq)]
pub struct PathChain<S: Scalar = Rational> {
    sum: FormalSum<GraphPath, S>,
    domain: ObjectLabel,
    codomain: ObjectLabel,
}

impl<S: Scalar> PathChain<S> {
    pub fn new(sum: FormalSum<GraphPath, S>, domain: ObjectLabel, codomain: ObjectLabel) -> Result<Self, GraphError> {
        if let Some(p) = sum.keys().find(|p| !domain.contains(p.start()) || !codomain.contains(p.end())) {
            return Err(GraphError::OutsideLabel(p.to_string()));
        }
        Ok(Self { sum, domain, codomain })
    }

    pub fn path(p: GraphPath, domain: ObjectLabel, codomain: ObjectLabel) -> Result<Self, GraphError> {
        Self::new(FormalSum::basis(p), domain, codomain)
    }

    pub fn sum(&self) -> &FormalSum<GraphPath, S> {
        &self.sum
    }

    pub fn domain(&self) -> &ObjectLabel {
        &self.domain
    }

    pub fn codomain(&self) -> &ObjectLabel {
        &self.codomain
    }

    pub fn is_zero(&self) -> bool {
        self.sum.is_zero()
    }
}

/// Keeps the terms starting in `sub ⊆ L_a`.
pub fn restrict_start<S: Scalar>(x: &PathChain<S>, sub: &ObjectLabel) -> Result<PathChain<S>, GraphError> {
    if !sub.is_subset(&x.domain) {
        return Err(GraphError::NotSubset);
    }
    Ok(PathChain { sum: x.sum.filter(|p| sub.contains(p.start())), domain: sub.clone(), codomain: x.codomain.clone() })
}

/// Keeps the terms ending in `sub ⊆ L_b`.
pub fn restrict_end<S: Scalar>(x: &PathChain<S>, sub: &ObjectLabel) -> Result<PathChain<S>, GraphError> {
    if !sub.is_subset(&x.codomain) {
        return Err(GraphError::NotSubset);
    }
    Ok(PathChain { sum: x.sum.filter(|p| sub.contains(p.end())), domain: x.domain.clone(), codomain: sub.clone() })
}

/// Bilinear concatenation of paths; pairs whose endpoints disagree contribute zero.
pub fn join<S: Scalar>(x: &FormalSum<GraphPath, S>, y: &FormalSum<GraphPath, S>) -> FormalSum<GraphPath, S> {
    let mut out = FormalSum::zero();
    for (p, c) in x.iter() {
        for (q, d) in y.iter() {
            if let Some(pq) = p.concat(q) {
                out.add_term(pq, c.clone() * d.clone());
            }
        }
    }
    out
}

/// `ϑ_ab × ϑ_bc → ϑ_ac`.
pub fn compose<S: Scalar>(x: &PathChain<S>, y: &PathChain<S>) -> Result<PathChain<S>, GraphError> {
    if x.codomain != y.domain {
        return Err(GraphError::LabelMismatch);
    }
    Ok(PathChain { sum: join(&x.sum, &y.sum), domain: x.domain.clone(), codomain: y.codomain.clone() })
}

/// Sum of constant paths on the object's vertices.
pub fn identity<S: Scalar>(l: &ObjectLabel) -> PathChain<S> {
    let sum = FormalSum::from_terms(l.vertices().map(|v| (GraphPath::constant(v.clone()), S::one())));
    PathChain { sum, domain: l.clone(), codomain: l.clone() }
}

fn pair(a: GraphPath, b: GraphPath) -> Tensor<GraphPath> {
    Tensor::new(vec![a, b])
}

/// Cuts at every interior vertex `v_i` (0 < i < k) lying in `label`.
pub fn cut_interior<S: Scalar>(x: &FormalSum<GraphPath, S>, label: &ObjectLabel) -> TensorSum<GraphPath, S> {
    x.map_linear(|p| {
        FormalSum::from_terms(
            (1..p.len()).filter(|&i| label.contains(&p.vertices[i])).map(|i| {
                let (a, b) = p.split(i);
                (pair(a, b), S::one())
            }),
        )
    })
}

/// Cuts at the fixed interior index `i` only.
pub fn cut_at_index<S: Scalar>(x: &FormalSum<GraphPath, S>, i: usize, label: &ObjectLabel) -> TensorSum<GraphPath, S> {
    x.map_linear(|p| {
        if i > 0 && i < p.len() && label.contains(&p.vertices[i]) {
            let (a, b) = p.split(i);
            FormalSum::basis(pair(a, b))
        } else {
            FormalSum::zero()
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Start,
    End,
}

/// `∨₀` / `∨₁`: the constant path at the start (resp. end) tensored with the path,
/// when that endpoint lies in `label`.
pub fn cut_boundary<S: Scalar>(x: &FormalSum<GraphPath, S>, which: Boundary, label: &ObjectLabel) -> TensorSum<GraphPath, S> {
    x.map_linear(|p| match which {
        Boundary::Start if label.contains(p.start()) => FormalSum::basis(pair(GraphPath::constant(p.start().clone()), p.clone())),
        Boundary::End if label.contains(p.end()) => FormalSum::basis(pair(p.clone(), GraphPath::constant(p.end().clone()))),
        _ => FormalSum::zero(),
    })
}

/// Left action on the first tensor factor: `x·(a⊗b) = (x·a)⊗b`.
pub fn join_left<S: Scalar>(x: &FormalSum<GraphPath, S>, t: &TensorSum<GraphPath, S>) -> TensorSum<GraphPath, S> {
    t.map_linear(|term| {
        let f = term.factors();
        let mut out = FormalSum::zero();
        for (p, c) in join(x, &FormalSum::basis(f[0].clone())).iter() {
            let mut v = vec![p.clone()];
            v.extend_from_slice(&f[1..]);
            out.add_term(Tensor::new(v), c.clone());
        }
        out
    })
}

/// Right action on the last tensor factor: `(a⊗b)·y = a⊗(b·y)`.
pub fn join_right<S: Scalar>(t: &TensorSum<GraphPath, S>, y: &FormalSum<GraphPath, S>) -> TensorSum<GraphPath, S> {
    t.map_linear(|term| {
        let f = term.factors();
        let last = f.len() - 1;
        let mut out = FormalSum::zero();
        for (p, c) in join(&FormalSum::basis(f[last].clone()), y).iter() {
            let mut v = f[..last].to_vec();
            v.push(p.clone());
            out.add_term(Tensor::new(v), c.clone());
        }
        out
    })
}

/// Applies `cut_interior(-, label)` to tensor factor `i`.
pub fn cut_interior_at<S: Scalar>(t: &TensorSum<GraphPath, S>, i: usize, label: &ObjectLabel) -> TensorSum<GraphPath, S> {
    t.map_linear(|term| {
        let f = term.factors();
        let head = Tensor::new(f[..i].to_vec());
        let tail = Tensor::new(f[i + 1..].to_vec());
        let mut out = FormalSum::zero();
        for (mid, c) in cut_interior(&FormalSum::<GraphPath, S>::basis(f[i].clone()), label).iter() {
            out.add_term(head.concat(mid).concat(&tail), c.clone());
        }
        out
    })
}
