//! Immutable r-uniform hypergraphs on dense vertex ids `0..n`.

use std::fmt;
use std::ops::Deref;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::binomial::binomial;

/// An edge: `r` strictly increasing vertex ids.
///
/// Ordering is lexicographic on the id sequence, which is the canonical
/// order used by files and complement enumeration.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Edge(Vec<usize>);

impl Edge {
    /// Sorts the given ids. Does not check for duplicates; `Hypergraph::build` does.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        Edge(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl Deref for Edge {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Edge {
    fn from(v: Vec<usize>) -> Self {
        Edge::new(v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("uniformity r={0} is below 2")]
    Uniformity(usize),
    #[error("edge {{{edge}}} has {len} vertices, expected r={r}")]
    WrongArity { edge: String, len: usize, r: usize },
    #[error("edge {{{edge}}} repeats a vertex")]
    RepeatedVertex { edge: String },
    #[error("edge {{{edge}}} uses vertex {vertex}, but n={n}")]
    VertexOutOfRange { edge: String, vertex: usize, n: usize },
    #[error("duplicate edge {{{edge}}}")]
    DuplicateEdge { edge: String },
    #[error("cut side must be a nonempty proper vertex subset")]
    InvalidSide,
    #[error("vertex {vertex} is not in a hypergraph with n={n}")]
    NotAVertex { vertex: usize, n: usize },
}

/// A simple r-uniform hypergraph. Edges are deduplicated and kept in
/// lexicographic order; values are immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Edge>,
}

/// The edge set `E_H(X)` of a cut together with its side `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    pub side: Vec<usize>,
    pub crossing: Vec<Edge>,
    pub value: usize,
}

/// `H[Y]` relabeled to `0..|Y|`; `mapping[new] = old`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Hypergraph,
    pub mapping: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Degrees {
    pub per_vertex: Vec<usize>,
    pub min: Option<usize>,
    pub max: Option<usize>,
}

impl Hypergraph {
    /// Validates and canonicalizes. Edges may be given in any order and
    /// with vertices in any order; a repeated edge is an error.
    pub fn build<I, E>(n: usize, r: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Vec<usize>>,
    {
        if r < 2 {
            return Err(HypergraphError::Uniformity(r));
        }
        let mut out = Vec::new();
        for raw in edges {
            let raw: Vec<usize> = raw.into();
            let edge = Edge::new(raw);
            let shown = edge.to_string();
            if edge.len() != r {
                return Err(HypergraphError::WrongArity { edge: shown, len: edge.len(), r });
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex { edge: shown });
            }
            if let Some(&vertex) = edge.last().filter(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { edge: shown, vertex, n });
            }
            out.push(edge);
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge { edge: w[0].to_string() });
        }
        Ok(Hypergraph { n, r, edges: out })
    }

    /// `K_n^r`; edgeless when `n < r`.
    pub fn complete(n: usize, r: usize) -> Result<Self, HypergraphError> {
        Self::build(n, r, (0..n).combinations(r))
    }

    pub fn empty(n: usize, r: usize) -> Result<Self, HypergraphError> {
        Self::build(n, r, Vec::<Vec<usize>>::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: &[usize]) -> bool {
        self.edges.binary_search_by(|x| x.vertices().cmp(e)).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == binomial(self.n, self.r)
    }

    /// `H + e` for an absent r-subset `e`.
    pub fn with_edge(&self, e: &Edge) -> Result<Self, HypergraphError> {
        match self.edges.binary_search(e) {
            Ok(_) => Err(HypergraphError::DuplicateEdge { edge: e.to_string() }),
            Err(pos) => {
                if e.len() != self.r {
                    return Err(HypergraphError::WrongArity { edge: e.to_string(), len: e.len(), r: self.r });
                }
                if let Some(&vertex) = e.last().filter(|&&v| v >= self.n) {
                    return Err(HypergraphError::VertexOutOfRange { edge: e.to_string(), vertex, n: self.n });
                }
                let mut edges = self.edges.clone();
                edges.insert(pos, e.clone());
                Ok(Hypergraph { n: self.n, r: self.r, edges })
            }
        }
    }

    fn membership(&self, set: &[usize]) -> Result<Vec<bool>, HypergraphError> {
        let mut inside = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return Err(HypergraphError::NotAVertex { vertex: v, n: self.n });
            }
            inside[v] = true;
        }
        Ok(inside)
    }

    /// `d_H(X)` with the crossing edges. `X` must be a nonempty proper subset.
    pub fn cut_value(&self, side: &[usize]) -> Result<CutWitness, HypergraphError> {
        let inside = self.membership(side)?;
        let size = inside.iter().filter(|&&b| b).count();
        if size == 0 || size == self.n {
            return Err(HypergraphError::InvalidSide);
        }
        let crossing: Vec<Edge> = self.edges.iter().filter(|e| crosses(e, &inside)).cloned().collect();
        let side = (0..self.n).filter(|&v| inside[v]).collect();
        Ok(CutWitness { side, value: crossing.len(), crossing })
    }

    /// Number of edges crossing the side given as a membership vector.
    pub(crate) fn cut_size(&self, inside: &[bool]) -> usize {
        self.edges.iter().filter(|e| crosses(e, inside)).count()
    }

    pub fn induced(&self, set: &[usize]) -> Result<Induced, HypergraphError> {
        let inside = self.membership(set)?;
        let mapping: Vec<usize> = (0..self.n).filter(|&v| inside[v]).collect();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in mapping.iter().enumerate() {
            relabel[old] = new;
        }
        // relabeling is monotone, so lexicographic order survives
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| inside[v]))
            .map(|e| Edge(e.iter().map(|&v| relabel[v]).collect()))
            .collect();
        let graph = Hypergraph { n: mapping.len(), r: self.r, edges };
        Ok(Induced { graph, mapping })
    }

    pub fn degree_list(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e.iter() {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn degrees(&self) -> Degrees {
        let per_vertex = self.degree_list();
        Degrees { min: per_vertex.iter().copied().min(), max: per_vertex.iter().copied().max(), per_vertex }
    }

    /// Every r-subset of `0..n` that is not an edge, in lexicographic order.
    pub fn complement_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let mut present = self.edges.iter().peekable();
        (0..self.n).combinations(self.r).filter_map(move |c| {
            while present.next_if(|e| e.vertices() < c.as_slice()).is_some() {}
            if present.next_if(|e| e.vertices() == c.as_slice()).is_some() {
                None
            } else {
                Some(Edge(c))
            }
        })
    }

    /// Canonical text form: header `n r`, then one sorted edge per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.r);
        for e in &self.edges {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, ParseError> {
        crate::format::parse(text)
    }
}

fn crosses(e: &Edge, inside: &[bool]) -> bool {
    let first = inside[e[0]];
    e[1..].iter().any(|&v| inside[v] != first)
}

pub use crate::format::ParseError;
