//! Finite directed and undirected multigraphs with parallel edges and loops.
//!
//! Vertices are the dense range `0..n`. Edges are identified, ordered
//! entities: parallel edges keep distinct ids, and trails are expressed as
//! edge-id sequences. The multiplicity matrix is a derived view. All graph
//! values are immutable after construction, so they can be shared freely
//! across threads.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::format;

/// Index of a vertex. Valid ids for a graph on `n` vertices are `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index of an edge, stable for the lifetime of its graph. Ids are dense in
/// `0..m` in insertion order; parallel edges get distinct ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite directed multigraph. Loops and parallel diedges are first-class;
/// edge ids follow construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multidigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    out: Vec<Vec<EdgeId>>,
    in_deg: Vec<usize>,
}

impl Multidigraph {
    /// Builds a graph on `n` vertices with the given `(tail, head)` edges,
    /// in order: `EdgeId(k)` names `pairs[k]`.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut out = vec![Vec::new(); n];
        let mut in_deg = vec![0usize; n];
        let mut edges = Vec::with_capacity(pairs.len());
        for (k, &(tail, head)) in pairs.iter().enumerate() {
            if tail >= n || head >= n {
                return Err(Error::EndpointOutOfRange { tail, head, n });
            }
            out[tail].push(EdgeId(k));
            in_deg[head] += 1;
            edges.push((VertexId(tail), VertexId(head)));
        }
        Ok(Multidigraph {
            n,
            edges,
            out,
            in_deg,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    /// Iterates `(id, tail, head)` in edge-id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(|(k, &(t, h))| (EdgeId(k), t, h))
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.index()]
    }

    pub fn tail(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].0
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        self.edges[e.index()].1
    }

    /// Edge ids with tail `v`, in ascending id order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v.index()]
    }

    /// A vertex is isolated when no edge touches it (loops count as touching).
    pub fn is_isolated(&self, v: VertexId) -> bool {
        self.out[v.index()].is_empty() && self.in_deg[v.index()] == 0
    }

    /// Vertices with at least one incident edge, ascending.
    pub fn support(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| !self.is_isolated(v)).collect()
    }

    /// New graph with `extra` edges appended after the existing ones.
    pub(crate) fn with_appended_edges(&self, extra: &[(VertexId, VertexId)]) -> Multidigraph {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(t, h)| (t.index(), h.index()))
            .collect();
        pairs.extend(extra.iter().map(|&(t, h)| (t.index(), h.index())));
        Multidigraph::from_edge_list(self.n, &pairs).expect("appended endpoints are in range")
    }

    /// Per-vertex out-degree (tau) and in-degree (eta). A loop contributes
    /// exactly 1 to each at its vertex.
    pub fn degree_profile(&self) -> DegreeProfile {
        let tau: Vec<usize> = self.out.iter().map(Vec::len).collect();
        DegreeProfile {
            tau,
            eta: self.in_deg.clone(),
        }
    }

    /// The n x n matrix whose (i, j) entry counts the diedges i -> j.
    pub fn count_matrix(&self) -> CountMatrix {
        let mut entries = vec![0usize; self.n * self.n];
        for &(t, h) in &self.edges {
            entries[t.index() * self.n + h.index()] += 1;
        }
        CountMatrix {
            n: self.n,
            entries,
        }
    }

    /// Line-oriented text form; `parse` reproduces the graph exactly,
    /// edge order included.
    pub fn to_text(&self) -> String {
        format::write_text(self.n, self.edges.iter().map(|&(t, h)| (t.index(), h.index())))
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let (n, pairs) = format::parse_text(text)?;
        Multidigraph::from_edge_list(n, &pairs)
    }

    /// DOT export for visualization; one statement per edge in id order.
    pub fn to_dot(&self) -> String {
        format::write_dot(
            "digraph",
            "->",
            self.n,
            self.edges.iter().map(|&(t, h)| (t.index(), h.index())),
        )
    }
}

/// A finite undirected multigraph; endpoints of an edge are an unordered
/// pair, loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl MultiGraph {
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::EndpointOutOfRange { tail: x, head: y, n });
            }
            edges.push((VertexId(x), VertexId(y)));
        }
        Ok(MultiGraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    /// True when every vertex is reachable from every other through edges.
    /// Isolated vertices break connectivity; the one-vertex graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(x, y) in &self.edges {
            adj[x.index()].push(y.index());
            adj[y.index()].push(x.index());
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// True when no unordered pair of endpoints repeats.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.edges.iter().all(|&(x, y)| seen.insert(normalize(x, y)))
    }

    pub fn to_text(&self) -> String {
        format::write_text(self.n, self.edges.iter().map(|&(x, y)| (x.index(), y.index())))
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let (n, pairs) = format::parse_text(text)?;
        MultiGraph::from_edge_list(n, &pairs)
    }

    pub fn to_dot(&self) -> String {
        format::write_dot(
            "graph",
            "--",
            self.n,
            self.edges.iter().map(|&(x, y)| (x.index(), y.index())),
        )
    }
}

fn normalize(x: VertexId, y: VertexId) -> (usize, usize) {
    if x.index() <= y.index() {
        (x.index(), y.index())
    } else {
        (y.index(), x.index())
    }
}

/// Out-degree, in-degree, and total-degree bookkeeping for a multidigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    tau: Vec<usize>,
    eta: Vec<usize>,
}

impl DegreeProfile {
    pub fn vertex_count(&self) -> usize {
        self.tau.len()
    }

    /// Out-degree of `v`.
    pub fn tau(&self, v: VertexId) -> usize {
        self.tau[v.index()]
    }

    /// In-degree of `v`.
    pub fn eta(&self, v: VertexId) -> usize {
        self.eta[v.index()]
    }

    /// Degree of `v`: tau + eta.
    pub fn delta(&self, v: VertexId) -> usize {
        self.tau(v) + self.eta(v)
    }

    /// Total degree: the sum of delta over all vertices, i.e. 2m.
    pub fn total(&self) -> usize {
        self.tau.iter().sum::<usize>() + self.eta.iter().sum::<usize>()
    }

    /// tau(v) - eta(v) as a signed surplus.
    pub fn surplus(&self, v: VertexId) -> isize {
        self.tau(v) as isize - self.eta(v) as isize
    }

    /// True when tau(v) = eta(v) at every vertex.
    pub fn is_balanced(&self) -> bool {
        self.tau == self.eta
    }
}

/// The n x n matrix of diedge multiplicities. Row sums are out-degrees,
/// column sums in-degrees; the total is the edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl CountMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: VertexId, j: VertexId) -> usize {
        self.entries[i.index() * self.n + j.index()]
    }

    pub fn row_sum(&self, i: VertexId) -> usize {
        (0..self.n).map(|j| self.entries[i.index() * self.n + j]).sum()
    }

    pub fn col_sum(&self, j: VertexId) -> usize {
        (0..self.n).map(|i| self.entries[i * self.n + j.index()]).sum()
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.entries[i * self.n + j] == self.entries[j * self.n + i]))
    }

    /// Expands the matrix back into a graph, emitting the diedges of each
    /// cell in row-major order. The result has the same degree profile as
    /// any graph the matrix was derived from.
    pub fn to_multidigraph(&self) -> Multidigraph {
        let mut pairs = Vec::with_capacity(self.total());
        for i in 0..self.n {
            for j in 0..self.n {
                for _ in 0..self.entries[i * self.n + j] {
                    pairs.push((i, j));
                }
            }
        }
        Multidigraph::from_edge_list(self.n, &pairs).expect("matrix endpoints are in range")
    }

    /// Builds a matrix from row-major entries; mainly useful for tests and
    /// exhaustive generation.
    pub fn from_rows(n: usize, entries: Vec<usize>) -> Result<Self, Error> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for an {n} x {n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(CountMatrix { n, entries })
    }
}

/// Positive edge multiplicities keyed by unordered endpoint pairs, used to
/// expand a simple graph into a multigraph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize, u32)>", into = "Vec<(usize, usize, u32)>")]
pub struct MultiplicityMap {
    map: BTreeMap<(usize, usize), u32>,
}

impl MultiplicityMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets the multiplicity of the unordered pair {x, y}.
    pub fn insert(&mut self, x: VertexId, y: VertexId, mu: u32) {
        self.map.insert(normalize(x, y), mu);
    }

    pub fn get(&self, x: VertexId, y: VertexId) -> Option<u32> {
        self.map.get(&normalize(x, y)).copied()
    }

    /// The same multiplicity on every edge of `g`.
    pub fn uniform(g: &MultiGraph, mu: u32) -> Self {
        let mut map = MultiplicityMap::new();
        for (x, y) in g.edges() {
            map.insert(x, y, mu);
        }
        map
    }

    pub fn is_all_ones(&self) -> bool {
        self.map.values().all(|&mu| mu == 1)
    }
}

impl From<MultiplicityMap> for Vec<(usize, usize, u32)> {
    fn from(m: MultiplicityMap) -> Self {
        m.map.into_iter().map(|((x, y), mu)| (x, y, mu)).collect()
    }
}

impl TryFrom<Vec<(usize, usize, u32)>> for MultiplicityMap {
    type Error = String;

    fn try_from(triples: Vec<(usize, usize, u32)>) -> Result<Self, String> {
        let mut map = MultiplicityMap::new();
        for (x, y, mu) in triples {
            map.insert(VertexId(x), VertexId(y), mu);
        }
        Ok(map)
    }
}
