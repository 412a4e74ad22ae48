//! Edge-id trails: chained sequences of distinct diedges.

use std::fmt;

use crate::error::Error;
use crate::graph::{EdgeId, Multidigraph, VertexId};

/// A directed trail through a multidigraph: consecutive edges chain (the head
/// of each edge is the tail of the next) and no edge id repeats. The trail is
/// closed when it ends where it started.
///
/// Construction validates both invariants, so holding a `Trail` is proof of
/// them; tests use the checked constructor as the trail validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
}

impl Trail {
    /// Validates `edges` against `d` and derives the vertex sequence.
    pub fn new(d: &Multidigraph, edges: Vec<EdgeId>) -> Result<Self, Error> {
        if edges.is_empty() {
            return Err(Error::MalformedTrail("a trail needs at least one edge".into()));
        }
        let m = d.edge_count();
        let mut used = vec![false; m];
        let mut vertices = Vec::with_capacity(edges.len() + 1);
        for (i, &e) in edges.iter().enumerate() {
            if e.index() >= m {
                return Err(Error::MalformedTrail(format!(
                    "edge id {e} out of range for a graph with {m} edges"
                )));
            }
            if used[e.index()] {
                return Err(Error::MalformedTrail(format!("edge id {e} repeats")));
            }
            used[e.index()] = true;
            let (tail, head) = d.endpoints(e);
            if i == 0 {
                vertices.push(tail);
            } else if *vertices.last().expect("nonempty") != tail {
                return Err(Error::MalformedTrail(format!(
                    "edge {e} does not chain onto the previous edge"
                )));
            }
            vertices.push(head);
        }
        Ok(Trail { edges, vertices })
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Vertex sequence x0 -> x1 -> ... -> xk, with k = len().
    pub fn vertex_seq(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("nonempty")
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    /// Closed trail using every edge of `d` exactly once.
    pub fn is_eulerian_circuit_of(&self, d: &Multidigraph) -> bool {
        self.is_closed() && self.len() == d.edge_count()
    }

    /// Open trail using every edge of `d` exactly once.
    pub fn is_eulerian_path_of(&self, d: &Multidigraph) -> bool {
        !self.is_closed() && self.len() == d.edge_count()
    }
}

impl fmt::Display for Trail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                write!(f, " -> ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}
