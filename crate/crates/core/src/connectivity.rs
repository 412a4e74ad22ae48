//! Weak connectivity, strongly connected components, and closed-walk
//! witnesses of mutual reachability.

use std::collections::VecDeque;
use std::fmt;

use crate::error::Error;
use crate::graph::{EdgeId, Multidigraph, VertexId};

/// Partition of the vertices into strongly connected components. Component
/// ids are dense and assigned in order of each component's smallest member,
/// so the partition is independent of edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccPartition {
    comp: Vec<usize>,
    count: usize,
}

impl SccPartition {
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.comp[v.index()]
    }

    pub fn same_component(&self, x: VertexId, y: VertexId) -> bool {
        self.component_of(x) == self.component_of(y)
    }
}

/// Tarjan's algorithm, iterative to keep the stack flat on large inputs.
pub fn scc(d: &Multidigraph) -> SccPartition {
    let n = d.vertex_count();
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut raw_comp = vec![UNSET; n];
    let mut raw_count = 0usize;
    let mut next_index = 0usize;
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, 0));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            let outs = d.out_edges(VertexId(v));
            if frame.1 < outs.len() {
                let w = d.head(outs[frame.1]).index();
                frame.1 += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(parent) = frames.last() {
                    let p = parent.0;
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("component stack is nonempty");
                        on_stack[w] = false;
                        raw_comp[w] = raw_count;
                        if w == v {
                            break;
                        }
                    }
                    raw_count += 1;
                }
            }
        }
    }

    // Relabel so component ids follow each component's smallest vertex.
    let mut min_vertex = vec![usize::MAX; raw_count];
    for (v, &c) in raw_comp.iter().enumerate() {
        min_vertex[c] = min_vertex[c].min(v);
    }
    let mut order: Vec<usize> = (0..raw_count).collect();
    order.sort_by_key(|&c| min_vertex[c]);
    let mut relabel = vec![0usize; raw_count];
    for (new_id, &old_id) in order.iter().enumerate() {
        relabel[old_id] = new_id;
    }
    SccPartition {
        comp: raw_comp.into_iter().map(|c| relabel[c]).collect(),
        count: raw_count,
    }
}

/// True when the underlying undirected multigraph is connected. Isolated
/// vertices break connectivity; the one-vertex graph is connected.
pub fn is_weakly_connected(d: &Multidigraph) -> bool {
    let n = d.vertex_count();
    if n == 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for (_, t, h) in d.edges() {
        adj[t.index()].push(h.index());
        adj[h.index()].push(t.index());
    }
    let mut seen = vec![false; n];
    visit_undirected(&adj, 0, &mut seen);
    seen.iter().all(|&s| s)
}

fn visit_undirected(adj: &[Vec<usize>], start: usize, seen: &mut [bool]) {
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
}

/// Weak connectivity judged only on vertices that carry edges; vacuously
/// true when at most one vertex does.
pub(crate) fn weakly_connected_over_support(d: &Multidigraph) -> bool {
    let support = d.support();
    match support.first() {
        None => true,
        Some(&first) => {
            let n = d.vertex_count();
            let mut adj = vec![Vec::new(); n];
            for (_, t, h) in d.edges() {
                adj[t.index()].push(h.index());
                adj[h.index()].push(t.index());
            }
            let mut seen = vec![false; n];
            visit_undirected(&adj, first.index(), &mut seen);
            support.iter().all(|&v| seen[v.index()])
        }
    }
}

/// Strong connectivity judged only on vertices that carry edges.
pub(crate) fn strongly_connected_over_support(d: &Multidigraph) -> bool {
    let support = d.support();
    if support.len() <= 1 {
        return true;
    }
    let partition = scc(d);
    let first = partition.component_of(support[0]);
    support.iter().all(|&v| partition.component_of(v) == first)
}

/// True when every two distinct vertices lie on a common dicircuit, i.e.
/// all pairs are mutually reachable. The one-vertex graph counts as strongly
/// connected.
pub fn is_strongly_connected(d: &Multidigraph) -> bool {
    d.vertex_count() == 1 || scc(d).count() == 1
}

/// A closed walk witnessing that two vertices lie on a common dicircuit.
/// The walk chains and is closed, but it may repeat an edge when the only
/// routes between the two vertices share one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicircuitWitness {
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
}

impl DicircuitWitness {
    fn new(d: &Multidigraph, edges: Vec<EdgeId>) -> Self {
        let mut vertices = vec![d.tail(edges[0])];
        for &e in &edges {
            debug_assert_eq!(d.tail(e), *vertices.last().expect("nonempty"));
            vertices.push(d.head(e));
        }
        debug_assert_eq!(vertices.first(), vertices.last());
        DicircuitWitness { edges, vertices }
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn vertex_seq(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn visits(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

impl fmt::Display for DicircuitWitness {
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

/// A closed walk through both `x` and `y`, built from two shortest dipaths,
/// or `None` when the two are not mutually reachable.
pub fn common_dicircuit(
    d: &Multidigraph,
    x: VertexId,
    y: VertexId,
) -> Result<Option<DicircuitWitness>, Error> {
    let n = d.vertex_count();
    if x.index() >= n || y.index() >= n {
        return Err(Error::InvalidArgument(format!(
            "vertices ({x}, {y}) out of range for a graph on {n} vertices"
        )));
    }
    if x == y {
        return Err(Error::InvalidArgument(
            "common dicircuit requires two distinct vertices".into(),
        ));
    }
    let forward = match shortest_dipath(d, x, y) {
        Some(p) => p,
        None => return Ok(None),
    };
    let back = match shortest_dipath(d, y, x) {
        Some(p) => p,
        None => return Ok(None),
    };
    let mut edges = forward;
    edges.extend(back);
    Ok(Some(DicircuitWitness::new(d, edges)))
}

/// BFS shortest dipath by edge count; out-edges explored in id order, so the
/// result is deterministic.
fn shortest_dipath(d: &Multidigraph, from: VertexId, to: VertexId) -> Option<Vec<EdgeId>> {
    let n = d.vertex_count();
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[from.index()] = true;
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &e in d.out_edges(v) {
            let w = d.head(e);
            if !seen[w.index()] {
                seen[w.index()] = true;
                parent[w.index()] = Some(e);
                queue.push_back(w);
            }
        }
    }
    if !seen[to.index()] {
        return None;
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let e = parent[cur.index()].expect("reached vertices have a parent edge");
        path.push(e);
        cur = d.tail(e);
    }
    path.reverse();
    Some(path)
}
