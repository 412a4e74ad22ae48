//! Eulerian classification and constructive extraction.
//!
//! Classification combines the degree balance test with strong connectivity
//! over the edge-carrying vertices. Circuit extraction amalgamates greedy
//! closed walks (Hierholzer style) with a fixed smallest-edge-id tie-break,
//! so outputs are deterministic. The vertex-split transform provides an
//! independent construction route through a loop-free digraph.

use std::fmt;

use crate::connectivity;
use crate::error::Error;
use crate::graph::{EdgeId, Multidigraph, VertexId};
use crate::trail::Trail;

/// Why a graph fails to be circuit- or path-Eulerian. Reasons are evaluated
/// in a fixed order: trivial, degree imbalance, weak connectivity, strong
/// connectivity; the first failure is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotEulerianReason {
    Trivial,
    DegreeImbalance,
    NotConnected,
    NotStronglyConnected,
}

impl fmt::Display for NotEulerianReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NotEulerianReason::Trivial => "trivial",
            NotEulerianReason::DegreeImbalance => "degree-imbalance",
            NotEulerianReason::NotConnected => "not-connected",
            NotEulerianReason::NotStronglyConnected => "not-strongly-connected",
        };
        f.write_str(s)
    }
}

/// Three-way Eulerian verdict. The path case carries the forced endpoints:
/// every Eulerian dipath of the graph runs from `begin` to `end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerClassification {
    CircuitEulerian,
    PathEulerian { begin: VertexId, end: VertexId },
    NotEulerian(NotEulerianReason),
}

impl fmt::Display for EulerClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerClassification::CircuitEulerian => f.write_str("CircuitEulerian"),
            EulerClassification::PathEulerian { begin, end } => {
                write!(f, "PathEulerian b={begin} e={end}")
            }
            EulerClassification::NotEulerian(reason) => write!(f, "NotEulerian: {reason}"),
        }
    }
}

/// Classifies a multidigraph as circuit-Eulerian, path-Eulerian with forced
/// endpoints, or neither. Vertices without edges are ignored: connectivity is
/// judged on the subgraph they induce, which keeps padded vertex ranges
/// composable. The edgeless graph is an error.
pub fn classify(d: &Multidigraph) -> Result<EulerClassification, Error> {
    if d.edge_count() == 0 {
        return Err(Error::TrivialGraph);
    }
    let profile = d.degree_profile();
    if profile.is_balanced() {
        return Ok(circuit_verdict(d));
    }

    // The only acceptable imbalance: one vertex a single edge ahead, one a
    // single edge behind, everything else balanced.
    let mut begin = None;
    let mut end = None;
    for v in d.vertices() {
        match profile.surplus(v) {
            0 => {}
            1 if begin.is_none() => begin = Some(v),
            -1 if end.is_none() => end = Some(v),
            _ => return Ok(EulerClassification::NotEulerian(NotEulerianReason::DegreeImbalance)),
        }
    }
    let (begin, end) = match (begin, end) {
        (Some(b), Some(e)) => (b, e),
        _ => return Ok(EulerClassification::NotEulerian(NotEulerianReason::DegreeImbalance)),
    };

    // Path-Eulerian exactly when one return diedge end -> begin closes the
    // graph into a circuit-Eulerian one.
    let augmented = d.with_appended_edges(&[(end, begin)]);
    match circuit_verdict(&augmented) {
        EulerClassification::CircuitEulerian => Ok(EulerClassification::PathEulerian { begin, end }),
        other => Ok(other),
    }
}

/// Verdict for a balanced graph: connectivity over the edge-carrying vertices.
fn circuit_verdict(d: &Multidigraph) -> EulerClassification {
    if !connectivity::weakly_connected_over_support(d) {
        return EulerClassification::NotEulerian(NotEulerianReason::NotConnected);
    }
    if !connectivity::strongly_connected_over_support(d) {
        return EulerClassification::NotEulerian(NotEulerianReason::NotStronglyConnected);
    }
    EulerClassification::CircuitEulerian
}

/// Extracts the Eulerian circuit of a circuit-Eulerian graph.
///
/// Deterministic: the walk starts at the smallest edge-carrying vertex and
/// always takes the unused out-edge with the smallest id; when a walk closes
/// with edges left over, a sub-circuit is grown at the first visit (in
/// circuit order) that still has unused out-edges and spliced in place.
pub fn find_euler_circuit(d: &Multidigraph) -> Result<Trail, Error> {
    let cls = classify(d)?;
    if cls != EulerClassification::CircuitEulerian {
        return Err(Error::NotCircuitEulerian(cls));
    }
    let start = *d.support().first().expect("circuit-Eulerian graphs have edges");

    let n = d.vertex_count();
    let m = d.edge_count();
    let mut cursor = vec![0usize; n];

    // Slots form a linked list over edges in circuit order; splices insert
    // sub-walks without shifting the tail of the list.
    const END: usize = usize::MAX;
    let mut slot_edges: Vec<EdgeId> = Vec::with_capacity(m);
    let mut next: Vec<usize> = Vec::with_capacity(m);

    greedy_closed_walk(d, start, &mut cursor, &mut slot_edges);
    for i in 1..slot_edges.len() {
        next.push(i);
    }
    next.push(END);

    let mut head_slot = 0usize;
    let mut prev: Option<usize> = None;
    let mut cur = head_slot;
    while cur != END {
        let v = d.tail(slot_edges[cur]);
        if cursor[v.index()] < d.out_edges(v).len() {
            let base = slot_edges.len();
            greedy_closed_walk(d, v, &mut cursor, &mut slot_edges);
            for i in base..slot_edges.len() - 1 {
                next.push(i + 1);
            }
            next.push(cur);
            match prev {
                None => head_slot = base,
                Some(p) => next[p] = base,
            }
            cur = base;
        } else {
            prev = Some(cur);
            cur = next[cur];
        }
    }

    let mut edges = Vec::with_capacity(m);
    let mut slot = head_slot;
    while slot != END {
        edges.push(slot_edges[slot]);
        slot = next[slot];
    }
    debug_assert_eq!(edges.len(), m);
    Trail::new(d, edges)
}

/// Walks from `v` taking the smallest unused out-edge until stuck; with
/// balanced degrees the walk necessarily closes back at `v`.
fn greedy_closed_walk(
    d: &Multidigraph,
    v: VertexId,
    cursor: &mut [usize],
    out: &mut Vec<EdgeId>,
) {
    let mut cur = v;
    loop {
        let outs = d.out_edges(cur);
        if cursor[cur.index()] == outs.len() {
            break;
        }
        let e = outs[cursor[cur.index()]];
        cursor[cur.index()] += 1;
        out.push(e);
        cur = d.head(e);
    }
    debug_assert_eq!(cur, v, "balanced walks close where they started");
}

/// Extracts the Eulerian dipath of a path-Eulerian graph by closing it with
/// one virtual return diedge, extracting the circuit of the closed graph,
/// and rotating the virtual diedge out.
pub fn find_euler_path(d: &Multidigraph) -> Result<Trail, Error> {
    let cls = classify(d)?;
    let (begin, end) = match cls {
        EulerClassification::PathEulerian { begin, end } => (begin, end),
        other => return Err(Error::NotPathEulerian(other)),
    };
    let augmented = d.with_appended_edges(&[(end, begin)]);
    let circuit = find_euler_circuit(&augmented)?;
    let virtual_id = EdgeId(d.edge_count());
    let pos = circuit
        .edge_ids()
        .iter()
        .position(|&e| e == virtual_id)
        .expect("the circuit uses the virtual diedge");
    let mut edges = circuit.edge_ids()[pos + 1..].to_vec();
    edges.extend_from_slice(&circuit.edge_ids()[..pos]);
    let trail = Trail::new(d, edges)?;
    debug_assert_eq!(trail.start(), begin);
    debug_assert_eq!(trail.end(), end);
    Ok(trail)
}

/// How edges of a graph map onto the halves introduced by `split_transform`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitMapping {
    original_n: usize,
    original_m: usize,
}

impl SplitMapping {
    /// The midpoint vertex subdividing original edge `e`.
    pub fn midpoint(&self, e: EdgeId) -> VertexId {
        VertexId(self.original_n + e.index())
    }

    /// The two split-graph edges carrying original edge `e`, in traversal
    /// order: tail -> midpoint, then midpoint -> head.
    pub fn halves(&self, e: EdgeId) -> (EdgeId, EdgeId) {
        (EdgeId(2 * e.index()), EdgeId(2 * e.index() + 1))
    }

    pub fn is_midpoint(&self, v: VertexId) -> bool {
        v.index() >= self.original_n
    }

    pub fn original_of_midpoint(&self, v: VertexId) -> Option<EdgeId> {
        if self.is_midpoint(v) && v.index() < self.original_n + self.original_m {
            Some(EdgeId(v.index() - self.original_n))
        } else {
            None
        }
    }
}

/// Subdivides every edge through a fresh midpoint vertex: edge k: a -> b
/// becomes a -> (n + k) -> b. The result has n + m vertices, 2m edges, no
/// loops, and at most one edge between any pair of original vertices'
/// midpoints, while preserving degree balance and strong connectivity.
pub fn split_transform(d: &Multidigraph) -> (Multidigraph, SplitMapping) {
    let n = d.vertex_count();
    let m = d.edge_count();
    let mut pairs = Vec::with_capacity(2 * m);
    for (k, tail, head) in d.edges() {
        let mid = n + k.index();
        pairs.push((tail.index(), mid));
        pairs.push((mid, head.index()));
    }
    let split = Multidigraph::from_edge_list(n + m, &pairs).expect("split endpoints in range");
    (
        split,
        SplitMapping {
            original_n: n,
            original_m: m,
        },
    )
}

/// Collapses an Eulerian circuit of the split graph back onto the original
/// graph by contracting each pass through a midpoint.
pub fn contract_split_trail(
    d: &Multidigraph,
    trail: &Trail,
    mapping: &SplitMapping,
) -> Result<Trail, Error> {
    if trail.len() != 2 * mapping.original_m {
        return Err(Error::MalformedTrail(format!(
            "expected {} edges in a split-graph circuit, got {}",
            2 * mapping.original_m,
            trail.len()
        )));
    }
    if !trail.is_closed() {
        return Err(Error::MalformedTrail(
            "split-graph trail is not a circuit".into(),
        ));
    }
    let mut edges = trail.edge_ids().to_vec();
    if mapping.is_midpoint(trail.start()) {
        edges.rotate_left(1);
    }
    let mut contracted = Vec::with_capacity(mapping.original_m);
    for pair in edges.chunks(2) {
        let (first, second) = (pair[0], pair[1]);
        if first.index() % 2 != 0 || second.index() != first.index() + 1 {
            return Err(Error::MalformedTrail(
                "trail does not alternate original and midpoint vertices".into(),
            ));
        }
        contracted.push(EdgeId(first.index() / 2));
    }
    Trail::new(d, contracted)
}

/// Appends a fresh dipath along `waypoints` to a circuit-Eulerian graph,
/// turning it path-Eulerian from the first waypoint to the last. Both
/// endpoints must already carry edges so the new path attaches to the
/// circuit structure.
pub fn add_dipath(d: &Multidigraph, waypoints: &[VertexId]) -> Result<Multidigraph, Error> {
    let (begin, end) = validate_waypoints(d, waypoints)?;
    if begin == end {
        return Err(Error::InvalidArgument(
            "dipath endpoints must be distinct".into(),
        ));
    }
    if d.is_isolated(begin) || d.is_isolated(end) {
        return Err(Error::InvalidArgument(
            "dipath endpoints must be vertices of the circuit structure".into(),
        ));
    }
    let cls = classify(d)?;
    if cls != EulerClassification::CircuitEulerian {
        return Err(Error::NotCircuitEulerian(cls));
    }
    Ok(append_path(d, waypoints))
}

/// Appends a fresh return dipath from the path end back to the path begin of
/// a path-Eulerian graph, closing it into a circuit-Eulerian one.
pub fn add_return_path(d: &Multidigraph, waypoints: &[VertexId]) -> Result<Multidigraph, Error> {
    let (first, last) = validate_waypoints(d, waypoints)?;
    let cls = classify(d)?;
    let (begin, end) = match cls {
        EulerClassification::PathEulerian { begin, end } => (begin, end),
        other => return Err(Error::NotPathEulerian(other)),
    };
    if first != end || last != begin {
        return Err(Error::InvalidArgument(format!(
            "return path must run {end} -> {begin}, got {first} -> {last}"
        )));
    }
    Ok(append_path(d, waypoints))
}

fn validate_waypoints(
    d: &Multidigraph,
    waypoints: &[VertexId],
) -> Result<(VertexId, VertexId), Error> {
    if waypoints.len() < 2 {
        return Err(Error::InvalidArgument(
            "a dipath needs at least two waypoints".into(),
        ));
    }
    let n = d.vertex_count();
    for &w in waypoints {
        if w.index() >= n {
            return Err(Error::InvalidArgument(format!(
                "waypoint {w} out of range for a graph on {n} vertices"
            )));
        }
    }
    Ok((waypoints[0], *waypoints.last().expect("nonempty")))
}

fn append_path(d: &Multidigraph, waypoints: &[VertexId]) -> Multidigraph {
    let extra: Vec<(VertexId, VertexId)> = waypoints.windows(2).map(|w| (w[0], w[1])).collect();
    d.with_appended_edges(&extra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn digraph(n: usize, pairs: &[(usize, usize)]) -> Multidigraph {
        Multidigraph::from_edge_list(n, pairs).unwrap()
    }

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn classify_examples() {
        let cycle = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(classify(&cycle).unwrap(), EulerClassification::CircuitEulerian);

        let with_chord = digraph(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]);
        assert_eq!(
            classify(&with_chord).unwrap(),
            EulerClassification::PathEulerian { begin: v(0), end: v(2) }
        );
        // The brute-force search agrees there is an open all-edges trail.
        assert!(!oracle::open_trail_endpoints(&with_chord).is_empty());

        let two_loops = digraph(2, &[(0, 0), (1, 1)]);
        assert_eq!(
            classify(&two_loops).unwrap(),
            EulerClassification::NotEulerian(NotEulerianReason::NotConnected)
        );

        let parallel = digraph(2, &[(0, 1), (0, 1), (1, 0)]);
        assert_eq!(
            classify(&parallel).unwrap(),
            EulerClassification::PathEulerian { begin: v(0), end: v(1) }
        );

        assert_eq!(classify(&digraph(1, &[])), Err(Error::TrivialGraph));
    }

    #[test]
    fn classify_ignores_padding_vertices() {
        let padded = digraph(5, &[(1, 3), (3, 1)]);
        assert_eq!(classify(&padded).unwrap(), EulerClassification::CircuitEulerian);
    }

    #[test]
    fn circuit_of_a_directed_cycle_is_the_cycle() {
        let cycle = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let t = find_euler_circuit(&cycle).unwrap();
        assert_eq!(t.edge_ids(), &[EdgeId(0), EdgeId(1), EdgeId(2)]);
    }

    #[test]
    fn circuit_of_doubled_star_takes_the_lex_least_branch() {
        // Doubled 3-asterisk: exactly two circuits start at 0; the smallest
        // edge-id tie-break picks 0 -> 1 -> 0 -> 2 -> 0.
        let d = digraph(3, &[(0, 1), (1, 0), (0, 2), (2, 0)]);
        let t = find_euler_circuit(&d).unwrap();
        let seq: Vec<usize> = t.vertex_seq().iter().map(|x| x.index()).collect();
        assert_eq!(seq, vec![0, 1, 0, 2, 0]);
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn circuit_of_the_loop_graph() {
        let d = digraph(1, &[(0, 0)]);
        let t = find_euler_circuit(&d).unwrap();
        assert_eq!(t.edge_ids(), &[EdgeId(0)]);
    }

    #[test]
    fn circuit_requires_the_circuit_class() {
        let arc = digraph(2, &[(0, 1)]);
        match find_euler_circuit(&arc) {
            Err(Error::NotCircuitEulerian(EulerClassification::PathEulerian { .. })) => {}
            other => panic!("unexpected result {other:?}"),
        }
    }

    #[test]
    fn circuit_splices_detours_at_the_first_revisit() {
        // The first greedy walk closes at 0 early; vertex 1 still holds the
        // detour through 3 and gets it spliced in place.
        let d = digraph(4, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 3), (3, 1)]);
        let t = find_euler_circuit(&d).unwrap();
        let seq: Vec<usize> = t.vertex_seq().iter().map(|x| x.index()).collect();
        assert_eq!(seq, vec![0, 1, 3, 1, 0, 2, 0]);
    }

    #[test]
    fn path_extraction_matches_brute_force() {
        let d = digraph(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]);
        let t = find_euler_path(&d).unwrap();
        assert_eq!(t.len(), 4);
        assert!(t.is_eulerian_path_of(&d));
        assert_eq!((t.start(), t.end()), (v(0), v(2)));
        let brute = oracle::open_trail_endpoints(&d);
        assert!(brute.contains(&(t.start(), t.end())));
    }

    #[test]
    fn path_of_the_doubled_parallel_pair() {
        let d = digraph(2, &[(0, 1), (0, 1), (1, 0)]);
        let t = find_euler_path(&d).unwrap();
        let seq: Vec<usize> = t.vertex_seq().iter().map(|x| x.index()).collect();
        assert_eq!(seq, vec![0, 1, 0, 1]);
    }

    #[test]
    fn path_extraction_rejects_circuit_eulerian_input() {
        let cycle = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        match find_euler_path(&cycle) {
            Err(Error::NotPathEulerian(EulerClassification::CircuitEulerian)) => {}
            other => panic!("unexpected result {other:?}"),
        }
    }

    #[test]
    fn split_of_a_loop_is_a_two_cycle() {
        let d = digraph(1, &[(0, 0)]);
        let (split, mapping) = split_transform(&d);
        assert_eq!(split.vertex_count(), 2);
        let pairs: Vec<(usize, usize)> = split
            .edges()
            .map(|(_, t, h)| (t.index(), h.index()))
            .collect();
        assert_eq!(pairs, vec![(0, 1), (1, 0)]);
        assert_eq!(mapping.midpoint(EdgeId(0)), v(1));
        assert_eq!(mapping.halves(EdgeId(0)), (EdgeId(0), EdgeId(1)));
        assert_eq!(mapping.original_of_midpoint(v(1)), Some(EdgeId(0)));
        assert_eq!(mapping.original_of_midpoint(v(0)), None);
    }

    /// The mapping's halves carry the original edge's endpoints through its
    /// midpoint, for every edge.
    #[test]
    fn split_mapping_indexes_the_halves() {
        let d = digraph(3, &[(0, 1), (0, 1), (1, 2), (2, 0), (1, 1)]);
        let (split, mapping) = split_transform(&d);
        for (e, tail, head) in d.edges() {
            let (first, second) = mapping.halves(e);
            let mid = mapping.midpoint(e);
            assert_eq!(split.endpoints(first), (tail, mid));
            assert_eq!(split.endpoints(second), (mid, head));
            assert_eq!(mapping.original_of_midpoint(mid), Some(e));
        }
    }

    #[test]
    fn split_of_a_cycle_is_a_longer_cycle() {
        let d = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let (split, _) = split_transform(&d);
        assert_eq!(split.vertex_count(), 6);
        assert_eq!(split.edge_count(), 6);
        let profile = split.degree_profile();
        for u in split.vertices() {
            assert_eq!(profile.tau(u), 1);
            assert_eq!(profile.eta(u), 1);
        }
        assert!(connectivity::is_strongly_connected(&split));
    }

    #[test]
    fn split_of_parallel_edges_uses_distinct_midpoints() {
        let d = digraph(2, &[(0, 1), (0, 1)]);
        let (split, _) = split_transform(&d);
        assert_eq!(split.vertex_count(), 4);
        let pairs: Vec<(usize, usize)> = split
            .edges()
            .map(|(_, t, h)| (t.index(), h.index()))
            .collect();
        assert_eq!(pairs, vec![(0, 2), (2, 1), (0, 3), (3, 1)]);
    }

    #[test]
    fn contract_inverts_split_on_the_loop() {
        let d = digraph(1, &[(0, 0)]);
        let (split, mapping) = split_transform(&d);
        let t = find_euler_circuit(&split).unwrap();
        let back = contract_split_trail(&d, &t, &mapping).unwrap();
        assert_eq!(back.edge_ids(), &[EdgeId(0)]);
    }

    #[test]
    fn contract_inverts_split_on_the_cycle() {
        let d = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let (split, mapping) = split_transform(&d);
        let t = find_euler_circuit(&split).unwrap();
        let back = contract_split_trail(&d, &t, &mapping).unwrap();
        assert!(back.is_eulerian_circuit_of(&d));
    }

    #[test]
    fn contract_accepts_midpoint_rotations() {
        let d = digraph(2, &[(0, 1), (1, 0)]);
        let (split, mapping) = split_transform(&d);
        let rotated = Trail::new(&split, vec![EdgeId(1), EdgeId(2), EdgeId(3), EdgeId(0)]).unwrap();
        let back = contract_split_trail(&d, &rotated, &mapping).unwrap();
        assert!(back.is_eulerian_circuit_of(&d));
    }

    #[test]
    fn contract_rejects_partial_trails() {
        let d = digraph(2, &[(0, 1), (1, 0)]);
        let (split, mapping) = split_transform(&d);
        let partial = Trail::new(&split, vec![EdgeId(0), EdgeId(1)]).unwrap();
        assert!(matches!(
            contract_split_trail(&d, &partial, &mapping),
            Err(Error::MalformedTrail(_))
        ));
    }

    #[test]
    fn add_dipath_examples() {
        let cycle = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let augmented = add_dipath(&cycle, &[v(0), v(1)]).unwrap();
        assert_eq!(
            classify(&augmented).unwrap(),
            EulerClassification::PathEulerian { begin: v(0), end: v(1) }
        );

        let via_two = add_dipath(&cycle, &[v(0), v(2), v(1)]).unwrap();
        assert_eq!(
            classify(&via_two).unwrap(),
            EulerClassification::PathEulerian { begin: v(0), end: v(1) }
        );

        let lollipop = digraph(1, &[(0, 0)]);
        assert!(matches!(
            add_dipath(&lollipop, &[v(0), v(0)]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn add_return_path_examples() {
        let open = digraph(2, &[(0, 1), (0, 1), (1, 0)]);
        let closed = add_return_path(&open, &[v(1), v(0)]).unwrap();
        assert_eq!(classify(&closed).unwrap(), EulerClassification::CircuitEulerian);

        let chord = digraph(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]);
        let closed = add_return_path(&chord, &[v(2), v(1), v(0)]).unwrap();
        assert_eq!(classify(&closed).unwrap(), EulerClassification::CircuitEulerian);

        let cycle = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(
            add_return_path(&cycle, &[v(0), v(1)]),
            Err(Error::NotPathEulerian(_))
        ));
    }

    #[test]
    fn add_return_path_checks_endpoints() {
        let open = digraph(2, &[(0, 1), (0, 1), (1, 0)]);
        assert!(matches!(
            add_return_path(&open, &[v(0), v(1)]),
            Err(Error::InvalidArgument(_))
        ));
    }
}
