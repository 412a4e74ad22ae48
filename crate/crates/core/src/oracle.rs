//! Brute-force oracles: exhaustive backtracking over edge choices, kept
//! deliberately independent of the classification, extraction, and
//! determinant-counting code paths so it can adjudicate them.

use std::collections::BTreeSet;

use crate::connectivity;
use crate::counting;
use crate::eulerian::{self, EulerClassification};
use crate::graph::{Multidigraph, VertexId};

/// True when some closed trail uses every edge exactly once. Any such trail
/// can be rotated to start at the tail of edge 0, so one start suffices.
pub fn has_eulerian_circuit(d: &Multidigraph) -> bool {
    let m = d.edge_count();
    if m == 0 {
        return false;
    }
    let start = d.tail(crate::graph::EdgeId(0));
    let mut used = vec![false; m];
    search_closed(d, start, start, m, &mut used)
}

fn search_closed(
    d: &Multidigraph,
    cur: VertexId,
    start: VertexId,
    remaining: usize,
    used: &mut [bool],
) -> bool {
    if remaining == 0 {
        return cur == start;
    }
    for &e in d.out_edges(cur) {
        if !used[e.index()] {
            used[e.index()] = true;
            if search_closed(d, d.head(e), start, remaining - 1, used) {
                used[e.index()] = false;
                return true;
            }
            used[e.index()] = false;
        }
    }
    false
}

/// Endpoint pairs (start, end) of every open trail that uses all edges
/// exactly once. Empty when no such trail exists.
pub fn open_trail_endpoints(d: &Multidigraph) -> BTreeSet<(VertexId, VertexId)> {
    let m = d.edge_count();
    let mut found = BTreeSet::new();
    if m == 0 {
        return found;
    }
    let mut used = vec![false; m];
    for start in d.vertices() {
        if d.out_edges(start).is_empty() {
            continue;
        }
        collect_open(d, start, start, m, &mut used, &mut found);
    }
    found
}

fn collect_open(
    d: &Multidigraph,
    cur: VertexId,
    start: VertexId,
    remaining: usize,
    used: &mut [bool],
    found: &mut BTreeSet<(VertexId, VertexId)>,
) {
    if remaining == 0 {
        if cur != start {
            found.insert((start, cur));
        }
        return;
    }
    for &e in d.out_edges(cur) {
        if !used[e.index()] {
            used[e.index()] = true;
            collect_open(d, d.head(e), start, remaining - 1, used, found);
            used[e.index()] = false;
        }
    }
}

/// All multidigraphs on `n` vertices with between `min_m` and `max_m` edges,
/// one per multiplicity matrix, edges emitted in row-major order.
pub fn count_matrix_universe(n: usize, min_m: usize, max_m: usize) -> Vec<Multidigraph> {
    let cells = n * n;
    let mut graphs = Vec::new();
    let mut matrix = vec![0usize; cells];
    fill_cells(n, 0, max_m, &mut matrix, min_m, &mut graphs);
    graphs
}

fn fill_cells(
    n: usize,
    cell: usize,
    budget: usize,
    matrix: &mut Vec<usize>,
    min_m: usize,
    graphs: &mut Vec<Multidigraph>,
) {
    if cell == n * n {
        let total: usize = matrix.iter().sum();
        if total >= min_m {
            let counts = crate::graph::CountMatrix::from_rows(n, matrix.clone())
                .expect("square matrix");
            graphs.push(counts.to_multidigraph());
        }
        return;
    }
    for value in 0..=budget {
        matrix[cell] = value;
        fill_cells(n, cell + 1, budget - value, matrix, min_m, graphs);
    }
    matrix[cell] = 0;
}

/// One named self-check over the exhaustive small universe.
#[derive(Debug, Clone)]
pub struct SelftestCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs the exhaustive small-universe checks (all multidigraphs with
/// n <= 3 and 1 <= m <= 5) that pit the analytic code paths against
/// brute-force search.
pub fn run_selftest() -> Vec<SelftestCheck> {
    let mut graphs = Vec::new();
    for n in 1..=3 {
        graphs.extend(count_matrix_universe(n, 1, 5));
    }
    let total = graphs.len();

    let mut circuit_mismatches = 0usize;
    let mut path_mismatches = 0usize;
    let mut claim_failures = 0usize;
    let mut zero_law_failures = 0usize;
    let mut balanced_connected = 0usize;

    for d in &graphs {
        let cls = eulerian::classify(d).expect("universe graphs have edges");
        let brute_circuit = has_eulerian_circuit(d);
        if (cls == EulerClassification::CircuitEulerian) != brute_circuit {
            circuit_mismatches += 1;
        }

        let open = open_trail_endpoints(d);
        match cls {
            EulerClassification::PathEulerian { begin, end } => {
                let mut expected = BTreeSet::new();
                expected.insert((begin, end));
                if open != expected {
                    path_mismatches += 1;
                }
            }
            _ => {
                if !open.is_empty() {
                    path_mismatches += 1;
                }
            }
        }

        if d.degree_profile().is_balanced() && connectivity::is_weakly_connected(d) {
            balanced_connected += 1;
            if connectivity::scc(d).count() != 1 {
                claim_failures += 1;
            }
        }

        let enumerated = counting::enumerate_circuits(
            d,
            counting::Convention::CyclicRotation,
            counting::DEFAULT_ENUMERATION_LIMIT,
        )
        .expect("universe graphs are within the enumeration limit");
        let zero = enumerated == num_bigint::BigUint::default();
        if zero != (cls != EulerClassification::CircuitEulerian) {
            zero_law_failures += 1;
        }
    }

    vec![
        SelftestCheck {
            name: "classification matches brute-force closed-trail search",
            passed: circuit_mismatches == 0,
            detail: format!("{total} graphs, {circuit_mismatches} mismatches"),
        },
        SelftestCheck {
            name: "path verdicts match brute-force open-trail endpoints",
            passed: path_mismatches == 0,
            detail: format!("{total} graphs, {path_mismatches} mismatches"),
        },
        SelftestCheck {
            name: "balanced weakly-connected graphs form a single SCC",
            passed: claim_failures == 0,
            detail: format!("{balanced_connected} balanced connected graphs, {claim_failures} counterexamples"),
        },
        SelftestCheck {
            name: "cyclic enumeration is zero exactly off the circuit-Eulerian class",
            passed: zero_law_failures == 0,
            detail: format!("{total} graphs, {zero_law_failures} violations"),
        },
    ]
}
