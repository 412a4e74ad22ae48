//! Exact Eulerian-circuit counting.
//!
//! Two independent routes: exhaustive backtracking over edge choices, and
//! the determinant route (arborescences via fraction-free elimination times
//! the product of out-degree factorials). All arithmetic is exact; counts
//! never touch floating point.
//!
//! Because "number of distinct Eulerian circuits" depends on when two
//! circuits count as the same, every count carries an explicit
//! [`Convention`]. The three conventions are related by exact scaling:
//! fixed-start counts are the cyclic count times the start's out-degree, and
//! the all-rotations count is the cyclic count times the edge count.

use std::fmt;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Error;
use crate::eulerian::{self, EulerClassification};
use crate::graph::{EdgeId, MultiGraph, Multidigraph, VertexId};
use crate::twoway::{self, Family, FamilySpec};

/// Exact nonnegative circuit count.
pub type BigCount = BigUint;

/// Default guard for the exhaustive enumerator.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 14;

/// When two Eulerian circuits count as distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Convention {
    /// Circuits as cyclic edge sequences; rotations are identified.
    CyclicRotation,
    /// Closed trails that begin and end at the given vertex.
    FixedStartVertex(VertexId),
    /// Linear edge sequences; every rotation counts separately.
    AllRotationsDistinct,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::CyclicRotation => f.write_str("cyclic"),
            Convention::FixedStartVertex(v) => write!(f, "fixed-start:{v}"),
            Convention::AllRotationsDistinct => f.write_str("all-rotations"),
        }
    }
}

impl std::str::FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match ConventionPolicy::from_str(s)? {
            ConventionPolicy::Cyclic => Ok(Convention::CyclicRotation),
            ConventionPolicy::FixedStart(v) => Ok(Convention::FixedStartVertex(v)),
            ConventionPolicy::AllRotations => Ok(Convention::AllRotationsDistinct),
            ConventionPolicy::FixedStartMaxOutDegree => Err(
                "fixed-start:max is a policy, not a concrete convention; resolve it against a graph"
                    .into(),
            ),
        }
    }
}

impl From<Convention> for String {
    fn from(c: Convention) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for Convention {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

/// A convention that may still depend on the graph: `fixed-start:max` picks
/// the vertex of maximum out-degree, smallest id on ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConventionPolicy {
    Cyclic,
    FixedStart(VertexId),
    FixedStartMaxOutDegree,
    AllRotations,
}

impl ConventionPolicy {
    pub fn resolve(&self, d: &Multidigraph) -> Convention {
        match *self {
            ConventionPolicy::Cyclic => Convention::CyclicRotation,
            ConventionPolicy::FixedStart(v) => Convention::FixedStartVertex(v),
            ConventionPolicy::AllRotations => Convention::AllRotationsDistinct,
            ConventionPolicy::FixedStartMaxOutDegree => {
                let profile = d.degree_profile();
                let best = d
                    .vertices()
                    .max_by_key(|&v| (profile.tau(v), std::cmp::Reverse(v.index())))
                    .expect("graphs have at least one vertex");
                Convention::FixedStartVertex(best)
            }
        }
    }
}

impl fmt::Display for ConventionPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConventionPolicy::Cyclic => f.write_str("cyclic"),
            ConventionPolicy::FixedStart(v) => write!(f, "fixed-start:{v}"),
            ConventionPolicy::FixedStartMaxOutDegree => f.write_str("fixed-start:max"),
            ConventionPolicy::AllRotations => f.write_str("all-rotations"),
        }
    }
}

impl std::str::FromStr for ConventionPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cyclic" => Ok(ConventionPolicy::Cyclic),
            "all-rotations" => Ok(ConventionPolicy::AllRotations),
            "fixed-start:max" => Ok(ConventionPolicy::FixedStartMaxOutDegree),
            other => match other.strip_prefix("fixed-start:") {
                Some(v) => v
                    .parse::<usize>()
                    .map(|i| ConventionPolicy::FixedStart(VertexId(i)))
                    .map_err(|_| format!("bad fixed-start vertex '{v}'")),
                None => Err(format!(
                    "unknown convention '{other}' (expected cyclic, fixed-start:<v>, fixed-start:max, or all-rotations)"
                )),
            },
        }
    }
}

/// Counts Eulerian circuits by exhaustive backtracking over edge choices.
/// Returns zero when the graph has no Eulerian circuit. Guarded by `limit`
/// because the search is exponential in the edge count.
///
/// Cyclic counting pins the first edge to the smallest edge id: every cyclic
/// class contains each edge exactly once, so exactly one rotation per class
/// starts with edge 0.
pub fn enumerate_circuits(
    d: &Multidigraph,
    convention: Convention,
    limit: usize,
) -> Result<BigCount, Error> {
    let m = d.edge_count();
    if m > limit {
        return Err(Error::TooLarge { m, limit });
    }
    let count: u128 = match convention {
        Convention::FixedStartVertex(v) => {
            if v.index() >= d.vertex_count() {
                return Err(Error::InvalidArgument(format!(
                    "start vertex {v} out of range for a graph on {} vertices",
                    d.vertex_count()
                )));
            }
            if m == 0 {
                0
            } else {
                count_from(d, v, None)
            }
        }
        Convention::CyclicRotation => {
            if m == 0 {
                0
            } else {
                count_from(d, d.tail(EdgeId(0)), Some(EdgeId(0)))
            }
        }
        Convention::AllRotationsDistinct => {
            if m == 0 {
                0
            } else {
                count_from(d, d.tail(EdgeId(0)), Some(EdgeId(0))) * m as u128
            }
        }
    };
    Ok(BigCount::from(count))
}

fn count_from(d: &Multidigraph, start: VertexId, forced_first: Option<EdgeId>) -> u128 {
    let m = d.edge_count();
    let mut used = vec![false; m];
    match forced_first {
        Some(e) => {
            used[e.index()] = true;
            backtrack(d, d.head(e), start, m - 1, &mut used)
        }
        None => backtrack(d, start, start, m, &mut used),
    }
}

fn backtrack(
    d: &Multidigraph,
    cur: VertexId,
    start: VertexId,
    remaining: usize,
    used: &mut [bool],
) -> u128 {
    if remaining == 0 {
        return u128::from(cur == start);
    }
    let mut total = 0u128;
    for &e in d.out_edges(cur) {
        if !used[e.index()] {
            used[e.index()] = true;
            total += backtrack(d, d.head(e), start, remaining - 1, used);
            used[e.index()] = false;
        }
    }
    total
}

/// Counts spanning arborescences oriented toward `root`: the determinant of
/// the out-degree Laplacian with the root row and column deleted, evaluated
/// by fraction-free elimination over exact integers. Loops never occur in an
/// arborescence and cancel out of the Laplacian. Returns zero when no
/// arborescence exists.
pub fn arborescence_count(d: &Multidigraph, root: VertexId) -> Result<BigCount, Error> {
    let n = d.vertex_count();
    if root.index() >= n {
        return Err(Error::InvalidArgument(format!(
            "root {root} out of range for a graph on {n} vertices"
        )));
    }
    if n == 1 {
        return Ok(BigCount::one());
    }
    let kappa = d.count_matrix();
    let keep: Vec<usize> = (0..n).filter(|&v| v != root.index()).collect();
    let size = n - 1;
    let mut matrix = vec![vec![BigInt::zero(); size]; size];
    for (bi, &i) in keep.iter().enumerate() {
        let mut diag = 0isize;
        for j in 0..n {
            if j != i {
                diag += kappa.entry(VertexId(i), VertexId(j)) as isize;
            }
        }
        matrix[bi][bi] = BigInt::from(diag);
        for (bj, &j) in keep.iter().enumerate() {
            if bi != bj {
                matrix[bi][bj] -= BigInt::from(kappa.entry(VertexId(i), VertexId(j)));
            }
        }
    }
    let det = bareiss_determinant(matrix);
    debug_assert!(!det.is_negative(), "Laplacian minors count arborescences");
    let (_, digits) = det.into_parts();
    Ok(digits)
}

/// Bareiss one-step fraction-free elimination with row pivoting; every
/// division is exact.
fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = numerator / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Cyclic-rotation circuit count via the determinant route: arborescences at
/// one root times the product of (out-degree - 1)! over all vertices. The
/// value is independent of the chosen root; vertices without edges are
/// excluded so padded vertex ranges count like their support.
pub fn count_best(d: &Multidigraph) -> Result<BigCount, Error> {
    let cls = eulerian::classify(d)?;
    if cls != EulerClassification::CircuitEulerian {
        return Err(Error::NotCircuitEulerian(cls));
    }
    let sub = restrict_to_support(d);
    let arb = arborescence_count(&sub, VertexId(0))?;
    Ok(arb * degree_factorial_product(&sub))
}

/// Product of (tau(v) - 1)! over all vertices, with small factorials built
/// once per call.
fn degree_factorial_product(d: &Multidigraph) -> BigUint {
    let profile = d.degree_profile();
    let max_tau = d.vertices().map(|v| profile.tau(v)).max().unwrap_or(0);
    let mut factorials = Vec::with_capacity(max_tau + 1);
    factorials.push(BigUint::one());
    for k in 1..=max_tau {
        let next = factorials.last().expect("seeded") * BigUint::from(k);
        factorials.push(next);
    }
    let mut product = BigUint::one();
    for v in d.vertices() {
        let tau = profile.tau(v);
        if tau > 0 {
            product *= &factorials[tau - 1];
        }
    }
    product
}

/// The subgraph induced by edge-carrying vertices, relabeled densely.
fn restrict_to_support(d: &Multidigraph) -> Multidigraph {
    let support = d.support();
    if support.len() == d.vertex_count() {
        return d.clone();
    }
    let mut relabel = vec![usize::MAX; d.vertex_count()];
    for (new, &v) in support.iter().enumerate() {
        relabel[v.index()] = new;
    }
    let pairs: Vec<(usize, usize)> = d
        .edges()
        .map(|(_, t, h)| (relabel[t.index()], relabel[h.index()]))
        .collect();
    Multidigraph::from_edge_list(support.len().max(1), &pairs)
        .expect("support endpoints are relabeled in range")
}

/// Which route produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMethod {
    Enumeration,
    BestTheorem,
}

/// A count under one convention, with the graph it describes. Counts
/// serialize as decimal strings so consumers need no big-integer support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub convention: Convention,
    #[serde(with = "decimal")]
    pub count: BigCount,
    pub method: CountMethod,
    pub graph: String,
    pub elapsed_ms: u64,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Converts a cyclic-rotation count into `convention` using the exact
/// scaling relations.
pub fn scale_from_cyclic(
    cyclic: &BigCount,
    convention: Convention,
    d: &Multidigraph,
) -> BigCount {
    match convention {
        Convention::CyclicRotation => cyclic.clone(),
        Convention::FixedStartVertex(v) => cyclic * BigUint::from(d.degree_profile().tau(v)),
        Convention::AllRotationsDistinct => cyclic * BigUint::from(d.edge_count()),
    }
}

/// Counts Eulerian circuits under `convention`, choosing enumeration for
/// small graphs and the determinant route otherwise. Up to 10 edges both
/// routes run and must agree exactly. Graphs with no Eulerian circuit
/// report zero.
pub fn count(d: &Multidigraph, convention: Convention) -> Result<CountReport, Error> {
    let started = Instant::now();
    if let Convention::FixedStartVertex(v) = convention {
        if v.index() >= d.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "start vertex {v} out of range for a graph on {} vertices",
                d.vertex_count()
            )));
        }
    }
    let m = d.edge_count();
    let classification = match eulerian::classify(d) {
        Ok(c) => Some(c),
        Err(Error::TrivialGraph) => None,
        Err(e) => return Err(e),
    };
    let method = if m <= 12 {
        CountMethod::Enumeration
    } else {
        CountMethod::BestTheorem
    };
    let cyclic = if classification != Some(EulerClassification::CircuitEulerian) {
        BigCount::zero()
    } else {
        match method {
            CountMethod::Enumeration => {
                let enumerated = enumerate_circuits(
                    d,
                    Convention::CyclicRotation,
                    m.max(DEFAULT_ENUMERATION_LIMIT),
                )?;
                if m <= 10 {
                    let best = count_best(d)?;
                    if best != enumerated {
                        return Err(Error::CountMismatch {
                            enumerated: enumerated.to_string(),
                            best: best.to_string(),
                        });
                    }
                }
                enumerated
            }
            CountMethod::BestTheorem => count_best(d)?,
        }
    };
    Ok(CountReport {
        convention,
        count: scale_from_cyclic(&cyclic, convention, d),
        method,
        graph: d.to_text(),
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// The claimed closed-form count for a doubled family with unit
/// multiplicity, under the fixed-start-at-max-out-degree reading. These are
/// recorded claims, not oracles; `None` for other families or non-unit
/// multiplicities, where no closed form is known.
pub fn closed_form(spec: &FamilySpec) -> Option<BigCount> {
    if let Some(mu) = &spec.multiplicity {
        if !mu.is_unit() {
            return None;
        }
    }
    let n = spec.n;
    match spec.family {
        Family::Post if n >= 2 => Some(BigCount::from(2u32)),
        Family::Asterisk if n >= 2 => Some(factorial(n - 1)),
        Family::Circuit if n >= 3 => Some(BigCount::from(2 * n)),
        Family::Complete if n >= 2 => {
            Some(factorial(n - 1) * BigCount::from(n).pow(n as u32 - 2))
        }
        _ => None,
    }
}

fn factorial(k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=k {
        acc *= BigUint::from(i);
    }
    acc
}

/// How `fstar_search` walks the candidate space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every connected multigraph within the total-degree bound. Feasible
    /// only for n <= 3.
    Exhaustive,
    /// A seeded stream of random connected multigraphs within the bound.
    Randomized { seed: u64, budget: usize },
}

/// Result of a maximum-count search over candidate multigraphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FStarReport {
    pub n: usize,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    pub convention: String,
    /// The total-degree budget: candidates satisfy 2m <= t_bound.
    pub t_bound: usize,
    pub search_space: String,
    pub candidates_examined: usize,
    #[serde(with = "decimal")]
    pub best_count: BigCount,
    pub best_graph: String,
}

/// Searches connected undirected multigraphs on `n` vertices whose total
/// degree stays within n * C(n, 2), scoring each candidate by the Eulerian
/// circuit count of its two-way double under `policy`. Candidates are
/// generated deterministically; evaluation may run in parallel, with ties
/// broken by the serialized graph so the result is schedule-independent.
pub fn fstar_search(
    n: usize,
    mode: SearchMode,
    policy: ConventionPolicy,
) -> Result<FStarReport, Error> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the search needs at least two vertices".into(),
        ));
    }
    if let ConventionPolicy::FixedStart(v) = policy {
        if v.index() >= n {
            return Err(Error::InvalidArgument(format!(
                "start vertex {v} out of range for candidates on {n} vertices"
            )));
        }
    }
    let t_bound = n * (n * (n - 1) / 2);
    let max_edges = t_bound / 2;
    let candidates: Vec<MultiGraph> = match mode {
        SearchMode::Exhaustive => {
            if n > 3 {
                return Err(Error::ExhaustiveTooLarge(n));
            }
            connected_multigraphs_up_to(n, max_edges)
        }
        SearchMode::Randomized { seed, budget } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut graphs = Vec::with_capacity(budget);
            for _ in 0..budget {
                graphs.push(twoway::random_connected_multigraph(n, max_edges, &mut rng)?);
            }
            graphs
        }
    };

    let evaluate = |g: &MultiGraph| -> Result<(BigCount, String), Error> {
        let doubled = twoway::double(g);
        let convention = policy.resolve(&doubled);
        let cyclic = count_best(&doubled)?;
        Ok((scale_from_cyclic(&cyclic, convention, &doubled), g.to_text()))
    };

    #[cfg(feature = "parallel")]
    let scored: Result<Vec<(BigCount, String)>, Error> =
        candidates.par_iter().map(evaluate).collect();
    #[cfg(not(feature = "parallel"))]
    let scored: Result<Vec<(BigCount, String)>, Error> = candidates.iter().map(evaluate).collect();
    let scored = scored?;

    let examined = scored.len();
    let (best_count, best_graph) = scored
        .into_iter()
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .expect("the candidate space is nonempty for n >= 2");

    let (mode_name, seed, budget) = match mode {
        SearchMode::Exhaustive => ("exhaustive", None, None),
        SearchMode::Randomized { seed, budget } => ("randomized", Some(seed), Some(budget)),
    };
    Ok(FStarReport {
        n,
        mode: mode_name.to_string(),
        seed,
        budget,
        convention: policy.to_string(),
        t_bound,
        search_space: format!(
            "connected undirected multigraphs on {n} vertices with total degree 2m <= {t_bound}; \
             each scored by the Eulerian-circuit count of its two-way double under the {policy} convention"
        ),
        candidates_examined: examined,
        best_count,
        best_graph,
    })
}

/// All connected multigraphs on `n` vertices with 1..=max_edges edges, one
/// per multiset of unordered endpoint pairs (loops included), in a fixed
/// lexicographic order.
fn connected_multigraphs_up_to(n: usize, max_edges: usize) -> Vec<MultiGraph> {
    let mut slots = Vec::new();
    for x in 0..n {
        for y in x..n {
            slots.push((x, y));
        }
    }
    let mut graphs = Vec::new();
    let mut counts = vec![0usize; slots.len()];
    fill_slots(n, &slots, 0, max_edges, &mut counts, &mut graphs);
    graphs
}

fn fill_slots(
    n: usize,
    slots: &[(usize, usize)],
    slot: usize,
    budget: usize,
    counts: &mut Vec<usize>,
    graphs: &mut Vec<MultiGraph>,
) {
    if slot == slots.len() {
        let mut pairs = Vec::new();
        for (i, &(x, y)) in slots.iter().enumerate() {
            for _ in 0..counts[i] {
                pairs.push((x, y));
            }
        }
        if !pairs.is_empty() {
            let g = MultiGraph::from_edge_list(n, &pairs).expect("slot endpoints in range");
            if g.is_connected() {
                graphs.push(g);
            }
        }
        return;
    }
    for value in 0..=budget {
        counts[slot] = value;
        fill_slots(n, slots, slot + 1, budget - value, counts, graphs);
    }
    counts[slot] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twoway::double;

    fn digraph(n: usize, pairs: &[(usize, usize)]) -> Multidigraph {
        Multidigraph::from_edge_list(n, pairs).unwrap()
    }

    fn doubled(n: usize, pairs: &[(usize, usize)]) -> Multidigraph {
        double(&MultiGraph::from_edge_list(n, pairs).unwrap())
    }

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    fn enumerate(d: &Multidigraph, conv: Convention) -> BigCount {
        enumerate_circuits(d, conv, DEFAULT_ENUMERATION_LIMIT).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let c3 = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(enumerate(&c3, Convention::CyclicRotation), big(1));

        // Doubled 3-asterisk from its center: (3-1)! = 2.
        let star = doubled(3, &[(0, 1), (0, 2)]);
        assert_eq!(
            enumerate(&star, Convention::FixedStartVertex(VertexId(0))),
            big(2)
        );

        // Doubled 3-circuit from any vertex: 2 * 3 = 6.
        let cycle = doubled(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(
            enumerate(&cycle, Convention::FixedStartVertex(VertexId(0))),
            big(6)
        );

        // Doubled 3-post: 2 from the interior vertex, 1 from an endpoint.
        let post = doubled(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            enumerate(&post, Convention::FixedStartVertex(VertexId(1))),
            big(2)
        );
        assert_eq!(
            enumerate(&post, Convention::FixedStartVertex(VertexId(0))),
            big(1)
        );
    }

    #[test]
    fn enumeration_guard_and_zero_cases() {
        let k4 = doubled(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(matches!(
            enumerate_circuits(&k4, Convention::CyclicRotation, 10),
            Err(Error::TooLarge { m: 12, limit: 10 })
        ));
        let arc = digraph(2, &[(0, 1)]);
        assert_eq!(enumerate(&arc, Convention::CyclicRotation), big(0));
        let empty = digraph(2, &[]);
        assert_eq!(enumerate(&empty, Convention::AllRotationsDistinct), big(0));
    }

    #[test]
    fn arborescence_examples() {
        let c3 = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(arborescence_count(&c3, VertexId(0)).unwrap(), big(1));

        // Doubled triangle: 3 spanning trees, each rootable anywhere.
        let k3 = doubled(3, &[(0, 1), (0, 2), (1, 2)]);
        for root in 0..3 {
            assert_eq!(arborescence_count(&k3, VertexId(root)).unwrap(), big(3));
        }

        let post = doubled(3, &[(0, 1), (1, 2)]);
        assert_eq!(arborescence_count(&post, VertexId(1)).unwrap(), big(1));

        // No arborescence into a vertex nothing can reach.
        let arc = digraph(2, &[(0, 1)]);
        assert_eq!(arborescence_count(&arc, VertexId(0)).unwrap(), big(0));
    }

    /// Exhaustive cross-check of the determinant route: try every function
    /// from non-root vertices to an out-edge and keep those whose edges form
    /// a tree reaching the root.
    #[test]
    fn arborescences_match_exhaustive_enumeration() {
        let cases = [
            doubled(3, &[(0, 1), (0, 2), (1, 2)]),
            doubled(4, &[(0, 1), (1, 2), (2, 3)]),
            digraph(3, &[(0, 1), (1, 2), (2, 0), (0, 2), (2, 0)]),
            digraph(2, &[(0, 1), (0, 1), (1, 0), (0, 0)]),
        ];
        for d in &cases {
            for root in d.vertices() {
                let expected = brute_force_arborescences(d, root);
                assert_eq!(
                    arborescence_count(d, root).unwrap(),
                    big(expected),
                    "root {root} in {}",
                    d.to_text()
                );
            }
        }
    }

    fn brute_force_arborescences(d: &Multidigraph, root: VertexId) -> u64 {
        let n = d.vertex_count();
        let others: Vec<VertexId> = d.vertices().filter(|&v| v != root).collect();
        let mut choices: Vec<Vec<EdgeId>> = Vec::new();
        for &v in &others {
            let outs: Vec<EdgeId> = d
                .out_edges(v)
                .iter()
                .copied()
                .filter(|&e| d.head(e) != v)
                .collect();
            if outs.is_empty() {
                return 0;
            }
            choices.push(outs);
        }
        let mut total = 0u64;
        let mut pick = vec![0usize; others.len()];
        loop {
            // Follow parent pointers; every vertex must reach the root.
            let mut ok = true;
            for start in 0..others.len() {
                let mut cur = others[start];
                let mut steps = 0;
                while cur != root {
                    let idx = others.iter().position(|&v| v == cur).expect("non-root");
                    cur = d.head(choices[idx][pick[idx]]);
                    steps += 1;
                    if steps > n {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    break;
                }
            }
            if ok {
                total += 1;
            }
            // Next assignment.
            let mut slot = 0;
            loop {
                if slot == pick.len() {
                    return total;
                }
                pick[slot] += 1;
                if pick[slot] < choices[slot].len() {
                    break;
                }
                pick[slot] = 0;
                slot += 1;
            }
        }
    }

    #[test]
    fn determinant_route_examples() {
        let c4 = digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(count_best(&c4).unwrap(), big(1));

        let cycle = doubled(3, &[(0, 1), (1, 2), (2, 0)]);
        let best = count_best(&cycle).unwrap();
        assert_eq!(best, big(3));
        assert_eq!(best, enumerate(&cycle, Convention::CyclicRotation));

        // Doubled triangle: cyclic 3, fixed-start 3 * 2 = (3-1)! * 3.
        let k3 = doubled(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(count_best(&k3).unwrap(), big(3));
        assert_eq!(
            scale_from_cyclic(&count_best(&k3).unwrap(), Convention::FixedStartVertex(VertexId(0)), &k3),
            big(6)
        );
    }

    #[test]
    fn count_best_ignores_padding_vertices() {
        let padded = digraph(5, &[(1, 3), (3, 1)]);
        assert_eq!(count_best(&padded).unwrap(), big(1));
    }

    #[test]
    fn count_best_requires_the_circuit_class() {
        let arc = digraph(2, &[(0, 1)]);
        assert!(matches!(count_best(&arc), Err(Error::NotCircuitEulerian(_))));
    }

    #[test]
    fn count_report_examples() {
        // Doubled 4-asterisk from its center: (4-1)! = 6.
        let star = doubled(4, &[(0, 1), (0, 2), (0, 3)]);
        let report = count(&star, Convention::FixedStartVertex(VertexId(0))).unwrap();
        assert_eq!(report.count, big(6));
        assert_eq!(report.method, CountMethod::Enumeration);

        // Doubled 5-post from an interior vertex: 2.
        let post = doubled(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let report = count(&post, Convention::FixedStartVertex(VertexId(2))).unwrap();
        assert_eq!(report.count, big(2));

        // Non-Eulerian inputs count zero.
        let arc = digraph(2, &[(0, 1)]);
        assert_eq!(count(&arc, Convention::CyclicRotation).unwrap().count, big(0));
    }

    #[test]
    fn count_switches_to_the_determinant_route_on_larger_graphs() {
        // Doubled 7-circuit: 14 edges, cyclic count 7.
        let pairs: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        let cycle = doubled(7, &pairs);
        let report = count(&cycle, Convention::FixedStartVertex(VertexId(0))).unwrap();
        assert_eq!(report.method, CountMethod::BestTheorem);
        assert_eq!(report.count, big(14));
    }

    #[test]
    fn count_report_serializes_counts_as_strings() {
        let star = doubled(4, &[(0, 1), (0, 2), (0, 3)]);
        let report = count(&star, Convention::FixedStartVertex(VertexId(0))).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"count\":\"6\""));
        assert!(json.contains("\"convention\":\"fixed-start:0\""));
        assert!(json.contains("\"method\":\"enumeration\""));
        let back: CountReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            closed_form(&FamilySpec::new(Family::Post, 7)),
            Some(big(2))
        );
        assert_eq!(
            closed_form(&FamilySpec::new(Family::Asterisk, 5)),
            Some(big(24))
        );
        assert_eq!(
            closed_form(&FamilySpec::new(Family::Circuit, 6)),
            Some(big(12))
        );
        assert_eq!(
            closed_form(&FamilySpec::new(Family::Complete, 4)),
            Some(big(96))
        );
        let with_mu = FamilySpec::new(Family::Post, 4)
            .with_multiplicity(twoway::Multiplicity::Uniform(2));
        assert_eq!(closed_form(&with_mu), None);
        let unit_mu = FamilySpec::new(Family::Post, 4)
            .with_multiplicity(twoway::Multiplicity::Uniform(1));
        assert_eq!(closed_form(&unit_mu), Some(big(2)));
        assert_eq!(closed_form(&FamilySpec::new(Family::Tree, 4).with_seed(1)), None);
    }

    #[test]
    fn convention_strings_round_trip() {
        for s in ["cyclic", "fixed-start:3", "all-rotations"] {
            let c: Convention = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        let policy: ConventionPolicy = "fixed-start:max".parse().unwrap();
        let post = doubled(3, &[(0, 1), (1, 2)]);
        assert_eq!(policy.resolve(&post), Convention::FixedStartVertex(VertexId(1)));
        assert!("fixed-start:max".parse::<Convention>().is_err());
        assert!("sideways".parse::<ConventionPolicy>().is_err());
    }

    #[test]
    fn fstar_two_vertices_has_a_single_candidate() {
        let report = fstar_search(
            2,
            SearchMode::Exhaustive,
            ConventionPolicy::FixedStartMaxOutDegree,
        )
        .unwrap();
        assert_eq!(report.candidates_examined, 1);
        assert_eq!(report.best_count, big(1));
        assert_eq!(report.best_graph, "n 2\ne 0 1\n");
        assert_eq!(report.t_bound, 2);
    }

    #[test]
    fn fstar_exhaustive_guard() {
        assert!(matches!(
            fstar_search(4, SearchMode::Exhaustive, ConventionPolicy::Cyclic),
            Err(Error::ExhaustiveTooLarge(4))
        ));
    }

    #[test]
    fn fstar_randomized_is_reproducible() {
        let mode = SearchMode::Randomized { seed: 11, budget: 40 };
        let a = fstar_search(5, mode, ConventionPolicy::FixedStartMaxOutDegree).unwrap();
        let b = fstar_search(5, mode, ConventionPolicy::FixedStartMaxOutDegree).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.candidates_examined, 40);
        assert_eq!(a.seed, Some(11));
    }
}
