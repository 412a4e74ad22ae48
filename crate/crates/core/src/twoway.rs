//! The two-way doubling construction, multiplicity expansion, and the named
//! graph families used throughout the counting experiments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity;
use crate::error::Error;
use crate::graph::{MultiGraph, Multidigraph, MultiplicityMap};

/// Replaces every undirected edge {x, y} with the two diedges x -> y and
/// y -> x, in that order per edge. A loop doubles into two distinct loops.
/// The result is balanced and has a symmetric count matrix.
pub fn double(g: &MultiGraph) -> Multidigraph {
    let mut pairs = Vec::with_capacity(2 * g.edge_count());
    for (x, y) in g.edges() {
        pairs.push((x.index(), y.index()));
        pairs.push((y.index(), x.index()));
    }
    Multidigraph::from_edge_list(g.vertex_count(), &pairs).expect("doubled endpoints in range")
}

/// Replaces each edge of a simple graph by `mu` parallel copies, emitted
/// consecutively in the original edge order.
pub fn expand_multiplicity(g: &MultiGraph, mu: &MultiplicityMap) -> Result<MultiGraph, Error> {
    if !g.is_simple() {
        return Err(Error::InvalidArgument(
            "multiplicity expansion requires a simple graph".into(),
        ));
    }
    let mut pairs = Vec::new();
    for (x, y) in g.edges() {
        let k = mu.get(x, y).ok_or_else(|| {
            Error::InvalidArgument(format!("no multiplicity given for edge {{{x}, {y}}}"))
        })?;
        if k == 0 {
            return Err(Error::InvalidArgument(format!(
                "multiplicity of edge {{{x}, {y}}} must be positive"
            )));
        }
        for _ in 0..k {
            pairs.push((x.index(), y.index()));
        }
    }
    MultiGraph::from_edge_list(g.vertex_count(), &pairs)
}

/// The generated families. `Post` is the path 0-1-...-(n-1), `Asterisk` the
/// star centered at 0, `Circuit` the n-cycle, `Complete` all pairs, `Tree` a
/// seeded uniform labeled tree, and `Random` a seeded connected multigraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Post,
    Asterisk,
    Circuit,
    Complete,
    Tree,
    Random,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::Post => "post",
            Family::Asterisk => "asterisk",
            Family::Circuit => "circuit",
            Family::Complete => "complete",
            Family::Tree => "tree",
            Family::Random => "random",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "post" => Ok(Family::Post),
            "asterisk" => Ok(Family::Asterisk),
            "circuit" => Ok(Family::Circuit),
            "complete" => Ok(Family::Complete),
            "tree" => Ok(Family::Tree),
            "random" => Ok(Family::Random),
            other => Err(format!(
                "unknown family '{other}' (expected post, asterisk, circuit, complete, tree, or random)"
            )),
        }
    }
}

/// Optional edge multiplicities attached to a family: the same value on
/// every edge, or an explicit per-edge map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Multiplicity {
    Uniform(u32),
    PerEdge(MultiplicityMap),
}

impl Multiplicity {
    pub fn is_unit(&self) -> bool {
        match self {
            Multiplicity::Uniform(k) => *k == 1,
            Multiplicity::PerEdge(map) => map.is_all_ones(),
        }
    }
}

/// A reproducible description of a generated graph; also the JSON manifest
/// schema used by the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_edges: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Multiplicity>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            seed: None,
            max_edges: None,
            multiplicity: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_max_edges(mut self, max_edges: usize) -> Self {
        self.max_edges = Some(max_edges);
        self
    }

    pub fn with_multiplicity(mut self, multiplicity: Multiplicity) -> Self {
        self.multiplicity = Some(multiplicity);
        self
    }
}

/// Generates the base family graph and applies any multiplicity expansion.
/// Deterministic in (spec, seed).
pub fn generate(spec: &FamilySpec) -> Result<MultiGraph, Error> {
    let n = spec.n;
    let base = match spec.family {
        Family::Post => {
            require_min(spec.family, n, 2)?;
            path_edges(n)
        }
        Family::Asterisk => {
            require_min(spec.family, n, 2)?;
            MultiGraph::from_edge_list(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>())?
        }
        Family::Circuit => {
            require_min(spec.family, n, 3)?;
            let mut pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            pairs.push((n - 1, 0));
            MultiGraph::from_edge_list(n, &pairs)?
        }
        Family::Complete => {
            require_min(spec.family, n, 2)?;
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    pairs.push((i, j));
                }
            }
            MultiGraph::from_edge_list(n, &pairs)?
        }
        Family::Tree => {
            require_min(spec.family, n, 1)?;
            let seed = require_seed(spec)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_labeled_tree(n, &mut rng)?
        }
        Family::Random => {
            require_min(spec.family, n, 1)?;
            let seed = require_seed(spec)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let bound = spec.max_edges.unwrap_or(2 * n);
            random_connected_multigraph(n, bound, &mut rng)?
        }
    };
    match &spec.multiplicity {
        None => Ok(base),
        Some(Multiplicity::Uniform(k)) => {
            expand_multiplicity(&base, &MultiplicityMap::uniform(&base, *k))
        }
        Some(Multiplicity::PerEdge(map)) => expand_multiplicity(&base, map),
    }
}

fn require_min(family: Family, n: usize, min: usize) -> Result<(), Error> {
    if n < min {
        return Err(Error::InvalidArgument(format!(
            "family '{family}' needs at least {min} vertices, got {n}"
        )));
    }
    Ok(())
}

fn require_seed(spec: &FamilySpec) -> Result<u64, Error> {
    spec.seed.ok_or_else(|| {
        Error::InvalidArgument(format!("family '{}' requires a seed", spec.family))
    })
}

fn path_edges(n: usize) -> MultiGraph {
    let pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    MultiGraph::from_edge_list(n, &pairs).expect("path endpoints in range")
}

/// Uniform random labeled tree via a sampled word in {0..n-1}^(n-2) decoded
/// through the standard sequence-to-tree bijection.
fn random_labeled_tree(n: usize, rng: &mut ChaCha8Rng) -> Result<MultiGraph, Error> {
    if n == 1 {
        return MultiGraph::from_edge_list(1, &[]);
    }
    let word: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    MultiGraph::from_edge_list(n, &tree_from_word(n, &word))
}

/// Pointer-based decode: always attaches the smallest unconsumed leaf to the
/// next word entry, then joins the final leaf to vertex n-1.
fn tree_from_word(n: usize, word: &[usize]) -> Vec<(usize, usize)> {
    debug_assert!(n >= 2 && word.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &v in word {
        degree[v] += 1;
    }
    let mut pairs = Vec::with_capacity(n - 1);
    let mut ptr = 0usize;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in word {
        pairs.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    pairs.push((leaf, n - 1));
    pairs
}

/// Seeded connected multigraph: a random spanning tree plus random extra
/// edges (parallels and loops allowed) up to `max_edges` total.
pub(crate) fn random_connected_multigraph(
    n: usize,
    max_edges: usize,
    rng: &mut ChaCha8Rng,
) -> Result<MultiGraph, Error> {
    if max_edges + 1 < n {
        return Err(Error::InvalidArgument(format!(
            "a connected multigraph on {n} vertices needs at least {} edges, bound was {max_edges}",
            n - 1
        )));
    }
    let tree = random_labeled_tree(n, rng)?;
    let mut pairs: Vec<(usize, usize)> = tree
        .edges()
        .map(|(x, y)| (x.index(), y.index()))
        .collect();
    let extra = rng.gen_range(0..=max_edges - (n - 1));
    for _ in 0..extra {
        pairs.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    MultiGraph::from_edge_list(n, &pairs)
}

/// True when the graph is the two-way double of a connected multigraph on
/// the same vertex set: the count matrix is symmetric and every pair of
/// vertices is chained through positive entries.
pub fn is_two_way(d: &Multidigraph) -> bool {
    d.count_matrix().is_symmetric() && connectivity::is_weakly_connected(d)
}
