//! Seeded instance generators shared by the integration suites. Each suite
//! uses its own subset.
#![allow(dead_code)]

use euler_core::connectivity;
use euler_core::eulerian::{self, EulerClassification};
use euler_core::Multidigraph;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A balanced multidigraph built as a union of random closed walks. Every
/// closed walk adds equal out- and in-degree at each vertex, so the result
/// is balanced by construction; connectivity is not guaranteed.
pub fn random_balanced(seed: u64, max_n: usize, max_m: usize) -> Multidigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let walks = rng.gen_range(1..=3);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for _ in 0..walks {
        let start = rng.gen_range(0..n);
        let mut cur = start;
        loop {
            if pairs.len() >= max_m {
                break;
            }
            let next = rng.gen_range(0..n);
            pairs.push((cur, next));
            cur = next;
            if cur == start && rng.gen_bool(0.5) {
                break;
            }
        }
        if cur != start {
            pairs.push((cur, start));
        }
    }
    Multidigraph::from_edge_list(n, &pairs).expect("walk endpoints in range")
}

/// A balanced, weakly connected multidigraph with 1..=max_m edges,
/// deterministic in `seed`.
pub fn random_balanced_connected(seed: u64, max_n: usize, max_m: usize) -> Multidigraph {
    for attempt in 0..10_000u64 {
        let d = random_balanced(seed.wrapping_mul(10_007).wrapping_add(attempt), max_n, max_m);
        if d.edge_count() >= 1
            && d.edge_count() <= max_m
            && connectivity::is_weakly_connected(&d)
        {
            return d;
        }
    }
    panic!("no balanced connected instance found for seed {seed}");
}

/// A circuit-Eulerian multidigraph with 1..=max_m edges, deterministic in
/// `seed`. May leave some vertices isolated.
pub fn random_circuit_eulerian(seed: u64, max_n: usize, max_m: usize) -> Multidigraph {
    for attempt in 0..10_000u64 {
        let d = random_balanced(seed.wrapping_mul(31_337).wrapping_add(attempt), max_n, max_m);
        if d.edge_count() >= 1
            && d.edge_count() <= max_m
            && eulerian::classify(&d) == Ok(EulerClassification::CircuitEulerian)
        {
            return d;
        }
    }
    panic!("no circuit-Eulerian instance found for seed {seed}");
}

/// Like `random_circuit_eulerian`, but every vertex carries an edge and at
/// least `min_support` vertices exist.
pub fn random_circuit_eulerian_full_support(
    seed: u64,
    max_n: usize,
    max_m: usize,
    min_support: usize,
) -> Multidigraph {
    for attempt in 0..10_000u64 {
        let d = random_balanced(seed.wrapping_mul(65_537).wrapping_add(attempt), max_n, max_m);
        if d.edge_count() >= 1
            && d.edge_count() <= max_m
            && d.support().len() == d.vertex_count()
            && d.vertex_count() >= min_support
            && eulerian::classify(&d) == Ok(EulerClassification::CircuitEulerian)
        {
            return d;
        }
    }
    panic!("no full-support circuit-Eulerian instance found for seed {seed}");
}
