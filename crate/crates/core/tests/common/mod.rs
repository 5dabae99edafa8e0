#![allow(dead_code)]

use degree_indices::Graph;
use rand::Rng;

/// Random spanning tree on `n` vertices plus up to `extra` random chords.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        edges.insert((parent, v));
    }
    if n > 1 {
        for _ in 0..extra {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    Graph::from_edges(n, edges).expect("tree plus chords is a valid graph")
}

/// Builds the same graph from explicit parent choices and chord pairs.
pub fn graph_from_parts(parents: &[usize], chords: &[(usize, usize)]) -> Graph {
    let n = parents.len() + 1;
    let mut edges = std::collections::BTreeSet::new();
    for (i, &p) in parents.iter().enumerate() {
        let v = i + 1;
        edges.insert((p % v, v));
    }
    for &(a, b) in chords {
        let (a, b) = (a % n, b % n);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(n, edges).expect("valid graph")
}
