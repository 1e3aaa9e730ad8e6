//! Exhaustive catalog of small connected graphs, one per isomorphism class.

use std::collections::HashMap;

use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;

use crate::graph::{Graph, Vertex};

#[derive(Clone)]
struct Entry {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    pg: UnGraph<(), ()>,
}

fn entry(n: usize, edges: Vec<(Vertex, Vertex)>) -> Entry {
    let pg = UnGraph::from_edges(edges.iter().map(|&(a, b)| (a as u32, b as u32)));
    let mut pg = pg;
    while pg.node_count() < n {
        pg.add_node(());
    }
    Entry { n, edges, pg }
}

fn invariant(e: &Entry) -> (usize, Vec<usize>, Vec<Vec<usize>>) {
    let mut deg = vec![0; e.n];
    for &(a, b) in &e.edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    // neighbor degree multisets sharpen the buckets
    let mut nbr: Vec<Vec<usize>> = vec![Vec::new(); e.n];
    for &(a, b) in &e.edges {
        nbr[a].push(deg[b]);
        nbr[b].push(deg[a]);
    }
    for l in &mut nbr {
        l.sort_unstable();
    }
    let mut profile: Vec<Vec<usize>> = (0..e.n)
        .map(|v| {
            let mut p = vec![deg[v]];
            p.extend(&nbr[v]);
            p
        })
        .collect();
    profile.sort();
    let mut ds = deg.clone();
    ds.sort_unstable();
    (e.edges.len(), ds, profile)
}

/// All connected graphs with exactly `n` vertices up to isomorphism
/// (optionally only those of maximum degree at most three), vertices named
/// `1..=n`.
pub fn connected_graphs(n: usize, subcubic: bool) -> Vec<Graph> {
    layer(n, subcubic)
        .into_iter()
        .map(|e| Graph::numbered(e.n, &e.edges).expect("catalog graphs are simple"))
        .collect()
}

/// [`connected_graphs`] for every vertex count in `1..=n_max`.
pub fn connected_graphs_up_to(n_max: usize, subcubic: bool) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| connected_graphs(n, subcubic))
        .collect()
}

fn layer(n: usize, subcubic: bool) -> Vec<Entry> {
    if n == 0 {
        return Vec::new();
    }
    let mut current = vec![entry(1, Vec::new())];
    for k in 1..n {
        let mut buckets: HashMap<_, Vec<Entry>> = HashMap::new();
        let mut next = Vec::new();
        for base in &current {
            let mut deg = vec![0; k];
            for &(a, b) in &base.edges {
                deg[a] += 1;
                deg[b] += 1;
            }
            for mask in 1u32..(1 << k) {
                let nbrs: Vec<Vertex> = (0..k).filter(|&v| mask & (1 << v) != 0).collect();
                if subcubic && (nbrs.len() > 3 || nbrs.iter().any(|&v| deg[v] >= 3)) {
                    continue;
                }
                let mut edges = base.edges.clone();
                edges.extend(nbrs.iter().map(|&v| (v, k)));
                let cand = entry(k + 1, edges);
                let bucket = buckets.entry(invariant(&cand)).or_default();
                if bucket.iter().all(|o| !is_isomorphic(&o.pg, &cand.pg)) {
                    bucket.push(cand.clone());
                    next.push(cand);
                }
            }
        }
        current = next;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n, false).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
        let sub: Vec<usize> = (1..=6).map(|n| connected_graphs(n, true).len()).collect();
        assert_eq!(sub, [1, 1, 2, 6, 10, 29]);
    }
}
