//! Randomized path partitions used as a starting upper bound.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Path, Vertex};

/// Lower bound on the path number of a connected graph with edges: half
/// the odd vertices, and half the largest degree.
pub(crate) fn lower_bound(g: &Graph) -> usize {
    g.odd_count().div_ceil(2).max(g.max_degree().div_ceil(2))
}

/// Smallest partition found over `rounds` seeded greedy runs. Stops early
/// once `target` paths are reached.
pub(crate) fn partition(g: &Graph, rounds: u64, target: usize) -> Vec<Path> {
    let mut best: Option<Vec<Path>> = None;
    for seed in 0..rounds {
        let p = one_round(g, seed);
        if best.as_ref().is_none_or(|b| p.len() < b.len()) {
            let done = p.len() <= target;
            best = Some(p);
            if done {
                break;
            }
        }
    }
    best.unwrap_or_default()
}

struct Rest {
    adj: Vec<Vec<Vertex>>,
}

impl Rest {
    fn remove(&mut self, a: Vertex, b: Vertex) {
        self.adj[a].retain(|&x| x != b);
        self.adj[b].retain(|&x| x != a);
    }
}

fn one_round(g: &Graph, seed: u64) -> Vec<Path> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rest = Rest {
        adj: g.vertices().map(|v| g.neighbors(v).to_vec()).collect(),
    };
    let mut paths: Vec<Vec<Vertex>> = Vec::new();
    loop {
        let odd: Vec<Vertex> = g
            .vertices()
            .filter(|&v| rest.adj[v].len() % 2 == 1)
            .collect();
        let start = match odd.choose(&mut rng) {
            Some(&v) => v,
            None => match g
                .vertices()
                .filter(|&v| !rest.adj[v].is_empty())
                .collect::<Vec<_>>()
                .choose(&mut rng)
            {
                Some(&v) => v,
                None => break,
            },
        };
        let mut walk = vec![start];
        for side in 0..2 {
            loop {
                let end = *walk.last().expect("nonempty walk");
                if walk.len() > 1 && rest.adj[end].len() % 2 == 1 && rng.gen_bool(0.5) {
                    break;
                }
                let next: Vec<Vertex> = rest.adj[end]
                    .iter()
                    .copied()
                    .filter(|w| !walk.contains(w))
                    .collect();
                let Some(&w) = next.choose(&mut rng) else {
                    break;
                };
                rest.remove(end, w);
                walk.push(w);
            }
            if side == 0 {
                walk.reverse();
            }
        }
        paths.push(walk);
    }
    merge(&mut paths);
    paths.into_iter().map(Path::new).collect()
}

/// Joins paths that meet only at a shared end until none can be joined.
fn merge(paths: &mut Vec<Vec<Vertex>>) {
    'again: loop {
        for i in 0..paths.len() {
            for j in i + 1..paths.len() {
                if let Some(joined) = join(&paths[i], &paths[j]) {
                    paths[i] = joined;
                    paths.swap_remove(j);
                    continue 'again;
                }
            }
        }
        return;
    }
}

fn join(a: &[Vertex], b: &[Vertex]) -> Option<Vec<Vertex>> {
    for a_rev in [false, true] {
        for b_rev in [false, true] {
            let mut x = a.to_vec();
            let mut y = b.to_vec();
            if a_rev {
                x.reverse();
            }
            if b_rev {
                y.reverse();
            }
            if x.last() == y.first() && y[1..].iter().all(|v| !x.contains(v)) {
                x.extend_from_slice(&y[1..]);
                return Some(x);
            }
        }
    }
    None
}
