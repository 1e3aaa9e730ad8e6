#![allow(dead_code)]

use std::collections::HashSet;

use pathnum::extend::extend_for_witness;
use pathnum::oracle::gen;
use pathnum::structure::{analyze, classify_component, is_bull_pair, ComponentKind};
use pathnum::{Edge, Error, Graph, Path, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded random decomposition of all edges into paths, grown from random
/// edges with random stops.
pub fn random_decomposition(g: &Graph, seed: u64) -> Vec<Path> {
    random_decomposition_with_stop(g, seed, 0.25)
}

/// As [`random_decomposition`], stopping each extension step with probability `stop`.
pub fn random_decomposition_with_stop(g: &Graph, seed: u64, stop: f64) -> Vec<Path> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used: HashSet<Edge> = HashSet::new();
    let mut order: Vec<Edge> = g.edges().to_vec();
    order.shuffle(&mut rng);
    let mut out = Vec::new();
    for e in order {
        if used.contains(&e) {
            continue;
        }
        used.insert(e);
        let mut walk = vec![e.0, e.1];
        for _ in 0..2 {
            loop {
                if rng.gen_bool(stop) {
                    break;
                }
                let end = *walk.last().unwrap();
                let next: Vec<Vertex> = g
                    .neighbors(end)
                    .iter()
                    .copied()
                    .filter(|&w| !walk.contains(&w) && !used.contains(&Edge::new(end, w)))
                    .collect();
                let Some(&w) = next.choose(&mut rng) else {
                    break;
                };
                used.insert(Edge::new(end, w));
                walk.push(w);
            }
            walk.reverse();
        }
        out.push(Path::new(walk));
    }
    out
}

/// The paths of a random decomposition that meet the high set: a random
/// covering family.
pub fn random_covering_family(g: &Graph, seed: u64) -> Vec<Path> {
    covering_part(g, random_decomposition(g, seed))
}

/// Covering family made of short paths, which tends to leave cycles behind.
pub fn short_covering_family(g: &Graph, seed: u64) -> Vec<Path> {
    covering_part(g, random_decomposition_with_stop(g, seed, 0.7))
}

fn covering_part(g: &Graph, q: Vec<Path>) -> Vec<Path> {
    let high: HashSet<Vertex> = g.high_vertices().into_iter().collect();
    q.into_iter()
        .filter(|p| p.vertices().iter().any(|v| high.contains(v)))
        .collect()
}

/// Seeded instance with a vertex of degree at least four.
pub fn random_high_graph(seed: u64) -> Graph {
    let mut s = seed;
    loop {
        let n = 5 + (s % 5) as usize;
        let extra = 1 + (s / 5 % 3) as usize;
        let g = gen::random_near_subcubic(n, extra, s).unwrap();
        if !g.is_subcubic() {
            return g;
        }
        s = s.wrapping_add(1_000_003);
    }
}

/// Relabels `g` by a seeded permutation of its vertices.
pub fn relabel(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<Vertex> = g.vertices().collect();
    perm.shuffle(&mut rng);
    let edges: Vec<(Vertex, Vertex)> = g.edges().iter().map(|e| (perm[e.0], perm[e.1])).collect();
    Graph::numbered(g.n(), &edges).unwrap()
}

/// Path number by dynamic programming over edge subsets: the cheapest
/// partition of a subset takes one path through its lowest edge and
/// partitions the rest. Independent of the library searches; at most 16
/// edges.
pub fn dp_pn(g: &Graph) -> usize {
    let m = g.m();
    assert!(m <= 16, "dp oracle is limited to 16 edges");
    let idx = |a: Vertex, b: Vertex| g.edge_index(Edge::new(a, b)).unwrap();
    let mut masks: Vec<u32> = Vec::new();
    let mut stack: Vec<(Vec<Vertex>, u32)> = g.vertices().map(|v| (vec![v], 0)).collect();
    while let Some((walk, mask)) = stack.pop() {
        if mask != 0 && walk[0] < *walk.last().unwrap() {
            masks.push(mask);
        }
        let end = *walk.last().unwrap();
        for &w in g.neighbors(end) {
            if !walk.contains(&w) {
                let mut next = walk.clone();
                next.push(w);
                stack.push((next, mask | 1 << idx(end, w)));
            }
        }
    }
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut by_low: Vec<Vec<u32>> = vec![Vec::new(); m];
    for p in masks {
        by_low[p.trailing_zeros() as usize].push(p);
    }
    let mut best = vec![usize::MAX; full as usize + 1];
    best[0] = 0;
    for s in 1..=full {
        let low = s.trailing_zeros() as usize;
        let mut b = usize::MAX;
        for &p in &by_low[low] {
            if p & s == p {
                b = b.min(best[(s & !p) as usize].saturating_add(1));
            }
        }
        best[s as usize] = b;
    }
    best[full as usize]
}

pub fn simple_paths(g: &Graph, s: Vertex, t: Vertex) -> Vec<Vec<Vertex>> {
    fn rec(g: &Graph, t: Vertex, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let end = *cur.last().unwrap();
        if end == t {
            out.push(cur.clone());
            return;
        }
        for &w in g.neighbors(end) {
            if !cur.contains(&w) {
                cur.push(w);
                rec(g, t, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, t, &mut vec![s], &mut out);
    out
}

pub fn compatible(chosen: &[&Vec<Vertex>]) -> bool {
    for (i, a) in chosen.iter().enumerate() {
        for (j, b) in chosen.iter().enumerate() {
            if i != j && b[1..b.len() - 1].iter().any(|v| a.contains(v)) {
                return false;
            }
        }
    }
    true
}

/// Whether some choice of one simple path per pair is internally
/// disjoint, trying every combination.
pub fn exhaustive(g: &Graph, pairs: &[(Vertex, Vertex)]) -> bool {
    fn rec<'a>(options: &'a [Vec<Vec<Vertex>>], chosen: &mut Vec<&'a Vec<Vertex>>) -> bool {
        if chosen.len() == options.len() {
            return true;
        }
        for p in &options[chosen.len()] {
            chosen.push(p);
            if compatible(chosen) && rec(options, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let options: Vec<_> = pairs.iter().map(|&(s, t)| simple_paths(g, s, t)).collect();
    rec(&options, &mut Vec::new())
}

/// Runs `extend_for_witness` on `q` and asserts its postconditions.
/// Returns `None` when `q` is not bull-free, otherwise whether the paths
/// changed.
pub fn check_extension(g0: &Graph, q: &[Path]) -> Option<bool> {
    let v4 = g0.high_vertices();
    if !bull_free(g0, q) {
        assert!(matches!(
            extend_for_witness(g0, &v4, q),
            Err(Error::NotBullFree(..))
        ));
        return None;
    }
    let before = g0.remove_paths(q).unwrap();
    let out = extend_for_witness(g0, &v4, q).unwrap_or_else(|e| panic!("{e}\n{}", g0.to_text()));
    assert_eq!(out.len(), q.len());
    assert!(bull_free(g0, &out));
    let after = g0.remove_paths(&out).unwrap();
    assert_eq!(after.odd_count(), before.odd_count());
    assert!(analyze(&after).pan_cycles.is_empty());
    for c in after.component_sets().into_iter().filter(|c| c.len() > 1) {
        let kind = classify_component(&after.induced(&c)).unwrap();
        assert_eq!(kind, ComponentKind::Other, "{}", g0.to_text());
    }
    for (p, o) in q.iter().zip(&out) {
        let (pv, ov) = (p.vertices(), o.vertices());
        let inside = |w: &[Vertex]| w == pv || w.iter().eq(pv.iter().rev());
        assert!(ov.windows(pv.len()).any(inside));
    }
    Some(out != q)
}

pub fn bull_free(g: &Graph, q: &[Path]) -> bool {
    q.iter().all(|p| !is_bull_pair(g, p.first(), p.last()))
}

/// Seeded graph on at most 8 vertices with one to three distinct terminal
/// pairs.
pub fn disjoint_paths_instance(seed: u64) -> (Graph, Vec<(Vertex, Vertex)>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=8);
    let max_m = n * (n - 1) / 2;
    let m = rng.gen_range(n - 1..=max_m.min(2 * n));
    let g = gen::random_gnm(n, m, seed).unwrap();
    let mut all: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    all.shuffle(&mut rng);
    let k = rng.gen_range(1..=3);
    let pairs = all
        .into_iter()
        .take(k)
        .map(|(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    (g, pairs)
}
