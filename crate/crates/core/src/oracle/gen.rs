//! Seeded instance generators. Vertices are named `1..=n`.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Names accepted by [`gen`].
pub const FAMILIES: &[&str] = &[
    "random_gnm",
    "random_near_subcubic",
    "wheel",
    "star",
    "pan_gadget",
    "bull_gadget",
    "complete",
];

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

/// Generates a member of `family` from named integer parameters.
pub fn gen(family: &str, params: &BTreeMap<String, usize>, seed: u64) -> Result<Graph> {
    let get = |key: &str| {
        params
            .get(key)
            .copied()
            .ok_or_else(|| bad(format!("{family} needs parameter `{key}`")))
    };
    let allowed: &[&str] = match family {
        "random_gnm" => &["n", "m"],
        "random_near_subcubic" => &["n", "extra"],
        "pan_gadget" | "bull_gadget" => &["n", "k"],
        "wheel" | "star" | "complete" => &["n"],
        _ => return Err(bad(format!("unknown family `{family}`"))),
    };
    if let Some(k) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(bad(format!("{family} does not take parameter `{k}`")));
    }
    match family {
        "random_gnm" => random_gnm(get("n")?, get("m")?, seed),
        "random_near_subcubic" => random_near_subcubic(get("n")?, get("extra")?, seed),
        "wheel" => wheel(get("n")?),
        "star" => star(get("n")?),
        "complete" => complete(get("n")?),
        "pan_gadget" => pan_gadget(get("n")?, get("k")?, seed),
        _ => bull_gadget(get("n")?, get("k")?, seed),
    }
}

fn build(n: usize, edges: &BTreeSet<(Vertex, Vertex)>) -> Result<Graph> {
    let list: Vec<(Vertex, Vertex)> = edges.iter().copied().collect();
    Graph::numbered(n, &list)
}

fn key(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    (a.min(b), a.max(b))
}

/// Uniform random graph with `n` vertices and `m` edges.
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let all: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    if m > all.len() {
        return Err(bad(format!("{m} edges do not fit on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: BTreeSet<_> = all.choose_multiple(&mut rng, m).copied().collect();
    build(n, &edges)
}

struct Builder {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
    deg: Vec<usize>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            n,
            edges: BTreeSet::new(),
            deg: vec![0; n],
        }
    }

    fn add_vertex(&mut self) -> Vertex {
        self.deg.push(0);
        self.n += 1;
        self.n - 1
    }

    fn add(&mut self, a: Vertex, b: Vertex) -> bool {
        if a == b || !self.edges.insert(key(a, b)) {
            return false;
        }
        self.deg[a] += 1;
        self.deg[b] += 1;
        true
    }

    fn has(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.contains(&key(a, b))
    }

    fn finish(self) -> Result<Graph> {
        build(self.n, &self.edges)
    }
}

/// Random connected subcubic graph on `n` vertices with `extra` further
/// random edges.
pub fn random_near_subcubic(n: usize, extra: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(bad("n must be positive"));
    }
    if extra > n * (n - 1) / 2 {
        return Err(bad("too many extra edges"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Builder::new(n);
    for v in 1..n {
        let open: Vec<Vertex> = (0..v).filter(|&u| b.deg[u] < 3).collect();
        let u = *open.choose(&mut rng).expect("a tree always has a leaf");
        b.add(v, u);
    }
    for _ in 0..n {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if x != y && b.deg[x] < 3 && b.deg[y] < 3 {
            b.add(x, y);
        }
    }
    let mut missing: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |c| (a, c)))
        .filter(|&(a, c)| !b.has(a, c))
        .collect();
    if missing.len() < extra {
        return Err(bad("too many extra edges"));
    }
    missing.shuffle(&mut rng);
    for &(x, y) in &missing[..extra] {
        b.add(x, y);
    }
    b.finish()
}

/// Wheel with `n` vertices in total: hub `1` and rim cycle `2..=n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(bad("a wheel needs at least 4 vertices"));
    }
    let mut edges = BTreeSet::new();
    for r in 1..n {
        edges.insert((0, r));
        let next = if r + 1 < n { r + 1 } else { 1 };
        edges.insert(key(r, next));
    }
    build(n, &edges)
}

/// Star with centre `1` and `n` leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("a star needs at least one leaf"));
    }
    let edges = (1..=n).map(|l| (0, l)).collect();
    build(n + 1, &edges)
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("n must be positive"));
    }
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    build(n, &edges)
}

/// Path with `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("n must be positive"));
    }
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// Cycle with `n` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("a cycle needs at least 3 vertices"));
    }
    let edges = (0..n).map(|i| key(i, (i + 1) % n)).collect();
    build(n, &edges)
}

/// Random connected core with a degree-4 vertex `1`, leaves `2..=5`, and the
/// remaining vertices hung below them, plus at most one chord.
fn hub_core(n: usize, rng: &mut ChaCha8Rng) -> Result<Builder> {
    if n < 5 {
        return Err(bad("gadget cores need n >= 5"));
    }
    let mut b = Builder::new(n);
    for l in 1..5 {
        b.add(0, l);
    }
    for v in 5..n {
        let open: Vec<Vertex> = (1..v).filter(|&u| b.deg[u] < 3).collect();
        let u = *open.choose(rng).expect("open vertex");
        b.add(v, u);
    }
    if rng.gen_bool(0.5) {
        let open: Vec<Vertex> = (1..n).filter(|&u| b.deg[u] < 3).collect();
        if open.len() >= 2 {
            let pick: Vec<Vertex> = open.choose_multiple(rng, 2).copied().collect();
            b.add(pick[0], pick[1]);
        }
    }
    Ok(b)
}

fn attach_point(b: &Builder, core: usize, rng: &mut ChaCha8Rng) -> Result<Vertex> {
    let open: Vec<Vertex> = (1..core).filter(|&u| b.deg[u] <= 2).collect();
    open.choose(rng)
        .copied()
        .ok_or_else(|| bad("no vertex left to attach a gadget to"))
}

/// Hub core on `n` vertices with `k` pendant pan cycles of length 3 or 4.
pub fn pan_gadget(n: usize, k: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = hub_core(n, &mut rng)?;
    for _ in 0..k {
        let a = attach_point(&b, n, &mut rng)?;
        let x = b.add_vertex();
        b.add(a, x);
        let len = rng.gen_range(3..=4);
        let mut prev = x;
        for _ in 1..len {
            let c = b.add_vertex();
            b.add(prev, c);
            prev = c;
        }
        b.add(prev, x);
    }
    b.finish()
}

/// Hub core on `n` vertices with `k` pendant bull cycles of length 3 to 5.
pub fn bull_gadget(n: usize, k: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = hub_core(n, &mut rng)?;
    for _ in 0..k {
        let a = attach_point(&b, n, &mut rng)?;
        let u = b.add_vertex();
        b.add(a, u);
        let c = attach_point(&b, n, &mut rng)?;
        let v = b.add_vertex();
        b.add(c, v);
        let short = rng.gen_range(0..=1);
        let long = rng.gen_range(1..=2);
        for interior in [short, long] {
            let mut prev = u;
            for _ in 0..interior {
                let w = b.add_vertex();
                b.add(prev, w);
                prev = w;
            }
            b.add(prev, v);
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let w = wheel(5).unwrap();
        assert_eq!((w.n(), w.m()), (5, 8));
        assert_eq!(w.degree(0), 4);
        let k4 = complete(4).unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let s = star(4).unwrap();
        assert_eq!(s.degree(0), 4);
    }

    #[test]
    fn deterministic() {
        let a = random_near_subcubic(7, 2, 42).unwrap();
        let b = random_near_subcubic(7, 2, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        let mut p = BTreeMap::new();
        p.insert("n".to_string(), 7);
        p.insert("extra".to_string(), 2);
        assert_eq!(gen("random_near_subcubic", &p, 42).unwrap(), a);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(wheel(3).is_err());
        assert!(random_gnm(3, 4, 0).is_err());
        let p = BTreeMap::new();
        assert!(gen("nope", &p, 0).is_err());
        assert!(gen("wheel", &p, 0).is_err());
    }

    #[test]
    fn gadgets_are_connected_and_high() {
        for seed in 0..20 {
            let p = pan_gadget(6, 2, seed).unwrap();
            assert!(p.is_connected() && p.max_degree() >= 4);
            let b = bull_gadget(6, 1, seed).unwrap();
            assert!(b.is_connected() && b.max_degree() >= 4);
        }
    }
}
