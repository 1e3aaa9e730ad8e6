//! Brute-force ground truth and instance generation.

pub mod catalog;
pub mod gen;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// Default edge cap of the exhaustive searches.
pub const DEFAULT_CAP: usize = 20;

/// Exact path number by exhaustive search (at most [`DEFAULT_CAP`] edges).
pub fn brute_pn(g: &Graph) -> Result<usize> {
    brute_pn_with_cap(g, DEFAULT_CAP)
}

/// Exact path number by exhaustive search with an explicit edge cap.
///
/// Every new path contains the lowest uncovered edge and is grown first at
/// its tail, then at its head. Branches are cut when the paths so far plus a
/// per-component lower bound on the rest cannot beat the incumbent.
pub fn brute_pn_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    if g.m() > cap {
        return Err(Error::CapExceeded { edges: g.m(), cap });
    }
    let mut b = Brute {
        g,
        used: vec![false; g.m()],
        on_path: vec![false; g.n()],
        count: 0,
        best: g.m(),
        floor: 0,
    };
    b.floor = b.bound();
    if b.best > b.floor {
        b.open();
    }
    Ok(b.best)
}

struct Brute<'a> {
    g: &'a Graph,
    used: Vec<bool>,
    on_path: Vec<bool>,
    count: usize,
    best: usize,
    floor: usize,
}

impl Brute<'_> {
    fn idx(&self, a: Vertex, b: Vertex) -> usize {
        self.g.edge_index(Edge::new(a, b)).expect("edge")
    }

    fn bound(&self) -> usize {
        let n = self.g.n();
        let mut deg = vec![0usize; n];
        for (i, e) in self.g.edges().iter().enumerate() {
            if !self.used[i] {
                deg[e.0] += 1;
                deg[e.1] += 1;
            }
        }
        let mut seen = vec![false; n];
        let mut total = 0;
        for s in 0..n {
            if seen[s] || deg[s] == 0 {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut odd = 0;
            while let Some(u) = stack.pop() {
                odd += deg[u] % 2;
                for &w in self.g.neighbors(u) {
                    if !seen[w] && !self.used[self.idx(u, w)] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            total += (odd / 2).max(1);
        }
        total
    }

    fn done(&self) -> bool {
        self.best == self.floor
    }

    fn open(&mut self) {
        let Some(i) = self.used.iter().position(|u| !u) else {
            self.best = self.best.min(self.count);
            return;
        };
        if self.count + self.bound() >= self.best {
            return;
        }
        let e = self.g.edges()[i];
        self.used[i] = true;
        self.on_path[e.0] = true;
        self.on_path[e.1] = true;
        let mut path = vec![e.0, e.1];
        self.grow(&mut path, true);
        self.on_path[e.0] = false;
        self.on_path[e.1] = false;
        self.used[i] = false;
    }

    fn grow(&mut self, path: &mut Vec<Vertex>, tail: bool) {
        let end = *path.last().expect("nonempty");
        for k in 0..self.g.degree(end) {
            let w = self.g.neighbors(end)[k];
            let i = self.idx(end, w);
            if self.on_path[w] || self.used[i] {
                continue;
            }
            self.used[i] = true;
            self.on_path[w] = true;
            path.push(w);
            self.grow(path, tail);
            path.pop();
            self.on_path[w] = false;
            self.used[i] = false;
            if self.done() {
                return;
            }
        }
        if tail {
            path.reverse();
            self.grow(path, false);
            path.reverse();
        } else {
            let saved: Vec<Vertex> = path.clone();
            for &v in &saved {
                self.on_path[v] = false;
            }
            self.count += 1;
            self.open();
            self.count -= 1;
            for &v in &saved {
                self.on_path[v] = true;
            }
        }
    }
}

/// Fewest edge deletions that make `g` subcubic, by iterative deepening over
/// subsets of the edges at vertices of degree at least four.
pub fn sen_bruteforce(g: &Graph) -> Result<usize> {
    sen_bruteforce_with_cap(g, DEFAULT_CAP)
}

pub fn sen_bruteforce_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    if g.m() > cap {
        return Err(Error::CapExceeded { edges: g.m(), cap });
    }
    let candidates: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| g.degree(e.0) >= 4 || g.degree(e.1) >= 4)
        .collect();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    for k in 0..=candidates.len() {
        if choose(&candidates, 0, k, &mut deg) {
            return Ok(k);
        }
    }
    unreachable!("deleting every candidate edge leaves a subcubic graph")
}

fn choose(cands: &[Edge], from: usize, k: usize, deg: &mut [usize]) -> bool {
    if k == 0 {
        return deg.iter().all(|&d| d <= 3);
    }
    for i in from..cands.len() {
        if cands.len() - i < k {
            break;
        }
        let e = cands[i];
        deg[e.0] -= 1;
        deg[e.1] -= 1;
        let ok = choose(cands, i + 1, k - 1, deg);
        deg[e.0] += 1;
        deg[e.1] += 1;
        if ok {
            return true;
        }
    }
    false
}
