//! Target-bounded depth-first search for a path partition.

use crate::graph::{Edge, Graph, Path, Vertex};

/// Finds a path partition of `g` with at most `target` paths, if one exists.
pub(crate) fn bounded_partition(g: &Graph, target: usize) -> Option<Vec<Path>> {
    let mut s = Search {
        g,
        used: vec![false; g.m()],
        rem: g.vertices().map(|v| g.degree(v)).collect(),
        covered: 0,
        paths: Vec::new(),
        target,
        on_path: vec![false; g.n()],
    };
    if s.run() {
        Some(s.paths.into_iter().map(Path).collect())
    } else {
        None
    }
}

struct Search<'a> {
    g: &'a Graph,
    used: Vec<bool>,
    rem: Vec<usize>,
    covered: usize,
    paths: Vec<Vec<Vertex>>,
    target: usize,
    on_path: Vec<bool>,
}

impl Search<'_> {
    fn eid(&self, a: Vertex, b: Vertex) -> usize {
        self.g.edge_index(Edge::new(a, b)).expect("edge")
    }

    fn take(&mut self, a: Vertex, b: Vertex) {
        let e = self.eid(a, b);
        self.used[e] = true;
        self.rem[a] -= 1;
        self.rem[b] -= 1;
        self.covered += 1;
    }

    fn give(&mut self, a: Vertex, b: Vertex) {
        let e = self.eid(a, b);
        self.used[e] = false;
        self.rem[a] += 1;
        self.rem[b] += 1;
        self.covered -= 1;
    }

    /// Lower bound on the number of paths needed for the uncovered edges.
    fn remaining_bound(&self) -> usize {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut total = 0;
        for s in 0..n {
            if seen[s] || self.rem[s] == 0 {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut odd = 0;
            while let Some(u) = stack.pop() {
                odd += self.rem[u] % 2;
                for &w in self.g.neighbors(u) {
                    if !seen[w] && !self.used[self.eid(u, w)] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            total += (odd / 2).max(1);
        }
        total
    }

    fn run(&mut self) -> bool {
        if self.covered == self.g.m() {
            return true;
        }
        if self.paths.len() + self.remaining_bound() > self.target {
            return false;
        }
        if let Some(s) = self.g.vertices().find(|&v| self.rem[v] % 2 == 1) {
            self.on_path[s] = true;
            let mut path = vec![s];
            let found = self.grow(&mut path, false);
            self.on_path[s] = false;
            return found;
        }
        let e = *self
            .g
            .edges()
            .iter()
            .enumerate()
            .find(|(i, _)| !self.used[*i])
            .map(|(_, e)| e)
            .expect("uncovered edge");
        self.take(e.0, e.1);
        self.on_path[e.0] = true;
        self.on_path[e.1] = true;
        let mut path = vec![e.0, e.1];
        let found = self.grow(&mut path, true);
        self.on_path[e.0] = false;
        self.on_path[e.1] = false;
        self.give(e.0, e.1);
        found
    }

    /// Extends the tail of `path`; when `two_sided`, stopping the tail hands
    /// over to extending the head.
    fn grow(&mut self, path: &mut Vec<Vertex>, two_sided: bool) -> bool {
        let end = *path.last().expect("nonempty");
        let stop_first = self.rem[end].is_multiple_of(2);
        if stop_first && self.try_stop(path, two_sided) {
            return true;
        }
        let nbrs: Vec<Vertex> = self.g.neighbors(end).to_vec();
        for w in nbrs {
            if self.on_path[w] || self.used[self.eid(end, w)] {
                continue;
            }
            self.take(end, w);
            self.on_path[w] = true;
            path.push(w);
            let found = self.grow(path, two_sided);
            path.pop();
            self.on_path[w] = false;
            self.give(end, w);
            if found {
                return true;
            }
        }
        !stop_first && self.try_stop(path, two_sided)
    }

    fn try_stop(&mut self, path: &mut Vec<Vertex>, two_sided: bool) -> bool {
        if path.len() < 2 {
            return false;
        }
        if two_sided {
            path.reverse();
            let found = self.grow(path, false);
            path.reverse();
            return found;
        }
        self.paths.push(path.clone());
        for &v in path.iter() {
            self.on_path[v] = false;
        }
        let found = self.run();
        for &v in path.iter() {
            self.on_path[v] = true;
        }
        if !found {
            self.paths.pop();
        }
        found
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, PathPartition};

    #[test]
    fn finds_tight_partitions() {
        let k4 = parse_graph("e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4").unwrap();
        let p = bounded_partition(&k4, 2).unwrap();
        assert!(PathPartition::new(p).is_valid_for(&k4));
        assert!(bounded_partition(&k4, 1).is_none());
        let c5 = parse_graph("e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1").unwrap();
        let p = bounded_partition(&c5, 2).unwrap();
        assert!(PathPartition::new(p).is_valid_for(&c5));
        assert!(bounded_partition(&c5, 1).is_none());
    }
}
