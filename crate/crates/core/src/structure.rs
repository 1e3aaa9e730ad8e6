//! Detection of pan cycles, bull cycles, bull pairs and the high-degree set.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A maximal walk from `start` through degree-2 vertices, ending at the first
/// vertex whose degree is not 2 (or back at `start`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub start: Vertex,
    pub interior: Vec<Vertex>,
    pub end: Vertex,
}

impl Chain {
    /// Vertex sequence from `start` to `end`.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.interior.len() + 2);
        out.push(self.start);
        out.extend(&self.interior);
        out.push(self.end);
        out
    }
}

/// Follows degree-2 vertices from `start` through its neighbor `first`.
pub fn follow_chain(g: &Graph, start: Vertex, first: Vertex) -> Chain {
    let mut interior = Vec::new();
    let (mut prev, mut cur) = (start, first);
    while cur != start && g.degree(cur) == 2 {
        interior.push(cur);
        let nb = g.neighbors(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    Chain {
        start,
        interior,
        end: cur,
    }
}

/// Structural summary of a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// Vertices of degree at least four.
    pub v4: Vec<Vertex>,
    /// Sum of degrees over `v4`.
    pub high: usize,
    /// Each cycle starts at its degree-3 vertex.
    pub pan_cycles: Vec<Vec<Vertex>>,
    /// Each cycle starts at its first degree-3 vertex `u` and passes through
    /// the other degree-3 vertex `v`.
    pub bull_cycles: Vec<Vec<Vertex>>,
    /// Pairs `(u, v)` with `u < v`.
    pub bull_pairs: Vec<(Vertex, Vertex)>,
}

/// Computes the [`StructureReport`] of `g`.
pub fn analyze(g: &Graph) -> StructureReport {
    let v4 = g.high_vertices();
    let high = v4.iter().map(|&v| g.degree(v)).sum();
    let mut pan_cycles = Vec::new();
    let mut bull_cycles = Vec::new();
    for u in g.vertices().filter(|&u| g.degree(u) == 3) {
        let chains: Vec<Chain> = g
            .neighbors(u)
            .iter()
            .map(|&w| follow_chain(g, u, w))
            .collect();
        for c in &chains {
            // each pan cycle is found from both ends; keep one orientation
            if c.end == u && c.interior.first() < c.interior.last() {
                let mut cyc = vec![u];
                cyc.extend(&c.interior);
                pan_cycles.push(cyc);
            }
        }
        for (i, a) in chains.iter().enumerate() {
            if a.end <= u || g.degree(a.end) != 3 {
                continue;
            }
            for b in &chains[i + 1..] {
                if b.end != a.end {
                    continue;
                }
                let mut cyc = vec![u];
                cyc.extend(&a.interior);
                cyc.push(a.end);
                cyc.extend(b.interior.iter().rev());
                bull_cycles.push(cyc);
            }
        }
    }
    StructureReport {
        v4,
        high,
        pan_cycles,
        bull_cycles,
        bull_pairs: bull_pairs(g),
    }
}

/// Number of pan cycles of `g`.
pub fn pan_count(g: &Graph) -> usize {
    analyze(g).pan_cycles.len()
}

/// Whether `u, v` are the two degree-3 vertices of a bull triangle.
pub fn is_bull_pair(g: &Graph, u: Vertex, v: Vertex) -> bool {
    if u == v || g.degree(u) != 3 || g.degree(v) != 3 || !g.has_edge(u, v) {
        return false;
    }
    g.neighbors(u)
        .iter()
        .any(|&w| w != v && g.degree(w) == 2 && g.has_edge(w, v))
}

/// Name-based variant of [`is_bull_pair`].
pub fn is_bull_pair_named(g: &Graph, u: &str, v: &str) -> Result<bool> {
    Ok(is_bull_pair(g, g.lookup(u)?, g.lookup(v)?))
}

/// All bull pairs `(u, v)` with `u < v`.
pub fn bull_pairs(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for e in g.edges() {
        if is_bull_pair(g, e.0, e.1) {
            out.push((e.0, e.1));
        }
    }
    out
}

/// Shape of a connected subcubic component relevant to the path number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Cycle,
    SubdividedDiamond,
    Other,
}

/// Classifies a connected graph.
pub fn classify_component(g: &Graph) -> Result<ComponentKind> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(classify_edges(g))
}

/// Classifies the edge-bearing part of `g`, which is assumed to form a
/// single component; isolated vertices are ignored.
pub(crate) fn classify_edges(g: &Graph) -> ComponentKind {
    if g.m() < 3 {
        return ComponentKind::Other;
    }
    let mut threes = Vec::new();
    for v in g.vertices() {
        match g.degree(v) {
            0 | 2 => {}
            3 => threes.push(v),
            _ => return ComponentKind::Other,
        }
    }
    match threes.as_slice() {
        [] => ComponentKind::Cycle,
        &[u, v] => {
            let all_to_v = g
                .neighbors(u)
                .iter()
                .all(|&w| follow_chain(g, u, w).end == v);
            if all_to_v {
                ComponentKind::SubdividedDiamond
            } else {
                ComponentKind::Other
            }
        }
        _ => ComponentKind::Other,
    }
}

/// The three `u`-`v` arcs of a subdivided diamond, in neighbor order of `u`.
pub(crate) fn diamond_arcs(g: &Graph) -> Option<(Vertex, Vertex, Vec<Chain>)> {
    if classify_edges(g) != ComponentKind::SubdividedDiamond {
        return None;
    }
    let threes: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 3).collect();
    let (u, v) = (threes[0], threes[1]);
    let arcs = g
        .neighbors(u)
        .iter()
        .map(|&w| follow_chain(g, u, w))
        .collect();
    Some((u, v, arcs))
}

/// Vertex sequence of the cycle forming the edge-bearing part of `g`,
/// starting at its smallest non-isolated vertex.
pub(crate) fn cycle_order(g: &Graph) -> Vec<Vertex> {
    let start = g
        .vertices()
        .find(|&v| g.degree(v) > 0)
        .expect("nonempty cycle");
    let c = follow_chain(g, start, g.neighbors(start)[0]);
    let mut cyc = vec![start];
    cyc.extend(c.interior);
    cyc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn g(text: &str) -> Graph {
        parse_graph(text).unwrap()
    }

    fn names(g: &Graph, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&v| g.name(v).to_string()).collect()
    }

    #[test]
    fn pan_cycle_with_tail() {
        let p = g("e a b\ne b c\ne c d\ne d e\ne e a\ne a f");
        let r = analyze(&p);
        assert_eq!(r.pan_cycles.len(), 1);
        let mut cyc = names(&p, &r.pan_cycles[0]);
        assert_eq!(cyc[0], "a");
        cyc.sort();
        assert_eq!(cyc, ["a", "b", "c", "d", "e"]);
        assert!(r.bull_cycles.is_empty());
    }

    #[test]
    fn bull_cycle_with_two_tails() {
        let p = g("e u y\ne y v\ne v x\ne x u\ne u p\ne v q");
        let r = analyze(&p);
        assert!(r.pan_cycles.is_empty());
        assert_eq!(r.bull_cycles.len(), 1);
        let mut cyc = names(&p, &r.bull_cycles[0]);
        cyc.sort();
        assert_eq!(cyc, ["u", "v", "x", "y"]);
        assert!(r.bull_pairs.is_empty());
    }

    #[test]
    fn plain_cycle_has_neither() {
        let r = analyze(&g("e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1"));
        assert!(r.pan_cycles.is_empty() && r.bull_cycles.is_empty());
        assert_eq!(r.high, 0);
    }

    #[test]
    fn high_sums_v4_degrees() {
        let w4 = g("e h a\ne h b\ne h c\ne h d\ne a b\ne b c\ne c d\ne d a");
        let r = analyze(&w4);
        assert_eq!(names(&w4, &r.v4), ["h"]);
        assert_eq!(r.high, 4);
    }

    #[test]
    fn classification() {
        let c7 = g("e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 7 1");
        assert_eq!(classify_component(&c7).unwrap(), ComponentKind::Cycle);
        let diamond = g("e 1 2\ne 1 3\ne 2 3\ne 2 4\ne 3 4");
        assert_eq!(
            classify_component(&diamond).unwrap(),
            ComponentKind::SubdividedDiamond
        );
        let theta = g("e u v\ne u a\ne a b\ne b v\ne u c\ne c v");
        assert_eq!(
            classify_component(&theta).unwrap(),
            ComponentKind::SubdividedDiamond
        );
        let p4 = g("e 1 2\ne 2 3\ne 3 4");
        assert_eq!(classify_component(&p4).unwrap(), ComponentKind::Other);
        let k4 = g("e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4");
        assert_eq!(classify_component(&k4).unwrap(), ComponentKind::Other);
        assert!(matches!(
            classify_component(&g("e 1 2\ne 3 4")),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn bull_pair_checks() {
        let bull = g("e u v\ne u w\ne v w\ne u p\ne v q");
        assert!(is_bull_pair_named(&bull, "u", "v").unwrap());
        assert!(!is_bull_pair_named(&bull, "u", "w").unwrap());
        let k4 = g("e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4");
        assert!(bull_pairs(&k4).is_empty());
        assert!(!is_bull_pair_named(&bull, "p", "q").unwrap());
        assert!(is_bull_pair_named(&bull, "u", "zz").is_err());
    }
}
