use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex};

use super::{Frame, Pattern, Symbol};

/// Checks that `q` consists of edge-disjoint nontrivial paths of `g` that
/// together cover every edge at `v4`.
pub fn is_covering_family(g: &Graph, frame: &Frame, q: &[Path]) -> Result<()> {
    let mut used = HashSet::new();
    for p in q {
        p.check_in(g)
            .map_err(|e| Error::NotCovering(e.to_string()))?;
        if p.is_empty() {
            return Err(Error::NotCovering("path without edges".into()));
        }
        for e in p.edges() {
            if !used.insert(e) {
                return Err(Error::NotCovering(format!(
                    "edge {} used twice",
                    g.edge_name(e)
                )));
            }
        }
    }
    if let Some(e) = frame.v4_edges.iter().find(|e| !used.contains(e)) {
        return Err(Error::NotCovering(format!(
            "edge {} is not covered",
            g.edge_name(*e)
        )));
    }
    Ok(())
}

/// The pattern of a covering family, see [`encode_with_assignment`].
pub fn encode(g: &Graph, v4: &[Vertex], q: &[Path]) -> Result<Pattern> {
    encode_with_assignment(g, v4, q).map(|(p, _)| p)
}

/// Encodes `q` against the terminal set `N[N[v4] ∪ endpoints(q)]`. Each path
/// is read from its smaller endpoint; vertices of the terminal set outside
/// `N[v4]` become variables numbered by first appearance. Also returns the
/// vertex behind each variable.
pub fn encode_with_assignment(
    g: &Graph,
    v4: &[Vertex],
    q: &[Path],
) -> Result<(Pattern, Vec<Vertex>)> {
    let frame = Frame::new(g, v4)?;
    is_covering_family(g, &frame, q)?;
    let mut core = frame.in_closed.clone();
    for p in q {
        let (a, b) = p.endpoints();
        core[a] = true;
        core[b] = true;
    }
    let mut terminal = core.clone();
    for v in g.vertices().filter(|&v| core[v]) {
        for &w in g.neighbors(v) {
            terminal[w] = true;
        }
    }
    let mut var_of: Vec<Option<usize>> = vec![None; g.n()];
    let mut assignment = Vec::new();
    let mut traces = Vec::with_capacity(q.len());
    for p in q {
        let path = if p.first() <= p.last() {
            p.0.clone()
        } else {
            p.reversed().0
        };
        let mut t = Vec::new();
        for v in path {
            if frame.in_closed[v] {
                t.push(Symbol::Vertex(v));
            } else if terminal[v] {
                let i = *var_of[v].get_or_insert_with(|| {
                    assignment.push(v);
                    assignment.len() - 1
                });
                t.push(Symbol::Var(i));
            }
        }
        traces.push(t);
    }
    let degrees = assignment.iter().map(|&v| g.degree(v) as u8).collect();
    Ok((Pattern::new(traces, degrees), assignment))
}
