//! Reduction of a connected graph with a vertex of degree at least four to a
//! nice graph: no pan cycles, and every bull cycle a triangle.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Path, PathPartition, Vertex};
use crate::structure::analyze;

/// One rewrite step; all vertices are recorded by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reduction {
    /// A deleted pan cycle, starting at its degree-3 vertex (which is kept).
    PanCycle { cycle: Vec<String> },
    /// A bull cycle shortened to the triangle `u v w`; each arc runs between
    /// the named endpoints in that order.
    BullShortening {
        u: String,
        v: String,
        w: String,
        arc_uv: Vec<String>,
        arc_uw: Vec<String>,
        arc_vw: Vec<String>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayLog {
    pub steps: Vec<Reduction>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceResult {
    pub nice_graph: Graph,
    pub pan_offset: usize,
    pub replay_log: ReplayLog,
}

fn names(g: &Graph, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}

fn cycle_edges(c: &[Vertex]) -> impl Iterator<Item = Edge> + '_ {
    (0..c.len()).map(move |i| Edge::new(c[i], c[(i + 1) % c.len()]))
}

/// Rewrites `g` into a nice graph with the same path number minus the
/// number of pan cycles.
pub fn make_nice(g: &Graph) -> Result<NiceResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_subcubic() {
        return Err(Error::Subcubic);
    }
    let mut cur = g.clone();
    let mut log = ReplayLog::default();
    let mut pan_offset = 0;
    loop {
        let report = analyze(&cur);
        let Some(c) = report
            .pan_cycles
            .iter()
            .min_by_key(|c| c.iter().min().copied())
        else {
            break;
        };
        log.steps.push(Reduction::PanCycle {
            cycle: names(&cur, c),
        });
        let removed: HashSet<Edge> = cycle_edges(c).collect();
        cur = cur.remove_edges(&removed).strip_isolated();
        pan_offset += 1;
    }
    loop {
        let report = analyze(&cur);
        let Some(b) = report
            .bull_cycles
            .iter()
            .filter(|c| c.len() > 3)
            .min_by_key(|c| c.iter().min().copied())
        else {
            break;
        };
        let (step, next) = shorten(&cur, b);
        log.steps.push(step);
        cur = next;
    }
    Ok(NiceResult {
        nice_graph: cur,
        pan_offset,
        replay_log: log,
    })
}

/// Shortens the bull cycle `b` (starting at `u`, passing through the other
/// degree-3 vertex `v`) to a triangle on `u`, `v` and its smallest interior
/// vertex.
fn shorten(g: &Graph, b: &[Vertex]) -> (Reduction, Graph) {
    let u = b[0];
    let vi = (1..b.len())
        .find(|&i| g.degree(b[i]) == 3)
        .expect("bull cycle");
    let v = b[vi];
    let arc1: Vec<Vertex> = b[..=vi].to_vec();
    let mut arc2: Vec<Vertex> = b[vi..].to_vec();
    arc2.push(u);
    arc2.reverse();
    // both arcs now run from u to v
    let w = *b
        .iter()
        .filter(|&&x| x != u && x != v)
        .min()
        .expect("interior vertex");
    let (with_w, without_w) = if arc1.contains(&w) {
        (arc1, arc2)
    } else {
        (arc2, arc1)
    };
    let wi = with_w.iter().position(|&x| x == w).expect("w on arc");
    let arc_uw = with_w[..=wi].to_vec();
    let arc_vw: Vec<Vertex> = with_w[wi..].iter().rev().copied().collect();
    let step = Reduction::BullShortening {
        u: g.name(u).to_string(),
        v: g.name(v).to_string(),
        w: g.name(w).to_string(),
        arc_uv: names(g, &without_w),
        arc_uw: names(g, &arc_uw),
        arc_vw: names(g, &arc_vw),
    };
    let removed: HashSet<Edge> = cycle_edges(b).collect();
    let mut edges: BTreeSet<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !removed.contains(e))
        .collect();
    edges.extend([Edge::new(u, v), Edge::new(u, w), Edge::new(v, w)]);
    let dropped: HashSet<Vertex> = b
        .iter()
        .copied()
        .filter(|&x| x != u && x != v && x != w)
        .collect();
    let keep: Vec<Vertex> = g.vertices().filter(|x| !dropped.contains(x)).collect();
    let next = g.with_edges(edges).induced(&keep);
    (step, next)
}

/// Turns a partition of the nice graph into a partition of the original
/// graph by undoing the log in reverse.
pub fn replay_witness(
    nice_graph: &Graph,
    nice_partition: &PathPartition,
    log: &ReplayLog,
    original: &Graph,
) -> Result<PathPartition> {
    nice_partition
        .check(nice_graph)
        .map_err(|e| Error::InvalidWitness(e.to_string()))?;
    let mut paths = nice_partition.to_names(nice_graph);
    for step in log.steps.iter().rev() {
        match step {
            Reduction::BullShortening {
                u,
                v,
                w,
                arc_uv,
                arc_uw,
                arc_vw,
            } => {
                for p in &mut paths {
                    *p = expand(p, &[(u, v, arc_uv), (u, w, arc_uw), (v, w, arc_vw)]);
                }
            }
            Reduction::PanCycle { cycle } => {
                let x = &cycle[0];
                let i = paths
                    .iter()
                    .position(|p| p.first() == Some(x) || p.last() == Some(x))
                    .ok_or_else(|| {
                        Error::InvalidWitness(format!("no path ends at pan attachment {x}"))
                    })?;
                if paths[i].first() == Some(x) {
                    paths[i].reverse();
                }
                let k = cycle.len() / 2;
                paths[i].extend(cycle[1..=k].iter().cloned());
                let mut back = cycle[k..].to_vec();
                back.push(x.clone());
                paths.push(back);
            }
        }
    }
    let out = PathPartition::from_names(original, &paths)?;
    out.check(original)
        .map_err(|e| Error::InvalidWitness(e.to_string()))?;
    Ok(out)
}

/// Replaces each triangle edge by its recorded arc.
fn expand(path: &[String], arcs: &[(&String, &String, &Vec<String>)]) -> Vec<String> {
    let mut out = vec![path[0].clone()];
    for pair in path.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let hit = arcs.iter().find_map(|(s, t, arc)| {
            if a == *s && b == *t {
                Some(arc[1..].to_vec())
            } else if a == *t && b == *s {
                Some(arc.iter().rev().skip(1).cloned().collect())
            } else {
                None
            }
        });
        match hit {
            Some(seg) => out.extend(seg),
            None => out.push(b.clone()),
        }
    }
    out
}

/// Re-indexes paths of `from` into `to` by name.
pub(crate) fn transfer_all(paths: &[Path], from: &Graph, to: &Graph) -> Result<Vec<Path>> {
    paths.iter().map(|p| p.transfer(from, to)).collect()
}
