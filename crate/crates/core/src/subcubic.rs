//! Exact path number and optimal partitions of connected subcubic graphs.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Path, PathPartition, Vertex};
use crate::search::bounded_partition;
use crate::structure::{analyze, classify_edges, cycle_order, diamond_arcs, ComponentKind};

fn check_input(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_subcubic() {
        return Err(Error::NotSubcubic(g.max_degree()));
    }
    Ok(())
}

/// Path number of a connected graph of maximum degree at most three.
pub fn pn_subcubic(g: &Graph) -> Result<usize> {
    check_input(g)?;
    Ok(formula(g))
}

/// Path number of the edge-bearing part of `g`, assumed connected.
fn formula(g: &Graph) -> usize {
    if g.m() == 0 {
        return 0;
    }
    match classify_edges(g) {
        ComponentKind::Cycle | ComponentKind::SubdividedDiamond => 2,
        ComponentKind::Other => g.odd_count() / 2 + analyze(g).pan_cycles.len(),
    }
}

fn check_cycle(g: &Graph, c: &[Vertex]) -> Result<Vec<Edge>> {
    let bad = |msg: &str| Error::NotPanCycle(msg.to_string());
    if c.len() < 3 {
        return Err(bad("fewer than three vertices"));
    }
    if c.iter().any(|&v| v >= g.n()) || c.iter().collect::<HashSet<_>>().len() != c.len() {
        return Err(bad("not a simple vertex cycle"));
    }
    let edges: Vec<Edge> = (0..c.len())
        .map(|i| Edge::new(c[i], c[(i + 1) % c.len()]))
        .collect();
    if edges.iter().any(|e| !g.has_edge(e.0, e.1)) {
        return Err(bad("missing cycle edge"));
    }
    let threes = c.iter().filter(|&&v| g.degree(v) == 3).count();
    let twos = c.iter().filter(|&&v| g.degree(v) == 2).count();
    if threes != 1 || twos != c.len() - 1 {
        return Err(bad(
            "needs exactly one degree-3 vertex and all others of degree 2",
        ));
    }
    Ok(edges)
}

/// Deletes the edges of the pan cycle `c` and the vertices left isolated.
pub fn reduce_pan_cycle(g: &Graph, c: &[Vertex]) -> Result<Graph> {
    let edges = check_cycle(g, c)?;
    Ok(g.remove_edges(&edges.into_iter().collect())
        .strip_isolated())
}

/// A path partition of size [`pn_subcubic`].
pub fn partition_subcubic(g: &Graph) -> Result<PathPartition> {
    check_input(g)?;
    let paths = part(g)?;
    Ok(PathPartition::new(paths))
}

/// Optimal partition of the edge-bearing part of `g` (a single component
/// plus possibly isolated vertices, maximum degree at most three). Vertex
/// indices are those of `g`.
pub(crate) fn part(g: &Graph) -> Result<Vec<Path>> {
    if g.m() == 0 {
        return Ok(Vec::new());
    }
    let expected = formula(g);
    let paths = match classify_edges(g) {
        ComponentKind::Cycle => split_cycle(g),
        ComponentKind::SubdividedDiamond => split_diamond(g),
        ComponentKind::Other => induct(g)?,
    };
    if paths.len() == expected {
        return Ok(paths);
    }
    bounded_partition(g, expected).ok_or_else(|| {
        Error::Construction(format!(
            "no partition of size {expected} for a subcubic component"
        ))
    })
}

fn split_cycle(g: &Graph) -> Vec<Path> {
    let c = cycle_order(g);
    let k = c.len() / 2;
    let first = c[..=k].to_vec();
    let mut second = c[k..].to_vec();
    second.push(c[0]);
    vec![Path(first), Path(second)]
}

fn split_diamond(g: &Graph) -> Vec<Path> {
    let (_, v, mut arcs) = diamond_arcs(g).expect("diamond");
    // put an arc with an interior vertex first
    let i = arcs
        .iter()
        .position(|a| !a.interior.is_empty())
        .expect("simple graph");
    arcs.swap(0, i);
    let a = arcs[0].vertices();
    let (b, c) = (arcs[1].vertices(), arcs[2].vertices());
    let z = 1;
    // z -> u along A, then u -> v along B
    let mut p1: Vec<Vertex> = a[..=z].iter().rev().copied().collect();
    p1.extend(&b[1..]);
    // z -> v along A, then v -> u along C
    let mut p2: Vec<Vertex> = a[z..].to_vec();
    p2.extend(c.iter().rev().skip(1));
    debug_assert_eq!(a[a.len() - 1], v);
    vec![Path(p1), Path(p2)]
}

/// Splits `g` into its edge-bearing components, each on the full vertex set.
fn edge_components(g: &Graph) -> Vec<Graph> {
    let ids = g.component_ids();
    let mut groups: std::collections::BTreeMap<usize, Vec<Edge>> = Default::default();
    for e in g.edges() {
        groups.entry(ids[e.0]).or_default().push(*e);
    }
    groups.into_values().map(|es| g.with_edges(es)).collect()
}

fn part_all(g: &Graph) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    for c in edge_components(g) {
        out.extend(part(&c)?);
    }
    Ok(out)
}

fn path_with_endpoint(paths: &[Path], v: Vertex) -> Option<usize> {
    paths.iter().position(|p| p.has_endpoint(v))
}

fn induct(g: &Graph) -> Result<Vec<Path>> {
    let report = analyze(g);
    if let Some(c) = report.pan_cycles.first() {
        return absorb_pan_cycle(g, c);
    }
    let Some(v) = g.vertices().find(|&v| g.degree(v) == 2) else {
        return bounded_partition(g, g.odd_count() / 2)
            .ok_or_else(|| Error::Construction("all-odd base case failed".into()));
    };
    let (x, y) = (g.neighbors(v)[0], g.neighbors(v)[1]);
    if !g.has_edge(x, y) {
        return dissolve(g, v, x, y);
    }
    absorb_triangle(g, v, x, y)
}

fn absorb_pan_cycle(g: &Graph, c: &[Vertex]) -> Result<Vec<Path>> {
    let x = c[0];
    let edges = check_cycle(g, c)?;
    let rest = g.remove_edges(&edges.into_iter().collect());
    let mut paths = part(&rest)?;
    let i = path_with_endpoint(&paths, x)
        .ok_or_else(|| Error::Construction("attachment vertex is not a path end".into()))?;
    let k = c.len() / 2;
    let mut p = paths[i].ending_at(x).0;
    p.extend(&c[1..=k]);
    paths[i] = Path(p);
    let mut back = c[k..].to_vec();
    back.push(x);
    paths.push(Path(back));
    Ok(paths)
}

fn dissolve(g: &Graph, v: Vertex, x: Vertex, y: Vertex) -> Result<Vec<Path>> {
    let (vx, vy, xy) = (Edge::new(v, x), Edge::new(v, y), Edge::new(x, y));
    let h = g.with_edges(
        g.edges()
            .iter()
            .copied()
            .filter(|&e| e != vx && e != vy)
            .chain(std::iter::once(xy)),
    );
    let mut paths = part(&h)?;
    for p in &mut paths {
        if let Some(i) = p.0.windows(2).position(|w| Edge::new(w[0], w[1]) == xy) {
            p.0.insert(i + 1, v);
            return Ok(paths);
        }
    }
    Err(Error::Construction("dissolved edge not covered".into()))
}

fn bfs_path(g: &Graph, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[s] = s;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut path = vec![t];
            let mut cur = t;
            while cur != s {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

fn absorb_triangle(g: &Graph, v: Vertex, x: Vertex, y: Vertex) -> Result<Vec<Path>> {
    let removed: HashSet<Edge> = [Edge::new(x, v), Edge::new(v, y), Edge::new(x, y)].into();
    let h = g.remove_edges(&removed);
    let Some(p) = bfs_path(&h, x, y) else {
        let mut paths = part_all(&h)?;
        let ix = path_with_endpoint(&paths, x)
            .ok_or_else(|| Error::Construction("x is not a path end".into()))?;
        let iy = path_with_endpoint(&paths, y)
            .ok_or_else(|| Error::Construction("y is not a path end".into()))?;
        let mut px = paths[ix].ending_at(x).0;
        px.extend([v, y]);
        let mut py = paths[iy].ending_at(y).0;
        py.push(x);
        paths[ix] = Path(px);
        paths[iy] = Path(py);
        return Ok(paths);
    };
    let Some(wi) = (1..p.len() - 1).find(|&i| h.degree(p[i]) == 3) else {
        return Err(Error::Construction(
            "connecting path has no branch vertex".into(),
        ));
    };
    let w = p[wi];
    let on_p: HashSet<Edge> = p.windows(2).map(|s| Edge::new(s[0], s[1])).collect();
    let rest = h.remove_edges(&on_p);
    let mut paths = part_all(&rest)?;
    let qi = path_with_endpoint(&paths, w)
        .ok_or_else(|| Error::Construction("branch vertex is not a path end".into()))?;
    let q = paths[qi].ending_at(w).0;
    let z = q[0];
    let (first, second) = match p.iter().position(|&u| u == z) {
        None => {
            // z Q w P x y  and  x v y P w
            let mut a = q.clone();
            a.extend(p[..wi].iter().rev());
            a.push(y);
            let mut b = vec![x, v];
            b.extend(p[wi..].iter().rev());
            (a, b)
        }
        Some(zi) if zi < wi => {
            // w Q z P x v y  and  z P y x
            let mut a: Vec<Vertex> = q.iter().rev().copied().collect();
            a.extend(p[..zi].iter().rev());
            a.extend([v, y]);
            let mut b = p[zi..].to_vec();
            b.push(x);
            (a, b)
        }
        Some(zi) => {
            // w Q z P y v x  and  z P x y
            let mut a: Vec<Vertex> = q.iter().rev().copied().collect();
            a.extend(&p[zi + 1..]);
            a.extend([v, x]);
            let mut b: Vec<Vertex> = p[..=zi].iter().rev().copied().collect();
            b.push(y);
            (a, b)
        }
    };
    paths[qi] = Path(first);
    paths.push(Path(second));
    Ok(paths)
}
