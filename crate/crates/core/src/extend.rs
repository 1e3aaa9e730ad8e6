//! Lengthening paths of a covering family until the rest of the graph has
//! no pan cycle and no component that is a cycle or a subdivided diamond.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Path, Vertex};
use crate::pattern::{is_covering_family, Frame};
use crate::structure::{
    analyze, classify_edges, cycle_order, diamond_arcs, is_bull_pair, ComponentKind,
};

fn fail(msg: impl Into<String>) -> Error {
    Error::Construction(msg.into())
}

/// Extends paths of the bull-free covering family `q` of the nice graph `g`
/// so that `g - q'` has no pan cycles and no cycle or subdivided diamond
/// components, keeping the number of paths and the number of odd vertices of
/// the remainder.
pub fn extend_for_witness(g: &Graph, v4: &[Vertex], q: &[Path]) -> Result<Vec<Path>> {
    let frame = Frame::new(g, v4)?;
    is_covering_family(g, &frame, q)?;
    check_bull_free(g, q)?;
    let mut e = Extender {
        g,
        paths: q.iter().map(|p| p.vertices().to_vec()).collect(),
    };
    let odd_before = e.rest().odd_count();
    e.kill_pan_cycles()?;
    e.kill_cycles()?;
    e.kill_diamonds()?;
    let out: Vec<Path> = e.paths.into_iter().map(Path::new).collect();

    if out.len() != q.len() {
        return Err(fail("family size changed"));
    }
    is_covering_family(g, &frame, &out).map_err(|err| fail(err.to_string()))?;
    check_bull_free(g, &out).map_err(|err| fail(err.to_string()))?;
    let rest = g.remove_paths(&out)?;
    if rest.odd_count() != odd_before {
        return Err(fail("odd vertex count of the remainder changed"));
    }
    if !analyze(&rest).pan_cycles.is_empty() {
        return Err(fail("a pan cycle remains"));
    }
    for c in rest.component_sets() {
        if bad_component(&rest, &c) {
            return Err(fail("a cycle or diamond component remains"));
        }
    }
    Ok(out)
}

fn check_bull_free(g: &Graph, q: &[Path]) -> Result<()> {
    for p in q {
        let (a, b) = p.endpoints();
        if is_bull_pair(g, a, b) {
            return Err(Error::NotBullFree(g.name(a).into(), g.name(b).into()));
        }
    }
    Ok(())
}

/// The edge-bearing component on `c`, in the index space of `g`.
fn component(g: &Graph, c: &[Vertex]) -> Graph {
    let inside: HashSet<Vertex> = c.iter().copied().collect();
    g.with_edges(g.edges().iter().copied().filter(|e| inside.contains(&e.0)))
}

fn bad_component(rest: &Graph, c: &[Vertex]) -> bool {
    c.len() > 1 && classify_edges(&component(rest, c)) != ComponentKind::Other
}

/// Vertices from `cyc[i]` to `cyc[j]`, walking forward or backward.
fn arc(cyc: &[Vertex], i: usize, j: usize, forward: bool) -> Vec<Vertex> {
    let n = cyc.len();
    let mut out = vec![cyc[i]];
    let mut k = i;
    while k != j {
        k = if forward {
            (k + 1) % n
        } else {
            (k + n - 1) % n
        };
        out.push(cyc[k]);
    }
    out
}

struct Extender<'a> {
    g: &'a Graph,
    paths: Vec<Vec<Vertex>>,
}

impl Extender<'_> {
    fn rest(&self) -> Graph {
        let used: HashSet<Edge> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| Edge::new(w[0], w[1])))
            .collect();
        self.g.remove_edges(&used)
    }

    /// Index of the path with endpoint `v`.
    fn ending_at(&self, v: Vertex) -> Result<usize> {
        self.paths
            .iter()
            .position(|p| p[0] == v || p[p.len() - 1] == v)
            .ok_or_else(|| fail(format!("no path ends at {}", self.g.name(v))))
    }

    fn orient_to_end(&mut self, i: usize, v: Vertex) {
        if self.paths[i][0] == v {
            self.paths[i].reverse();
        }
    }

    fn other_end(&self, i: usize, v: Vertex) -> Vertex {
        let p = &self.paths[i];
        if p[0] == v {
            p[p.len() - 1]
        } else {
            p[0]
        }
    }

    /// Appends `tail` (which starts at the current last vertex) to path `i`.
    fn append(&mut self, i: usize, tail: &[Vertex]) {
        self.paths[i].extend_from_slice(&tail[1..]);
    }

    fn prepend(&mut self, i: usize, head: &[Vertex]) {
        let mut p = head[..head.len() - 1].to_vec();
        p.extend_from_slice(&self.paths[i]);
        self.paths[i] = p;
    }

    fn kill_pan_cycles(&mut self) -> Result<()> {
        for _ in 0..=self.g.m() {
            let rest = self.rest();
            let report = analyze(&rest);
            let Some(c) = report.pan_cycles.into_iter().min() else {
                return Ok(());
            };
            // c[0] is the vertex of degree 3 in the remainder
            let vi = (1..c.len())
                .filter(|&i| self.g.degree(c[i]) != 2)
                .min_by_key(|&i| c[i])
                .ok_or_else(|| fail("pan cycle of the remainder is a pan cycle of the graph"))?;
            let v = c[vi];
            let pi = self.ending_at(v)?;
            let v2 = self.other_end(pi, v);
            // from v to w = c[0], avoiding v2 when it lies on the cycle
            let back = arc(&c, vi, 0, false);
            let fwd = arc(&c, vi, 0, true);
            let c0 = if back.contains(&v2) { fwd } else { back };
            self.orient_to_end(pi, v);
            self.append(pi, &c0);
        }
        Err(fail("pan cycle removal does not terminate"))
    }

    fn kill_cycles(&mut self) -> Result<()> {
        let rest = self.rest();
        for c in rest.component_sets() {
            if c.len() < 3 {
                continue;
            }
            let comp = component(&rest, &c);
            if classify_edges(&comp) != ComponentKind::Cycle {
                continue;
            }
            let cyc = cycle_order(&comp);
            self.kill_cycle(&cyc)?;
        }
        Ok(())
    }

    fn kill_cycle(&mut self, cyc: &[Vertex]) -> Result<()> {
        let g = self.g;
        let w: Vec<Vertex> = cyc.iter().copied().filter(|&u| g.degree(u) != 2).collect();
        let mut chosen = None;
        'outer: for (a, &x) in w.iter().enumerate() {
            for &y in &w[a + 1..] {
                if self.ending_at(x)? != self.ending_at(y)? {
                    chosen = Some((x, y));
                    break 'outer;
                }
            }
        }
        let (x, y) = chosen.ok_or_else(|| fail("cycle component without two distinct paths"))?;
        let (px, py) = (self.ending_at(x)?, self.ending_at(y)?);
        let (xp, yp) = (self.other_end(px, x), self.other_end(py, y));
        let pos = |u: Vertex| cyc.iter().position(|&c| c == u);
        match (pos(xp), pos(yp)) {
            (Some(_), Some(_)) => self.kill_cycle_closed(cyc, px, x, xp, py, y, yp),
            (xi, yi) => {
                // make y' the endpoint off the cycle
                let (px, x, xi, py, y) = if yi.is_none() {
                    (px, x, xi, py, y)
                } else {
                    (py, y, yi, px, x)
                };
                let (ix, iy) = (pos(x).expect("on cycle"), pos(y).expect("on cycle"));
                let fwd = arc(cyc, ix, iy, true);
                let back = arc(cyc, ix, iy, false);
                let (cx, cy) = match xi {
                    Some(i) if fwd.contains(&cyc[i]) => (back, fwd),
                    _ => (fwd, back),
                };
                self.orient_to_end(px, x);
                self.append(px, &cx);
                self.orient_to_end(py, y);
                let cy_from_y: Vec<Vertex> = cy.into_iter().rev().collect();
                self.append(py, &cy_from_y);
                Ok(())
            }
        }
    }

    /// Both far endpoints lie on the cycle. The roles of the two paths, of
    /// the two ends of each path and the direction of travel are chosen so
    /// that the four vertices appear in one of two cyclic orders.
    #[allow(clippy::too_many_arguments)]
    fn kill_cycle_closed(
        &mut self,
        cyc: &[Vertex],
        px: usize,
        x: Vertex,
        xp: Vertex,
        py: usize,
        y: Vertex,
        yp: Vertex,
    ) -> Result<()> {
        let pos = |u: Vertex| cyc.iter().position(|&c| c == u).expect("on cycle");
        let n = cyc.len();
        for swap in [false, true] {
            for flip_x in [false, true] {
                for flip_y in [false, true] {
                    for forward in [true, false] {
                        let (mut a, mut a2, mut pa) = (x, xp, px);
                        let (mut b, mut b2, mut pb) = (y, yp, py);
                        if flip_x {
                            std::mem::swap(&mut a, &mut a2);
                        }
                        if flip_y {
                            std::mem::swap(&mut b, &mut b2);
                        }
                        if swap {
                            std::mem::swap(&mut a, &mut b);
                            std::mem::swap(&mut a2, &mut b2);
                            std::mem::swap(&mut pa, &mut pb);
                        }
                        let rank = |u: Vertex| {
                            let d = (pos(u) + n - pos(a)) % n;
                            if forward {
                                d
                            } else {
                                (n - d) % n
                            }
                        };
                        let (ra2, rb, rb2) = (rank(a2), rank(b), rank(b2));
                        let (ia, ia2, ib, ib2) = (pos(a), pos(a2), pos(b), pos(b2));
                        if ra2 < rb && rb < rb2 {
                            // order a, a', b, b': the a-side arc from a' to b'
                            // runs through b, the other through a
                            let cb = arc(cyc, ia2, ib2, forward);
                            let ca = arc(cyc, ib2, ia2, forward);
                            self.orient_to_end(pa, a2);
                            self.append(pa, &cb);
                            self.orient_to_end(pb, b2);
                            self.append(pb, &ca);
                            return Ok(());
                        }
                        if rb < ra2 && ra2 < rb2 {
                            // order a, b, a', b'
                            let c1 = arc(cyc, ia, ib, forward);
                            let c2 = arc(cyc, ib, ia2, forward);
                            let c3 = arc(cyc, ia2, ib2, forward);
                            let c4 = arc(cyc, ib2, ia, forward);
                            self.orient_to_end(pa, a2);
                            self.append(pa, &c3);
                            let c1_rev: Vec<Vertex> = c1.into_iter().rev().collect();
                            self.prepend(pa, &c1_rev);
                            self.orient_to_end(pb, b2);
                            self.append(pb, &c4);
                            let c2_rev: Vec<Vertex> = c2.into_iter().rev().collect();
                            self.prepend(pb, &c2_rev);
                            return Ok(());
                        }
                    }
                }
            }
        }
        Err(fail("no admissible order on a cycle component"))
    }

    fn kill_diamonds(&mut self) -> Result<()> {
        let rest = self.rest();
        for c in rest.component_sets() {
            if c.len() < 4 {
                continue;
            }
            let comp = component(&rest, &c);
            let Some((_, _, arcs)) = diamond_arcs(&comp) else {
                continue;
            };
            let g = self.g;
            let Some((ai, zi)) = arcs.iter().enumerate().find_map(|(i, a)| {
                a.interior
                    .iter()
                    .position(|&u| g.degree(u) != 2)
                    .map(|k| (i, k))
            }) else {
                return Err(fail("diamond component detached from the rest"));
            };
            let a = arcs[ai].vertices();
            let z = a[zi + 1];
            let others: Vec<Vec<Vertex>> = (0..3)
                .filter(|&i| i != ai)
                .map(|i| arcs[i].vertices())
                .collect();
            // d_y runs from x along the second other arc to y, then back
            // along a to z; d_x from y along the first other arc to x, then
            // along a to z
            let mut d_y = others[1].clone();
            d_y.extend(a[zi + 1..a.len() - 1].iter().rev());
            let mut d_x: Vec<Vertex> = others[0].iter().rev().copied().collect();
            d_x.extend(&a[1..=zi + 1]);
            let pz = self.ending_at(z)?;
            let zp = self.other_end(pz, z);
            self.orient_to_end(pz, z);
            if !d_y.contains(&zp) {
                let from_z: Vec<Vertex> = d_y.into_iter().rev().collect();
                self.append(pz, &from_z);
            } else {
                let from_z: Vec<Vertex> = d_x.into_iter().rev().collect();
                self.append(pz, &from_z);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn wheel_rim_is_absorbed() {
        let g = parse_graph("e h a\ne h b\ne h c\ne h d\ne a b\ne b c\ne c d\ne d a").unwrap();
        let v4 = g.high_vertices();
        let q: Vec<Path> = [["a", "h", "b"], ["c", "h", "d"]]
            .iter()
            .map(|p| Path::from_names(&g, p).unwrap())
            .collect();
        let out = extend_for_witness(&g, &v4, &q).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(g.remove_paths(&out).unwrap().m(), 0);
    }

    #[test]
    fn fixpoint() {
        let g = parse_graph("e v a\ne v b\ne v c\ne v d").unwrap();
        let v4 = g.high_vertices();
        let q: Vec<Path> = [["a", "v", "b"], ["c", "v", "d"]]
            .iter()
            .map(|p| Path::from_names(&g, p).unwrap())
            .collect();
        assert_eq!(extend_for_witness(&g, &v4, &q).unwrap(), q);
    }
}
