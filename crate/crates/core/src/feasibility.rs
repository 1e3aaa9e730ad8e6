//! Deciding whether a pattern is the image of some bull-free covering
//! family, by direct search for a variable assignment and a system of
//! internally disjoint connecting paths.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex};
use crate::pattern::{is_covering_family, pair, validate, Frame, Pattern, Symbol};
use crate::structure::is_bull_pair;

/// Variable images and one connecting path per end pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityWitness {
    /// `assignment[i]` is the vertex standing for variable `i`.
    pub assignment: Vec<Vertex>,
    /// Paths between the images of each end pair, read from the image of
    /// the first symbol of the pair.
    pub connecting: Vec<((Symbol, Symbol), Path)>,
}

impl FeasibilityWitness {
    pub fn image(&self, s: Symbol) -> Vertex {
        match s {
            Symbol::Vertex(v) => v,
            Symbol::Var(i) => self.assignment[i],
        }
    }

    fn path_for(&self, a: Symbol, b: Symbol) -> Option<Path> {
        let key = pair(a, b);
        let (k, p) = self.connecting.iter().find(|(k, _)| *k == key)?;
        Some(if k.0 == a { p.clone() } else { p.reversed() })
    }
}

/// Internally disjoint paths for `pairs`: no vertex of one path is an
/// internal vertex of another.
pub fn disjoint_paths(h: &Graph, pairs: &[(Vertex, Vertex)]) -> Result<Option<Vec<Path>>> {
    disjoint_paths_avoiding(h, pairs, &vec![false; h.n()])
}

/// [`disjoint_paths`] where vertices flagged in `forbidden` may not be used
/// as internal vertices either.
pub fn disjoint_paths_avoiding(
    h: &Graph,
    pairs: &[(Vertex, Vertex)],
    forbidden: &[bool],
) -> Result<Option<Vec<Path>>> {
    let mut seen = HashSet::new();
    for &(s, t) in pairs {
        for v in [s, t] {
            if v >= h.n() {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
        }
        if !seen.insert((s.min(t), s.max(t))) {
            return Err(Error::DuplicatePair(
                h.name(s).to_string(),
                h.name(t).to_string(),
            ));
        }
    }
    let mut blocked = forbidden.to_vec();
    for &(s, t) in pairs {
        blocked[s] = true;
        blocked[t] = true;
    }
    let mut r = Router {
        h,
        pairs,
        blocked,
        paths: vec![None; pairs.len()],
    };
    Ok(if r.route() {
        Some(r.paths.into_iter().map(|p| p.expect("routed")).collect())
    } else {
        None
    })
}

struct Router<'a> {
    h: &'a Graph,
    pairs: &'a [(Vertex, Vertex)],
    /// Vertices unusable as internal vertices.
    blocked: Vec<bool>,
    paths: Vec<Option<Path>>,
}

impl Router<'_> {
    fn first_steps(&self, i: usize) -> usize {
        let (s, t) = self.pairs[i];
        if s == t {
            return 0;
        }
        self.h
            .neighbors(s)
            .iter()
            .filter(|&&w| w == t || !self.blocked[w])
            .count()
    }

    fn reachable(&self, s: Vertex, t: Vertex) -> bool {
        if s == t {
            return true;
        }
        let mut seen = vec![false; self.h.n()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in self.h.neighbors(u) {
                if w == t {
                    return true;
                }
                if !seen[w] && !self.blocked[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn route(&mut self) -> bool {
        let open: Vec<usize> = (0..self.pairs.len())
            .filter(|&i| self.paths[i].is_none())
            .collect();
        if open.is_empty() {
            return true;
        }
        if open
            .iter()
            .any(|&i| !self.reachable(self.pairs[i].0, self.pairs[i].1))
        {
            return false;
        }
        let i = *open
            .iter()
            .min_by_key(|&&i| self.first_steps(i))
            .expect("nonempty");
        let (s, t) = self.pairs[i];
        if s == t {
            self.paths[i] = Some(Path::new(vec![s]));
            if self.route() {
                return true;
            }
            self.paths[i] = None;
            return false;
        }
        let mut walk = vec![s];
        self.extend(i, t, &mut walk)
    }

    fn extend(&mut self, i: usize, t: Vertex, walk: &mut Vec<Vertex>) -> bool {
        let u = *walk.last().expect("nonempty");
        if self.h.has_edge(u, t) {
            walk.push(t);
            self.paths[i] = Some(Path::new(walk.clone()));
            if self.route() {
                return true;
            }
            self.paths[i] = None;
            walk.pop();
        }
        for k in 0..self.h.degree(u) {
            let w = self.h.neighbors(u)[k];
            if w == t || self.blocked[w] {
                continue;
            }
            self.blocked[w] = true;
            walk.push(w);
            let done = self.reachable(w, t) && self.extend(i, t, walk);
            walk.pop();
            self.blocked[w] = false;
            if done {
                return true;
            }
        }
        false
    }
}

/// How variable degrees constrain their images.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Demand<'a> {
    /// The image has exactly the variable's degree.
    Exact(&'a [u8]),
    /// The image has at least this degree; used on partial patterns.
    AtLeast(&'a [u8]),
}

impl Demand<'_> {
    fn len(&self) -> usize {
        match self {
            Demand::Exact(d) | Demand::AtLeast(d) => d.len(),
        }
    }

    fn admits(&self, i: usize, degree: usize) -> bool {
        match self {
            Demand::Exact(d) => degree == d[i] as usize,
            Demand::AtLeast(d) => degree >= d[i] as usize,
        }
    }
}

/// Decides whether `p` encodes some bull-free covering family of
/// `(g, v4)` and returns a witness if so.
pub fn check_feasible(g: &Graph, v4: &[Vertex], p: &Pattern) -> Result<Option<FeasibilityWitness>> {
    let frame = Frame::new(g, v4)?;
    validate(g, &frame, p)?;
    let traces: Vec<Vec<Symbol>> = p.traces.iter().map(|t| t.symbols.clone()).collect();
    Ok(feasible_in(
        g,
        &frame,
        &traces,
        Demand::Exact(&p.var_degrees),
    ))
}

/// The search behind [`check_feasible`], on a syntactically valid trace set.
///
/// Variable images are fixed while routing: a connecting path that leaves a
/// known terminal may stop at any admissible vertex for the variable at its
/// other end.
pub(crate) fn feasible_in(
    g: &Graph,
    frame: &Frame,
    traces: &[Vec<Symbol>],
    demand: Demand,
) -> Option<FeasibilityWitness> {
    for t in traces {
        if let (Symbol::Vertex(a), Symbol::Vertex(b)) = (t[0], t[t.len() - 1]) {
            if is_bull_pair(g, a, b) {
                return None;
            }
        }
    }
    let mut ends = Vec::new();
    for t in traces {
        for w in t.windows(2) {
            if !frame.is_high(w[0]) && !frame.is_high(w[1]) {
                ends.push((w[0], w[1]));
            }
        }
    }
    let mut blocked = frame.in_closed.clone();
    for &(a, b) in &ends {
        for s in [a, b] {
            if let Symbol::Vertex(v) = s {
                blocked[v] = true;
            }
        }
    }
    let mut j = Joint {
        g,
        traces,
        ends: &ends,
        demand,
        image: vec![None; demand.len()],
        blocked,
        paths: vec![None; ends.len()],
    };
    if !j.run() {
        return None;
    }
    Some(FeasibilityWitness {
        assignment: j
            .image
            .iter()
            .map(|v| v.expect("every variable has an end pair"))
            .collect(),
        connecting: ends
            .iter()
            .zip(j.paths)
            .map(|(&(a, b), p)| {
                let p = p.expect("routed");
                if (a, b) == pair(a, b) {
                    (pair(a, b), p)
                } else {
                    (pair(a, b), p.reversed())
                }
            })
            .collect(),
    })
}

struct Joint<'a> {
    g: &'a Graph,
    traces: &'a [Vec<Symbol>],
    ends: &'a [(Symbol, Symbol)],
    demand: Demand<'a>,
    image: Vec<Option<Vertex>>,
    /// Vertices unusable as internal vertices or as new images.
    blocked: Vec<bool>,
    /// Routed paths, read from the first symbol of the pair.
    paths: Vec<Option<Path>>,
}

impl Joint<'_> {
    fn image(&self, s: Symbol) -> Option<Vertex> {
        match s {
            Symbol::Vertex(v) => Some(v),
            Symbol::Var(i) => self.image[i],
        }
    }

    fn admits(&self, x: usize, v: Vertex) -> bool {
        !self.blocked[v] && self.demand.admits(x, self.g.degree(v))
    }

    fn assign(&mut self, x: usize, v: Vertex) -> bool {
        self.image[x] = Some(v);
        self.blocked[v] = true;
        let g = self.g;
        let ok = self.traces.iter().all(|t| {
            let (a, b) = (t[0], t[t.len() - 1]);
            if a != Symbol::Var(x) && b != Symbol::Var(x) {
                return true;
            }
            match (self.image(a), self.image(b)) {
                (Some(p), Some(q)) => !is_bull_pair(g, p, q),
                _ => true,
            }
        });
        if !ok {
            self.unassign(x, v);
        }
        ok
    }

    fn unassign(&mut self, x: usize, v: Vertex) {
        self.image[x] = None;
        self.blocked[v] = false;
    }

    /// Whether `t` (or, for an unassigned variable, some admissible vertex)
    /// can be reached from `s` through free vertices.
    fn reachable(&self, s: Vertex, t: Symbol) -> bool {
        let goal = |w: Vertex| match (t, self.image(t)) {
            (_, Some(v)) => w == v,
            (Symbol::Var(x), None) => self.admits(x, w),
            _ => false,
        };
        let mut seen = vec![false; self.g.n()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in self.g.neighbors(u) {
                if goal(w) {
                    return true;
                }
                if !seen[w] && !self.blocked[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn first_steps(&self, s: Vertex, t: Symbol) -> usize {
        let target = self.image(t);
        self.g
            .neighbors(s)
            .iter()
            .filter(|&&w| Some(w) == target || !self.blocked[w])
            .count()
    }

    fn run(&mut self) -> bool {
        let open: Vec<usize> = (0..self.ends.len())
            .filter(|&i| self.paths[i].is_none())
            .collect();
        if open.is_empty() {
            return true;
        }
        // route from a known end; the other end may still be a variable
        let mut pick: Option<(usize, bool, usize)> = None;
        for &i in &open {
            let (a, b) = self.ends[i];
            let (ia, ib) = (self.image(a), self.image(b));
            let (from_a, s, t) = match (ia, ib) {
                (Some(s), _) => (true, s, b),
                (None, Some(s)) => (false, s, a),
                (None, None) => continue,
            };
            if !self.reachable(s, t) {
                return false;
            }
            let known = usize::from(ia.is_some() && ib.is_some());
            let score = (1 - known) * 1000 + self.first_steps(s, t);
            if pick.is_none_or(|p| score < p.2) {
                pick = Some((i, from_a, score));
            }
        }
        let Some((i, from_a, _)) = pick else {
            // only pairs of unassigned variables remain
            let Symbol::Var(x) = self.ends[open[0]].0 else {
                unreachable!("vertex symbols are always known")
            };
            for v in self.g.vertices() {
                if self.admits(x, v) && self.assign(x, v) {
                    if self.run() {
                        return true;
                    }
                    self.unassign(x, v);
                }
            }
            return false;
        };
        let (a, b) = self.ends[i];
        let (s, t) = if from_a { (a, b) } else { (b, a) };
        let start = self.image(s).expect("known end");
        let mut walk = vec![start];
        self.extend(i, from_a, t, &mut walk)
    }

    fn finish(&mut self, i: usize, from_a: bool, walk: &[Vertex]) -> bool {
        let p = Path::new(walk.to_vec());
        self.paths[i] = Some(if from_a { p } else { p.reversed() });
        if self.run() {
            return true;
        }
        self.paths[i] = None;
        false
    }

    fn extend(&mut self, i: usize, from_a: bool, t: Symbol, walk: &mut Vec<Vertex>) -> bool {
        let u = *walk.last().expect("nonempty");
        let target = self.image(t);
        for k in 0..self.g.degree(u) {
            let w = self.g.neighbors(u)[k];
            if Some(w) == target {
                walk.push(w);
                let done = self.finish(i, from_a, walk);
                walk.pop();
                if done {
                    return true;
                }
                continue;
            }
            if self.blocked[w] {
                continue;
            }
            if let (Symbol::Var(x), None) = (t, target) {
                if self.admits(x, w) && self.assign(x, w) {
                    walk.push(w);
                    let done = self.finish(i, from_a, walk);
                    walk.pop();
                    if done {
                        return true;
                    }
                    self.unassign(x, w);
                }
            }
            self.blocked[w] = true;
            walk.push(w);
            let done = self.reachable(w, t) && self.extend(i, from_a, t, walk);
            walk.pop();
            self.blocked[w] = false;
            if done {
                return true;
            }
        }
        false
    }
}

/// The covering family behind a witness: each trace with its end pairs
/// replaced by their connecting paths.
pub fn realize_family(
    g: &Graph,
    v4: &[Vertex],
    p: &Pattern,
    w: &FeasibilityWitness,
) -> Result<Vec<Path>> {
    let frame = Frame::new(g, v4)?;
    let bad = |msg: &str| Error::InvalidWitness(msg.to_string());
    if w.assignment.len() != p.num_vars() {
        return Err(bad("assignment does not match the variables"));
    }
    let mut family = Vec::with_capacity(p.traces.len());
    for t in &p.traces {
        let s = &t.symbols;
        let mut walk = vec![w.image(s[0])];
        for win in s.windows(2) {
            let (a, b) = (win[0], win[1]);
            if frame.is_high(a) || frame.is_high(b) {
                walk.push(w.image(b));
            } else {
                let c = w
                    .path_for(a, b)
                    .ok_or_else(|| bad("missing connecting path"))?;
                if c.first() != w.image(a) || c.last() != w.image(b) {
                    return Err(bad("connecting path has the wrong ends"));
                }
                walk.extend_from_slice(&c.vertices()[1..]);
            }
        }
        family.push(Path::new(walk));
    }
    is_covering_family(g, &frame, &family).map_err(|e| Error::InvalidWitness(e.to_string()))?;
    for q in &family {
        if is_bull_pair(g, q.first(), q.last()) {
            return Err(bad("a path ends in a bull pair"));
        }
    }
    Ok(family)
}
