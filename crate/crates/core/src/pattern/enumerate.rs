//! Depth-first construction of patterns, one representative per
//! equivalence class.
//!
//! Every new trace is seeded with the smallest uncovered edge at the high
//! set, read from its smaller endpoint, grown to the right and then to the
//! left. This fixes trace order, trace orientation and the numbering of the
//! variables, so each class is built exactly once.

use std::collections::{HashSet, VecDeque};
use std::ops::ControlFlow;

use crate::error::Result;
use crate::graph::{Edge, Graph, Vertex};

use super::{pair, Frame, Pattern, Symbol};

/// Bookkeeping visible to a [`Guide`].
#[derive(Clone, Debug, Default)]
pub(crate) struct SearchState {
    /// Completed traces.
    pub traces: Vec<Vec<Symbol>>,
    /// Trace degree sums of the vertices, including the open trace.
    pub usage_v: Vec<u8>,
    /// Trace degree sums of the variables introduced so far.
    pub usage_x: Vec<u8>,
}

/// Hooks steering [`search`].
pub(crate) trait Guide {
    /// Whether `a` and `b` may be consecutive outside the high set.
    fn allow_link(&mut self, _a: Symbol, _b: Symbol) -> bool {
        true
    }

    /// Called after each completed trace; `false` prunes the branch.
    fn accept_partial(&mut self, _state: &SearchState) -> bool {
        true
    }

    /// Called once per complete trace set. Variable degrees are left to
    /// the guide.
    fn visit(&mut self, state: &SearchState) -> ControlFlow<()>;
}

/// Runs the construction with at most `var_cap` variables.
pub(crate) fn search<G: Guide>(g: &Graph, frame: &Frame, var_cap: usize, guide: &mut G) {
    let link_budget = g
        .vertices()
        .map(|v| {
            if frame.in_v4[v] {
                0
            } else {
                g.neighbors(v).iter().filter(|&&w| !frame.in_v4[w]).count()
            }
        })
        .collect();
    let rim = g
        .vertices()
        .filter(|&v| frame.in_closed[v] && !frame.in_v4[v])
        .collect();
    let mut s = Search {
        g,
        frame,
        var_cap,
        guide,
        rim,
        link_budget,
        links: vec![0; g.n()],
        covered: vec![false; frame.v4_edges.len()],
        ends: HashSet::new(),
        in_cur_v: vec![false; g.n()],
        in_cur_x: vec![false; var_cap],
        cur: VecDeque::new(),
        state: SearchState {
            traces: Vec::new(),
            usage_v: vec![0; g.n()],
            usage_x: Vec::new(),
        },
        stopped: false,
    };
    s.open();
}

struct Search<'a, G> {
    g: &'a Graph,
    frame: &'a Frame,
    var_cap: usize,
    guide: &'a mut G,
    rim: Vec<Vertex>,
    link_budget: Vec<usize>,
    links: Vec<usize>,
    covered: Vec<bool>,
    ends: HashSet<(Symbol, Symbol)>,
    in_cur_v: Vec<bool>,
    in_cur_x: Vec<bool>,
    cur: VecDeque<Symbol>,
    state: SearchState,
    stopped: bool,
}

#[derive(Clone, Copy)]
enum Step {
    Edge(usize),
    Link,
}

impl<G: Guide> Search<'_, G> {
    fn in_cur(&self, s: Symbol) -> bool {
        match s {
            Symbol::Vertex(v) => self.in_cur_v[v],
            Symbol::Var(i) => self.in_cur_x[i],
        }
    }

    fn set_in_cur(&mut self, s: Symbol, on: bool) {
        match s {
            Symbol::Vertex(v) => self.in_cur_v[v] = on,
            Symbol::Var(i) => self.in_cur_x[i] = on,
        }
    }

    fn bump(&mut self, s: Symbol, up: bool) {
        let slot = match s {
            Symbol::Vertex(v) => &mut self.state.usage_v[v],
            Symbol::Var(i) => &mut self.state.usage_x[i],
        };
        if up {
            *slot += 1;
        } else {
            *slot -= 1;
        }
    }

    fn can_link(&self, s: Symbol) -> bool {
        match s {
            Symbol::Vertex(v) => self.links[v] < self.link_budget[v],
            Symbol::Var(i) => i == self.state.usage_x.len() || self.state.usage_x[i] < 3,
        }
    }

    fn open(&mut self) {
        let Some(i) = self.covered.iter().position(|c| !c) else {
            if self.guide.visit(&self.state).is_break() {
                self.stopped = true;
            }
            return;
        };
        let Edge(p, q) = self.frame.v4_edges[i];
        self.covered[i] = true;
        for v in [p, q] {
            self.cur.push_back(Symbol::Vertex(v));
            self.in_cur_v[v] = true;
            self.state.usage_v[v] += 1;
        }
        self.grow(true);
        for v in [p, q] {
            self.in_cur_v[v] = false;
            self.state.usage_v[v] -= 1;
        }
        self.cur.clear();
        self.covered[i] = false;
    }

    fn close(&mut self) {
        let t: Vec<Symbol> = self.cur.iter().copied().collect();
        let saved = std::mem::take(&mut self.cur);
        for &s in &t {
            self.set_in_cur(s, false);
        }
        self.state.traces.push(t);
        if self.guide.accept_partial(&self.state) {
            self.open();
        }
        let t = self.state.traces.pop().expect("pushed above");
        for &s in &t {
            self.set_in_cur(s, true);
        }
        self.cur = saved;
    }

    fn grow(&mut self, right: bool) {
        if right {
            self.grow(false);
        } else {
            self.close();
        }
        if self.stopped {
            return;
        }
        let end = if right {
            *self.cur.back().expect("open trace")
        } else {
            *self.cur.front().expect("open trace")
        };
        for (next, step) in self.candidates(end) {
            self.apply(end, next, step, right, true);
            self.grow(right);
            self.apply(end, next, step, right, false);
            if self.stopped {
                return;
            }
        }
    }

    fn candidates(&mut self, end: Symbol) -> Vec<(Symbol, Step)> {
        let mut out = Vec::new();
        let frame = self.frame;
        if let Symbol::Vertex(v) = end {
            for &w in self.g.neighbors(v) {
                if !(frame.in_v4[v] || frame.in_v4[w]) || self.in_cur_v[w] {
                    continue;
                }
                let i = frame.v4_edge_index[&Edge::new(v, w)];
                if !self.covered[i] {
                    out.push((Symbol::Vertex(w), Step::Edge(i)));
                }
            }
            if frame.in_v4[v] {
                return out;
            }
        }
        if !self.can_link(end) {
            return out;
        }
        let nvars = self.state.usage_x.len();
        let rim = std::mem::take(&mut self.rim);
        let others = rim.iter().map(|&b| Symbol::Vertex(b)).chain(
            (0..nvars.min(self.var_cap) + usize::from(nvars < self.var_cap)).map(Symbol::Var),
        );
        for b in others {
            if b == end || self.in_cur(b) || !self.can_link(b) {
                continue;
            }
            if self.ends.contains(&pair(end, b)) || !self.guide.allow_link(end, b) {
                continue;
            }
            out.push((b, Step::Link));
        }
        self.rim = rim;
        out
    }

    fn apply(&mut self, end: Symbol, next: Symbol, step: Step, right: bool, on: bool) {
        if on {
            if let Symbol::Var(i) = next {
                if i == self.state.usage_x.len() {
                    self.state.usage_x.push(0);
                }
            }
            if right {
                self.cur.push_back(next);
            } else {
                self.cur.push_front(next);
            }
        } else if right {
            self.cur.pop_back();
        } else {
            self.cur.pop_front();
        }
        self.set_in_cur(next, on);
        self.bump(end, on);
        self.bump(next, on);
        match step {
            Step::Edge(i) => self.covered[i] = on,
            Step::Link => {
                for s in [end, next] {
                    if let Symbol::Vertex(v) = s {
                        if on {
                            self.links[v] += 1;
                        } else {
                            self.links[v] -= 1;
                        }
                    }
                }
                if on {
                    self.ends.insert(pair(end, next));
                } else {
                    self.ends.remove(&pair(end, next));
                }
            }
        }
        if !on {
            if let Symbol::Var(i) = next {
                if i + 1 == self.state.usage_x.len() && self.state.usage_x[i] == 0 {
                    self.state.usage_x.pop();
                }
            }
        }
    }
}

/// Largest useful number of variables.
pub(crate) fn var_cap(g: &Graph, frame: &Frame, l_max: usize) -> usize {
    l_max
        .min(16 * g.high())
        .min(frame.in_closed.iter().filter(|&&c| !c).count())
}

struct Emit<F> {
    f: F,
}

impl<F: FnMut(Pattern) -> ControlFlow<()>> Guide for Emit<F> {
    fn visit(&mut self, state: &SearchState) -> ControlFlow<()> {
        let lows: Vec<u8> = state.usage_x.iter().map(|&u| u.max(1)).collect();
        let mut d = lows.clone();
        loop {
            (self.f)(Pattern::new(state.traces.clone(), d.clone()))?;
            let mut i = 0;
            loop {
                if i == d.len() {
                    return ControlFlow::Continue(());
                }
                if d[i] < 3 {
                    d[i] += 1;
                    break;
                }
                d[i] = lows[i];
                i += 1;
            }
        }
    }
}

/// Calls `f` on every valid pattern with at most `l_max` variables whose
/// traces all meet the high set, one per equivalence class, until `f`
/// breaks.
pub fn for_each_pattern<F>(g: &Graph, v4: &[Vertex], l_max: usize, f: F) -> Result<()>
where
    F: FnMut(Pattern) -> ControlFlow<()>,
{
    let frame = Frame::new(g, v4)?;
    let cap = var_cap(g, &frame, l_max);
    search(g, &frame, cap, &mut Emit { f });
    Ok(())
}

/// Collects [`for_each_pattern`].
pub fn enumerate_patterns(g: &Graph, v4: &[Vertex], l_max: usize) -> Result<Vec<Pattern>> {
    let mut out = Vec::new();
    for_each_pattern(g, v4, l_max, |p| {
        out.push(p);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}
