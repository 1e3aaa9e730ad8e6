//! Traces and patterns: compressed descriptions of how a family of paths
//! passes through the closed neighborhood of the high-degree vertices.

mod encode;
mod enumerate;

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

pub use encode::{encode, encode_with_assignment, is_covering_family};
pub use enumerate::{enumerate_patterns, for_each_pattern};
pub(crate) use enumerate::{search, var_cap, Guide, SearchState};

/// A trace symbol: a vertex of the closed neighborhood of the high set, or a
/// variable standing for some vertex outside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symbol {
    Vertex(Vertex),
    /// Zero-based variable index.
    Var(usize),
}

/// Unordered symbol pair in normal form.
pub(crate) fn pair(a: Symbol, b: Symbol) -> (Symbol, Symbol) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trace {
    pub symbols: Vec<Symbol>,
}

impl Trace {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Trace { symbols }
    }

    pub fn endpoints(&self) -> (Symbol, Symbol) {
        (self.symbols[0], self.symbols[self.symbols.len() - 1])
    }
}

/// A set of traces with a degree in `1..=3` for each variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pattern {
    pub traces: Vec<Trace>,
    /// `var_degrees[i]` is the required degree of variable `i`.
    pub var_degrees: Vec<u8>,
}

impl Pattern {
    pub fn new(traces: Vec<Vec<Symbol>>, var_degrees: Vec<u8>) -> Self {
        Pattern {
            traces: traces.into_iter().map(Trace::new).collect(),
            var_degrees,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.var_degrees.len()
    }

    /// Total number of symbols over all traces.
    pub fn total_length(&self) -> usize {
        self.traces.iter().map(|t| t.symbols.len()).sum()
    }
}

/// Precomputed view of `(g, v4)` shared by the pattern routines.
#[derive(Clone, Debug)]
pub struct Frame {
    pub v4: Vec<Vertex>,
    pub in_v4: Vec<bool>,
    /// Membership in the closed neighborhood of `v4`.
    pub in_closed: Vec<bool>,
    /// Edges with an endpoint in `v4`, sorted.
    pub v4_edges: Vec<Edge>,
    pub v4_edge_index: HashMap<Edge, usize>,
}

impl Frame {
    pub fn new(g: &Graph, v4: &[Vertex]) -> Result<Frame> {
        if v4.is_empty() {
            return Err(Error::EmptyHighSet);
        }
        let mut in_v4 = vec![false; g.n()];
        for &v in v4 {
            if v >= g.n() {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
            in_v4[v] = true;
        }
        let mut in_closed = in_v4.clone();
        for &v in v4 {
            for &w in g.neighbors(v) {
                in_closed[w] = true;
            }
        }
        let v4_edges: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| in_v4[e.0] || in_v4[e.1])
            .collect();
        let v4_edge_index = v4_edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut sorted = v4.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Ok(Frame {
            v4: sorted,
            in_v4,
            in_closed,
            v4_edges,
            v4_edge_index,
        })
    }

    /// The frame of the vertices of degree at least four.
    pub fn of(g: &Graph) -> Result<Frame> {
        Frame::new(g, &g.high_vertices())
    }

    pub fn is_high(&self, s: Symbol) -> bool {
        matches!(s, Symbol::Vertex(v) if self.in_v4[v])
    }

    /// Vertices outside the closed neighborhood.
    pub fn outside(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.in_closed.len()).filter(|&v| !self.in_closed[v])
    }
}

fn bad(msg: String) -> Error {
    Error::InvalidPattern(msg)
}

/// Checks the trace syntax and the five pattern conditions, reporting the
/// first violation.
pub fn validate(g: &Graph, frame: &Frame, p: &Pattern) -> Result<()> {
    let show = |s: Symbol| symbol_name(g, s);
    let mut ends: HashSet<(Symbol, Symbol)> = HashSet::new();
    let mut edges: HashSet<Edge> = HashSet::new();
    let mut usage: HashMap<Symbol, usize> = HashMap::new();
    for (ti, t) in p.traces.iter().enumerate() {
        let s = &t.symbols;
        if s.len() < 2 {
            return Err(bad(format!("trace {ti} has fewer than two symbols")));
        }
        let mut seen = HashSet::new();
        for &sym in s {
            match sym {
                Symbol::Vertex(v) if v >= g.n() || !frame.in_closed[v] => {
                    return Err(bad(format!(
                        "trace {ti}: {} is outside the closed neighborhood",
                        if v < g.n() {
                            show(sym)
                        } else {
                            format!("#{v}")
                        }
                    )))
                }
                Symbol::Var(i) if i >= p.num_vars() => {
                    return Err(bad(format!("trace {ti}: undeclared variable x{}", i + 1)))
                }
                _ => {}
            }
            if !seen.insert(sym) {
                return Err(bad(format!("trace {ti}: {} occurs twice", show(sym))));
            }
        }
        let mut local_ends = HashSet::new();
        for w in s.windows(2) {
            let (a, b) = (w[0], w[1]);
            *usage.entry(a).or_default() += 1;
            *usage.entry(b).or_default() += 1;
            if frame.is_high(a) || frame.is_high(b) {
                let (Symbol::Vertex(x), Symbol::Vertex(y)) = (a, b) else {
                    return Err(bad(format!(
                        "trace {ti}: variable next to high vertex in {}{}",
                        show(a),
                        show(b)
                    )));
                };
                if !g.has_edge(x, y) {
                    return Err(bad(format!(
                        "trace {ti}: {}{} is not an edge",
                        show(a),
                        show(b)
                    )));
                }
                if !edges.insert(Edge::new(x, y)) {
                    return Err(bad(format!(
                        "edge {}{} appears in two traces",
                        show(a),
                        show(b)
                    )));
                }
            } else {
                local_ends.insert(pair(a, b));
            }
        }
        for e in local_ends {
            if !ends.insert(e) {
                return Err(bad(format!(
                    "end pair {}{} appears in two traces",
                    show(e.0),
                    show(e.1)
                )));
            }
        }
    }
    if let Some(e) = frame.v4_edges.iter().find(|e| !edges.contains(e)) {
        return Err(bad(format!("edge {} is not covered", g.edge_name(*e))));
    }
    for (i, &d) in p.var_degrees.iter().enumerate() {
        if !(1..=3).contains(&d) {
            return Err(bad(format!("x{} has degree {d} outside 1..=3", i + 1)));
        }
        let u = usage.get(&Symbol::Var(i)).copied().unwrap_or(0);
        if u > d as usize {
            return Err(bad(format!(
                "x{} is used {u} times but has degree {d}",
                i + 1
            )));
        }
    }
    for (&sym, &u) in &usage {
        if let Symbol::Vertex(v) = sym {
            if u > g.degree(v) {
                return Err(bad(format!(
                    "{} is used {u} times but has degree {}",
                    show(sym),
                    g.degree(v)
                )));
            }
        }
    }
    Ok(())
}

/// Whether `p` satisfies every pattern condition against `(g, v4)`.
pub fn pattern_valid(g: &Graph, v4: &[Vertex], p: &Pattern) -> bool {
    Frame::new(g, v4).and_then(|f| validate(g, &f, p)).is_ok()
}

/// Sum of trace degrees per symbol.
pub(crate) fn usage_of(p: &Pattern) -> HashMap<Symbol, usize> {
    let mut usage: HashMap<Symbol, usize> = HashMap::new();
    for t in &p.traces {
        for w in t.symbols.windows(2) {
            *usage.entry(w[0]).or_default() += 1;
            *usage.entry(w[1]).or_default() += 1;
        }
    }
    usage
}

/// Oddity change of one symbol of base degree `degree` used `usage` times.
pub(crate) fn oddity(degree: usize, usage: usize) -> i64 {
    match (usage % 2, degree % 2) {
        (1, 0) => 1,
        (1, _) => -1,
        _ => 0,
    }
}

/// Number of symbols gaining oddity minus the number losing it.
pub fn odd_number(g: &Graph, v4: &[Vertex], p: &Pattern) -> Result<i64> {
    let frame = Frame::new(g, v4)?;
    validate(g, &frame, p)?;
    Ok(odd_number_unchecked(g, p))
}

pub(crate) fn odd_number_unchecked(g: &Graph, p: &Pattern) -> i64 {
    usage_of(p)
        .into_iter()
        .map(|(s, u)| match s {
            Symbol::Vertex(v) => oddity(g.degree(v), u),
            Symbol::Var(i) => oddity(p.var_degrees[i] as usize, u),
        })
        .sum()
}

/// Canonical representative under variable renaming, trace reversal and
/// trace reordering.
pub fn canonical_form(p: &Pattern) -> (Vec<Vec<Symbol>>, Vec<u8>) {
    let k = p.num_vars();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut best: Option<(Vec<Vec<Symbol>>, Vec<u8>)> = None;
    loop {
        let map = |s: Symbol| match s {
            Symbol::Var(i) => Symbol::Var(perm[i]),
            v => v,
        };
        let mut traces: Vec<Vec<Symbol>> = p
            .traces
            .iter()
            .map(|t| {
                let fwd: Vec<Symbol> = t.symbols.iter().map(|&s| map(s)).collect();
                let rev: Vec<Symbol> = fwd.iter().rev().copied().collect();
                fwd.min(rev)
            })
            .collect();
        traces.sort();
        let mut d = vec![0u8; k];
        for (i, &deg) in p.var_degrees.iter().enumerate() {
            d[perm[i]] = deg;
        }
        let cand = (traces, d);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.expect("at least the identity permutation")
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub(crate) fn symbol_name(g: &Graph, s: Symbol) -> String {
    match s {
        Symbol::Vertex(v) => g.name(v).to_string(),
        Symbol::Var(i) => format!("x{}", i + 1),
    }
}

/// A pattern with vertex names in place of indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPattern {
    pub traces: Vec<Vec<NamedSymbol>>,
    pub var_degrees: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedSymbol {
    Vertex(String),
    /// One-based variable number.
    Var(usize),
}

impl NamedPattern {
    pub fn from_pattern(g: &Graph, p: &Pattern) -> Self {
        NamedPattern {
            traces: p
                .traces
                .iter()
                .map(|t| {
                    t.symbols
                        .iter()
                        .map(|&s| match s {
                            Symbol::Vertex(v) => NamedSymbol::Vertex(g.name(v).to_string()),
                            Symbol::Var(i) => NamedSymbol::Var(i + 1),
                        })
                        .collect()
                })
                .collect(),
            var_degrees: p.var_degrees.clone(),
        }
    }

    pub fn to_pattern(&self, g: &Graph) -> Result<Pattern> {
        let traces = self
            .traces
            .iter()
            .map(|t| {
                t.iter()
                    .map(|s| match s {
                        NamedSymbol::Vertex(name) => g.lookup(name).map(Symbol::Vertex),
                        NamedSymbol::Var(0) => Err(bad("variables are numbered from 1".into())),
                        NamedSymbol::Var(i) => Ok(Symbol::Var(i - 1)),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Pattern::new(traces, self.var_degrees.clone()))
    }
}

/// Builds a pattern from name tokens; `x1`, `x2`, ... denote variables
/// unless a vertex carries that name.
pub fn pattern_from_names(g: &Graph, traces: &[&[&str]], var_degrees: &[u8]) -> Result<Pattern> {
    let traces = traces
        .iter()
        .map(|t| {
            t.iter()
                .map(|&s| {
                    if let Some(v) = g.vertex(s) {
                        return Ok(Symbol::Vertex(v));
                    }
                    s.strip_prefix('x')
                        .and_then(|n| n.parse::<usize>().ok())
                        .filter(|&n| n >= 1)
                        .map(|n| Symbol::Var(n - 1))
                        .ok_or_else(|| Error::UnknownVertex(s.to_string()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Pattern::new(traces, var_degrees.to_vec()))
}

/// Human-readable rendering such as `{(a,v,b), (x1,c,v,d)} d(x1)=1`.
pub struct DisplayPattern<'a>(pub &'a Graph, pub &'a Pattern);

impl fmt::Display for DisplayPattern<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let traces: Vec<String> = self
            .1
            .traces
            .iter()
            .map(|t| {
                let s: Vec<String> = t.symbols.iter().map(|&s| symbol_name(self.0, s)).collect();
                format!("({})", s.join(","))
            })
            .collect();
        write!(f, "{{{}}}", traces.join(", "))?;
        for (i, d) in self.1.var_degrees.iter().enumerate() {
            write!(f, " d(x{})={d}", i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn star() -> Graph {
        parse_graph("e v a\ne v b\ne v c\ne v d").unwrap()
    }

    fn w4() -> Graph {
        parse_graph("e h a\ne h b\ne h c\ne h d\ne a b\ne b c\ne c d\ne d a").unwrap()
    }

    #[test]
    fn star_patterns_validity() {
        let g = star();
        let v4 = g.high_vertices();
        let ok = pattern_from_names(&g, &[&["a", "v", "b"], &["c", "v", "d"]], &[]).unwrap();
        assert!(pattern_valid(&g, &v4, &ok));
        let reused = pattern_from_names(&g, &[&["a", "v", "b"], &["b", "v", "c"]], &[]).unwrap();
        assert!(!pattern_valid(&g, &v4, &reused));
        let partial = pattern_from_names(&g, &[&["a", "v", "b"]], &[]).unwrap();
        assert!(!pattern_valid(&g, &v4, &partial));
    }

    #[test]
    fn odd_numbers() {
        let g = star();
        let v4 = g.high_vertices();
        let empty = Pattern::default();
        assert_eq!(odd_number_unchecked(&g, &empty), 0);
        let p = pattern_from_names(&g, &[&["a", "v", "b"], &["c", "v", "d"]], &[]).unwrap();
        assert_eq!(odd_number(&g, &v4, &p).unwrap(), -4);
        let w = w4();
        let v4 = w.high_vertices();
        let p = pattern_from_names(&w, &[&["a", "h", "b"], &["c", "h", "d"]], &[]).unwrap();
        assert_eq!(odd_number(&w, &v4, &p).unwrap(), -4);
    }

    #[test]
    fn syntax_violations() {
        let g = star();
        let f = Frame::of(&g).unwrap();
        let var_next_to_high = Pattern::new(vec![vec![Symbol::Var(0), Symbol::Vertex(0)]], vec![1]);
        assert!(validate(&g, &f, &var_next_to_high).is_err());
        let repeated = pattern_from_names(&g, &[&["a", "v", "a"]], &[]).unwrap();
        assert!(validate(&g, &f, &repeated).is_err());
        let overused =
            pattern_from_names(&g, &[&["a", "v", "b"], &["c", "v", "d"], &["a", "b"]], &[])
                .unwrap();
        assert!(validate(&g, &f, &overused).is_err());
        let bad_degree =
            pattern_from_names(&g, &[&["x1", "a", "v", "b"], &["c", "v", "d"]], &[4]).unwrap();
        assert!(validate(&g, &f, &bad_degree).is_err());
        assert!(matches!(Frame::new(&g, &[]), Err(Error::EmptyHighSet)));
    }

    #[test]
    fn canonical_form_ignores_naming_and_orientation() {
        let g = parse_graph("e v a\ne v b\ne v c\ne v d\ne a p\ne c q").unwrap();
        let p1 = pattern_from_names(
            &g,
            &[&["x1", "a", "v", "b"], &["x2", "c", "v", "d"]],
            &[1, 2],
        )
        .unwrap();
        let p2 = pattern_from_names(
            &g,
            &[&["d", "v", "c", "x1"], &["b", "v", "a", "x2"]],
            &[2, 1],
        )
        .unwrap();
        assert_eq!(canonical_form(&p1), canonical_form(&p2));
        let p3 = pattern_from_names(
            &g,
            &[&["x1", "a", "v", "b"], &["x2", "c", "v", "d"]],
            &[2, 1],
        )
        .unwrap();
        assert_ne!(canonical_form(&p1), canonical_form(&p3));
    }

    #[test]
    fn named_round_trip() {
        let g = star();
        let p = pattern_from_names(&g, &[&["a", "v", "b"], &["c", "v", "d"]], &[]).unwrap();
        let named = NamedPattern::from_pattern(&g, &p);
        let json = serde_json::to_string(&named).unwrap();
        let back: NamedPattern = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_pattern(&g).unwrap(), p);
        assert_eq!(DisplayPattern(&g, &p).to_string(), "{(a,v,b), (c,v,d)}");
    }
}
