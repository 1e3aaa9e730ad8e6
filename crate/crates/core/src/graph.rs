//! Undirected simple graphs with named vertices, paths and path partitions.
//!
//! Vertices are stored densely as `0..n` in first-appearance order; the
//! original tokens are kept for all output. Wherever a deterministic vertex
//! order is needed the crate uses this dense order.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex index into a [`Graph`].
pub type Vertex = usize;

/// An unordered vertex pair, normalized so that `.0 < .1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn other(&self, v: Vertex) -> Vertex {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

/// Immutable undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
}

/// Incremental constructor for [`Graph`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    edges: BTreeSet<Edge>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `name` if absent and returns its index.
    pub fn vertex(&mut self, name: &str) -> Vertex {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Adds the edge `a-b`, creating missing endpoints.
    pub fn edge(&mut self, a: &str, b: &str) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        let (u, v) = (self.vertex(a), self.vertex(b));
        if !self.edges.insert(Edge::new(u, v)) {
            return Err(Error::DuplicateEdge(a.to_string(), b.to_string()));
        }
        Ok(())
    }

    /// Index-based variant of [`GraphBuilder::edge`]; duplicates are ignored.
    pub fn edge_idx(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.names[u].clone()));
        }
        self.edges.insert(Edge::new(u, v));
        Ok(())
    }

    pub fn build(self) -> Graph {
        let n = self.names.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph {
            names: self.names,
            index: self.index,
            adj,
            edges: self.edges.into_iter().collect(),
        }
    }
}

impl Graph {
    /// Graph on the given vertex names (kept in order) with index-based edges.
    pub fn from_edges<S: AsRef<str>>(names: &[S], edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut b = GraphBuilder::new();
        for name in names {
            let name = name.as_ref();
            if b.contains(name) {
                return Err(Error::DuplicateVertex(name.to_string()));
            }
            b.vertex(name);
        }
        for &(u, v) in edges {
            if u >= b.vertex_count() || v >= b.vertex_count() {
                return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(Error::SelfLoop(names[u].as_ref().to_string()));
            }
            if !b.edges.insert(Edge::new(u, v)) {
                return Err(Error::DuplicateEdge(
                    names[u].as_ref().to_string(),
                    names[v].as_ref().to_string(),
                ));
            }
        }
        Ok(b.build())
    }

    /// Graph with vertices named `1..=n`.
    pub fn numbered(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        Graph::from_edges(&names, edges)
    }

    pub fn empty() -> Graph {
        GraphBuilder::new().build()
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.names.len()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<Vertex> {
        self.vertex(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Degree of the vertex with token `name`.
    pub fn degree_of(&self, name: &str) -> Result<usize> {
        Ok(self.degree(self.lookup(name)?))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    /// Number of odd-degree vertices.
    pub fn odd_count(&self) -> usize {
        self.adj.iter().filter(|a| a.len() % 2 == 1).count()
    }

    pub fn edge_name(&self, e: Edge) -> String {
        format!("{}-{}", self.names[e.0], self.names[e.1])
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn component_sets(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component id per vertex, numbered in order of smallest vertex.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n()];
        for (i, comp) in self.component_sets().into_iter().enumerate() {
            for v in comp {
                ids[v] = i;
            }
        }
        ids
    }

    /// Whether the non-isolated part of the graph is connected.
    pub fn is_connected_ignoring_isolated(&self) -> bool {
        self.component_sets().iter().filter(|c| c.len() > 1).count() <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// Connected components as standalone graphs.
    pub fn components(&self) -> Vec<Graph> {
        self.component_sets()
            .iter()
            .map(|c| self.induced(c))
            .collect()
    }

    /// Subgraph induced by `vertices`, keeping their names and the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut b = GraphBuilder::new();
        for &v in vertices {
            b.vertex(&self.names[v]);
        }
        let pos: HashMap<Vertex, Vertex> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for e in &self.edges {
            if let (Some(&a), Some(&c)) = (pos.get(&e.0), pos.get(&e.1)) {
                b.edges.insert(Edge::new(a, c));
            }
        }
        b.build()
    }

    /// Same vertex set, edge set replaced.
    pub fn with_edges<I: IntoIterator<Item = Edge>>(&self, edges: I) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        let mut list: Vec<Edge> = edges.into_iter().collect();
        list.sort_unstable();
        list.dedup();
        for e in &list {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph {
            names: self.names.clone(),
            index: self.index.clone(),
            adj,
            edges: list,
        }
    }

    /// Deletes the given edges, keeping every vertex.
    pub fn remove_edges(&self, removed: &HashSet<Edge>) -> Graph {
        self.with_edges(self.edges.iter().copied().filter(|e| !removed.contains(e)))
    }

    /// `G - Q`: deletes the edges of every path in `paths`; isolated vertices
    /// are kept.
    pub fn remove_paths(&self, paths: &[Path]) -> Result<Graph> {
        let mut removed = HashSet::new();
        for p in paths {
            p.check_in(self)?;
            removed.extend(p.edges());
        }
        Ok(self.remove_edges(&removed))
    }

    /// Drops degree-0 vertices (re-indexing the rest, order preserved).
    pub fn strip_isolated(&self) -> Graph {
        let keep: Vec<Vertex> = self.vertices().filter(|&v| self.degree(v) > 0).collect();
        self.induced(&keep)
    }

    /// Vertices of degree at least four.
    pub fn high_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) >= 4).collect()
    }

    /// Sum of degrees over the vertices of degree at least four.
    pub fn high(&self) -> usize {
        self.adj.iter().map(Vec::len).filter(|&d| d >= 4).sum()
    }

    /// Serializes in the `p edge` / `n` / `e` text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n(), self.m());
        for v in self.vertices() {
            if self.degree(v) == 0 {
                out.push_str(&format!("n {}\n", self.names[v]));
            }
        }
        for e in &self.edges {
            out.push_str(&format!("e {} {}\n", self.names[e.0], self.names[e.1]));
        }
        out
    }

    /// Serializes as a plain edge list, one `u v` pair per line.
    pub fn to_edgelist(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", self.names[e.0], self.names[e.1]));
        }
        out
    }

    /// Edge set as sorted name pairs; two graphs are equal up to vertex
    /// order iff these and their name sets agree.
    pub fn named_edge_set(&self) -> BTreeSet<(String, String)> {
        self.edges
            .iter()
            .map(|e| {
                let (a, b) = (self.names[e.0].clone(), self.names[e.1].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Structural equality by vertex names, ignoring index order.
    pub fn same_as(&self, other: &Graph) -> bool {
        let a: BTreeSet<&String> = self.names.iter().collect();
        let b: BTreeSet<&String> = other.names.iter().collect();
        a == b && self.named_edge_set() == other.named_edge_set()
    }
}

/// Parses the `c` / `p edge n m` / `n v` / `e u v` text format.
///
/// Vertices are indexed in order of first appearance. When a header is
/// present its vertex count may exceed the number of tokens seen; the missing
/// vertices are the absent numeric tokens `1..=n`, appended in numeric order.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    let mut declared: HashSet<String> = HashSet::new();
    let mut header: Option<(usize, usize, usize)> = None;
    for (i, raw) in text.split('\n').enumerate() {
        let line_no = i + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let Some(&kind) = tokens.first() else {
            continue;
        };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err("second header line".into()));
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(err(format!("malformed header `{}`", raw.trim())));
                }
                let n = tokens[2]
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad vertex count `{}`", tokens[2])))?;
                let m = tokens[3]
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad edge count `{}`", tokens[3])))?;
                header = Some((n, m, line_no));
            }
            "n" => {
                if tokens.len() != 2 {
                    return Err(err(format!("malformed vertex line `{}`", raw.trim())));
                }
                if !declared.insert(tokens[1].to_string()) {
                    return Err(err(format!("vertex `{}` declared twice", tokens[1])));
                }
                b.vertex(tokens[1]);
            }
            "e" => {
                if tokens.len() != 3 {
                    return Err(err(format!("malformed edge line `{}`", raw.trim())));
                }
                b.edge(tokens[1], tokens[2]).map_err(|e| match e {
                    Error::SelfLoop(v) => err(format!("self-loop at `{v}`")),
                    Error::DuplicateEdge(u, v) => err(format!("duplicate edge {u}-{v}")),
                    other => err(other.to_string()),
                })?;
            }
            _ => return Err(err(format!("unrecognized line `{}`", raw.trim()))),
        }
    }
    if let Some((n, m, line)) = header {
        if b.edge_count() != m {
            return Err(Error::Parse {
                line,
                msg: format!(
                    "header declares {m} edges but {} were given",
                    b.edge_count()
                ),
            });
        }
        if b.vertex_count() > n {
            return Err(Error::Parse {
                line,
                msg: format!(
                    "header declares {n} vertices but {} were used",
                    b.vertex_count()
                ),
            });
        }
        let mut k = 1;
        while b.vertex_count() < n {
            let tok = k.to_string();
            if !b.contains(&tok) {
                b.vertex(&tok);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// A simple path given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.first(), self.last())
    }

    pub fn has_endpoint(&self, v: Vertex) -> bool {
        !self.0.is_empty() && (self.first() == v || self.last() == v)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.0.clone();
        v.reverse();
        Path(v)
    }

    /// Orients the path so that it ends at `v`; `v` must be an endpoint.
    pub fn ending_at(&self, v: Vertex) -> Path {
        debug_assert!(self.has_endpoint(v));
        if self.last() == v {
            self.clone()
        } else {
            self.reversed()
        }
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.0.len());
        self.0.iter().all(|v| seen.insert(*v))
    }

    /// Checks that this is a nonempty simple path of `g`.
    pub fn check_in(&self, g: &Graph) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::NotAPath("empty vertex sequence".into()));
        }
        if let Some(&v) = self.0.iter().find(|&&v| v >= g.n()) {
            return Err(Error::NotAPath(format!("vertex #{v} out of range")));
        }
        if !self.is_simple() {
            return Err(Error::NotAPath(format!(
                "{} repeats a vertex",
                self.display(g)
            )));
        }
        for w in self.0.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::NotAPath(format!(
                    "{} uses missing edge {}-{}",
                    self.display(g),
                    g.name(w[0]),
                    g.name(w[1])
                )));
            }
        }
        Ok(())
    }

    pub fn to_names(&self, g: &Graph) -> Vec<String> {
        self.0.iter().map(|&v| g.name(v).to_string()).collect()
    }

    pub fn from_names<S: AsRef<str>>(g: &Graph, names: &[S]) -> Result<Path> {
        names
            .iter()
            .map(|s| g.lookup(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Path)
    }

    /// Re-indexes a path of `from` into `to` by vertex names.
    pub fn transfer(&self, from: &Graph, to: &Graph) -> Result<Path> {
        Path::from_names(to, &self.to_names(from))
    }

    pub fn display(&self, g: &Graph) -> String {
        self.to_names(g).join("-")
    }
}

/// A set of pairwise edge-disjoint paths.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathPartition {
    pub paths: Vec<Path>,
}

impl PathPartition {
    pub fn new(paths: Vec<Path>) -> Self {
        PathPartition { paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks simplicity, pairwise edge-disjointness and exact coverage of
    /// `E(g)`; the error names the first violation.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let mut used: HashSet<Edge> = HashSet::with_capacity(g.m());
        for p in &self.paths {
            p.check_in(g)
                .map_err(|e| Error::InvalidPartition(e.to_string()))?;
            if p.is_empty() {
                return Err(Error::InvalidPartition(format!(
                    "path {} has no edges",
                    p.display(g)
                )));
            }
            for e in p.edges() {
                if !used.insert(e) {
                    return Err(Error::InvalidPartition(format!(
                        "edge {} covered twice",
                        g.edge_name(e)
                    )));
                }
            }
        }
        if let Some(e) = g.edges().iter().find(|e| !used.contains(e)) {
            return Err(Error::InvalidPartition(format!(
                "edge {} not covered",
                g.edge_name(*e)
            )));
        }
        Ok(())
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }

    pub fn to_names(&self, g: &Graph) -> Vec<Vec<String>> {
        self.paths.iter().map(|p| p.to_names(g)).collect()
    }

    pub fn from_names<S: AsRef<str>>(g: &Graph, paths: &[Vec<S>]) -> Result<PathPartition> {
        paths
            .iter()
            .map(|p| Path::from_names(g, p))
            .collect::<Result<Vec<_>>>()
            .map(PathPartition::new)
    }

    /// One path per line, tokens space-separated.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for p in &self.paths {
            out.push_str(&p.to_names(g).join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the one-path-per-line format against `g`.
    pub fn parse(g: &Graph, text: &str) -> Result<PathPartition> {
        let mut paths = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let p = Path::from_names(g, &toks).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })?;
            paths.push(p);
        }
        Ok(PathPartition::new(paths))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}-#{}", self.0, self.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> Graph {
        parse_graph(text).unwrap()
    }

    #[test]
    fn parses_two_edge_path() {
        let p = g("p edge 3 2\ne 1 2\ne 2 3");
        assert_eq!(p.names(), ["1", "2", "3"]);
        assert_eq!(p.m(), 2);
        assert_eq!(p.degree_of("2").unwrap(), 2);
    }

    #[test]
    fn header_declares_isolated_vertex() {
        let p = g("p edge 1 0");
        assert_eq!(p.n(), 1);
        assert_eq!(p.m(), 0);
        assert_eq!(p.name(0), "1");
    }

    #[test]
    fn rejects_self_loop_and_names_line() {
        match parse_graph("c hello\ne 1 1") {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_duplicate_and_malformed() {
        assert!(matches!(
            parse_graph("e a b\ne b a"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("e a\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("x 1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p edge 2 5\ne 1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn accepts_comments_crlf_and_bare_vertices() {
        let p = g("c a comment\r\nn z\r\ne a b\r\n");
        assert_eq!(p.names(), ["z", "a", "b"]);
        assert_eq!(p.degree_of("z").unwrap(), 0);
    }

    #[test]
    fn degrees() {
        let k4 = g("e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4");
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));
        let star = g("e c 1\ne c 2\ne c 3\ne c 4");
        assert_eq!(star.degree_of("c").unwrap(), 4);
        assert_eq!(g("n q").degree_of("q").unwrap(), 0);
        assert!(matches!(star.degree_of("zz"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn odd_counts() {
        assert_eq!(g("e 1 2\ne 2 3").odd_count(), 2);
        assert_eq!(g("e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4").odd_count(), 4);
        assert_eq!(g("e 1 2\ne 2 3\ne 3 4\ne 4 1").odd_count(), 0);
    }

    #[test]
    fn components_ordering() {
        let p = g("e 1 2\ne 2 3\ne 4 5\ne 5 6\ne 6 4");
        let cs = p.components();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].names(), ["1", "2", "3"]);
        assert_eq!(cs[1].m(), 3);
        assert_eq!(g("e 1 2\ne 2 3").components().len(), 1);
        assert!(Graph::empty().components().is_empty());
    }

    #[test]
    fn remove_paths_cases() {
        let c4 = g("e 1 2\ne 2 3\ne 3 4\ne 4 1");
        let p = Path::from_names(&c4, &["1", "2", "3", "4"]).unwrap();
        let rest = c4.remove_paths(&[p]).unwrap();
        assert_eq!(rest.m(), 1);
        assert!(rest.has_edge(c4.lookup("4").unwrap(), c4.lookup("1").unwrap()));
        assert_eq!(c4.remove_paths(&[]).unwrap(), c4);

        let w4 = g("e h a\ne h b\ne h c\ne h d\ne a b\ne b c\ne c d\ne d a");
        let q = vec![
            Path::from_names(&w4, &["a", "h", "b"]).unwrap(),
            Path::from_names(&w4, &["c", "h", "d"]).unwrap(),
        ];
        let rim = w4.remove_paths(&q).unwrap();
        assert_eq!(rim.n(), 5);
        assert_eq!(rim.degree_of("h").unwrap(), 0);
        let expect: BTreeSet<(String, String)> = [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        assert_eq!(rim.named_edge_set(), expect);

        let bad = Path::from_names(&c4, &["1", "3"]).unwrap();
        assert!(matches!(c4.remove_paths(&[bad]), Err(Error::NotAPath(_))));
    }

    #[test]
    fn text_round_trip() {
        let p = g("n iso\ne a b\ne b c");
        let back = parse_graph(&p.to_text()).unwrap();
        assert!(back.same_as(&p));
    }

    #[test]
    fn partition_checks() {
        let c4 = g("e 1 2\ne 2 3\ne 3 4\ne 4 1");
        let ok =
            PathPartition::from_names(&c4, &[vec!["1", "2", "3"], vec!["3", "4", "1"]]).unwrap();
        assert!(ok.is_valid_for(&c4));
        let dup = PathPartition::from_names(&c4, &[vec!["1", "2", "3", "4"], vec!["3", "4", "1"]])
            .unwrap();
        assert!(!dup.is_valid_for(&c4));
        let short = PathPartition::from_names(&c4, &[vec!["1", "2", "3", "4"]]).unwrap();
        assert!(!short.is_valid_for(&c4));
    }
}
