mod common;

use std::collections::HashSet;
use std::ops::ControlFlow;

use pathnum::feasibility::{check_feasible, realize_family};
use pathnum::oracle::catalog::connected_graphs_up_to;
use pathnum::pattern::{
    canonical_form, encode, enumerate_patterns, for_each_pattern, is_covering_family, odd_number,
    pattern_valid, Frame, Pattern, Symbol,
};
use pathnum::preprocess::make_nice;
use pathnum::{Edge, Graph, Vertex};
use proptest::prelude::*;

type Key = (Vec<Vec<Symbol>>, Vec<u8>);

struct Naive<'a> {
    g: &'a Graph,
    high: Vec<bool>,
    v4_edges: Vec<Edge>,
    traces: Vec<(Vec<Symbol>, Vec<usize>)>,
    out: HashSet<Key>,
}

fn is_high(high: &[bool], s: Symbol) -> bool {
    matches!(s, Symbol::Vertex(v) if high[v])
}

/// Every simple word over `symbols` that could be a trace on its own.
fn words(g: &Graph, high: &[bool], symbols: &[Symbol]) -> Vec<Vec<Symbol>> {
    fn rec(
        g: &Graph,
        high: &[bool],
        symbols: &[Symbol],
        cur: &mut Vec<Symbol>,
        out: &mut Vec<Vec<Symbol>>,
    ) {
        if cur.len() >= 2 && cur[0] < cur[cur.len() - 1] && cur.iter().any(|&s| is_high(high, s)) {
            out.push(cur.clone());
        }
        for &s in symbols {
            if cur.contains(&s) {
                continue;
            }
            if let Some(&last) = cur.last() {
                if is_high(high, last) || is_high(high, s) {
                    let (Symbol::Vertex(a), Symbol::Vertex(b)) = (last, s) else {
                        continue;
                    };
                    if !g.has_edge(a, b) {
                        continue;
                    }
                }
            }
            cur.push(s);
            rec(g, high, symbols, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, high, symbols, &mut Vec::new(), &mut out);
    out
}

/// A rim vertex starts each of its links along its own edge away from the
/// high set, so it has at most that many links.
fn within_link_budget(g: &Graph, high: &[bool], traces: &[Vec<Symbol>]) -> bool {
    let mut links = vec![0usize; g.n()];
    for t in traces {
        for w in t.windows(2) {
            if is_high(high, w[0]) || is_high(high, w[1]) {
                continue;
            }
            for s in w {
                if let Symbol::Vertex(v) = *s {
                    links[v] += 1;
                }
            }
        }
    }
    g.vertices()
        .all(|v| links[v] <= g.neighbors(v).iter().filter(|&&w| !high[w]).count())
}

impl Naive<'_> {
    /// Adds (`sign` = 1) or removes (`sign` = -1) the usage of trace `i`;
    /// on adding, reports whether the monotone conditions still hold.
    fn account(
        &self,
        i: usize,
        usage: &mut [i32],
        ends: &mut HashSet<(Symbol, Symbol)>,
        sign: i32,
    ) -> bool {
        let w = &self.traces[i].0;
        let slot = |s: Symbol| match s {
            Symbol::Vertex(v) => v,
            Symbol::Var(x) => self.g.n() + x,
        };
        let mut ok = true;
        for p in w.windows(2) {
            for s in p {
                usage[slot(*s)] += sign;
            }
            if !(is_high(&self.high, p[0]) || is_high(&self.high, p[1])) {
                let key = (p[0].min(p[1]), p[0].max(p[1]));
                if sign > 0 {
                    ok &= ends.insert(key);
                } else {
                    ends.remove(&key);
                }
                for s in p {
                    if let Symbol::Vertex(v) = *s {
                        usage[self.g.n() + 8 + v] += sign;
                    }
                }
            }
        }
        let n = self.g.n();
        ok && self.g.vertices().all(|v| {
            usage[v] as usize <= self.g.degree(v)
                && usage[n + 8 + v] as usize
                    <= self
                        .g
                        .neighbors(v)
                        .iter()
                        .filter(|&&w| !self.high[w])
                        .count()
        }) && (0..8).all(|x| usage[n + x] <= 3)
    }

    fn pick(
        &mut self,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        usage: &mut Vec<i32>,
        ends: &mut HashSet<(Symbol, Symbol)>,
        v4: &[Vertex],
    ) {
        let Some(first) = covered.iter().position(|c| !c) else {
            self.check(chosen, v4);
            return;
        };
        for i in 0..self.traces.len() {
            let es = &self.traces[i].1;
            if !es.contains(&first) || es.iter().any(|&e| covered[e]) {
                continue;
            }
            // a duplicate end pair is inserted only once, so undo by hand
            let before = ends.clone();
            if self.account(i, usage, ends, 1) {
                for &e in &self.traces[i].1 {
                    covered[e] = true;
                }
                chosen.push(i);
                self.pick(covered, chosen, usage, ends, v4);
                chosen.pop();
                for &e in &self.traces[i].1 {
                    covered[e] = false;
                }
            }
            self.account(i, usage, ends, -1);
            *ends = before;
        }
    }

    fn check(&mut self, chosen: &[usize], v4: &[Vertex]) {
        let traces: Vec<Vec<Symbol>> = chosen.iter().map(|&i| self.traces[i].0.clone()).collect();
        let uses_var = traces.iter().flatten().any(|s| matches!(s, Symbol::Var(_)));
        let degrees: Vec<Vec<u8>> = if uses_var {
            (1..=3).map(|d| vec![d]).collect()
        } else {
            vec![vec![]]
        };
        if !within_link_budget(self.g, &self.high, &traces) {
            return;
        }
        for d in degrees {
            let p = Pattern::new(traces.clone(), d);
            if pattern_valid(self.g, v4, &p) {
                self.out.insert(canonical_form(&p));
            }
        }
    }
}

/// Generate-and-filter: every word, every exact cover of the high edges
/// by words, kept when the validity check accepts it.
fn naive_patterns(g: &Graph, l: usize) -> HashSet<Key> {
    let v4 = g.high_vertices();
    let mut high = vec![false; g.n()];
    for &v in &v4 {
        high[v] = true;
    }
    let closed: Vec<Vertex> = g
        .vertices()
        .filter(|&v| high[v] || g.neighbors(v).iter().any(|&w| high[w]))
        .collect();
    let mut symbols: Vec<Symbol> = closed.iter().map(|&v| Symbol::Vertex(v)).collect();
    if g.n() > closed.len() {
        symbols.extend((0..l).map(Symbol::Var));
    }
    let v4_edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| high[e.0] || high[e.1])
        .collect();
    // both filters are monotone, so words failing them alone never help
    let traces = words(g, &high, &symbols)
        .into_iter()
        .filter(|w| within_link_budget(g, &high, std::slice::from_ref(w)))
        .filter(|w| {
            w.iter().enumerate().all(|(i, s)| match s {
                Symbol::Vertex(v) => {
                    usize::from(i > 0) + usize::from(i + 1 < w.len()) <= g.degree(*v)
                }
                Symbol::Var(_) => true,
            })
        })
        .map(|w| {
            let es = w
                .windows(2)
                .filter_map(|p| match (p[0], p[1]) {
                    (Symbol::Vertex(a), Symbol::Vertex(b)) => {
                        v4_edges.iter().position(|&e| e == Edge::new(a, b))
                    }
                    _ => None,
                })
                .collect();
            (w, es)
        })
        .collect();
    let mut naive = Naive {
        g,
        high,
        v4_edges,
        traces,
        out: HashSet::new(),
    };
    let mut covered = vec![false; naive.v4_edges.len()];
    let mut usage = vec![0; 2 * g.n() + 8];
    naive.pick(
        &mut covered,
        &mut Vec::new(),
        &mut usage,
        &mut HashSet::new(),
        &v4,
    );
    naive.out
}

fn closed_size(g: &Graph) -> usize {
    let high: HashSet<Vertex> = g.high_vertices().into_iter().collect();
    g.vertices()
        .filter(|v| high.contains(v) || g.neighbors(*v).iter().any(|w| high.contains(w)))
        .count()
}

fn high_edges(g: &Graph) -> usize {
    g.edges()
        .iter()
        .filter(|e| g.degree(e.0) >= 4 || g.degree(e.1) >= 4)
        .count()
}

fn compare_with_naive(l: usize, max_closed: usize, max_edges: usize) -> usize {
    let mut checked = 0;
    for g in connected_graphs_up_to(7, false) {
        if g.is_subcubic() || closed_size(&g) > max_closed || high_edges(&g) > max_edges {
            continue;
        }
        let v4 = g.high_vertices();
        let got = enumerate_patterns(&g, &v4, l).unwrap();
        let keys: HashSet<Key> = got.iter().map(canonical_form).collect();
        assert_eq!(keys.len(), got.len(), "duplicate class\n{}", g.to_text());
        let want = naive_patterns(&g, l);
        assert_eq!(keys, want, "\n{}", g.to_text());
        checked += 1;
    }
    checked
}

#[test]
fn enumeration_matches_naive_without_variables() {
    assert!(compare_with_naive(0, 6, 6) > 20);
}

#[test]
fn enumeration_matches_naive_with_one_variable() {
    assert!(compare_with_naive(1, 5, 5) > 10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn oddity_identity(seed in any::<u64>()) {
        let g = common::random_high_graph(seed);
        let v4 = g.high_vertices();
        let q = common::random_covering_family(&g, seed);
        let p = encode(&g, &v4, &q).unwrap();
        let rest = g.remove_paths(&q).unwrap();
        prop_assert_eq!(
            rest.odd_count() as i64,
            g.odd_count() as i64 + odd_number(&g, &v4, &p).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn encode_is_valid(seed in any::<u64>()) {
        let g = common::random_high_graph(seed);
        let v4 = g.high_vertices();
        let q = common::random_covering_family(&g, seed);
        let p = encode(&g, &v4, &q).unwrap();
        prop_assert!(pattern_valid(&g, &v4, &p));
        prop_assert_eq!(p.traces.len(), q.len());
        prop_assert!(p.num_vars() <= 16 * g.high());
    }

    #[test]
    fn round_trip_through_feasibility(seed in any::<u64>()) {
        let g = make_nice(&common::random_high_graph(seed)).unwrap().nice_graph;
        let v4 = g.high_vertices();
        let q = common::random_covering_family(&g, seed);
        prop_assume!(common::bull_free(&g, &q));
        let p = encode(&g, &v4, &q).unwrap();
        let w = check_feasible(&g, &v4, &p).unwrap();
        prop_assert!(w.is_some(), "{}", g.to_text());
        let r = realize_family(&g, &v4, &p, &w.unwrap()).unwrap();
        prop_assert_eq!(r.len(), p.traces.len());
        prop_assert!(r.iter().all(|path| path.check_in(&g).is_ok()));
        prop_assert!(common::bull_free(&g, &r));
        is_covering_family(&g, &Frame::new(&g, &v4).unwrap(), &r).unwrap();
        let rest = g.remove_paths(&r).unwrap();
        prop_assert_eq!(
            rest.odd_count() as i64,
            g.odd_count() as i64 + odd_number(&g, &v4, &p).unwrap()
        );
        let back = encode(&g, &v4, &r).unwrap();
        prop_assert_eq!(
            odd_number(&g, &v4, &back).unwrap(),
            odd_number(&g, &v4, &p).unwrap()
        );
    }

    #[test]
    fn emitted_patterns_are_canonical_and_short(seed in any::<u64>()) {
        let g = make_nice(&common::random_high_graph(seed)).unwrap().nice_graph;
        let v4 = g.high_vertices();
        let k = g.high();
        let mut seen = HashSet::new();
        let mut count = 0;
        for_each_pattern(&g, &v4, 2, |p| {
            assert!(p.total_length() <= 4 * k + 3 * p.num_vars());
            assert!(seen.insert(canonical_form(&p)), "repeated class");
            count += 1;
            if count == 20_000 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        prop_assert!(count > 0);
    }
}
