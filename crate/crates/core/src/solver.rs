//! Path numbers and optimal partitions of arbitrary graphs.
//!
//! Components are solved independently. A subcubic component has a closed
//! formula; any other component is made nice and then minimized over the
//! patterns of its high-degree part.

use std::collections::HashSet;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extend::extend_for_witness;
use crate::feasibility::{feasible_in, realize_family, Demand, FeasibilityWitness};
use crate::graph::{Edge, Graph, Path, PathPartition, Vertex};
use crate::greedy;
use crate::pattern::{oddity, search, var_cap, Frame, Guide, Pattern, SearchState, Symbol};
use crate::preprocess::{make_nice, replay_witness, transfer_all};
use crate::structure::is_bull_pair;
use crate::subcubic;

/// Tuning knobs of [`solve`].
#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Cap on the number of variables per pattern; `None` means no cap
    /// beyond the structural ones.
    pub l_max: Option<usize>,
    /// Build an optimal partition as well as the number.
    pub witness: bool,
    /// Check feasibility of partial trace sets during the search.
    pub partial_checks: bool,
    /// Start from randomized partitions, skipping the search when one meets
    /// the lower bound.
    pub greedy: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            l_max: None,
            witness: false,
            partial_checks: true,
            greedy: true,
        }
    }
}

/// Search counters, summed over components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub components: usize,
    pub subcubic_components: usize,
    pub pan_cycles_removed: usize,
    /// Components settled by a randomized partition.
    pub greedy_optimal: usize,
    /// Complete trace sets reached by the search.
    pub trace_sets: usize,
    pub feasibility_checks: usize,
    pub partial_checks: usize,
    pub pruned_by_bound: usize,
    pub pruned_by_partial: usize,
}

impl SolveStats {
    fn add(&mut self, o: &SolveStats) {
        self.components += o.components;
        self.subcubic_components += o.subcubic_components;
        self.pan_cycles_removed += o.pan_cycles_removed;
        self.greedy_optimal += o.greedy_optimal;
        self.trace_sets += o.trace_sets;
        self.feasibility_checks += o.feasibility_checks;
        self.partial_checks += o.partial_checks;
        self.pruned_by_bound += o.pruned_by_bound;
        self.pruned_by_partial += o.pruned_by_partial;
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub pn: usize,
    /// Present when a witness was requested.
    pub partition: Option<PathPartition>,
    pub stats: SolveStats,
}

/// The path number of `g`.
pub fn path_number(g: &Graph) -> usize {
    solve(g, &SolveOptions::default())
        .expect("the value search cannot fail")
        .pn
}

/// A path partition of `g` with [`path_number`] paths.
pub fn path_partition(g: &Graph) -> Result<PathPartition> {
    let opts = SolveOptions {
        witness: true,
        ..SolveOptions::default()
    };
    Ok(solve(g, &opts)?.partition.expect("witness requested"))
}

/// Whether `p` is a set of simple, pairwise edge-disjoint paths whose union
/// is exactly the edge set of `g`.
pub fn verify_partition(g: &Graph, p: &PathPartition) -> bool {
    p.check(g).is_ok()
}

/// Solves every component of `g`.
pub fn solve(g: &Graph, opts: &SolveOptions) -> Result<Solution> {
    let comps: Vec<Vec<Vertex>> = g
        .component_sets()
        .into_iter()
        .filter(|c| c.len() > 1)
        .collect();
    let results: Vec<Result<(Solution, Graph)>> = comps
        .par_iter()
        .map(|c| {
            let sub = g.induced(c);
            solve_connected(&sub, opts).map(|s| (s, sub))
        })
        .collect();
    let mut pn = 0;
    let mut stats = SolveStats::default();
    let mut paths = Vec::new();
    for r in results {
        let (s, sub) = r?;
        pn += s.pn;
        stats.add(&s.stats);
        if let Some(p) = s.partition {
            paths.extend(transfer_all(&p.paths, &sub, g)?);
        }
    }
    let partition = if opts.witness {
        let p = PathPartition::new(paths);
        if p.len() != pn || p.check(g).is_err() {
            return Err(Error::Construction(
                "assembled partition is not optimal".into(),
            ));
        }
        Some(p)
    } else {
        None
    };
    Ok(Solution {
        pn,
        partition,
        stats,
    })
}

fn solve_connected(g: &Graph, opts: &SolveOptions) -> Result<Solution> {
    let mut stats = SolveStats {
        components: 1,
        ..SolveStats::default()
    };
    if g.is_subcubic() {
        stats.subcubic_components = 1;
        let pn = subcubic::pn_subcubic(g)?;
        let partition = if opts.witness {
            Some(subcubic::partition_subcubic(g)?)
        } else {
            None
        };
        return Ok(Solution {
            pn,
            partition,
            stats,
        });
    }
    let upper = if opts.greedy {
        let lower = greedy::lower_bound(g);
        let p = greedy::partition(g, GREEDY_ROUNDS, lower);
        if p.len() == lower {
            stats.greedy_optimal = 1;
            return Ok(Solution {
                pn: lower,
                partition: opts.witness.then(|| PathPartition::new(p)),
                stats,
            });
        }
        Some(p)
    } else {
        None
    };
    let nice = make_nice(g)?;
    stats.pan_cycles_removed = nice.pan_offset;
    let g0 = &nice.nice_graph;
    let frame = Frame::of(g0)?;
    let bound = upper.as_ref().map(|p| p.len() - nice.pan_offset);
    let Some((value, pattern, witness)) = minimize(g0, &frame, opts, bound, &mut stats) else {
        // nothing beats the randomized partition
        let p = upper
            .ok_or_else(|| Error::Construction("no feasible pattern for a nice graph".into()))?;
        return Ok(Solution {
            pn: p.len(),
            partition: opts.witness.then(|| PathPartition::new(p)),
            stats,
        });
    };
    let pn = nice.pan_offset + value;
    let partition = if opts.witness {
        let nice_paths = witness_paths(g0, &frame, &pattern, &witness)?;
        if nice_paths.len() != value {
            return Err(Error::Construction(format!(
                "nice graph partition has {} paths instead of {value}",
                nice_paths.len()
            )));
        }
        let p = replay_witness(g0, &PathPartition::new(nice_paths), &nice.replay_log, g)?;
        if p.len() != pn {
            return Err(Error::Construction(
                "replay changed the partition size".into(),
            ));
        }
        Some(p)
    } else {
        None
    };
    Ok(Solution {
        pn,
        partition,
        stats,
    })
}

/// Realizes an optimal pattern and partitions what it leaves.
fn witness_paths(
    g0: &Graph,
    frame: &Frame,
    pattern: &Pattern,
    witness: &FeasibilityWitness,
) -> Result<Vec<Path>> {
    let q = realize_family(g0, &frame.v4, pattern, witness)?;
    let q = extend_for_witness(g0, &frame.v4, &q)?;
    let rest = g0.remove_paths(&q)?;
    let mut out = q;
    for c in rest.component_sets() {
        if c.len() < 2 {
            continue;
        }
        let sub = rest.induced(&c);
        let part = subcubic::part(&sub)?;
        out.extend(transfer_all(&part, &sub, g0)?);
    }
    Ok(out)
}

const GREEDY_ROUNDS: u64 = 64;

type Best = Option<(usize, Pattern, FeasibilityWitness)>;

/// Minimum of `(odd(g0) + odd number)/2 + |T|` over feasible patterns.
/// Only patterns better than `bound` are reported.
fn minimize(
    g0: &Graph,
    frame: &Frame,
    opts: &SolveOptions,
    bound: Option<usize>,
    stats: &mut SolveStats,
) -> Best {
    let cap = var_cap(g0, frame, opts.l_max.unwrap_or(usize::MAX));
    let mut outside_degrees = [false; 4];
    let mut outside_count = 0;
    for v in frame.outside() {
        outside_count += 1;
        if g0.degree(v) <= 3 {
            outside_degrees[g0.degree(v)] = true;
        }
    }
    let floor = greedy::lower_bound(g0);
    if bound.is_some_and(|b| b <= floor) {
        return None;
    }
    let mut guide = Minimizer {
        g: g0,
        frame,
        odd0: g0.odd_count() as i64,
        floor,
        partial_checks: opts.partial_checks,
        outside_degrees,
        rim_links: rim_links(g0, frame),
        rim_out: g0
            .vertices()
            .map(|v| g0.neighbors(v).iter().any(|&w| !frame.in_closed[w]))
            .collect(),
        outside_edge: outside_count >= 2
            && g0
                .edges()
                .iter()
                .any(|e| !frame.in_closed[e.0] && !frame.in_closed[e.1]),
        best: None,
        bound: bound.unwrap_or(usize::MAX),
        stats: SolveStats::default(),
    };
    search(g0, frame, cap, &mut guide);
    stats.add(&guide.stats);
    guide.best
}

/// Rim pairs that some path avoiding the closed neighborhood internally can
/// join: a direct edge, or a common component of the outside.
fn rim_links(g: &Graph, frame: &Frame) -> HashSet<Edge> {
    let sub = g.with_edges(
        g.edges()
            .iter()
            .copied()
            .filter(|e| !frame.in_closed[e.0] && !frame.in_closed[e.1]),
    );
    let ids = sub.component_ids();
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for v in g
        .vertices()
        .filter(|&v| frame.in_closed[v] && !frame.in_v4[v])
    {
        let mut t: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| !frame.in_closed[w])
            .map(|&w| ids[w])
            .collect();
        t.sort_unstable();
        t.dedup();
        touching[v] = t;
    }
    let rim: Vec<Vertex> = g
        .vertices()
        .filter(|&v| frame.in_closed[v] && !frame.in_v4[v])
        .collect();
    let mut out = HashSet::new();
    for (i, &a) in rim.iter().enumerate() {
        for &b in &rim[i + 1..] {
            if g.has_edge(a, b) || touching[a].iter().any(|c| touching[b].contains(c)) {
                out.insert(Edge::new(a, b));
            }
        }
    }
    out
}

struct Minimizer<'a> {
    g: &'a Graph,
    frame: &'a Frame,
    odd0: i64,
    floor: usize,
    partial_checks: bool,
    outside_degrees: [bool; 4],
    rim_links: HashSet<Edge>,
    rim_out: Vec<bool>,
    outside_edge: bool,
    best: Best,
    bound: usize,
    stats: SolveStats,
}

impl Minimizer<'_> {
    fn best_value(&self) -> usize {
        self.best.as_ref().map_or(self.bound, |b| b.0)
    }

    /// Twice the objective with each variable taking its most favorable
    /// parity. It never decreases as traces are added.
    fn score2(&self, state: &SearchState) -> i64 {
        let mut s = self.odd0 + 2 * state.traces.len() as i64;
        for (v, &u) in state.usage_v.iter().enumerate() {
            if u > 0 {
                s += oddity(self.g.degree(v), u as usize);
            }
        }
        for &u in &state.usage_x {
            if u % 2 == 1 {
                s -= 1;
            }
        }
        s
    }

    fn degree_choices(&self, usage: u8) -> Vec<u8> {
        (usage.max(1)..=3)
            .filter(|&d| self.outside_degrees[d as usize])
            .collect()
    }
}

impl Guide for Minimizer<'_> {
    fn allow_link(&mut self, a: Symbol, b: Symbol) -> bool {
        match (a, b) {
            (Symbol::Vertex(x), Symbol::Vertex(y)) => self.rim_links.contains(&Edge::new(x, y)),
            (Symbol::Vertex(x), Symbol::Var(_)) | (Symbol::Var(_), Symbol::Vertex(x)) => {
                self.rim_out[x]
            }
            (Symbol::Var(_), Symbol::Var(_)) => self.outside_edge,
        }
    }

    fn accept_partial(&mut self, state: &SearchState) -> bool {
        if self.score2(state) >= 2 * self.best_value().min(i64::MAX as usize / 4) as i64 {
            self.stats.pruned_by_bound += 1;
            return false;
        }
        let t = state.traces.last().expect("a completed trace");
        if let (Symbol::Vertex(a), Symbol::Vertex(b)) = (t[0], t[t.len() - 1]) {
            if is_bull_pair(self.g, a, b) {
                self.stats.pruned_by_partial += 1;
                return false;
            }
        }
        let links = t
            .windows(2)
            .any(|w| !self.frame.is_high(w[0]) && !self.frame.is_high(w[1]));
        if self.partial_checks && links {
            self.stats.partial_checks += 1;
            if feasible_in(
                self.g,
                self.frame,
                &state.traces,
                Demand::AtLeast(&state.usage_x),
            )
            .is_none()
            {
                self.stats.pruned_by_partial += 1;
                return false;
            }
        }
        true
    }

    fn visit(&mut self, state: &SearchState) -> ControlFlow<()> {
        self.stats.trace_sets += 1;
        let base = self.odd0
            + 2 * state.traces.len() as i64
            + state
                .usage_v
                .iter()
                .enumerate()
                .filter(|(_, &u)| u > 0)
                .map(|(v, &u)| oddity(self.g.degree(v), u as usize))
                .sum::<i64>();
        let choices: Vec<Vec<u8>> = state
            .usage_x
            .iter()
            .map(|&u| self.degree_choices(u))
            .collect();
        if choices.iter().any(Vec::is_empty) {
            return ControlFlow::Continue(());
        }
        let mut combos: Vec<(i64, Vec<u8>)> = Vec::new();
        let mut d: Vec<usize> = vec![0; choices.len()];
        loop {
            let degs: Vec<u8> = d.iter().zip(&choices).map(|(&k, c)| c[k]).collect();
            let val = base
                + degs
                    .iter()
                    .zip(&state.usage_x)
                    .map(|(&dd, &u)| oddity(dd as usize, u as usize))
                    .sum::<i64>();
            combos.push((val, degs));
            let mut i = 0;
            while i < d.len() {
                d[i] += 1;
                if d[i] < choices[i].len() {
                    break;
                }
                d[i] = 0;
                i += 1;
            }
            if i == d.len() {
                break;
            }
        }
        combos.sort();
        for (val2, degs) in combos {
            debug_assert!(val2 >= 0 && val2 % 2 == 0);
            let val = (val2 / 2) as usize;
            if val >= self.best_value() {
                break;
            }
            self.stats.feasibility_checks += 1;
            if let Some(w) = feasible_in(self.g, self.frame, &state.traces, Demand::Exact(&degs)) {
                self.best = Some((val, Pattern::new(state.traces.clone(), degs), w));
                break;
            }
        }
        if self.best_value() <= self.floor {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::oracle::gen;

    fn g(text: &str) -> Graph {
        parse_graph(text).unwrap()
    }

    #[test]
    fn named_values() {
        assert_eq!(path_number(&gen::wheel(5).unwrap()), 2);
        assert_eq!(path_number(&gen::star(4).unwrap()), 2);
        assert_eq!(path_number(&gen::complete(4).unwrap()), 2);
        assert_eq!(path_number(&gen::complete(5).unwrap()), 3);
        let union = g("e h a\ne h b\ne h c\ne h d\ne a b\ne b c\ne c d\ne d a\ne p q\ne q r");
        assert_eq!(path_number(&union), 3);
        assert_eq!(path_number(&Graph::empty()), 0);
    }

    #[test]
    fn witnesses() {
        for graph in [
            gen::wheel(5).unwrap(),
            gen::star(4).unwrap(),
            gen::complete(5).unwrap(),
            gen::complete(4).unwrap(),
            Graph::empty(),
        ] {
            let p = path_partition(&graph).unwrap();
            assert!(verify_partition(&graph, &p));
            assert_eq!(p.len(), path_number(&graph));
        }
    }

    #[test]
    fn verify_rejects() {
        let w = gen::wheel(5).unwrap();
        let overlap = PathPartition::from_names(&w, &[vec!["2", "1", "3"], vec!["2", "1", "4"]]);
        assert!(overlap.map_or(true, |p| !verify_partition(&w, &p)));
        let mut p = path_partition(&w).unwrap();
        p.paths.pop();
        assert!(!verify_partition(&w, &p));
    }
}
