use std::collections::BTreeMap;
use std::io::{ErrorKind, Read, Write};
use std::ops::ControlFlow;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use pathnum::oracle::catalog::connected_graphs_up_to;
use pathnum::oracle::{brute_pn, gen, sen_bruteforce};
use pathnum::pattern::{for_each_pattern, NamedPattern};
use pathnum::preprocess::make_nice;
use pathnum::{parse_graph, solve, Graph, GraphBuilder, PathPartition, SolveOptions};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "pathnum",
    version,
    about = "Exact path numbers of graphs with witness partitions"
)]
struct Cli {
    /// Graph file syntax, for input files and for `gen` output.
    #[arg(long, value_enum, global = true, default_value_t = Format::Dimacs)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// `p edge n m` header, `e u v` edges, `n v` isolated vertices.
    Dimacs,
    /// One `u v` pair per line; a lone token is an isolated vertex.
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Print the path number.
    Solve {
        file: String,
        /// Cap on the number of pattern variables.
        #[arg(long)]
        lmax: Option<usize>,
        /// Stream the enumerated patterns of every non-subcubic component
        /// as JSON lines before the result.
        #[arg(long)]
        dump_patterns: bool,
    },
    /// Print an optimal path partition, one path per line.
    Witness {
        file: String,
        #[arg(long)]
        lmax: Option<usize>,
    },
    /// Check a path partition (`-` reads it from stdin).
    Verify { file: String, partition: String },
    /// Path number by exhaustive search (small graphs only).
    Oracle { file: String },
    /// Fewest edge deletions that make the graph subcubic.
    Sen { file: String },
    /// Generate a graph, e.g. `gen wheel n=5` or `gen random_gnm n=8 m=12 --seed 3`.
    Gen {
        family: String,
        /// Parameters as key=value.
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the solver with exhaustive search on all small connected graphs.
    Selftest {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("cannot read {path}"))
    }
}

fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    for (i, line) in text.lines().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [c, ..] if c.starts_with('#') => {}
            [v] => {
                b.vertex(v);
            }
            [u, v] => b.edge(u, v).with_context(|| format!("line {}", i + 1))?,
            _ => bail!("line {}: expected `u v`", i + 1),
        }
    }
    Ok(b.build())
}

fn load(path: &str, format: Format) -> Result<Graph> {
    let text = read_source(path)?;
    let g = match format {
        Format::Dimacs => parse_graph(&text)?,
        Format::Edgelist => parse_edgelist(&text)?,
    };
    Ok(g)
}

fn options(lmax: Option<usize>, witness: bool) -> SolveOptions {
    SolveOptions {
        l_max: lmax,
        witness,
        ..SolveOptions::default()
    }
}

fn dump_patterns(g: &Graph, lmax: Option<usize>) -> Result<()> {
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    let mut failed = None;
    for (i, c) in g.components().iter().enumerate() {
        if c.m() == 0 || c.is_subcubic() {
            continue;
        }
        let nice = make_nice(c)?.nice_graph;
        let v4 = nice.high_vertices();
        for_each_pattern(&nice, &v4, lmax.unwrap_or(usize::MAX), |p| {
            let line = json!({ "component": i, "pattern": NamedPattern::from_pattern(&nice, &p) });
            match writeln!(out, "{line}") {
                Ok(()) => ControlFlow::Continue(()),
                Err(e) => {
                    failed = Some(e);
                    ControlFlow::Break(())
                }
            }
        })?;
        if failed.is_some() {
            break;
        }
    }
    match failed {
        Some(e) => Err(e.into()),
        None => Ok(out.flush()?),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    match cli.command {
        Command::Solve {
            file,
            lmax,
            dump_patterns: dump,
        } => {
            let g = load(&file, cli.format)?;
            if dump {
                if let Err(e) = dump_patterns(&g, lmax) {
                    // a closed reader only wants a prefix of the stream
                    let closed = e
                        .downcast_ref::<std::io::Error>()
                        .is_some_and(|e| e.kind() == ErrorKind::BrokenPipe);
                    if closed {
                        return Ok(ExitCode::SUCCESS);
                    }
                    return Err(e);
                }
            }
            let s = solve(&g, &options(lmax, false))?;
            if cli.json {
                println!("{}", json!({ "pn": s.pn, "stats": s.stats }));
            } else {
                println!("pn {}", s.pn);
            }
        }
        Command::Witness { file, lmax } => {
            let g = load(&file, cli.format)?;
            let s = solve(&g, &options(lmax, true))?;
            let p = s.partition.expect("witness requested");
            if cli.json {
                let paths: Vec<Vec<String>> = p.to_names(&g);
                println!(
                    "{}",
                    json!({ "pn": s.pn, "paths": paths, "stats": s.stats })
                );
            } else {
                print!("{}", p.to_text(&g));
            }
        }
        Command::Verify { file, partition } => {
            if file == "-" && partition == "-" {
                bail!("only one of the inputs can come from stdin");
            }
            let g = load(&file, cli.format)?;
            let text = read_source(&partition)?;
            let verdict =
                PathPartition::parse(&g, &text).and_then(|p| p.check(&g).map(|_| p.len()));
            match verdict {
                Ok(n) => {
                    if cli.json {
                        println!("{}", json!({ "valid": true, "paths": n }));
                    } else {
                        println!("valid {n}");
                    }
                }
                Err(e) => {
                    if cli.json {
                        println!("{}", json!({ "valid": false, "reason": e.to_string() }));
                    }
                    eprintln!("{e}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Oracle { file } => {
            let g = load(&file, cli.format)?;
            let pn = brute_pn(&g)?;
            if cli.json {
                println!("{}", json!({ "pn": pn }));
            } else {
                println!("pn {pn}");
            }
        }
        Command::Sen { file } => {
            let g = load(&file, cli.format)?;
            let sen = sen_bruteforce(&g)?;
            if cli.json {
                println!("{}", json!({ "sen": sen, "high": g.high() }));
            } else {
                println!("sen {sen}");
            }
        }
        Command::Gen {
            family,
            params,
            seed,
        } => {
            let mut map = BTreeMap::new();
            for p in &params {
                let (k, v) = p
                    .split_once('=')
                    .ok_or_else(|| anyhow!("parameter `{p}` is not key=value"))?;
                let v: usize = v.parse().with_context(|| format!("parameter `{k}`"))?;
                map.insert(k.to_string(), v);
            }
            let g = gen::gen(&family, &map, seed)?;
            match cli.format {
                Format::Dimacs => print!("{}", g.to_text()),
                Format::Edgelist => print!("{}", g.to_edgelist()),
            }
        }
        Command::Selftest { nmax } => return selftest(nmax, cli.json),
    }
    Ok(ExitCode::SUCCESS)
}

fn selftest(nmax: usize, json_out: bool) -> Result<ExitCode> {
    use rayon::prelude::*;
    let graphs: Vec<Graph> = connected_graphs_up_to(nmax, false)
        .into_iter()
        .filter(|g| g.m() <= pathnum::oracle::DEFAULT_CAP)
        .collect();
    let failures: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let want = brute_pn(g).ok()?;
            let s = solve(g, &options(None, true)).ok();
            let ok = s.as_ref().is_some_and(|s| {
                s.pn == want
                    && s.partition
                        .as_ref()
                        .is_some_and(|p| p.len() == want && p.check(g).is_ok())
            });
            (!ok).then(|| g.to_text())
        })
        .collect();
    if json_out {
        println!(
            "{}",
            json!({ "graphs": graphs.len(), "mismatches": failures.len() })
        );
    } else {
        for f in &failures {
            println!("mismatch:\n{f}");
        }
        println!(
            "selftest {} graphs, {} mismatches",
            graphs.len(),
            failures.len()
        );
    }
    Ok(if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
