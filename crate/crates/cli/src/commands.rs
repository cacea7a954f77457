use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;
use vsdo_core::baseline::exact_ssrp;
use vsdo_core::dimacs::{parse_dimacs, write_dimacs};
use vsdo_core::generate::generate;
use vsdo_core::{Digraph, Distance, SzProvider, Vsdo};

use crate::report::{percentile, RunReport};
use crate::Command;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] vsdo_core::Error),
    #[error("{path}: {source}")]
    File { path: String, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|source| CliError::File {
        path: path.display().to_string(),
        source,
    })
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| CliError::File {
            path: path.display().to_string(),
            source,
        })
}

fn load_graph(path: &Path) -> Result<Digraph> {
    Ok(parse_dimacs(BufReader::new(open(path)?))?)
}

fn load_oracle(path: &Path) -> Result<Vsdo> {
    Ok(Vsdo::read_from(&mut BufReader::new(open(path)?))?)
}

/// 1-based command-line id to 0-based vertex.
fn vertex(id: usize, n: usize, what: &str) -> Result<usize> {
    if id == 0 || id > n {
        return Err(CliError::Usage(format!(
            "{what} {id} is not a vertex in 1..={n}"
        )));
    }
    Ok(id - 1)
}

fn fmt_distance(d: Distance) -> String {
    match d {
        Distance::Finite(v) => v.to_string(),
        Distance::Unreachable => "INF".to_owned(),
    }
}

fn timed_build(g: &Digraph, s: usize, eps: f64, provider: SzProvider) -> Result<(Vsdo, f64)> {
    let start = Instant::now();
    let o = Vsdo::build(g, s, eps, provider)?;
    Ok((o, start.elapsed().as_secs_f64()))
}

pub fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Gen {
            family,
            n,
            m,
            maxw,
            seed,
            output,
        } => {
            if maxw == 0 {
                return Err(CliError::Usage("--maxw must be at least 1".into()));
            }
            let g = generate(family, n, m.unwrap_or(4 * n), maxw, seed);
            let mut w = create(&output)?;
            writeln!(w, "c {family} n={n} maxw={maxw} seed={seed}")?;
            write_dimacs(&g, &mut w)?;
            w.flush()?;
        }
        Command::Build {
            graph,
            source,
            eps,
            sz_provider,
            output,
        } => {
            let g = load_graph(&graph)?;
            let s = vertex(source, g.n(), "source")?;
            let (o, secs) = timed_build(&g, s, eps, sz_provider)?;
            let mut w = create(&output)?;
            o.write_to(&mut w)?;
            w.flush()?;
            println!("{}", RunReport::for_oracle("build", &o, secs).to_json());
        }
        Command::Query { oracle, x, t } => {
            let o = load_oracle(&oracle)?;
            let x = vertex(x, o.n(), "x")?;
            let t = vertex(t, o.n(), "t")?;
            println!("{}", fmt_distance(o.query(x, t)?));
        }
        Command::Batch { oracle, queries } => {
            let o = load_oracle(&oracle)?;
            let input = BufReader::new(open(&queries)?);
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            for (idx, line) in input.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let bad = || {
                    CliError::Usage(format!(
                        "{}:{}: expected `x<TAB>t`",
                        queries.display(),
                        idx + 1
                    ))
                };
                let (xs, ts) = line.trim().split_once('\t').ok_or_else(bad)?;
                let xi: usize = xs.trim().parse().map_err(|_| bad())?;
                let ti: usize = ts.trim().parse().map_err(|_| bad())?;
                let d = o.query(vertex(xi, o.n(), "x")?, vertex(ti, o.n(), "t")?)?;
                writeln!(out, "{xi}\t{ti}\t{}", fmt_distance(d))?;
            }
            out.flush()?;
        }
        Command::Verify {
            graph,
            source,
            eps,
            sz_provider,
            max_n,
        } => {
            let g = load_graph(&graph)?;
            if g.n() > max_n {
                return Err(CliError::Usage(format!(
                    "graph has {} vertices; verify is limited to --max-n {max_n}",
                    g.n()
                )));
            }
            let s = vertex(source, g.n(), "source")?;
            let (o, secs) = timed_build(&g, s, eps, sz_provider)?;
            let exact = exact_ssrp(&g, s)?;
            let mut report = RunReport::for_oracle("verify", &o, secs);
            let (mut queries, mut violations, mut worst) = (0u64, 0u64, 1.0f64);
            for x in (0..g.n()).filter(|&x| x != s) {
                for t in 0..g.n() {
                    let got = o.query(x, t)?;
                    let want = exact.get(x, t);
                    queries += 1;
                    if !got.within_factor(want, 1.0 + eps) {
                        violations += 1;
                        eprintln!("violation: x={} t={} got {got} exact {want}", x + 1, t + 1);
                    }
                    if let Some(r) = got.ratio_to(want) {
                        worst = worst.max(r);
                    }
                }
            }
            report.queries = Some(queries);
            report.max_ratio = Some(worst);
            report.violations = Some(violations);
            println!("{}", report.to_json());
            if violations > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Stats { oracle } => {
            let o = load_oracle(&oracle)?;
            let st = o.stats();
            let json = serde_json::json!({
                "n": o.n(),
                "m": o.m(),
                "max_weight": o.max_weight(),
                "source": o.source() + 1,
                "eps": o.config().eps,
                "eps1": o.config().eps1,
                "eps2": o.config().eps2,
                "sz_provider": o.config().sz_provider.as_str(),
                "oracle_bytes": o.to_bytes().len(),
                "nodes": st.nodes,
                "leaves": st.leaves,
                "depth": st.depth,
                "vertices_per_depth": st.vertices_per_depth,
                "upd_entries": st.upd_entries,
                "max_upd_list": st.max_upd_list,
                "path_vertices": st.path_vertices,
                "leaf_edges": st.leaf_edges,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&json).expect("plain data")
            );
        }
        Command::Bench {
            graph,
            source,
            eps,
            sz_provider,
            queries,
            seed,
        } => {
            let g = load_graph(&graph)?;
            let s = vertex(source, g.n(), "source")?;
            if g.n() < 2 {
                return Err(CliError::Usage("bench needs at least two vertices".into()));
            }
            let (o, secs) = timed_build(&g, s, eps, sz_provider)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut micros = Vec::with_capacity(queries as usize);
            for _ in 0..queries {
                let x = (s + rng.gen_range(1..g.n())) % g.n();
                let t = rng.gen_range(0..g.n());
                let start = Instant::now();
                std::hint::black_box(o.query(x, t)?);
                micros.push(start.elapsed().as_secs_f64() * 1e6);
            }
            micros.sort_by(f64::total_cmp);
            let mut report = RunReport::for_oracle("bench", &o, secs);
            report.queries = Some(queries);
            report.query_p50_us = Some(percentile(&micros, 0.50));
            report.query_p99_us = Some(percentile(&micros, 0.99));
            println!("{}", report.to_json());
        }
    }
    Ok(ExitCode::SUCCESS)
}
