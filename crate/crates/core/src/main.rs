use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use treeburn::bench::{self, CorpusSpec};
use treeburn::bounds::prior_bounds;
use treeburn::certificate::{parse_and_verify, CertificateDocument};
use treeburn::construct::construct_general;
use treeburn::edgelist;
use treeburn::exact::burning_number;
use treeburn::graph::{
    gen_cycle, gen_double_star, gen_full_binary, gen_path, gen_random_no_deg2, gen_random_tree,
};
use treeburn::{simulate, Graph, Schedule, Tree};

#[derive(Parser)]
#[command(name = "treeburn", version, about = "Burning numbers of trees: simulate, solve, construct, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Path,
    Cycle,
    FullBinary,
    DoubleStar,
    RandomTree,
    RandomNoDeg2,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list.
    Gen {
        kind: GenKind,
        /// Order (path, cycle, random-*), height (full-binary) or two leaf counts (double-star).
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Burn a graph from the given sources; `_` leaves a round empty.
    Simulate {
        graph: PathBuf,
        #[arg(required = true)]
        sources: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exact burning number of a small connected graph.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = 30)]
        cap: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build a bounded burning sequence for a tree and write its certificate.
    Construct {
        tree: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed the input tree was generated with, recorded in the certificate.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Upper bounds for a tree with `n` vertices, `n2` of degree two.
    Bounds {
        n: u64,
        n2: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Re-check a certificate from its tree and sequence.
    Verify { certificate: PathBuf },
    /// Run a seeded corpus, e.g. `random-tree:100:8:18,random-no-deg2:20:10:200`.
    Bench {
        corpus: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        cap: usize,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit status 1: a contract does not hold. Status 2: bad input.
enum Failure {
    Contract(String),
    Usage(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    edgelist::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(kind: GenKind, params: &[usize], seed: u64) -> Result<String, Failure> {
    let want = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(usage(format!("expected {k} numeric parameter(s), got {}", params.len())))
        }
    };
    let graph = match kind {
        GenKind::DoubleStar => {
            want(2)?;
            gen_double_star(params[0], params[1]).map(Tree::into_graph)
        }
        GenKind::FullBinary => {
            want(1)?;
            let h = u32::try_from(params[0]).map_err(usage)?;
            gen_full_binary(h).map(Tree::into_graph)
        }
        _ => {
            want(1)?;
            let n = params[0];
            match kind {
                GenKind::Path => gen_path(n).map(Tree::into_graph),
                GenKind::Cycle => gen_cycle(n),
                GenKind::RandomTree => gen_random_tree(n, seed).map(Tree::into_graph),
                _ => gen_random_no_deg2(n, seed).map(Tree::into_graph),
            }
        }
    }
    .map_err(usage)?;
    let header = match kind {
        GenKind::RandomTree => format!("# random-tree {} seed {seed}\n", params[0]),
        GenKind::RandomNoDeg2 => format!("# random-no-deg2 {} seed {seed}\n", params[0]),
        _ => String::new(),
    };
    Ok(header + &edgelist::render(&graph))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen {
            kind,
            params,
            seed,
            out,
        } => emit(out.as_deref(), &gen(kind, &params, seed)?),

        Command::Simulate {
            graph,
            sources,
            format,
        } => {
            let g = read_graph(&graph)?;
            let rounds = sources
                .iter()
                .map(|s| match s.as_str() {
                    "_" => Ok(None),
                    _ => s.parse().map(Some).map_err(|_| usage(format!("bad source {s:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let schedule = Schedule::new(rounds).map_err(usage)?;
            let labels = simulate(&g, &schedule).map_err(|e| Failure::Contract(e.to_string()))?;
            let mut order: Vec<(usize, usize)> =
                labels.labels().iter().enumerate().map(|(v, &r)| (r, v)).collect();
            order.sort();
            match format {
                Format::Json => {
                    let map: serde_json::Map<String, serde_json::Value> =
                        order.iter().map(|&(r, v)| (v.to_string(), r.into())).collect();
                    let doc = serde_json::json!({ "total_rounds": labels.total_rounds(), "labels": map });
                    println!("{doc}");
                }
                Format::Csv => {
                    println!("vertex,round");
                    for (r, v) in order {
                        println!("{v},{r}");
                    }
                }
                Format::Text => {
                    let body: Vec<String> = order.iter().map(|(r, v)| format!("{v}:{r}")).collect();
                    println!("rounds {}", labels.total_rounds());
                    println!("{{{}}}", body.join(", "));
                }
            }
            Ok(())
        }

        Command::Exact { graph, cap, format } => {
            let g = read_graph(&graph)?;
            if g.vertex_count() > cap {
                return Err(usage(format!(
                    "order {} exceeds --cap {cap}",
                    g.vertex_count()
                )));
            }
            let r = burning_number(&g).map_err(usage)?;
            let witness: Vec<String> = r.witness.sources().iter().map(|v| v.to_string()).collect();
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "burning_number": r.burning_number,
                        "witness": r.witness.sources(),
                        "nodes_explored": r.nodes_explored,
                    })
                ),
                Format::Csv => {
                    println!("burning_number,witness,nodes_explored");
                    println!("{},{},{}", r.burning_number, witness.join(" "), r.nodes_explored);
                }
                Format::Text => {
                    println!("burning number {}", r.burning_number);
                    println!("witness {}", witness.join(" "));
                    println!("nodes explored {}", r.nodes_explored);
                }
            }
            Ok(())
        }

        Command::Construct { tree, out, seed } => {
            let g = read_graph(&tree)?;
            let t = Tree::try_from(g).map_err(|e| usage(format!("{}: {e}", tree.display())))?;
            let cert = construct_general(&t).map_err(|e| Failure::Contract(e.to_string()))?;
            let doc = CertificateDocument::new(&cert, seed);
            emit(out.as_deref(), &doc.to_json())?;
            eprintln!("length {} target {}", cert.sequence.len(), cert.target);
            Ok(())
        }

        Command::Bounds { n, n2, format } => {
            if n == 0 || n2 > n {
                return Err(usage("need n >= 1 and n2 <= n"));
            }
            let table = prior_bounds(n, n2);
            match format {
                Format::Json => println!("{}", serde_json::to_string(&table).expect("table serializes")),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(std::io::stdout());
                    w.serialize(&table).and_then(|_| Ok(w.flush()?)).map_err(usage)?;
                }
                Format::Text => {
                    let t = &table;
                    let rows: [(&str, String); 12] = [
                        ("n", t.n.to_string()),
                        ("n2", t.n2.to_string()),
                        ("m", t.m.to_string()),
                        ("conjecture", t.conjecture.to_string()),
                        ("main1", t.main1.to_string()),
                        ("murakami", t.murakami.to_string()),
                        ("bessy", t.bessy.to_string()),
                        ("land_lu", t.land_lu.to_string()),
                        ("bastide_floor", t.bastide_floor.to_string()),
                        ("bastide", t.bastide.clone()),
                        ("bonato_2016", t.bonato_2016.to_string()),
                        ("corollary_main_applies", t.corollary_main_applies.to_string()),
                    ];
                    for (k, v) in rows {
                        println!("{k:<24}{v}");
                    }
                }
            }
            Ok(())
        }

        Command::Verify { certificate } => match parse_and_verify(&read(&certificate)?) {
            Ok(v) => {
                println!("ok n={} n2={} length={} target={}", v.n, v.n2, v.length, v.target);
                Ok(())
            }
            Err(f) => Err(Failure::Contract(format!("{}: {}", f.kind, f.detail))),
        },

        Command::Bench {
            corpus,
            seed,
            cap,
            jobs,
            out,
        } => {
            let spec: CorpusSpec = corpus.parse().map_err(usage)?;
            let rows = bench::run(&spec, seed, cap, jobs).map_err(|e| match e {
                bench::BenchError::Spec { .. } => usage(e),
                _ => Failure::Contract(e.to_string()),
            })?;
            emit(out.as_deref(), &bench::to_csv(&rows))?;
            let broken: Vec<&str> = rows
                .iter()
                .filter(|r| !r.contract_holds())
                .map(|r| r.id.as_str())
                .collect();
            if broken.is_empty() {
                Ok(())
            } else {
                Err(Failure::Contract(format!(
                    "bound contract violated: {}",
                    broken.join(" ")
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Contract(reason)) => {
            eprintln!("error: {reason}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(reason)) => {
            eprintln!("error: {reason}");
            ExitCode::from(2)
        }
    }
}
