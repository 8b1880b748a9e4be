//! Seeded corpus run: exact value, constructed length and every bound per
//! instance, as CSV.
//!
//!     cargo run --release --example bench_corpus [SPEC] [SEED]

use treeburn::bench::{run, to_csv, BenchRow, CorpusSpec};

fn main() {
    let mut args = std::env::args().skip(1);
    let spec: CorpusSpec = args
        .next()
        .unwrap_or_else(|| "random-tree:40:8:18,random-no-deg2:10:20:200,path:5:10:60".into())
        .parse()
        .unwrap();
    let seed = args.next().map_or(2024, |s| s.parse().unwrap());

    let rows = run(&spec, seed, 30, 0).unwrap();
    print!("{}", to_csv(&rows));

    let exact: Vec<&BenchRow> = rows.iter().filter(|r| r.exact.is_some()).collect();
    let tight = exact.iter().filter(|r| r.exact == Some(r.constructed)).count();
    eprintln!(
        "{} instances, all within bounds: {}; constructed = exact on {tight} of {}",
        rows.len(),
        rows.iter().all(BenchRow::contract_holds),
        exact.len()
    );
}
