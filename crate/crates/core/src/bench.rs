//! Seeded corpus runs.
//!
//! A corpus spec is a comma-separated list of `kind:count:min:max` entries,
//! e.g. `random-tree:200:8:18,random-no-deg2:50:20:100`. Instance orders and
//! seeds are drawn in order from one SplitMix64 stream seeded with the run
//! seed, so a spec and seed fully determine the corpus. Rows come back
//! sorted by instance id whatever the worker count.

use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::prior_bounds;
use crate::construct::{construct_general, ConstructError};
use crate::exact::burning_number;
use crate::graph::{gen_path, gen_random_no_deg2, gen_random_tree, GraphError, Tree};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("bad corpus entry {entry:?}: {reason}")]
    Spec { entry: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("instance {id}: {source}")]
    Construct {
        id: String,
        source: ConstructError,
    },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    RandomTree,
    RandomNoDeg2,
    Path,
}

impl CorpusKind {
    fn name(self) -> &'static str {
        match self {
            CorpusKind::RandomTree => "random-tree",
            CorpusKind::RandomNoDeg2 => "random-no-deg2",
            CorpusKind::Path => "path",
        }
    }

    fn generate(self, n: usize, seed: u64) -> Result<Tree, GraphError> {
        match self {
            CorpusKind::RandomTree => gen_random_tree(n, seed),
            CorpusKind::RandomNoDeg2 => gen_random_no_deg2(n, seed),
            CorpusKind::Path => gen_path(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub kind: CorpusKind,
    pub count: usize,
    pub min_order: usize,
    pub max_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec(pub Vec<CorpusEntry>);

impl FromStr for CorpusSpec {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, BenchError> {
        s.split(',')
            .map(|raw| {
                let entry = raw.trim();
                let bad = |reason: &str| BenchError::Spec {
                    entry: entry.to_string(),
                    reason: reason.to_string(),
                };
                let parts: Vec<&str> = entry.split(':').collect();
                let [kind, count, lo, hi] = parts[..] else {
                    return Err(bad("expected kind:count:min:max"));
                };
                let kind = match kind {
                    "random-tree" => CorpusKind::RandomTree,
                    "random-no-deg2" => CorpusKind::RandomNoDeg2,
                    "path" => CorpusKind::Path,
                    _ => return Err(bad("kind must be random-tree, random-no-deg2 or path")),
                };
                let num = |x: &str| x.parse::<usize>().map_err(|_| bad("counts and orders must be integers"));
                let (count, min_order, max_order) = (num(count)?, num(lo)?, num(hi)?);
                if min_order == 0 || min_order > max_order {
                    return Err(bad("need 1 <= min <= max"));
                }
                Ok(CorpusEntry {
                    kind,
                    count,
                    min_order,
                    max_order,
                })
            })
            .collect::<Result<_, _>>()
            .map(CorpusSpec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub kind: CorpusKind,
    pub order: usize,
    pub seed: u64,
}

/// Expands a spec into concrete instances.
pub fn instances(spec: &CorpusSpec, seed: u64) -> Vec<Instance> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut out = Vec::new();
    for (e, entry) in spec.0.iter().enumerate() {
        for i in 0..entry.count {
            let order = rng.random_range(entry.min_order..=entry.max_order);
            let seed = rng.next_u64();
            out.push(Instance {
                id: format!("{e:02}-{}-{i:05}", entry.kind.name()),
                kind: entry.kind,
                order,
                seed,
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub id: String,
    pub kind: &'static str,
    pub seed: u64,
    pub n: u64,
    pub n2: u64,
    pub exact: Option<usize>,
    pub constructed: usize,
    pub m: u64,
    pub conjecture: u64,
    pub main1: u64,
    pub murakami: u64,
    pub bessy: u64,
    pub land_lu: u64,
    pub bastide_floor: u64,
    pub bastide: String,
    pub bonato_2016: u64,
    pub corollary_main_applies: bool,
    pub generate_us: u128,
    pub construct_us: u128,
    pub exact_us: u128,
}

/// Number of trailing timing columns in [`BenchRow`].
pub const TIMING_COLUMNS: usize = 3;

impl BenchRow {
    /// `exact <= constructed <= main1`.
    pub fn contract_holds(&self) -> bool {
        self.constructed as u64 <= self.main1 && self.exact.is_none_or(|b| b <= self.constructed)
    }
}

fn run_instance(inst: &Instance, exact_cap: usize) -> Result<BenchRow, BenchError> {
    let clock = Instant::now();
    let tree = inst.kind.generate(inst.order, inst.seed)?;
    let generate_us = clock.elapsed().as_micros();

    let clock = Instant::now();
    let cert = construct_general(&tree).map_err(|source| BenchError::Construct {
        id: inst.id.clone(),
        source,
    })?;
    let construct_us = clock.elapsed().as_micros();

    let clock = Instant::now();
    let exact = (tree.vertex_count() <= exact_cap)
        .then(|| burning_number(&tree).map(|r| r.burning_number).ok())
        .flatten();
    let exact_us = clock.elapsed().as_micros();

    let table = prior_bounds(cert.n, cert.n2);
    Ok(BenchRow {
        id: inst.id.clone(),
        kind: inst.kind.name(),
        seed: inst.seed,
        n: cert.n,
        n2: cert.n2,
        exact,
        constructed: cert.sequence.len(),
        m: table.m,
        conjecture: table.conjecture,
        main1: table.main1,
        murakami: table.murakami,
        bessy: table.bessy,
        land_lu: table.land_lu,
        bastide_floor: table.bastide_floor,
        bastide: table.bastide,
        bonato_2016: table.bonato_2016,
        corollary_main_applies: table.corollary_main_applies,
        generate_us,
        construct_us,
        exact_us,
    })
}

/// Runs every instance on `jobs` workers (0 = rayon default); exact burning
/// numbers only for orders up to `exact_cap`.
pub fn run(
    spec: &CorpusSpec,
    seed: u64,
    exact_cap: usize,
    jobs: usize,
) -> Result<Vec<BenchRow>, BenchError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| BenchError::Pool(e.to_string()))?;
    let list = instances(spec, seed);
    let mut rows = pool.install(|| {
        list.par_iter()
            .map(|inst| run_instance(inst, exact_cap))
            .collect::<Result<Vec<_>, _>>()
    })?;
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}
