//! Exact burning numbers for small connected graphs.
//!
//! [`burnable_within`] searches in the ball-cover view: `(x_1, .., x_k)` is a
//! burning sequence iff the balls `N_{k-i}[x_i]` cover every vertex and
//! `dist(x_i, x_j) >= j - i` for `i < j` (otherwise `x_j` would be burned
//! before its round starts). [`burning_number_naive`] is the unpruned
//! definitional oracle the search is cross-checked against.

use thiserror::Error;

use crate::burning::{validate_sequence, BurningSequence};
use crate::graph::{Graph, Tree, Vertex};

/// Largest order the bitset search supports.
pub const MAX_ORDER: usize = 128;
pub const NAIVE_MAX_ORDER: usize = 12;
pub const SPANNING_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph of order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub burning_number: usize,
    pub witness: BurningSequence,
    pub nodes_explored: u64,
}

fn check(g: &Graph, limit: usize) -> Result<(), ExactError> {
    if g.vertex_count() > limit {
        return Err(ExactError::TooLarge {
            order: g.vertex_count(),
            limit,
        });
    }
    if !g.is_connected() {
        return Err(ExactError::Disconnected);
    }
    Ok(())
}

struct BallSearch {
    n: usize,
    full: u128,
    dist: Vec<Vec<usize>>,
    /// `balls[r][v]`: vertices within distance `r` of `v`.
    balls: Vec<Vec<u128>>,
    /// Candidates by descending eccentricity, then ascending id.
    order: Vec<Vertex>,
    nodes: u64,
}

impl BallSearch {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let dist: Vec<Vec<usize>> = g
            .vertices()
            .map(|v| {
                g.distances_from(v)
                    .into_iter()
                    .map(|d| d.expect("connected"))
                    .collect()
            })
            .collect();
        let ecc: Vec<usize> = dist.iter().map(|row| *row.iter().max().unwrap()).collect();
        let max_ecc = ecc.iter().copied().max().unwrap_or(0);
        let balls = (0..=max_ecc)
            .map(|r| {
                dist.iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(_, &d)| d <= r)
                            .fold(0u128, |m, (w, _)| m | 1 << w)
                    })
                    .collect()
            })
            .collect();
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(ecc[v]), v));
        let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        Self {
            n,
            full,
            dist,
            balls,
            order,
            nodes: 0,
        }
    }

    fn ball(&self, radius: usize, v: Vertex) -> u128 {
        let r = radius.min(self.balls.len() - 1);
        self.balls[r][v]
    }

    fn search(&mut self, k: usize) -> Option<Vec<Vertex>> {
        if k == 0 || k > self.n {
            return None;
        }
        let mut chosen = Vec::with_capacity(k);
        self.dfs(k, &mut chosen, 0).then_some(chosen)
    }

    fn dfs(&mut self, k: usize, chosen: &mut Vec<Vertex>, covered: u128) -> bool {
        self.nodes += 1;
        let round = chosen.len();
        let uncovered = self.full & !covered;
        if round == k {
            return uncovered == 0;
        }
        // Even the best remaining balls cannot cover what is left.
        let reachable: u32 = (round..k)
            .map(|j| {
                let radius = k - 1 - j;
                (0..self.n)
                    .map(|v| (self.ball(radius, v) & uncovered).count_ones())
                    .max()
                    .unwrap_or(0)
            })
            .sum();
        if reachable < uncovered.count_ones() {
            return false;
        }
        let radius = k - 1 - round;
        for idx in 0..self.order.len() {
            let x = self.order[idx];
            let eligible = chosen
                .iter()
                .enumerate()
                .all(|(a, &y)| self.dist[y][x] >= round - a);
            if !eligible {
                continue;
            }
            chosen.push(x);
            if self.dfs(k, chosen, covered | self.ball(radius, x)) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// A burning sequence of length exactly `k`, if one exists.
pub fn burnable_within(g: &Graph, k: usize) -> Result<Option<BurningSequence>, ExactError> {
    check(g, MAX_ORDER)?;
    let mut search = BallSearch::new(g);
    Ok(search.search(k).map(|s| witness(g, s)))
}

fn witness(g: &Graph, sources: Vec<Vertex>) -> BurningSequence {
    let seq = BurningSequence::new(sources).expect("ball-cover sources are distinct");
    validate_sequence(g, &seq).expect("ball-cover witness must validate");
    seq
}

/// Burning number by increasing `k` until [`burnable_within`] succeeds.
pub fn burning_number(g: &Graph) -> Result<ExactResult, ExactError> {
    check(g, MAX_ORDER)?;
    let mut search = BallSearch::new(g);
    for k in 1..=g.vertex_count() {
        if let Some(sources) = search.search(k) {
            return Ok(ExactResult {
                burning_number: k,
                witness: witness(g, sources),
                nodes_explored: search.nodes,
            });
        }
    }
    unreachable!("a connected graph always burns within n rounds")
}

/// Burning number by simulating every sequence of distinct vertices, shortest
/// first. Only for `n <= 12`.
pub fn burning_number_naive(g: &Graph) -> Result<ExactResult, ExactError> {
    check(g, NAIVE_MAX_ORDER)?;
    let n = g.vertex_count();
    let mut tried = 0u64;
    for k in 1..=n {
        let mut prefix = Vec::with_capacity(k);
        let mut used = vec![false; n];
        if let Some(seq) = enumerate(g, k, &mut prefix, &mut used, &mut tried) {
            return Ok(ExactResult {
                burning_number: k,
                witness: seq,
                nodes_explored: tried,
            });
        }
    }
    unreachable!("a connected graph always burns within n rounds")
}

fn enumerate(
    g: &Graph,
    k: usize,
    prefix: &mut Vec<Vertex>,
    used: &mut [bool],
    tried: &mut u64,
) -> Option<BurningSequence> {
    if prefix.len() == k {
        *tried += 1;
        let seq = BurningSequence::new(prefix.clone()).expect("distinct by construction");
        return validate_sequence(g, &seq).ok().map(|_| seq);
    }
    for v in g.vertices() {
        if used[v] {
            continue;
        }
        used[v] = true;
        prefix.push(v);
        let found = enumerate(g, k, prefix, used, tried);
        prefix.pop();
        used[v] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Minimum burning number over all spanning trees. Only for `n <= 8`.
pub fn spanning_tree_min(g: &Graph) -> Result<usize, ExactError> {
    check(g, SPANNING_MAX_ORDER)?;
    let n = g.vertex_count();
    let edges = g.edges();
    let mut best = usize::MAX;
    let mut pick = Vec::with_capacity(n - 1);
    for_each_spanning_tree(n, &edges, 0, &mut pick, &mut |tree_edges| {
        let t = Tree::new(n, tree_edges.iter().copied()).expect("acyclic with n-1 edges");
        let b = burning_number(&t).expect("small connected tree").burning_number;
        best = best.min(b);
    });
    Ok(best)
}

fn for_each_spanning_tree(
    n: usize,
    edges: &[(Vertex, Vertex)],
    start: usize,
    pick: &mut Vec<(Vertex, Vertex)>,
    visit: &mut impl FnMut(&[(Vertex, Vertex)]),
) {
    if pick.len() == n - 1 {
        visit(pick);
        return;
    }
    let needed = n - 1 - pick.len();
    for i in start..edges.len() {
        if edges.len() - i < needed {
            break;
        }
        pick.push(edges[i]);
        if is_forest(n, pick) {
            for_each_spanning_tree(n, edges, i + 1, pick, visit);
        }
        pick.pop();
    }
}

fn is_forest(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}
