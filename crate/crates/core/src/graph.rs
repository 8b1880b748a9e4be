//! Immutable simple graphs and trees, the structural queries the tree
//! constructions rely on, and deterministic generators.
//!
//! Vertex ids are dense and 0-based. Every operation that derives a new
//! structure from an old one (induced subtrees, splits, augmentation) hands
//! back a relabeling so results can be traced to the source ids.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::Deref;

use rand::{RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

/// Dense 0-based vertex identifier.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {0}) is a loop")]
    Loop(Vertex),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph contains a cycle")]
    NotAcyclic,
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices, rejecting loops, repeated
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            adjacency,
            edge_count: seen.len(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adjacency.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.vertices()
            .flat_map(|u| {
                self.adjacency[u]
                    .iter()
                    .filter(move |&&v| u < v)
                    .map(move |&v| (u, v))
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.distances_from(0).iter().all(Option::is_some)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced on `keep`, relabeled densely in the given order.
    /// Returns the subgraph and the map from new ids to ids in `self`.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let mut adjacency = vec![Vec::new(); keep.len()];
        let mut edge_count = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in self.neighbors(v) {
                if local[w] != usize::MAX {
                    adjacency[i].push(local[w]);
                    if i < local[w] {
                        edge_count += 1;
                    }
                }
            }
            adjacency[i].sort_unstable();
        }
        (
            Graph {
                adjacency,
                edge_count,
            },
            keep.to_vec(),
        )
    }
}

/// A connected acyclic graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
}

impl Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

impl TryFrom<Graph> for Tree {
    type Error = GraphError;

    fn try_from(graph: Graph) -> Result<Self, GraphError> {
        if !graph.is_connected() {
            return Err(GraphError::NotConnected);
        }
        if graph.edge_count() + 1 != graph.vertex_count() {
            return Err(GraphError::NotAcyclic);
        }
        Ok(Tree { graph })
    }
}

impl Tree {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        Graph::new(vertex_count, edges)?.try_into()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.degree(v) == 1
    }

    /// Order of the component of `T - uv` that contains `v`.
    pub fn component_size_beyond(&self, u: Vertex, v: Vertex) -> Result<usize, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok(self.component_beyond(u, v).len())
    }

    /// Vertices of the component of `T - uv` containing `v`, `v` first.
    /// Assumes `uv` is an edge.
    pub(crate) fn component_beyond(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut out = vec![v];
        let mut stack = vec![(v, u)];
        while let Some((x, parent)) = stack.pop() {
            for &y in self.neighbors(x) {
                if y != parent {
                    out.push(y);
                    stack.push((y, x));
                }
            }
        }
        out
    }

    /// Number of degree-2 vertices and their ids in ascending order.
    pub fn degree2_census(&self) -> (usize, Vec<Vertex>) {
        let list: Vec<Vertex> = self.vertices().filter(|&v| self.degree(v) == 2).collect();
        (list.len(), list)
    }

    /// Vertices of degree at least two.
    pub fn internal_count(&self) -> usize {
        self.vertices().filter(|&v| self.degree(v) >= 2).count()
    }

    /// Induced subtree on `keep`; fails if `keep` does not induce a tree.
    pub fn induced_subtree(&self, keep: &[Vertex]) -> Result<(Tree, Vec<Vertex>), GraphError> {
        let (g, map) = self.graph.induced(keep);
        Ok((g.try_into()?, map))
    }

    /// Attaches a fresh leaf to every degree-2 vertex. New leaves get ids
    /// `n, n+1, ...` in ascending order of their attachment vertex, so the
    /// original tree is the subtree induced on ids `0..n`.
    pub fn augment_degree2(&self) -> (Tree, BTreeMap<Vertex, Vertex>) {
        let n = self.vertex_count();
        let (_, deg2) = self.degree2_census();
        let attachments: BTreeMap<Vertex, Vertex> = deg2
            .iter()
            .enumerate()
            .map(|(i, &w)| (n + i, w))
            .collect();
        let edges = self
            .edges()
            .into_iter()
            .chain(attachments.iter().map(|(&leaf, &w)| (w, leaf)));
        let tree = Tree::new(n + deg2.len(), edges).expect("adding pendant leaves keeps a tree");
        (tree, attachments)
    }

    /// Replaces every degree-2 vertex by two pendant copies, one on each side.
    pub fn split_at_degree2(&self) -> Forest {
        let n = self.vertex_count();
        // Node slots: vertex v keeps slot v; a degree-2 vertex w additionally
        // owns slot `extra[w]` for the copy facing its larger neighbor.
        let mut extra = vec![usize::MAX; n];
        let mut origin: Vec<Vertex> = (0..n).collect();
        for w in self.vertices().filter(|&w| self.degree(w) == 2) {
            extra[w] = origin.len();
            origin.push(w);
        }
        let slot = |x: Vertex, toward: Vertex| -> usize {
            if extra[x] != usize::MAX && self.neighbors(x)[1] == toward {
                extra[x]
            } else {
                x
            }
        };
        let mut adjacency = vec![Vec::new(); origin.len()];
        for (u, v) in self.edges() {
            let (a, b) = (slot(u, v), slot(v, u));
            adjacency[a].push(b);
            adjacency[b].push(a);
        }

        let mut seen = vec![false; origin.len()];
        let mut components = Vec::new();
        let mut maps = Vec::new();
        for start in 0..origin.len() {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < members.len() {
                for &y in &adjacency[members[i]] {
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            let index: BTreeMap<usize, usize> =
                members.iter().enumerate().map(|(i, &s)| (s, i)).collect();
            let edges = members.iter().flat_map(|&s| {
                adjacency[s]
                    .iter()
                    .filter(move |&&t| s < t)
                    .map(|t| (index[&s], index[t]))
                    .collect::<Vec<_>>()
            });
            let tree = Tree::new(members.len(), edges).expect("split pieces of a tree are trees");
            components.push(tree);
            maps.push(members.iter().map(|&s| origin[s]).collect());
        }
        Forest { components, maps }
    }
}

/// Disjoint trees, each with a map from its local ids to a source tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    pub components: Vec<Tree>,
    pub maps: Vec<Vec<Vertex>>,
}

impl Forest {
    pub fn total_order(&self) -> usize {
        self.components.iter().map(|t| t.vertex_count()).sum()
    }
}

// ---------------------------------------------------------------------------
// Prüfer codes
// ---------------------------------------------------------------------------

/// Decodes a Prüfer code over `0..n` into a labeled tree on `n = code.len() + 2`
/// vertices.
pub fn prufer_decode(code: &[Vertex]) -> Result<Tree, GraphError> {
    let n = code.len() + 2;
    if let Some(&bad) = code.iter().find(|&&x| x >= n) {
        return Err(GraphError::VertexOutOfRange {
            vertex: bad,
            vertex_count: n,
        });
    }
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    Tree::new(n, edges)
}

/// Prüfer code of a tree with at least two vertices.
pub fn prufer_encode(t: &Tree) -> Vec<Vertex> {
    let n = t.vertex_count();
    if n < 2 {
        return Vec::new();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: BTreeSet<Vertex> = t.vertices().filter(|&v| degree[v] == 1).collect();
    let mut code = Vec::with_capacity(n - 2);
    while code.len() < n - 2 {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        removed[leaf] = true;
        let parent = *t
            .neighbors(leaf)
            .iter()
            .find(|&&w| !removed[w])
            .expect("a leaf has one live neighbor");
        code.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.insert(parent);
        }
    }
    code
}

/// Every labeled tree on `n` vertices, in lexicographic Prüfer order.
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Tree> {
    let len = n.saturating_sub(2);
    let total = if n <= 2 { 1 } else { n.pow(len as u32) };
    (0..total).map(move |mut idx| {
        if n == 1 {
            return Tree::new(1, []).expect("single vertex");
        }
        let mut code = vec![0; len];
        for slot in code.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        prufer_decode(&code).expect("codes over 0..n decode")
    })
}

/// One representative of every isomorphism class of connected graphs on
/// `n <= 6` vertices. Classes are keyed by the least edge bitmask over all
/// relabelings.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "catalog is exhaustive over edge subsets; keep n <= 6");
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: Vertex, v: Vertex| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let mut perms = vec![Vec::new()];
    for k in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p: Vec<Vertex>| {
                (0..=k).map(move |at| {
                    let mut q = p.clone();
                    q.insert(at, k);
                    q
                })
            })
            .collect();
    }
    // Bit images of each pair under each permutation.
    let images: Vec<Vec<u32>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| 1 << index(p[u], p[v])).collect())
        .collect();
    let mut seen = BTreeMap::new();
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::new(n, edges).expect("simple by construction");
        if !g.is_connected() {
            continue;
        }
        let canon = images
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |m, (_, &b)| m | b)
            })
            .min()
            .unwrap();
        seen.entry(canon).or_insert(g);
    }
    seen.into_values().collect()
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

fn require(cond: bool, what: &str) -> Result<(), GraphError> {
    if cond {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(what.to_string()))
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Result<Tree, GraphError> {
    require(n >= 1, "path order must be at least 1")?;
    Tree::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    require(n >= 3, "cycle order must be at least 3")?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star with center 0 and `leaves` leaves.
pub fn gen_star(leaves: usize) -> Result<Tree, GraphError> {
    Tree::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Complete binary tree of the given height in heap order (root 0, children
/// of `i` are `2i+1` and `2i+2`); `2^(height+1) - 1` vertices.
pub fn gen_full_binary(height: u32) -> Result<Tree, GraphError> {
    require(height < 24, "full binary height must be below 24")?;
    let n = (1usize << (height + 1)) - 1;
    Tree::new(n, (1..n).map(|i| ((i - 1) / 2, i)))
}

/// Two adjacent centers `0` and `1`; center 0 carries `s` leaves
/// (`2..2+s`) and center 1 carries `t` leaves.
pub fn gen_double_star(s: usize, t: usize) -> Result<Tree, GraphError> {
    let n = 2 + s + t;
    let edges = std::iter::once((0, 1))
        .chain((0..s).map(|i| (0, 2 + i)))
        .chain((0..t).map(|i| (1, 2 + s + i)));
    Tree::new(n, edges)
}

/// Uniform labeled tree on `n` vertices, by decoding a Prüfer code whose
/// letters are drawn from a SplitMix64 stream seeded with `seed`.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Tree, GraphError> {
    require(n >= 1, "tree order must be at least 1")?;
    if n <= 2 {
        return gen_path(n);
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(&code)
}

/// Random tree without degree-2 vertices: a uniform tree on `n_target`
/// vertices with a pendant leaf added at every degree-2 vertex. The order
/// lies in `[n_target, 2 * n_target]`. Not uniform over such trees.
pub fn gen_random_no_deg2(n_target: usize, seed: u64) -> Result<Tree, GraphError> {
    Ok(gen_random_tree(n_target, seed)?.augment_degree2().0)
}
