//! Constructive burning sequences for trees.
//!
//! The entry points are [`construct_no_deg2`], which burns a tree without
//! degree-2 vertices of order `n >= m(m+1) + 1` within `ceil(sqrt(n - m))`
//! rounds, and [`construct_general`], which handles any tree by padding its
//! degree-2 vertices with pendant leaves, burning the padded tree with the
//! largest admissible `m`, and projecting the sequence back.
//!
//! The no-degree-2 construction is recursive. It picks a separator vertex
//! `v` whose light branches all have at most `p = 2c - 3/2` vertices, where
//! `c` is the round budget. Light branches burn from `v` alone within `c`
//! rounds because they have at most `c - 2` internal vertices. The heavy
//! branch is smoothed at its root, solved recursively with budget `c - 1`,
//! and lifted back with `v` as the first source.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{bound_main1, ceil_sqrt, m_of};
use crate::burning::{
    canonicalize, simulate, validate_sequence, BurnError, BurnState, BurningSequence,
    RoundLabeling, Schedule,
};
use crate::exact::{burning_number, ExactError};
use crate::graph::{GraphError, Tree, Vertex};

/// Orders at or below this are solved exactly instead of recursively.
pub const EXACT_FALLBACK_ORDER: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal bound violation: {0}")]
    InternalBoundViolation(String),
    #[error("vertex {vertex} has degree {degree}, smoothing needs at least 2")]
    DegreeTooSmall { vertex: Vertex, degree: usize },
    #[error("not an induced subtree: {0}")]
    NotInducedSubtree(String),
    #[error("smoothing result does not match the tree: {0}")]
    StructuralMismatch(String),
    #[error(transparent)]
    Burn(#[from] BurnError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn violation(msg: impl Into<String>) -> ConstructError {
    ConstructError::InternalBoundViolation(msg.into())
}

/// A half-integer threshold `twice / 2`, compared exactly against orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Threshold {
    twice: u64,
}

impl Threshold {
    pub fn from_halves(twice: u64) -> Self {
        Self { twice }
    }

    pub fn from_integer(p: u64) -> Self {
        Self { twice: 2 * p }
    }

    pub fn halves(self) -> u64 {
        self.twice
    }

    /// `size <= p`
    pub fn admits(self, size: usize) -> bool {
        2 * size as u64 <= self.twice
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}.5", self.twice / 2)
        }
    }
}

impl Serialize for Threshold {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Threshold {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let (whole, half) = match text.split_once('.') {
            None => (text.as_str(), false),
            Some((w, "5")) => (w, true),
            Some(_) => return Err(serde::de::Error::custom("threshold must be k or k.5")),
        };
        let whole: u64 = whole.parse().map_err(serde::de::Error::custom)?;
        Ok(Self::from_halves(2 * whole + half as u64))
    }
}

// ---------------------------------------------------------------------------
// Separator descent
// ---------------------------------------------------------------------------

/// A vertex whose removal leaves exactly one branch larger than `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorCert {
    pub v: Vertex,
    /// `v_1, .., v_k`; the heavy neighbor `v_k` is last, light ones ascend.
    pub neighbors: Vec<Vertex>,
    /// `|T_{v_i}(v v_i)|` for light `v_i`, then `|T_v(v v_k)|`.
    pub sizes: Vec<usize>,
    pub p: Threshold,
}

impl SeparatorCert {
    pub fn heavy_neighbor(&self) -> Vertex {
        *self.neighbors.last().expect("k >= 2")
    }

    /// Position of the heavy neighbor, 1-based.
    pub fn heavy_index(&self) -> usize {
        self.neighbors.len()
    }

    pub fn heavy_size(&self) -> usize {
        *self.sizes.last().expect("k >= 2")
    }

    /// Rechecks the certificate against `t` from scratch.
    pub fn verify(&self, t: &Tree) -> bool {
        let k = self.neighbors.len();
        let mut nbrs = self.neighbors.clone();
        nbrs.sort_unstable();
        if k < 2 || nbrs != t.neighbors(self.v) || self.sizes.len() != k {
            return false;
        }
        let heavy = self.heavy_neighbor();
        let heavy_ok = t.component_size_beyond(heavy, self.v) == Ok(self.sizes[k - 1])
            && !self.p.admits(self.sizes[k - 1]);
        heavy_ok
            && self.neighbors[..k - 1]
                .iter()
                .zip(&self.sizes)
                .all(|(&x, &s)| t.component_size_beyond(self.v, x) == Ok(s) && self.p.admits(s))
    }
}

/// Walks from the neighbor of the lowest-id leaf toward any branch that is
/// too large, until every branch except the one behind is at most `p`.
/// Requires `n >= 3` and `1 <= p < n - 1`.
pub fn find_separator(t: &Tree, p: Threshold) -> Result<SeparatorCert, ConstructError> {
    let n = t.vertex_count();
    if n < 3 {
        return Err(ConstructError::PreconditionViolated(format!(
            "separator needs n >= 3, got {n}"
        )));
    }
    if p.halves() < 2 || p.halves() >= 2 * (n as u64 - 1) {
        return Err(ConstructError::PreconditionViolated(format!(
            "separator needs 1 <= p < n - 1 = {}, got p = {p}",
            n - 1
        )));
    }
    let root = t.vertices().find(|&v| t.is_leaf(v)).expect("trees with n >= 2 have leaves");

    // Subtree sizes with the tree hung from `root`.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in t.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &x in order.iter().rev() {
        if x != root {
            size[parent[x]] += size[x];
        }
    }

    let mut v = t.neighbors(root)[0];
    loop {
        let children = t.neighbors(v).iter().copied().filter(|&x| x != parent[v]);
        match children.clone().find(|&x| !p.admits(size[x])) {
            Some(next) => v = next,
            None => {
                let mut neighbors: Vec<Vertex> = children.collect();
                let mut sizes: Vec<usize> = neighbors.iter().map(|&x| size[x]).collect();
                neighbors.push(parent[v]);
                sizes.push(size[v]);
                return Ok(SeparatorCert {
                    v,
                    neighbors,
                    sizes,
                    p,
                });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Smoothing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothResult {
    pub tree: Tree,
    /// Local id in `tree` to id in the source tree.
    pub origin: Vec<Vertex>,
    /// The smoothed vertex and any deleted leaf neighbors, ascending.
    pub removed: Vec<Vertex>,
    /// Former neighbors of the smoothed vertex in path order.
    pub path_order: Vec<Vertex>,
}

/// Deletes `w` and threads its remaining neighbors into a path.
///
/// With `p` leaf neighbors `l_1 < l_2 < ...` and non-leaf neighbors
/// `i_1 < i_2 < ...`, the path is `l_1, i_1, .., i_r, l_2` (dropping the
/// leaves that do not exist), and leaves beyond the second are deleted.
pub fn smooth(t: &Tree, w: Vertex) -> Result<SmoothResult, ConstructError> {
    let degree = t.degree(w);
    if degree < 2 {
        return Err(ConstructError::DegreeTooSmall { vertex: w, degree });
    }
    let (leaves, inner): (Vec<Vertex>, Vec<Vertex>) =
        t.neighbors(w).iter().partition(|&&x| t.is_leaf(x));
    let mut path_order = Vec::with_capacity(degree);
    path_order.extend(leaves.first());
    path_order.extend(&inner);
    path_order.extend(leaves.get(1));

    let mut removed: Vec<Vertex> = std::iter::once(w).chain(leaves.iter().skip(2).copied()).collect();
    removed.sort_unstable();
    let keep: Vec<Vertex> = t.vertices().filter(|x| removed.binary_search(x).is_err()).collect();
    let mut local = vec![usize::MAX; t.vertex_count()];
    for (i, &x) in keep.iter().enumerate() {
        local[x] = i;
    }
    let edges = t
        .edges()
        .into_iter()
        .filter(|&(a, b)| local[a] != usize::MAX && local[b] != usize::MAX)
        .chain(path_order.windows(2).map(|pair| (pair[0], pair[1])))
        .map(|(a, b)| (local[a], local[b]));
    let tree = Tree::new(keep.len(), edges)?;
    Ok(SmoothResult {
        tree,
        origin: keep,
        removed,
        path_order,
    })
}

/// Smooths `u` in `t - v` for a leaf `v` of `t`; the result's `origin` maps
/// into ids of `t`.
pub fn smooth_without_leaf(t: &Tree, u: Vertex, v: Vertex) -> Result<SmoothResult, ConstructError> {
    if !t.is_leaf(v) || !t.has_edge(u, v) {
        return Err(ConstructError::PreconditionViolated(format!(
            "{v} is not a leaf adjacent to {u}"
        )));
    }
    let keep: Vec<Vertex> = t.vertices().filter(|&x| x != v).collect();
    let (without, map) = t.induced_subtree(&keep)?;
    let local_u = map.iter().position(|&x| x == u).expect("u != v");
    let sr = smooth(&without, local_u)?;
    Ok(SmoothResult {
        tree: sr.tree,
        origin: sr.origin.iter().map(|&x| map[x]).collect(),
        removed: sr.removed.iter().map(|&x| map[x]).collect(),
        path_order: sr.path_order.iter().map(|&x| map[x]).collect(),
    })
}

// ---------------------------------------------------------------------------
// Lifting
// ---------------------------------------------------------------------------

/// Turns a burning sequence of the smoothed tree `sr` (from smoothing `u` in
/// `t - v`) into one of `t` that starts at the leaf `v` and is at most one
/// round longer. Each source moves one round later and is dropped if the
/// fire already reached it.
pub fn lift_sequence(
    t: &Tree,
    u: Vertex,
    v: Vertex,
    sr: &SmoothResult,
    seq: &BurningSequence,
) -> Result<BurningSequence, ConstructError> {
    if !t.is_leaf(v) || !t.has_edge(u, v) {
        return Err(ConstructError::PreconditionViolated(format!(
            "{v} is not a leaf adjacent to {u}"
        )));
    }
    if t.degree(u) < 3 {
        return Err(ConstructError::PreconditionViolated(format!(
            "lift needs degree of {u} >= 3, got {}",
            t.degree(u)
        )));
    }
    let mismatch = |msg: String| Err(ConstructError::StructuralMismatch(msg));
    if sr.origin.len() != sr.tree.vertex_count() {
        return mismatch("origin map size differs from tree order".into());
    }
    if sr.origin.iter().any(|&x| x >= t.vertex_count() || x == u || x == v) {
        return mismatch("smoothed tree contains u, v or foreign vertices".into());
    }
    if !sr.removed.contains(&u) {
        return mismatch(format!("{u} is not among the removed vertices"));
    }
    if sr.origin.len() + sr.removed.len() + 1 != t.vertex_count() {
        return mismatch("vertex counts do not partition t".into());
    }
    validate_sequence(&sr.tree, seq)?;

    let mut state = BurnState::new(t);
    let mut rounds = vec![Some(v)];
    state.step(Some(v))?;
    for &s in seq.sources() {
        if state.is_done() {
            break;
        }
        let source = Some(sr.origin[s]).filter(|&x| !state.is_burned(x));
        state.step(source)?;
        rounds.push(source);
    }
    let lifted = canonicalize(t, &Schedule::new(rounds)?)?;
    if lifted.len() > seq.len() + 1 || lifted.sources()[0] != v {
        return Err(violation(format!(
            "lift produced length {} from length {}",
            lifted.len(),
            seq.len()
        )));
    }
    Ok(lifted)
}

// ---------------------------------------------------------------------------
// Recursive construction
// ---------------------------------------------------------------------------

/// One step of a construction, with vertex ids of the input tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    /// Instance solved exactly.
    Exact {
        depth: usize,
        order: usize,
        m: u64,
        target: u64,
        burning_number: usize,
    },
    /// `n = m(m+1) + 1`: the same tree is handed to the `m = 0` case, whose
    /// budget `ceil(sqrt(n))` equals `m + 1`.
    Delegate {
        depth: usize,
        order: usize,
        m: u64,
        target: u64,
    },
    Separator {
        depth: usize,
        order: usize,
        m: u64,
        target: u64,
        p: Threshold,
        center: Vertex,
        heavy_neighbor: Vertex,
        heavy_size: usize,
        light: Vec<(Vertex, usize)>,
    },
    /// The heavy branch is a single vertex; it becomes the second source.
    HeavyLeaf { depth: usize, vertex: Vertex },
    Smooth {
        depth: usize,
        vertex: Vertex,
        removed: Vec<Vertex>,
        path: Vec<Vertex>,
    },
    /// A strictly smaller instance with a strictly smaller budget.
    Recurse {
        depth: usize,
        order: usize,
        m: u64,
        target: u64,
    },
    Lift {
        depth: usize,
        length: usize,
    },
    /// Sequence for the whole instance; `light_max_round` is the latest
    /// round at which a light branch vertex burns.
    Assemble {
        depth: usize,
        length: usize,
        light_max_round: usize,
    },
    /// Sequence projected from the padded tree onto the input tree.
    Project {
        padded_order: usize,
        from_length: usize,
        to_length: usize,
    },
}

/// A burning sequence for `tree` together with the bound it meets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub tree: Tree,
    pub n: u64,
    pub n2: u64,
    pub m: u64,
    pub target: u64,
    pub sequence: BurningSequence,
    pub labeling: RoundLabeling,
    pub trace: Vec<TraceEvent>,
}

struct Builder {
    trace: Vec<TraceEvent>,
}

impl Builder {
    /// Burns `t` within `ceil_sqrt(n - m)` rounds. `origin` maps local ids to
    /// ids of the top-level tree, for the trace only.
    fn burn(
        &mut self,
        t: &Tree,
        origin: &[Vertex],
        m: u64,
        depth: usize,
    ) -> Result<BurningSequence, ConstructError> {
        let n = t.vertex_count();
        let order = n as u64;
        if order < m * (m + 1) + 1 {
            return Err(ConstructError::PreconditionViolated(format!(
                "order {n} is below m(m+1) + 1 = {} for m = {m}",
                m * (m + 1) + 1
            )));
        }
        let target = ceil_sqrt(order - m);

        if n <= EXACT_FALLBACK_ORDER {
            let exact = burning_number(t)?;
            self.trace.push(TraceEvent::Exact {
                depth,
                order: n,
                m,
                target,
                burning_number: exact.burning_number,
            });
            if exact.burning_number as u64 > target {
                return Err(violation(format!(
                    "exact burning number {} exceeds {target} at order {n}, m = {m}",
                    exact.burning_number
                )));
            }
            return Ok(exact.witness);
        }

        if m >= 1 && order == m * (m + 1) + 1 {
            self.trace.push(TraceEvent::Delegate {
                depth,
                order: n,
                m,
                target,
            });
            return self.burn(t, origin, 0, depth);
        }

        let p = Threshold::from_halves(4 * target - 3);
        let sep = find_separator(t, p)?;
        let (v, vk) = (sep.v, sep.heavy_neighbor());
        self.trace.push(TraceEvent::Separator {
            depth,
            order: n,
            m,
            target,
            p,
            center: origin[v],
            heavy_neighbor: origin[vk],
            heavy_size: sep.heavy_size(),
            light: sep.neighbors[..sep.neighbors.len() - 1]
                .iter()
                .zip(&sep.sizes)
                .map(|(&x, &s)| (origin[x], s))
                .collect(),
        });

        // Sequence for T_k = {v} + heavy branch, in ids of `t`.
        let branch = t.component_beyond(v, vk);
        let heavy_seq = if branch.len() == 1 {
            self.trace.push(TraceEvent::HeavyLeaf {
                depth,
                vertex: origin[vk],
            });
            BurningSequence::new(vec![v, vk])?
        } else {
            let keep: Vec<Vertex> = std::iter::once(v).chain(branch).collect();
            let (tk, tk_map) = t.induced_subtree(&keep)?;
            // In `tk`, v is local 0 and v_k is local 1.
            let sr = smooth_without_leaf(&tk, 1, 0)?;
            let to_top = |x: Vertex| origin[tk_map[x]];
            self.trace.push(TraceEvent::Smooth {
                depth,
                vertex: origin[vk],
                removed: sr.removed.iter().map(|&x| to_top(x)).collect(),
                path: sr.path_order.iter().map(|&x| to_top(x)).collect(),
            });
            if sr.tree.degree2_census().0 != 0 {
                return Err(violation("smoothing left a degree-2 vertex"));
            }
            let child_order = sr.tree.vertex_count() as u64;
            let child_m = if m >= 1 && child_order > m * m { m - 1 } else { 0 };
            let child_target = ceil_sqrt(child_order - child_m);
            if child_target >= target {
                return Err(violation(format!(
                    "heavy branch budget {child_target} does not drop below {target}"
                )));
            }
            self.trace.push(TraceEvent::Recurse {
                depth: depth + 1,
                order: sr.tree.vertex_count(),
                m: child_m,
                target: child_target,
            });
            let child_origin: Vec<Vertex> = sr.origin.iter().map(|&x| to_top(x)).collect();
            let child = self.burn(&sr.tree, &child_origin, child_m, depth + 1)?;
            if child.len() as u64 > child_target {
                return Err(violation("recursive sequence exceeds its budget"));
            }
            let lifted = lift_sequence(&tk, 1, 0, &sr, &child)?;
            self.trace.push(TraceEvent::Lift {
                depth,
                length: lifted.len(),
            });
            lifted.relabel(&tk_map)
        };

        let schedule = Schedule::from(&heavy_seq);
        let labeling = simulate(t, &schedule)?;
        let light_max_round = sep.neighbors[..sep.neighbors.len() - 1]
            .iter()
            .flat_map(|&x| t.component_beyond(v, x))
            .map(|x| labeling.label(x))
            .max()
            .unwrap_or(0);
        let seq = canonicalize(t, &schedule)?;
        self.trace.push(TraceEvent::Assemble {
            depth,
            length: seq.len(),
            light_max_round,
        });
        if seq.len() as u64 > target || light_max_round as u64 > target {
            return Err(violation(format!(
                "assembled length {} (light branches done at {light_max_round}) exceeds {target}",
                seq.len()
            )));
        }
        Ok(seq)
    }
}

/// Burning sequence of length at most `ceil(sqrt(n - m))` for a tree without
/// degree-2 vertices of order `n >= m(m+1) + 1`.
pub fn construct_no_deg2(t: &Tree, m: u64) -> Result<BoundCertificate, ConstructError> {
    let (n2, deg2) = t.degree2_census();
    if n2 != 0 {
        return Err(ConstructError::PreconditionViolated(format!(
            "tree has degree-2 vertices {deg2:?}"
        )));
    }
    let mut builder = Builder { trace: Vec::new() };
    let identity: Vec<Vertex> = t.vertices().collect();
    let sequence = builder.burn(t, &identity, m, 0)?;
    let labeling = validate_sequence(t, &sequence)?;
    let target = ceil_sqrt(t.vertex_count() as u64 - m);
    if sequence.len() as u64 > target {
        return Err(violation("final sequence exceeds the bound"));
    }
    Ok(BoundCertificate {
        tree: t.clone(),
        n: t.vertex_count() as u64,
        n2: 0,
        m,
        target,
        sequence,
        labeling,
        trace: builder.trace,
    })
}

/// Restricts a burning sequence of `sup` to the induced subtree `sub`,
/// embedded by `embedding` (local id of `sub` to id of `sup`). Each source is
/// replaced by its nearest vertex of `sub` (lowest local id on ties) and
/// dropped if that vertex is already burned.
pub fn project_to_subtree(
    sub: &Tree,
    embedding: &[Vertex],
    sup: &Tree,
    seq: &BurningSequence,
) -> Result<BurningSequence, ConstructError> {
    let not_induced = |msg: String| Err(ConstructError::NotInducedSubtree(msg));
    if embedding.len() != sub.vertex_count() {
        return not_induced("embedding length differs from subtree order".into());
    }
    let mut local = vec![usize::MAX; sup.vertex_count()];
    for (i, &x) in embedding.iter().enumerate() {
        if x >= sup.vertex_count() || local[x] != usize::MAX {
            return not_induced(format!("embedding is not injective into 0..{}", sup.vertex_count()));
        }
        local[x] = i;
    }
    if let Some((a, b)) = sub.edges().into_iter().find(|&(a, b)| !sup.has_edge(embedding[a], embedding[b])) {
        return not_induced(format!("edge ({a}, {b}) is missing from the supertree"));
    }
    let inside_edges = sup
        .edges()
        .into_iter()
        .filter(|&(a, b)| local[a] != usize::MAX && local[b] != usize::MAX)
        .count();
    if inside_edges != sub.edge_count() {
        return not_induced("supertree has extra edges between embedded vertices".into());
    }
    validate_sequence(sup, seq)?;

    let nearest = |s: Vertex| -> Vertex {
        let dist = sup.distances_from(s);
        embedding
            .iter()
            .enumerate()
            .min_by_key(|&(i, &x)| (dist[x].expect("trees are connected"), i))
            .map(|(i, _)| i)
            .expect("subtree is nonempty")
    };
    let mut state = BurnState::new(sub);
    let mut rounds = Vec::with_capacity(seq.len());
    for &s in seq.sources() {
        if state.is_done() {
            break;
        }
        let target = if local[s] != usize::MAX { local[s] } else { nearest(s) };
        let source = Some(target).filter(|&x| !state.is_burned(x));
        state.step(source)?;
        rounds.push(source);
    }
    let projected = canonicalize(sub, &Schedule::new(rounds)?)?;
    if projected.len() > seq.len() {
        return Err(violation(format!(
            "projection lengthened the sequence from {} to {}",
            seq.len(),
            projected.len()
        )));
    }
    Ok(projected)
}

/// Burning sequence of any tree within `bound_main1(n, n2)` rounds.
pub fn construct_general(t: &Tree) -> Result<BoundCertificate, ConstructError> {
    let n = t.vertex_count() as u64;
    let (n2, _) = t.degree2_census();
    let n2 = n2 as u64;
    let (padded, _) = t.augment_degree2();
    let m = m_of(n + n2);
    if n + n2 < m * (m + 1) + 1 {
        return Err(violation(format!("m = {m} is not admissible for order {}", n + n2)));
    }
    let inner = construct_no_deg2(&padded, m)?;
    let embedding: Vec<Vertex> = t.vertices().collect();
    let sequence = project_to_subtree(t, &embedding, &padded, &inner.sequence)?;
    let labeling = validate_sequence(t, &sequence)?;
    let target = bound_main1(n, n2);
    if target != inner.target || sequence.len() as u64 > target {
        return Err(violation(format!(
            "length {} against bound {target} (padded bound {})",
            sequence.len(),
            inner.target
        )));
    }
    let mut trace = inner.trace;
    trace.push(TraceEvent::Project {
        padded_order: padded.vertex_count(),
        from_length: inner.sequence.len(),
        to_length: sequence.len(),
    });
    Ok(BoundCertificate {
        tree: t.clone(),
        n,
        n2,
        m,
        target,
        sequence,
        labeling,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::burning_number;
    use crate::graph::{gen_double_star, gen_path, gen_random_no_deg2, gen_random_tree, gen_star};
    use proptest::prelude::*;

    fn seq(v: &[Vertex]) -> BurningSequence {
        BurningSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn threshold_formatting() {
        let p = Threshold::from_halves(13);
        assert_eq!(p.to_string(), "6.5");
        assert!(p.admits(6) && !p.admits(7));
        assert_eq!(serde_json::to_string(&p).unwrap(), "\"6.5\"");
        assert_eq!(serde_json::from_str::<Threshold>("\"6.5\"").unwrap(), p);
        assert_eq!(serde_json::from_str::<Threshold>("\"3\"").unwrap(), Threshold::from_integer(3));
    }

    /// Every `(v, v_k)` satisfying the separator conditions, by brute force.
    fn all_separators(t: &Tree, p: Threshold) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for v in t.vertices() {
            for &heavy in t.neighbors(v) {
                let heavy_ok = !p.admits(t.component_size_beyond(heavy, v).unwrap());
                let light_ok = t
                    .neighbors(v)
                    .iter()
                    .filter(|&&x| x != heavy)
                    .all(|&x| p.admits(t.component_size_beyond(v, x).unwrap()));
                if heavy_ok && light_ok && t.degree(v) >= 2 {
                    out.push((v, heavy));
                }
            }
        }
        out
    }

    #[test]
    fn separator_on_path() {
        let p5 = gen_path(5).unwrap();
        let p = Threshold::from_integer(2);
        // Only the middle vertex qualifies: from 1 the side containing 1
        // across edge 1-2 has just 2 vertices.
        assert_eq!(all_separators(&p5, p), vec![(2, 1), (2, 3)]);
        let cert = find_separator(&p5, p).unwrap();
        assert_eq!(cert.v, 2);
        assert_eq!(cert.neighbors, vec![3, 1]);
        assert_eq!(cert.sizes, vec![2, 3]);
        assert!(cert.verify(&p5));
        assert!(matches!(
            find_separator(&p5, Threshold::from_integer(4)),
            Err(ConstructError::PreconditionViolated(_))
        ));
        assert!(matches!(
            find_separator(&gen_path(2).unwrap(), Threshold::from_integer(1)),
            Err(ConstructError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn separator_on_star() {
        let star = gen_star(3).unwrap();
        let cert = find_separator(&star, Threshold::from_integer(1)).unwrap();
        assert_eq!(cert.v, 0);
        assert_eq!(cert.heavy_size(), 3);
        assert_eq!(&cert.sizes[..2], &[1, 1]);
        assert!(cert.verify(&star));
    }

    #[test]
    fn smoothing_cases() {
        let p3 = gen_path(3).unwrap();
        let sr = smooth(&p3, 1).unwrap();
        assert_eq!(sr.tree, gen_path(2).unwrap());
        assert_eq!(sr.origin, vec![0, 2]);
        assert_eq!(sr.removed, vec![1]);

        let star = gen_star(3).unwrap();
        let sr = smooth(&star, 0).unwrap();
        assert_eq!(sr.origin, vec![1, 2]);
        assert_eq!(sr.removed, vec![0, 3]);
        assert_eq!(sr.tree, gen_path(2).unwrap());

        // w = 0 with leaf a = 1 and inner neighbors b = 2, c = 3.
        let t = Tree::new(8, [(0, 1), (0, 2), (0, 3), (2, 4), (2, 5), (3, 6), (3, 7)]).unwrap();
        let sr = smooth(&t, 0).unwrap();
        assert_eq!(sr.path_order, vec![1, 2, 3]);
        let edges: Vec<_> = sr.tree.edges().into_iter().map(|(a, b)| (sr.origin[a], sr.origin[b])).collect();
        assert!(edges.contains(&(1, 2)) && edges.contains(&(2, 3)));
        assert_eq!(sr.tree.vertex_count(), 7);
        assert_eq!(sr.tree.degree2_census().0, 0);

        assert_eq!(
            smooth(&p3, 0),
            Err(ConstructError::DegreeTooSmall { vertex: 0, degree: 1 })
        );
    }

    #[test]
    fn lift_on_star() {
        // u = 0, v = 1, leaves a = 2, b = 3. t - v = P3, smoothing u gives a - b.
        let t = gen_star(3).unwrap();
        let sr = smooth_without_leaf(&t, 0, 1).unwrap();
        assert_eq!(sr.origin, vec![2, 3]);
        let lifted = lift_sequence(&t, 0, 1, &sr, &seq(&[0, 1])).unwrap();
        assert_eq!(lifted.sources()[0], 1);
        assert!(lifted.len() <= 3);
        validate_sequence(&t, &lifted).unwrap();
    }

    #[test]
    fn lift_on_double_star() {
        // u = 0 with leaves v = 2, a = 3; other center c = 1 with leaves 4, 5.
        let t = gen_double_star(2, 2).unwrap();
        let sr = smooth_without_leaf(&t, 0, 2).unwrap();
        assert_eq!(sr.tree.vertex_count(), 4);
        let c = sr.origin.iter().position(|&x| x == 1).unwrap();
        let a = sr.origin.iter().position(|&x| x == 3).unwrap();
        assert_eq!(sr.tree.degree(c), 3);
        let lifted = lift_sequence(&t, 0, 2, &sr, &seq(&[c, a])).unwrap();
        assert_eq!(lifted, seq(&[2, 1, 3]));
        assert_eq!(lifted.len(), burning_number(&t).unwrap().burning_number);
    }

    #[test]
    fn lift_drops_burned_sources() {
        // u = 0 with leaves v = 1, 2 and inner neighbor 3 carrying leaves 4, 5.
        let t = Tree::new(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let sr = smooth_without_leaf(&t, 0, 1).unwrap();
        assert_eq!(sr.origin, vec![2, 3, 4, 5]);
        assert_eq!(sr.path_order, vec![2, 3]);
        // (4, 5, 2) burns the smoothed star in three rounds; after the lift,
        // vertex 2 is reached through u before its turn comes.
        let inner = seq(&[2, 3, 0]);
        validate_sequence(&sr.tree, &inner).unwrap();
        let lifted = lift_sequence(&t, 0, 1, &sr, &inner).unwrap();
        assert_eq!(lifted, seq(&[1, 4, 5]));
        validate_sequence(&t, &lifted).unwrap();
    }

    #[test]
    fn lift_rejects_mismatch() {
        let t = gen_star(3).unwrap();
        let sr = smooth_without_leaf(&t, 0, 1).unwrap();
        assert!(matches!(
            lift_sequence(&t, 0, 2, &sr, &seq(&[0, 1])),
            Err(ConstructError::StructuralMismatch(_))
        ));
        assert!(matches!(
            lift_sequence(&gen_path(3).unwrap(), 1, 0, &sr, &seq(&[0, 1])),
            Err(ConstructError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn double_star_remark() {
        let d = gen_double_star(2, 2).unwrap();
        let cert = construct_no_deg2(&d, 1).unwrap();
        assert_eq!(cert.target, 3);
        assert_eq!(cert.sequence.len(), 3);
        assert!(matches!(
            construct_no_deg2(&d, 2),
            Err(ConstructError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn small_instances() {
        let p2 = gen_path(2).unwrap();
        let cert = construct_no_deg2(&p2, 0).unwrap();
        assert_eq!((cert.sequence.len(), cert.target), (2, 2));
        assert!(matches!(
            construct_no_deg2(&gen_path(3).unwrap(), 0),
            Err(ConstructError::PreconditionViolated(_))
        ));

        let p9 = gen_path(9).unwrap();
        let cert = construct_general(&p9).unwrap();
        assert_eq!((cert.n, cert.n2, cert.m, cert.target), (9, 7, 3, 4));
        assert!(cert.sequence.len() <= 4);

        let k15 = gen_star(5).unwrap();
        let cert = construct_general(&k15).unwrap();
        assert_eq!((cert.m, cert.target), (1, 3));
        assert!(cert.sequence.len() >= 2 && cert.sequence.len() <= 3);
    }

    #[test]
    fn projection() {
        let p3 = gen_path(3).unwrap();
        assert_eq!(project_to_subtree(&p3, &[0, 1, 2], &p3, &seq(&[1, 0])).unwrap(), seq(&[1, 0]));

        // P3 (a = 0, w = 1, b = 2) plus leaf x = 3 at w.
        let sup = gen_star(3).unwrap().induced_subtree(&[1, 0, 2, 3]).unwrap().0;
        assert_eq!(sup.degree(1), 3);
        validate_sequence(&sup, &seq(&[1, 0])).unwrap();
        let projected = project_to_subtree(&p3, &[0, 1, 2], &sup, &seq(&[1, 0])).unwrap();
        assert_eq!(projected, seq(&[1, 0]));

        // K_{1,3} with center 0 and path 1 - 0 - 2 inside it.
        let star = gen_star(3).unwrap();
        let path = Tree::new(3, [(0, 1), (1, 2)]).unwrap();
        let projected = project_to_subtree(&path, &[1, 0, 2], &star, &seq(&[0, 1])).unwrap();
        assert_eq!(projected, seq(&[1, 0]));
        // A source outside the subtree maps to its nearest vertex.
        let projected = project_to_subtree(&path, &[1, 0, 2], &star, &seq(&[3, 1, 2])).unwrap();
        assert_eq!(projected, seq(&[1, 0]));

        assert!(matches!(
            project_to_subtree(&path, &[1, 2, 3], &star, &seq(&[0, 1])),
            Err(ConstructError::NotInducedSubtree(_))
        ));
    }

    fn check_trace(cert: &BoundCertificate) {
        let mut budget_at_depth: Vec<u64> = vec![cert.target];
        let mut deepest = 0;
        for ev in &cert.trace {
            match ev {
                TraceEvent::Recurse { depth, target, .. } => {
                    assert!(*target < budget_at_depth[depth - 1]);
                    deepest = deepest.max(*depth);
                    budget_at_depth.truncate(*depth);
                    budget_at_depth.push(*target);
                }
                TraceEvent::Assemble { light_max_round, depth, .. } => {
                    assert!(*light_max_round as u64 <= budget_at_depth[*depth]);
                }
                _ => {}
            }
        }
        assert!((deepest as u64) < cert.target);
    }

    #[test]
    fn random_no_deg2_trees_meet_bound() {
        for seed in 0..200 {
            let t = gen_random_no_deg2(20 + (seed as usize % 80), seed).unwrap();
            let n = t.vertex_count() as u64;
            for m in [0, (1..).take_while(|k| k * (k + 1) < n).last().unwrap_or(0)] {
                let cert = construct_no_deg2(&t, m).unwrap();
                assert!(cert.sequence.len() as u64 <= ceil_sqrt(n - m));
                check_trace(&cert);
            }
        }
    }

    #[test]
    fn thousand_separators() {
        for seed in 0..1000u64 {
            let n = 3 + (seed as usize % 150);
            let t = gen_random_tree(n, seed).unwrap();
            // p in [1, n - 1), stepping through halves
            let twice = 2 + seed % (2 * (n as u64 - 1) - 2);
            let p = Threshold::from_halves(twice);
            assert!(find_separator(&t, p).unwrap().verify(&t), "seed {seed}");
        }
    }

    proptest! {
        #[test]
        fn separator_invariants(n in 3usize..150, seed in any::<u64>(), frac in 0.0f64..1.0) {
            let t = gen_random_tree(n, seed).unwrap();
            // p in [1, n - 1) with denominator 2
            let lo = 2u64;
            let hi = 2 * (n as u64 - 1);
            let twice = lo + ((hi - lo) as f64 * frac) as u64;
            let p = Threshold::from_halves(twice.min(hi - 1));
            let cert = find_separator(&t, p).unwrap();
            prop_assert!(cert.verify(&t));
            if n <= 30 {
                prop_assert!(all_separators(&t, p).contains(&(cert.v, cert.heavy_neighbor())));
            }
        }

        #[test]
        fn smoothing_removes_only_w_and_leaves(n in 3usize..60, seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
            let t = gen_random_no_deg2(n, seed).unwrap();
            let inner: Vec<Vertex> = t.vertices().filter(|&v| t.degree(v) >= 2).collect();
            prop_assume!(!inner.is_empty());
            let w = inner[pick.index(inner.len())];
            let sr = smooth(&t, w).unwrap();
            prop_assert_eq!(sr.tree.degree2_census().0, 0);
            prop_assert_eq!(sr.origin.len() + sr.removed.len(), t.vertex_count());
            for &x in &sr.removed {
                prop_assert!(x == w || t.is_leaf(x));
                prop_assert!(!sr.origin.contains(&x));
            }
            let leaves = t.neighbors(w).iter().filter(|&&x| t.is_leaf(x)).count();
            prop_assert_eq!(sr.tree.vertex_count(), t.vertex_count() - 1 - leaves.saturating_sub(2));
        }

        #[test]
        fn lift_adds_at_most_one_round(n in 3usize..40, seed in any::<u64>()) {
            let t = gen_random_no_deg2(n, seed).unwrap();
            let Some(v) = t.vertices().find(|&v| t.is_leaf(v) && t.degree(t.neighbors(v)[0]) >= 3) else {
                return Ok(());
            };
            let u = t.neighbors(v)[0];
            let sr = smooth_without_leaf(&t, u, v).unwrap();
            let inner = burning_number(&sr.tree).unwrap().witness;
            let lifted = lift_sequence(&t, u, v, &sr, &inner).unwrap();
            prop_assert_eq!(lifted.sources()[0], v);
            prop_assert!(lifted.len() <= inner.len() + 1);
            validate_sequence(&t, &lifted).unwrap();
        }

        #[test]
        fn general_construction_meets_bound(n in 1usize..200, seed in any::<u64>()) {
            let t = gen_random_tree(n, seed).unwrap();
            let cert = construct_general(&t).unwrap();
            prop_assert_eq!(validate_sequence(&t, &cert.sequence).unwrap(), cert.labeling.clone());
            prop_assert!(cert.sequence.len() as u64 <= bound_main1(cert.n, cert.n2));
        }
    }
}
