//! The burning process.
//!
//! In round `r` the fire spreads from every vertex burned before `r` to its
//! unburned neighbors, and the round's source (if any) ignites. A source is
//! eligible iff it is unburned at the *start* of its round, so a source that
//! the spreading fire reaches in the same round is still a legal choice.
//! Schedules may leave rounds after the first without a source; every such
//! schedule is equivalent to a burning sequence (see [`canonicalize`]).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurnError {
    #[error("round {round}: source {vertex} is already burned")]
    SourceAlreadyBurned { round: usize, vertex: Vertex },
    #[error("sequence of length {expected} burns the graph in {actual} rounds")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("source {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("schedule must be nonempty and have a source in round 1")]
    MissingFirstSource,
    #[error("burning sequence must be nonempty")]
    EmptySequence,
    #[error("vertex {0} appears twice in the burning sequence")]
    RepeatedSource(Vertex),
}

/// Per-round sources, `None` for a round without one. Round 1 always has a
/// source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    rounds: Vec<Option<Vertex>>,
}

impl Schedule {
    pub fn new(rounds: Vec<Option<Vertex>>) -> Result<Self, BurnError> {
        match rounds.first() {
            Some(Some(_)) => Ok(Self { rounds }),
            _ => Err(BurnError::MissingFirstSource),
        }
    }

    pub fn rounds(&self) -> &[Option<Vertex>] {
        &self.rounds
    }
}

impl From<&BurningSequence> for Schedule {
    fn from(seq: &BurningSequence) -> Self {
        Self {
            rounds: seq.sources.iter().copied().map(Some).collect(),
        }
    }
}

/// Nonempty list of distinct sources, one per round.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct BurningSequence {
    sources: Vec<Vertex>,
}

impl BurningSequence {
    pub fn new(sources: Vec<Vertex>) -> Result<Self, BurnError> {
        if sources.is_empty() {
            return Err(BurnError::EmptySequence);
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(&dup) = sources.iter().find(|&&v| !seen.insert(v)) {
            return Err(BurnError::RepeatedSource(dup));
        }
        Ok(Self { sources })
    }

    pub fn sources(&self) -> &[Vertex] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Applies a vertex map to every source (e.g. local ids to parent ids).
    pub fn relabel(&self, map: &[Vertex]) -> Self {
        Self {
            sources: self.sources.iter().map(|&v| map[v]).collect(),
        }
    }
}

impl TryFrom<Vec<Vertex>> for BurningSequence {
    type Error = BurnError;

    fn try_from(sources: Vec<Vertex>) -> Result<Self, BurnError> {
        Self::new(sources)
    }
}

impl From<BurningSequence> for Vec<Vertex> {
    fn from(seq: BurningSequence) -> Self {
        seq.sources
    }
}

/// Round in which each vertex burned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundLabeling {
    labels: Vec<usize>,
    total_rounds: usize,
}

impl RoundLabeling {
    pub fn label(&self, v: Vertex) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn total_rounds(&self) -> usize {
        self.total_rounds
    }

    /// Vertices first burned in `round`, ascending.
    pub fn burned_in(&self, round: usize) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.labels.len()).filter(move |&v| self.labels[v] == round)
    }
}

/// Step-by-step burning process over a connected graph.
#[derive(Debug, Clone)]
pub struct BurnState<'g> {
    graph: &'g Graph,
    // 0 = unburned
    labels: Vec<usize>,
    frontier: Vec<Vertex>,
    round: usize,
    burned: usize,
}

impl<'g> BurnState<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            labels: vec![0; graph.vertex_count()],
            frontier: Vec::new(),
            round: 0,
            burned: 0,
        }
    }

    /// Rounds played so far.
    pub fn round(&self) -> usize {
        self.round
    }

    pub fn is_burned(&self, v: Vertex) -> bool {
        self.labels[v] != 0
    }

    pub fn is_done(&self) -> bool {
        self.round > 0 && self.burned == self.labels.len()
    }

    /// Plays the next round with the given source.
    pub fn step(&mut self, source: Option<Vertex>) -> Result<(), BurnError> {
        let round = self.round + 1;
        match source {
            None if round == 1 => return Err(BurnError::MissingFirstSource),
            Some(x) if x >= self.labels.len() => {
                return Err(BurnError::VertexOutOfRange {
                    vertex: x,
                    vertex_count: self.labels.len(),
                })
            }
            Some(x) if self.labels[x] != 0 => {
                return Err(BurnError::SourceAlreadyBurned { round, vertex: x })
            }
            _ => {}
        }
        let mut next = Vec::new();
        for &f in &self.frontier {
            for &w in self.graph.neighbors(f) {
                if self.labels[w] == 0 {
                    self.labels[w] = round;
                    next.push(w);
                }
            }
        }
        if let Some(x) = source {
            if self.labels[x] == 0 {
                self.labels[x] = round;
                next.push(x);
            }
        }
        self.burned += next.len();
        self.frontier = next;
        self.round = round;
        Ok(())
    }

    /// Plays source-free rounds until everything is burned.
    pub fn finish(mut self) -> RoundLabeling {
        while !self.is_done() {
            self.step(None).expect("source-free rounds after round 1 are always legal");
            if self.frontier.is_empty() && !self.is_done() {
                unreachable!("fire stalled: graph is disconnected");
            }
        }
        RoundLabeling {
            labels: self.labels,
            total_rounds: self.round,
        }
    }
}

/// Runs the burning process for `schedule`, continuing with source-free
/// rounds until every vertex is burned. Sources listed after the graph is
/// fully burned are rejected; trailing empty rounds are ignored.
pub fn simulate(g: &Graph, schedule: &Schedule) -> Result<RoundLabeling, BurnError> {
    if !g.is_connected() {
        return Err(BurnError::Disconnected);
    }
    let mut state = BurnState::new(g);
    for (i, &source) in schedule.rounds().iter().enumerate() {
        if state.is_done() {
            if let Some(vertex) = source {
                return Err(BurnError::SourceAlreadyBurned {
                    round: i + 1,
                    vertex,
                });
            }
            continue;
        }
        state.step(source)?;
    }
    Ok(state.finish())
}

/// Checks that `seq` is a burning sequence of `g`: every source is eligible
/// and the process ends exactly in round `seq.len()`.
pub fn validate_sequence(g: &Graph, seq: &BurningSequence) -> Result<RoundLabeling, BurnError> {
    let labeling = simulate(g, &Schedule::from(seq))?;
    if labeling.total_rounds() != seq.len() {
        return Err(BurnError::LengthMismatch {
            expected: seq.len(),
            actual: labeling.total_rounds(),
        });
    }
    Ok(labeling)
}

/// Turns a schedule with empty rounds into an equivalent burning sequence:
/// each empty round is filled with the lowest-id vertex that the fire reaches
/// in that round. The result reproduces the schedule's labeling exactly.
pub fn canonicalize(g: &Graph, schedule: &Schedule) -> Result<BurningSequence, BurnError> {
    let labeling = simulate(g, schedule)?;
    let sources = (1..=labeling.total_rounds())
        .map(|round| {
            schedule
                .rounds()
                .get(round - 1)
                .copied()
                .flatten()
                .or_else(|| labeling.burned_in(round).next())
                .expect("every round of a connected burning process burns a vertex")
        })
        .collect();
    BurningSequence::new(sources)
}
