use thiserror::Error;

/// Errors raised by graph construction, search and recognition routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) does not exist")]
    MissingEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    DegreeNotTwo { vertex: usize, degree: usize },
    #[error("operation needs at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),
    #[error("rotation system is inconsistent: {0}")]
    CorruptRotation(String),
    #[error("input graph is not planar")]
    NonPlanarInput,
    #[error("inconsistent witness: {0}")]
    InconsistentWitness(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not polyhedral")]
    NotPolyhedral,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("not a quadrilateral face: {0}")]
    NotQuadFace(String),
    #[error("build spec violates {clause}: {detail}")]
    SpecViolation { clause: SpecClause, detail: String },
    #[error("malformed graph6 at byte {position}: {reason}")]
    MalformedGraph6 { position: usize, reason: String },
    #[error("malformed JSON graph: {0}")]
    MalformedJson(String),
    #[error("unknown experiment {0:?}")]
    UnknownExperiment(String),
}

/// The clause of a generator contract that a build spec failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum SpecClause {
    /// The base multigraph must be cubic, planar, and 3-connected or
    /// semi-hyper-2-connected.
    BaseStructure,
    /// The chosen region must be a face of even length.
    EvenRegion,
    /// The chosen region must share an edge with every odd face.
    OddRegionAdjacency,
    /// At least two edges of the region must be split.
    SplitCount,
    /// An edge is split an odd number of times iff it lies on an odd face.
    SplitParity,
    /// Inserted vertices must be paired following one of the two orders.
    PairOrder,
    /// The subdivided graph must be simple.
    Simplicity,
    /// Adding each pair edge must create an odd cycle.
    PairParity,
    /// Antipodal chords are not allowed.
    AntipodalChord,
    /// The chord set must be invariant under the half-turn shift.
    ShiftClosure,
    /// Chords must keep the polygon outerplanar.
    CrossingChords,
    /// Chords must join vertices of opposite parity.
    ChordParity,
}

impl std::fmt::Display for SpecClause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
