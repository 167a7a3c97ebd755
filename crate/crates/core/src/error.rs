use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report. Each variant maps to a stable
/// machine-readable code through [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotBijective(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree must be at least 1")]
    EmptyDegree,

    #[error("not a block/invariant-set action: {0}")]
    NotInvariant(String),

    #[error("group is not transitive")]
    Intransitive,

    #[error("group order {order} exceeds the subgroup enumeration cap {cap}; use a low-index variant instead")]
    GroupTooLarge { order: u128, cap: u128 },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not regular")]
    Irregular,

    #[error("graph has no edges")]
    Edgeless,

    #[error("graph has {n} vertices; the search is capped at {cap}")]
    GraphTooLarge { n: usize, cap: usize },

    #[error("graph6 error at byte {position}: {message}")]
    Graph6 { position: usize, message: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generator {index} is not an automorphism of the graph")]
    NotAutomorphism { index: usize },

    #[error("complete graph has no 2-geodesics")]
    CompleteGraph,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } => "E_DEGREE_MISMATCH",
            Error::NotBijective(_) => "E_NOT_BIJECTIVE",
            Error::PointOutOfRange { .. } => "E_POINT_RANGE",
            Error::EmptyDegree => "E_EMPTY_DEGREE",
            Error::NotInvariant(_) => "E_NOT_INVARIANT",
            Error::Intransitive => "E_INTRANSITIVE",
            Error::GroupTooLarge { .. } => "E_GROUP_TOO_LARGE",
            Error::VertexOutOfRange { .. } => "E_VERTEX_RANGE",
            Error::InvalidGraph(_) => "E_INVALID_GRAPH",
            Error::Disconnected => "E_DISCONNECTED",
            Error::Irregular => "E_IRREGULAR",
            Error::Edgeless => "E_EDGELESS",
            Error::GraphTooLarge { .. } => "E_GRAPH_TOO_LARGE",
            Error::Graph6 { .. } => "E_GRAPH6",
            Error::Parse { .. } => "E_PARSE",
            Error::InvalidParameter(_) => "E_PARAMETER",
            Error::NotAutomorphism { .. } => "E_NOT_AUTOMORPHISM",
            Error::CompleteGraph => "E_COMPLETE_GRAPH",
            Error::Inconsistent(_) => "E_INCONSISTENT",
            Error::UnknownClaim(_) => "E_UNKNOWN_CLAIM",
            Error::Io(_) => "E_IO",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
