use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("invalid identifier `{name}`: {reason}")]
    InvalidId { name: String, reason: String },
    #[error("elements live over different quivers")]
    QuiverMismatch,
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("path is not composable at position {position}")]
    NotComposable { position: usize },
    #[error("zero polynomial has no minimal part")]
    ZeroPolynomial,
    #[error("quiver is not a double quiver (no arrow pairing recorded)")]
    NotDouble,
    #[error("relation is not homogeneous but the presentation is graded: {0}")]
    NotHomogeneous(String),
    #[error("presentation is not admissible: relation {0} is not contained in the square of the arrow ideal")]
    NotAdmissible(String),
    #[error("degree bound {bound} is below the maximal relation degree {needed}")]
    DegreeTooSmall { bound: usize, needed: usize },
    #[error("polynomial degree {degree} exceeds the completion bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular: {0}")]
    Singular(String),
    #[error("field mismatch: {0}")]
    Field(String),
    #[error("not a representation: {0}")]
    NotRepresentation(String),
    #[error("module is not semisimple as given: {0}")]
    NotSimple(String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("missing series for generator `{0}`")]
    MissingSeries(String),
    #[error("relation has minimal degree {found}, expected {expected}")]
    MinDegree { expected: usize, found: usize },
    #[error("relation is not vertex-diagonal: {0}")]
    NotVertexDiagonal(String),
    #[error("truncation order {0} too small: every relation expansion vanishes")]
    NoMinimalPart(usize),
    #[error("{0}")]
    Parse(#[from] crate::dsl::ParseError),
    #[error("{0}")]
    Session(String),
}
