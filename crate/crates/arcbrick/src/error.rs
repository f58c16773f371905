use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arc out of range: left {left} plus pattern length {len} needs right endpoint {right} but n = {n}")]
    ArcOutOfRange {
        left: usize,
        len: usize,
        right: usize,
        n: usize,
    },
    #[error("arc patterns may only contain the letters 'u' and 'o'")]
    BadPatternLetter,
    #[error("malformed arc string {0:?}, expected \"left:pattern\" such as \"0:uoou\"")]
    BadArcString(String),
    #[error("ambient mismatch: arcs live on different node counts ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("arcs must share exactly one endpoint and not otherwise intersect")]
    NotClockwiseComparable,
    #[error("({i},{j}) is not a nontrivial crossing pair directed from the second arc to the first")]
    NotACrossingPair { i: usize, j: usize },
    #[error("diagram construction needs n >= {0}")]
    DiagramTooSmall(usize),
    #[error("orientation strings may only contain 'u' and 'o' and must have length n-1")]
    BadOrientation,
    #[error("relation locus {0} is outside [2, n-1]")]
    BadRelationSet(usize),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("representation is not valid over the given algebra")]
    InvalidRepresentation,
    #[error("representation is not thin (a vertex has dimension > 1)")]
    NotThin,
    #[error("representation is not of brick form: {0}")]
    NotBrickForm(String),
    #[error("module is not a brick")]
    NotABrick,
    #[error("arcs do not have a contested endpoint")]
    NoContestedEndpoint,
    #[error("extension witness is not defined over this algebra (relations meet the crossing interval)")]
    NotAdmissible,
    #[error("operation requires the gentle family member S = [2, n-1]")]
    GentleModeRequired,
    #[error("operation is not defined for hereditary algebras")]
    PreprojectiveFamilyRequired,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("dimension vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("bad rational literal {0:?}")]
    BadRational(String),
    #[error("bad json payload: {0}")]
    BadJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
