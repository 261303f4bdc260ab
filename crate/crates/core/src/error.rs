use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration has no points")]
    EmptyConfiguration,
    #[error("{points} points but {labels} labels")]
    LabelCountMismatch { points: usize, labels: usize },
    #[error("point {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("duplicate point {0:?}")]
    DuplicatePoint(Vec<i64>),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("points span an affine space of dimension {rank}, ambient dimension is {dim}")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error("simplex {0:?} is degenerate")]
    DegenerateSimplex(Vec<usize>),
    #[error("simplex {indices:?} is not a valid {expected}-element index set")]
    InvalidSimplex { indices: Vec<usize>, expected: usize },
    #[error("configuration has {points} points, enumeration cap is {cap}")]
    CapExceeded { points: usize, cap: usize },
    #[error("heights do not induce a triangulation: cell through {0:?} is not a simplex")]
    NonGenericHeights(Vec<usize>),
    #[error("expected {expected} heights, got {found}")]
    HeightCountMismatch { expected: usize, found: usize },
    #[error("not a triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("variable {0:?} has no value")]
    MissingVariable(String),
    #[error("variable {0:?} is not assigned by the specialization")]
    UnassignedVariable(String),
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("matrix is not square")]
    NotSquare,
    #[error("degree must be at least {min}, got {found}")]
    DegreeTooSmall { min: usize, found: usize },
    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),
    #[error("no principal A-determinant is known for this configuration")]
    UnsupportedConfiguration,
    #[error("malformed JSON input: {0}")]
    Json(String),
    #[error("GKZ vector {0:?} is not a vertex of the secondary polytope")]
    NotExtremal(Vec<u64>),
    #[error("invalid log-derivative basis: {0}")]
    InvalidBasis(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
