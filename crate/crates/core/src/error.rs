use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    // ---- presentations and words ----
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid generator name `{name}`: must start with a letter and contain only letters, digits, and underscores")]
    InvalidIdentifier { name: String },
    #[error("duplicate generator `{name}`")]
    DuplicateGenerator { name: String },
    #[error("line {line}: undeclared generator `{name}`")]
    UndeclaredGenerator { name: String, line: usize },
    #[error("line {line}: relator is empty after free reduction")]
    EmptyRelator { line: usize },
    #[error("unknown builtin presentation `{key}`")]
    UnknownBuiltin { key: String },
    #[error("builtin `{key}`: {message}")]
    BuiltinParameter { key: String, message: String },
    #[error("morphism images do not match the target generators: {message}")]
    MorphismImages { message: String },
    #[error("word uses generator `{name}` which the presentation does not declare")]
    UnknownGenerator { name: String },

    // ---- numerics ----
    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("matrix dimensions {left} and {right} do not match")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is numerically singular (smallest singular value {sigma_min:.3e} <= {floor:.3e})")]
    SingularMatrix { sigma_min: f64, floor: f64 },
    #[error("matrix is not unitary: ||U*U - I|| = {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotUnitary { defect: f64, tol: f64 },
    #[error("matrix is not skew-Hermitian: ||S + S*|| = {deviation:.3e}")]
    NotSkewHermitian { deviation: f64 },
    #[error("eigenphase {phase:.6} is within {distance:.3e} of the branch cut at -1 (margin {margin:.3e}); principal logarithm undefined")]
    BranchCut {
        phase: f64,
        distance: f64,
        margin: f64,
    },
    #[error("eigensystem reconstruction residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    EigenResidual { residual: f64, tol: f64 },
    #[error("Hermitian eigensolver failed to converge")]
    EigenConvergence,

    // ---- almost representations ----
    #[error("assignment does not cover the presentation generators: {message}")]
    IncompleteAssignment { message: String },
    #[error("almost representation dimension must be positive")]
    ZeroDimension,
    #[error("presentations do not match: expected `{expected}`, found `{found}`")]
    PresentationMismatch { expected: String, found: String },
    #[error("perturbation magnitude {magnitude} out of range (must lie in (0, 0.5))")]
    InvalidMagnitude { magnitude: f64 },
    #[error("voiculescu family needs n >= 2, got {n}")]
    VoiculescuTooSmall { n: usize },

    // ---- invariants ----
    #[error("eigenvalue at phase {phase:.6} violates |lambda^2 - 1| <= 1 (value {value:.6})")]
    InvolutionPrecondition { phase: f64, value: f64 },
    #[error("matrix is not an involution: ||B^2 - I|| = {deviation:.3e}")]
    NotInvolution { deviation: f64 },
    #[error("rounded involution lies at distance {distance:.6e} from the input, beyond the requested bound {bound:.6e}")]
    RoundingDistance { distance: f64, bound: f64 },

    // ---- homotopy ----
    #[error("initial residual {residual:.3e} exceeds delta/10 = {bound:.3e}")]
    LiftInitialResidual { residual: f64, bound: f64 },
    #[error("c-path samples {index} -> {} differ by {gap:.6} in operator norm (max allowed {max_gap:.6})", index + 1)]
    LiftSampleGap {
        index: usize,
        gap: f64,
        max_gap: f64,
    },
    #[error("c-path sample {index} is not special unitary (|det - 1| = {det_deviation:.3e})")]
    NotSpecialUnitary { index: usize, det_deviation: f64 },
    #[error("c-path must contain at least one sample")]
    EmptyPath,
    #[error("surface reduction stage {stage} failed: {message}")]
    SurfaceStage { stage: usize, message: String },
    #[error("presentation is not a surface presentation of genus >= 2")]
    NotSurfacePresentation,
    #[error("initial defect {defect:.4} exceeds the supported bound {bound:.4}")]
    DefectTooLarge { defect: f64, bound: f64 },

    // ---- serialization ----
    #[error("json: {0}")]
    Json(String),
    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
