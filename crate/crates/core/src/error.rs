use thiserror::Error;

/// Errors raised by the algebraic constructions.
///
/// Checkers that answer yes/no questions (Leibniz identity, Lie-Yamaguti axioms,
/// loop properties) do not use this type; they return reports with witnesses.
/// `Error` is reserved for violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("not nilpotent; use float mode")]
    NotNilpotent,

    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("not a Leibniz algebra: {0}")]
    NotLeibniz(String),

    #[error("not a Lie algebra: {0}")]
    NotLie(String),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("invalid module action: {0}")]
    InvalidAction(String),

    #[error("invalid enveloping triple: {0}")]
    Envelope(#[from] EnvelopeViolation),

    #[error("ideal sandwich violated: {0}")]
    Sandwich(String),

    #[error("decomposition is not reductive: {0}")]
    NotReductive(String),

    #[error("Lie-Yamaguti envelope rejected: {0}")]
    LyEnvelope(#[from] LyEnvelopeViolation),

    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
}

/// The first violated condition of an enveloping triple (𝔤, 𝔥, f).
///
/// Indices are basis indices: `xi` in 𝔥, `i`, `j`, `k` in ℰ.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvelopeViolation {
    #[error("E fails the Leibniz identity at ({i},{j},{k})")]
    NotLeibniz { i: usize, j: usize, k: usize },
    #[error("h fails the Lie conditions: {0}")]
    HNotLie(String),
    #[error("action matrix of h basis {xi} is not a derivation of E at ({i},{j})")]
    NotDerivation { xi: usize, i: usize, j: usize },
    #[error("f is not h-equivariant at (xi={xi}, x={i})")]
    NotEquivariant { xi: usize, i: usize },
    #[error("f(x)y != x.y at ({i},{j})")]
    FactorizationFails { i: usize, j: usize },
    #[error("f is not a Leibniz homomorphism at ({i},{j})")]
    NotHomomorphism { i: usize, j: usize },
    #[error("squares ideal is not contained in ker f")]
    SquaresNotInKernel,
    #[error("ker f is not contained in ker lambda")]
    KernelNotInLambdaKernel,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// The first violated condition of a Lie-Yamaguti envelope datum (𝔥, action, Δ).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LyEnvelopeViolation {
    #[error("action of h basis {xi} is not a derivation of the binary product at ({i},{j})")]
    BinaryDerivation { xi: usize, i: usize, j: usize },
    #[error("action of h basis {xi} is not a derivation of the ternary product at ({i},{j},{k})")]
    TernaryDerivation { xi: usize, i: usize, j: usize, k: usize },
    #[error("delta is not skew-symmetric at ({i},{j})")]
    DeltaNotSkew { i: usize, j: usize },
    #[error("delta1: Delta(x,y)z != {{x,y,z}} at ({i},{j},{k})")]
    Delta1 { i: usize, j: usize, k: usize },
    #[error("delta2: Delta is not h-equivariant at (xi={xi}, {i},{j})")]
    Delta2 { xi: usize, i: usize, j: usize },
    #[error("delta3: cyclic sum of Delta([[x,y]],z) nonzero at ({i},{j},{k})")]
    Delta3 { i: usize, j: usize, k: usize },
    #[error("assembled bracket fails Jacobi: {0}")]
    Jacobi(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
