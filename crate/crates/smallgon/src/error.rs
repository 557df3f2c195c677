use thiserror::Error;

/// Errors produced by constructors, solvers, and parsers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("non-finite coordinate at vertex index {0}")]
    NonFiniteVertex(usize),

    #[error("coincident consecutive vertices at index {0}")]
    DegenerateEdge(usize),

    #[error("{0}")]
    Domain(String),

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("non-finite residual at t = {0}")]
    NonFiniteResidual(f64),

    #[error("bracket expansion exhausted around {guess} (final half-width {half_width:e})")]
    BracketExhausted { guess: f64, half_width: f64 },

    #[error("no feasible ordinate at t = {t}: discriminant {discriminant:e} < 0")]
    InfeasibleAngle { t: f64, discriminant: f64 },

    #[error("unknown fixture name `{0}`")]
    UnknownFixture(String),

    #[error("no tabulated reference perimeter for n = {0}")]
    NotTabulated(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
