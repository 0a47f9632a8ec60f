use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Two operands live on different labeled bases.
    #[error("basis mismatch in {0}")]
    BasisMismatch(&'static str),

    #[error("amplitude count {found} does not match basis size {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("matrix shape {rows}x{cols} does not match bases ({expected_rows}x{expected_cols})")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("basis labels must be unique; duplicate: {0}")]
    DuplicateLabel(String),

    #[error("basis must contain at least one label")]
    EmptyBasis,

    #[error("unknown basis label: {0}")]
    UnknownLabel(String),

    /// Normalization of a vector with (numerically) zero norm.
    #[error("null state: norm {0:e} is too small to normalize")]
    NullState(f64),

    #[error("state is not normalized: norm {0}")]
    NotNormalized(f64),

    /// The basis has no tensor-factor or occupation structure needed by the
    /// operation.
    #[error("basis structure unsuitable for {0}")]
    Structure(&'static str),

    #[error("qubit slots must be distinct; got ({0}, {0})")]
    IdenticalSlots(u8),

    #[error("particle number {0} outside supported range 1..=3")]
    ParticleNumber(usize),

    #[error("invalid mode label: {0:?}")]
    InvalidMode(String),

    #[error("mode set must be nonempty and free of duplicates")]
    InvalidModeSet,

    #[error("invalid occupation label: {0:?}")]
    InvalidOccupation(String),

    /// Modes of the source space are not contained in the target space.
    #[error("mode {0} is not in the target mode set")]
    ModeNotInTarget(String),

    /// A restriction would drop amplitude carried outside the target modes.
    #[error("state carries amplitude {0:e} outside the target mode set")]
    Leakage(f64),

    #[error("input photon must occupy momentum {expected}, got {found}")]
    WrongMomentum { expected: u8, found: u8 },

    #[error("contraction removes {bra} photons from a {ket}-photon state")]
    TooFewPhotons { bra: usize, ket: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
