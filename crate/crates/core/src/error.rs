use std::path::PathBuf;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("radial operator assembly failed: off-band entry {value:.3e} at ({row}, {col}) exceeds {tol:.1e}")]
    Assembly {
        row: usize,
        col: usize,
        value: f64,
        tol: f64,
    },

    #[error(
        "truncation unstable for m={m}: eigenvalue {index} moved by {relative_change:.3e} (relative) when J doubled"
    )]
    Truncation {
        m: usize,
        index: usize,
        relative_change: f64,
    },

    #[error("eigen-relation residual {residual:.3e} for (m={m}, n={n}) exceeds {tol:.1e}")]
    EigenResidual {
        m: usize,
        n: usize,
        residual: f64,
        tol: f64,
    },

    #[error("spectral ordering violated: {0}")]
    Ordering(String),

    #[error("Krylov solver did not converge after {iterations} iterations (relative residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("scattered field is identically zero; degree of nonlinearity is undefined")]
    ZeroField,

    #[error("bandwidth mismatch: data c={data}, basis c={basis}")]
    BandwidthMismatch { data: f64, basis: f64 },

    #[error("spectral cutoff retains no basis entries")]
    EmptyCutoff,

    #[error("basis does not cover the requested indices: {0}")]
    BasisBound(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("malformed {kind} data: {detail}")]
    Format { kind: &'static str, detail: String },

    #[error("sample {id}: {source}")]
    Sample {
        id: String,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(kind: &'static str, detail: impl Into<String>) -> Self {
        Error::Format {
            kind,
            detail: detail.into(),
        }
    }

    /// Coarse classification used for process exit codes and FFI status codes.
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Domain(_) | Error::InvalidIndex(_) | Error::InvalidArgument(_) => ErrorCategory::User,
            Error::BandwidthMismatch { .. }
            | Error::Shape(_)
            | Error::Format { .. }
            | Error::Io { .. }
            | Error::Image(_)
            | Error::BasisBound(_) => ErrorCategory::Data,
            Error::Sample { source, .. } => source.category(),
            Error::Assembly { .. }
            | Error::Truncation { .. }
            | Error::EigenResidual { .. }
            | Error::Ordering(_)
            | Error::NonConvergence { .. }
            | Error::ZeroField
            | Error::EmptyCutoff => ErrorCategory::Numerical,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    User,
    Data,
    Numerical,
}

impl ErrorCategory {
    /// Process exit status: 2 user error, 3 data error, 4 numerical failure.
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCategory::User => 2,
            ErrorCategory::Data => 3,
            ErrorCategory::Numerical => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
