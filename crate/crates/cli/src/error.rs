use ovals_core::algebra::AlgebraError;
use ovals_core::certify::CertError;
use ovals_core::curves::CurveError;
use ovals_core::elimination::ElimError;
use ovals_core::parse::ParseError;
use ovals_core::puiseux::PuiseuxError;
use ovals_core::quadrature::QuadError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad invocation; exit code 2.
    #[error("usage: {0}")]
    Usage(String),
    /// A precondition of a library operation failed; exit code 1.
    #[error("{module}: {message}")]
    Domain { module: &'static str, message: String },
    #[error("io: {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain { .. } | CliError::Io { .. } => 1,
        }
    }

    pub fn domain(module: &'static str, message: impl Into<String>) -> Self {
        CliError::Domain {
            module,
            message: message.into(),
        }
    }
}

// Transparent wrappers are unwrapped so the message names the module whose
// precondition failed.

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::domain("algebra-core", e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Algebra(a) => a.into(),
            e => CliError::domain("expr-parse", e.to_string()),
        }
    }
}

impl From<ElimError> for CliError {
    fn from(e: ElimError) -> Self {
        CliError::domain("elimination", e.to_string())
    }
}

impl From<PuiseuxError> for CliError {
    fn from(e: PuiseuxError) -> Self {
        CliError::domain("puiseux", e.to_string())
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Parse(p) => p.into(),
            CurveError::Elimination(x) => x.into(),
            CurveError::Algebra(a) => a.into(),
            e => CliError::domain("curves", e.to_string()),
        }
    }
}

impl From<QuadError> for CliError {
    fn from(e: QuadError) -> Self {
        match e {
            QuadError::Curve(c) => c.into(),
            QuadError::Algebra(a) => a.into(),
            e => CliError::domain("quadrature", e.to_string()),
        }
    }
}

impl From<CertError> for CliError {
    fn from(e: CertError) -> Self {
        match e {
            CertError::Parse(p) => p.into(),
            CertError::Elimination(x) => x.into(),
            CertError::Quadrature(q) => q.into(),
            CertError::Curve(c) => c.into(),
            e => CliError::domain("certify", e.to_string()),
        }
    }
}
