use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring order: Z_{0} requires n >= 2")]
    InvalidOrder(usize),

    #[error("a product needs at least 2 factors, got {0}")]
    Arity(usize),

    #[error("construction error: {0}")]
    Construction(String),

    #[error("cannot form the quotient by the whole ring")]
    ImproperQuotient,

    #[error("invalid input: {0}")]
    Input(String),

    #[error("localization at a set containing 0 is degenerate")]
    DegenerateLocalization,

    #[error("resource limit exceeded: {what} ({actual} > {limit})")]
    Resource {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown property id `{0}`")]
    UnknownProperty(String),

    #[error("criterion inapplicable: {0}")]
    Inapplicable(String),

    #[error("criterion `{criterion}` disagrees with brute force on {ring} ideal {ideal}")]
    Disagreement {
        criterion: String,
        ring: String,
        ideal: String,
    },
}

impl Error {
    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// True for errors caused by caller input (as opposed to resource caps or
    /// internal disagreement).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidOrder(_)
                | Error::Arity(_)
                | Error::Construction(_)
                | Error::ImproperQuotient
                | Error::Input(_)
                | Error::DegenerateLocalization
                | Error::Domain(_)
                | Error::Parse { .. }
                | Error::UnknownProperty(_)
                | Error::Inapplicable(_)
        )
    }
}
