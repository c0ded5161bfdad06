use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: String, limit: usize },
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("values do not define a sup-preserving map: {0}")]
    NotSupPreserving(String),
    #[error("no transpose exists: {0}")]
    NoTranspose(String),
    #[error("not a dual pairing: {0}")]
    NotADualPairing(String),
    #[error("multiplication is not associative at {0:?}")]
    NotAssociative([usize; 3]),
    #[error("multiplication does not distribute over joins: {0}")]
    NotSupDistributive(String),
    #[error("element {0} is not dualizing")]
    NotDualizing(usize),
    #[error("witness fails verification: {0}")]
    WitnessInvalid(String),
    #[error("map is not a join of one-step maps")]
    NotTight,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
}

impl Error {
    pub(crate) fn limit(what: impl Into<String>, limit: usize) -> Self {
        Error::ResourceLimit {
            what: what.into(),
            limit,
        }
    }
}
