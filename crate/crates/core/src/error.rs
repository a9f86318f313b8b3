use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),

    #[error("cannot parse {what} from {text:?}")]
    Parse { what: &'static str, text: String },

    #[error("{0} is not a positive root of this system")]
    NotARoot(String),

    #[error("word is not reduced")]
    NotReduced,

    #[error("root {0} does not occur in the word")]
    RootNotInWord(String),

    #[error("commutation class has more than {cap} members (stopped after {count})")]
    ClassTooLarge { cap: usize, count: usize },

    #[error("sequence enumeration exceeded the cap of {cap}")]
    EnumerationCapExceeded { cap: usize },

    #[error("vertex {0} is not a sink of the quiver")]
    NotASink(usize),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("o_t({k},{l}) at t={t} is not well defined: member pairs give {values:?}")]
    WellDefinednessViolation {
        k: usize,
        l: usize,
        t: u32,
        values: Vec<u32>,
    },

    #[error("fixture {0} not found")]
    FixtureMissing(String),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("node {0} is out of range")]
    InvalidNode(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
