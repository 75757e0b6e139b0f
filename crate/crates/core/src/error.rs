use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("group exceeds the hard cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("element {0} is not a conjugacy class representative")]
    NotClassRep(usize),

    #[error("class functions live on different groups")]
    GroupMismatch,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("galois twist by {k} is not defined on conductor {conductor}")]
    NotCoprime { k: i64, conductor: u32 },

    #[error("class function is not an honest character: {0}")]
    NotHonest(String),

    #[error("modular character table computation failed: {0}")]
    Modular(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for the command-line front end.
    pub fn exit_status(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::InvalidGroup(_)
            | Error::GroupTooLarge { .. }
            | Error::Input(_)
            | Error::Io(_)
            | Error::Json(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
