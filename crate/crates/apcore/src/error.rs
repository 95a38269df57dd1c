use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("element {value} outside [1, {n}]")]
    OutOfRange { value: u64, n: u64 },
    #[error("elements not strictly ascending at {value}")]
    NotAscending { value: u64 },
    #[error("set contains the progression {0}, {1}, {2}")]
    NotThreeFree(u64, u64, u64),
    #[error("universe {n} exceeds the supported maximum {max}")]
    TooLarge { n: u64, max: u64 },
    #[error("position {0} is forbidden; extending with 1 would create a progression")]
    ForbiddenExtension(usize),
    #[error("state already has length n = {0}")]
    StateFull(usize),
}
