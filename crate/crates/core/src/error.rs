use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("cell ({0},{1}) lies outside the diagram")]
    CellOutside(usize, usize),
    #[error("{0}")]
    Domain(String),
    #[error("degree window violated: {0}")]
    Window(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache format error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
