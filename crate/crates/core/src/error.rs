use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid level p = {0}: the theory needs p >= 3")]
    InvalidLevel(i64),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("division by zero")]
    Division,

    #[error("degenerate quadratic extension: eta lies in the base field")]
    DegenerateExtension,

    #[error("sum of mu_c * Delta_c^2 vanishes; anomaly constant undefined")]
    AnomalyDegenerate,

    #[error("{0} is not a color at p = {1}")]
    NotAColor(i64, u32),

    #[error("triple {{{0}, {1}, {2}}} is not admissible")]
    Inadmissible(u32, u32, u32),

    #[error("oracle limit: {0}")]
    OracleLimit(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("wheel shape error: {0}")]
    WheelShape(String),

    #[error("unsupported coloring: {0}")]
    UnsupportedColoring(String),

    #[error("syntax error at byte {offset}: expected {}", expected.join(" | "))]
    Syntax { offset: usize, expected: Vec<String> },

    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),

    #[error("malformed data: {0}")]
    Malformed(String),

    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
