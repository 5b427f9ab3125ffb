use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::bitset::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("{0}")]
    InvalidFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what}: order {order} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("function has order {function} but the base graph has order {graph}")]
    OrderMismatch { function: usize, graph: usize },

    #[error("invalid function spec: {0}")]
    FunctionSpec(String),

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    #[error("operation requires a nonempty vertex set")]
    EmptySet,

    #[error("the given set is not a zero forcing set")]
    NotZeroForcing,

    #[error("vertex {0} is not a cut vertex")]
    NotCutVertex(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
}

impl Error {
    /// Process exit code used by the CLI: 3 for cap violations, 2 for every
    /// other input problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            _ => 2,
        }
    }
}
