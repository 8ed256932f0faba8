use crate::point_set::PointSet;
use thiserror::Error;

/// Why a family of sets fails to be a topology on its carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyDefect {
    MissingEmpty,
    MissingFull,
    /// Two members whose union is not in the family.
    UnionEscape(PointSet, PointSet),
    /// Two members whose intersection is not in the family.
    IntersectionEscape(PointSet, PointSet),
}

impl std::fmt::Display for TopologyDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TopologyDefect::MissingEmpty => write!(f, "missing-empty"),
            TopologyDefect::MissingFull => write!(f, "missing-full"),
            TopologyDefect::UnionEscape(u, v) => write!(f, "union-escape({u}, {v})"),
            TopologyDefect::IntersectionEscape(u, v) => {
                write!(f, "intersection-escape({u}, {v})")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a topology: {0}")]
    NotATopology(TopologyDefect),

    #[error("set {set} escapes the carrier 0..{n}")]
    OutOfCarrier { set: PointSet, n: usize },

    #[error("point {point} escapes the carrier 0..{n}")]
    PointOutOfCarrier { point: usize, n: usize },

    #[error("cap exceeded: {what} = {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    #[error("space is not locally dense-connected")]
    NotLocallyDenseConnected,

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("unknown claim `{claim}` for model `{model}`")]
    UnknownClaim { model: String, claim: String },

    #[error("not expressible in model `{model}`: {what}")]
    NotExpressible { model: String, what: String },

    #[error("unknown symbolic model `{0}`")]
    UnknownModel(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("unknown named space `{0}`")]
    UnknownSpace(String),

    #[error("invalid point map: {0}")]
    InvalidMap(String),

    #[error("property expression error: {0}")]
    BadExpression(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
