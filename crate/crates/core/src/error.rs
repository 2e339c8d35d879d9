use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chords ({}, {}) and ({}, {}) cross", .first.0, .first.1, .second.0, .second.1)]
    CrossingChords {
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("not a fixed-point-free involution at point {point}: {detail}")]
    NotInvolution { point: usize, detail: String },

    #[error("bypass arc does not belong to the diagram: {0}")]
    ArcNotInDiagram(String),

    #[error("bypass attachment closes {loops} dividing curve(s) on the disk")]
    DisallowedClosedComponent { loops: usize },

    #[error("degree violation at {locator}: {detail}")]
    DegreeViolation { locator: String, detail: String },

    #[error("bad identification for disk {disk}: {detail}")]
    BadIdentification { disk: usize, detail: String },

    #[error("disk {disk} has no intersection with the boundary dividing set (n = 0)")]
    EmptyIntersection { disk: usize },

    #[error("boundary dividing set is not tight: {detail}")]
    UntightBoundary { detail: String },

    #[error("malformed presentation at {locator}: {detail}")]
    MalformedPresentation { locator: String, detail: String },

    #[error("configuration does not match presentation at {locator}: {detail}")]
    ConfigurationMismatch { locator: String, detail: String },

    #[error("configuration space has {configurations} elements, limit is {limit}")]
    ResourceLimit { configurations: u128, limit: u128 },

    #[error("bad slope {0}: expected a negative rational -p/q")]
    BadSlope(String),

    #[error("line {line}: syntax error: {detail}")]
    Syntax { line: usize, detail: String },

    #[error("line {line}: {source}")]
    Semantic {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Strips `Semantic` wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Semantic { source, .. } => source.root(),
            other => other,
        }
    }
}
