use crate::outbranching::TreeDefect;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("digraph has no vertices")]
    Empty,
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop arc at vertex {0}")]
    LoopArc(usize),
    #[error("vertex {0} is not reachable from the root")]
    Unreachable(usize),
    #[error("vertex {0} is not a cutvertex")]
    NotCutvertex(usize),
    #[error("{0:?} is not a length-4 bipath")]
    NotBipath([usize; 5]),
    #[error("arc ({y}, {x}) does not satisfy the arc deletion condition")]
    NotDeletable { y: usize, x: usize },
    #[error("in-neighbour {y} of {x} is cut off by the other in-neighbours")]
    DeletableArcPresent { y: usize, x: usize },
    #[error("digraph is not 2-connected")]
    NotTwoConnected,
    #[error("digraph is not normalized")]
    NotNormalized,
    #[error("digraph has a directed cycle")]
    Cyclic,
    #[error("invalid r-r numbering: {0}")]
    InvalidNumbering(&'static str),
    #[error("a-vertex {vertex} has {degree} distinct neighbours, expected 2")]
    DegreeNotTwo { vertex: usize, degree: usize },
    #[error("invalid outbranching: {0}")]
    InvalidTree(TreeDefect),
    #[error("{n} vertices exceed the exact oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

impl From<TreeDefect> for Error {
    fn from(d: TreeDefect) -> Self {
        Error::InvalidTree(d)
    }
}
