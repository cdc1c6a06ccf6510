use thiserror::Error;

/// Errors raised by lattice arithmetic, expression parsing and the checks built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty expression")]
    EmptyExpression,
    #[error("unknown generator name `{0}`")]
    UnknownGenerator(String),
    #[error("malformed integer `{0}`")]
    MalformedInteger(String),
    #[error("unexpected input at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("negative coefficient for {0} where an effective divisor is required")]
    NegativeCoefficient(String),
    #[error("coefficient {0} exceeds the supported bound of {bound}", bound = crate::lattice::COEFF_LIMIT)]
    CoefficientOverflow(i128),
    #[error("divisor must be effective")]
    NotEffective,
    #[error("divisor must be nonzero")]
    ZeroDivisor,
    #[error("subdivisor enumeration needs {needed} vectors, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("D.theta(D) = {0} is odd, c2 would not be integral")]
    Parity(i64),
    #[error("node {node} meets trope {trope}; the shape requires disjoint curves")]
    Intersecting { node: String, trope: String },
    #[error("{0} is not a node")]
    NotANode(String),
    #[error("{0} is not a trope")]
    NotATrope(String),
    #[error("node {0} listed twice")]
    DuplicateNode(String),
    #[error("node set must be nonempty")]
    EmptyNodeSet,
    #[error("coefficient of {0} must be positive")]
    NonPositive(String),
    #[error("invalid search parameters: {0}")]
    InvalidParams(String),
    #[error("integer overflow during elimination")]
    EliminationOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;
