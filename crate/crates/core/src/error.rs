use thiserror::Error;

use crate::set::ElementSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("associativity fails at ({x},{y},{z}): ({x}·{y})·{z} = {left} but {x}·({y}·{z}) = {right}")]
    AssociativityViolation {
        x: usize,
        y: usize,
        z: usize,
        left: usize,
        right: usize,
    },

    #[error("table cell ({row},{col}) holds {value}, outside [0, {order})")]
    TableIndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("index {index} out of range for carrier of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("carrier mismatch: expected order {expected}, found {found}")]
    CarrierMismatch { expected: usize, found: usize },

    #[error("table must be {order}×{order}, got a row of length {len}")]
    RaggedTable { order: usize, len: usize },

    #[error("unsupported semigroup family: {0}")]
    UnsupportedSpec(String),

    #[error("size limit exceeded: {what} needs {requested}, limit is {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("generator set is empty")]
    EmptyGeneratorSet,

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("{0} is not a minimal {1} ideal")]
    NotMinimalIdeal(ElementSet, &'static str),

    #[error("{0} is not closed under the operation")]
    NotASubsemigroup(ElementSet),

    #[error("family contains the empty set")]
    EmptyMemberSet,

    #[error("family is not upward closed: {missing} is a superset of the generator but not listed")]
    NotUpwardClosed { missing: ElementSet },

    #[error("family is empty")]
    EmptyFamily,

    #[error("family lacks the finite intersection property; witness subfamily {0:?}")]
    NoFip(Vec<ElementSet>),

    #[error("hypothesis fails at A = {set}, x = {x}: no member B with x·B ⊆ A")]
    HypothesisFails { set: ElementSet, x: usize },

    #[error("algebraic form needs an idempotent filter; generator {0} is not product-closed")]
    AlgebraicFormUndefined(ElementSet),

    #[error("filter with generator {0} is not idempotent")]
    FilterNotIdempotent(ElementSet),

    #[error("search bound exceeded: {what} has size {size}, cap is {cap}")]
    SearchBoundExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("{0} is not very strongly central for this filter")]
    NotVsfc(ElementSet),

    #[error("element {p} is not a member of {set}")]
    NotAMember { p: usize, set: ElementSet },

    #[error("family is not downward directed: no member below {0} ∩ {1}")]
    FamilyNotDirected(ElementSet, ElementSet),

    #[error("homomorphism law fails: T_{s}(T_{t}({x})) = {composed} but T_{st}({x}) = {direct}")]
    HomomorphismViolation {
        s: usize,
        t: usize,
        st: usize,
        x: usize,
        composed: usize,
        direct: usize,
    },

    #[error("element {0} does not act on this system")]
    NotActing(usize),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
