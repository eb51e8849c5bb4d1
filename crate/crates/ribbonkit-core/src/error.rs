//! The crate-wide error type.

use alloc::string::String;

/// Errors reported by the library.
///
/// Operations never panic on bad user input; every precondition violation
/// maps to one of these variants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    #[error("edge `{0}` occurs {1} times in the word, expected exactly 2")]
    MalformedWord(String, usize),
    #[error("twist list names unknown edge `{0}`")]
    UnknownTwistLabel(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown ground-set element `{0}`")]
    UnknownElement(String),
    #[error("unknown matrix label `{0}`")]
    UnknownLabel(String),
    #[error("edge label `{0}` is empty or contains whitespace")]
    InvalidLabel(String),
    #[error("{requested} elements exceed the exhaustive enumeration limit {limit}")]
    SizeLimitExceeded { requested: usize, limit: usize },
    #[error("edge `{0}` is not twisted")]
    EdgeNotTwisted(String),
    #[error("edge `{0}` is twisted")]
    EdgeTwisted(String),
    #[error("edges `{0}` and `{1}` do not interlace")]
    NotInterlacing(String, String),
    #[error("the given set is not a quasi-tree")]
    NotAQuasiTree,
    #[error("cannot delete anchored edge `{0}`; reanchor first")]
    AnchoredEdgeDeletion(String),
    #[error("rotation system is disconnected")]
    DisconnectedInput,
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("label `{0}` already present in the ground set")]
    LabelClash(String),
    #[error("feasible set of odd size; not in the image of the parity lift")]
    OddFeasibleSet,
    #[error("pivot block is singular")]
    SingularPivotBlock,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("matrix labels do not match the diagram's edges")]
    IndexMismatch,
    #[error("diagram has a twisted loop; operation requires an orientable bouquet")]
    NotOrientable,
    #[error("no pseudo-orientability certificate exists")]
    NotPseudoOrientable,
    #[error("the zero polynomial has no root count")]
    ZeroPolynomial,
    #[error("exact and numerical stability verdicts disagree: {0}")]
    OracleDisagreement(String),
    #[error("evaluation point missing variable `{0}`")]
    MissingVariable(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid family parameter n = {0}")]
    InvalidN(usize),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("subset arguments overlap on element `{0}`")]
    OverlappingParts(String),
    #[error("strong-exchange check and lifted-evenness check disagree")]
    StrongLiftMismatch,
}
