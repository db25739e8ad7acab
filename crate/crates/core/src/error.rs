use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element names must be non-empty")]
    EmptyName,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("{n} elements exceed the bitmask width of {limit}")]
    TooManyElements { n: usize, limit: usize },
    #[error("ground set of size {n} exceeds the powerset-table limit {max_n}")]
    TableLimit { n: usize, max_n: usize },
    #[error("objects are defined over different ground sets")]
    GroundMismatch,
    #[error("subset {0:?} is not contained in the ground set")]
    SubsetOutOfRange(crate::Subset),

    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(String, String, String),
    #[error("relation is not antisymmetric: `{0}` and `{1}`")]
    NotAntisymmetric(String, String),
    #[error("`{0}` and `{1}` have no {2}")]
    NoBound(String, String, &'static str),
    #[error("{table} table is wrong at (`{x}`, `{y}`)")]
    BadLatticeTable {
        table: &'static str,
        x: String,
        y: String,
    },
    #[error("order has no {0}")]
    NoExtremum(&'static str),

    #[error("choice table has {got} entries, expected {expected}")]
    TableLength { got: usize, expected: usize },
    #[error("choice {choice} is not contained in menu {menu}")]
    NotContracting { menu: String, choice: String },
    #[error("union of an empty list of choice functions")]
    EmptyUnion,
    #[error("threshold must be a positive integer")]
    NonPositiveThreshold,
    #[error("{0} requires an infinite ground set")]
    RequiresInfiniteGround(&'static str),
    #[error("choice function is not monotone: {0}")]
    NotMonotone(String),
    #[error("choice function is not complementary: {0}")]
    NotComplementary(String),
    #[error("choice function is not completely complementary: {0}")]
    NotCompletelyComplementary(String),
    #[error("neighborhood system violates property {property}) at `{element}`: {detail}")]
    InvalidNeighborhoodSystem {
        property: char,
        element: String,
        detail: String,
    },

    #[error("lift needs {required} points but the table limit is {max_n}")]
    LiftTooLarge { required: usize, max_n: usize },
    #[error("lift postcondition failed: {0}")]
    LiftPostcondition(String),

    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("no unique minimal maximizer on {menu}: {left} and {right} both maximize")]
    NoUniqueMinimalMaximizer {
        menu: String,
        left: String,
        right: String,
    },
    #[error("weak order is not supermodular: pair ({left}, {right})")]
    NotSupermodularOrder { left: String, right: String },
    #[error("weak order has {got} ranks, expected {expected}")]
    RankLength { got: usize, expected: usize },

    #[error("lattice choice function is not complementary: {0}")]
    LatticeNotComplementary(String),
    #[error("`{0}` is not below `{1}`: map is not contracting")]
    LatticeNotContracting(String, String),
    #[error("family is not join-closed: `{0}` v `{1}` = `{2}` is missing")]
    NotJoinClosed(String, String, String),
    #[error("family must contain the bottom element `{0}`")]
    MissingBottom(String),
    #[error("objects are defined over different lattices")]
    LatticeMismatch,
    #[error("lattice is not the powerset of its atoms")]
    NotPowersetLattice,

    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),

    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),

    #[error("invalid document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid document at `{path}`: {message}")]
    Document { path: String, message: String },
}

impl Error {
    pub(crate) fn doc(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Document {
            path: path.into(),
            message: message.into(),
        }
    }
}
