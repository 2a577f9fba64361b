use thiserror::Error;

/// Errors surfaced by ring construction, ideal machinery and classification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),

    #[error("ring order {order} exceeds the {kind} cap {cap} (override with SNIDEAL_MAX_ORDER)")]
    OrderCap { order: u64, cap: u64, kind: &'static str },

    #[error("element index {index} out of range for a ring of order {order}")]
    IndexRange { index: usize, order: usize },

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("ideal is the whole ring; a proper ideal is required")]
    NotProper,

    #[error("multiplicative set meets the ideal; S-relative predicates require S \u{2229} I = \u{2205}")]
    NotDisjoint,

    #[error("the given element set is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("the given element set is not multiplicatively closed: {0}")]
    NotMultClosed(String),

    #[error("enumeration cap {cap} exceeded by ring of order {order}")]
    EnumerationCap { order: usize, cap: usize },

    #[error("localization at a set containing 0 collapses to the zero ring")]
    DegenerateLocalization,

    #[error("map is not a unital ring homomorphism: {0}")]
    InvalidHom(String),

    #[error("invalid module action: {0}")]
    InvalidModule(String),

    #[error("construction precondition violated: {0}")]
    Precondition(String),

    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),

    #[error("{0} does not divide {1} or is not prime")]
    BadCofactor(u64, u64),

    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
