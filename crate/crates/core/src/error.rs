use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the engine can report. Witnesses are element indices in
/// the canonical labelling of the group they belong to, except for table
/// validation errors which refer to the caller's raw labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // -- finite groups ---------------------------------------------------
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("operation is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("malformed map: {0}")]
    MalformedMap(String),
    #[error("map is not a homomorphism at ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal: conjugating {n} by {g} leaves it")]
    NotNormal { g: usize, n: usize },
    #[error("homomorphisms do not share a codomain")]
    CodomainMismatch,
    #[error("{what} of size {size} exceeds the size bound {bound}")]
    SizeBound {
        what: &'static str,
        size: u128,
        bound: u128,
    },
    #[error("action axiom fails: {0}")]
    ActionAxiomViolation(String),
    #[error("components do not fit together: {0}")]
    ComponentMismatch(String),

    // -- crossed modules -------------------------------------------------
    #[error("CM1 fails at (b, a) = ({b}, {a})")]
    Cm1Violation { b: usize, a: usize },
    #[error("CM2 fails at (a, a1) = ({a}, {a1})")]
    Cm2Violation { a: usize, a1: usize },
    #[error("boundary square does not commute at a = {a}")]
    SquareNotCommuting { a: usize },
    #[error("morphism is not equivariant at (b, a) = ({b}, {a})")]
    NotEquivariant { b: usize, a: usize },

    // -- liftings --------------------------------------------------------
    #[error("lifting triangle does not commute at a = {a}")]
    TriangleViolation { a: usize },
    #[error("induced crossed module is invalid: {0}")]
    InducedCmViolation(Box<Error>),
    #[error("kernel of the lift is not inside the kernel of the boundary at a = {a}")]
    KernelViolation { a: usize },
    #[error("element {element} of the subgroup is not in the kernel of the boundary")]
    NotSubgroupOfKernel { element: usize },
    #[error("liftings are over different base crossed modules")]
    BaseMismatch,
    #[error("lifting morphism does not commute with the lifts at a = {a}")]
    PhiViolation { a: usize },
    #[error("lifting morphism does not commute with the projections at x = {x}")]
    OmegaViolation { x: usize },
    #[error("source crossed module is not transitive")]
    NotTransitive,
    #[error("kernel condition fails: kernel element {a} does not map into the kernel of the lift")]
    KernelConditionFails { a: usize },
    #[error("lifted map is not well defined at {b}")]
    WellDefinednessDefect { b: usize },

    // -- homotopies and derivations -------------------------------------
    #[error("H1 fails at ({b1}, {b2})")]
    H1Violation { b1: usize, b2: usize },
    #[error("H2 fails at a = {a}")]
    H2Violation { a: usize },
    #[error("H3 fails at b = {b}")]
    H3Violation { b: usize },
    #[error("derivation identity fails at ({b}, {b1})")]
    NotADerivation { b: usize, b1: usize },
    #[error("the two circle-product formulas disagree at b = {b}")]
    FormulaMismatch { b: usize },
    #[error("regularity certificate needs the enumerated derivation semigroup")]
    RequiresEnumeration,
    #[error("map is not a section: omega(s({b})) != {b}")]
    NotASection { b: usize },

    // -- groupoids -------------------------------------------------------
    #[error("groupoid axiom fails: {0}")]
    GroupoidAxiom(String),
    #[error("not a groupoid morphism: {0}")]
    NotAMorphism(String),
    #[error("group-groupoid action axiom fails: {0}")]
    GgActionViolation(String),

    /// A theorem-guaranteed property failed. Always a bug.
    #[error("internal defect: {0}")]
    Defect(String),
}

impl Error {
    pub(crate) fn defect(msg: impl Into<String>) -> Self {
        Error::Defect(msg.into())
    }
}
