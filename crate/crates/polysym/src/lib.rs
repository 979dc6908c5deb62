//! Exact symmetry groups of polyhedral cones and polytopes.
//!
//! This crate computes the linear, projective and combinatorial symmetry
//! groups of a pointed full-dimensional polyhedral cone (polytopes are
//! handled through homogeneous coordinates), together with several
//! subgroups that matter in practice: integral subgroups of the linear
//! group, centralizer subgroups, and coordinate symmetries of integer
//! linear programs.
//!
//! All arithmetic is exact over the rationals. Symmetry computations are
//! reduced to automorphism groups of colored graphs, which are solved by a
//! partition-backtrack engine; the groups themselves are handled through a
//! deterministic Schreier–Sims permutation kernel.
//!
//! The main entry points are:
//!
//! * [`cone::Cone`] — construction, facet/face enumeration, decomposition,
//! * [`linsym::lin_group`] and friends — the linear group and subgroups,
//! * [`projsym::proj_group`] / [`projsym::proj_equivalent`] — projective
//!   symmetries and equivalence,
//! * [`combsym::comb_group`] / [`combsym::skel_group`] — combinatorial and
//!   skeleton symmetries,
//! * [`ilp::coordinate_symmetries`] — variable symmetries of an ILP.

pub mod cgraph;
pub mod cli;
pub mod combsym;
pub mod cone;
mod engine;
pub mod group;
pub mod ilp;
pub mod lattice;
pub mod linalg;
pub mod linsym;
pub mod perm;
pub mod projsym;
pub mod rat;
pub mod report;

pub use cone::Cone;
pub use group::PermGroup;
pub use linalg::RatMatrix;
pub use perm::Perm;
pub use rat::Rat;
pub use report::SymmetryReport;

/// Errors shared by all modules of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,
    #[error("columns do not span the target space")]
    RankDeficient,
    #[error("input is not full-dimensional")]
    NotFullDim,
    #[error("computation exceeds configured bound: {0}")]
    TooLarge(String),
    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("oracle is inconsistent: {0}")]
    OracleInconsistent(String),
    #[error("graph automorphism admits no realizing matrix: {0}")]
    RealizationFailure(String),
    #[error("cone is decomposable")]
    Decomposable,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported feature: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Guard bounds for the enumerative parts of the toolkit.
///
/// Every brute-force path checks one of these bounds and fails with
/// [`Error::TooLarge`] instead of running away. The defaults are sized for
/// desk-scale instances and can be raised explicitly.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Maximum number of rays for facet/face enumeration by subsets.
    pub max_facet_rays: usize,
    /// Maximum group order for element-by-element iteration.
    pub max_enumeration: u64,
    /// Maximum index `[G2 : G1]` in the intermediate subgroup algorithm.
    pub max_coset_index: u64,
    /// Maximum orbit size in the lattice-stabilizer computation.
    pub max_lattice_orbit: usize,
    /// Maximum number of candidate bijections tried by equivalence tests.
    pub max_equiv_search: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_facet_rays: 64,
            max_enumeration: 10_000_000,
            max_coset_index: 1_000_000,
            max_lattice_orbit: 100_000,
            max_equiv_search: 1_000_000,
        }
    }
}
