//! Finitely presented groups: words, presentations with peripheral marks,
//! word problems for free and surface groups, and presentation builders.

mod abelian;
mod automorphism;
mod builders;
mod mapping_torus;
mod presentation;
mod surface;
mod word;

pub use abelian::{abelian_invariants, smith_diagonal, AbelianInvariants};
pub use automorphism::FreeAutomorphism;
pub use builders::{
    build_semidirect, direct_with_z, presentation_bounded_sfs, presentation_closed_sfs, presentation_sfs,
};
pub use mapping_torus::{stabilization_iso, BasisChange, MappingTorus, NormalForm, StabilizationIso};
pub use presentation::{parse_word, PeripheralMark, Presentation};
pub use surface::{dehn_reduce, surface_group, surface_relator, WordProblem};
pub use word::{cyclic_split, free_conjugator, free_reduce, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FpError {
    #[error("parse error at {pos}: {reason}")]
    Parse { pos: usize, reason: String },
    #[error("invalid generator name '{0}'")]
    BadName(String),
    #[error("word refers to a generator outside the presentation")]
    UnknownGenerator,
    #[error("word problem is only solved for free groups and standard closed-surface groups")]
    UnsupportedWordProblem,
    #[error("not a periodic automorphism: {0}")]
    NotAutomorphism(String),
    #[error("gcd({k}, {order}) != 1")]
    NotCoprime { k: i64, order: u64 },
    #[error("exponent {0} is too large for a presentation")]
    ExponentTooLarge(String),
    #[error("expected a {0} Seifert fibered space")]
    WrongSeifertShape(&'static str),
    #[error("mapping-torus marks must be single boundary words")]
    UnsupportedMark,
    #[error("the automorphism does not preserve a marked boundary word up to conjugacy")]
    MarkNotInvariant,
    #[error("relator {index} does not map to the identity")]
    RelatorNotTrivial { index: usize },
    #[error("exponent lattice map is not unimodular")]
    LatticeCheck,
}

pub type Result<T> = std::result::Result<T, FpError>;
