//! Exact arithmetic on classical Seifert invariants.
//!
//! A compact oriented Seifert fibered space over an oriented base is stored as
//! `(g, s, b; β₁/α₁, …, βₘ/αₘ)`: base genus `g`, number of boundary
//! components `s`, the obstruction `b` (closed manifolds only) and the
//! normalized fiber invariants `0 < β < α`, `gcd(α, β) = 1`.
//!
//! Everything here is exact; rationals are [`num_rational::Ratio`] over the
//! chosen [`SeifertInt`].

mod classify;
mod data;
mod families;
mod homeo;
mod monodromy;

pub use classify::{classify, Classification, Geometry, Parity};
pub use data::{ExceptionalManifold, FiberInvariant, SeifertData};
pub use families::{family_enumerate, lens_invariants, residue_family, totient, LensInvariants};
pub use homeo::{find_distinguishing_k, is_homeomorphic};
pub use monodromy::{
    fiber_boundary_data, periodic_map_from_seifert, power_monodromy, seifert_from_periodic_map, BoundaryCurves,
    ConePoint, PeriodicMapData,
};

use crate::scalar::SeifertInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeifertError {
    #[error(
        "fiber invariant {beta}/{alpha} is not normalized: need alpha >= 2, 0 < beta < alpha and gcd(alpha, beta) = 1"
    )]
    NotNormalized { alpha: String, beta: String },
    #[error("obstruction b must be given exactly when s = 0 (s = {boundary_count})")]
    ObstructionMismatch { boundary_count: u32 },
    #[error("not a periodic surface bundle: closed with nonzero Euler number e = {euler}")]
    NotPeriodicBundle { euler: String },
    #[error("k = {k} is not coprime to the monodromy order {lambda}")]
    NotCoprime { k: String, lambda: String },
    #[error("{0} has non-unique Seifert fiberings and is excluded")]
    Exceptional(ExceptionalManifold),
    #[error("residue family needs a prime p >= 7, got {0}")]
    BadResiduePrime(String),
    #[error("multiplicities {0} and {1} must both be >= 2 and coprime")]
    BadFamily(String, String),
    #[error("expected a bounded manifold with s = 1 and exactly two exceptional fibers")]
    NotTwoFiberKnotSpace,
    #[error("cone point ({alpha}, {q}) is invalid for a periodic map of order {order}")]
    BadConePoint { alpha: String, q: String, order: String },
    #[error("cone orders have lcm {lcm}, but the map is declared to have order {order}")]
    OrderMismatch { lcm: String, order: String },
    #[error("cone data forces a non-integral obstruction {0}; not realizable with e = 0")]
    NonIntegralObstruction(String),
    #[error("value {0} does not fit the requested machine integer")]
    Overflow(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, SeifertError>;

pub(crate) fn int<I: SeifertInt>(v: i64) -> I {
    <I as SeifertInt>::from_i64(v)
}

/// `lcm` of the multiplicities, `1` for an empty list.
pub(crate) fn lcm_all<'a, I: SeifertInt>(alphas: impl IntoIterator<Item = &'a I>) -> I {
    alphas.into_iter().fold(I::one(), |acc, a| acc.lcm(a))
}

/// The same manifold with the opposite orientation: `β_i ↦ α_i − β_i` and,
/// when closed, `b ↦ −b − m`. An involution.
pub fn reverse_orientation<I: SeifertInt>(m: &SeifertData<I>) -> SeifertData<I> {
    let fibers: Vec<_> = m.fibers().iter().map(FiberInvariant::reversed).collect();
    let obstruction = m.obstruction().map(|b| -b.clone() - int::<I>(m.fiber_count() as i64));
    SeifertData::from_sorted_parts(m.genus(), m.boundary_count(), obstruction, fibers)
}
