//! Seifert fibered space invariants, fundamental-group presentations with
//! peripheral marks, and exhaustive enumeration of finite quotients.
//!
//! The Seifert arithmetic is generic over an exact integer type (see
//! [`SeifertInt`]); the aliases at the crate root fix it to [`BigInt`] or
//! `i64`. The group-theoretic machinery in [`fp`] and [`quotient`] is purely
//! combinatorial.

pub mod fp;
pub mod quotient;
pub mod scalar;
pub mod seifert;

pub use num_bigint::BigInt;
pub use num_rational::Ratio;
pub use scalar::SeifertInt;

/// Arbitrary-precision Seifert data; the default used by the CLI.
pub type Sfs = seifert::SeifertData<BigInt>;
/// Machine-word Seifert data, handy in tests and tight loops.
pub type Sfs64 = seifert::SeifertData<i64>;
pub type Classification = seifert::Classification<BigInt>;
pub type Classification64 = seifert::Classification<i64>;
pub type PeriodicMap = seifert::PeriodicMapData<BigInt>;
pub type PeriodicMap64 = seifert::PeriodicMapData<i64>;
pub type Lens = seifert::LensInvariants<BigInt>;
pub type Lens64 = seifert::LensInvariants<i64>;
/// Exact rational over [`BigInt`].
pub type Rational = Ratio<BigInt>;
