use std::fmt;

use num_rational::Ratio;

use super::{int, lcm_all, Result, SeifertError};
use crate::scalar::SeifertInt;

/// A normalized exceptional-fiber invariant `β/α`.
///
/// Field order gives the canonical lexicographic `(α, β)` ordering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiberInvariant<I> {
    pub alpha: I,
    pub beta: I,
}

impl<I: SeifertInt> FiberInvariant<I> {
    pub fn new(alpha: I, beta: I) -> Result<Self> {
        let ok = alpha >= int(2) && beta > I::zero() && beta < alpha && alpha.gcd(&beta).is_one();
        if !ok {
            return Err(SeifertError::NotNormalized {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
            });
        }
        Ok(Self { alpha, beta })
    }

    /// `(α − β)/α`, the invariant seen from the opposite orientation.
    pub fn reversed(&self) -> Self {
        Self {
            alpha: self.alpha.clone(),
            beta: self.alpha.clone() - self.beta.clone(),
        }
    }

    pub fn as_ratio(&self) -> Ratio<I> {
        Ratio::new(self.beta.clone(), self.alpha.clone())
    }
}

impl<I: fmt::Display> fmt::Display for FiberInvariant<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

/// The three manifolds whose Seifert fibering over an orientable base is not
/// unique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalManifold {
    /// `S² × S¹`
    SphereTimesCircle,
    /// `B² × S¹`
    SolidTorus,
    /// `S¹ × S¹ × I`
    ThickenedTorus,
}

impl fmt::Display for ExceptionalManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionalManifold::SphereTimesCircle => "S2 x S1",
            ExceptionalManifold::SolidTorus => "B2 x S1",
            ExceptionalManifold::ThickenedTorus => "S1 x S1 x I",
        })
    }
}

/// Classical Seifert invariants of an oriented Seifert fibered space over an
/// oriented base.
///
/// Construction validates and sorts; once built the value is always in
/// canonical form, so derived equality is oriented fiber-preserving
/// equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData<I> {
    genus: u32,
    boundary_count: u32,
    obstruction: Option<I>,
    fibers: Vec<FiberInvariant<I>>,
}

impl<I: SeifertInt> SeifertData<I> {
    /// Builds validated data. `obstruction` must be present exactly when
    /// `boundary_count == 0`; fibers are given as `(α, β)` pairs in any order.
    pub fn new(
        genus: u32,
        boundary_count: u32,
        obstruction: Option<I>,
        fibers: impl IntoIterator<Item = (I, I)>,
    ) -> Result<Self> {
        if obstruction.is_some() != (boundary_count == 0) {
            return Err(SeifertError::ObstructionMismatch { boundary_count });
        }
        let mut fibers = fibers
            .into_iter()
            .map(|(a, b)| FiberInvariant::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        fibers.sort();
        Ok(Self {
            genus,
            boundary_count,
            obstruction,
            fibers,
        })
    }

    /// Closed manifold `(g, 0, b; fibers)`.
    pub fn closed(genus: u32, b: I, fibers: impl IntoIterator<Item = (I, I)>) -> Result<Self> {
        Self::new(genus, 0, Some(b), fibers)
    }

    /// Bounded manifold `(g, s; fibers)` with `s > 0`.
    pub fn bounded(genus: u32, boundary_count: u32, fibers: impl IntoIterator<Item = (I, I)>) -> Result<Self> {
        if boundary_count == 0 {
            return Err(SeifertError::ObstructionMismatch { boundary_count });
        }
        Self::new(genus, boundary_count, None, fibers)
    }

    pub(crate) fn from_sorted_parts(
        genus: u32,
        boundary_count: u32,
        obstruction: Option<I>,
        mut fibers: Vec<FiberInvariant<I>>,
    ) -> Self {
        fibers.sort();
        Self {
            genus,
            boundary_count,
            obstruction,
            fibers,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary_count(&self) -> u32 {
        self.boundary_count
    }

    pub fn obstruction(&self) -> Option<&I> {
        self.obstruction.as_ref()
    }

    pub fn fibers(&self) -> &[FiberInvariant<I>] {
        &self.fibers
    }

    /// Number of exceptional fibers `m`.
    pub fn fiber_count(&self) -> usize {
        self.fibers.len()
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_count == 0
    }

    /// `Σ β_i/α_i`.
    pub fn fiber_sum(&self) -> Ratio<I> {
        self.fibers
            .iter()
            .fold(Ratio::from_integer(I::zero()), |acc, f| acc + f.as_ratio())
    }

    /// Rational Euler number `e = −(b + Σ β_i/α_i)`; `None` when bounded.
    pub fn euler_number(&self) -> Option<Ratio<I>> {
        let b = self.obstruction.as_ref()?;
        Some(-(Ratio::from_integer(b.clone()) + self.fiber_sum()))
    }

    /// `lcm(α₁, …, αₘ)`, or 1 without exceptional fibers.
    pub fn lambda(&self) -> I {
        lcm_all(self.fibers.iter().map(|f| &f.alpha))
    }

    /// A surface bundle with periodic monodromy: bounded, or closed with `e = 0`.
    pub fn is_periodic_bundle(&self) -> bool {
        match self.euler_number() {
            None => true,
            Some(e) => e.is_integer() && e.to_integer().is_zero(),
        }
    }

    pub(crate) fn require_periodic_bundle(&self) -> Result<()> {
        if self.is_periodic_bundle() {
            Ok(())
        } else {
            Err(SeifertError::NotPeriodicBundle {
                euler: self.euler_number().map(|e| e.to_string()).unwrap_or_default(),
            })
        }
    }

    /// Flags the manifolds with non-unique Seifert fiberings.
    pub fn exceptional_kind(&self) -> Option<ExceptionalManifold> {
        if self.genus != 0 {
            return None;
        }
        let m = self.fibers.len();
        match self.boundary_count {
            0 if m <= 2 && self.is_periodic_bundle() => Some(ExceptionalManifold::SphereTimesCircle),
            1 if m <= 1 => Some(ExceptionalManifold::SolidTorus),
            2 if m == 0 => Some(ExceptionalManifold::ThickenedTorus),
            _ => None,
        }
    }
}

/// Canonical text form `SFS(g=<g>, s=<s>[, b=<b>]; β/α, ...)`.
impl<I: fmt::Display> fmt::Display for SeifertData<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SFS(g={}, s={}", self.genus, self.boundary_count)?;
        if let Some(b) = &self.obstruction {
            write!(f, ", b={b}")?;
        }
        f.write_str(";")?;
        for (i, fib) in self.fibers.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            write!(f, "{fib}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unnormalized_fibers() {
        assert!(SeifertData::<i64>::closed(0, -1, [(5, 5)]).is_err());
        assert!(SeifertData::<i64>::closed(0, -1, [(4, 2)]).is_err());
        assert!(SeifertData::<i64>::closed(0, -1, [(1, 0)]).is_err());
        assert!(SeifertData::<i64>::closed(0, -1, [(5, -1)]).is_err());
        assert!(SeifertData::<i64>::closed(0, -1, [(5, 6)]).is_err());
    }

    #[test]
    fn obstruction_presence_tracks_boundary() {
        assert!(SeifertData::<i64>::new(0, 0, None, []).is_err());
        assert!(SeifertData::<i64>::new(0, 1, Some(0), []).is_err());
        assert!(SeifertData::<i64>::new(0, 1, None, []).is_ok());
    }

    #[test]
    fn canonical_order_and_display() {
        let m = SeifertData::<i64>::closed(0, -1, [(5, 3), (5, 1), (5, 1)]).unwrap();
        assert_eq!(m.to_string(), "SFS(g=0, s=0, b=-1; 1/5, 1/5, 3/5)");
        let n = SeifertData::<i64>::bounded(2, 1, []).unwrap();
        assert_eq!(n.to_string(), "SFS(g=2, s=1;)");
    }

    #[test]
    fn euler_number_and_bundle_predicate() {
        let m = SeifertData::<i64>::closed(0, -1, [(2, 1), (4, 1), (4, 1)]).unwrap();
        assert_eq!(m.euler_number(), Some(Ratio::from_integer(0)));
        assert!(m.is_periodic_bundle());
        let n = SeifertData::<i64>::closed(0, 0, [(2, 1), (4, 1), (4, 1)]).unwrap();
        assert_eq!(n.euler_number(), Some(Ratio::from_integer(-1)));
        assert!(!n.is_periodic_bundle());
    }

    #[test]
    fn exceptional_manifolds() {
        let s2s1 = SeifertData::<i64>::closed(0, -1, [(5, 2), (5, 3)]).unwrap();
        assert_eq!(s2s1.exceptional_kind(), Some(ExceptionalManifold::SphereTimesCircle));
        let s2s1b = SeifertData::<i64>::closed(0, 0, []).unwrap();
        assert_eq!(s2s1b.exceptional_kind(), Some(ExceptionalManifold::SphereTimesCircle));
        let lens = SeifertData::<i64>::closed(0, 0, [(5, 2)]).unwrap();
        assert_eq!(lens.exceptional_kind(), None);
        let solid = SeifertData::<i64>::bounded(0, 1, [(3, 1)]).unwrap();
        assert_eq!(solid.exceptional_kind(), Some(ExceptionalManifold::SolidTorus));
        let thick = SeifertData::<i64>::bounded(0, 2, []).unwrap();
        assert_eq!(thick.exceptional_kind(), Some(ExceptionalManifold::ThickenedTorus));
        let knot = SeifertData::<i64>::bounded(0, 1, [(3, 1), (4, 1)]).unwrap();
        assert_eq!(knot.exceptional_kind(), None);
    }
}
