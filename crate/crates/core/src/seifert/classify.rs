use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::{int, Result, SeifertData, SeifertError};
use crate::scalar::SeifertInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    EvenType,
    OddType,
}

/// Sign of the orbifold Euler characteristic of the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

#[derive(Debug, Clone)]
pub struct Classification<I> {
    /// Rational Euler number; only for closed manifolds.
    pub euler_number: Option<Ratio<I>>,
    pub orbifold_chi: Ratio<I>,
    /// `lcm` of the multiplicities, the order of the periodic monodromy.
    pub lambda: I,
    pub parity: Parity,
    pub geometry: Geometry,
    /// Genus of the fiber surface; only for periodic bundles.
    pub fiber_genus: Option<I>,
    /// Number of boundary circles of the fiber surface; only for periodic bundles.
    pub fiber_boundary_circles: Option<I>,
    pub is_periodic_bundle: bool,
}

impl<I: SeifertInt> PartialEq for Classification<I> {
    fn eq(&self, other: &Self) -> bool {
        self.euler_number == other.euler_number
            && self.orbifold_chi == other.orbifold_chi
            && self.lambda == other.lambda
            && self.parity == other.parity
            && self.geometry == other.geometry
            && self.fiber_genus == other.fiber_genus
            && self.fiber_boundary_circles == other.fiber_boundary_circles
            && self.is_periodic_bundle == other.is_periodic_bundle
    }
}

impl<I: SeifertInt> Eq for Classification<I> {}

/// Computes `e`, `χ^orb`, `λ`, the odd/even type of the base orbifold group and,
/// for periodic bundles, the fiber surface via `χ(F) = λ · χ^orb(B)`.
pub fn classify<I: SeifertInt>(m: &SeifertData<I>) -> Result<Classification<I>> {
    let euler_number = m.euler_number();
    let chi = orbifold_chi(m);
    let lambda = m.lambda();
    let parity = parity(m, &lambda);
    let geometry = if chi.is_positive() {
        Geometry::Spherical
    } else if chi.is_zero() {
        Geometry::Euclidean
    } else {
        Geometry::Hyperbolic
    };
    let is_periodic_bundle = m.is_periodic_bundle();
    let (fiber_genus, fiber_boundary_circles) = if is_periodic_bundle {
        let (g, c) = fiber_surface(m, &lambda, &chi)?;
        (Some(g), Some(c))
    } else {
        (None, None)
    };
    Ok(Classification {
        euler_number,
        orbifold_chi: chi,
        lambda,
        parity,
        geometry,
        fiber_genus,
        fiber_boundary_circles,
        is_periodic_bundle,
    })
}

/// `χ^orb(B) = 2 − 2g − s + Σ (1/α_i − 1)`.
pub(crate) fn orbifold_chi<I: SeifertInt>(m: &SeifertData<I>) -> Ratio<I> {
    let base = int::<I>(2) - int::<I>(2) * int(m.genus() as i64) - int(m.boundary_count() as i64);
    m.fibers().iter().fold(Ratio::from_integer(base), |acc, f| {
        acc + Ratio::new(I::one(), f.alpha.clone()) - Ratio::from_integer(I::one())
    })
}

fn parity<I: SeifertInt>(m: &SeifertData<I>, lambda: &I) -> Parity {
    if !m.is_closed() || lambda.is_odd() {
        return Parity::EvenType;
    }
    let odd_quotients = m
        .fibers()
        .iter()
        .filter(|f| (lambda.clone() / f.alpha.clone()).is_odd())
        .count();
    if odd_quotients % 2 == 1 {
        Parity::OddType
    } else {
        Parity::EvenType
    }
}

/// Genus and boundary-circle count of the fiber of the order-`λ` bundle
/// structure.
///
/// On the boundary torus carrying the rotation data the fiber meets the torus
/// in `gcd(λ, Σ λβ_i/α_i)` circles; every other boundary torus is met by `λ`
/// parallel copies of the base boundary.
fn fiber_surface<I: SeifertInt>(m: &SeifertData<I>, lambda: &I, chi: &Ratio<I>) -> Result<(I, I)> {
    let circles = if m.is_closed() {
        I::zero()
    } else {
        let twist = m.fibers().iter().fold(I::zero(), |acc, f| {
            acc + lambda.clone() / f.alpha.clone() * f.beta.clone()
        });
        let rest = int::<I>(m.boundary_count() as i64 - 1) * lambda.clone();
        lambda.gcd(&twist) + rest
    };
    let euler_char = chi.clone() * Ratio::from_integer(lambda.clone());
    if !euler_char.is_integer() {
        return Err(SeifertError::Internal(format!(
            "lambda * chi_orb = {euler_char} is not an integer"
        )));
    }
    // χ(F) = 2 − 2g_F − c
    let twice_genus = int::<I>(2) - circles.clone() - euler_char.to_integer();
    if twice_genus.is_odd() || twice_genus.is_negative() {
        return Err(SeifertError::Internal(format!(
            "fiber surface with chi = {euler_char} and {circles} boundary circles has no genus"
        )));
    }
    Ok((twice_genus / int(2), circles))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sfs(b: i64, fibers: &[(i64, i64)]) -> SeifertData<i64> {
        SeifertData::closed(0, b, fibers.iter().copied()).unwrap()
    }

    #[test]
    fn euclidean_torus_bundle() {
        let c = classify(&sfs(-1, &[(2, 1), (4, 1), (4, 1)])).unwrap();
        assert_eq!(c.euler_number, Some(Ratio::from_integer(0)));
        assert_eq!(c.orbifold_chi, Ratio::from_integer(0));
        assert_eq!(c.lambda, 4);
        assert_eq!(c.geometry, Geometry::Euclidean);
        assert_eq!(c.fiber_genus, Some(1));
        assert!(c.is_periodic_bundle);
    }

    #[test]
    fn residue_seven_example() {
        let c = classify(&sfs(-1, &[(7, 1), (7, 2), (7, 4)])).unwrap();
        assert_eq!(c.euler_number, Some(Ratio::from_integer(0)));
        assert_eq!(c.orbifold_chi, Ratio::new(-4, 7));
        assert_eq!(c.lambda, 7);
        assert_eq!(c.geometry, Geometry::Hyperbolic);
        assert_eq!(c.parity, Parity::EvenType);
        assert_eq!(c.fiber_genus, Some(3));
        assert!(c.is_periodic_bundle);
    }

    #[test]
    fn bounded_knot_space() {
        let m = SeifertData::<i64>::bounded(0, 1, [(3, 1), (4, 1)]).unwrap();
        let c = classify(&m).unwrap();
        assert_eq!(c.euler_number, None);
        assert_eq!(c.orbifold_chi, Ratio::new(-5, 12));
        assert_eq!(c.lambda, 12);
        assert!(c.is_periodic_bundle);
        assert_eq!(c.fiber_genus, Some(3));
        assert_eq!(c.fiber_boundary_circles, Some(1));
    }

    #[test]
    fn nonzero_euler_is_not_a_bundle() {
        let c = classify(&sfs(0, &[(2, 1), (4, 1), (4, 1)])).unwrap();
        assert_eq!(c.euler_number, Some(Ratio::from_integer(-1)));
        assert!(!c.is_periodic_bundle);
        assert_eq!(c.fiber_genus, None);
    }

    #[test]
    fn odd_type_detection() {
        // λ = 2, λ/α = 1 for a single fiber: odd count.
        let c = classify(&sfs(0, &[(2, 1)])).unwrap();
        assert_eq!(c.parity, Parity::OddType);
        let c = classify(&sfs(-1, &[(2, 1), (2, 1)])).unwrap();
        assert_eq!(c.parity, Parity::EvenType);
        // Bounded manifolds are always even type.
        let m = SeifertData::<i64>::bounded(0, 1, [(2, 1)]).unwrap();
        assert_eq!(classify(&m).unwrap().parity, Parity::EvenType);
    }

    #[test]
    fn annulus_fiber_for_two_boundaries() {
        let m = SeifertData::<i64>::bounded(0, 2, []).unwrap();
        let c = classify(&m).unwrap();
        assert_eq!(c.fiber_genus, Some(0));
        assert_eq!(c.fiber_boundary_circles, Some(2));
    }
}
