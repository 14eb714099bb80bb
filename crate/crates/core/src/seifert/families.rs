//! Named families: quadratic-residue manifolds, two-fiber knot spaces over the
//! disk, and the Lens spaces containing them.

use std::collections::BTreeSet;

use super::{int, FiberInvariant, Result, SeifertData, SeifertError};
use crate::scalar::SeifertInt;

/// Euler's totient by trial division.
pub fn totient<I: SeifertInt>(n: &I) -> I {
    let mut n = n.clone();
    let mut result = n.clone();
    let mut p = int::<I>(2);
    while p.clone() * p.clone() <= n {
        if n.is_multiple_of(&p) {
            while n.is_multiple_of(&p) {
                n = n / p.clone();
            }
            result = result.clone() - result / p.clone();
        }
        p = p + I::one();
    }
    if n > I::one() {
        result = result.clone() - result / n;
    }
    result
}

fn is_prime<I: SeifertInt>(p: &I) -> bool {
    if *p < int(2) {
        return false;
    }
    let mut d = int::<I>(2);
    while d.clone() * d.clone() <= *p {
        if p.is_multiple_of(&d) {
            return false;
        }
        d = d + I::one();
    }
    true
}

/// The closed manifold over `S²` whose fiber invariants are `β/p` for the
/// nonzero quadratic residues `β` mod `p`, with `b = −Σβ/p`.
pub fn residue_family<I: SeifertInt>(p: &I) -> Result<SeifertData<I>> {
    if *p < int(7) || !is_prime(p) {
        return Err(SeifertError::BadResiduePrime(p.to_string()));
    }
    let mut residues = BTreeSet::new();
    let mut x = I::one();
    while x < *p {
        residues.insert((x.clone() * x.clone()).modulo(p));
        x = x + I::one();
    }
    let sum = residues.iter().fold(I::zero(), |acc, r| acc + r.clone());
    if !sum.is_multiple_of(p) {
        return Err(SeifertError::Internal(format!(
            "residue sum {sum} is not divisible by {p}"
        )));
    }
    let b = -(sum / p.clone());
    let m = SeifertData::closed(0, b, residues.into_iter().map(|r| (p.clone(), r)))?;
    debug_assert!(m.is_periodic_bundle());
    Ok(m)
}

/// Unoriented representatives of `𝒞(α₁, α₂)`: manifolds over the disk with
/// two exceptional fibers of multiplicities `α₁, α₂`.
///
/// Each class `{(β₁, β₂), (α₁−β₁, α₂−β₂)}` is represented by its
/// lexicographically least canonical form.
pub fn family_enumerate<I: SeifertInt>(alpha1: &I, alpha2: &I) -> Result<Vec<SeifertData<I>>> {
    if *alpha1 < int(2) || *alpha2 < int(2) || !alpha1.gcd(alpha2).is_one() {
        return Err(SeifertError::BadFamily(alpha1.to_string(), alpha2.to_string()));
    }
    let units = |a: &I| {
        let mut out = Vec::new();
        let mut b = I::one();
        while b < *a {
            if b.gcd(a).is_one() {
                out.push(b.clone());
            }
            b = b + I::one();
        }
        out
    };
    let mut reps = BTreeSet::new();
    for b1 in units(alpha1) {
        for b2 in units(alpha2) {
            let mut pair = [
                FiberInvariant {
                    alpha: alpha1.clone(),
                    beta: b1.clone(),
                },
                FiberInvariant {
                    alpha: alpha2.clone(),
                    beta: b2.clone(),
                },
            ];
            pair.sort();
            let mut rev = [pair[0].reversed(), pair[1].reversed()];
            rev.sort();
            reps.insert(std::cmp::min(pair, rev));
        }
    }
    Ok(reps
        .into_iter()
        .map(|pair| SeifertData::from_sorted_parts(0, 1, None, pair.to_vec()))
        .collect())
}

/// The Lens space `L(p, q)` obtained by closing a two-fiber knot space with
/// obstruction `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LensInvariants<I> {
    pub p: I,
    /// Reduced into `0..p`; zero when `p <= 1`.
    pub q: I,
    /// Bézout witnesses `α₁γ₁ − β₁δ₁ = 1`, both non-negative and minimal.
    pub gamma1: I,
    pub delta1: I,
}

/// `p = |α₁β₂ + α₂β₁ + bα₁α₂|` and `q ≡ −(γ₁α₂ + δ₁α₂b) (mod p)`.
///
/// The `q` formula is applied exactly as written, including the `α₂` factor
/// on both terms; no correction is attempted.
pub fn lens_invariants<I: SeifertInt>(m: &SeifertData<I>, b: &I) -> Result<LensInvariants<I>> {
    if m.boundary_count() != 1 || m.fiber_count() != 2 || m.genus() != 0 {
        return Err(SeifertError::NotTwoFiberKnotSpace);
    }
    let (f1, f2) = (&m.fibers()[0], &m.fibers()[1]);
    let (a1, b1, a2, b2) = (&f1.alpha, &f1.beta, &f2.alpha, &f2.beta);
    let p = (a1.clone() * b2.clone() + a2.clone() * b1.clone() + b.clone() * a1.clone() * a2.clone()).abs();
    // smallest γ₁ >= 1 with α₁γ₁ ≡ 1 (mod β₁); then δ₁ = (α₁γ₁ − 1)/β₁ >= 0
    let mut gamma1 = I::one();
    while !(a1.clone() * gamma1.clone() - I::one()).is_multiple_of(b1) {
        gamma1 = gamma1 + I::one();
    }
    let delta1 = (a1.clone() * gamma1.clone() - I::one()) / b1.clone();
    let q = if p <= I::one() {
        I::zero()
    } else {
        (-(gamma1.clone() * a2.clone() + delta1.clone() * a2.clone() * b.clone())).modulo(&p)
    };
    Ok(LensInvariants { p, q, gamma1, delta1 })
}
