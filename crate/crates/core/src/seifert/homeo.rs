use super::{power_monodromy, reverse_orientation, Result, SeifertData, SeifertError};
use crate::scalar::SeifertInt;

/// Homeomorphism test by comparison of classical invariants.
///
/// With `oriented` set, tests orientation-preserving equivalence; otherwise
/// `M` is also compared against the reversal of `N`. The manifolds with
/// non-unique fiberings are refused.
pub fn is_homeomorphic<I: SeifertInt>(m: &SeifertData<I>, n: &SeifertData<I>, oriented: bool) -> Result<bool> {
    for x in [m, n] {
        if let Some(kind) = x.exceptional_kind() {
            return Err(SeifertError::Exceptional(kind));
        }
    }
    if m == n {
        return Ok(true);
    }
    Ok(!oriented && *m == reverse_orientation(n))
}

/// Smallest `k ∈ 2..λ` coprime to `λ` for which `M_{φ^k}` is not homeomorphic
/// to `M_φ`, scanning every unit modulo `λ`.
pub fn find_distinguishing_k<I: SeifertInt>(m: &SeifertData<I>) -> Result<Option<I>> {
    m.require_periodic_bundle()?;
    let lambda = m.lambda();
    let mut k = I::one() + I::one();
    while k < lambda {
        if k.gcd(&lambda).is_one() {
            let power = power_monodromy(m, &k)?;
            if !is_homeomorphic(m, &power, false)? {
                return Ok(Some(k));
            }
        }
        k = k + I::one();
    }
    Ok(None)
}
