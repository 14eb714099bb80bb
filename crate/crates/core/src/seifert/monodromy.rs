//! Monodromy powers and the translation between Seifert invariants and
//! periodic surface maps.

use num_rational::Ratio;

use super::{int, lcm_all, FiberInvariant, Result, SeifertData, SeifertError};
use crate::scalar::SeifertInt;

/// Replaces the monodromy `φ` of a periodic bundle by `φ^k`.
///
/// Each `β_i` becomes the unique `β*_i ∈ (0, α_i)` with `k β*_i ≡ β_i (mod α_i)`.
/// For closed manifolds the new obstruction is `−Σ β*_i/α_i`, which is always
/// integral because `M_{φ^k}` is again finitely covered by a product.
pub fn power_monodromy<I: SeifertInt>(m: &SeifertData<I>, k: &I) -> Result<SeifertData<I>> {
    m.require_periodic_bundle()?;
    let lambda = m.lambda();
    if !k.gcd(&lambda).is_one() {
        return Err(SeifertError::NotCoprime {
            k: k.to_string(),
            lambda: lambda.to_string(),
        });
    }
    let fibers = m
        .fibers()
        .iter()
        .map(|f| {
            let k_inv = k
                .inverse_mod(&f.alpha)
                .ok_or_else(|| SeifertError::Internal(format!("{k} not invertible mod {}", f.alpha)))?;
            Ok(FiberInvariant {
                alpha: f.alpha.clone(),
                beta: (f.beta.clone() * k_inv).modulo(&f.alpha),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let obstruction = if m.is_closed() {
        Some(
            forced_obstruction(&fibers)
                .ok_or_else(|| SeifertError::Internal("power of a periodic monodromy has e != 0".into()))?,
        )
    } else {
        None
    };
    Ok(SeifertData::from_sorted_parts(
        m.genus(),
        m.boundary_count(),
        obstruction,
        fibers,
    ))
}

/// `b = −Σ β_i/α_i` when that is an integer.
fn forced_obstruction<I: SeifertInt>(fibers: &[FiberInvariant<I>]) -> Option<I> {
    let sum = fibers
        .iter()
        .fold(Ratio::from_integer(I::zero()), |acc, f| acc + f.as_ratio());
    sum.is_integer().then(|| -sum.to_integer())
}

/// A cone point of the quotient orbifold of a periodic map: the stabilizer
/// order `alpha` and rotation number `q` (the generator of the stabilizer
/// rotates by `2πq/α`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConePoint<I> {
    pub alpha: I,
    pub q: I,
}

/// Data of an orientation-preserving periodic homeomorphism of a compact
/// surface, read off its quotient orbifold.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicMapData<I> {
    order: I,
    quotient_genus: u32,
    quotient_boundary_count: u32,
    cone_points: Vec<ConePoint<I>>,
}

impl<I: SeifertInt> PeriodicMapData<I> {
    pub fn new(
        order: I,
        quotient_genus: u32,
        quotient_boundary_count: u32,
        cone_points: impl IntoIterator<Item = (I, I)>,
    ) -> Result<Self> {
        let mut cone_points: Vec<_> = cone_points
            .into_iter()
            .map(|(alpha, q)| ConePoint { alpha, q })
            .collect();
        let bad = |c: &ConePoint<I>| SeifertError::BadConePoint {
            alpha: c.alpha.to_string(),
            q: c.q.to_string(),
            order: order.to_string(),
        };
        if order < I::one() {
            return Err(SeifertError::OrderMismatch {
                lcm: "-".into(),
                order: order.to_string(),
            });
        }
        for c in &cone_points {
            let ok = c.alpha >= int(2)
                && c.q > I::zero()
                && c.q < c.alpha
                && c.q.gcd(&c.alpha).is_one()
                && order.is_multiple_of(&c.alpha);
            if !ok {
                return Err(bad(c));
            }
        }
        if !cone_points.is_empty() {
            let lcm = lcm_all(cone_points.iter().map(|c| &c.alpha));
            if lcm != order {
                return Err(SeifertError::OrderMismatch {
                    lcm: lcm.to_string(),
                    order: order.to_string(),
                });
            }
        }
        cone_points.sort();
        Ok(Self {
            order,
            quotient_genus,
            quotient_boundary_count,
            cone_points,
        })
    }

    pub fn order(&self) -> &I {
        &self.order
    }

    pub fn quotient_genus(&self) -> u32 {
        self.quotient_genus
    }

    pub fn quotient_boundary_count(&self) -> u32 {
        self.quotient_boundary_count
    }

    pub fn cone_points(&self) -> &[ConePoint<I>] {
        &self.cone_points
    }
}

/// The periodic monodromy of a periodic bundle: order `λ` and one cone point
/// `(α_i, q_i)` with `q_i β_i ≡ 1 (mod α_i)` per exceptional fiber.
pub fn periodic_map_from_seifert<I: SeifertInt>(m: &SeifertData<I>) -> Result<PeriodicMapData<I>> {
    m.require_periodic_bundle()?;
    let cones = m
        .fibers()
        .iter()
        .map(|f| {
            let q = f
                .beta
                .inverse_mod(&f.alpha)
                .ok_or_else(|| SeifertError::Internal(format!("{f} has no inverse")))?;
            Ok((f.alpha.clone(), q))
        })
        .collect::<Result<Vec<_>>>()?;
    PeriodicMapData::new(m.lambda(), m.genus(), m.boundary_count(), cones)
}

/// Inverse of [`periodic_map_from_seifert`]. For a closed fiber the obstruction
/// is forced by `e = 0`.
pub fn seifert_from_periodic_map<I: SeifertInt>(p: &PeriodicMapData<I>) -> Result<SeifertData<I>> {
    let fibers = p
        .cone_points()
        .iter()
        .map(|c| {
            let beta = c.q.inverse_mod(&c.alpha).ok_or_else(|| SeifertError::BadConePoint {
                alpha: c.alpha.to_string(),
                q: c.q.to_string(),
                order: p.order().to_string(),
            })?;
            FiberInvariant::new(c.alpha.clone(), beta)
        })
        .collect::<Result<Vec<_>>>()?;
    let obstruction = if p.quotient_boundary_count() == 0 {
        match forced_obstruction(&fibers) {
            Some(b) => Some(b),
            None => {
                let sum = fibers
                    .iter()
                    .fold(Ratio::from_integer(I::zero()), |acc, f| acc + f.as_ratio());
                return Err(SeifertError::NonIntegralObstruction((-sum).to_string()));
            }
        }
    } else {
        None
    };
    Ok(SeifertData::from_sorted_parts(
        p.quotient_genus(),
        p.quotient_boundary_count(),
        obstruction,
        fibers,
    ))
}

/// How the fiber surface of the order-`λ` bundle structure meets one torus of
/// the Dehn-filling decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryCurves<I> {
    /// `0` for the distinguished torus `T₀`, `i` for the filling torus of the
    /// `i`-th exceptional fiber.
    pub torus_index: usize,
    /// Number of parallel curves.
    pub curve_count: I,
    /// Homology class of each curve as `(coefficient of x_i, coefficient of t)`.
    pub class: (I, I),
}

/// Curves of `F ∩ T_i`: `λ/α_i` copies of `α_i[x_i] + β_i[t]` on each filling
/// torus and, when closed, `λ` copies of `[x₀] + b[t]` on `T₀`.
///
/// The `T₀` class is stored with the positive `[x₀]` coefficient; the curve
/// arises with the opposite orientation `−[x₀] − b[t]` in the cut-and-reglue
/// construction.
pub fn fiber_boundary_data<I: SeifertInt>(m: &SeifertData<I>) -> Result<Vec<BoundaryCurves<I>>> {
    m.require_periodic_bundle()?;
    let lambda = m.lambda();
    let mut out: Vec<_> = m
        .fibers()
        .iter()
        .enumerate()
        .map(|(i, f)| BoundaryCurves {
            torus_index: i + 1,
            curve_count: lambda.clone() / f.alpha.clone(),
            class: (f.alpha.clone(), f.beta.clone()),
        })
        .collect();
    if let Some(b) = m.obstruction() {
        out.push(BoundaryCurves {
            torus_index: 0,
            curve_count: lambda,
            class: (I::one(), b.clone()),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed(b: i64, fibers: &[(i64, i64)]) -> SeifertData<i64> {
        SeifertData::closed(0, b, fibers.iter().copied()).unwrap()
    }

    fn bounded(fibers: &[(i64, i64)]) -> SeifertData<i64> {
        SeifertData::bounded(0, 1, fibers.iter().copied()).unwrap()
    }

    /// β* by scanning residues rather than inverting.
    fn beta_star_scan(alpha: i64, beta: i64, k: i64) -> i64 {
        (1..alpha).find(|b| (k * b - beta).rem_euclid(alpha) == 0).unwrap()
    }

    #[test]
    fn power_two_of_five_five_five() {
        let m = closed(-1, &[(5, 1), (5, 1), (5, 3)]);
        let p = power_monodromy(&m, &2).unwrap();
        assert_eq!(p, closed(-2, &[(5, 3), (5, 3), (5, 4)]));
        for f in m.fibers() {
            let star = beta_star_scan(f.alpha, f.beta, 2);
            assert!(p.fibers().iter().any(|g| g.alpha == f.alpha && g.beta == star));
        }
    }

    #[test]
    fn power_one_is_identity() {
        let m = closed(-1, &[(5, 1), (5, 1), (5, 3)]);
        assert_eq!(power_monodromy(&m, &1).unwrap(), m);
        let n = bounded(&[(3, 1), (4, 1)]);
        assert_eq!(power_monodromy(&n, &1).unwrap(), n);
    }

    #[test]
    fn power_seven_bounded() {
        let n = bounded(&[(3, 1), (4, 1)]);
        assert_eq!(power_monodromy(&n, &7).unwrap(), bounded(&[(3, 1), (4, 3)]));
        assert_eq!(beta_star_scan(4, 1, 7), 3);
        assert_eq!(beta_star_scan(3, 1, 7), 1);
    }

    #[test]
    fn power_rejects_non_units_and_non_bundles() {
        let n = bounded(&[(3, 1), (4, 1)]);
        assert!(matches!(power_monodromy(&n, &2), Err(SeifertError::NotCoprime { .. })));
        let m = closed(0, &[(5, 1), (5, 1), (5, 3)]);
        assert!(matches!(
            power_monodromy(&m, &2),
            Err(SeifertError::NotPeriodicBundle { .. })
        ));
    }

    #[test]
    fn periodic_map_examples() {
        let p = periodic_map_from_seifert(&closed(-1, &[(5, 1), (5, 1), (5, 3)])).unwrap();
        assert_eq!(*p.order(), 5);
        let cones: Vec<_> = p.cone_points().iter().map(|c| (c.alpha, c.q)).collect();
        assert_eq!(cones, vec![(5, 1), (5, 1), (5, 2)]);

        let p = periodic_map_from_seifert(&closed(-1, &[(2, 1), (4, 1), (4, 1)])).unwrap();
        assert_eq!(*p.order(), 4);
        let cones: Vec<_> = p.cone_points().iter().map(|c| (c.alpha, c.q)).collect();
        assert_eq!(cones, vec![(2, 1), (4, 1), (4, 1)]);

        let p = periodic_map_from_seifert(&bounded(&[(3, 1), (4, 1)])).unwrap();
        assert_eq!(*p.order(), 12);
        assert_eq!(p.quotient_boundary_count(), 1);
        let cones: Vec<_> = p.cone_points().iter().map(|c| (c.alpha, c.q)).collect();
        assert_eq!(cones, vec![(3, 1), (4, 1)]);
    }

    #[test]
    fn seifert_from_periodic_examples() {
        let p = PeriodicMapData::new(5i64, 0, 0, [(5, 1), (5, 1), (5, 2)]).unwrap();
        assert_eq!(
            seifert_from_periodic_map(&p).unwrap(),
            closed(-1, &[(5, 1), (5, 1), (5, 3)])
        );
        let p = PeriodicMapData::new(12i64, 0, 1, [(3, 1), (4, 1)]).unwrap();
        assert_eq!(seifert_from_periodic_map(&p).unwrap(), bounded(&[(3, 1), (4, 1)]));
        let p = PeriodicMapData::new(5i64, 0, 0, [(5, 1), (5, 1)]).unwrap();
        assert_eq!(
            seifert_from_periodic_map(&p),
            Err(SeifertError::NonIntegralObstruction("-2/5".into()))
        );
    }

    #[test]
    fn periodic_map_validation() {
        assert!(PeriodicMapData::new(6i64, 0, 0, [(4, 1)]).is_err());
        assert!(PeriodicMapData::new(12i64, 0, 0, [(3, 1), (3, 2)]).is_err());
        assert!(PeriodicMapData::new(3i64, 0, 0, [(3, 3)]).is_err());
    }

    #[test]
    fn boundary_curves() {
        let d = fiber_boundary_data(&closed(-1, &[(2, 1), (4, 1), (4, 1)])).unwrap();
        let flat: Vec<_> = d.iter().map(|c| (c.torus_index, c.curve_count, c.class)).collect();
        assert_eq!(
            flat,
            vec![(1, 2, (2, 1)), (2, 1, (4, 1)), (3, 1, (4, 1)), (0, 4, (1, -1))]
        );
        let d = fiber_boundary_data(&closed(-1, &[(5, 1), (5, 1), (5, 3)])).unwrap();
        let counts: Vec<_> = d.iter().map(|c| c.curve_count).collect();
        assert_eq!(counts, vec![1, 1, 1, 5]);
        let d = fiber_boundary_data(&bounded(&[(3, 1), (4, 1)])).unwrap();
        let flat: Vec<_> = d.iter().map(|c| (c.torus_index, c.curve_count, c.class)).collect();
        assert_eq!(flat, vec![(1, 4, (3, 1)), (2, 3, (4, 1))]);
    }
}
