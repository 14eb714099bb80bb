use num_integer::Integer;
use proptest::prelude::*;
use sfs_core::seifert::*;
use sfs_core::{BigInt, Sfs, Sfs64};

/// Exact fraction with `i128` parts, reduced, positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Frac(i128, i128);

impl Frac {
    fn new(n: i128, d: i128) -> Self {
        let g = n.gcd(&d).max(1) * d.signum();
        Frac(n / g, d / g)
    }
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }
    fn mul_int(self, k: i128) -> Frac {
        Frac::new(self.0 * k, self.1)
    }
}

fn fiber_strategy() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=12)
        .prop_flat_map(|a| (Just(a), 1..a))
        .prop_filter("coprime", |(a, b)| a.gcd(b) == 1)
}

/// Random closed data with `e = 0`: the last fiber is solved so that
/// `Σβ/α` is an integer.
fn euler_zero_strategy() -> impl Strategy<Value = Sfs64> {
    (0u32..=2, prop::collection::vec(fiber_strategy(), 0..=4)).prop_filter_map(
        "needs a small closing fiber",
        |(g, mut fibers)| {
            let sum = fibers
                .iter()
                .fold(Frac(0, 1), |s, &(a, b)| s.add(Frac::new(b as i128, a as i128)));
            let frac = Frac::new(sum.0.rem_euclid(sum.1), sum.1);
            if frac.0 != 0 {
                if frac.1 > 12 {
                    return None;
                }
                fibers.push((frac.1 as i64, (frac.1 - frac.0) as i64));
            }
            let total = fibers
                .iter()
                .fold(Frac(0, 1), |s, &(a, b)| s.add(Frac::new(b as i128, a as i128)));
            assert_eq!(total.1, 1);
            Some(Sfs64::closed(g, -(total.0 as i64), fibers).unwrap())
        },
    )
}

fn any_strategy() -> impl Strategy<Value = Sfs64> {
    (
        0u32..=2,
        0u32..=2,
        -3i64..=3,
        prop::collection::vec(fiber_strategy(), 0..=5),
    )
        .prop_map(|(g, s, b, f)| Sfs64::new(g, s, (s == 0).then_some(b), f).unwrap())
}

fn bundle_strategy() -> impl Strategy<Value = Sfs64> {
    prop_oneof![
        euler_zero_strategy(),
        (0u32..=2, 1u32..=2, prop::collection::vec(fiber_strategy(), 0..=4))
            .prop_map(|(g, s, f)| Sfs64::bounded(g, s, f).unwrap()),
    ]
}

fn units(lambda: i64) -> Vec<i64> {
    (1..=lambda.max(1)).filter(|k| k.gcd(&lambda) == 1).collect()
}

fn to_big(m: &Sfs64) -> Sfs {
    Sfs::new(
        m.genus(),
        m.boundary_count(),
        m.obstruction().map(|&b| BigInt::from(b)),
        m.fibers().iter().map(|f| (BigInt::from(f.alpha), BigInt::from(f.beta))),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn reversal_is_an_involution(m in any_strategy()) {
        prop_assert_eq!(reverse_orientation(&reverse_orientation(&m)), m);
    }

    #[test]
    fn euler_zero_is_even_type(m in euler_zero_strategy()) {
        let c = classify(&m).unwrap();
        prop_assert_eq!(c.parity, Parity::EvenType);
        prop_assert!(c.is_periodic_bundle);
    }

    #[test]
    fn power_composition(m in bundle_strategy(), i in 0usize..64, j in 0usize..64) {
        let lambda = m.lambda();
        let us = units(lambda);
        let (k, k2) = (us[i % us.len()], us[j % us.len()]);
        let once = power_monodromy(&m, &k).unwrap();
        let twice = power_monodromy(&once, &k2).unwrap();
        let direct = power_monodromy(&m, &((k * k2).rem_euclid(lambda.max(1)).max(1))).unwrap();
        prop_assert_eq!(twice, direct);
        if once.is_closed() {
            prop_assert_eq!(once.euler_number().unwrap(), num_rational::Ratio::from_integer(0));
        }
    }

    #[test]
    fn power_matches_residue_scan(m in bundle_strategy(), i in 0usize..64) {
        let us = units(m.lambda());
        let k = us[i % us.len()];
        let p = power_monodromy(&m, &k).unwrap();
        let mut expected: Vec<(i64, i64)> = m
            .fibers()
            .iter()
            .map(|f| (f.alpha, (1..f.alpha).find(|&b| (k * b - f.beta).rem_euclid(f.alpha) == 0).unwrap()))
            .collect();
        expected.sort();
        let got: Vec<(i64, i64)> = p.fibers().iter().map(|f| (f.alpha, f.beta)).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn riemann_hurwitz(m in bundle_strategy()) {
        let c = classify(&m).unwrap();
        let lambda = m.lambda() as i128;
        let chi = m.fibers().iter().fold(
            Frac::new(2 - 2 * m.genus() as i128 - m.boundary_count() as i128, 1),
            |s, f| s.add(Frac::new(1, f.alpha as i128)).add(Frac(-1, 1)),
        );
        let fiber_chi = chi.mul_int(lambda);
        prop_assert_eq!(fiber_chi.1, 1, "λ·χ^orb must be an integer");
        let genus = c.fiber_genus.unwrap() as i128;
        let circles = c.fiber_boundary_circles.unwrap() as i128;
        prop_assert_eq!(2 - 2 * genus - circles, fiber_chi.0);
        prop_assert_eq!(c.orbifold_chi, num_rational::Ratio::new(chi.0 as i64, chi.1 as i64));
    }

    #[test]
    fn periodic_map_round_trip(m in bundle_strategy()) {
        let p = periodic_map_from_seifert(&m).unwrap();
        prop_assert_eq!(seifert_from_periodic_map(&p).unwrap(), m.clone());
        // rotation numbers are the inverses of the fiber invariants
        let mut inverted: Vec<(i64, i64)> = p
            .cone_points()
            .iter()
            .map(|c| (c.alpha, (1..c.alpha).find(|b| (c.q * b).rem_euclid(c.alpha) == 1).unwrap()))
            .collect();
        inverted.sort();
        let fibers: Vec<(i64, i64)> = m.fibers().iter().map(|f| (f.alpha, f.beta)).collect();
        prop_assert_eq!(inverted, fibers);
        prop_assert_eq!(*p.order(), m.lambda());
    }

    #[test]
    fn machine_and_big_integers_agree(m in any_strategy(), k in 1i64..40) {
        let big = to_big(&m);
        prop_assert_eq!(big.to_string(), m.to_string());
        prop_assert_eq!(reverse_orientation(&big).to_string(), reverse_orientation(&m).to_string());
        let (c, cb) = (classify(&m).unwrap(), classify(&big).unwrap());
        prop_assert_eq!(c.orbifold_chi.to_string(), cb.orbifold_chi.to_string());
        prop_assert_eq!(c.parity, cb.parity);
        if m.is_periodic_bundle() {
            let a = power_monodromy(&m, &k).map(|x| x.to_string()).ok();
            let b = power_monodromy(&big, &BigInt::from(k)).map(|x| x.to_string()).ok();
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn family_counts_match_totient() {
    for a1 in 2i64..=12 {
        for a2 in a1 + 1..=12 {
            if a1.gcd(&a2) != 1 {
                continue;
            }
            let phi = (1..a1 * a2).filter(|x| x.gcd(&(a1 * a2)) == 1).count();
            assert_eq!(family_enumerate(&a1, &a2).unwrap().len(), phi / 2, "({a1}, {a2})");
        }
    }
}

#[test]
fn family_matches_brute_force_classes() {
    for (a1, a2) in [(2i64, 3i64), (3, 4), (5, 7), (4, 9)] {
        let mut classes: Vec<Vec<(i64, i64)>> = Vec::new();
        for b1 in (1..a1).filter(|b| b.gcd(&a1) == 1) {
            for b2 in (1..a2).filter(|b| b.gcd(&a2) == 1) {
                let mut m = vec![(a1, b1), (a2, b2)];
                let mut r = vec![(a1, a1 - b1), (a2, a2 - b2)];
                m.sort();
                r.sort();
                let rep = m.min(r);
                if !classes.contains(&rep) {
                    classes.push(rep);
                }
            }
        }
        classes.sort();
        let got: Vec<Vec<(i64, i64)>> = family_enumerate(&a1, &a2)
            .unwrap()
            .iter()
            .map(|m| m.fibers().iter().map(|f| (f.alpha, f.beta)).collect())
            .collect();
        assert_eq!(got, classes);
    }
}

#[test]
fn residue_families_are_rigid() {
    for p in [7i64, 11, 19, 23] {
        let m = residue_family(&p).unwrap();
        let squares: Vec<i64> = {
            let mut s: Vec<i64> = (1..p).map(|x| x * x % p).collect();
            s.sort();
            s.dedup();
            s
        };
        let betas: Vec<i64> = m.fibers().iter().map(|f| f.beta).collect();
        assert_eq!(betas, squares);
        assert_eq!(*m.obstruction().unwrap(), -squares.iter().sum::<i64>() / p);
        assert_eq!(find_distinguishing_k(&m).unwrap(), None);
        for k in 1..p {
            let q = power_monodromy(&m, &k).unwrap();
            assert!(is_homeomorphic(&m, &q, false).unwrap(), "p = {p}, k = {k}");
        }
    }
    // p ≡ 1 mod 4 makes -1 a square; the residue set is reversal-symmetric
    assert!(residue_family(&13i64).is_ok());
    assert!(residue_family(&5i64).is_err());
    assert!(residue_family(&9i64).is_err());
}

#[test]
fn distinguishing_k_exists_under_rigidity_hypotheses() {
    // α₁ ∉ {2,3,4,6}, α₁ differs from the other multiplicities, χ^orb < 0
    for (b, fibers) in [
        (-1, vec![(5, 1), (5, 1), (5, 3)]),
        (-1, vec![(5, 2), (10, 3), (2, 1)]),
        (-2, vec![(7, 3), (7, 4), (3, 1), (3, 2), (2, 1)]),
    ] {
        let m = Sfs64::closed(0, b, fibers).unwrap();
        if m.euler_number().unwrap() != num_rational::Ratio::from_integer(0) {
            continue;
        }
        assert!(find_distinguishing_k(&m).unwrap().is_some(), "{m}");
    }
    let m = Sfs64::bounded(0, 1, [(5, 1), (3, 1)]).unwrap();
    assert!(find_distinguishing_k(&m).unwrap().is_some());
}

#[test]
fn lens_formula_by_direct_evaluation() {
    for (a1, a2) in [(2i64, 3i64), (3, 5), (4, 7)] {
        for m in family_enumerate(&a1, &a2).unwrap() {
            let f = m.fibers();
            let (a1, b1, a2, b2) = (f[0].alpha, f[0].beta, f[1].alpha, f[1].beta);
            for b in -3i64..=3 {
                let l = lens_invariants(&m, &b).unwrap();
                let p = (a1 * b2 + a2 * b1 + b * a1 * a2).abs();
                let gamma = (1..).find(|g| (a1 * g - 1) % b1 == 0).unwrap();
                let delta = (a1 * gamma - 1) / b1;
                let q = if p <= 1 {
                    0
                } else {
                    (-(gamma * a2 + delta * a2 * b)).rem_euclid(p)
                };
                assert_eq!((l.p, l.q, l.gamma1, l.delta1), (p, q, gamma, delta), "{m} b={b}");
            }
        }
    }
}
