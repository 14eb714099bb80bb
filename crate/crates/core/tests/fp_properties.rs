use num_integer::Integer;
use proptest::prelude::*;
use sfs_core::fp::*;
use sfs_core::Sfs64;

fn arb_word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    let r = rank as i32;
    prop::collection::vec(prop_oneof![1..=r, -r..=-1], 0..=max_len).prop_map(Word::from_letters)
}

/// Exact determinant by fraction-free elimination.
fn determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn order_of_permutation(p: &[usize]) -> u64 {
    let mut l = 1u64;
    for start in 0..p.len() {
        let (mut x, mut len) = (p[start], 1u64);
        while x != start {
            x = p[x];
            len += 1;
        }
        l = l.lcm(&len);
    }
    l
}

fn permutation_automorphism(fiber: &Presentation, perm: &[usize]) -> FreeAutomorphism {
    let images = perm.iter().map(|&i| Word::gen(i)).collect();
    FreeAutomorphism::periodic(fiber, images, order_of_permutation(perm), Word::empty()).unwrap()
}

fn fiber_strategy() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=9)
        .prop_flat_map(|a| (Just(a), 1..a))
        .prop_filter("coprime", |(a, b)| a.gcd(b) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn presentation_text_round_trips(rels in prop::collection::vec(arb_word(3, 8), 0..4)) {
        let rels: Vec<Word> = rels.into_iter().filter(|w| !w.is_empty()).collect();
        let p = Presentation::new(vec!["a".into(), "b".into(), "c".into()], rels).unwrap();
        let q = Presentation::parse(&p.to_string()).unwrap();
        prop_assert_eq!(q.to_string(), p.to_string());
        prop_assert_eq!(abelian_invariants(&q), abelian_invariants(&p));
    }

    #[test]
    fn smith_diagonal_product_is_determinant(m in prop::collection::vec(prop::collection::vec(-6i128..=6, 3), 3)) {
        let det = determinant(m.clone()).abs();
        let d = smith_diagonal(m, 3);
        let product: i128 = if d.len() < 3 { 0 } else { d.iter().product::<i128>().abs() };
        prop_assert_eq!(product, det);
        for pair in d.windows(2) {
            prop_assert!(pair[0] != 0 && pair[1] % pair[0] == 0);
        }
    }

    #[test]
    fn closed_sphere_base_homology_order(b in -3i64..=3, fibers in prop::collection::vec(fiber_strategy(), 0..=4)) {
        // |H1| = |b·Πα + Σ βᵢ Π_{j≠i} αⱼ|, infinite exactly when e = 0
        let m = Sfs64::closed(0, b, fibers.clone()).unwrap();
        let h = abelian_invariants(&presentation_sfs(&m).unwrap());
        let prod: i64 = fibers.iter().map(|f| f.0).product();
        let numerator = b * prod + fibers.iter().map(|&(a, beta)| beta * prod / a).sum::<i64>();
        if numerator == 0 {
            prop_assert_eq!(h.free_rank, 1);
        } else {
            prop_assert_eq!(h.order(), Some(numerator.unsigned_abs()));
        }
    }

    #[test]
    fn identity_semidirect_is_direct_product(rels in prop::collection::vec(arb_word(2, 6), 0..3)) {
        let p = Presentation::new(vec!["a".into(), "b".into()], rels).unwrap();
        let semi = build_semidirect(&p, &[Word::gen(0), Word::gen(1)]).unwrap();
        prop_assert_eq!(abelian_invariants(&semi), abelian_invariants(&direct_with_z(&p)));
    }

    #[test]
    fn normal_form_ignores_inserted_relators(
        perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
        w in arb_word(6, 12),
        at in 0usize..13,
        which in 0usize..6,
    ) {
        let fiber = Presentation::free(&["a", "b", "c", "d"]);
        let torus = MappingTorus::new(&fiber, permutation_automorphism(&fiber, &perm), true).unwrap();
        let rels = torus.presentation().relators();
        let r = &rels[which % rels.len()];
        let at = at.min(w.len());
        let padded = Word::from_letters(
            w.letters()[..at].iter().chain(r.letters()).chain(&w.letters()[at..]).copied(),
        );
        prop_assert_eq!(torus.normal_form(&padded).unwrap(), torus.normal_form(&w).unwrap());
        prop_assert!(torus.normal_form(&(w.clone() * &w.inverse())).unwrap().is_identity());
    }

    #[test]
    fn stabilization_for_permutations(perm in Just(vec![0usize, 1, 2, 3, 4]).prop_shuffle(), k in 1i64..30) {
        let fiber = Presentation::free(&["a", "b", "c", "d", "e"]);
        let psi = permutation_automorphism(&fiber, &perm);
        let n = psi.order() as i64;
        let result = stabilization_iso(&fiber, &psi, k);
        if k.gcd(&n) == 1 {
            let iso = result.unwrap();
            prop_assert_eq!(iso.basis.determinant(), 1);
            prop_assert_eq!(
                abelian_invariants(iso.source.presentation()),
                abelian_invariants(iso.target.presentation())
            );
        } else {
            let is_coprime_error = matches!(result, Err(FpError::NotCoprime { .. }));
            prop_assert!(is_coprime_error);
        }
    }
}

#[test]
fn stabilization_on_surface_rotation() {
    // rotation of the genus-2 surface by a half turn swapping the handles
    let fiber = surface_group(2);
    let images = vec![Word::gen(2), Word::gen(3), Word::gen(0), Word::gen(1)];
    let psi = FreeAutomorphism::periodic(&fiber, images, 2, Word::empty()).unwrap();
    for k in [1, 3, 5, -1] {
        let iso = stabilization_iso(&fiber, &psi, k).unwrap();
        assert_eq!(
            abelian_invariants(iso.source.presentation()),
            abelian_invariants(iso.target.presentation())
        );
    }
}

#[test]
fn inner_automorphisms_have_order_one() {
    let fiber = Presentation::free(&["a", "b"]);
    let g = Word::from_letters([1, 2, -1]);
    let images: Vec<Word> = (0..2)
        .map(|i| free_reduce(&(&(g.clone() * &Word::gen(i)) * &g.inverse())))
        .collect();
    let psi = FreeAutomorphism::periodic(&fiber, images, 1, g).unwrap();
    for k in [1, 2, 7, -3] {
        let iso = stabilization_iso(&fiber, &psi, k).unwrap();
        assert_eq!(abelian_invariants(iso.target.presentation()).free_rank, 4);
    }
}
