//! The groups of order at most 15, from permutation generators, and
//! homomorphism counts into them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::fp::Presentation;

use super::group::FiniteGroup;
use super::{Budget, QuotientError, Result};

/// Every group of order up to this bound appears in [`catalogue`].
pub const CATALOGUE_MAX_ORDER: usize = 15;

#[derive(Debug, Clone)]
pub struct CatalogueGroup {
    pub id: &'static str,
    pub group: FiniteGroup,
}

// (id, degree, generators in 1-based cycle notation)
const ENTRIES: &[(&str, usize, &[&str])] = &[
    ("C1", 1, &[]),
    ("C2", 2, &["(1 2)"]),
    ("C3", 3, &["(1 2 3)"]),
    ("C4", 4, &["(1 2 3 4)"]),
    ("C2xC2", 4, &["(1 2)", "(3 4)"]),
    ("C5", 5, &["(1 2 3 4 5)"]),
    ("C6", 6, &["(1 2 3 4 5 6)"]),
    ("S3", 3, &["(1 2 3)", "(2 3)"]),
    ("C7", 7, &["(1 2 3 4 5 6 7)"]),
    ("C8", 8, &["(1 2 3 4 5 6 7 8)"]),
    ("C4xC2", 6, &["(1 2 3 4)", "(5 6)"]),
    ("C2xC2xC2", 6, &["(1 2)", "(3 4)", "(5 6)"]),
    ("D8", 4, &["(1 2 3 4)", "(2 4)"]),
    ("Q8", 8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]),
    ("C9", 9, &["(1 2 3 4 5 6 7 8 9)"]),
    ("C3xC3", 6, &["(1 2 3)", "(4 5 6)"]),
    ("C10", 10, &["(1 2 3 4 5 6 7 8 9 10)"]),
    ("D10", 5, &["(1 2 3 4 5)", "(2 5)(3 4)"]),
    ("C11", 11, &["(1 2 3 4 5 6 7 8 9 10 11)"]),
    ("C12", 12, &["(1 2 3 4 5 6 7 8 9 10 11 12)"]),
    ("C6xC2", 8, &["(1 2 3 4 5 6)", "(7 8)"]),
    ("A4", 4, &["(1 2 3)", "(1 2)(3 4)"]),
    ("D12", 6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"]),
    ("C3:C4", 7, &["(1 2 3)", "(2 3)(4 5 6 7)"]),
    ("C13", 13, &["(1 2 3 4 5 6 7 8 9 10 11 12 13)"]),
    ("C14", 14, &["(1 2 3 4 5 6 7 8 9 10 11 12 13 14)"]),
    ("D14", 7, &["(1 2 3 4 5 6 7)", "(2 7)(3 6)(4 5)"]),
    ("C15", 15, &["(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15)"]),
];

fn parse_cycles(degree: usize, text: &str) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..degree).collect();
    for cycle in text
        .split(')')
        .map(|c| c.trim().trim_start_matches('('))
        .filter(|c| !c.is_empty())
    {
        let points: Vec<usize> = cycle
            .split_whitespace()
            .map(|p| p.parse::<usize>().expect("point") - 1)
            .collect();
        for (i, &p) in points.iter().enumerate() {
            perm[p] = points[(i + 1) % points.len()];
        }
    }
    perm
}

/// All 28 groups of order at most 15, sorted by order.
pub fn catalogue() -> &'static [CatalogueGroup] {
    static CATALOGUE: OnceLock<Vec<CatalogueGroup>> = OnceLock::new();
    CATALOGUE.get_or_init(|| {
        ENTRIES
            .iter()
            .map(|&(id, degree, gens)| {
                let perms: Vec<Vec<usize>> = gens.iter().map(|g| parse_cycles(degree, g)).collect();
                CatalogueGroup {
                    id,
                    group: FiniteGroup::from_permutations(degree, &perms),
                }
            })
            .collect()
    })
}

/// Number of homomorphisms from the presented group to `target`.
pub fn count_homomorphisms(p: &Presentation, target: &FiniteGroup, budget: &Budget) -> Result<u64> {
    let n = p.generator_count();
    // relators are checked as soon as their last generator is assigned
    let mut by_last: Vec<Vec<&[i32]>> = vec![Vec::new(); n];
    for r in p.relators() {
        if let Some(g) = r.max_generator() {
            by_last[g].push(r.letters());
        }
    }
    let eval = |images: &[u32], w: &[i32]| -> u32 {
        w.iter().fold(0, |acc, &l| {
            let x = images[l.unsigned_abs() as usize - 1];
            target.mul(acc, if l > 0 { x } else { target.inv(x) })
        })
    };
    let mut images = vec![0u32; n];
    let mut nodes = 0u64;
    fn rec(
        i: usize,
        images: &mut Vec<u32>,
        target: &FiniteGroup,
        by_last: &[Vec<&[i32]>],
        eval: &dyn Fn(&[u32], &[i32]) -> u32,
        nodes: &mut u64,
        max_nodes: u64,
    ) -> Result<u64> {
        if i == images.len() {
            return Ok(1);
        }
        let mut total = 0;
        for x in target.elements() {
            *nodes += 1;
            if *nodes > max_nodes {
                return Err(QuotientError::BudgetExceeded("homomorphism search nodes"));
            }
            images[i] = x;
            if by_last[i].iter().all(|r| eval(images, r) == 0) {
                total += rec(i + 1, images, target, by_last, eval, nodes, max_nodes)?;
            }
        }
        Ok(total)
    }
    rec(0, &mut images, target, &by_last, &eval, &mut nodes, budget.max_nodes)
}

/// Homomorphism counts into every catalogue group of order at most `bound`.
pub fn hom_count_signature(p: &Presentation, bound: usize, budget: &Budget) -> Result<BTreeMap<&'static str, u64>> {
    catalogue()
        .iter()
        .filter(|c| c.group.order() <= bound)
        .map(|c| Ok((c.id, count_homomorphisms(p, &c.group, budget)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::iso::finite_group_iso;

    #[test]
    fn catalogue_is_complete_and_distinct() {
        let cat = catalogue();
        assert_eq!(cat.len(), 28);
        let mut per_order = BTreeMap::new();
        for c in cat {
            *per_order.entry(c.group.order()).or_insert(0) += 1;
        }
        let expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1];
        for (order, count) in expected.iter().enumerate() {
            assert_eq!(per_order[&(order + 1)], *count, "order {}", order + 1);
        }
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[i + 1..] {
                assert!(!finite_group_iso(&a.group, &b.group), "{} ~ {}", a.id, b.id);
            }
        }
    }

    #[test]
    fn quaternion_and_dicyclic() {
        let cat = catalogue();
        let involutions = |id: &str| {
            let g = &cat.iter().find(|c| c.id == id).unwrap().group;
            g.elements().filter(|&x| g.element_order(x) == 2).count()
        };
        assert_eq!(involutions("Q8"), 1);
        assert_eq!(involutions("C3:C4"), 1);
        assert_eq!(involutions("D8"), 5);
    }

    #[test]
    fn hom_counts() {
        let s3 = &catalogue().iter().find(|c| c.id == "S3").unwrap().group;
        let f2 = Presentation::free(&["a", "b"]);
        assert_eq!(count_homomorphisms(&f2, s3, &Budget::default()).unwrap(), 36);
        let z = Presentation::free(&["a"]);
        assert_eq!(count_homomorphisms(&z, s3, &Budget::default()).unwrap(), 6);
        let c2 = Presentation::parse("<a | a^2>").unwrap();
        assert_eq!(count_homomorphisms(&c2, s3, &Budget::default()).unwrap(), 4);
        let sig = hom_count_signature(&z, 4, &Budget::default()).unwrap();
        assert_eq!(sig.len(), 5);
        assert_eq!(sig["C2xC2"], 4);
    }
}
