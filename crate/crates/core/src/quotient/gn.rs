use std::collections::HashMap;

use crate::fp::Presentation;

use super::group::FiniteGroup;
use super::iso::{is_homomorphism, is_image_of};
use super::set::QuotientSet;
use super::{low_index_normal_quotients, Budget, Quotient, QuotientError, Result};

/// `G/G(n)`, where `G(n)` is the intersection of all normal subgroups of
/// index at most `n`, realized as the image of `G` in the product of those
/// quotients.
#[derive(Debug, Clone)]
pub struct GnData {
    pub n: usize,
    pub quotient: FiniteGroup,
    /// Images of the presentation generators in `quotient`.
    pub generator_images: Vec<u32>,
    /// The quotients `G/N` with `[G : N] ≤ n`, one per normal subgroup.
    pub factors: Vec<Quotient>,
}

pub fn g_n(p: &Presentation, n: usize, budget: &Budget) -> Result<GnData> {
    let factors = low_index_normal_quotients(p, n, budget)?;
    let gens: Vec<Vec<u32>> = (0..p.generator_count())
        .map(|g| factors.iter().map(|q| q.generator_images[g]).collect())
        .collect();
    let multiply = |x: &[u32], y: &[u32]| -> Vec<u32> {
        factors
            .iter()
            .enumerate()
            .map(|(i, q)| q.group.mul(x[i], y[i]))
            .collect()
    };

    let identity = vec![0u32; factors.len()];
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<u32>, u32> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        for g in &gens {
            let next = multiply(&elements[head], g);
            if !index.contains_key(&next) {
                if elements.len() >= budget.max_elements {
                    return Err(QuotientError::BudgetExceeded("G/G(n) order"));
                }
                index.insert(next.clone(), elements.len() as u32);
                elements.push(next);
            }
        }
        head += 1;
    }
    let mut table = Vec::with_capacity(elements.len() * elements.len());
    for a in &elements {
        for b in &elements {
            table.push(index[&multiply(a, b)]);
        }
    }
    let quotient = FiniteGroup::from_trusted(elements.len(), table);
    let generator_images = gens.iter().map(|g| index[g]).collect();
    Ok(GnData {
        n,
        quotient,
        generator_images,
        factors,
    })
}

impl GnData {
    /// Each factor is the image of `quotient` under the coordinate map, and
    /// that map is a well-defined surjective homomorphism.
    pub fn factors_are_images(&self) -> bool {
        self.factors.iter().all(|q| {
            is_homomorphism(&self.quotient, &self.generator_images, &q.group, &q.generator_images)
                && q.group.subgroup(&q.generator_images).len() == q.group.order()
        })
    }

    /// Every class of `set` is a homomorphic image of `quotient`.
    pub fn covers(&self, set: &QuotientSet) -> bool {
        set.classes
            .iter()
            .all(|c| is_image_of(&self.quotient, &self.generator_images, &c.group.without_mark()))
    }

    /// The intersection of the normal subgroups of `quotient` of index at
    /// most `n` is trivial, computed inside `quotient` itself.
    pub fn intersection_is_trivial(&self, budget: &Budget) -> Result<bool> {
        let g = &self.quotient;
        let mut found: Vec<Vec<u32>> = Vec::new();
        let mut frontier: Vec<Vec<u32>> = Vec::new();
        let mut seen = vec![false; g.order()];
        for a in g.elements() {
            if seen[a as usize] {
                continue;
            }
            for x in g.elements() {
                seen[g.mul(g.mul(x, a), g.inv(x)) as usize] = true;
            }
            let closure = g.normal_closure(&[a]);
            if !found.contains(&closure) {
                found.push(closure.clone());
                frontier.push(closure);
            }
        }
        while let Some(h) = frontier.pop() {
            for k in found.clone() {
                let join: Vec<u32> = g.subgroup(&h.iter().chain(&k).copied().collect::<Vec<_>>());
                if !found.contains(&join) {
                    if found.len() >= budget.max_elements {
                        return Err(QuotientError::BudgetExceeded("normal subgroup count"));
                    }
                    found.push(join.clone());
                    frontier.push(join);
                }
            }
        }
        let mut meet: Vec<u32> = g.elements().collect();
        for h in found.iter().filter(|h| g.order() / h.len() <= self.n) {
            meet.retain(|x| h.binary_search(x).is_ok());
        }
        Ok(meet == [0])
    }
}
