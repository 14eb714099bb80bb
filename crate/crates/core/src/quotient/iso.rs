//! Isomorphism and homomorphism search between finite groups.

use super::group::FiniteGroup;
use super::{QuotientError, Result};

const UNSET: u32 = u32::MAX;

/// A small generating set, chosen greedily by subgroup growth.
pub fn generating_set(g: &FiniteGroup) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut current = vec![0u32];
    while current.len() < g.order() {
        let best = g
            .elements()
            .filter(|a| current.binary_search(a).is_err())
            .max_by_key(|&a| {
                let mut trial = gens.clone();
                trial.push(a);
                (g.subgroup(&trial).len(), std::cmp::Reverse(a))
            })
            .expect("proper subgroup has an outside element");
        gens.push(best);
        current = g.subgroup(&gens);
    }
    gens
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism on `⟨gens⟩`.
///
/// Returns the map on `⟨gens⟩` (other entries `UNSET`) if the assignment is
/// consistent along every generator edge; `injective` additionally rejects
/// collisions.
fn extend(a: &FiniteGroup, gens: &[u32], b: &FiniteGroup, images: &[u32], injective: bool) -> Option<Vec<u32>> {
    let mut map = vec![UNSET; a.order()];
    let mut used = vec![false; if injective { b.order() } else { 0 }];
    map[0] = 0;
    if injective {
        used[0] = true;
    }
    let mut queue = vec![0u32];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = map[x as usize];
        for (&g, &h) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(fx, h);
            match map[y as usize] {
                UNSET => {
                    if injective {
                        if used[fy as usize] {
                            return None;
                        }
                        used[fy as usize] = true;
                    }
                    map[y as usize] = fy;
                    queue.push(y);
                }
                v if v != fy => return None,
                _ => {}
            }
        }
    }
    Some(map)
}

fn prefilter(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.order() == b.order() && a.invariants() == b.invariants()
}

/// Calls `accept` on each isomorphism `a → b` (as an element map) until it
/// returns `true`.
fn search_isos(a: &FiniteGroup, b: &FiniteGroup, accept: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let gens = generating_set(a);
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            let o = a.element_order(g);
            b.elements().filter(|&h| b.element_order(h) == o).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    fn rec(
        a: &FiniteGroup,
        b: &FiniteGroup,
        gens: &[u32],
        candidates: &[Vec<u32>],
        images: &mut Vec<u32>,
        accept: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        let i = images.len();
        if i == gens.len() {
            let map = extend(a, gens, b, images, true).expect("checked at the previous level");
            return accept(&map);
        }
        for &h in &candidates[i] {
            images.push(h);
            if extend(a, &gens[..=i], b, images, true).is_some() && rec(a, b, gens, candidates, images, accept) {
                return true;
            }
            images.pop();
        }
        false
    }
    rec(a, b, &gens, &candidates, &mut images, accept)
}

/// Isomorphism of the underlying groups (marks ignored).
pub fn finite_group_iso(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    let (a, b) = (a.without_mark(), b.without_mark());
    prefilter(&a, &b) && search_isos(&a, &b, &mut |_| true)
}

/// An isomorphism `a → b` carrying the mark of `a` exactly onto the mark of
/// `b`.
pub fn pair_iso(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    let (Some(ma), Some(mb)) = (a.mark(), b.mark()) else {
        return Err(QuotientError::MissingMark);
    };
    if !prefilter(a, b) {
        return Ok(false);
    }
    let (a0, b0) = (a.without_mark(), b.without_mark());
    Ok(search_isos(&a0, &b0, &mut |map| {
        let mut image: Vec<u32> = ma.iter().map(|&x| map[x as usize]).collect();
        image.sort_unstable();
        image == mb
    }))
}

/// Whether some homomorphism `a → b` sends `gens` (which must generate `a`)
/// onto a generating set of `b`.
pub fn is_image_of(a: &FiniteGroup, gens: &[u32], b: &FiniteGroup) -> bool {
    if !a.order().is_multiple_of(b.order()) {
        return false;
    }
    let mut images = Vec::with_capacity(gens.len());
    fn rec(a: &FiniteGroup, gens: &[u32], b: &FiniteGroup, images: &mut Vec<u32>) -> bool {
        let i = images.len();
        if i == gens.len() {
            return b.subgroup(images).len() == b.order();
        }
        let o = a.element_order(gens[i]);
        for h in b.elements().filter(|&h| o.is_multiple_of(b.element_order(h))) {
            images.push(h);
            if extend(a, &gens[..=i], b, images, false).is_some() && rec(a, gens, b, images) {
                return true;
            }
            images.pop();
        }
        false
    }
    rec(a, gens, b, &mut images)
}

/// Checks that `images` defines a homomorphism on `⟨gens⟩ = a`.
pub fn is_homomorphism(a: &FiniteGroup, gens: &[u32], b: &FiniteGroup, images: &[u32]) -> bool {
    extend(a, gens, b, images, false).is_some_and(|m| m.iter().all(|&x| x != UNSET))
}
