//! Word problem for free groups and closed orientable surface groups.

use super::presentation::Presentation;
use super::word::{free_reduce, Word};
use super::{FpError, Result};

/// The standard one-relator presentation `[a₁,b₁]⋯[a_g,b_g]` on generators
/// `a₁, b₁, …, a_g, b_g` (indices `0..2g`).
pub fn surface_relator(genus: usize) -> Word {
    let mut r = Word::empty();
    for j in 0..genus {
        r.extend(&Word::commutator(&Word::gen(2 * j), &Word::gen(2 * j + 1)));
    }
    r
}

/// `π₁` of the closed orientable surface of the given genus.
pub fn surface_group(genus: usize) -> Presentation {
    let names = (1..=genus).flat_map(|j| [format!("a{j}"), format!("b{j}")]).collect();
    let relators = if genus == 0 {
        Vec::new()
    } else {
        vec![surface_relator(genus)]
    };
    Presentation::new(names, relators).expect("standard names")
}

/// Reduces `w` in the genus-`g` surface group.
///
/// Genus 1 returns the abelian normal form `a^p b^q`. For genus ≥ 2 this is
/// Dehn's algorithm: any subword longer than half of a cyclic conjugate of
/// the relator (or its inverse) is replaced by the inverse of the shorter
/// complement. The result is empty exactly when `w` is trivial.
pub fn dehn_reduce(w: &Word, genus: usize) -> Word {
    match genus {
        0 => Word::empty(),
        1 => {
            let v = w.exponent_vector(2);
            &Word::gen_pow(0, v[0]) * &Word::gen_pow(1, v[1])
        }
        g => dehn_algorithm(w, &surface_relator(g)),
    }
}

fn dehn_algorithm(w: &Word, relator: &Word) -> Word {
    let n = relator.len();
    let mut cycles: Vec<Vec<i32>> = Vec::with_capacity(2 * n);
    for r in [relator.clone(), relator.inverse()] {
        let l = r.letters();
        for s in 0..n {
            cycles.push((0..n).map(|i| l[(i + s) % n]).collect());
        }
    }
    let mut cur = free_reduce(w).letters().to_vec();
    'outer: loop {
        for start in 0..cur.len() {
            for c in &cycles {
                let mut len = 0;
                while len < n && start + len < cur.len() && cur[start + len] == c[len] {
                    len += 1;
                }
                if 2 * len > n {
                    // c = u v with u matched, so u = v⁻¹
                    let replacement: Vec<i32> = c[len..].iter().rev().map(|l| -l).collect();
                    let mut next = cur[..start].to_vec();
                    next.extend(replacement);
                    next.extend_from_slice(&cur[start + len..]);
                    cur = free_reduce(&Word::from_letters(next)).letters().to_vec();
                    continue 'outer;
                }
            }
        }
        return Word::from_letters(cur);
    }
}

/// Which word problem solver applies to a fiber group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordProblem {
    Free,
    /// Closed surface of the given genus ≥ 1 with the standard presentation.
    Surface(usize),
}

impl WordProblem {
    /// Recognizes free presentations and standard closed-surface presentations.
    pub fn detect(n: &Presentation) -> Result<Self> {
        match n.relators() {
            [] => Ok(WordProblem::Free),
            [r] if n.generator_count().is_multiple_of(2)
                && n.generator_count() >= 2
                && free_reduce(r) == surface_relator(n.generator_count() / 2) =>
            {
                Ok(WordProblem::Surface(n.generator_count() / 2))
            }
            _ => Err(FpError::UnsupportedWordProblem),
        }
    }

    pub fn reduce(&self, w: &Word) -> Word {
        match self {
            WordProblem::Free => free_reduce(w),
            WordProblem::Surface(g) => dehn_reduce(w, *g),
        }
    }

    pub fn is_trivial(&self, w: &Word) -> bool {
        self.reduce(w).is_empty()
    }
}
