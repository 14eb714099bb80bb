use super::presentation::Presentation;
use super::surface::WordProblem;
use super::word::Word;
use super::{FpError, Result};

/// An automorphism `ψ` of a free or closed-surface group `N` whose outer class
/// is periodic: `ψⁿ` is conjugation by the inner witness `g`.
///
/// Construction checks that `ψ` and the supplied inverse respect the relators
/// of `N`, compose to the identity, and that `ψⁿ(x) = g x g⁻¹` on every
/// generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAutomorphism {
    images: Vec<Word>,
    inverse_images: Vec<Word>,
    order: u64,
    witness: Word,
    solver: WordProblem,
}

impl FreeAutomorphism {
    pub fn new(
        fiber: &Presentation,
        images: Vec<Word>,
        inverse_images: Vec<Word>,
        order: u64,
        witness: Word,
    ) -> Result<Self> {
        let solver = WordProblem::detect(fiber)?;
        let rank = fiber.generator_count();
        let in_range = |w: &Word| w.max_generator().is_none_or(|g| g < rank);
        if images.len() != rank
            || inverse_images.len() != rank
            || !images.iter().chain(&inverse_images).all(in_range)
            || !in_range(&witness)
        {
            return Err(FpError::UnknownGenerator);
        }
        if order == 0 {
            return Err(FpError::NotAutomorphism("order must be positive".into()));
        }
        let images: Vec<Word> = images.iter().map(|w| solver.reduce(w)).collect();
        let inverse_images: Vec<Word> = inverse_images.iter().map(|w| solver.reduce(w)).collect();
        let psi = Self {
            images,
            inverse_images,
            order,
            witness: solver.reduce(&witness),
            solver,
        };
        psi.validate(fiber)?;
        Ok(psi)
    }

    /// Like [`FreeAutomorphism::new`], deriving the inverse as
    /// `ψ⁻¹ = ψⁿ⁻¹ ∘ conj(g⁻¹)`.
    pub fn periodic(fiber: &Presentation, images: Vec<Word>, order: u64, witness: Word) -> Result<Self> {
        let solver = WordProblem::detect(fiber)?;
        if order == 0 {
            return Err(FpError::NotAutomorphism("order must be positive".into()));
        }
        let provisional = Self {
            images: images.clone(),
            inverse_images: images.clone(),
            order,
            witness: witness.clone(),
            solver,
        };
        let g_inv = witness.inverse();
        let inverse_images = (0..fiber.generator_count())
            .map(|x| {
                let conj = &(&g_inv * &Word::gen(x)) * &witness;
                provisional.iterate(&conj, order - 1)
            })
            .collect();
        Self::new(fiber, images, inverse_images, order, witness)
    }

    fn validate(&self, fiber: &Presentation) -> Result<()> {
        let fail = |msg: String| Err(FpError::NotAutomorphism(msg));
        for r in fiber.relators() {
            if !self.solver.is_trivial(&r.substitute(&self.images)) {
                return fail("a relator image is nontrivial".into());
            }
            if !self.solver.is_trivial(&r.substitute(&self.inverse_images)) {
                return fail("a relator image under the inverse is nontrivial".into());
            }
        }
        for x in 0..fiber.generator_count() {
            let gx = Word::gen(x);
            let there_and_back = self.apply_inverse(&self.apply(&gx));
            let back_and_there = self.apply(&self.apply_inverse(&gx));
            if !self.solver.is_trivial(&(&there_and_back * &gx.inverse())) {
                return fail(format!("inverse fails on generator {}", fiber.generators()[x]));
            }
            if !self.solver.is_trivial(&(&back_and_there * &gx.inverse())) {
                return fail(format!("inverse fails on generator {}", fiber.generators()[x]));
            }
            let power = self.iterate(&gx, self.order);
            let conj = &(&self.witness * &gx) * &self.witness.inverse();
            if !self.solver.is_trivial(&(&power * &conj.inverse())) {
                return fail(format!(
                    "psi^{} is not conjugation by the witness on {}",
                    self.order,
                    fiber.generators()[x]
                ));
            }
        }
        Ok(())
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inverse_images
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn witness(&self) -> &Word {
        &self.witness
    }

    pub fn solver(&self) -> WordProblem {
        self.solver
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.solver.reduce(&w.substitute(&self.images))
    }

    pub fn apply_inverse(&self, w: &Word) -> Word {
        self.solver.reduce(&w.substitute(&self.inverse_images))
    }

    fn iterate(&self, w: &Word, times: u64) -> Word {
        let mut cur = self.solver.reduce(w);
        for _ in 0..times {
            cur = self.apply(&cur);
        }
        cur
    }

    /// `ψ^e(w)` for any integer `e`, using `ψ^{qn+r} = conj(g^q) ∘ ψ^r`.
    pub fn apply_power(&self, w: &Word, e: i64) -> Word {
        let n = self.order as i64;
        let (q, r) = (e.div_euclid(n), e.rem_euclid(n));
        let inner = self.iterate(w, r as u64);
        if q == 0 {
            return inner;
        }
        let gq = self.witness.pow(q);
        self.solver.reduce(&(&(&gq * &inner) * &gq.inverse()))
    }

    /// `ψ^k` as an automorphism with inner witness `g^k`. Requires `gcd(k, n) = 1`
    /// so the outer order stays `n`.
    pub fn power(&self, fiber: &Presentation, k: i64) -> Result<Self> {
        let n = self.order as i64;
        if num_integer::gcd(k, n) != 1 {
            return Err(FpError::NotCoprime { k, order: self.order });
        }
        let rank = fiber.generator_count();
        let images = (0..rank).map(|x| self.apply_power(&Word::gen(x), k)).collect();
        let inverse_images = (0..rank).map(|x| self.apply_power(&Word::gen(x), -k)).collect();
        Self::new(fiber, images, inverse_images, self.order, self.witness.pow(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::surface::surface_group;

    fn order_three() -> (Presentation, FreeAutomorphism) {
        let f2 = Presentation::free(&["a", "b"]);
        let images = vec![Word::from_letters([2]), Word::from_letters([-2, -1])];
        let psi = FreeAutomorphism::periodic(&f2, images, 3, Word::empty()).unwrap();
        (f2, psi)
    }

    #[test]
    fn order_three_on_free_group() {
        let (_, psi) = order_three();
        assert_eq!(psi.inverse_images()[0], Word::from_letters([-2, -1]));
        assert_eq!(psi.inverse_images()[1], Word::from_letters([1]));
        for x in 0..2 {
            assert_eq!(psi.apply_power(&Word::gen(x), 3), Word::gen(x));
            assert_eq!(psi.apply_power(&Word::gen(x), -3), Word::gen(x));
        }
    }

    #[test]
    fn wrong_order_is_rejected() {
        let f2 = Presentation::free(&["a", "b"]);
        let images = vec![Word::from_letters([2]), Word::from_letters([-2, -1])];
        assert!(FreeAutomorphism::periodic(&f2, images, 2, Word::empty()).is_err());
    }

    #[test]
    fn non_invertible_map_is_rejected() {
        let f2 = Presentation::free(&["a", "b"]);
        let images = vec![Word::from_letters([1, 1]), Word::from_letters([2])];
        let inverse = vec![Word::from_letters([1]), Word::from_letters([2])];
        assert!(FreeAutomorphism::new(&f2, images, inverse, 1, Word::empty()).is_err());
    }

    #[test]
    fn genus_two_swap() {
        // a1 ↔ a2, b1 ↔ b2 sends the relator to a conjugate of itself
        let s2 = surface_group(2);
        let images = vec![Word::gen(2), Word::gen(3), Word::gen(0), Word::gen(1)];
        let psi = FreeAutomorphism::periodic(&s2, images, 2, Word::empty()).unwrap();
        assert_eq!(psi.solver(), WordProblem::Surface(2));
        let cube = psi.power(&s2, 3).unwrap();
        assert_eq!(cube.images(), psi.images());
    }

    #[test]
    fn inner_witness_for_conjugation() {
        // ψ = conjugation by a: order 1 with witness a
        let f2 = Presentation::free(&["a", "b"]);
        let a = Word::gen(0);
        let images = vec![a.clone(), Word::from_letters([1, 2, -1])];
        let psi = FreeAutomorphism::periodic(&f2, images, 1, a).unwrap();
        assert_eq!(psi.apply_power(&Word::gen(1), 2), Word::from_letters([1, 1, 2, -1, -1]));
    }
}
