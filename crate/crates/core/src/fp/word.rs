use std::fmt;
use std::ops::Mul;

/// A word in the generators of a presentation.
///
/// Letter `i + 1` is generator `i`, letter `-(i + 1)` its inverse; `0` never
/// occurs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Builds a word from raw letters, without reducing.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let letters: Vec<i32> = letters.into_iter().collect();
        assert!(letters.iter().all(|&l| l != 0), "letter 0 is not a generator");
        Self(letters)
    }

    /// The generator with zero-based index `g`.
    pub fn gen(g: usize) -> Self {
        Self(vec![g as i32 + 1])
    }

    /// `g^e` for a zero-based generator index.
    pub fn gen_pow(g: usize, e: i64) -> Self {
        let l = if e >= 0 { g as i32 + 1 } else { -(g as i32 + 1) };
        Self(vec![l; e.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest zero-based generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.unsigned_abs() as usize - 1).max()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let mut out = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Self(out)
    }

    /// `a b a⁻¹ b⁻¹`
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a * b * &a.inverse() * &b.inverse()
    }

    pub fn push(&mut self, letter: i32) {
        debug_assert_ne!(letter, 0);
        self.0.push(letter);
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// Substitutes `images[g]` for generator `g` (and its inverse for `g⁻¹`).
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::empty();
        for &l in &self.0 {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend(img);
            } else {
                out.extend(&img.inverse());
            }
        }
        out
    }

    /// Exponent sum of every generator, as a row of length `ngens`.
    pub fn exponent_vector(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0i64; ngens];
        for &l in &self.0 {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// Renders the word with the given generator names; `1` for the empty word.
    pub fn display_with<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

struct WordDisplay<'a, S> {
    word: &'a Word,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for WordDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.names[l.unsigned_abs() as usize - 1].as_ref())?;
            if l < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&rhs.0);
        Word(out)
    }
}

impl Mul<&Word> for Word {
    type Output = Word;

    fn mul(mut self, rhs: &Word) -> Word {
        self.0.extend_from_slice(&rhs.0);
        self
    }
}

/// Cancels adjacent `x x⁻¹` pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

/// Splits a freely reduced word as `p c p⁻¹` with `c` cyclically reduced.
pub fn cyclic_split(w: &Word) -> (Word, Word) {
    let w = free_reduce(w);
    let l = &w.0;
    let mut i = 0;
    while i < l.len() / 2 && l[i] == -l[l.len() - 1 - i] {
        i += 1;
    }
    (Word(l[..i].to_vec()), Word(l[i..l.len() - i].to_vec()))
}

/// In a free group, finds `w` with `target = w · source · w⁻¹`, if one exists.
pub fn free_conjugator(source: &Word, target: &Word) -> Option<Word> {
    let (p2, c2) = cyclic_split(source);
    let (p1, c1) = cyclic_split(target);
    if c1.len() != c2.len() {
        return None;
    }
    if c1.is_empty() {
        return Some(Word::empty());
    }
    let n = c2.len();
    // c2 = r s and c1 = s r, so c1 = r⁻¹ c2 r.
    for shift in 0..n {
        if (0..n).all(|i| c1.0[i] == c2.0[(i + shift) % n]) {
            let r = Word(c2.0[..shift].to_vec());
            let w = &(&p1 * &r.inverse()) * &p2.inverse();
            return Some(free_reduce(&w));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(l: &[i32]) -> Word {
        Word::from_letters(l.iter().copied())
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(free_reduce(&w(&[1, -1, 2])), w(&[2]));
        assert_eq!(free_reduce(&Word::empty()), Word::empty());
        assert_eq!(free_reduce(&w(&[1, 2, -2, -1])), Word::empty());
    }

    #[test]
    fn display_uses_names() {
        let names = ["a", "b"];
        assert_eq!(w(&[1, -2]).display_with(&names).to_string(), "a b^-1");
        assert_eq!(Word::empty().display_with(&names).to_string(), "1");
    }

    #[test]
    fn conjugator_for_commutator_image() {
        // ψ([a,b]) = a⁻¹ b⁻¹ a b for ψ: a ↦ b, b ↦ (ab)⁻¹
        let d = w(&[1, 2, -1, -2]);
        let image = w(&[-1, -2, 1, 2]);
        let c = free_conjugator(&d, &image).unwrap();
        let check = free_reduce(&(&(&c * &d) * &c.inverse()));
        assert_eq!(check, image);
        assert_eq!(free_conjugator(&w(&[1]), &w(&[2])), None);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(
            prop_oneof![Just(1), Just(-1), Just(2), Just(-2), Just(3), Just(-3)],
            0..40,
        )
        .prop_map(Word::from_letters)
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_shrinks(x in arb_word()) {
            let r = free_reduce(&x);
            prop_assert!(r.len() <= x.len());
            prop_assert_eq!(free_reduce(&r), r.clone());
            prop_assert!(r.letters().windows(2).all(|p| p[0] != -p[1]));
            // same element: x r⁻¹ reduces to the identity
            prop_assert!(free_reduce(&(&x * &r.inverse())).is_empty());
        }

        #[test]
        fn conjugator_found_for_conjugates(x in arb_word(), c in arb_word()) {
            let target = free_reduce(&(&(&c * &x) * &c.inverse()));
            let found = free_conjugator(&x, &target).expect("conjugates");
            let back = free_reduce(&(&(&found * &x) * &found.inverse()));
            prop_assert_eq!(back, target);
        }
    }
}
