//! Presentation builders for Seifert fibered spaces, mapping tori and direct
//! products with `ℤ`.
//!
//! Generator names are fixed: `x1..xm` (exceptional fibers), `a1, b1, …`
//! (base handles), `y1..ys` (boundary curves of the base), `t` (regular fiber
//! or stable letter), `s` (extra central `ℤ`).

use super::presentation::{PeripheralMark, Presentation};
use super::word::{free_conjugator, free_reduce, Word};
use super::{FpError, Result};
use crate::scalar::SeifertInt;
use crate::seifert::SeifertData;

fn small<I: SeifertInt>(v: &I) -> Result<i64> {
    v.to_i64_checked()
        .filter(|x| x.unsigned_abs() <= 1 << 20)
        .ok_or_else(|| FpError::ExponentTooLarge(v.to_string()))
}

struct SeifertLayout {
    names: Vec<String>,
    m: usize,
    g: usize,
    s: usize,
}

impl SeifertLayout {
    fn new(m: usize, g: usize, s: usize) -> Self {
        let mut names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
        for j in 1..=g {
            names.push(format!("a{j}"));
            names.push(format!("b{j}"));
        }
        names.extend((1..=s).map(|j| format!("y{j}")));
        names.push("t".into());
        Self { names, m, g, s }
    }

    fn x(&self, i: usize) -> Word {
        Word::gen(i)
    }

    fn a(&self, j: usize) -> Word {
        Word::gen(self.m + 2 * j)
    }

    fn b(&self, j: usize) -> Word {
        Word::gen(self.m + 2 * j + 1)
    }

    fn y(&self, j: usize) -> Word {
        Word::gen(self.m + 2 * self.g + j)
    }

    fn t(&self) -> usize {
        self.m + 2 * self.g + self.s
    }

    /// `[u, t]` for every generator `u ≠ t`, then `x_i^{α_i} t^{β_i}`.
    fn central_and_filling<I: SeifertInt>(&self, m: &SeifertData<I>) -> Result<Vec<Word>> {
        let t = Word::gen(self.t());
        let mut rels: Vec<Word> = (0..self.t()).map(|u| Word::commutator(&Word::gen(u), &t)).collect();
        for (i, f) in m.fibers().iter().enumerate() {
            rels.push(&self.x(i).pow(small(&f.alpha)?) * &Word::gen_pow(self.t(), small(&f.beta)?));
        }
        Ok(rels)
    }

    /// `x₁⋯x_m [a₁,b₁]⋯[a_g,b_g]`
    fn base_product(&self) -> Word {
        let mut w = Word::empty();
        for i in 0..self.m {
            w.extend(&self.x(i));
        }
        for j in 0..self.g {
            w.extend(&Word::commutator(&self.a(j), &self.b(j)));
        }
        w
    }
}

/// `π₁` of a closed Seifert fibered space:
/// `t` central, `x_i^{α_i} t^{β_i}` and `x₁⋯x_m [a₁,b₁]⋯[a_g,b_g] t^{−b}`.
///
/// The exponent of `t` in the last relator is `−b`, so that `e = 0` exactly
/// when the abelianization has positive rank `2g + 1`.
pub fn presentation_closed_sfs<I: SeifertInt>(m: &SeifertData<I>) -> Result<Presentation> {
    let b = m.obstruction().ok_or(FpError::WrongSeifertShape("closed"))?;
    let layout = SeifertLayout::new(m.fiber_count(), m.genus() as usize, 0);
    let mut rels = layout.central_and_filling(m)?;
    rels.push(&layout.base_product() * &Word::gen_pow(layout.t(), -small(b)?));
    Ok(Presentation::new(layout.names, rels)?.without_trivial_relators())
}

/// `π₁` of a bounded Seifert fibered space: `t` central, `x_i^{α_i} t^{β_i}`,
/// `x₁⋯x_m [a₁,b₁]⋯[a_g,b_g] y₁⋯y_s`, with the boundary torus `{y_j, t}`
/// marked for each `j`.
pub fn presentation_bounded_sfs<I: SeifertInt>(m: &SeifertData<I>) -> Result<Presentation> {
    if m.is_closed() {
        return Err(FpError::WrongSeifertShape("bounded"));
    }
    let s = m.boundary_count() as usize;
    let layout = SeifertLayout::new(m.fiber_count(), m.genus() as usize, s);
    let mut rels = layout.central_and_filling(m)?;
    let mut product = layout.base_product();
    for j in 0..s {
        product.extend(&layout.y(j));
    }
    rels.push(product);
    let marks = (0..s)
        .map(|j| PeripheralMark::new(vec![layout.y(j), Word::gen(layout.t())]))
        .collect();
    Presentation::with_marks(layout.names, rels, marks)
}

/// Dispatches on whether `m` is closed.
pub fn presentation_sfs<I: SeifertInt>(m: &SeifertData<I>) -> Result<Presentation> {
    if m.is_closed() {
        presentation_closed_sfs(m)
    } else {
        presentation_bounded_sfs(m)
    }
}

fn fresh_name(p: &Presentation, base: &str) -> String {
    let mut name = base.to_string();
    while p.generator_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// `G × ℤ`: a new generator `s` commuting with every generator. Marks of the
/// form `H × ℤ` are extended by `s`.
pub fn direct_with_z(g: &Presentation) -> Presentation {
    let s_name = fresh_name(g, "s");
    let s = Word::gen(g.generator_count());
    let mut names = g.generators().to_vec();
    names.push(s_name);
    let mut rels = g.relators().to_vec();
    rels.extend((0..g.generator_count()).map(|x| Word::commutator(&s, &Word::gen(x))));
    let marks = g
        .peripheral_marks()
        .iter()
        .map(|mk| {
            let mut mk = mk.clone();
            if mk.product_with_z {
                mk.words.push(s.clone());
            }
            mk
        })
        .collect();
    Presentation::with_marks(names, rels, marks).expect("extends a valid presentation")
}

/// `G_ψ = N ⋊_ψ ℤ`: adds a stable letter `t` with `t x t⁻¹ = ψ(x)`.
///
/// A mark `{d}` of `N` (a boundary word) becomes `{d, w⁻¹t}` where
/// `ψ(d) = w d w⁻¹`; then `w⁻¹t` commutes with `d`. The conjugator is found
/// in the free group on the generators of `N`.
pub fn build_semidirect(n: &Presentation, images: &[Word]) -> Result<Presentation> {
    let rank = n.generator_count();
    if images.len() != rank || images.iter().any(|w| w.max_generator().is_some_and(|g| g >= rank)) {
        return Err(FpError::UnknownGenerator);
    }
    let t_name = fresh_name(n, "t");
    let t = Word::gen(rank);
    let mut names = n.generators().to_vec();
    names.push(t_name);
    let mut rels = n.relators().to_vec();
    for (x, img) in images.iter().enumerate() {
        rels.push(&(&(&t * &Word::gen(x)) * &t.inverse()) * &img.inverse());
    }
    let marks = n
        .peripheral_marks()
        .iter()
        .map(|mk| {
            let [d] = mk.words.as_slice() else {
                return Err(FpError::UnsupportedMark);
            };
            let image = free_reduce(&d.substitute(images));
            let w = free_conjugator(d, &image).ok_or(FpError::MarkNotInvariant)?;
            Ok(PeripheralMark::new(vec![d.clone(), &w.inverse() * &t]))
        })
        .collect::<Result<Vec<_>>>()?;
    Presentation::with_marks(names, rels, marks)
}
