//! Mapping tori `G_ψ = N ⋊_ψ ℤ` of periodic automorphisms, their exact word
//! problem, and the isomorphism `G_ψ × ℤ ≅ G_{ψ^k} × ℤ` for `k` prime to the
//! order of `ψ`.

use num_integer::Integer;

use super::automorphism::FreeAutomorphism;
use super::builders::{build_semidirect, direct_with_z};
use super::presentation::Presentation;
use super::word::Word;
use super::{FpError, Result};

/// `N`-part followed by the exponents of the stable letter and of the extra
/// central generator: the element `n · t^t_exp · s^s_exp`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub fiber_part: Word,
    pub t_exp: i64,
    pub s_exp: i64,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.fiber_part.is_empty() && self.t_exp == 0 && self.s_exp == 0
    }
}

/// The presentation of `G_ψ` (optionally `× ℤ`) together with what is needed
/// to solve its word problem.
///
/// Generators `0..r` are those of `N`, then the stable letter, then (when
/// `with_z`) the central letter.
#[derive(Debug, Clone)]
pub struct MappingTorus {
    psi: FreeAutomorphism,
    rank: usize,
    with_z: bool,
    presentation: Presentation,
}

impl MappingTorus {
    pub fn new(fiber: &Presentation, psi: FreeAutomorphism, with_z: bool) -> Result<Self> {
        let semi = build_semidirect(fiber, psi.images())?;
        let presentation = if with_z { direct_with_z(&semi) } else { semi };
        Ok(Self {
            psi,
            rank: fiber.generator_count(),
            with_z,
            presentation,
        })
    }

    /// Same group with the stable and central letters renamed.
    pub fn with_letter_names(mut self, stable: &str, central: &str) -> Result<Self> {
        self.presentation = self.presentation.rename_generator(self.rank, stable)?;
        if self.with_z {
            self.presentation = self.presentation.rename_generator(self.rank + 1, central)?;
        }
        Ok(self)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn automorphism(&self) -> &FreeAutomorphism {
        &self.psi
    }

    pub fn stable_letter(&self) -> usize {
        self.rank
    }

    pub fn central_letter(&self) -> Option<usize> {
        self.with_z.then_some(self.rank + 1)
    }

    /// Moves every stable and central letter to the right, using
    /// `t^e x = ψ^e(x) t^e`, and reduces the `N`-part. The result is unique,
    /// so `w` is trivial exactly when all three parts are.
    pub fn normal_form(&self, w: &Word) -> Result<NormalForm> {
        let mut fiber = Word::empty();
        let (mut t_exp, mut s_exp) = (0i64, 0i64);
        let solver = self.psi.solver();
        for &l in w.letters() {
            let g = l.unsigned_abs() as usize - 1;
            let sign = if l > 0 { 1 } else { -1 };
            if g < self.rank {
                let x = Word::from_letters([l]);
                fiber.extend(&self.psi.apply_power(&x, t_exp));
                if fiber.len() > 64 {
                    fiber = solver.reduce(&fiber);
                }
            } else if g == self.rank {
                t_exp += sign;
            } else if self.with_z && g == self.rank + 1 {
                s_exp += sign;
            } else {
                return Err(FpError::UnknownGenerator);
            }
        }
        Ok(NormalForm {
            fiber_part: solver.reduce(&fiber),
            t_exp,
            s_exp,
        })
    }
}

/// Integers with `u·n + v·k = 1`: the exponent lattice of `⟨t, s⟩` is
/// re-based as `τ = t^k s^{-u}`, `σ = t^n s^v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisChange {
    pub k: i64,
    pub n: i64,
    pub u: i64,
    pub v: i64,
}

impl BasisChange {
    /// `u = n⁻¹ mod |k|` in `[0, |k|)` and `v = (1 − u·n)/k`.
    pub fn new(k: i64, n: i64) -> Result<Self> {
        if k == 0 || n <= 0 || k.gcd(&n) != 1 {
            return Err(FpError::NotCoprime {
                k,
                order: n.max(0) as u64,
            });
        }
        let m = k.abs();
        let u = if m == 1 {
            0
        } else {
            let e = n.extended_gcd(&m);
            (e.x * e.gcd.signum()).rem_euclid(m)
        };
        let v = (1 - u * n) / k;
        debug_assert_eq!(u * n + v * k, 1);
        Ok(Self { k, n, u, v })
    }

    /// Rows `(k, −u)` and `(n, v)`: the images of `τ` and `σ` in `(t, s)`
    /// exponents.
    pub fn inverse_rows(&self) -> [[i64; 2]; 2] {
        [[self.k, -self.u], [self.n, self.v]]
    }

    pub fn determinant(&self) -> i64 {
        self.k * self.v + self.u * self.n
    }
}

/// A verified isomorphism `f: G_ψ × ℤ → G_{ψ^k} × ℤ`.
#[derive(Debug, Clone)]
pub struct StabilizationIso {
    pub basis: BasisChange,
    pub source: MappingTorus,
    pub target: MappingTorus,
    /// `f` on the source generators, as words in the target generators.
    pub images: Vec<Word>,
}

/// Builds `f` with `f|N = id`, `f(t) = τ^v (gσ)^u`, `f(s) = τ^{−n} (gσ)^k`,
/// where `g` is the inner witness of `ψ`, and checks that it is a
/// homomorphism (every source relator maps to the identity) whose effect on
/// the exponent lattice of `⟨t, s⟩` is unimodular.
pub fn stabilization_iso(fiber: &Presentation, psi: &FreeAutomorphism, k: i64) -> Result<StabilizationIso> {
    let n = psi.order() as i64;
    let basis = BasisChange::new(k, n)?;
    let source = MappingTorus::new(fiber, psi.clone(), true)?;
    let target = MappingTorus::new(fiber, psi.power(fiber, k)?, true)?.with_letter_names("tau", "sigma")?;

    let r = fiber.generator_count();
    let tau = Word::gen(r);
    let g_sigma = psi.witness() * &Word::gen(r + 1);
    let mut images: Vec<Word> = (0..r).map(Word::gen).collect();
    images.push(&tau.pow(basis.v) * &g_sigma.pow(basis.u));
    images.push(&tau.pow(-n) * &g_sigma.pow(k));

    for (index, rel) in source.presentation().relators().iter().enumerate() {
        if !target.normal_form(&rel.substitute(&images))?.is_identity() {
            return Err(FpError::RelatorNotTrivial { index });
        }
    }

    let rows = [lattice_row(&target, &images[r])?, lattice_row(&target, &images[r + 1])?];
    let inv = basis.inverse_rows();
    let product = |i: usize, j: usize| rows[i][0] * inv[0][j] + rows[i][1] * inv[1][j];
    if basis.determinant() != 1 || [[product(0, 0), product(0, 1)], [product(1, 0), product(1, 1)]] != [[1, 0], [0, 1]]
    {
        return Err(FpError::LatticeCheck);
    }

    Ok(StabilizationIso {
        basis,
        source,
        target,
        images,
    })
}

fn lattice_row(target: &MappingTorus, w: &Word) -> Result<[i64; 2]> {
    let nf = target.normal_form(w)?;
    Ok([nf.t_exp, nf.s_exp])
}
