//! Finite quotients of finitely presented groups: low-index normal subgroup
//! search, finite-group and pair isomorphism, quotient sets and `G/G(n)`.

mod catalogue;
mod coset;
mod gn;
mod group;
mod iso;
mod set;

pub use catalogue::{catalogue, count_homomorphisms, hom_count_signature, CatalogueGroup, CATALOGUE_MAX_ORDER};
pub use coset::{normal_subgroup_tables, CosetTable};
pub use gn::{g_n, GnData};
pub use group::{FiniteGroup, GroupInvariants, MarkInvariants};
pub use iso::{finite_group_iso, generating_set, is_homomorphism, is_image_of, pair_iso};
pub use set::{compare_quotient_sets, quotient_set, Comparison, QuotientClass, QuotientSet, Side};

use crate::fp::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error("search budget exceeded ({0})")]
    BudgetExceeded(&'static str),
    #[error("a peripheral mark is required")]
    MissingMark,
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("malformed quotient set line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, QuotientError>;

/// Limits that turn a runaway search into an error instead of a hang.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest index the coset search will accept.
    pub max_cosets: usize,
    /// Search-tree nodes visited, summed over all threads.
    pub max_nodes: u64,
    /// Largest finite group built from products of quotients.
    pub max_elements: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_cosets: 64,
            max_nodes: 50_000_000,
            max_elements: 4096,
        }
    }
}

/// One normal subgroup of finite index, as the quotient group together with
/// the images of the presentation generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub generator_images: Vec<u32>,
}

/// Every quotient `G/N` with `[G : N] ≤ max_index`. When the presentation
/// carries peripheral marks, the image of the first mark is attached.
pub fn low_index_normal_quotients(p: &Presentation, max_index: usize, budget: &Budget) -> Result<Vec<Quotient>> {
    let tables = normal_subgroup_tables(p, max_index, budget)?;
    Ok(tables
        .iter()
        .map(|t| {
            let group = t.quotient_group();
            let generator_images = (0..p.generator_count()).map(|g| t.get(0, 2 * g)).collect();
            let group = match p.peripheral_marks().first() {
                Some(mark) => {
                    let gens: Vec<u32> = mark.words.iter().map(|w| t.trace(0, w)).collect();
                    let sub = group.subgroup(&gens);
                    group.with_mark(sub).expect("generated subgroup")
                }
                None => group,
            };
            Quotient {
                group,
                generator_images,
            }
        })
        .collect())
}
