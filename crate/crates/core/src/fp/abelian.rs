//! Abelianization via the Smith normal form of the relator exponent matrix.

use super::presentation::Presentation;

/// `ℤ^free_rank ⊕ ⨁ ℤ/torsion_i`, with `torsion` in divisibility order and
/// every entry `> 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    /// Order of the abelianization, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
        if self.free_rank > 0 {
            parts.insert(
                0,
                if self.free_rank == 1 {
                    "Z".into()
                } else {
                    format!("Z^{}", self.free_rank)
                },
            );
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    let n = p.generator_count();
    let rows: Vec<Vec<i128>> = p
        .relators()
        .iter()
        .map(|r| r.exponent_vector(n).into_iter().map(i128::from).collect())
        .collect();
    let diag = smith_diagonal(rows, n);
    let rank = diag.len();
    AbelianInvariants {
        free_rank: n - rank,
        torsion: diag
            .into_iter()
            .filter(|&d| d > 1)
            .map(|d| u64::try_from(d).expect("torsion coefficient fits u64"))
            .collect(),
    }
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
#[allow(clippy::needless_range_loop)] // row operations read one row while writing another
pub fn smith_diagonal(mut m: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_euclid(m[t][t]);
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_euclid(m[t][t]);
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // divisibility: fold a non-multiple into the pivot row
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % m[t][t] != 0);
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            m[t][j] += m[i][j];
                        }
                    }
                    None => break,
                }
            } else {
                // move the smallest nonzero entry of row/column t to the pivot
                let (bi, bj) = (t..rows)
                    .map(|i| (i, t))
                    .chain((t..cols).map(|j| (t, j)))
                    .filter(|&(i, j)| m[i][j] != 0)
                    .min_by_key(|&(i, j)| m[i][j].abs())
                    .expect("pivot is nonzero");
                m.swap(t, bi);
                for row in m.iter_mut() {
                    row.swap(t, bj);
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}
