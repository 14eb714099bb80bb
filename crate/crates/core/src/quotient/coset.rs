//! Low-index normal subgroups by coset-table backtracking.
//!
//! Tables are filled at the first undefined entry in row-major order, and a
//! new coset always receives the next number, so every subgroup has exactly
//! one table in the search tree. Forced entries come from scanning relators
//! through each new edge. Partial tables are discarded as soon as some
//! coset `c` cannot be the image of coset `0` under an automorphism of the
//! Schreier graph, which is necessary for the subgroup to be normal.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::fp::{Presentation, Word};

use super::group::FiniteGroup;
use super::{Budget, QuotientError, Result};

const UNDEF: u32 = u32::MAX;

/// A complete coset table for a normal subgroup; columns `2g` and `2g + 1`
/// hold the action of generator `g` and its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetTable {
    cosets: usize,
    columns: usize,
    entries: Vec<u32>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.cosets
    }

    pub fn get(&self, coset: usize, column: usize) -> u32 {
        self.entries[coset * self.columns + column]
    }

    /// Coset reached from `coset` by reading `w`.
    pub fn trace(&self, coset: u32, w: &Word) -> u32 {
        w.letters().iter().fold(coset, |c, &l| self.get(c as usize, column(l)))
    }

    /// The regular action as a group: element `c` is the coset `0·w` and
    /// `c·d = φ_c(d)` for the graph automorphism `φ_c` with `φ_c(0) = c`.
    pub fn quotient_group(&self) -> FiniteGroup {
        let n = self.cosets;
        let mut table = Vec::with_capacity(n * n);
        for c in 0..n as u32 {
            let phi = graph_automorphism(&self.entries, self.columns, n, c)
                .and_then(|m| m.into_iter().collect::<Option<Vec<u32>>>())
                .expect("complete table of a normal subgroup");
            table.extend(phi);
        }
        FiniteGroup::from_trusted(n, table)
    }
}

#[inline]
fn column(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    2 * g + usize::from(letter < 0)
}

/// The partial map `0 ↦ c` propagated along edges defined at both ends;
/// `None` on a collision.
fn graph_automorphism(entries: &[u32], columns: usize, cosets: usize, c: u32) -> Option<Vec<Option<u32>>> {
    let mut map: Vec<Option<u32>> = vec![None; cosets];
    let mut preimage: Vec<Option<u32>> = vec![None; cosets];
    map[0] = Some(c);
    preimage[c as usize] = Some(0);
    let mut queue = vec![0u32];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let mu = map[u as usize].expect("queued cosets are mapped");
        for col in 0..columns {
            let v = entries[u as usize * columns + col];
            let w = entries[mu as usize * columns + col];
            if v == UNDEF || w == UNDEF {
                continue;
            }
            match map[v as usize] {
                None => {
                    if preimage[w as usize].is_some() {
                        return None;
                    }
                    map[v as usize] = Some(w);
                    preimage[w as usize] = Some(v);
                    queue.push(v);
                }
                Some(x) if x != w => return None,
                _ => {}
            }
        }
    }
    Some(map)
}

struct Relators {
    /// For each column, the cyclic conjugates (of relators and their
    /// inverses) that start with that column, as column sequences.
    by_first: Vec<Vec<Vec<usize>>>,
    all: Vec<Vec<usize>>,
}

impl Relators {
    fn new(p: &Presentation) -> Self {
        let columns = 2 * p.generator_count();
        let mut by_first = vec![Vec::new(); columns];
        let mut all = Vec::new();
        for r in p.relators() {
            let (_, core) = crate::fp::cyclic_split(r);
            if core.is_empty() {
                continue;
            }
            let cols: Vec<usize> = core.letters().iter().map(|&l| column(l)).collect();
            all.push(cols.clone());
            for word in [cols.clone(), cols.iter().rev().map(|c| c ^ 1).collect::<Vec<_>>()] {
                for s in 0..word.len() {
                    let rot: Vec<usize> = word[s..].iter().chain(&word[..s]).copied().collect();
                    if !by_first[rot[0]].contains(&rot) {
                        by_first[rot[0]].push(rot);
                    }
                }
            }
        }
        Self { by_first, all }
    }
}

#[derive(Clone)]
struct State {
    entries: Vec<u32>,
    cosets: usize,
    /// Every entry before this flat position is defined.
    cursor: usize,
}

struct Search<'a> {
    relators: &'a Relators,
    columns: usize,
    max_index: usize,
    nodes: &'a AtomicU64,
    max_nodes: u64,
}

enum Step {
    Leaf(CosetTable),
    Children(Vec<State>),
}

impl Search<'_> {
    fn set(&self, s: &mut State, c: usize, col: usize, d: usize, added: &mut Vec<(usize, usize)>) -> bool {
        let a = c * self.columns + col;
        let b = d * self.columns + (col ^ 1);
        if s.entries[a] != UNDEF || s.entries[b] != UNDEF {
            return s.entries[a] == d as u32 && s.entries[b] == c as u32;
        }
        s.entries[a] = d as u32;
        s.entries[b] = c as u32;
        added.push((c, col));
        added.push((d, col ^ 1));
        true
    }

    /// Scans every relator through the queued edges; `false` on a conflict.
    fn deduce(&self, s: &mut State, mut queue: Vec<(usize, usize)>) -> bool {
        let cols = self.columns;
        while let Some((c, col)) = queue.pop() {
            for r in &self.relators.by_first[col] {
                let len = r.len();
                let mut f = c;
                let mut i = 0;
                while i < len {
                    let next = s.entries[f * cols + r[i]];
                    if next == UNDEF {
                        break;
                    }
                    f = next as usize;
                    i += 1;
                }
                if i == len {
                    if f != c {
                        return false;
                    }
                    continue;
                }
                let mut b = c;
                let mut j = len;
                while j > i {
                    let prev = s.entries[b * cols + (r[j - 1] ^ 1)];
                    if prev == UNDEF {
                        break;
                    }
                    b = prev as usize;
                    j -= 1;
                }
                if j == i {
                    if f != b {
                        return false;
                    }
                } else if j == i + 1 {
                    let mut added = Vec::new();
                    if !self.set(s, f, r[i], b, &mut added) {
                        return false;
                    }
                    queue.extend(added);
                }
            }
        }
        true
    }

    fn regular_so_far(&self, s: &State) -> bool {
        (1..s.cosets as u32).all(|c| graph_automorphism(&s.entries, self.columns, s.cosets, c).is_some())
    }

    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.max_nodes {
            return Err(QuotientError::BudgetExceeded("search nodes"));
        }
        Ok(())
    }

    /// Children of a state that is consistent so far.
    fn expand(&self, mut s: State) -> Result<Step> {
        self.tick()?;
        let total = s.cosets * self.columns;
        while s.cursor < total && s.entries[s.cursor] != UNDEF {
            s.cursor += 1;
        }
        if s.cursor == total {
            let table = CosetTable {
                cosets: s.cosets,
                columns: self.columns,
                entries: s.entries[..total].to_vec(),
            };
            return Ok(if self.is_closed(&table) {
                Step::Leaf(table)
            } else {
                Step::Children(Vec::new())
            });
        }
        let (c, col) = (s.cursor / self.columns, s.cursor % self.columns);
        let mut children = Vec::new();
        let new_coset = (s.cosets < self.max_index).then_some(s.cosets);
        for d in (0..s.cosets).chain(new_coset) {
            if s.entries[d * self.columns + (col ^ 1)] != UNDEF {
                continue;
            }
            let mut child = s.clone();
            if d == child.cosets {
                child.cosets += 1;
            }
            let mut added = Vec::new();
            if self.set(&mut child, c, col, d, &mut added)
                && self.deduce(&mut child, added)
                && self.regular_so_far(&child)
            {
                children.push(child);
            }
        }
        Ok(Step::Children(children))
    }

    fn is_closed(&self, t: &CosetTable) -> bool {
        (0..t.cosets).all(|c| {
            self.relators
                .all
                .iter()
                .all(|r| r.iter().fold(c, |x, &col| t.entries[x * self.columns + col] as usize) == c)
        })
    }

    fn run(&self, s: State, out: &mut Vec<CosetTable>) -> Result<()> {
        match self.expand(s)? {
            Step::Leaf(t) => out.push(t),
            Step::Children(children) => {
                for child in children {
                    self.run(child, out)?;
                }
            }
        }
        Ok(())
    }
}

/// Coset tables of every normal subgroup of index at most `max_index`, in a
/// deterministic order (independent of the thread count).
pub fn normal_subgroup_tables(p: &Presentation, max_index: usize, budget: &Budget) -> Result<Vec<CosetTable>> {
    if max_index == 0 {
        return Ok(Vec::new());
    }
    if max_index > budget.max_cosets {
        return Err(QuotientError::BudgetExceeded("coset count"));
    }
    let columns = 2 * p.generator_count();
    let relators = Relators::new(p);
    let nodes = AtomicU64::new(0);
    let search = Search {
        relators: &relators,
        columns,
        max_index,
        nodes: &nodes,
        max_nodes: budget.max_nodes,
    };
    if columns == 0 {
        return Ok(vec![CosetTable {
            cosets: 1,
            columns: 0,
            entries: Vec::new(),
        }]);
    }
    let root = State {
        entries: vec![UNDEF; max_index * columns],
        cosets: 1,
        cursor: 0,
    };

    // breadth-first until there is enough independent work to share out
    let mut frontier = vec![root];
    let mut tables: Vec<CosetTable> = Vec::new();
    for _ in 0..4 {
        if frontier.len() >= 64 {
            break;
        }
        let mut next = Vec::new();
        for s in frontier {
            match search.expand(s)? {
                Step::Leaf(t) => tables.push(t),
                Step::Children(c) => next.extend(c),
            }
        }
        frontier = next;
    }
    let subtrees: Vec<Vec<CosetTable>> = frontier
        .into_par_iter()
        .map(|s| {
            let mut out = Vec::new();
            search.run(s, &mut out).map(|()| out)
        })
        .collect::<Result<_>>()?;
    tables.extend(subtrees.into_iter().flatten());
    tables.sort_by(|a, b| (a.cosets, &a.entries).cmp(&(b.cosets, &b.entries)));
    Ok(tables)
}
