use std::collections::{BTreeMap, HashMap, VecDeque};

use sha2::{Digest, Sha256};

use super::{QuotientError, Result};

/// A finite group given by its multiplication table, identity `0`.
///
/// The optional mark is a subgroup (sorted element list) used for pair
/// quotients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    mark: Option<Vec<u32>>,
}

impl FiniteGroup {
    /// Validates identity, Latin-square and associativity before accepting.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(QuotientError::InvalidTable("table must be square and nonempty".into()));
        }
        if n > u32::MAX as usize || rows.iter().flatten().any(|&x| x >= n) {
            return Err(QuotientError::InvalidTable("entry out of range".into()));
        }
        let table: Vec<u32> = rows.into_iter().flatten().map(|x| x as u32).collect();
        for a in 0..n {
            if table[a] as usize != a || table[a * n] as usize != a {
                return Err(QuotientError::InvalidTable("0 is not the identity".into()));
            }
        }
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                let r = table[a * n + b] as usize;
                let c = table[b * n + a] as usize;
                if row_seen[r] || col_seen[c] {
                    return Err(QuotientError::InvalidTable("not a Latin square".into()));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(QuotientError::InvalidTable("not associative".into()));
                    }
                }
            }
        }
        Ok(Self::from_trusted(n, table))
    }

    /// Table known to be a group (e.g. built from a regular action).
    pub(crate) fn from_trusted(order: usize, table: Vec<u32>) -> Self {
        let mut inverses = vec![0; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverses[a] = row.iter().position(|&x| x == 0).expect("group element has an inverse") as u32;
        }
        Self {
            order,
            table,
            inverses,
            mark: None,
        }
    }

    /// The group generated by permutations of `0..degree`; element `0` is the
    /// identity and the others are numbered in breadth-first order.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Self {
        let identity: Vec<usize> = (0..degree).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..degree).map(|i| q[p[i]]).collect() };
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, u32> = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let next = compose(&elements[i], g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&compose(a, b)]);
            }
        }
        Self::from_trusted(n, table)
    }

    /// Attaches a marked subgroup; it must be closed under the product.
    pub fn with_mark(mut self, mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) || elements.iter().any(|&e| e as usize >= self.order) {
            return Err(QuotientError::InvalidTable("mark must contain the identity".into()));
        }
        for &a in &elements {
            for &b in &elements {
                if elements.binary_search(&self.mul(a, b)).is_err() {
                    return Err(QuotientError::InvalidTable("mark is not a subgroup".into()));
                }
            }
        }
        self.mark = Some(elements);
        Ok(self)
    }

    pub fn without_mark(&self) -> Self {
        Self {
            mark: None,
            ..self.clone()
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn mark(&self) -> Option<&[u32]> {
        self.mark.as_deref()
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0u32]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    queue.push_back(b);
                }
            }
        }
        (0..self.order as u32).filter(|&a| seen[a as usize]).collect()
    }

    /// Sorted elements of the normal closure of `gens`.
    pub fn normal_closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut current: Vec<u32> = self.subgroup(gens);
        loop {
            let conjugates: Vec<u32> = current
                .iter()
                .flat_map(|&h| self.elements().map(move |g| (g, h)))
                .map(|(g, h)| self.mul(self.mul(g, h), self.inv(g)))
                .collect();
            let next = self.subgroup(&conjugates);
            if next.len() == current.len() {
                return current;
            }
            current = next;
        }
    }

    pub fn center(&self) -> Vec<u32> {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    pub fn derived_subgroup(&self) -> Vec<u32> {
        let mut comms: Vec<u32> = Vec::new();
        let mut seen = vec![false; self.order];
        for a in self.elements() {
            for b in self.elements() {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    comms.push(c);
                }
            }
        }
        self.subgroup(&comms)
    }

    pub fn conjugacy_class_count(&self) -> usize {
        let mut class = vec![usize::MAX; self.order];
        let mut count = 0;
        for a in self.elements() {
            if class[a as usize] != usize::MAX {
                continue;
            }
            for g in self.elements() {
                class[self.mul(self.mul(g, a), self.inv(g)) as usize] = count;
            }
            count += 1;
        }
        count
    }

    /// `element order → count`.
    pub fn order_histogram(&self, elements: impl IntoIterator<Item = u32>) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for a in elements {
            *h.entry(self.element_order(a)).or_insert(0) += 1;
        }
        h
    }

    /// Isomorphism invariants; includes the mark when one is attached.
    pub fn invariants(&self) -> GroupInvariants {
        let derived = self.derived_subgroup();
        let in_derived = |x: u32| derived.binary_search(&x).is_ok();
        let mut abelian_orders = BTreeMap::new();
        for a in self.elements() {
            let mut k = 1;
            let mut x = a;
            while !in_derived(x) {
                x = self.mul(x, a);
                k += 1;
            }
            *abelian_orders.entry(k).or_insert(0) += 1;
        }
        // each coset of G' contributes |G'| elements with the same order
        let abelianization_histogram = abelian_orders
            .into_iter()
            .map(|(k, c)| (k, c / derived.len()))
            .collect();
        GroupInvariants {
            order: self.order,
            order_histogram: self.order_histogram(self.elements()),
            center: self.center().len(),
            derived: derived.len(),
            abelianization_histogram,
            classes: self.conjugacy_class_count(),
            mark: self.mark().map(|m| MarkInvariants {
                size: m.len(),
                order_histogram: self.order_histogram(m.iter().copied()),
                normal_closure: self.normal_closure(m).len(),
            }),
        }
    }

    /// Hex digest of [`FiniteGroup::invariants`]; equal for isomorphic groups
    /// (or pairs).
    pub fn fingerprint(&self) -> String {
        self.invariants().fingerprint()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkInvariants {
    pub size: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub normal_closure: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupInvariants {
    pub order: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    pub center: usize,
    pub derived: usize,
    /// Element orders in `G/G'`.
    pub abelianization_histogram: BTreeMap<usize, usize>,
    pub classes: usize,
    pub mark: Option<MarkInvariants>,
}

impl GroupInvariants {
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(format!("{self:?}").as_bytes());
        hex::encode(&digest[..12])
    }
}
