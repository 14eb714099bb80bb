use std::fmt;

use base64::engine::general_purpose::STANDARD;
use base64::Engine;
use rayon::prelude::*;

use crate::fp::Presentation;

use super::group::FiniteGroup;
use super::iso::{finite_group_iso, pair_iso};
use super::{low_index_normal_quotients, Budget, QuotientError, Result};

/// One isomorphism class: its fingerprint and a representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientClass {
    pub fingerprint: String,
    pub group: FiniteGroup,
}

impl QuotientClass {
    fn new(group: FiniteGroup) -> Self {
        Self {
            fingerprint: group.fingerprint(),
            group,
        }
    }

    fn same_class(&self, other: &Self, paired: bool) -> bool {
        self.fingerprint == other.fingerprint
            && if paired {
                pair_iso(&self.group, &other.group).expect("paired classes carry marks")
            } else {
                finite_group_iso(&self.group, &other.group)
            }
    }
}

/// `order=<k> fingerprint=<hex> table=<base64> mark=<list|none>`; the table
/// is row-major with each entry a little-endian `u16`.
impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bytes: Vec<u8> = self
            .group
            .table()
            .iter()
            .flat_map(|&x| {
                u16::try_from(x)
                    .expect("serialized groups have order ≤ 65536")
                    .to_le_bytes()
            })
            .collect();
        let mark = match self.group.mark() {
            Some(m) => m.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
            None => "none".into(),
        };
        write!(
            f,
            "order={} fingerprint={} table={} mark={}",
            self.group.order(),
            self.fingerprint,
            STANDARD.encode(bytes),
            mark
        )
    }
}

/// The distinct finite quotients (or quotient pairs) of index at most
/// `bound`, sorted by `(order, fingerprint)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSet {
    pub bound: usize,
    pub paired: bool,
    pub classes: Vec<QuotientClass>,
}

impl QuotientSet {
    /// Deduplicates in the given order, keeping the first of each class.
    pub fn from_groups(bound: usize, paired: bool, groups: Vec<FiniteGroup>) -> Result<Self> {
        if paired && groups.iter().any(|g| g.mark().is_none()) {
            return Err(QuotientError::MissingMark);
        }
        let candidates: Vec<QuotientClass> = groups
            .into_par_iter()
            .map(|g| QuotientClass::new(if paired { g } else { g.without_mark() }))
            .collect();
        let mut classes: Vec<QuotientClass> = Vec::new();
        for c in candidates {
            if !classes.iter().any(|k| k.same_class(&c, paired)) {
                classes.push(c);
            }
        }
        classes.sort_by(|a, b| (a.group.order(), &a.fingerprint).cmp(&(b.group.order(), &b.fingerprint)));
        Ok(Self { bound, paired, classes })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.group.order()).collect()
    }

    pub fn contains(&self, class: &QuotientClass) -> bool {
        self.classes.iter().any(|k| k.same_class(class, self.paired))
    }

    /// Restriction to classes of order at most `bound`.
    pub fn truncated(&self, bound: usize) -> Self {
        Self {
            bound,
            paired: self.paired,
            classes: self
                .classes
                .iter()
                .filter(|c| c.group.order() <= bound)
                .cloned()
                .collect(),
        }
    }

    pub fn compare(&self, other: &Self) -> Comparison {
        let missing = |from: &Self, into: &Self| from.classes.iter().find(|c| !into.contains(c)).cloned();
        if let Some(class) = missing(self, other) {
            return Comparison::Witness {
                only_in: Side::First,
                class,
            };
        }
        if let Some(class) = missing(other, self) {
            return Comparison::Witness {
                only_in: Side::Second,
                class,
            };
        }
        Comparison::Equal
    }

    /// Inverse of the [`fmt::Display`] form.
    pub fn parse(bound: usize, paired: bool, text: &str) -> Result<Self> {
        let mut classes = Vec::new();
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let bad = |reason: &str| QuotientError::Malformed {
                line: i + 1,
                reason: reason.into(),
            };
            let mut fields = std::collections::HashMap::new();
            for part in line.split_whitespace() {
                let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
                fields.insert(k, v);
            }
            let get = |k: &str| fields.get(k).copied().ok_or_else(|| bad(&format!("missing {k}")));
            let order: usize = get("order")?.parse().map_err(|_| bad("bad order"))?;
            let bytes = STANDARD.decode(get("table")?).map_err(|_| bad("bad base64"))?;
            if bytes.len() != 2 * order * order {
                return Err(bad("table size does not match order"));
            }
            let entries: Vec<usize> = bytes
                .chunks(2)
                .map(|b| u16::from_le_bytes([b[0], b[1]]) as usize)
                .collect();
            let rows = entries.chunks(order.max(1)).map(<[usize]>::to_vec).collect();
            let mut group = FiniteGroup::from_table(rows)?;
            match get("mark")? {
                "none" => {}
                list => {
                    let mark = list
                        .split(',')
                        .map(|x| x.parse::<u32>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| bad("bad mark"))?;
                    group = group.with_mark(mark)?;
                }
            }
            let class = QuotientClass::new(group);
            if class.fingerprint != get("fingerprint")? {
                return Err(bad("fingerprint does not match table"));
            }
            classes.push(class);
        }
        Ok(Self { bound, paired, classes })
    }
}

impl fmt::Display for QuotientSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.classes {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    /// A class present only on one side.
    Witness {
        only_in: Side,
        class: QuotientClass,
    },
}

/// Finite quotients of index at most `bound`, up to isomorphism (of pairs,
/// when `paired`).
pub fn quotient_set(p: &Presentation, bound: usize, paired: bool, budget: &Budget) -> Result<QuotientSet> {
    if paired && p.peripheral_marks().is_empty() {
        return Err(QuotientError::MissingMark);
    }
    let groups = low_index_normal_quotients(p, bound, budget)?
        .into_iter()
        .map(|q| q.group)
        .collect();
    QuotientSet::from_groups(bound, paired, groups)
}

pub fn compare_quotient_sets(
    p: &Presentation,
    q: &Presentation,
    bound: usize,
    paired: bool,
    budget: &Budget,
) -> Result<Comparison> {
    let a = quotient_set(p, bound, paired, budget)?;
    let b = quotient_set(q, bound, paired, budget)?;
    Ok(a.compare(&b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(text: &str, n: usize) -> QuotientSet {
        quotient_set(&Presentation::parse(text).unwrap(), n, false, &Budget::default()).unwrap()
    }

    #[test]
    fn cyclic_six_has_four_classes() {
        let s = set("<a | a^6>", 6);
        assert_eq!(s.orders(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn free_group_small_bound() {
        assert_eq!(set("<a, b | >", 2).orders(), vec![1, 2]);
        // index 4 adds Z/3, Z/4 and Z/2 x Z/2
        assert_eq!(set("<a, b | >", 4).orders(), vec![1, 2, 3, 4, 4]);
    }

    #[test]
    fn witness_for_different_cyclic_groups() {
        let p = Presentation::parse("<a | a^2>").unwrap();
        let q = Presentation::parse("<a | a^3>").unwrap();
        match compare_quotient_sets(&p, &q, 3, false, &Budget::default()).unwrap() {
            Comparison::Witness { only_in, class } => {
                assert_eq!(only_in, Side::First);
                assert_eq!(class.group.order(), 2);
            }
            Comparison::Equal => panic!("sets differ"),
        }
        assert_eq!(
            compare_quotient_sets(&p, &p, 3, false, &Budget::default()).unwrap(),
            Comparison::Equal
        );
    }

    #[test]
    fn serialization_round_trip() {
        let s = set("<a, b | a^3, b^2, a b a b>", 6);
        let text = s.to_string();
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().all(|l| l.starts_with("order=")));
        let back = QuotientSet::parse(6, false, &text).unwrap();
        assert_eq!(back, s);
        assert!(QuotientSet::parse(6, false, "order=2 table=AAA mark=none").is_err());
    }

    #[test]
    fn paired_needs_marks() {
        let p = Presentation::parse("<a | a^2>").unwrap();
        assert_eq!(
            quotient_set(&p, 2, true, &Budget::default()),
            Err(QuotientError::MissingMark)
        );
    }
}
