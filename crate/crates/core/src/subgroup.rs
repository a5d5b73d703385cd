//! Subgroups, normalizers, cosets and the basic coset lemmas.

use std::collections::HashSet;

use serde::Serialize;

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable};
use crate::set::ElemSet;

/// Default bound on `|G|` for [`all_subgroups`].
pub const SUBGROUP_ENUMERATION_CAP: usize = 64;

/// A subgroup, stored as its element set. Always contains the identity and
/// is closed under products and inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Subgroup {
    elements: ElemSet,
}

impl Subgroup {
    /// Validates that `set` is a subgroup of `g`.
    pub fn from_set(g: &GroupTable, set: ElemSet) -> Result<Self> {
        ensure_universe(g, &set)?;
        if !set.contains(ElementId::IDENTITY) {
            return Err(Error::NotASubgroup(format!("{set} does not contain the identity")));
        }
        for x in set.indices() {
            if !set.contains_index(g.inv_index(x)) {
                return Err(Error::NotASubgroup(format!("{set} lacks the inverse of {x}")));
            }
            for y in set.indices() {
                let xy = g.mul_index(x, y);
                if !set.contains_index(xy) {
                    return Err(Error::NotASubgroup(format!("{set} lacks {x}*{y}={xy}")));
                }
            }
        }
        Ok(Self { elements: set })
    }

    pub(crate) fn from_set_unchecked(set: ElemSet) -> Self {
        Self { elements: set }
    }

    pub fn trivial(g: &GroupTable) -> Self {
        Self {
            elements: ElemSet::singleton(g.order(), ElementId::IDENTITY),
        }
    }

    pub fn whole(g: &GroupTable) -> Self {
        Self {
            elements: ElemSet::full(g.order()),
        }
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.elements.contains(x)
    }

    pub fn into_set(self) -> ElemSet {
        self.elements
    }
}

pub(crate) fn ensure_universe(g: &GroupTable, set: &ElemSet) -> Result<()> {
    if set.universe() == g.order() {
        Ok(())
    } else {
        Err(Error::UniverseMismatch {
            expected: g.order(),
            found: set.universe(),
        })
    }
}

/// Smallest subgroup containing `s`; `⟨∅⟩ = {1}`.
pub fn generated_subgroup(g: &GroupTable, s: &ElemSet) -> Subgroup {
    assert_eq!(s.universe(), g.order(), "set universe does not match group");
    let gens: Vec<usize> = s.indices().filter(|&x| x != 0).collect();
    let mut elements = ElemSet::singleton(g.order(), ElementId::IDENTITY);
    let mut frontier = vec![0usize];
    // Closing {1} under right multiplication by generators reaches every
    // word in them; inverses are positive powers in a finite group.
    while let Some(x) = frontier.pop() {
        for &s in &gens {
            let y = g.mul_index(x, s);
            if elements.insert_index(y) {
                frontier.push(y);
            }
        }
    }
    Subgroup { elements }
}

/// True when `set` is closed under products and contains the identity.
pub fn is_subgroup(g: &GroupTable, set: &ElemSet) -> bool {
    set.contains(ElementId::IDENTITY)
        && set
            .indices()
            .all(|x| set.indices().all(|y| set.contains_index(g.mul_index(x, y))))
}

/// The complete subgroup list of a group, sorted by `(order, bitmask)`,
/// with each subgroup's normalizer alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupList {
    group_order: usize,
    subgroups: Vec<Subgroup>,
    normalizers: Vec<Subgroup>,
}

impl SubgroupList {
    /// Wraps a caller-supplied list after checking it is sorted, duplicate
    /// free, contains every cyclic subgroup and is closed under joins.
    pub fn from_vec(g: &GroupTable, subgroups: Vec<Subgroup>) -> Result<Self> {
        for h in &subgroups {
            ensure_universe(g, h.elements())?;
        }
        if !subgroups
            .windows(2)
            .all(|w| (w[0].order(), &w[0].elements) < (w[1].order(), &w[1].elements))
        {
            return Err(Error::IncompleteSubgroupList(
                "not strictly sorted by (order, bitmask)".into(),
            ));
        }
        let present: HashSet<&ElemSet> = subgroups.iter().map(|h| h.elements()).collect();
        for x in g.elements() {
            let c = generated_subgroup(g, &ElemSet::singleton(g.order(), x));
            if !present.contains(c.elements()) {
                return Err(Error::IncompleteSubgroupList(format!(
                    "missing cyclic subgroup {}",
                    c.elements()
                )));
            }
        }
        for (i, h) in subgroups.iter().enumerate() {
            for k in &subgroups[i + 1..] {
                let j = generated_subgroup(g, &h.elements().union(k.elements()));
                if !present.contains(j.elements()) {
                    return Err(Error::IncompleteSubgroupList(format!(
                        "missing join {}",
                        j.elements()
                    )));
                }
            }
        }
        Ok(Self::assemble(g, subgroups))
    }

    fn assemble(g: &GroupTable, subgroups: Vec<Subgroup>) -> Self {
        let normalizers = subgroups.iter().map(|h| normalizer_of(g, h)).collect();
        Self {
            group_order: g.order(),
            subgroups,
            normalizers,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn normalizer(&self, i: usize) -> &Subgroup {
        &self.normalizers[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter()
    }

    pub fn as_slice(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Position of `h` in the list.
    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.subgroups
            .binary_search_by(|k| (k.order(), k.elements()).cmp(&(h.order(), h.elements())))
            .ok()
    }
}

/// Every subgroup of `g`, using the default cap.
pub fn all_subgroups(g: &GroupTable) -> Result<SubgroupList> {
    all_subgroups_with_cap(g, SUBGROUP_ENUMERATION_CAP)
}

/// Every subgroup of `g`: the cyclic subgroups closed under joins until
/// nothing new appears.
pub fn all_subgroups_with_cap(g: &GroupTable, cap: usize) -> Result<SubgroupList> {
    if g.order() > cap {
        return Err(Error::OrderCap {
            order: g.order(),
            cap,
        });
    }
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut cyclic: Vec<ElemSet> = Vec::new();
    for x in g.elements() {
        let c = generated_subgroup(g, &ElemSet::singleton(g.order(), x)).into_set();
        if seen.insert(c.clone()) {
            cyclic.push(c);
        }
    }
    // Joining with cyclic subgroups only is enough: any join H∨K is reached
    // by adding the cyclic subgroups of K to H one at a time.
    let mut all: Vec<ElemSet> = cyclic.clone();
    let mut next = 0;
    while next < all.len() {
        let h = all[next].clone();
        next += 1;
        for c in &cyclic {
            if c.is_subset(&h) {
                continue;
            }
            let j = generated_subgroup(g, &h.union(c)).into_set();
            if seen.insert(j.clone()) {
                all.push(j);
            }
        }
    }
    let mut subgroups: Vec<Subgroup> = all.into_iter().map(Subgroup::from_set_unchecked).collect();
    subgroups.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    Ok(SubgroupList::assemble(g, subgroups))
}

pub fn left_coset(g: &GroupTable, h: &Subgroup, x: ElementId) -> ElemSet {
    let mut out = ElemSet::new(g.order());
    for k in h.elements.indices() {
        out.insert_index(g.mul_index(x.index(), k));
    }
    out
}

pub fn right_coset(g: &GroupTable, h: &Subgroup, x: ElementId) -> ElemSet {
    let mut out = ElemSet::new(g.order());
    for k in h.elements.indices() {
        out.insert_index(g.mul_index(k, x.index()));
    }
    out
}

/// `HxH`.
pub fn double_coset(g: &GroupTable, h: &Subgroup, x: ElementId) -> ElemSet {
    let xh = left_coset(g, h, x);
    let mut out = ElemSet::new(g.order());
    for k in h.elements.indices() {
        for y in xh.indices() {
            out.insert_index(g.mul_index(k, y));
        }
    }
    out
}

fn normalizer_of(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let mut n = ElemSet::new(g.order());
    for x in g.elements() {
        if left_coset(g, h, x) == right_coset(g, h, x) {
            n.insert(x);
        }
    }
    Subgroup::from_set_unchecked(n)
}

/// `N(H) = {x : xH = Hx}`.
pub fn normalizer(g: &GroupTable, h: &Subgroup) -> Result<Subgroup> {
    ensure_universe(g, h.elements())?;
    Ok(normalizer_of(g, h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    Double,
}

/// Partition of the group into cosets of one kind, blocks sorted by their
/// smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetPartition {
    pub side: Side,
    pub blocks: Vec<ElemSet>,
}

impl CosetPartition {
    /// Index of the block containing `x`.
    pub fn block_of(&self, x: ElementId) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(x))
            .expect("partition covers the group")
    }
}

pub fn coset_partition(g: &GroupTable, h: &Subgroup, side: Side) -> Result<CosetPartition> {
    ensure_universe(g, h.elements())?;
    let mut covered = ElemSet::new(g.order());
    let mut blocks = Vec::new();
    for x in g.elements() {
        if covered.contains(x) {
            continue;
        }
        let block = match side {
            Side::Left => left_coset(g, h, x),
            Side::Right => right_coset(g, h, x),
            Side::Double => double_coset(g, h, x),
        };
        covered = covered.union(&block);
        blocks.push(block);
    }
    Ok(CosetPartition { side, blocks })
}

/// Exhaustively checks the double-coset partition facts and the four basic
/// coset lemmas for `H` over all elements and element pairs of `g`:
///
/// * `left_right_intersection`: `aH = Hb` or `2|aH ∩ Hb| <= |H|`;
/// * `left_equals_right`: `aH = Hb` iff `a, b ∈ N(H)` and `aH = bH`;
/// * `index_two_extension`: for `x ∉ H`, `H ∪ xH` is a subgroup iff
///   `x ∈ N(H)` and `x² ∈ H` (the normalizer condition cannot be dropped:
///   in S3 a transposition outside an order-2 `H` squares into `H`, yet
///   `H ∪ xH` has four elements);
/// * `double_coset_size`: `|HxH| = |H|` iff `x ∈ N(H)`.
pub fn check_coset_lemmas(g: &GroupTable, h: &Subgroup) -> Result<CheckReport> {
    ensure_universe(g, h.elements())?;
    let n = g.order();
    let hn = h.order();
    let norm = normalizer_of(g, h);
    let left: Vec<ElemSet> = g.elements().map(|x| left_coset(g, h, x)).collect();
    let right: Vec<ElemSet> = g.elements().map(|x| right_coset(g, h, x)).collect();
    let mut report = CheckReport::new();

    let doubles = coset_partition(g, h, Side::Double)?;
    let mut partition_err = None;
    let mut union = ElemSet::new(n);
    for block in &doubles.blocks {
        if !union.is_disjoint(block) {
            partition_err = Some(format!("block {block} overlaps earlier blocks"));
            break;
        }
        union = union.union(block);
        let stable = block.indices().all(|x| left[x].is_subset(block) && right[x].is_subset(block));
        if !stable {
            partition_err = Some(format!("block {block} is not stable under H on both sides"));
            break;
        }
    }
    if partition_err.is_none() && union.len() != n {
        partition_err = Some("double cosets do not cover the group".into());
    }
    report.record("double_cosets_partition", partition_err.is_none(), || {
        partition_err.clone().unwrap()
    });

    let mut l2 = None;
    let mut l3 = None;
    for a in 0..n {
        for b in 0..n {
            let equal = left[a] == right[b];
            if l2.is_none() && !equal && 2 * left[a].intersection_len(&right[b]) > hn {
                l2 = Some((a, b));
            }
            let rhs = norm.elements.contains_index(a)
                && norm.elements.contains_index(b)
                && left[a] == left[b];
            if l3.is_none() && equal != rhs {
                l3 = Some((a, b, equal));
            }
        }
    }
    report.record("left_right_intersection", l2.is_none(), || {
        let (a, b) = l2.unwrap();
        format!(
            "a={a}, b={b}: aH != Hb but |aH ∩ Hb| = {} > |H|/2",
            left[a].intersection_len(&right[b])
        )
    });
    report.record("left_equals_right", l3.is_none(), || {
        let (a, b, eq) = l3.unwrap();
        format!("a={a}, b={b}: aH=Hb is {eq} but the normalizer criterion is {}", !eq)
    });

    let mut l4 = None;
    for (x, coset) in left.iter().enumerate() {
        if h.elements.contains_index(x) {
            continue;
        }
        let ext = h.elements.union(coset);
        let sq = g.mul_index(x, x);
        let expected = norm.contains(ElementId::new(x)) && h.elements.contains_index(sq);
        if is_subgroup(g, &ext) != expected {
            l4 = Some(x);
            break;
        }
    }
    report.record("index_two_extension", l4.is_none(), || {
        let x = l4.unwrap();
        format!(
            "x={x}: H ∪ xH subgroup disagrees with x ∈ N(H), x²={} ∈ H",
            g.mul_index(x, x)
        )
    });

    let mut l5 = None;
    for x in g.elements() {
        let size_eq = double_coset(g, h, x).len() == hn;
        if size_eq != norm.contains(x) {
            l5 = Some(x);
            break;
        }
    }
    report.record("double_coset_size", l5.is_none(), || {
        let x = l5.unwrap();
        format!("x={x}: |HxH|={} but x ∈ N(H) is {}", double_coset(g, h, x).len(), norm.contains(x))
    });

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn set(n: usize, ids: &[usize]) -> ElemSet {
        ElemSet::from_indices(n, ids.iter().copied()).unwrap()
    }

    #[test]
    fn generated_examples() {
        let c12 = build_group("cyclic 12").unwrap();
        assert_eq!(generated_subgroup(&c12, &set(12, &[8])).elements(), &set(12, &[0, 4, 8]));
        assert_eq!(generated_subgroup(&c12, &ElemSet::new(12)).order(), 1);

        let s3 = build_group("symmetric 3").unwrap();
        let transposition = (0..6).find(|&x| x != 0 && s3.inv_index(x) == x).unwrap();
        let three_cycle = (0..6).find(|&x| x != 0 && s3.inv_index(x) != x).unwrap();
        let whole = generated_subgroup(&s3, &set(6, &[transposition, three_cycle]));
        assert_eq!(whole.order(), 6);
    }

    #[test]
    fn subgroup_counts() {
        let c12 = build_group("cyclic 12").unwrap();
        let subs = all_subgroups(&c12).unwrap();
        let orders: Vec<usize> = subs.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 6, 12]);

        let s3 = build_group("symmetric 3").unwrap();
        let orders: Vec<usize> = all_subgroups(&s3).unwrap().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);

        let c1 = build_group("cyclic 1").unwrap();
        assert_eq!(all_subgroups(&c1).unwrap().len(), 1);
    }

    #[test]
    fn subgroup_cap() {
        let g = build_group("symmetric 5").unwrap();
        assert_eq!(
            all_subgroups(&g).unwrap_err(),
            Error::OrderCap { order: 120, cap: 64 }
        );
    }

    #[test]
    fn normalizers_in_s3() {
        let s3 = build_group("symmetric 3").unwrap();
        let subs = all_subgroups(&s3).unwrap();
        for (i, h) in subs.iter().enumerate() {
            let n = normalizer(&s3, h).unwrap();
            assert_eq!(&n, subs.normalizer(i));
            match h.order() {
                2 => assert_eq!(&n, h),
                3 => assert_eq!(n.order(), 6),
                _ => {}
            }
        }
        let c12 = build_group("cyclic 12").unwrap();
        let h = Subgroup::from_set(&c12, set(12, &[0, 6])).unwrap();
        assert_eq!(normalizer(&c12, &h).unwrap().order(), 12);
    }

    #[test]
    fn partitions() {
        let c12 = build_group("cyclic 12").unwrap();
        let h = Subgroup::from_set(&c12, set(12, &[0, 4, 8])).unwrap();
        let p = coset_partition(&c12, &h, Side::Left).unwrap();
        assert_eq!(p.blocks.len(), 4);
        assert!(p.blocks.iter().all(|b| b.len() == 3));

        let s3 = build_group("symmetric 3").unwrap();
        let subs = all_subgroups(&s3).unwrap();
        let h2 = subs.get(1);
        let d = coset_partition(&s3, h2, Side::Double).unwrap();
        let mut sizes: Vec<usize> = d.blocks.iter().map(ElemSet::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
        assert_eq!(&d.blocks[0], h2.elements());

        let whole = Subgroup::whole(&s3);
        assert_eq!(coset_partition(&s3, &whole, Side::Double).unwrap().blocks.len(), 1);
    }

    #[test]
    fn index_two_needs_normalizer() {
        let s3 = build_group("symmetric 3").unwrap();
        let subs = all_subgroups(&s3).unwrap();
        let h = subs.get(1);
        assert_eq!(h.order(), 2);
        let x = (0..6)
            .find(|&x| !h.elements().contains_index(x) && s3.mul_index(x, x) == 0)
            .unwrap();
        assert!(!normalizer_of(&s3, h).contains(ElementId::new(x)));
        assert_eq!(h.elements().union(&left_coset(&s3, h, ElementId::new(x))).len(), 4);
    }

    #[test]
    fn lemma_checks_examples() {
        let s3 = build_group("symmetric 3").unwrap();
        let subs = all_subgroups(&s3).unwrap();
        let r = check_coset_lemmas(&s3, subs.get(1)).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 5);

        // cyclic 10, H = {0,5}, x = 1: H ∪ xH is not a subgroup and 2 ∉ H.
        let c10 = build_group("cyclic 10").unwrap();
        let h = Subgroup::from_set(&c10, set(10, &[0, 5])).unwrap();
        let ext = h.elements().union(&left_coset(&c10, &h, ElementId::new(1)));
        assert!(!is_subgroup(&c10, &ext));
        assert!(!h.contains(c10.mul(ElementId::new(1), ElementId::new(1))));
        assert!(check_coset_lemmas(&c10, &h).unwrap().passed());

        // dihedral 4, rotations: every reflection normalizes and |HxH| = |H|.
        let d4 = build_group("dihedral 4").unwrap();
        let rot = Subgroup::from_set(&d4, set(8, &[0, 1, 2, 3])).unwrap();
        for x in 4..8 {
            let x = ElementId::new(x);
            assert_eq!(double_coset(&d4, &rot, x).len(), 4);
            assert!(normalizer(&d4, &rot).unwrap().contains(x));
        }
        assert!(check_coset_lemmas(&d4, &rot).unwrap().passed());
    }

    #[test]
    fn from_set_rejects_non_subgroups() {
        let c12 = build_group("cyclic 12").unwrap();
        assert!(matches!(
            Subgroup::from_set(&c12, set(12, &[0, 1])),
            Err(Error::NotASubgroup(_))
        ));
        assert!(matches!(
            Subgroup::from_set(&c12, set(12, &[4, 8])),
            Err(Error::NotASubgroup(_))
        ));
        assert!(matches!(
            Subgroup::from_set(&c12, set(6, &[0])),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn subgroup_list_validation() {
        let c12 = build_group("cyclic 12").unwrap();
        let full = all_subgroups(&c12).unwrap();
        assert_eq!(SubgroupList::from_vec(&c12, full.as_slice().to_vec()).unwrap(), full);
        let mut missing = full.as_slice().to_vec();
        missing.remove(3);
        assert!(matches!(
            SubgroupList::from_vec(&c12, missing),
            Err(Error::IncompleteSubgroupList(_))
        ));
        let mut unsorted = full.as_slice().to_vec();
        unsorted.swap(0, 1);
        assert!(SubgroupList::from_vec(&c12, unsorted).is_err());
        assert_eq!(full.position(full.get(4)), Some(4));
    }
}
