//! Greedy best-fit slot algorithms.
//!
//! Inserting an interval into a k-ary chain creates `k` single-use slots
//! valued at its right endpoint. A later interval `[l, r]` is compatible
//! with a slot of value `s` when `s <= l`; best fit consumes the largest
//! compatible slot and otherwise opens a new chain.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Bound;

use crate::error::{Error, Result};
use crate::poset::{inverse_permutation, total_order_permutation, Arity, HeapForest, Interval};
use crate::scalar::{le, Key, Scalar};

/// Multiset of slot values, each copy tagged with the element that owns it.
#[derive(Clone, Debug)]
pub struct SlotMultiset<T> {
    slots: BTreeMap<(Key<T>, usize), usize>,
    len: usize,
}

impl<T: Scalar> PartialEq for SlotMultiset<T> {
    fn eq(&self, other: &Self) -> bool {
        self.slots == other.slots
    }
}

impl<T: Scalar> Default for SlotMultiset<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> SlotMultiset<T> {
    pub fn new() -> Self {
        SlotMultiset {
            slots: BTreeMap::new(),
            len: 0,
        }
    }

    /// One copy per value, owner `i` for the `i`-th value.
    pub fn from_values(values: impl IntoIterator<Item = T>) -> Self {
        let mut s = Self::new();
        for (owner, v) in values.into_iter().enumerate() {
            s.add(v, owner, 1);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn add(&mut self, value: T, owner: usize, copies: usize) {
        if copies == 0 {
            return;
        }
        *self.slots.entry((Key(value), owner)).or_insert(0) += copies;
        self.len += copies;
    }

    /// Removes one copy owned by `owner`; false if there is none.
    pub fn take(&mut self, value: T, owner: usize) -> bool {
        let key = (Key(value), owner);
        match self.slots.get_mut(&key) {
            None => false,
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.slots.remove(&key);
                }
                self.len -= 1;
                true
            }
        }
    }

    /// Removes one copy of `value` (lowest owner); false if absent.
    pub fn remove_value(&mut self, value: T) -> bool {
        match self.lowest_owner(value) {
            Some(owner) => self.take(value, owner),
            None => false,
        }
    }

    pub fn contains(&self, value: T) -> bool {
        self.lowest_owner(value).is_some()
    }

    /// Lowest owner id holding a copy of exactly `value`.
    pub fn lowest_owner(&self, value: T) -> Option<usize> {
        self.slots
            .range((Key(value), 0)..=(Key(value), usize::MAX))
            .next()
            .map(|(&(_, owner), _)| owner)
    }

    /// Largest slot value `<= bound` (or `< bound` when `strict`), with the
    /// lowest owner among copies of that value.
    pub fn best_fit(&self, bound: T, strict: bool) -> Option<(T, usize)> {
        let upper = if strict {
            Bound::Excluded((Key(bound), 0))
        } else {
            Bound::Included((Key(bound), usize::MAX))
        };
        let (&(Key(value), _), _) = self.slots.range((Bound::Unbounded, upper)).next_back()?;
        self.lowest_owner(value).map(|owner| (value, owner))
    }

    pub fn min(&self) -> Option<T> {
        self.slots.keys().next().map(|(Key(v), _)| *v)
    }

    /// Slot values with multiplicity, ascending.
    pub fn values(&self) -> impl Iterator<Item = T> + '_ {
        self.slots
            .iter()
            .flat_map(|(&(Key(v), _), &c)| std::iter::repeat_n(v, c))
    }

    pub fn signature(&self) -> Signature<T> {
        Signature(self.values().collect())
    }
}

/// Slot values sorted ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct Signature<T>(pub Vec<T>);

impl<T: Scalar> Signature<T> {
    pub fn from_unsorted(mut values: Vec<T>) -> Self {
        values.sort_by(|a, b| a.total_cmp(b));
        Signature(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ⪯ other`: no longer than `other` and pointwise no larger on
    /// the common prefix.
    pub fn dominates(&self, other: &Signature<T>) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(&a, &b)| le(a, b))
    }
}

pub fn signature<T: Scalar>(slots: &SlotMultiset<T>) -> Signature<T> {
    slots.signature()
}

pub fn dominates<T: Scalar>(a: &Signature<T>, b: &Signature<T>) -> bool {
    a.dominates(b)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SlotEvent<T> {
    NewChain,
    Attached { parent: usize, slot: T },
    Rejected,
}

impl<T: fmt::Display> fmt::Display for SlotEvent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlotEvent::NewChain => write!(f, "new-chain"),
            SlotEvent::Attached { parent, slot } => write!(f, "attached parent={parent} slot={slot}"),
            SlotEvent::Rejected => write!(f, "rejected"),
        }
    }
}

/// One event per processed item, in processing order.
#[derive(Clone, Debug, PartialEq)]
pub struct GreedyTrace<T> {
    pub steps: Vec<(usize, SlotEvent<T>)>,
}

impl<T> Default for GreedyTrace<T> {
    fn default() -> Self {
        GreedyTrace { steps: Vec::new() }
    }
}

impl<T: fmt::Display> fmt::Display for GreedyTrace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (item, event) in &self.steps {
            writeln!(f, "item={item} {event}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InsertPolicy<T> {
    BestFit,
    /// Consume a copy of exactly this slot value.
    ChooseSlot(T),
}

/// Inserts interval `item` (element `id`) into `slots`.
///
/// A compatible slot is consumed according to `policy`; with none
/// available the item opens a new chain. Either way `k` copies of the
/// right endpoint are added, owned by `id`.
pub fn insert_interval<T: Scalar>(
    slots: &mut SlotMultiset<T>,
    id: usize,
    item: &Interval<T>,
    k: Arity,
    policy: InsertPolicy<T>,
) -> Result<SlotEvent<T>> {
    let event = match policy {
        InsertPolicy::BestFit => match slots.best_fit(item.left, false) {
            Some((slot, parent)) => {
                slots.take(slot, parent);
                SlotEvent::Attached { parent, slot }
            }
            None => SlotEvent::NewChain,
        },
        InsertPolicy::ChooseSlot(slot) => {
            let parent = slots
                .lowest_owner(slot)
                .filter(|_| le(slot, item.left))
                .ok_or_else(|| Error::IncompatibleChoice(slot.to_string()))?;
            slots.take(slot, parent);
            SlotEvent::Attached { parent, slot }
        }
    };
    slots.add(item.right, id, k.get());
    Ok(event)
}

/// Output of the greedy partition algorithms.
#[derive(Clone, Debug)]
pub struct GreedyPartition<T> {
    pub count: usize,
    pub forest: HeapForest,
    pub trace: GreedyTrace<T>,
    pub slots: SlotMultiset<T>,
}

fn best_fit_partition<T: Scalar>(items: &[Interval<T>], order: &[usize], k: Arity) -> GreedyPartition<T> {
    let mut slots = SlotMultiset::new();
    let mut parent = vec![None; items.len()];
    let mut trace = GreedyTrace::default();
    let mut count = 0;
    for &id in order {
        let event =
            insert_interval(&mut slots, id, &items[id], k, InsertPolicy::BestFit).expect("best fit never names a slot");
        match event {
            SlotEvent::Attached { parent: p, .. } => parent[id] = Some(p),
            _ => count += 1,
        }
        trace.steps.push((id, event));
    }
    GreedyPartition {
        count,
        forest: HeapForest::from_parents(parent),
        trace,
        slots,
    }
}

/// Minimum partition of an interval sequence into k-ary chains; a parent
/// always occurs earlier in the sequence than its children.
pub fn greedy_partition_sequence<T: Scalar>(items: &[Interval<T>], k: Arity) -> GreedyPartition<T> {
    let order: Vec<usize> = (0..items.len()).collect();
    best_fit_partition(items, &order, k)
}

/// Minimum partition of an interval set: best fit over the items sorted by
/// right endpoint, then left endpoint, then input index. Forest ids refer
/// to input positions.
pub fn greedy_partition_set<T: Scalar>(items: &[Interval<T>], k: Arity) -> GreedyPartition<T> {
    best_fit_partition(items, &total_order_permutation(items), k)
}

/// Best fit in a caller-chosen processing order. Used for the ordering
/// lemmas, where non-sorted orders are compared against the sorted one.
pub fn greedy_partition_in_order<T: Scalar>(items: &[Interval<T>], order: &[usize], k: Arity) -> GreedyPartition<T> {
    best_fit_partition(items, order, k)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PermutationPartition {
    pub count: usize,
    /// Forest over permutation values.
    pub forest: HeapForest,
    /// One step per value, in permutation order.
    pub trace: GreedyTrace<usize>,
}

/// Partition of a permutation into k-heapable subsequences: each value
/// becomes a child of the largest earlier value below it that still has
/// a free slot.
pub fn greedy_partition_permutation(perm: &[usize], k: Arity) -> Result<PermutationPartition> {
    inverse_permutation(perm)?;
    let mut slots: SlotMultiset<usize> = SlotMultiset::new();
    let mut parent = vec![None; perm.len()];
    let mut trace = GreedyTrace::default();
    let mut count = 0;
    for &v in perm {
        let event = match slots.best_fit(v, true) {
            Some((slot, owner)) => {
                slots.take(slot, owner);
                parent[v] = Some(owner);
                SlotEvent::Attached { parent: owner, slot }
            }
            None => {
                count += 1;
                SlotEvent::NewChain
            }
        };
        slots.add(v, v, k.get());
        trace.steps.push((v, event));
    }
    Ok(PermutationPartition {
        count,
        forest: HeapForest::from_parents(parent),
        trace,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaxHeapable<T> {
    /// Selected input positions, ascending.
    pub subset: Vec<usize>,
    /// Single tree over `subset` positions: node `i` is `subset[i]`.
    pub forest: HeapForest,
    pub trace: GreedyTrace<T>,
}

/// Largest k-heapable subset of an interval set.
///
/// Items are taken in sorted order; the first becomes the root and later
/// items are attached by best fit or rejected when no slot fits.
pub fn greedy_max_heapable_subset<T: Scalar>(items: &[Interval<T>], k: Arity) -> MaxHeapable<T> {
    let mut slots = SlotMultiset::new();
    let mut parent = vec![None; items.len()];
    let mut chosen = vec![false; items.len()];
    let mut trace = GreedyTrace::default();
    for (step, id) in total_order_permutation(items).into_iter().enumerate() {
        let item = &items[id];
        let event = if step == 0 {
            slots.add(item.right, id, k.get());
            SlotEvent::NewChain
        } else {
            match slots.best_fit(item.left, false) {
                Some((slot, owner)) => {
                    slots.take(slot, owner);
                    slots.add(item.right, id, k.get());
                    parent[id] = Some(owner);
                    SlotEvent::Attached { parent: owner, slot }
                }
                None => SlotEvent::Rejected,
            }
        };
        if event != SlotEvent::Rejected {
            chosen[id] = true;
        }
        trace.steps.push((id, event));
    }
    let subset: Vec<usize> = (0..items.len()).filter(|&i| chosen[i]).collect();
    let mut local = vec![usize::MAX; items.len()];
    for (pos, &id) in subset.iter().enumerate() {
        local[id] = pos;
    }
    let forest = HeapForest::from_parents(subset.iter().map(|&id| parent[id].map(|p| local[p])).collect());
    MaxHeapable { subset, forest, trace }
}

/// Free-slot signature of every tree in `forest`, ordered by root id.
///
/// A node with `c` children contributes `k - c` copies of its right
/// endpoint.
pub fn forest_signatures<T: Scalar>(items: &[Interval<T>], forest: &HeapForest, k: Arity) -> Vec<Signature<T>> {
    let children = forest.children();
    forest
        .roots()
        .iter()
        .map(|&root| {
            let mut values = Vec::new();
            for v in forest.tree(root) {
                let free = k.get().saturating_sub(children[v].len());
                values.extend(std::iter::repeat_n(items[v].right, free));
            }
            Signature::from_unsorted(values)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{verify_forest, Poset};

    fn k(k: usize) -> Arity {
        Arity::new(k).unwrap()
    }

    fn iv(l: i64, r: i64) -> Interval<i64> {
        Interval::new(l, r).unwrap()
    }

    fn s1() -> Vec<Interval<i64>> {
        [
            (1, 7),
            (1, 11),
            (11, 12),
            (15, 16),
            (7, 9),
            (8, 16),
            (1, 2),
            (3, 19),
            (13, 17),
            (5, 7),
        ]
        .map(|(l, r)| iv(l, r))
        .to_vec()
    }

    #[test]
    fn insertion_examples() {
        let mut slots = SlotMultiset::new();
        let ev = insert_interval(&mut slots, 0, &iv(1, 7), k(2), InsertPolicy::BestFit).unwrap();
        assert_eq!(ev, SlotEvent::NewChain);
        assert_eq!(slots.signature().0, vec![7, 7]);
        let ev = insert_interval(&mut slots, 4, &iv(7, 9), k(2), InsertPolicy::BestFit).unwrap();
        assert_eq!(ev, SlotEvent::Attached { parent: 0, slot: 7 });
        assert_eq!(slots.signature().0, vec![7, 9, 9]);

        let mut slots = SlotMultiset::new();
        slots.add(2, 0, 2);
        let ev = insert_interval(&mut slots, 1, &iv(0, 5), k(2), InsertPolicy::BestFit).unwrap();
        assert_eq!(ev, SlotEvent::NewChain);
        assert_eq!(slots.signature().0, vec![2, 2, 5, 5]);
    }

    #[test]
    fn chosen_slot_must_exist_and_fit() {
        let mut slots = SlotMultiset::from_values([1, 4]);
        let bad = insert_interval(&mut slots, 9, &iv(3, 5), k(2), InsertPolicy::ChooseSlot(4));
        assert!(matches!(bad, Err(Error::IncompatibleChoice(_))));
        let absent = insert_interval(&mut slots, 9, &iv(3, 5), k(2), InsertPolicy::ChooseSlot(2));
        assert!(absent.is_err());
        assert_eq!(slots.len(), 2);
        let ok = insert_interval(&mut slots, 9, &iv(3, 5), k(2), InsertPolicy::ChooseSlot(1)).unwrap();
        assert_eq!(ok, SlotEvent::Attached { parent: 0, slot: 1 });
        assert_eq!(slots.signature().0, vec![4, 5, 5]);
    }

    #[test]
    fn best_fit_prefers_lowest_owner_among_equal_values() {
        let mut slots = SlotMultiset::new();
        slots.add(3, 5, 1);
        slots.add(3, 2, 2);
        slots.add(1, 0, 1);
        assert_eq!(slots.best_fit(3, false), Some((3, 2)));
        assert_eq!(slots.best_fit(3, true), Some((1, 0)));
        assert_eq!(slots.best_fit(0, false), None);
    }

    #[test]
    fn signatures_and_domination() {
        let h1 = Signature(vec![9, 9, 16, 16]);
        let h2 = Signature(vec![11, 16, 16, 17, 17]);
        let h3 = Signature(vec![7, 7, 19, 19]);
        assert!(h1.dominates(&h2));
        assert!(!h1.dominates(&h3));
        for (a, b) in [(&h2, &h1), (&h2, &h3), (&h3, &h1), (&h3, &h2)] {
            assert!(!a.dominates(b));
        }
        assert!(Signature::<i64>(vec![]).dominates(&h3));
        assert!(SlotMultiset::<i64>::new().signature().is_empty());
    }

    #[test]
    fn worked_sequence_example() {
        let items = s1();
        let out = greedy_partition_sequence(&items, k(2));
        assert_eq!(out.count, 3);
        assert_eq!(out.forest.roots(), &[0, 1, 6]);
        assert_eq!(out.forest.parent(8), Some(2));
        assert_eq!(out.forest.parent(3), Some(2));
        assert_eq!(out.forest.parent(2), Some(1));
        let sigs = forest_signatures(&items, &out.forest, k(2));
        assert_eq!(sigs[0].0, vec![9, 9, 16, 16]);
        assert_eq!(sigs[1].0, vec![11, 16, 16, 17, 17]);
        assert_eq!(sigs[2].0, vec![7, 7, 19, 19]);
        let p = Poset::from_interval_sequence(&items);
        assert!(verify_forest(&p, &out.forest, k(2)).unwrap());
        assert_eq!(out.trace.steps.len(), items.len());
    }

    #[test]
    fn simple_sequences() {
        let overlapping: Vec<_> = (0..5).map(|i| iv(i, 10 + i)).collect();
        assert_eq!(greedy_partition_sequence(&overlapping, k(3)).count, 5);
        let chain: Vec<_> = (0..5).map(|i| iv(2 * i, 2 * i + 1)).collect();
        assert_eq!(greedy_partition_sequence(&chain, k(1)).count, 1);
        assert_eq!(greedy_partition_sequence::<i64>(&[], k(1)).count, 0);
    }

    #[test]
    fn set_mode_sorts_first() {
        let out = greedy_partition_set(&[iv(2, 3), iv(0, 1)], k(1));
        assert_eq!(out.count, 1);
        assert_eq!(out.forest.parent(0), Some(1));
        let same = vec![iv(0, 1); 4];
        assert_eq!(greedy_partition_set(&same, k(2)).count, 4);
    }

    #[test]
    fn permutations() {
        let id: Vec<usize> = (0..6).collect();
        assert_eq!(greedy_partition_permutation(&id, k(2)).unwrap().count, 1);
        let rev: Vec<usize> = (0..6).rev().collect();
        assert_eq!(greedy_partition_permutation(&rev, k(3)).unwrap().count, 6);
        let out = greedy_partition_permutation(&[1, 2, 0, 3], k(2)).unwrap();
        assert_eq!(out.count, 2);
        let p = Poset::from_permutation(&[1, 2, 0, 3]).unwrap();
        assert!(verify_forest(&p, &out.forest, k(2)).unwrap());
        assert_eq!(
            greedy_partition_permutation(&[1, 1], k(2)),
            Err(Error::NotAPermutation(2))
        );
    }

    #[test]
    fn max_heapable_examples() {
        let items = [iv(1, 2), iv(3, 4), iv(5, 6), iv(0, 10)];
        let out = greedy_max_heapable_subset(&items, k(2));
        assert_eq!(out.subset, vec![0, 1, 2]);
        assert_eq!(out.forest.chain_count(), 1);
        assert!(out.trace.steps.contains(&(3, SlotEvent::Rejected)));
        let overlapping: Vec<_> = (0..5).map(|i| iv(i, 10 + i)).collect();
        assert_eq!(greedy_max_heapable_subset(&overlapping, k(2)).subset.len(), 1);
        let chain: Vec<_> = (0..5).map(|i| iv(2 * i, 2 * i + 1)).collect();
        assert_eq!(greedy_max_heapable_subset(&chain, k(1)).subset.len(), 5);
        assert!(greedy_max_heapable_subset::<i64>(&[], k(1)).subset.is_empty());
    }

    #[test]
    fn trace_lines() {
        let out = greedy_partition_sequence(&[iv(0, 1), iv(1, 2)], k(1));
        assert_eq!(
            out.trace.to_string(),
            "item=0 new-chain\nitem=1 attached parent=0 slot=1\n"
        );
    }
}
