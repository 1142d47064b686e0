//! Slot-domination lemmas. The insertion and transposition lemmas hold
//! when the compared multisets have equal length; pairs of different
//! length admit counterexamples, pinned below.

use heapable::greedy::{greedy_partition_in_order, insert_interval, InsertPolicy, SlotMultiset};
use heapable::lemmas::{
    best_fit_domination_trials, deletion_trials, new_chain_trials, transposition_count_trials, transposition_trials,
    Scope,
};
use heapable::{Arity, Interval};

const TRIALS: usize = 10_000;

#[test]
fn best_fit_preserves_equal_length_domination() {
    let r = best_fit_domination_trials(TRIALS, 1, Scope::EqualLength);
    assert!(r.holds(), "{r}");
}

#[test]
fn best_fit_can_break_domination_of_a_shorter_multiset() {
    let k = Arity::new(1).unwrap();
    let mut a = SlotMultiset::from_values([3]);
    let mut b = SlotMultiset::from_values([3, 6]);
    assert!(a.signature().dominates(&b.signature()));
    let item = Interval::new(3, 10).unwrap();
    insert_interval(&mut a, 9, &item, k, InsertPolicy::BestFit).unwrap();
    insert_interval(&mut b, 9, &item, k, InsertPolicy::ChooseSlot(3)).unwrap();
    assert_eq!(a.signature().0, vec![10]);
    assert_eq!(b.signature().0, vec![6, 10]);
    assert!(!a.signature().dominates(&b.signature()));
}

#[test]
fn full_scope_insertion_violations_are_found() {
    let r = best_fit_domination_trials(TRIALS, 1, Scope::Full);
    assert!(!r.holds());
}

#[test]
fn new_chains_are_forced_under_equal_length_domination() {
    let r = new_chain_trials(TRIALS, 2, Scope::EqualLength);
    assert!(r.holds(), "{r}");
}

#[test]
fn an_empty_multiset_forces_nothing() {
    let r = new_chain_trials(TRIALS, 2, Scope::Full);
    let example = r.first.expect("empty A against nonempty B");
    assert!(example.starts_with("A=[]"), "{example}");
}

#[test]
fn deleting_a_larger_slot_dominates() {
    let r = deletion_trials(TRIALS, 3);
    assert!(r.holds(), "{r}");
}

#[test]
fn transposition_preserves_equal_length_domination() {
    let r = transposition_trials(TRIALS, 5, Scope::EqualLength);
    assert!(r.holds(), "{r}");
}

#[test]
fn transposition_can_break_pointwise_domination() {
    // [0,1] then [1,2] leaves {2}; the swapped order leaves {1, 2}.
    let k = Arity::new(1).unwrap();
    let items = [Interval::new(0, 1).unwrap(), Interval::new(1, 2).unwrap()];
    let sorted = greedy_partition_in_order(&items, &[0, 1], k);
    let swapped = greedy_partition_in_order(&items, &[1, 0], k);
    assert_eq!(sorted.slots.signature().0, vec![2]);
    assert_eq!(swapped.slots.signature().0, vec![1, 2]);
    assert!(!sorted.slots.signature().dominates(&swapped.slots.signature()));
    assert!(sorted.count < swapped.count);
}

#[test]
fn transposition_never_increases_chain_count() {
    let r = transposition_count_trials(TRIALS, 4);
    assert!(r.holds(), "{r}");
}
