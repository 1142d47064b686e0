//! Randomized trial runners for the slot-domination lemmas.
//!
//! All slot values are integers, so comparisons are exact. Each runner
//! returns a [`LemmaReport`] with the first counterexample it met.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::greedy::{greedy_partition_in_order, insert_interval, InsertPolicy, SlotMultiset};
use crate::poset::{compare_total, Arity, Interval};

/// Which pairs of multisets a trial may compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Any pair allowed by the domination definition, lengths may differ.
    Full,
    /// Only pairs whose signatures have the same length.
    EqualLength,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub trials: usize,
    pub violations: usize,
    pub first: Option<String>,
}

impl LemmaReport {
    fn new() -> Self {
        LemmaReport {
            trials: 0,
            violations: 0,
            first: None,
        }
    }

    fn record(&mut self, ok: bool, example: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(example());
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} violations", self.violations, self.trials)?;
        if let Some(e) = &self.first {
            write!(f, "; first: {e}")?;
        }
        Ok(())
    }
}

const MAX_VALUE: i64 = 24;

fn random_interval(rng: &mut ChaCha8Rng, max: i64) -> Interval<i64> {
    let (a, b) = (rng.gen_range(0..=max), rng.gen_range(0..=max));
    Interval::new(a.min(b), a.max(b)).expect("ordered")
}

/// A random pair `A ⪯ B`: A lowers a prefix of B's sorted values (all of
/// them under [`Scope::EqualLength`]).
fn dominated_pair(rng: &mut ChaCha8Rng, scope: Scope) -> (SlotMultiset<i64>, SlotMultiset<i64>) {
    let len = rng.gen_range(0..10);
    let mut b: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=MAX_VALUE)).collect();
    b.sort();
    let keep = match scope {
        Scope::Full => rng.gen_range(0..=len),
        Scope::EqualLength => len,
    };
    let a: Vec<i64> = b[..keep].iter().map(|&v| v - rng.gen_range(0..=4).min(v)).collect();
    (SlotMultiset::from_values(a), SlotMultiset::from_values(b))
}

fn random_arity(rng: &mut ChaCha8Rng) -> Arity {
    Arity::new(rng.gen_range(1..=3)).expect("positive")
}

/// Insertion preserves domination: best fit into A, a random compatible
/// slot of B. Draws where B has no compatible slot are redrawn, since no
/// slot choice exists for B.
pub fn best_fit_domination_trials(trials: usize, seed: u64, scope: Scope) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LemmaReport::new();
    while report.trials < trials {
        let (mut a, mut b) = dominated_pair(&mut rng, scope);
        let k = random_arity(&mut rng);
        let item = random_interval(&mut rng, MAX_VALUE);
        let compatible: Vec<i64> = b.values().filter(|&v| v <= item.left).collect();
        let Some(&slot) = compatible.choose(&mut rng) else {
            continue;
        };
        let (sa, sb) = (a.signature(), b.signature());
        insert_interval(&mut a, usize::MAX, &item, k, InsertPolicy::BestFit).expect("best fit");
        insert_interval(&mut b, usize::MAX, &item, k, InsertPolicy::ChooseSlot(slot)).expect("compatible");
        let (ta, tb) = (a.signature(), b.signature());
        report.record(ta.dominates(&tb), || {
            format!(
                "A={:?} B={:?} k={k} item=[{},{}] slot={slot}: {:?} vs {:?}",
                sa.0, sb.0, item.left, item.right, ta.0, tb.0
            )
        });
    }
    report
}

/// New-chain agreement: if no slot of A fits an interval, none of B does.
pub fn new_chain_trials(trials: usize, seed: u64, scope: Scope) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LemmaReport::new();
    while report.trials < trials {
        let (a, b) = dominated_pair(&mut rng, scope);
        let left = rng.gen_range(0..=MAX_VALUE);
        if a.best_fit(left, false).is_some() {
            continue;
        }
        report.record(b.min().is_none_or(|m| m > left), || {
            format!("A={:?} B={:?} left={left}", a.signature().0, b.signature().0)
        });
    }
    report
}

/// Deleting a larger slot leaves a dominating multiset.
pub fn deletion_trials(trials: usize, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LemmaReport::new();
    while report.trials < trials {
        let len = rng.gen_range(1..10);
        let values: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=15)).collect();
        let s1 = *values.choose(&mut rng).expect("nonempty");
        let smaller: Vec<i64> = values.iter().copied().filter(|&v| v <= s1).collect();
        let s2 = *smaller.choose(&mut rng).expect("contains s1");
        let mut without_s1 = SlotMultiset::from_values(values.clone());
        let mut without_s2 = SlotMultiset::from_values(values.clone());
        without_s1.remove_value(s1);
        without_s2.remove_value(s2);
        report.record(without_s1.signature().dominates(&without_s2.signature()), || {
            format!("S={values:?} s1={s1} s2={s2}")
        });
    }
    report
}

/// A random list with a ⊑-ordered adjacent pair at `r, r + 1`, and the
/// same list with that pair swapped.
struct Adjacent {
    items: Vec<Interval<i64>>,
    order: Vec<usize>,
    swapped: Vec<usize>,
    k: Arity,
    r: usize,
}

impl Adjacent {
    fn random(rng: &mut ChaCha8Rng) -> Self {
        let n = rng.gen_range(2..=12);
        let items: Vec<_> = (0..n).map(|_| random_interval(rng, 20)).collect();
        let k = random_arity(rng);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let r = rng.gen_range(0..n - 1);
        if compare_total(&items[order[r]], &items[order[r + 1]]).is_gt() {
            order.swap(r, r + 1);
        }
        let mut swapped = order.clone();
        swapped.swap(r, r + 1);
        Adjacent {
            items,
            order,
            swapped,
            k,
            r,
        }
    }
}

/// Adjacent transposition: on a random list whose items at `r, r + 1` are
/// in ⊑ order, best fit on that order dominates best fit on the swapped
/// order. Under [`Scope::EqualLength`] only runs ending with the same
/// number of slots (equivalently, chains) are compared.
pub fn transposition_trials(trials: usize, seed: u64, scope: Scope) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LemmaReport::new();
    while report.trials < trials {
        let Adjacent {
            items,
            order,
            swapped,
            k,
            r,
        } = Adjacent::random(&mut rng);
        let sorted = greedy_partition_in_order(&items, &order, k).slots.signature();
        let other = greedy_partition_in_order(&items, &swapped, k).slots.signature();
        if scope == Scope::EqualLength && sorted.len() != other.len() {
            continue;
        }
        report.record(sorted.dominates(&other), || {
            let list: Vec<String> = order
                .iter()
                .map(|&i| format!("[{},{}]", items[i].left, items[i].right))
                .collect();
            format!("{} k={k} r={r}: {:?} vs {:?}", list.join(" "), sorted.0, other.0)
        });
    }
    report
}

/// Chain counts under adjacent transposition: the ⊑ order never needs more.
pub fn transposition_count_trials(trials: usize, seed: u64) -> LemmaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LemmaReport::new();
    while report.trials < trials {
        let Adjacent {
            items,
            order,
            swapped,
            k,
            r,
        } = Adjacent::random(&mut rng);
        let a = greedy_partition_in_order(&items, &order, k).count;
        let b = greedy_partition_in_order(&items, &swapped, k).count;
        report.record(a <= b, || format!("{items:?} order={order:?} r={r}: {a} vs {b}"));
    }
    report
}
