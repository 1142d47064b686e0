//! Randomized identities between independent solvers.

use heapable::hammersley::{run_process_on, run_trial, trial_intervals};
use heapable::kwidth::k_width;
use heapable::oracle::{max_clique_intervals, oracle_k_width, oracle_max_heapable, oracle_width_antichain};
use heapable::random::{
    random_distinct_boxes, random_distinct_intervals, random_intervals, random_permutation, random_poset,
};
use heapable::{
    greedy_max_heapable_subset, greedy_partition_permutation, greedy_partition_sequence, greedy_partition_set,
    sweep_partition, verify_forest, Arity, HeapForest, Poset, SimConfig, SimMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Report {
    pub lines: Vec<String>,
    pub mismatches: usize,
}

struct Tally {
    name: &'static str,
    checked: usize,
    failed: usize,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checked: 0,
            failed: 0,
        }
    }

    fn check(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
        }
    }
}

/// A greedy count agrees with flow and its forest is a valid witness.
fn agrees(poset: &Poset, count: usize, forest: &HeapForest, k: Arity) -> bool {
    count == k_width(poset, k).count && verify_forest(poset, forest, k).unwrap_or(false)
}

pub fn run(trials: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq = Tally::new("intervals-seq == flow");
    let mut set = Tally::new("intervals-set == flow");
    let mut perm = Tally::new("permutation == flow");
    let mut boxes = Tally::new("trapezoid == flow");
    let mut maxheap = Tally::new("max-heapable == oracle");
    let mut flow = Tally::new("flow == oracle");
    let mut dilworth = Tally::new("flow k=1 == antichain oracle");
    let mut gallai = Tally::new("intervals-set k=1 == clique");
    let mut process = Tally::new("process == intervals-seq");
    let mut sorted = Tally::new("sorted-set process == intervals-set");
    for trial in 0..trials {
        let k = Arity::new(rng.gen_range(1..=3)).expect("positive");
        let n = rng.gen_range(0..=30);

        let items = random_intervals(&mut rng, n);
        let g = greedy_partition_sequence(&items, k);
        seq.check(agrees(&Poset::from_interval_sequence(&items), g.count, &g.forest, k));
        let g = greedy_partition_set(&items, k);
        set.check(agrees(&Poset::from_interval_set(&items), g.count, &g.forest, k));

        let p = random_permutation(&mut rng, n);
        let g = greedy_partition_permutation(&p, k).expect("permutation");
        perm.check(agrees(
            &Poset::from_permutation(&p).expect("permutation"),
            g.count,
            &g.forest,
            k,
        ));

        let b = random_distinct_boxes(&mut rng, n);
        let s = sweep_partition(&b, k);
        boxes.check(agrees(&Poset::from_box_set(&b), s.count, &s.forest, k));

        let n_heap = rng.gen_range(0..=9);
        let small = random_intervals(&mut rng, n_heap);
        let m = greedy_max_heapable_subset(&small, k);
        maxheap.check(oracle_max_heapable(&small, k).is_ok_and(|best| best == m.subset.len()));

        let n_small = rng.gen_range(1..=7);
        let density = rng.gen_range(0.1..0.8);
        let q = random_poset(&mut rng, n_small, density);
        flow.check(oracle_k_width(&q, k).is_ok_and(|best| best == k_width(&q, k).count));
        dilworth.check(oracle_width_antichain(&q).is_ok_and(|w| w == k_width(&q, Arity::new(1).unwrap()).count));

        let n_distinct = rng.gen_range(1..=30);
        let distinct = random_distinct_intervals(&mut rng, n_distinct);
        gallai.check(greedy_partition_set(&distinct, Arity::new(1).unwrap()).count == max_clique_intervals(&distinct));

        let config = SimConfig {
            n: 200,
            k,
            trials: 1,
            seed: seed.wrapping_add(trial as u64),
            mode: SimMode::Sequence,
        };
        let floats = trial_intervals(&config, 0);
        let expected = greedy_partition_sequence(&floats, k).count;
        process.check(run_process_on(&floats, k).count == expected && run_trial(&config, 0) == expected);
        let config = SimConfig {
            mode: SimMode::SortedSet,
            ..config
        };
        sorted.check(run_trial(&config, 0) == greedy_partition_set(&floats, k).count);
    }
    let tallies = [seq, set, perm, boxes, maxheap, flow, dilworth, gallai, process, sorted];
    Report {
        lines: tallies
            .iter()
            .map(|t| format!("{}: {} checked, {} mismatches", t.name, t.checked, t.failed))
            .collect(),
        mismatches: tallies.iter().map(|t| t.failed).sum(),
    }
}
