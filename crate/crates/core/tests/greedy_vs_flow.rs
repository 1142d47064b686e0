use heapable::greedy::{
    greedy_max_heapable_subset, greedy_partition_permutation, greedy_partition_sequence, greedy_partition_set,
};
use heapable::kwidth::k_width;
use heapable::oracle::{max_clique_intervals, oracle_max_heapable};
use heapable::random::{
    random_distinct_boxes, random_distinct_intervals, random_grid_boxes, random_intervals, random_permutation,
};
use heapable::sweep::sweep_partition;
use heapable::{verify_forest, Arity, Interval, Poset, SlotEvent};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn k(k: usize) -> Arity {
    Arity::new(k).unwrap()
}

#[test]
fn sequence_greedy_is_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for _ in 0..250 {
        let n = rng.gen_range(0..=40);
        let items = random_intervals(&mut rng, n);
        let poset = Poset::from_interval_sequence(&items);
        for kk in 1..=3 {
            let g = greedy_partition_sequence(&items, k(kk));
            assert_eq!(g.count, k_width(&poset, k(kk)).count, "{items:?} k={kk}");
            assert!(verify_forest(&poset, &g.forest, k(kk)).unwrap());
            assert_eq!(g.forest.chain_count(), g.count);
        }
    }
}

#[test]
fn set_greedy_is_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..250 {
        let n = rng.gen_range(0..=40);
        let items = random_intervals(&mut rng, n);
        let poset = Poset::from_interval_set(&items);
        for kk in 1..=3 {
            let g = greedy_partition_set(&items, k(kk));
            assert_eq!(g.count, k_width(&poset, k(kk)).count, "{items:?} k={kk}");
            assert!(verify_forest(&poset, &g.forest, k(kk)).unwrap());
        }
    }
}

#[test]
fn set_width_never_exceeds_sequence_width() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..100 {
        let items = random_intervals(&mut rng, 30);
        for kk in 1..=3 {
            assert!(greedy_partition_set(&items, k(kk)).count <= greedy_partition_sequence(&items, k(kk)).count);
        }
    }
}

#[test]
fn permutation_greedy_is_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..200 {
        let n = rng.gen_range(0..=30);
        let perm = random_permutation(&mut rng, n);
        let poset = Poset::from_permutation(&perm).unwrap();
        for kk in 1..=3 {
            let g = greedy_partition_permutation(&perm, k(kk)).unwrap();
            assert_eq!(g.count, k_width(&poset, k(kk)).count, "{perm:?} k={kk}");
            assert!(verify_forest(&poset, &g.forest, k(kk)).unwrap());
        }
    }
}

#[test]
fn permutation_example_matches_flow() {
    let perm = [1, 2, 0, 3];
    let poset = Poset::from_permutation(&perm).unwrap();
    assert_eq!(k_width(&poset, k(2)).count, 2);
    assert_eq!(greedy_partition_permutation(&perm, k(2)).unwrap().count, 2);
}

#[test]
fn max_heapable_greedy_is_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for _ in 0..250 {
        let n = rng.gen_range(0..=10);
        let items = random_intervals(&mut rng, n);
        for kk in 1..=2 {
            let g = greedy_max_heapable_subset(&items, k(kk));
            assert_eq!(
                g.subset.len(),
                oracle_max_heapable(&items, k(kk)).unwrap(),
                "{items:?} k={kk}"
            );
            let chosen: Vec<Interval<_>> = g.subset.iter().map(|&i| items[i]).collect();
            let poset = Poset::from_interval_set(&chosen);
            assert!(verify_forest(&poset, &g.forest, k(kk)).unwrap());
            assert!(g.forest.chain_count() <= 1);
            let rejected = g.trace.steps.iter().filter(|(_, e)| *e == SlotEvent::Rejected).count();
            assert_eq!(rejected + g.subset.len(), n);
        }
    }
}

#[test]
fn gallai_clique_equals_one_width() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for _ in 0..250 {
        let n = rng.gen_range(1..=40);
        let items = random_distinct_intervals(&mut rng, n);
        assert_eq!(greedy_partition_set(&items, k(1)).count, max_clique_intervals(&items));
    }
}

#[test]
fn sweep_is_optimal_on_distinct_boxes() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for _ in 0..250 {
        let n = rng.gen_range(0..=40);
        let boxes = random_distinct_boxes(&mut rng, n);
        let poset = Poset::from_box_set(&boxes);
        for kk in 1..=3 {
            let s = sweep_partition(&boxes, k(kk));
            assert_eq!(s.count, k_width(&poset, k(kk)).count, "{boxes:?} k={kk}");
            assert!(verify_forest(&poset, &s.forest, k(kk)).unwrap());
        }
    }
}

#[test]
fn sweep_is_optimal_on_touching_grid_boxes() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for _ in 0..250 {
        let n = rng.gen_range(0..=25);
        let boxes = random_grid_boxes(&mut rng, n);
        let poset = Poset::from_box_set(&boxes);
        for kk in 1..=3 {
            let s = sweep_partition(&boxes, k(kk));
            assert!(verify_forest(&poset, &s.forest, k(kk)).unwrap());
            assert_eq!(s.count, k_width(&poset, k(kk)).count, "{boxes:?} k={kk}");
        }
    }
}

#[test]
fn sweep_never_uses_an_unswept_slot() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for _ in 0..100 {
        let boxes = random_distinct_boxes(&mut rng, 30);
        let s = sweep_partition(&boxes, k(2));
        for (child, event) in &s.trace.steps {
            if let SlotEvent::Attached { parent, slot } = event {
                assert!(boxes[*parent].upper.x <= boxes[*child].lower.x);
                assert_eq!(*slot, boxes[*parent].upper.y);
            }
        }
    }
}

#[test]
fn sweep_on_zero_width_boxes_matches_sequence_greedy() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for _ in 0..100 {
        let n = rng.gen_range(0..=30);
        let items = random_intervals(&mut rng, n);
        let boxes: Vec<_> = items
            .iter()
            .enumerate()
            .map(|(i, iv)| {
                let x = heapable::Rational::from_integer(i as i64);
                heapable::AxisBox::from_coords(x, iv.left, x, iv.right).unwrap()
            })
            .collect();
        for kk in 1..=3 {
            assert_eq!(
                sweep_partition(&boxes, k(kk)).count,
                greedy_partition_sequence(&items, k(kk)).count
            );
        }
    }
}
