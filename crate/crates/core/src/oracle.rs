//! Brute-force references for the optimality claims. Exponential; the
//! size guards are hard errors.

use crate::error::{Error, Result};
use crate::kwidth::k_width;
use crate::poset::{Arity, Interval, Poset};
use crate::scalar::{Key, Scalar};

pub const MAX_K_WIDTH_ORACLE: usize = 8;
pub const MAX_HEAPABLE_ORACLE: usize = 12;
pub const MAX_ANTICHAIN_ORACLE: usize = 20;

fn guard(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::TooLarge { n, max });
    }
    Ok(())
}

/// Per-element parent choice: `None` or a strict predecessor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParentAssignment {
    pub parent: Vec<Option<usize>>,
}

impl ParentAssignment {
    pub fn roots(&self) -> usize {
        self.parent.iter().filter(|p| p.is_none()).count()
    }

    pub fn is_valid(&self, poset: &Poset, k: Arity) -> bool {
        let mut children = vec![0usize; poset.len()];
        self.parent.iter().enumerate().all(|(c, p)| match *p {
            None => true,
            Some(p) => {
                children[p] += 1;
                poset.less(p, c) && children[p] <= k.get()
            }
        })
    }
}

struct Search<'a> {
    poset: &'a Poset,
    k: usize,
    order: Vec<usize>,
    children: Vec<usize>,
    current: Vec<Option<usize>>,
    best: usize,
    best_assignment: Vec<Option<usize>>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, roots: usize) {
        if roots >= self.best {
            return;
        }
        if depth == self.order.len() {
            self.best = roots;
            self.best_assignment = self.current.clone();
            return;
        }
        let x = self.order[depth];
        for i in 0..depth {
            let p = self.order[i];
            if self.poset.less(p, x) && self.children[p] < self.k {
                self.children[p] += 1;
                self.current[x] = Some(p);
                self.run(depth + 1, roots);
                self.current[x] = None;
                self.children[p] -= 1;
            }
        }
        self.run(depth + 1, roots + 1);
    }
}

/// Minimum-root parent assignment found by exhaustive backtracking.
pub fn oracle_min_assignment(poset: &Poset, k: Arity) -> Result<ParentAssignment> {
    let n = poset.len();
    guard(n, MAX_K_WIDTH_ORACLE)?;
    let order = poset.linear_extension();
    let mut search = Search {
        poset,
        k: k.get(),
        order,
        children: vec![0; n],
        current: vec![None; n],
        best: n + 1,
        best_assignment: vec![None; n],
    };
    search.run(0, 0);
    Ok(ParentAssignment {
        parent: search.best_assignment,
    })
}

/// k-width by exhaustive search over parent assignments (n <= 8).
pub fn oracle_k_width(poset: &Poset, k: Arity) -> Result<usize> {
    oracle_min_assignment(poset, k).map(|a| a.roots())
}

/// Largest subset whose interval order is one k-ary chain (n <= 12).
pub fn oracle_max_heapable<T: Scalar>(items: &[Interval<T>], k: Arity) -> Result<usize> {
    let n = items.len();
    guard(n, MAX_HEAPABLE_ORACLE)?;
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let subset: Vec<Interval<T>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| items[i]).collect();
        if k_width(&Poset::from_interval_set(&subset), k).count == 1 {
            best = size;
        }
    }
    Ok(best)
}

/// Largest antichain by branch and bound (n <= 20).
pub fn oracle_width_antichain(poset: &Poset) -> Result<usize> {
    let n = poset.len();
    guard(n, MAX_ANTICHAIN_ORACLE)?;
    fn grow(poset: &Poset, next: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        let n = poset.len();
        *best = (*best).max(chosen.len());
        if chosen.len() + (n - next) <= *best {
            return;
        }
        for x in next..n {
            if chosen.iter().all(|&c| !poset.comparable(c, x)) {
                chosen.push(x);
                grow(poset, x + 1, chosen, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    grow(poset, 0, &mut Vec::new(), &mut best);
    Ok(best)
}

/// Most closed intervals sharing a common point.
pub fn max_clique_intervals<T: Scalar>(items: &[Interval<T>]) -> usize {
    // (coordinate, 0 = open, 1 = close): openings at a point precede closings.
    let mut events: Vec<(Key<T>, u8)> = Vec::with_capacity(2 * items.len());
    for i in items {
        events.push((Key(i.left), 0));
        events.push((Key(i.right), 1));
    }
    events.sort();
    let (mut depth, mut best) = (0usize, 0usize);
    for (_, kind) in events {
        if kind == 0 {
            depth += 1;
            best = best.max(depth);
        } else {
            depth -= 1;
        }
    }
    best
}

/// Longest chain of any poset, by a pass over a linear extension.
pub fn poset_height(poset: &Poset) -> usize {
    let order = poset.linear_extension();
    let mut longest = vec![0usize; poset.len()];
    for (i, &x) in order.iter().enumerate() {
        longest[x] = 1 + order[..i]
            .iter()
            .filter(|&&y| poset.less(y, x))
            .map(|&y| longest[y])
            .max()
            .unwrap_or(0);
    }
    longest.into_iter().max().unwrap_or(0)
}

/// Most pairwise disjoint intervals (touching allowed), i.e. the longest
/// chain of the interval order: earliest right endpoint first.
pub fn max_disjoint_intervals<T: Scalar>(items: &[Interval<T>]) -> usize {
    let mut sorted: Vec<&Interval<T>> = items.iter().collect();
    sorted.sort_by_key(|i| Key(i.right));
    let mut last: Option<T> = None;
    let mut count = 0;
    for i in sorted {
        if last.is_none_or(|r| r <= i.left) {
            last = Some(i.right);
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(k: usize) -> Arity {
        Arity::new(k).unwrap()
    }

    fn iv(l: i64, r: i64) -> Interval<i64> {
        Interval::new(l, r).unwrap()
    }

    #[test]
    fn k_width_oracle_examples() {
        assert_eq!(oracle_k_width(&Poset::chain(4), k(1)).unwrap(), 1);
        assert_eq!(oracle_k_width(&Poset::antichain(4), k(3)).unwrap(), 4);
        let star = Poset::from_relations(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(oracle_k_width(&star, k(2)).unwrap(), 2);
        let a = oracle_min_assignment(&star, k(2)).unwrap();
        assert!(a.is_valid(&star, k(2)));
        assert_eq!(oracle_k_width(&Poset::antichain(0), k(1)).unwrap(), 0);
        assert_eq!(
            oracle_k_width(&Poset::antichain(9), k(1)),
            Err(Error::TooLarge { n: 9, max: 8 })
        );
    }

    #[test]
    fn max_heapable_oracle_examples() {
        let chain: Vec<_> = (0..5).map(|i| iv(2 * i, 2 * i + 1)).collect();
        assert_eq!(oracle_max_heapable(&chain, k(1)).unwrap(), 5);
        let overlapping: Vec<_> = (0..5).map(|i| iv(i, 10 + i)).collect();
        assert_eq!(oracle_max_heapable(&overlapping, k(2)).unwrap(), 1);
        assert_eq!(
            oracle_max_heapable(&[iv(1, 2), iv(3, 4), iv(5, 6), iv(0, 10)], k(2)).unwrap(),
            3
        );
        assert!(oracle_max_heapable(&vec![iv(0, 1); 13], k(1)).is_err());
    }

    #[test]
    fn disjoint_intervals_are_the_height() {
        use crate::random::random_distinct_intervals;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for n in 0..30 {
            let items = random_distinct_intervals(&mut rng, n);
            assert_eq!(
                max_disjoint_intervals(&items),
                poset_height(&Poset::from_interval_set(&items))
            );
        }
        assert_eq!(max_disjoint_intervals(&[iv(0, 1), iv(1, 2), iv(2, 2), iv(0, 5)]), 3);
        assert_eq!(poset_height(&Poset::chain(6)), 6);
        assert_eq!(poset_height(&Poset::antichain(6)), 1);
    }

    #[test]
    fn antichain_oracle_examples() {
        assert_eq!(oracle_width_antichain(&Poset::chain(5)).unwrap(), 1);
        assert_eq!(oracle_width_antichain(&Poset::antichain(5)).unwrap(), 5);
        let two_chains = Poset::from_relations(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(oracle_width_antichain(&two_chains).unwrap(), 2);
        assert!(oracle_width_antichain(&Poset::antichain(21)).is_err());
    }

    #[test]
    fn clique_examples() {
        assert_eq!(max_clique_intervals(&[iv(0, 2), iv(1, 3), iv(2, 4)]), 3);
        assert_eq!(max_clique_intervals(&[iv(0, 1), iv(2, 3), iv(4, 5)]), 1);
        let nested: Vec<_> = (0..6).map(|i| iv(i, 20 - i)).collect();
        assert_eq!(max_clique_intervals(&nested), 6);
        assert_eq!(max_clique_intervals::<i64>(&[]), 0);
    }
}
