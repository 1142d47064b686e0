//! Random instance generators for cross-checks and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::poset::{AxisBox, Interval, Poset};
use crate::Rational;

/// Random poset: a hidden random linear order, each compatible pair kept
/// with probability `density`, then closed.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((labels[i], labels[j]));
            }
        }
    }
    Poset::from_relations(n, &pairs).expect("pairs follow a linear order")
}

/// Intervals with small rational endpoints `p / q`, `q` in 1..=3, so that
/// ties and touching endpoints occur often.
pub fn random_intervals<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Interval<Rational>> {
    let span = (2 * n as i64).max(4);
    (0..n)
        .map(|_| {
            let q = rng.gen_range(1..=3);
            let a = rng.gen_range(0..=span * q);
            let b = rng.gen_range(0..=span * q);
            Interval::new(Rational::new(a.min(b), q), Rational::new(a.max(b), q)).expect("ordered")
        })
        .collect()
}

/// `count` distinct rationals with a common random denominator, in random order.
fn distinct_coords<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Rational> {
    let q = rng.gen_range(1..=7);
    let mut pool: Vec<i64> = (0..(3 * count as i64).max(1)).collect();
    pool.shuffle(rng);
    pool.truncate(count);
    pool.into_iter().map(|p| Rational::new(p, q)).collect()
}

/// Intervals whose `2n` endpoints are pairwise distinct.
pub fn random_distinct_intervals<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Interval<Rational>> {
    let c = distinct_coords(rng, 2 * n);
    c.chunks(2)
        .map(|p| Interval::new(p[0].min(p[1]), p[0].max(p[1])).expect("ordered"))
        .collect()
}

/// Boxes whose x coordinates are pairwise distinct, and likewise y.
pub fn random_distinct_boxes<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<AxisBox<Rational>> {
    let xs = distinct_coords(rng, 2 * n);
    let ys = distinct_coords(rng, 2 * n);
    (0..n)
        .map(|i| {
            let (x0, x1) = (xs[2 * i], xs[2 * i + 1]);
            let (y0, y1) = (ys[2 * i], ys[2 * i + 1]);
            AxisBox::from_coords(x0.min(x1), y0.min(y1), x0.max(x1), y0.max(y1)).expect("ordered")
        })
        .collect()
}

/// Boxes on a small integer grid, so coordinates collide and boxes touch.
pub fn random_grid_boxes<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<AxisBox<Rational>> {
    let span = (n as i64).max(3);
    (0..n)
        .map(|_| {
            let mut c = [0i64; 4];
            c.iter_mut().for_each(|v| *v = rng.gen_range(0..=span));
            let r = Rational::from_integer;
            AxisBox::from_coords(
                r(c[0].min(c[1])),
                r(c[2].min(c[3])),
                r(c[0].max(c[1])),
                r(c[2].max(c[3])),
            )
            .expect("ordered")
        })
        .collect()
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
