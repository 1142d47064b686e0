//! Monte-Carlo runs of the interval Hammersley tree process.
//!
//! Particles carry up to `k` lives. An arriving interval `[a, b]` takes a
//! life from the largest live particle `<= a` (or, if there is none,
//! counts a new chain) and then inserts particle `b` with `k` lives. The
//! live particles are exactly the free slots of the greedy best-fit
//! algorithm, so the chain count equals the greedy k-width.

use std::collections::BTreeMap;
use std::io::{self, Write};

use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::poset::{total_order_permutation, Arity, Interval};
use crate::scalar::Key;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimMode {
    /// Intervals in arrival order.
    Sequence,
    /// Intervals sorted by right endpoint, then left endpoint.
    SortedSet,
}

impl SimMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SimMode::Sequence => "seq",
            SimMode::SortedSet => "set",
        }
    }
}

impl std::str::FromStr for SimMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "seq" | "sequence" => Ok(SimMode::Sequence),
            "set" | "sorted-set" => Ok(SimMode::SortedSet),
            other => Err(format!("unknown mode `{other}` (expected seq or set)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimConfig {
    pub n: usize,
    pub k: Arity,
    pub trials: usize,
    pub seed: u64,
    pub mode: SimMode,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimStats {
    pub counts: Vec<usize>,
    pub mean: f64,
    /// `mean / sqrt(n)` for k = 1, `mean / n` otherwise.
    pub normalized: f64,
    pub stderr: f64,
}

/// Random stream of trial `trial` under root `seed`; streams of distinct
/// trials are independent and do not depend on execution order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `[min(u, v), max(u, v)]` for `u, v` uniform on the open unit interval.
pub fn random_interval<R: Rng + ?Sized>(rng: &mut R) -> Interval<f64> {
    let u: f64 = rng.sample(Open01);
    let v: f64 = rng.sample(Open01);
    Interval {
        left: u.min(v),
        right: u.max(v),
    }
}

pub fn random_intervals<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Interval<f64>> {
    (0..n).map(|_| random_interval(rng)).collect()
}

/// Live particles keyed by position; equal positions hold one life
/// counter per particle, oldest first.
#[derive(Clone, Debug)]
pub struct ParticleSystem {
    k: usize,
    live: BTreeMap<Key<f64>, Vec<usize>>,
    chains: usize,
}

impl ParticleSystem {
    pub fn new(k: Arity) -> Self {
        ParticleSystem {
            k: k.get(),
            live: BTreeMap::new(),
            chains: 0,
        }
    }

    pub fn arrive(&mut self, item: &Interval<f64>) {
        let hit = self.live.range(..=Key(item.left)).next_back().map(|(&key, _)| key);
        match hit {
            Some(key) => {
                let lives = self.live.get_mut(&key).expect("key just found");
                lives[0] -= 1;
                if lives[0] == 0 {
                    lives.remove(0);
                    if lives.is_empty() {
                        self.live.remove(&key);
                    }
                }
            }
            None => self.chains += 1,
        }
        self.live.entry(Key(item.right)).or_default().push(self.k);
    }

    pub fn chains(&self) -> usize {
        self.chains
    }

    /// Live particles ascending, with their remaining lives.
    pub fn particles(&self) -> Vec<(f64, usize)> {
        self.live
            .iter()
            .flat_map(|(Key(v), lives)| lives.iter().map(move |&l| (*v, l)))
            .collect()
    }

    /// Total remaining lives, i.e. the number of free greedy slots.
    pub fn total_lives(&self) -> usize {
        self.live.values().flatten().sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProcessOutcome {
    pub count: usize,
    pub particles: Vec<(f64, usize)>,
}

/// Runs the process over `items` in the given order.
pub fn run_process_on(items: &[Interval<f64>], k: Arity) -> ProcessOutcome {
    let mut system = ParticleSystem::new(k);
    for item in items {
        system.arrive(item);
    }
    ProcessOutcome {
        count: system.chains(),
        particles: system.particles(),
    }
}

/// Runs the process on `n` intervals drawn from `rng`.
pub fn run_process<R: Rng + ?Sized>(n: usize, k: Arity, rng: &mut R) -> ProcessOutcome {
    let mut system = ParticleSystem::new(k);
    for _ in 0..n {
        system.arrive(&random_interval(rng));
    }
    ProcessOutcome {
        count: system.chains(),
        particles: system.particles(),
    }
}

/// The interval list trial `trial` draws, in the order the process
/// consumes it for `mode`.
pub fn trial_intervals(config: &SimConfig, trial: u64) -> Vec<Interval<f64>> {
    let items = random_intervals(&mut trial_rng(config.seed, trial), config.n);
    match config.mode {
        SimMode::Sequence => items,
        SimMode::SortedSet => total_order_permutation(&items).into_iter().map(|i| items[i]).collect(),
    }
}

pub fn run_trial(config: &SimConfig, trial: u64) -> usize {
    match config.mode {
        SimMode::Sequence => run_process(config.n, config.k, &mut trial_rng(config.seed, trial)).count,
        SimMode::SortedSet => run_process_on(&trial_intervals(config, trial), config.k).count,
    }
}

/// Normalizes a chain count: by `sqrt(n)` for k = 1, by `n` otherwise.
pub fn normalize(count: f64, n: usize, k: Arity) -> f64 {
    if n == 0 {
        return 0.0;
    }
    if k.get() == 1 {
        count / (n as f64).sqrt()
    } else {
        count / n as f64
    }
}

/// Runs all trials (in parallel) and aggregates their chain counts.
pub fn estimate_scaling(config: &SimConfig) -> SimStats {
    let counts: Vec<usize> = (0..config.trials as u64)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect();
    summarize(counts, config.n, config.k)
}

pub fn summarize(counts: Vec<usize>, n: usize, k: Arity) -> SimStats {
    let trials = counts.len();
    let mean = if trials == 0 {
        0.0
    } else {
        counts.iter().sum::<usize>() as f64 / trials as f64
    };
    let stderr = if trials < 2 {
        0.0
    } else {
        let var = counts.iter().map(|&c| (c as f64 - mean).powi(2)).sum::<f64>() / (trials - 1) as f64;
        (var / trials as f64).sqrt()
    };
    SimStats {
        normalized: normalize(mean, n, k),
        mean,
        stderr,
        counts,
    }
}

/// Writes one row per trial: `trial,n,k,mode,count,normalized`.
pub fn write_csv<W: Write>(mut out: W, config: &SimConfig, stats: &SimStats) -> io::Result<()> {
    writeln!(out, "trial,n,k,mode,count,normalized")?;
    for (trial, &count) in stats.counts.iter().enumerate() {
        let norm = normalize(count as f64, config.n, config.k);
        writeln!(
            out,
            "{trial},{},{},{},{count},{norm}",
            config.n,
            config.k,
            config.mode.as_str()
        )?;
    }
    Ok(())
}
