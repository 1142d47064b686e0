//! Partitions of finite partial orders into k-ary chains (heapable subsets).
//!
//! - [`kwidth`]: exact k-width of any poset via maximum left k-matchings.
//! - [`greedy`]: best-fit slot algorithms for interval sequences, interval
//!   sets, permutations, and maximum heapable subsets of interval sets.
//! - [`sweep`]: sweep-line partition of x-sorted box sequences.
//! - [`hammersley`]: the interval Hammersley tree process for Monte-Carlo
//!   estimates of the scaling of k-width on random intervals.
//! - [`oracle`]: exhaustive references used to cross-check the above.
//!
//! Interval and box algorithms are generic over the coordinate type
//! ([`Scalar`]); library inputs use exact rationals ([`Rational`]) and the
//! simulator uses `f64`.

pub mod error;
pub mod greedy;
pub mod hammersley;
pub mod io;
pub mod kwidth;
pub mod lemmas;
pub mod oracle;
pub mod poset;
pub mod random;
pub mod scalar;
pub mod sweep;

pub use error::{Error, Result};
pub use greedy::{
    dominates, forest_signatures, greedy_max_heapable_subset, greedy_partition_permutation, greedy_partition_sequence,
    greedy_partition_set, insert_interval, signature, GreedyPartition, GreedyTrace, InsertPolicy, MaxHeapable,
    Signature, SlotEvent, SlotMultiset,
};
pub use hammersley::{estimate_scaling, random_interval, run_process, SimConfig, SimMode, SimStats};
pub use kwidth::{build_split_graph, k_width, matching_to_partition, max_left_k_matching, LeftKMatching, SplitGraph};
pub use oracle::{max_clique_intervals, oracle_k_width, oracle_max_heapable, oracle_width_antichain};
pub use poset::{compare_total, verify_forest, Arity, AxisBox, HeapForest, Interval, Point, Poset};
pub use scalar::Scalar;
pub use sweep::sweep_partition;

/// Exact coordinate used by file inputs.
pub type Rational = num_rational::Ratio<i64>;

pub type ExactInterval = Interval<Rational>;
pub type ExactBox = AxisBox<Rational>;
pub type FloatInterval = Interval<f64>;
pub type FloatBox = AxisBox<f64>;
