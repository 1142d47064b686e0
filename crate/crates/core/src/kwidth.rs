//! Exact k-width through maximum left k-matchings of the k-split graph.
//!
//! Each element appears once on the minus side with capacity `k` and once
//! on the plus side with capacity 1; an edge `x -> y` exists whenever
//! `x < y`. A left k-matching picks, for every element, at most one parent
//! and gives every element at most `k` children, so its edges are exactly
//! the parent links of a k-ary chain partition with `n - |matching|` roots.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::poset::{Arity, HeapForest, Poset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitGraph {
    k: Arity,
    /// Plus-side neighbours of each minus node, ascending.
    adj: Vec<Vec<usize>>,
}

impl SplitGraph {
    pub fn new(poset: &Poset, k: Arity) -> Self {
        let n = poset.len();
        let adj = (0..n).map(|x| (0..n).filter(|&y| poset.less(x, y)).collect()).collect();
        SplitGraph { k, adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn arity(&self) -> Arity {
        self.k
    }

    pub fn left_capacity(&self) -> usize {
        self.k.get()
    }

    pub fn right_capacity(&self) -> usize {
        1
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj.get(x).is_some_and(|a| a.binary_search(&y).is_ok())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }
}

pub fn build_split_graph(poset: &Poset, k: Arity) -> SplitGraph {
    SplitGraph::new(poset, k)
}

/// Chosen `(parent, child)` edges, sorted by child id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LeftKMatching {
    pub chosen: Vec<(usize, usize)>,
}

impl LeftKMatching {
    pub fn len(&self) -> usize {
        self.chosen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chosen.is_empty()
    }

    /// Checks the degree bounds and edge membership against `graph`.
    pub fn validate(&self, graph: &SplitGraph) -> Result<()> {
        let n = graph.len();
        let mut out_deg = vec![0usize; n];
        let mut in_deg = vec![0usize; n];
        for &(x, y) in &self.chosen {
            if !graph.has_edge(x, y) {
                return Err(Error::InvalidMatching(format!(
                    "({x}, {y}) is not an edge of the split graph"
                )));
            }
            out_deg[x] += 1;
            in_deg[y] += 1;
            if out_deg[x] > graph.left_capacity() {
                return Err(Error::InvalidMatching(format!(
                    "element {x} has more than {} children",
                    graph.k
                )));
            }
            if in_deg[y] > 1 {
                return Err(Error::InvalidMatching(format!("element {y} has more than one parent")));
            }
        }
        Ok(())
    }
}

const UNREACHED: usize = usize::MAX;

/// Hopcroft–Karp phases generalized to minus-side capacity `k`.
struct Matcher<'g> {
    graph: &'g SplitGraph,
    mate: Vec<Option<usize>>,
    degree: Vec<usize>,
    dist: Vec<usize>,
    cursor: Vec<usize>,
}

impl<'g> Matcher<'g> {
    fn new(graph: &'g SplitGraph) -> Self {
        let n = graph.len();
        Matcher {
            graph,
            mate: vec![None; n],
            degree: vec![0; n],
            dist: vec![UNREACHED; n],
            cursor: vec![0; n],
        }
    }

    fn has_room(&self, x: usize) -> bool {
        self.degree[x] < self.graph.left_capacity()
    }

    /// Layers minus nodes by alternating distance from those with spare
    /// capacity. Returns whether a free plus node is reachable.
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for x in 0..self.graph.len() {
            if self.has_room(x) {
                self.dist[x] = 0;
                queue.push_back(x);
            } else {
                self.dist[x] = UNREACHED;
            }
        }
        let mut found = false;
        while let Some(x) = queue.pop_front() {
            for &y in self.graph.neighbors(x) {
                match self.mate[y] {
                    None => found = true,
                    Some(owner) if owner != x && self.dist[owner] == UNREACHED => {
                        self.dist[owner] = self.dist[x] + 1;
                        queue.push_back(owner);
                    }
                    Some(_) => {}
                }
            }
        }
        found
    }

    fn augment(&mut self, x: usize) -> bool {
        while self.cursor[x] < self.graph.neighbors(x).len() {
            let y = self.graph.neighbors(x)[self.cursor[x]];
            self.cursor[x] += 1;
            let advance = match self.mate[y] {
                None => true,
                Some(owner) if owner != x && self.dist[owner] == self.dist[x] + 1 => self.augment(owner),
                Some(_) => false,
            };
            if advance {
                if let Some(old) = self.mate[y] {
                    self.degree[old] -= 1;
                }
                self.mate[y] = Some(x);
                self.degree[x] += 1;
                return true;
            }
        }
        self.dist[x] = UNREACHED;
        false
    }

    fn run(mut self) -> Vec<Option<usize>> {
        while self.bfs() {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            for x in 0..self.graph.len() {
                while self.dist[x] == 0 && self.has_room(x) && self.augment(x) {}
            }
        }
        self.mate
    }
}

/// Maximum left k-matching. Ties between equally long augmenting paths
/// resolve toward lower ids, so the result is deterministic.
pub fn max_left_k_matching(graph: &SplitGraph) -> LeftKMatching {
    let mate = Matcher::new(graph).run();
    let chosen = mate.iter().enumerate().filter_map(|(y, x)| x.map(|x| (x, y))).collect();
    LeftKMatching { chosen }
}

/// Turns each chosen edge `(x, y)` into the parent link `y -> x`.
pub fn matching_to_partition(poset: &Poset, k: Arity, matching: &LeftKMatching) -> Result<HeapForest> {
    let graph = SplitGraph::new(poset, k);
    matching.validate(&graph)?;
    let mut parent = vec![None; poset.len()];
    for &(x, y) in &matching.chosen {
        parent[y] = Some(x);
    }
    Ok(HeapForest::from_parents(parent))
}

/// Result of the exact solver: chain count, witness forest, and the
/// matching that certifies the count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KWidth {
    pub count: usize,
    pub forest: HeapForest,
    pub matching: LeftKMatching,
}

/// Minimum number of k-ary chains partitioning `poset`.
pub fn k_width(poset: &Poset, k: Arity) -> KWidth {
    let graph = SplitGraph::new(poset, k);
    let matching = max_left_k_matching(&graph);
    let mut parent = vec![None; poset.len()];
    for &(x, y) in &matching.chosen {
        parent[y] = Some(x);
    }
    let forest = HeapForest::from_parents(parent);
    KWidth {
        count: poset.len() - matching.len(),
        forest,
        matching,
    }
}
