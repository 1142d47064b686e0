//! Sweep-line partition of x-sorted box sequences into k-ary chains.
//!
//! The sweep visits lower and upper box corners from left to right. A
//! box's `k` slots (valued at its upper y) are created unavailable when
//! its lower corner is reached and become available once the sweep passes
//! its upper corner.

use crate::greedy::{GreedyTrace, SlotEvent, SlotMultiset};
use crate::poset::{Arity, AxisBox, HeapForest};
use crate::scalar::{Key, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CornerKind {
    UpperCorner,
    LowerCorner,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepEvent<T> {
    pub x: T,
    pub kind: CornerKind,
    pub id: usize,
}

/// What a lower corner found below its y coordinate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SlotChoice<T> {
    Slot {
        value: T,
        owner: usize,
    },
    /// The permanent bottom slot: start a new chain.
    Sentinel,
}

/// Slots split into available and not-yet-available ones, plus the
/// implicit sentinel below everything.
#[derive(Clone, Debug)]
pub struct AvailSlotSet<T> {
    available: SlotMultiset<T>,
    /// Per box: slot value and copies waiting for its upper corner.
    pending: Vec<Option<(T, usize)>>,
}

impl<T: Scalar> AvailSlotSet<T> {
    pub fn new(n: usize) -> Self {
        AvailSlotSet {
            available: SlotMultiset::new(),
            pending: vec![None; n],
        }
    }

    /// Largest available slot `<= y`, or the sentinel.
    pub fn lookup(&self, y: T) -> SlotChoice<T> {
        match self.available.best_fit(y, false) {
            Some((value, owner)) => SlotChoice::Slot { value, owner },
            None => SlotChoice::Sentinel,
        }
    }

    pub fn consume(&mut self, value: T, owner: usize) -> bool {
        self.available.take(value, owner)
    }

    pub fn add_unavailable(&mut self, owner: usize, value: T, copies: usize) {
        self.pending[owner] = Some((value, copies));
    }

    pub fn make_available(&mut self, owner: usize) {
        if let Some((value, copies)) = self.pending[owner].take() {
            self.available.add(value, owner, copies);
        }
    }

    pub fn available(&self) -> &SlotMultiset<T> {
        &self.available
    }
}

/// Corner events in sweep order.
///
/// At equal x, upper corners come before lower corners so touching boxes
/// stay comparable. Equal-x upper corners keep input order; equal-x lower
/// corners are ordered by upper x, upper y, lower y, then input order,
/// which puts zero-width boxes first, sorted by their y intervals.
pub fn sweep_events<T: Scalar>(boxes: &[AxisBox<T>]) -> Vec<SweepEvent<T>> {
    let mut events: Vec<SweepEvent<T>> = Vec::with_capacity(2 * boxes.len());
    for (id, b) in boxes.iter().enumerate() {
        events.push(SweepEvent {
            x: b.lower.x,
            kind: CornerKind::LowerCorner,
            id,
        });
        events.push(SweepEvent {
            x: b.upper.x,
            kind: CornerKind::UpperCorner,
            id,
        });
    }
    events.sort_by(|a, b| {
        Key(a.x)
            .cmp(&Key(b.x))
            .then(a.kind.cmp(&b.kind))
            .then_with(|| match a.kind {
                CornerKind::UpperCorner => a.id.cmp(&b.id),
                CornerKind::LowerCorner => {
                    let (p, q) = (&boxes[a.id], &boxes[b.id]);
                    Key(p.upper.x)
                        .cmp(&Key(q.upper.x))
                        .then(Key(p.upper.y).cmp(&Key(q.upper.y)))
                        .then(Key(p.lower.y).cmp(&Key(q.lower.y)))
                        .then(a.id.cmp(&b.id))
                }
            })
    });
    events
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepPartition<T> {
    pub count: usize,
    pub forest: HeapForest,
    /// One event per box, in lower-corner order.
    pub trace: GreedyTrace<T>,
}

/// Partition of a box sequence into k-ary chains, optimal for sequences
/// sorted by upper x. Input in any order is handled as if stably sorted
/// by upper x; forest ids refer to input positions.
pub fn sweep_partition<T: Scalar>(boxes: &[AxisBox<T>], k: Arity) -> SweepPartition<T> {
    let n = boxes.len();
    let mut slots = AvailSlotSet::new(n);
    let mut inserted = vec![false; n];
    let mut swept = vec![false; n];
    let mut parent = vec![None; n];
    let mut trace = GreedyTrace::default();
    let mut count = 0;
    for event in sweep_events(boxes) {
        let id = event.id;
        match event.kind {
            CornerKind::UpperCorner => {
                swept[id] = true;
                if inserted[id] {
                    slots.make_available(id);
                }
            }
            CornerKind::LowerCorner => {
                let b = &boxes[id];
                let step = match slots.lookup(b.lower.y) {
                    SlotChoice::Slot { value, owner } => {
                        slots.consume(value, owner);
                        parent[id] = Some(owner);
                        SlotEvent::Attached {
                            parent: owner,
                            slot: value,
                        }
                    }
                    SlotChoice::Sentinel => {
                        count += 1;
                        SlotEvent::NewChain
                    }
                };
                slots.add_unavailable(id, b.upper.y, k.get());
                inserted[id] = true;
                // Zero-width boxes have already had their upper corner swept.
                if swept[id] {
                    slots.make_available(id);
                }
                trace.steps.push((id, step));
            }
        }
    }
    SweepPartition {
        count,
        forest: HeapForest::from_parents(parent),
        trace,
    }
}
