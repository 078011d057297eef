//! Ranked container for the best `r` communities found so far.

use crate::community::Community;
use crate::influence::Influence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertOutcome {
    Inserted,
    /// `f(h)` did not exceed the current r-th influence.
    BelowThreshold,
    /// An entry with equal influence already contains `h`.
    Dominated,
}

/// At most `capacity` communities, influence descending. Among equal
/// influences the earlier insert ranks first.
///
/// No entry is ever an equal-influence subgraph of another: a dominated
/// candidate is rejected, and inserting a community drops any entries it
/// dominates.
#[derive(Debug, Clone)]
pub struct TopRSet {
    capacity: usize,
    entries: Vec<Community>,
}

impl TopRSet {
    pub fn new(capacity: usize) -> Self {
        assert!(capacity >= 1, "top-r capacity must be at least 1");
        TopRSet {
            capacity,
            entries: Vec::with_capacity(capacity + 1),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.entries.len() >= self.capacity
    }

    pub fn entries(&self) -> &[Community] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Community> {
        self.entries
    }

    pub fn influences(&self) -> Vec<Influence> {
        self.entries.iter().map(|c| c.influence).collect()
    }

    /// Influence of the r-th entry, or the sentinel while under-filled.
    pub fn h_min(&self) -> Influence {
        if self.is_full() {
            self.entries[self.capacity - 1].influence
        } else {
            Influence::NegInfinity
        }
    }

    pub fn insert(&mut self, h: Community) -> InsertOutcome {
        if h.influence <= self.h_min() {
            return InsertOutcome::BelowThreshold;
        }
        let dominated = self
            .entries
            .iter()
            .any(|e| e.influence == h.influence && h.is_subset_of(e));
        if dominated {
            return InsertOutcome::Dominated;
        }
        self.entries
            .retain(|e| !(e.influence == h.influence && e.is_subset_of(&h)));
        if self.is_full() {
            self.entries.pop();
        }
        let pos = self.entries.partition_point(|e| e.influence >= h.influence);
        self.entries.insert(pos, h);
        InsertOutcome::Inserted
    }
}
