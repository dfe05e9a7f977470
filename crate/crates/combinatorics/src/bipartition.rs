//! Ordered pairs of partitions.

use crate::partition::{partitions_of, Partition};
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub up: Partition,
    pub down: Partition,
}

impl Bipartition {
    pub fn new(up: Partition, down: Partition) -> Self {
        Bipartition { up, down }
    }

    pub fn empty() -> Self {
        Bipartition {
            up: Partition::empty(),
            down: Partition::empty(),
        }
    }

    pub fn size(&self) -> u32 {
        self.up.size() + self.down.size()
    }

    /// "2,1|1" with "-" for empty components.
    pub fn parse(s: &str) -> Result<Bipartition, String> {
        let mut halves = s.splitn(2, '|');
        let up = Partition::parse(halves.next().unwrap_or(""))?;
        let down = Partition::parse(halves.next().unwrap_or(""))?;
        Ok(Bipartition { up, down })
    }

    pub fn to_json(&self) -> Value {
        json!({ "up": self.up.to_json(), "down": self.down.to_json() })
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.up, self.down)
    }
}

/// Total size ascending, then up component, then down.
impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.up.cmp(&other.up))
            .then_with(|| self.down.cmp(&other.down))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All bipartitions with |up| = r and |down| = s.
pub fn bipartitions_of(r: u32, s: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for up in partitions_of(r) {
        for down in partitions_of(s) {
            out.push(Bipartition::new(up.clone(), down));
        }
    }
    out
}

/// All bipartitions with |up| <= maxr and |down| <= maxs, sorted.
pub fn bipartitions_up_to(maxr: u32, maxs: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for r in 0..=maxr {
        for s in 0..=maxs {
            out.extend(bipartitions_of(r, s));
        }
    }
    out.sort();
    out
}
