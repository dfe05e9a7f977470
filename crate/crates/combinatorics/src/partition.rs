//! Integer partitions with cell geometry helpers.

use serde_json::Value;
use std::cmp::Ordering;
use std::fmt;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive: {:?}",
            parts
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Inclusion of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// Cells as (row, col), 0-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p as usize {
                out.push((r, c));
            }
        }
        out
    }

    /// col - row.
    pub fn content(cell: (usize, usize)) -> i64 {
        cell.1 as i64 - cell.0 as i64
    }

    /// Multiset of cell contents, sorted ascending.
    pub fn contents(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.cells().into_iter().map(Self::content).collect();
        v.sort();
        v
    }

    /// Cells whose addition leaves a partition, top row first.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..=self.parts.len() {
            let here = self.part(r);
            let above = if r == 0 { u32::MAX } else { self.part(r - 1) };
            if here < above {
                out.push((r, here as usize));
            }
        }
        out
    }

    /// Cells whose removal leaves a partition, top row first.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &p) in self.parts.iter().enumerate() {
            let below = self.part(r + 1);
            if p > below {
                out.push((r, p as usize - 1));
            }
        }
        out
    }

    pub fn add_cell(&self, cell: (usize, usize)) -> Partition {
        let mut parts = self.parts.clone();
        if cell.0 == parts.len() {
            parts.push(1);
        } else {
            parts[cell.0] += 1;
        }
        Partition::new(parts)
    }

    pub fn remove_cell(&self, cell: (usize, usize)) -> Partition {
        let mut parts = self.parts.clone();
        parts[cell.0] -= 1;
        if parts[cell.0] == 0 {
            parts.remove(cell.0);
        }
        Partition { parts }
    }

    pub fn hook_length(&self, cell: (usize, usize)) -> u32 {
        let (r, c) = cell;
        let arm = self.parts[r] - c as u32 - 1;
        let leg = self
            .parts
            .iter()
            .skip(r + 1)
            .filter(|&&p| p as usize > c)
            .count() as u32;
        arm + leg + 1
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn num_syt(&self) -> u128 {
        let n = self.size() as u128;
        let mut numer = 1u128;
        for k in 1..=n {
            numer *= k;
        }
        let mut denom = 1u128;
        for cell in self.cells() {
            denom *= self.hook_length(cell) as u128;
        }
        assert_eq!(numer % denom, 0);
        numer / denom
    }

    /// "2,1" with "-" for the empty partition.
    pub fn parse(s: &str) -> Result<Partition, String> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| format!("bad partition part: {:?}", piece))?;
            if p == 0 {
                return Err("partition parts must be positive".into());
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(format!("parts must be weakly decreasing: {:?}", parts));
        }
        Ok(Partition { parts })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.parts.iter().map(|&p| Value::from(p)).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "-")
        } else {
            let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", strs.join(","))
        }
    }
}

/// Size ascending, then reverse-lexicographic on parts ((3) before (2,1)).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All partitions of n, largest-first-part first.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        let hi = remaining.min(max);
        for p in (1..=hi).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
