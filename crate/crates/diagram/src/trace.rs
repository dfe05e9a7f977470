//! Strand tracing: walks every curve of a diagram along its flow.

use crate::diagram::{Diagram, DiagramError};
use crate::letter::{Letter, Word};
use crate::slice::{under_side, Side, SliceKind};

/// Boundary point, by 0-based left-to-right index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    Bottom(usize),
    Top(usize),
}

/// One passage of a curve through a crossing, in flow order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingEvent {
    /// Index into `Diagram::slices`.
    pub slice_index: usize,
    pub is_under: bool,
}

#[derive(Clone, Debug)]
pub struct StrandPath {
    /// None for circles.
    pub start: Option<Endpoint>,
    pub end: Option<Endpoint>,
    pub events: Vec<CrossingEvent>,
}

impl StrandPath {
    pub fn is_circle(&self) -> bool {
        self.start.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct Trace {
    /// Boundary strands first (bottom sources right to left, then top
    /// sources right to left), then circles in scan order.
    pub strands: Vec<StrandPath>,
    pub words: Vec<Word>,
}

impl Trace {
    pub fn circle_count(&self) -> usize {
        self.strands.iter().filter(|s| s.is_circle()).count()
    }

    /// Sum of signs of crossings both of whose passages lie on one
    /// strand.
    pub fn self_writhe(&self, d: &Diagram) -> i64 {
        let mut w = 0;
        for s in &self.strands {
            let mut seen = std::collections::BTreeSet::new();
            for e in &s.events {
                if !seen.insert(e.slice_index) {
                    w += d.slices[e.slice_index].sign();
                }
            }
        }
        w
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Up,
    Down,
}

struct Walker<'a> {
    d: &'a Diagram,
    words: &'a [Word],
    visited: Vec<Vec<bool>>,
}

impl<'a> Walker<'a> {
    /// Advance one step from (level, idx) moving `dir`. Returns the next
    /// state or the exit endpoint, plus a crossing event if one was
    /// traversed.
    fn step(
        &self,
        level: usize,
        idx: usize,
        dir: Dir,
    ) -> (Result<(usize, usize, Dir), Endpoint>, Option<CrossingEvent>) {
        match dir {
            Dir::Up => {
                if level == self.d.slices.len() {
                    return (Err(Endpoint::Top(idx)), None);
                }
                let s = self.d.slices[level];
                let n = self.words[level].len();
                match s.kind {
                    SliceKind::CupRight | SliceKind::CupLeft => {
                        let j = n + 1 - s.pos;
                        let ni = if idx < j { idx } else { idx + 2 };
                        (Ok((level + 1, ni, Dir::Up)), None)
                    }
                    SliceKind::CapRight | SliceKind::CapLeft => {
                        let j = n - s.pos - 1;
                        if idx == j || idx == j + 1 {
                            let other = if idx == j { j + 1 } else { j };
                            (Ok((level, other, Dir::Down)), None)
                        } else {
                            let ni = if idx < j { idx } else { idx - 2 };
                            (Ok((level + 1, ni, Dir::Up)), None)
                        }
                    }
                    SliceKind::CrossPos | SliceKind::CrossNeg => {
                        let j = n - s.pos - 1;
                        if idx == j || idx == j + 1 {
                            let w = &self.words[level];
                            let us = under_side(w.get(j), w.get(j + 1), s.kind);
                            let (ni, on_left_diag) =
                                if idx == j { (j + 1, true) } else { (j, false) };
                            let is_under = (us == Side::Left) == on_left_diag;
                            (
                                Ok((level + 1, ni, Dir::Up)),
                                Some(CrossingEvent { slice_index: level, is_under }),
                            )
                        } else {
                            (Ok((level + 1, idx, Dir::Up)), None)
                        }
                    }
                }
            }
            Dir::Down => {
                if level == 0 {
                    return (Err(Endpoint::Bottom(idx)), None);
                }
                let s = self.d.slices[level - 1];
                let n = self.words[level - 1].len();
                match s.kind {
                    SliceKind::CupRight | SliceKind::CupLeft => {
                        let j = n + 1 - s.pos;
                        if idx == j || idx == j + 1 {
                            let other = if idx == j { j + 1 } else { j };
                            (Ok((level, other, Dir::Up)), None)
                        } else {
                            let ni = if idx < j { idx } else { idx - 2 };
                            (Ok((level - 1, ni, Dir::Down)), None)
                        }
                    }
                    SliceKind::CapRight | SliceKind::CapLeft => {
                        let j = n - s.pos - 1;
                        let ni = if idx < j { idx } else { idx + 2 };
                        (Ok((level - 1, ni, Dir::Down)), None)
                    }
                    SliceKind::CrossPos | SliceKind::CrossNeg => {
                        let j = n - s.pos - 1;
                        if idx == j || idx == j + 1 {
                            let w = &self.words[level - 1];
                            let us = under_side(w.get(j), w.get(j + 1), s.kind);
                            // coming down out of above-left means the
                            // right-to-left diagonal, i.e. not the
                            // bottom-left one
                            let (ni, on_left_diag) =
                                if idx == j { (j + 1, false) } else { (j, true) };
                            let is_under = (us == Side::Left) == on_left_diag;
                            (
                                Ok((level - 1, ni, Dir::Down)),
                                Some(CrossingEvent { slice_index: level - 1, is_under }),
                            )
                        } else {
                            (Ok((level - 1, idx, Dir::Down)), None)
                        }
                    }
                }
            }
        }
    }

    fn walk(&mut self, start_level: usize, start_idx: usize, start_dir: Dir) -> (Vec<CrossingEvent>, Option<Endpoint>) {
        let mut events = Vec::new();
        let (mut level, mut idx, mut dir) = (start_level, start_idx, start_dir);
        self.visited[level][idx] = true;
        loop {
            let (next, ev) = self.step(level, idx, dir);
            if let Some(e) = ev {
                events.push(e);
            }
            match next {
                Err(endpoint) => return (events, Some(endpoint)),
                Ok((nl, ni, nd)) => {
                    if nl == start_level && ni == start_idx && nd == start_dir {
                        return (events, None);
                    }
                    debug_assert!(!self.visited[nl][ni], "port revisited");
                    self.visited[nl][ni] = true;
                    level = nl;
                    idx = ni;
                    dir = nd;
                }
            }
        }
    }
}

pub fn trace(d: &Diagram) -> Result<Trace, DiagramError> {
    let words = d.words()?;
    let k = d.slices.len();
    let mut walker = Walker {
        d,
        words: &words,
        visited: words.iter().map(|w| vec![false; w.len()]).collect(),
    };
    let mut strands = Vec::new();

    // bottom sources, rightmost first
    for i in (0..words[0].len()).rev() {
        if words[0].get(i) == Letter::Up {
            let (events, end) = walker.walk(0, i, Dir::Up);
            strands.push(StrandPath { start: Some(Endpoint::Bottom(i)), end, events });
        }
    }
    // top sources, rightmost first
    for i in (0..words[k].len()).rev() {
        if words[k].get(i) == Letter::Down {
            let (events, end) = walker.walk(k, i, Dir::Down);
            strands.push(StrandPath { start: Some(Endpoint::Top(i)), end, events });
        }
    }
    // circles, in scan order
    for level in 0..=k {
        for idx in 0..words[level].len() {
            if !walker.visited[level][idx] {
                let dir = match words[level].get(idx) {
                    Letter::Up => Dir::Up,
                    Letter::Down => Dir::Down,
                };
                let (events, end) = walker.walk(level, idx, dir);
                debug_assert!(end.is_none());
                strands.push(StrandPath { start: None, end: None, events });
            }
        }
    }
    Ok(Trace { strands, words })
}

/// Number of closed curves; meaningful for diagrams with empty boundary.
pub fn components(d: &Diagram) -> Result<usize, DiagramError> {
    Ok(trace(d)?.circle_count())
}
