//! Slice diagrams: a bottom word and a stack of slices.

use crate::letter::{Letter, Word};
use crate::slice::{Slice, SliceKind};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("slice {index} ({slice}) out of range on width {width}")]
    OutOfRange { index: usize, slice: Slice, width: usize },
    #[error("slice {index} ({slice}) expects letters ({want_left:?},{want_right:?}), found ({got_left:?},{got_right:?})")]
    LetterMismatch {
        index: usize,
        slice: Slice,
        want_left: Letter,
        want_right: Letter,
        got_left: Letter,
        got_right: Letter,
    },
    #[error("composition mismatch: top {top} vs bottom {bottom}")]
    Composition { top: Word, bottom: Word },
    #[error("{0}")]
    Input(String),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    pub bottom: Word,
    pub slices: Vec<Slice>,
}

impl Diagram {
    pub fn new(bottom: Word, slices: Vec<Slice>) -> Result<Diagram, DiagramError> {
        let d = Diagram { bottom, slices };
        d.words()?;
        Ok(d)
    }

    pub fn identity(word: Word) -> Diagram {
        Diagram { bottom: word, slices: Vec::new() }
    }

    /// Word above slice `i` given the word below it, or an error.
    pub fn apply_slice(word: &Word, slice: Slice, index: usize) -> Result<Word, DiagramError> {
        let n = word.len();
        let p = slice.pos;
        let mut v = word.0.clone();
        match slice.kind {
            SliceKind::CupRight | SliceKind::CupLeft => {
                if p < 1 || p > n + 1 {
                    return Err(DiagramError::OutOfRange { index, slice, width: n });
                }
                let j = n + 1 - p;
                let (a, b) = slice.kind.turnback_letters();
                v.splice(j..j, [a, b]);
            }
            SliceKind::CapRight | SliceKind::CapLeft => {
                if n < 2 || p < 1 || p > n - 1 {
                    return Err(DiagramError::OutOfRange { index, slice, width: n });
                }
                let j = n - p - 1;
                let (a, b) = slice.kind.turnback_letters();
                if (v[j], v[j + 1]) != (a, b) {
                    return Err(DiagramError::LetterMismatch {
                        index,
                        slice,
                        want_left: a,
                        want_right: b,
                        got_left: v[j],
                        got_right: v[j + 1],
                    });
                }
                v.drain(j..j + 2);
            }
            SliceKind::CrossPos | SliceKind::CrossNeg => {
                if n < 2 || p < 1 || p > n - 1 {
                    return Err(DiagramError::OutOfRange { index, slice, width: n });
                }
                let j = n - p - 1;
                v.swap(j, j + 1);
            }
        }
        Ok(Word(v))
    }

    /// All horizontal words, bottom first; length slices+1.
    pub fn words(&self) -> Result<Vec<Word>, DiagramError> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        out.push(self.bottom.clone());
        for (i, &s) in self.slices.iter().enumerate() {
            let next = Self::apply_slice(out.last().unwrap(), s, i)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Top word; panics on invalid diagrams, so validate at build time.
    pub fn top(&self) -> Word {
        self.words().expect("invalid diagram").pop().unwrap()
    }

    pub fn writhe(&self) -> i64 {
        self.slices.iter().map(|s| s.sign()).sum()
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| s.kind.is_cross()).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let slices: Vec<serde_json::Value> = self
            .slices
            .iter()
            .map(|s| serde_json::json!([s.kind.token(), s.pos]))
            .collect();
        serde_json::json!({"bottom": self.bottom.to_json(), "slices": slices})
    }

    /// Stack `above` on top of `self`; `self.top()` must equal
    /// `above.bottom`.
    pub fn stack(&self, above: &Diagram) -> Result<Diagram, DiagramError> {
        let t = self.top();
        if t != above.bottom {
            return Err(DiagramError::Composition { top: t, bottom: above.bottom.clone() });
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&above.slices);
        Ok(Diagram { bottom: self.bottom.clone(), slices })
    }

    /// Joins bottom to top by nested arcs passing to the right of the
    /// diagram. Requires `bottom == top()`.
    pub fn closure(&self) -> Diagram {
        let a = &self.bottom;
        assert_eq!(self.top(), *a, "closure needs matching boundary words");
        let k = a.len();
        let mut slices: Vec<Slice> = Vec::with_capacity(self.slices.len() + 2 * k);
        for j in 1..=k {
            let kind = match a.get(j - 1) {
                Letter::Up => SliceKind::CupLeft,
                Letter::Down => SliceKind::CupRight,
            };
            slices.push(Slice::new(kind, j));
        }
        slices.extend(self.slices.iter().map(|s| Slice::new(s.kind, s.pos + k)));
        for j in (1..=k).rev() {
            let kind = match a.get(j - 1) {
                Letter::Up => SliceKind::CapRight,
                Letter::Down => SliceKind::CapLeft,
            };
            slices.push(Slice::new(kind, j));
        }
        Diagram::new(Word::empty(), slices).expect("closure arcs chain correctly")
    }

    /// Side-by-side product with `self` on the left. The right factor's
    /// slices keep their positions; the left factor's shift by the right
    /// factor's top width.
    pub fn tensor(&self, right: &Diagram) -> Diagram {
        let shift = right.top().len();
        let mut slices = right.slices.clone();
        slices.extend(
            self.slices
                .iter()
                .map(|s| Slice::new(s.kind, s.pos + shift)),
        );
        Diagram {
            bottom: self.bottom.concat(&right.bottom),
            slices,
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.bottom)?;
        for s in &self.slices {
            write!(f, "; {}", s)?;
        }
        write!(f, "]")
    }
}
