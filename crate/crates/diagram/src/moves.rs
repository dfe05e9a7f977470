//! Local isotopy insertions. Each helper splices slices into an
//! existing diagram at a given level without changing the boundary,
//! for invariance testing.

use crate::diagram::{Diagram, DiagramError};
use crate::letter::Letter;
use crate::slice::{Slice, SliceKind};

fn splice(d: &Diagram, level: usize, block: Vec<Slice>) -> Result<Diagram, DiagramError> {
    assert!(level <= d.slices.len(), "level out of range");
    let mut slices = d.slices[..level].to_vec();
    slices.extend(block);
    slices.extend_from_slice(&d.slices[level..]);
    Diagram::new(d.bottom.clone(), slices)
}

/// Curl the strand at right-to-left position `pos` of the word at
/// `level`. The inserted crossing carries the requested sign.
pub fn insert_kink(
    d: &Diagram,
    level: usize,
    pos: usize,
    positive: bool,
) -> Result<Diagram, DiagramError> {
    let word = &d.words()?[level];
    assert!(pos >= 1 && pos <= word.len(), "no strand at position");
    let letter = word.get(word.len() - pos);
    let (cup, cap) = match letter {
        Letter::Up => (SliceKind::CupLeft, SliceKind::CapRight),
        Letter::Down => (SliceKind::CupRight, SliceKind::CapLeft),
    };
    let cross = if positive { SliceKind::CrossPos } else { SliceKind::CrossNeg };
    splice(
        d,
        level,
        vec![Slice::new(cup, pos), Slice::new(cross, pos + 1), Slice::new(cap, pos)],
    )
}

/// Push the strand at `pos` through a wave: a cup-cap pair that cancels
/// to the identity.
pub fn insert_zigzag(d: &Diagram, level: usize, pos: usize) -> Result<Diagram, DiagramError> {
    let word = &d.words()?[level];
    assert!(pos >= 1 && pos <= word.len(), "no strand at position");
    let (cup, cap) = match word.get(word.len() - pos) {
        Letter::Up => (SliceKind::CupRight, SliceKind::CapRight),
        Letter::Down => (SliceKind::CupLeft, SliceKind::CapLeft),
    };
    splice(d, level, vec![Slice::new(cup, pos), Slice::new(cap, pos + 1)])
}

/// A crossing followed by its inverse at `pos`.
pub fn insert_cross_pair(
    d: &Diagram,
    level: usize,
    pos: usize,
    first_positive: bool,
) -> Result<Diagram, DiagramError> {
    let (k1, k2) = if first_positive {
        (SliceKind::CrossPos, SliceKind::CrossNeg)
    } else {
        (SliceKind::CrossNeg, SliceKind::CrossPos)
    };
    splice(d, level, vec![Slice::new(k1, pos), Slice::new(k2, pos)])
}

/// A half twist of the three strands at positions pos..pos+2 followed
/// by its undoing in the other reduced order. Every pair of strands
/// crosses twice with the same strand under, so the block is isotopic
/// to the identity, but cancelling it requires the triple-crossing
/// move, not just inverse pairs. Crossing kinds are derived from the
/// under side and the letters actually present, so the block is a
/// rigid isotopy for any orientations.
pub fn insert_triple_block(d: &Diagram, level: usize, pos: usize) -> Result<Diagram, DiagramError> {
    use crate::slice::{cross_kind, Side};
    let word = &d.words()?[level];
    let n = word.len();
    assert!(pos >= 1 && pos + 2 <= n, "need three strands at position");
    let mut letters: Vec<Letter> = (0..n).map(|j| word.get(j)).collect();
    let mut block = Vec::with_capacity(6);
    let pattern = [
        (pos, Side::Left),
        (pos + 1, Side::Left),
        (pos, Side::Left),
        (pos + 1, Side::Right),
        (pos, Side::Right),
        (pos + 1, Side::Right),
    ];
    for (site, side) in pattern {
        let j = n - site - 1;
        block.push(Slice::new(cross_kind(letters[j], letters[j + 1], side), site));
        letters.swap(j, j + 1);
    }
    splice(d, level, block)
}
