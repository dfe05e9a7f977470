//! The slice alphabet and the crossing sign tables.

use crate::letter::Letter;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SliceKind {
    /// Creates the pair (down, up) read left to right.
    CupRight,
    /// Creates the pair (up, down).
    CupLeft,
    /// Consumes the pair (up, down).
    CapRight,
    /// Consumes the pair (down, up).
    CapLeft,
    CrossPos,
    CrossNeg,
}

impl SliceKind {
    pub fn is_cup(self) -> bool {
        matches!(self, SliceKind::CupRight | SliceKind::CupLeft)
    }

    pub fn is_cap(self) -> bool {
        matches!(self, SliceKind::CapRight | SliceKind::CapLeft)
    }

    pub fn is_cross(self) -> bool {
        matches!(self, SliceKind::CrossPos | SliceKind::CrossNeg)
    }

    /// Letter pair a cup creates / a cap consumes, left to right.
    pub fn turnback_letters(self) -> (Letter, Letter) {
        match self {
            SliceKind::CupRight | SliceKind::CapLeft => (Letter::Down, Letter::Up),
            SliceKind::CupLeft | SliceKind::CapRight => (Letter::Up, Letter::Down),
            _ => panic!("turnback_letters on a crossing"),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            SliceKind::CupRight => "cupr",
            SliceKind::CupLeft => "cupl",
            SliceKind::CapRight => "capr",
            SliceKind::CapLeft => "capl",
            SliceKind::CrossPos => "x+",
            SliceKind::CrossNeg => "x-",
        }
    }
}

/// Which bottom corner of a crossing lies on the under strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Crossing kind from the letters below it (left, right) and the side
/// whose curve goes under. Positive means the frame (over tangent,
/// under tangent) is direct.
pub fn cross_kind(x: Letter, y: Letter, under: Side) -> SliceKind {
    use Letter::*;
    use Side::*;
    match (x, y, under) {
        (Up, Up, Left) | (Down, Down, Left) => SliceKind::CrossNeg,
        (Up, Up, Right) | (Down, Down, Right) => SliceKind::CrossPos,
        (Up, Down, Left) | (Down, Up, Left) => SliceKind::CrossPos,
        (Up, Down, Right) | (Down, Up, Right) => SliceKind::CrossNeg,
    }
}

/// Inverse of `cross_kind` in the side argument.
pub fn under_side(x: Letter, y: Letter, kind: SliceKind) -> Side {
    let positive = match kind {
        SliceKind::CrossPos => true,
        SliceKind::CrossNeg => false,
        _ => panic!("under_side on a non-crossing"),
    };
    if (x == y) == positive {
        Side::Right
    } else {
        Side::Left
    }
}

/// One elementary layer. `pos` is 1-based, counted from the right: a
/// crossing or cap at position p touches strands p and p+1; a cup at
/// position p creates strands at positions p and p+1 of the new word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slice {
    pub kind: SliceKind,
    pub pos: usize,
}

impl Slice {
    pub fn new(kind: SliceKind, pos: usize) -> Slice {
        Slice { kind, pos }
    }

    pub fn sign(&self) -> i64 {
        match self.kind {
            SliceKind::CrossPos => 1,
            SliceKind::CrossNeg => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind.token(), self.pos)
    }
}
