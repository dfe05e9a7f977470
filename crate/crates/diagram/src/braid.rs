//! Braid words as diagrams.

use crate::diagram::{Diagram, DiagramError};
use crate::letter::Word;
use crate::slice::{Slice, SliceKind};

/// Braid on `strands` upward strands; generator i crosses the strands
/// at right-to-left positions i and i+1, positively for i > 0. With
/// `closed` the ends are joined by nested arcs passing to the right.
pub fn from_braid(strands: usize, gens: &[i64], closed: bool) -> Result<Diagram, DiagramError> {
    if strands == 0 {
        return Err(DiagramError::Input("braid needs at least one strand".into()));
    }
    let mut slices = Vec::with_capacity(gens.len());
    for &g in gens {
        if g == 0 || g.unsigned_abs() as usize >= strands {
            return Err(DiagramError::Input(format!(
                "braid generator {} out of range for {} strands",
                g, strands
            )));
        }
        let kind = if g > 0 { SliceKind::CrossPos } else { SliceKind::CrossNeg };
        slices.push(Slice::new(kind, g.unsigned_abs() as usize));
    }
    let open = Diagram::new(Word::up(strands), slices)?;
    Ok(if closed { open.closure() } else { open })
}
