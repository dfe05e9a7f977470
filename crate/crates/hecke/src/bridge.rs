//! Round trip between the strand algebra and endomorphisms of
//! parallel up-strands in the diagram category.

use diagram::{Diagram, Endpoint, Morphism, Slice, SliceKind, Word};
use skein::{Matching, Skein};

use crate::algebra::{HeckeElement, HeckeError};
use crate::perm::Permutation;

/// The positive lift of a permutation: stacked positive crossings
/// following the descent word, so the strand ending at top
/// right-to-left position p starts at bottom position w(p).
pub fn positive_lift(w: &Permutation) -> Diagram {
    let slices: Vec<Slice> = w
        .descent_word()
        .iter()
        .rev()
        .map(|&i| Slice::new(SliceKind::CrossPos, i))
        .collect();
    Diagram::new(Word::up(w.r()), slices).expect("generator positions are in range")
}

/// The algebra map S_{s_i} -> positive crossing of strands i, i+1,
/// extended linearly.
pub fn iota(h: &HeckeElement) -> Morphism {
    let boundary = Word::up(h.r());
    let mut out = Morphism::zero(boundary.clone(), boundary);
    for (w, c) in h.terms() {
        out.add_term(positive_lift(w), c.clone());
    }
    out
}

fn perm_of_matching(m: &Matching, r: usize) -> Permutation {
    let mut images = vec![usize::MAX; r];
    for &(src, tgt) in m.pairs() {
        match (src, tgt) {
            (Endpoint::Bottom(i), Endpoint::Top(j)) => images[r - j - 1] = r - i - 1,
            _ => unreachable!("matchings between up words pair bottom to top"),
        }
    }
    Permutation::from_images(images)
}

/// Inverse of `iota` on endomorphisms of parallel up-strands: normal
/// form, then read each basis matching as a permutation.
pub fn from_endomorphism(f: &Morphism, skein: &mut Skein) -> Result<HeckeElement, HeckeError> {
    let r = f.bottom.len();
    let boundary = Word::up(r);
    if f.bottom != boundary || f.top != boundary {
        return Err(HeckeError::Boundary(r));
    }
    let nf = skein.normal_form(f);
    let mut out = HeckeElement::zero(r, skein.domain().clone());
    for (m, c) in nf.terms() {
        out.add_term(perm_of_matching(m, r), c.clone());
    }
    Ok(out)
}
