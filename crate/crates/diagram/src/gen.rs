//! Random diagrams for property tests.

use rand::Rng;

use crate::diagram::Diagram;
use crate::letter::{Letter, Word};
use crate::slice::{Slice, SliceKind};

pub fn random_word(rng: &mut impl Rng, len: usize) -> Word {
    Word(
        (0..len)
            .map(|_| if rng.gen_bool(0.5) { Letter::Up } else { Letter::Down })
            .collect(),
    )
}

/// Every slice that can legally follow `word`, cups omitted at
/// `max_width`.
pub fn legal_slices(word: &Word, max_width: usize) -> Vec<Slice> {
    let n = word.len();
    let mut out = Vec::new();
    if n + 2 <= max_width {
        for p in 1..=n + 1 {
            out.push(Slice::new(SliceKind::CupRight, p));
            out.push(Slice::new(SliceKind::CupLeft, p));
        }
    }
    for p in 1..n.max(1) {
        let j = n - p - 1;
        let pair = (word.get(j), word.get(j + 1));
        match pair {
            (Letter::Up, Letter::Down) => out.push(Slice::new(SliceKind::CapRight, p)),
            (Letter::Down, Letter::Up) => out.push(Slice::new(SliceKind::CapLeft, p)),
            _ => {}
        }
        out.push(Slice::new(SliceKind::CrossPos, p));
        out.push(Slice::new(SliceKind::CrossNeg, p));
    }
    out
}

pub fn random_diagram(
    rng: &mut impl Rng,
    bottom: Word,
    steps: usize,
    max_width: usize,
) -> Diagram {
    let mut word = bottom.clone();
    let mut slices = Vec::with_capacity(steps);
    for _ in 0..steps {
        let options = legal_slices(&word, max_width);
        if options.is_empty() {
            break;
        }
        let s = options[rng.gen_range(0..options.len())];
        word = Diagram::apply_slice(&word, s, slices.len()).expect("legal slice");
        slices.push(s);
    }
    Diagram::new(bottom, slices).expect("built from legal slices")
}

/// Random diagram with empty boundary: a random walk from the empty
/// word, capped back down pair by pair.
pub fn random_closed_diagram(rng: &mut impl Rng, steps: usize, max_width: usize) -> Diagram {
    let mut d = random_diagram(rng, Word::empty(), steps, max_width);
    let mut word = d.top();
    while !word.is_empty() {
        let mut caps = Vec::new();
        for j in 0..word.len() - 1 {
            let kind = match (word.get(j), word.get(j + 1)) {
                (Letter::Up, Letter::Down) => SliceKind::CapRight,
                (Letter::Down, Letter::Up) => SliceKind::CapLeft,
                _ => continue,
            };
            caps.push(Slice::new(kind, word.len() - j - 1));
        }
        let s = caps[rng.gen_range(0..caps.len())];
        word = Diagram::apply_slice(&word, s, d.slices.len()).expect("cappable pair");
        d.slices.push(s);
    }
    d
}
