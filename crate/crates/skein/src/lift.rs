//! Canonical diagram lifts of matchings: caps in a bottom band, a reduced
//! permutation braid of the through strands in the middle, cups in a top
//! band. At every crossing the strand walked earlier (bottom sources right
//! to left, then top sources right to left) passes under, so lifts are
//! fixed points of the rewriting engine. Lifts carry no closed curves, no
//! strand crosses itself, and no two strands cross twice.

use std::collections::BTreeMap;

use diagram::{cross_kind, Diagram, Endpoint, Letter, Side, Slice, SliceKind};

use crate::matching::Matching;

/// Entry of a horizontal word together with the strand occupying it.
#[derive(Clone, Copy)]
struct Occ {
    rank: usize,
    letter: Letter,
}

/// Ops recorded while scanning the top band downward; emitted in reverse.
enum VOp {
    /// Swap of virtual entries j, j+1; fields hold the entries before the
    /// swap, reading the virtual (upper) word.
    Cross { j: usize, left: Occ, right: Occ },
    /// Virtual cap of entries j, j+1 with these letters.
    Cap { j: usize, x: Letter, y: Letter },
}

pub fn canonical_lift(m: &Matching) -> Diagram {
    let a = m.bottom();
    let b = m.top();

    // Strand ranks in walk order.
    let mut rank_of: BTreeMap<Endpoint, usize> = BTreeMap::new();
    let mut ordered: Vec<(Endpoint, Endpoint)> = m.pairs().to_vec();
    ordered.sort_by_key(|(s, _)| match s {
        Endpoint::Bottom(i) => (0, std::cmp::Reverse(*i)),
        Endpoint::Top(i) => (1, std::cmp::Reverse(*i)),
    });
    for (rank, (s, t)) in ordered.iter().enumerate() {
        rank_of.insert(*s, rank);
        rank_of.insert(*t, rank);
    }

    let mut slices: Vec<Slice> = Vec::new();

    // Bottom band: cap off every strand with both ends on the bottom.
    let mut state: Vec<Occ> = (0..a.len())
        .map(|i| Occ { rank: rank_of[&Endpoint::Bottom(i)], letter: a.get(i) })
        .collect();
    let mut caps: Vec<usize> = ordered
        .iter()
        .enumerate()
        .filter(|(_, (s, t))| {
            matches!(s, Endpoint::Bottom(_)) && matches!(t, Endpoint::Bottom(_))
        })
        .map(|(rank, _)| rank)
        .collect();
    while !caps.is_empty() {
        let (which, (i1, i2)) = caps
            .iter()
            .enumerate()
            .map(|(which, &rank)| (which, legs(&state, rank)))
            .min_by_key(|&(_, (i1, i2))| (i2 - i1 - 1, i1))
            .unwrap();
        caps.swap_remove(which);
        // walk the right leg down to i1+1, one swap at a time
        for site in (i1 + 1..i2).rev() {
            slices.push(cross_by_rank(&state, site));
            state.swap(site, site + 1);
        }
        let kind = match (state[i1].letter, state[i1 + 1].letter) {
            (Letter::Up, Letter::Down) => SliceKind::CapRight,
            (Letter::Down, Letter::Up) => SliceKind::CapLeft,
            other => panic!("cap strand with parallel letters {:?}", other),
        };
        slices.push(Slice::new(kind, state.len() - i1 - 1));
        state.drain(i1..i1 + 2);
    }

    // Top band, scanned downward first: cup strands capped virtually, ops
    // replayed upward after the middle band.
    let mut vstate: Vec<Occ> = (0..b.len())
        .map(|i| Occ { rank: rank_of[&Endpoint::Top(i)], letter: b.get(i) })
        .collect();
    let mut cups: Vec<usize> = ordered
        .iter()
        .enumerate()
        .filter(|(_, (s, t))| matches!(s, Endpoint::Top(_)) && matches!(t, Endpoint::Top(_)))
        .map(|(rank, _)| rank)
        .collect();
    let mut vops: Vec<VOp> = Vec::new();
    while !cups.is_empty() {
        let (which, (i1, i2)) = cups
            .iter()
            .enumerate()
            .map(|(which, &rank)| (which, legs(&vstate, rank)))
            .min_by_key(|&(_, (i1, i2))| (i2 - i1 - 1, i1))
            .unwrap();
        cups.swap_remove(which);
        // same right-leg walk as the cap band, recorded for later replay
        for site in (i1 + 1..i2).rev() {
            vops.push(VOp::Cross { j: site, left: vstate[site], right: vstate[site + 1] });
            vstate.swap(site, site + 1);
        }
        vops.push(VOp::Cap { j: i1, x: vstate[i1].letter, y: vstate[i1 + 1].letter });
        vstate.drain(i1..i1 + 2);
    }

    // Middle band: reduced braid routing the through strands from their
    // post-cap order to their pre-cup order, in right-to-left coordinates.
    let k = state.len();
    assert_eq!(vstate.len(), k, "through strand count mismatch");
    let target_r2l: BTreeMap<usize, usize> =
        vstate.iter().enumerate().map(|(j, occ)| (occ.rank, k - 1 - j)).collect();
    let w: Vec<usize> = (0..k).map(|p| target_r2l[&state[k - 1 - p].rank]).collect();
    for i in combinatorics::perm::first_descent_reduced_word(&w) {
        let j = k - i - 1;
        slices.push(cross_by_rank(&state, j));
        state.swap(j, j + 1);
    }
    for (j, occ) in vstate.iter().enumerate() {
        assert_eq!(state[j].rank, occ.rank, "middle band failed to sort strands");
    }

    // Replay the top band upward.
    let mut width = k;
    for op in vops.iter().rev() {
        match *op {
            VOp::Cap { j, x, y } => {
                let kind = match (x, y) {
                    (Letter::Down, Letter::Up) => SliceKind::CupRight,
                    (Letter::Up, Letter::Down) => SliceKind::CupLeft,
                    other => panic!("cup strand with parallel letters {:?}", other),
                };
                slices.push(Slice::new(kind, width + 1 - j));
                width += 2;
            }
            VOp::Cross { j, left, right } => {
                // reading upward the swapped pair sits below: left entry on
                // the lower right, right entry on the lower left
                let side = if left.rank < right.rank { Side::Right } else { Side::Left };
                slices.push(Slice::new(
                    cross_kind(right.letter, left.letter, side),
                    width - j - 1,
                ));
            }
        }
    }

    let d = Diagram::new(a.clone(), slices).expect("lift bands chain correctly");
    debug_assert_eq!(d.top(), *b);
    d
}

fn legs(state: &[Occ], rank: usize) -> (usize, usize) {
    let mut it = state.iter().enumerate().filter(|(_, o)| o.rank == rank).map(|(i, _)| i);
    let i1 = it.next().expect("strand leg missing");
    let i2 = it.next().expect("strand leg missing");
    (i1, i2)
}

/// Crossing of entries j, j+1 with the earlier-walked strand under.
fn cross_by_rank(state: &[Occ], j: usize) -> Slice {
    let (l, r) = (state[j], state[j + 1]);
    let side = if l.rank < r.rank { Side::Left } else { Side::Right };
    Slice::new(cross_kind(l.letter, r.letter, side), state.len() - j - 1)
}
