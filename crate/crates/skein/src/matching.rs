//! Boundary wirings. A matching on a word pair (a, b) pairs each source
//! point (upward bottom letter or downward top letter) with a target point
//! (downward bottom letter or upward top letter). Matchings index the
//! triangular basis of the hom space from a to b.

use diagram::{trace, Diagram, DiagramError, Endpoint, Letter, Word};
use itertools::Itertools;
use serde_json::{json, Value};

/// Source points of (bottom, top) in ascending endpoint order: bottom
/// letters read left to right, then top letters.
pub fn sources(bottom: &Word, top: &Word) -> Vec<Endpoint> {
    boundary_points(bottom, top, Letter::Up, Letter::Down)
}

/// Target points, same order.
pub fn targets(bottom: &Word, top: &Word) -> Vec<Endpoint> {
    boundary_points(bottom, top, Letter::Down, Letter::Up)
}

fn boundary_points(bottom: &Word, top: &Word, want_bottom: Letter, want_top: Letter) -> Vec<Endpoint> {
    let mut out = Vec::new();
    for i in 0..bottom.len() {
        if bottom.get(i) == want_bottom {
            out.push(Endpoint::Bottom(i));
        }
    }
    for i in 0..top.len() {
        if top.get(i) == want_top {
            out.push(Endpoint::Top(i));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matching {
    bottom: Word,
    top: Word,
    /// (source, target), sorted by source.
    pairs: Vec<(Endpoint, Endpoint)>,
}

impl Matching {
    pub fn new(
        bottom: Word,
        top: Word,
        mut pairs: Vec<(Endpoint, Endpoint)>,
    ) -> Result<Matching, DiagramError> {
        pairs.sort();
        let srcs: Vec<Endpoint> = pairs.iter().map(|p| p.0).collect();
        if srcs != sources(&bottom, &top) {
            return Err(DiagramError::Input(format!(
                "matching sources do not enumerate the upward bottom and downward top letters of {} -> {}",
                bottom, top
            )));
        }
        let mut tgts: Vec<Endpoint> = pairs.iter().map(|p| p.1).collect();
        tgts.sort();
        tgts.dedup();
        if tgts != targets(&bottom, &top) {
            return Err(DiagramError::Input(format!(
                "matching targets do not enumerate the downward bottom and upward top letters of {} -> {}",
                bottom, top
            )));
        }
        Ok(Matching { bottom, top, pairs })
    }

    pub fn bottom(&self) -> &Word {
        &self.bottom
    }

    pub fn top(&self) -> &Word {
        &self.top
    }

    pub fn pairs(&self) -> &[(Endpoint, Endpoint)] {
        &self.pairs
    }

    pub fn target_of(&self, src: Endpoint) -> Endpoint {
        self.pairs
            .iter()
            .find(|p| p.0 == src)
            .expect("not a source of this matching")
            .1
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .pairs
            .iter()
            .map(|(s, t)| json!([endpoint_json(*s, &self.bottom, &self.top), endpoint_json(*t, &self.bottom, &self.top)]))
            .collect();
        Value::Array(pairs)
    }
}

/// Endpoints are reported by side and 1-based position counted from the
/// right, matching slice positions.
fn endpoint_json(e: Endpoint, bottom: &Word, top: &Word) -> Value {
    let (side, idx, n) = match e {
        Endpoint::Bottom(i) => ("bottom", i, bottom.len()),
        Endpoint::Top(i) => ("top", i, top.len()),
    };
    json!({"side": side, "index": n - idx})
}

/// All matchings of a word pair, in lexicographic order of the target
/// sequence against ascending sources. Empty when the flows differ.
pub fn enumerate_matchings(bottom: &Word, top: &Word) -> Vec<Matching> {
    let srcs = sources(bottom, top);
    let tgts = targets(bottom, top);
    if srcs.len() != tgts.len() {
        return Vec::new();
    }
    let d = srcs.len();
    tgts.into_iter()
        .permutations(d)
        .map(|perm| Matching {
            bottom: bottom.clone(),
            top: top.clone(),
            pairs: srcs.iter().copied().zip(perm).collect(),
        })
        .collect()
}

/// d! for d paired points, or 0 when the flows differ.
pub fn dim_hom(bottom: &Word, top: &Word) -> u128 {
    let srcs = sources(bottom, top);
    let tgts = targets(bottom, top);
    if srcs.len() != tgts.len() {
        return 0;
    }
    assert!(srcs.len() <= 33, "dimension overflows u128");
    (1..=srcs.len() as u128).product()
}

/// Boundary wiring of a diagram, ignoring circles and crossings.
pub fn matching_of(d: &Diagram) -> Result<Matching, DiagramError> {
    let tr = trace(d)?;
    let mut pairs = Vec::new();
    for s in &tr.strands {
        if let (Some(start), Some(end)) = (s.start, s.end) {
            pairs.push((start, end));
        }
    }
    pairs.sort();
    Ok(Matching { bottom: d.bottom.clone(), top: d.top(), pairs })
}
