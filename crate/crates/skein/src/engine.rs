//! The rewriting engine: expands any morphism over the triangular basis of
//! matchings by repeatedly switching the first crossing that breaks the
//! layered order and splitting off the smoothed term.

use std::collections::BTreeMap;

use diagram::{
    apply_to_diagram, trace, Diagram, DiagramError, Letter, Morphism, Slice, SliceKind, Symmetry,
    Word,
};
use ring::{bubble_value, Domain, RingError, Scalar};
use serde_json::{json, Value};
use thiserror::Error;

use crate::lift::canonical_lift;
use crate::matching::{enumerate_matchings, Matching};

#[derive(Debug, Error)]
pub enum SkeinError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("boundary must be empty, found {0} -> {1}")]
    OpenBoundary(Word, Word),
}

/// A morphism written in the matching basis: bottom word, top word, and a
/// coefficient per matching. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisExpansion {
    pub bottom: Word,
    pub top: Word,
    terms: BTreeMap<Matching, Scalar>,
}

impl BasisExpansion {
    pub fn zero(bottom: Word, top: Word) -> BasisExpansion {
        BasisExpansion { bottom, top, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Matching, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: &Matching) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Matching, c: Scalar) {
        assert_eq!(*m.bottom(), self.bottom, "matching bottom mismatch");
        assert_eq!(*m.top(), self.top, "matching top mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &BasisExpansion) -> BasisExpansion {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &BasisExpansion) -> BasisExpansion {
        self.add(&rhs.scale_by(|c| c.neg()))
    }

    pub fn scale(&self, s: &Scalar) -> BasisExpansion {
        if s.is_zero() {
            return BasisExpansion::zero(self.bottom.clone(), self.top.clone());
        }
        self.scale_by(|c| c.mul(s))
    }

    fn scale_by(&self, f: impl Fn(&Scalar) -> Scalar) -> BasisExpansion {
        let mut out = BasisExpansion::zero(self.bottom.clone(), self.top.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// The linear combination of canonical lifts this expansion denotes.
    pub fn as_morphism(&self) -> Morphism {
        let mut out = Morphism::zero(self.bottom.clone(), self.top.clone());
        for (m, c) in &self.terms {
            out.add_term(canonical_lift(m), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| json!({"matching": m.to_json(), "coeff": c.to_json()}))
            .collect();
        json!({
            "bottom": self.bottom.to_json(),
            "top": self.top.to_json(),
            "terms": terms,
        })
    }
}

/// Rewriting context: fixes the scalar domain and memoizes reductions of
/// bare diagrams. Reuse one across related computations.
pub struct Skein {
    domain: Domain,
    bubble: Scalar,
    memo: BTreeMap<Diagram, BTreeMap<Matching, Scalar>>,
}

impl Skein {
    /// Fails when the circle value is undefined at the evaluation point.
    pub fn new(domain: Domain) -> Result<Skein, RingError> {
        let bubble = bubble_value(&domain)?;
        Ok(Skein { domain, bubble, memo: BTreeMap::new() })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn bubble(&self) -> &Scalar {
        &self.bubble
    }

    pub fn normal_form(&mut self, f: &Morphism) -> BasisExpansion {
        let mut out = BasisExpansion::zero(f.bottom.clone(), f.top.clone());
        for (d, c) in f.terms() {
            for (m, v) in self.reduce(d) {
                out.add_term(m, c.mul(&v));
            }
        }
        out
    }

    pub fn reduce_diagram(&mut self, d: &Diagram) -> BasisExpansion {
        let mut out = BasisExpansion::zero(d.bottom.clone(), d.top());
        for (m, v) in self.reduce(d) {
            out.add_term(m, v);
        }
        out
    }

    fn reduce(&mut self, d: &Diagram) -> BTreeMap<Matching, Scalar> {
        if let Some(hit) = self.memo.get(d) {
            return hit.clone();
        }
        let tr = trace(d).expect("reduce needs a valid diagram");

        // The pivot is the first passage, in walk order, that reaches a
        // crossing nobody has visited yet and goes over it. Behind the
        // pivot the diagram is layered.
        let mut seen = std::collections::BTreeSet::new();
        let mut pivot = None;
        'outer: for s in &tr.strands {
            for e in &s.events {
                if seen.insert(e.slice_index) && !e.is_under {
                    pivot = Some(e.slice_index);
                    break 'outer;
                }
            }
        }

        let result = match pivot {
            None => {
                // Layered diagrams equal their wiring, times a twist per
                // self crossing and a circle value per closed curve.
                let coeff = self
                    .domain
                    .t_pow(tr.self_writhe(d))
                    .mul(&self.bubble.pow(tr.circle_count() as i64));
                let mut pairs = Vec::new();
                for s in &tr.strands {
                    if let (Some(start), Some(end)) = (s.start, s.end) {
                        pairs.push((start, end));
                    }
                }
                let m = Matching::new(d.bottom.clone(), d.top(), pairs)
                    .expect("trace wiring is a matching");
                BTreeMap::from([(m, coeff)])
            }
            Some(idx) => {
                let slice = d.slices[idx];
                let mut switched = d.clone();
                switched.slices[idx].kind = match slice.kind {
                    SliceKind::CrossPos => SliceKind::CrossNeg,
                    SliceKind::CrossNeg => SliceKind::CrossPos,
                    _ => unreachable!("pivot is a crossing"),
                };

                let lower = &tr.words[idx];
                let j = lower.len() - slice.pos - 1;
                let mut smoothed = d.clone();
                match (lower.get(j), lower.get(j + 1)) {
                    (x, y) if x == y => {
                        smoothed.slices.remove(idx);
                    }
                    (Letter::Up, Letter::Down) => {
                        smoothed.slices.splice(
                            idx..idx + 1,
                            [
                                Slice::new(SliceKind::CapRight, slice.pos),
                                Slice::new(SliceKind::CupRight, slice.pos),
                            ],
                        );
                    }
                    (Letter::Down, Letter::Up) => {
                        smoothed.slices.splice(
                            idx..idx + 1,
                            [
                                Slice::new(SliceKind::CapLeft, slice.pos),
                                Slice::new(SliceKind::CupLeft, slice.pos),
                            ],
                        );
                    }
                    _ => unreachable!(),
                }

                let z = if slice.sign() > 0 { self.domain.z() } else { self.domain.z().neg() };
                let mut acc = self.reduce(&switched);
                for (m, v) in self.reduce(&smoothed) {
                    let dv = z.mul(&v);
                    match acc.entry(m) {
                        std::collections::btree_map::Entry::Vacant(slot) => {
                            if !dv.is_zero() {
                                slot.insert(dv);
                            }
                        }
                        std::collections::btree_map::Entry::Occupied(mut slot) => {
                            let s = slot.get().add(&dv);
                            if s.is_zero() {
                                slot.remove();
                            } else {
                                *slot.get_mut() = s;
                            }
                        }
                    }
                }
                acc
            }
        };
        self.memo.insert(d.clone(), result.clone());
        result
    }

    /// Scalar value of an endomorphism of the empty word.
    pub fn evaluate_closed(&mut self, f: &Morphism) -> Result<Scalar, SkeinError> {
        if !f.bottom.is_empty() || !f.top.is_empty() {
            return Err(SkeinError::OpenBoundary(f.bottom.clone(), f.top.clone()));
        }
        let nf = self.normal_form(f);
        Ok(nf
            .terms()
            .values()
            .next()
            .cloned()
            .unwrap_or_else(|| self.domain.zero()))
    }

    /// Framing-corrected invariant of a closed diagram, one per circle
    /// value: t^{-writhe} evaluate / bubble.
    pub fn homfly(&mut self, d: &Diagram) -> Result<Scalar, SkeinError> {
        let f = Morphism::from_diagram(d.clone(), &self.domain);
        let val = self.evaluate_closed(&f)?;
        Ok(self.domain.t_pow(-d.writhe()).mul(&val).div(&self.bubble))
    }

    /// Pairing matrix of the matchings of (a, b): entry (i, j) closes lift
    /// of matching i against the flipped lift of matching j.
    pub fn gram_matrix(&mut self, a: &Word, b: &Word) -> Vec<Vec<Scalar>> {
        let ms = enumerate_matchings(a, b);
        let lifts: Vec<Diagram> = ms.iter().map(canonical_lift).collect();
        let flipped: Vec<Diagram> =
            lifts.iter().map(|d| apply_to_diagram(Symmetry::Tau, d).0).collect();
        let mut out = Vec::with_capacity(ms.len());
        for l in &lifts {
            let mut row = Vec::with_capacity(ms.len());
            for fl in &flipped {
                let closed = l.stack(fl).expect("lift boundaries match").closure();
                let f = Morphism::from_diagram(closed, &self.domain);
                row.push(self.evaluate_closed(&f).expect("closed by construction"));
            }
            out.push(row);
        }
        out
    }
}
