//! Formal linear combinations of diagrams with a fixed boundary.

use std::collections::BTreeMap;
use std::fmt;

use ring::{Domain, Scalar};
use serde_json::{json, Value};

use crate::diagram::Diagram;
use crate::letter::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub bottom: Word,
    pub top: Word,
    terms: BTreeMap<Diagram, Scalar>,
}

impl Morphism {
    pub fn zero(bottom: Word, top: Word) -> Morphism {
        Morphism { bottom, top, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: Diagram, domain: &Domain) -> Morphism {
        Morphism::from_term(d, domain.one())
    }

    pub fn from_term(d: Diagram, c: Scalar) -> Morphism {
        let bottom = d.bottom.clone();
        let top = d.top();
        let mut m = Morphism::zero(bottom, top);
        m.add_term(d, c);
        m
    }

    pub fn identity(word: Word, domain: &Domain) -> Morphism {
        Morphism::from_diagram(Diagram::identity(word), domain)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Diagram, Scalar> {
        self.terms
    }

    pub fn add_term(&mut self, d: Diagram, c: Scalar) {
        assert_eq!(d.bottom, self.bottom, "term bottom mismatch");
        assert_eq!(d.top(), self.top, "term top mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(d);
        match entry {
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

    pub fn add(&self, rhs: &Morphism) -> Morphism {
        assert_eq!(self.bottom, rhs.bottom);
        assert_eq!(self.top, rhs.top);
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Morphism) -> Morphism {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Morphism {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        if s.is_zero() {
            return Morphism::zero(self.bottom.clone(), self.top.clone());
        }
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Morphism {
        let mut out = Morphism::zero(self.bottom.clone(), self.top.clone());
        for (d, c) in &self.terms {
            out.add_term(d.clone(), f(c));
        }
        out
    }

    /// Composite with `rhs` stacked above.
    pub fn then(&self, rhs: &Morphism) -> Morphism {
        assert_eq!(self.top, rhs.bottom, "composition boundary mismatch");
        let mut out = Morphism::zero(self.bottom.clone(), rhs.top.clone());
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                let d = d1.stack(d2).expect("checked boundary");
                out.add_term(d, c1.mul(c2));
            }
        }
        out
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, rhs: &Morphism) -> Morphism {
        let bottom = self.bottom.concat(&rhs.bottom);
        let top = self.top.concat(&rhs.top);
        let mut out = Morphism::zero(bottom, top);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                out.add_term(d1.tensor(d2), c1.mul(c2));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(d, c)| json!({"coeff": c.to_json(), "diagram": d.to_json()}))
            .collect();
        json!({
            "bottom": self.bottom.to_json(),
            "top": self.top.to_json(),
            "terms": terms,
        })
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0: {} -> {}", self.bottom, self.top);
        }
        let body: Vec<String> =
            self.terms.iter().map(|(d, c)| format!("({}) {}", c, d)).collect();
        write!(f, "{}", body.join(" + "))
    }
}
