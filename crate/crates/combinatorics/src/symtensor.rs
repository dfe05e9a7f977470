//! Integer combinations of bipartitions with the product induced by
//! multiplying Schur functions in each tensor factor.

use crate::bipartition::Bipartition;
use crate::lr::lr_coeff;
use crate::partition::partitions_of;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymTensor {
    terms: BTreeMap<Bipartition, i64>,
}

impl SymTensor {
    pub fn zero() -> Self {
        SymTensor::default()
    }

    pub fn one() -> Self {
        SymTensor::from_bipartition(Bipartition::empty())
    }

    pub fn from_bipartition(b: Bipartition) -> Self {
        let mut t = SymTensor::zero();
        t.add_term(b, 1);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Bipartition, i64> {
        &self.terms
    }

    pub fn coeff(&self, b: &Bipartition) -> i64 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, b: Bipartition, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.terms.entry(b.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&b);
        }
    }

    pub fn add(&self, other: &SymTensor) -> SymTensor {
        let mut out = self.clone();
        for (b, &c) in &other.terms {
            out.add_term(b.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> SymTensor {
        if c == 0 {
            return SymTensor::zero();
        }
        let mut out = SymTensor::zero();
        for (b, &v) in &self.terms {
            out.add_term(b.clone(), v * c);
        }
        out
    }

    /// Factorwise Schur product extended bilinearly.
    pub fn mul(&self, other: &SymTensor) -> SymTensor {
        let mut out = SymTensor::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let c = ca * cb;
                for up in partitions_of(a.up.size() + b.up.size()) {
                    let cu = lr_coeff(&up, &a.up, &b.up);
                    if cu == 0 {
                        continue;
                    }
                    for down in partitions_of(a.down.size() + b.down.size()) {
                        let cd = lr_coeff(&down, &a.down, &b.down);
                        if cd == 0 {
                            continue;
                        }
                        out.add_term(
                            Bipartition::new(up.clone(), down),
                            c * (cu * cd) as i64,
                        );
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(b, &c)| json!({ "term": b.to_json(), "coeff": c }))
                .collect(),
        )
    }
}

impl fmt::Display for SymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| format!("{}*{}", c, b))
            .collect();
        write!(f, "{}", strs.join(" + "))
    }
}
