//! Laurent polynomials in z and t over the rationals.
//!
//! Terms are keyed by (z-exponent, t-exponent); stored coefficients are never
//! zero. Text form lists terms by exponent pair, lexicographically descending;
//! the JSON form is a list of [z-exp, t-exp, "coefficient"] triples in the same
//! order.

use crate::{Int, Rat};
use num::{Integer, One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i32, i32), Rat>,
}

fn checked_exp(a: i32, b: i32) -> i32 {
    let s = a as i64 + b as i64;
    i32::try_from(s).unwrap_or_else(|_| panic!("Laurent exponent overflow: {}", s))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rat, ez: i32, et: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((ez, et), c);
        }
        LaurentPoly { terms }
    }

    pub fn z() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn t_pow(e: i32) -> Self {
        Self::monomial(Rat::one(), 0, e)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, i32), Rat)>) -> Self {
        let mut p = Self::zero();
        for ((ez, et), c) in terms {
            p.add_term(ez, et, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending (z-exp, t-exp) order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&(i32, i32), &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, ez: i32, et: i32) -> Rat {
        self.terms.get(&(ez, et)).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, ez: i32, et: i32, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((ez, et)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn eval(&self, z0: &Rat, t0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(ez, et), c) in &self.terms {
            acc += c * crate::rat_pow(z0, ez as i64) * crate::rat_pow(t0, et as i64);
        }
        acc
    }

    /// z -> -z: negate coefficients of odd z-degree terms.
    pub fn negate_z(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(ez, et), c)| ((ez, et), if ez.rem_euclid(2) == 1 { -c.clone() } else { c.clone() }))
            .collect();
        LaurentPoly { terms }
    }

    /// t -> -t: negate coefficients of odd t-degree terms.
    pub fn negate_t(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(ez, et), c)| ((ez, et), if et.rem_euclid(2) == 1 { -c.clone() } else { c.clone() }))
            .collect();
        LaurentPoly { terms }
    }

    /// t -> t^{-1}: negate every t-exponent.
    pub fn invert_t(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(ez, et), c)| ((ez, -et), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    /// Smallest exponents over all terms, None when zero.
    pub fn min_exponents(&self) -> Option<(i32, i32)> {
        if self.terms.is_empty() {
            return None;
        }
        let mut mz = i32::MAX;
        let mut mt = i32::MAX;
        for &(ez, et) in self.terms.keys() {
            mz = mz.min(ez);
            mt = mt.min(et);
        }
        Some((mz, mt))
    }

    pub fn shift_exponents(&self, dz: i32, dt: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(ez, et), c)| ((checked_exp(ez, dz), checked_exp(et, dt)), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    /// gcd of numerators over lcm of denominators; positive, zero for the zero
    /// polynomial.
    pub fn content(&self) -> Rat {
        let mut num_gcd = Int::zero();
        let mut den_lcm = Int::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            Rat::zero()
        } else {
            Rat::new(num_gcd, den_lcm)
        }
    }

    /// Coefficient of the lexicographically largest exponent pair.
    pub fn leading_coeff(&self) -> Rat {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(&k, v)| (k, v * c)).collect();
        LaurentPoly { terms }
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&(ez, et), c) in self.terms.iter().rev() {
            parts.push(format!("{}*z^{}*t^{}", c, ez, et));
        }
        parts.join(" + ")
    }

    pub fn to_json(&self) -> Value {
        let mut arr = Vec::new();
        for (&(ez, et), c) in self.terms.iter().rev() {
            arr.push(json!([ez, et, c.to_string()]));
        }
        Value::Array(arr)
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let arr = v.as_array()?;
        let mut p = Self::zero();
        for item in arr {
            let triple = item.as_array()?;
            if triple.len() != 3 {
                return None;
            }
            let ez = i32::try_from(triple[0].as_i64()?).ok()?;
            let et = i32::try_from(triple[1].as_i64()?).ok()?;
            let c: Rat = triple[2].as_str()?.parse().ok()?;
            p.add_term(ez, et, c);
        }
        Some(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(ez, et), c) in &rhs.terms {
            out.add_term(ez, et, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(ez, et), c) in &rhs.terms {
            out.add_term(ez, et, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect();
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(az, at), ac) in &self.terms {
            for (&(bz, bt), bc) in &rhs.terms {
                out.add_term(checked_exp(az, bz), checked_exp(at, bt), ac * bc);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
