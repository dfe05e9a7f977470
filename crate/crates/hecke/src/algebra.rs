//! The quadratic quotient of the braid group algebra on r strands,
//! with standard basis indexed by permutations.

use std::collections::BTreeMap;

use combinatorics::Partition;
use ring::{Domain, ParamProfile, RingError, Scalar};
use serde_json::{json, Value};
use thiserror::Error;

use crate::perm::{all_elements, Permutation};

#[derive(Debug, Error)]
pub enum HeckeError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("operation needs specialized parameters")]
    SymbolicDomain,
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("boundary must be {0} parallel up strands")]
    Boundary(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Element of the rank-r algebra: a finite sum of standard basis
/// elements S_w with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    r: usize,
    domain: Domain,
    terms: BTreeMap<Permutation, Scalar>,
}

impl HeckeElement {
    pub fn zero(r: usize, domain: Domain) -> HeckeElement {
        HeckeElement { r, domain, terms: BTreeMap::new() }
    }

    pub fn one(r: usize, domain: Domain) -> HeckeElement {
        let mut h = HeckeElement::zero(r, domain);
        let c = h.domain.one();
        h.add_term(Permutation::identity(r), c);
        h
    }

    /// S_w.
    pub fn basis(w: Permutation, domain: Domain) -> HeckeElement {
        let mut h = HeckeElement::zero(w.r(), domain);
        let c = h.domain.one();
        h.add_term(w, c);
        h
    }

    /// S_{s_i} in rank r.
    pub fn generator(r: usize, i: usize, domain: Domain) -> HeckeElement {
        HeckeElement::basis(Permutation::transposition(r, i), domain)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: Scalar) {
        assert_eq!(w.r(), self.r, "term rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, rhs: &HeckeElement) -> HeckeElement {
        assert_eq!(self.r, rhs.r);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &HeckeElement) -> HeckeElement {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> HeckeElement {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &Scalar) -> HeckeElement {
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> HeckeElement {
        let mut out = HeckeElement::zero(self.r, self.domain.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Right product with the generator S_i: S_w S_i = S_{w s_i} when
    /// the length goes up, S_{w s_i} + z S_w when it goes down.
    pub fn mul_gen(&self, i: usize) -> HeckeElement {
        let z = self.domain.z();
        let mut out = HeckeElement::zero(self.r, self.domain.clone());
        for (w, c) in &self.terms {
            let wi = w.right_mul_gen(i);
            if wi.length() > w.length() {
                out.add_term(wi, c.clone());
            } else {
                out.add_term(wi, c.clone());
                out.add_term(w.clone(), c.mul(&z));
            }
        }
        out
    }

    pub fn mul(&self, rhs: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        if self.r != rhs.r {
            return Err(HeckeError::RankMismatch(self.r, rhs.r));
        }
        assert_eq!(self.domain, rhs.domain, "mixed scalar domains");
        let mut out = HeckeElement::zero(self.r, self.domain.clone());
        for (w, c) in &rhs.terms {
            // S_w = S_{ik} ... S_{i1} for the descent word [i1..ik]
            let mut part = self.clone();
            for &i in w.descent_word().iter().rev() {
                part = part.mul_gen(i);
            }
            out = out.add(&part.scale(c));
        }
        Ok(out)
    }

    /// Image under the inclusion into rank big_r fixing strands
    /// offset+1 .. offset+r pointwise as a block.
    pub fn embed(&self, offset: usize, big_r: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(big_r, self.domain.clone());
        for (w, c) in &self.terms {
            out.add_term(w.embed(offset, big_r), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| json!({"perm": w.to_json(), "coeff": c.to_json()}))
            .collect();
        json!({"r": self.r, "terms": terms})
    }
}

/// The block-preserving subgroup for the composition given by lam's
/// parts laid out left to right.
fn young_subgroup(lam: &Partition) -> Vec<Permutation> {
    let mut partials: Vec<Vec<usize>> = vec![Vec::new()];
    let mut offset = 0usize;
    for &part in lam.parts() {
        let k = part as usize;
        let blocks = combinatorics::perm::all_permutations(k);
        let mut next = Vec::with_capacity(partials.len() * blocks.len());
        for pre in &partials {
            for b in &blocks {
                let mut v = pre.clone();
                v.extend(b.iter().map(|&x| x + offset));
                next.push(v);
            }
        }
        partials = next;
        offset += k;
    }
    partials.into_iter().map(Permutation::from_images).collect()
}

/// The q-symmetrizer x = sum q^{l(w)} S_w and antisymmetrizer
/// y = sum (-q)^{-l(w)} S_w over the block subgroup of lam.
pub fn symmetrizers(
    lam: &Partition,
    domain: &Domain,
) -> Result<(HeckeElement, HeckeElement), HeckeError> {
    if domain.params().is_none() {
        return Err(HeckeError::SymbolicDomain);
    }
    let r = lam.size() as usize;
    let mut x = HeckeElement::zero(r, domain.clone());
    let mut y = HeckeElement::zero(r, domain.clone());
    for w in young_subgroup(lam) {
        let l = w.length() as i64;
        x.add_term(w.clone(), domain.q_pow(l));
        let mut c = domain.q_pow(-l);
        if l % 2 == 1 {
            c = c.neg();
        }
        y.add_term(w, c);
    }
    Ok((x, y))
}

/// Permutation sending the row-reading filling of lam to the
/// column-reading filling.
pub fn interchange_perm(lam: &Partition) -> Permutation {
    let cells = lam.cells();
    let mut col_order = cells.clone();
    col_order.sort_by_key(|&(row, col)| (col, row));
    let mut col_label = BTreeMap::new();
    for (idx, cell) in col_order.into_iter().enumerate() {
        col_label.insert(cell, idx);
    }
    Permutation::from_images(cells.into_iter().map(|cell| col_label[&cell]).collect())
}

/// S_w^{-1}, expanded via S_i^{-1} = S_i - z.
pub fn basis_inverse(w: &Permutation, domain: &Domain) -> HeckeElement {
    let z = domain.z();
    let mut out = HeckeElement::one(w.r(), domain.clone());
    for &i in &w.descent_word() {
        let si = out.mul_gen(i);
        out = si.sub(&out.scale(&z));
    }
    out
}

/// The primitive Young idempotent of shape lam. The seed
/// p = S_d^{-1} y_{lam'} S_d x_lam conjugates the parabolic
/// antisymmetrizer onto the column groups of the row-reading tableau,
/// so p is a rank-one quasi-idempotent in the lam matrix block;
/// e = p/tau where p^2 = tau p.
pub fn young_idempotent(
    lam: &Partition,
    profile: &ParamProfile,
) -> Result<HeckeElement, HeckeError> {
    assert!(lam.size() <= 6, "idempotent sizes are capped at 6");
    profile.ensure_q_generic()?;
    let domain = profile.domain();
    let (x, _) = symmetrizers(lam, &domain)?;
    let (_, y) = symmetrizers(&lam.conjugate(), &domain)?;
    let d = interchange_perm(lam);
    let d_elt = HeckeElement::basis(d.clone(), domain.clone());
    let d_inv = basis_inverse(&d, &domain);
    let p = d_inv.mul(&y)?.mul(&d_elt)?.mul(&x)?;
    let p2 = p.mul(&p)?;
    let (w0, c0) = p.terms.iter().next().expect("seed is nonzero at these parameters");
    let tau = match p2.coeff(w0) {
        Some(c2) => c2.div(c0),
        None => domain.zero(),
    };
    if tau.is_zero() || p2 != p.scale(&tau) {
        return Err(HeckeError::Degenerate("seed is not quasi-idempotent".into()));
    }
    Ok(p.scale(&tau.inverse()))
}

/// L_r = S_{r-1} ... S_1 S_1 ... S_{r-1}, the rank-r commuting element;
/// L_1 = 1.
pub fn jm_l(r: usize, domain: &Domain) -> HeckeElement {
    assert!(r >= 1);
    let mut out = HeckeElement::one(r, domain.clone());
    let mut gens: Vec<usize> = (1..r).rev().collect();
    gens.extend(1..r);
    for i in gens {
        out = out.mul_gen(i);
    }
    out
}

/// Multiplicative functional S_i -> -1/q.
pub fn sign_character(h: &HeckeElement) -> Result<Scalar, HeckeError> {
    character(h, true)
}

/// Multiplicative functional S_i -> q.
pub fn trivial_character(h: &HeckeElement) -> Result<Scalar, HeckeError> {
    character(h, false)
}

fn character(h: &HeckeElement, sign: bool) -> Result<Scalar, HeckeError> {
    if h.domain.params().is_none() {
        return Err(HeckeError::SymbolicDomain);
    }
    let mut out = h.domain.zero();
    for (w, c) in &h.terms {
        let l = w.length() as i64;
        let mut v = h.domain.q_pow(if sign { -l } else { l });
        if sign && l % 2 == 1 {
            v = v.neg();
        }
        out = out.add(&c.mul(&v));
    }
    Ok(out)
}

/// Standard basis of rank r in lexicographic order.
pub fn standard_basis(r: usize, domain: &Domain) -> Vec<HeckeElement> {
    all_elements(r)
        .into_iter()
        .map(|w| HeckeElement::basis(w, domain.clone()))
        .collect()
}
