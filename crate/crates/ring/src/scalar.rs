//! Scalar values for morphism coefficients.
//!
//! Two domains: Symbolic holds an unreduced fraction of Laurent polynomials in
//! z and t (equality by cross-multiplication, no gcd reduction); Specialized
//! holds an exact rational together with the fixed evaluation point (q0, t0),
//! where z0 = q0 - q0^{-1}. Mixing domains in arithmetic is a programming
//! error and panics.

use crate::laurent::LaurentPoly;
use crate::{rat_pow, Rat};
use num::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("degenerate parameter point: {0}")]
    Degenerate(String),
    #[error("invalid input: {0}")]
    Input(String),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpecParams {
    pub q0: Rat,
    pub t0: Rat,
}

impl SpecParams {
    pub fn z0(&self) -> Rat {
        &self.q0 - self.q0.recip()
    }
}

/// Which scalar world a computation runs in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Domain {
    Symbolic,
    Specialized(Rc<SpecParams>),
}

impl Domain {
    pub fn specialized(q0: Rat, t0: Rat) -> Self {
        assert!(!q0.is_zero(), "q0 must be nonzero");
        assert!(!t0.is_zero(), "t0 must be nonzero");
        Domain::Specialized(Rc::new(SpecParams { q0, t0 }))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Domain::Symbolic => Scalar::Symbolic {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            },
            Domain::Specialized(p) => Scalar::Specialized { value: Rat::zero(), params: p.clone() },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rat(Rat::from_integer(n.into()))
    }

    pub fn from_rat(&self, r: Rat) -> Scalar {
        match self {
            Domain::Symbolic => Scalar::Symbolic {
                num: LaurentPoly::constant(r),
                den: LaurentPoly::one(),
            },
            Domain::Specialized(p) => Scalar::Specialized { value: r, params: p.clone() },
        }
    }

    pub fn z(&self) -> Scalar {
        match self {
            Domain::Symbolic => Scalar::from_laurent(LaurentPoly::z()),
            Domain::Specialized(p) => {
                Scalar::Specialized { value: p.z0(), params: p.clone() }
            }
        }
    }

    /// t^e.
    pub fn t_pow(&self, e: i64) -> Scalar {
        match self {
            Domain::Symbolic => {
                let e32 = i32::try_from(e).expect("t exponent overflow");
                Scalar::from_laurent(LaurentPoly::t_pow(e32))
            }
            Domain::Specialized(p) => {
                Scalar::Specialized { value: rat_pow(&p.t0, e), params: p.clone() }
            }
        }
    }

    pub fn t(&self) -> Scalar {
        self.t_pow(1)
    }

    /// q0^e; panics in the symbolic domain (q is not a symbolic variable here).
    pub fn q_pow(&self, e: i64) -> Scalar {
        match self {
            Domain::Symbolic => panic!("q-powers require a specialized domain"),
            Domain::Specialized(p) => {
                Scalar::Specialized { value: rat_pow(&p.q0, e), params: p.clone() }
            }
        }
    }

    pub fn params(&self) -> Option<&SpecParams> {
        match self {
            Domain::Symbolic => None,
            Domain::Specialized(p) => Some(p),
        }
    }
}

/// Circle value (t - t^{-1}) / z for the domain; errors when z0 = 0.
pub fn bubble_value(d: &Domain) -> Result<Scalar, RingError> {
    match d {
        Domain::Symbolic => Ok(Scalar::Symbolic {
            num: &LaurentPoly::t_pow(1) - &LaurentPoly::t_pow(-1),
            den: LaurentPoly::z(),
        }),
        Domain::Specialized(p) => {
            let z0 = p.z0();
            if z0.is_zero() {
                return Err(RingError::Degenerate(format!(
                    "z = 0 at q = {}, the circle value is undefined",
                    p.q0
                )));
            }
            let v = (&p.t0 - p.t0.recip()) / z0;
            Ok(Scalar::Specialized { value: v, params: p.clone() })
        }
    }
}

/// [n] = (q^n - q^{-n})/(q - q^{-1}) evaluated at the domain's q0.
/// Requires a specialized domain.
pub fn quantum_integer(n: i64, d: &Domain) -> Scalar {
    match d {
        Domain::Symbolic => panic!("quantum integers require a specialized domain"),
        Domain::Specialized(p) => {
            let neg = n < 0;
            let n = n.unsigned_abs() as i64;
            let mut acc = Rat::zero();
            for k in 0..n {
                acc += rat_pow(&p.q0, n - 1 - 2 * k);
            }
            if neg {
                acc = -acc;
            }
            Scalar::Specialized { value: acc, params: p.clone() }
        }
    }
}

/// [n]! = [1][2]...[n].
pub fn quantum_factorial(n: u32, d: &Domain) -> Scalar {
    let mut acc = d.one();
    for k in 1..=n {
        acc = acc.mul(&quantum_integer(k as i64, d));
    }
    acc
}

/// Parameter map induced by a symmetry: z possibly negated, t fixed, negated,
/// or inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TMap {
    Id,
    Neg,
    Inv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamTransform {
    pub z_neg: bool,
    pub t_map: TMap,
}

impl ParamTransform {
    pub const IDENTITY: ParamTransform = ParamTransform { z_neg: false, t_map: TMap::Id };

    pub fn describe(&self) -> String {
        let z = if self.z_neg { "-z" } else { "z" };
        let t = match self.t_map {
            TMap::Id => "t",
            TMap::Neg => "-t",
            TMap::Inv => "t^-1",
        };
        format!("({}, {})", z, t)
    }

    /// Transport a specialized evaluation point: z -> -z is realized by
    /// q0 -> q0^{-1}.
    pub fn apply_params(&self, p: &SpecParams) -> SpecParams {
        let q0 = if self.z_neg { p.q0.recip() } else { p.q0.clone() };
        let t0 = match self.t_map {
            TMap::Id => p.t0.clone(),
            TMap::Neg => -p.t0.clone(),
            TMap::Inv => p.t0.recip(),
        };
        SpecParams { q0, t0 }
    }
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Symbolic { num: LaurentPoly, den: LaurentPoly },
    Specialized { value: Rat, params: Rc<SpecParams> },
}

impl Scalar {
    pub fn from_laurent(p: LaurentPoly) -> Self {
        Scalar::Symbolic { num: p, den: LaurentPoly::one() }
    }

    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Symbolic { .. } => Domain::Symbolic,
            Scalar::Specialized { params, .. } => Domain::Specialized(params.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Symbolic { num, .. } => num.is_zero(),
            Scalar::Specialized { value, .. } => value.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &self.domain().one()
    }

    fn check_params(a: &Rc<SpecParams>, b: &Rc<SpecParams>) {
        assert!(
            a == b,
            "mixed scalar domains: ({}, {}) vs ({}, {})",
            a.q0,
            a.t0,
            b.q0,
            b.t0
        );
    }

    /// Common-monomial and integer-content normalization; keeps the fraction
    /// unreduced otherwise. Denominator leading coefficient is made positive.
    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Scalar {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Scalar::Symbolic { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        let (nz, nt) = num.min_exponents().unwrap();
        let (dz, dt) = den.min_exponents().unwrap();
        let sz = nz.min(dz);
        let st = nt.min(dt);
        let mut num = num.shift_exponents(-sz, -st);
        let mut den = den.shift_exponents(-sz, -st);
        let cn = num.content();
        let cd = den.content();
        // gcd of two positive rationals
        use num::Integer;
        let g = Rat::new(
            cn.numer().gcd(cd.numer()),
            cn.denom().lcm(cd.denom()),
        );
        if !g.is_zero() && !g.is_one() {
            let ginv = g.recip();
            num = num.scale(&ginv);
            den = den.scale(&ginv);
        }
        if den.leading_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        Scalar::Symbolic { num, den }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Symbolic { num: n1, den: d1 }, Scalar::Symbolic { num: n2, den: d2 }) => {
                if d1 == d2 {
                    Scalar::normalize(n1 + n2, d1.clone())
                } else {
                    Scalar::normalize(&(n1 * d2) + &(n2 * d1), d1 * d2)
                }
            }
            (
                Scalar::Specialized { value: a, params: p },
                Scalar::Specialized { value: b, params: q },
            ) => {
                Self::check_params(p, q);
                Scalar::Specialized { value: a + b, params: p.clone() }
            }
            _ => panic!("mixed scalar domains in add"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Symbolic { num, den } => Scalar::Symbolic { num: -num, den: den.clone() },
            Scalar::Specialized { value, params } => {
                Scalar::Specialized { value: -value.clone(), params: params.clone() }
            }
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Symbolic { num: n1, den: d1 }, Scalar::Symbolic { num: n2, den: d2 }) => {
                Scalar::normalize(n1 * n2, d1 * d2)
            }
            (
                Scalar::Specialized { value: a, params: p },
                Scalar::Specialized { value: b, params: q },
            ) => {
                Self::check_params(p, q);
                Scalar::Specialized { value: a * b, params: p.clone() }
            }
            _ => panic!("mixed scalar domains in mul"),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inverse())
    }

    pub fn inverse(&self) -> Scalar {
        match self {
            Scalar::Symbolic { num, den } => {
                assert!(!num.is_zero(), "inverse of zero");
                Scalar::normalize(den.clone(), num.clone())
            }
            Scalar::Specialized { value, params } => {
                assert!(!value.is_zero(), "inverse of zero");
                Scalar::Specialized { value: value.recip(), params: params.clone() }
            }
        }
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let d = self.domain();
        if e == 0 {
            return d.one();
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = d.one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Apply a symmetry's parameter map. Symbolic coefficients are substituted;
    /// specialized values pass through with the evaluation point reinterpreted.
    pub fn transform(&self, m: ParamTransform) -> Scalar {
        match self {
            Scalar::Symbolic { num, den } => {
                let step = |p: &LaurentPoly| {
                    let p = if m.z_neg { p.negate_z() } else { p.clone() };
                    match m.t_map {
                        TMap::Id => p,
                        TMap::Neg => p.negate_t(),
                        TMap::Inv => p.invert_t(),
                    }
                };
                Scalar::normalize(step(num), step(den))
            }
            Scalar::Specialized { value, params } => Scalar::Specialized {
                value: value.clone(),
                params: Rc::new(m.apply_params(params)),
            },
        }
    }

    /// Rational value of a specialized scalar.
    pub fn rat_value(&self) -> &Rat {
        match self {
            Scalar::Specialized { value, .. } => value,
            Scalar::Symbolic { .. } => panic!("symbolic scalar has no rational value"),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Symbolic { num, den } => {
                json!({ "num": num.to_json(), "den": den.to_json() })
            }
            Scalar::Specialized { value, .. } => Value::String(value.to_string()),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Symbolic { num: n1, den: d1 }, Scalar::Symbolic { num: n2, den: d2 }) => {
                &(n1 * d2) == &(n2 * d1)
            }
            (
                Scalar::Specialized { value: a, params: p },
                Scalar::Specialized { value: b, params: q },
            ) => p == q && a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Symbolic { num, den } => {
                if den.is_one() {
                    write!(f, "{}", num.to_text())
                } else {
                    write!(f, "({}) / ({})", num.to_text(), den.to_text())
                }
            }
            Scalar::Specialized { value, .. } => write!(f, "{}", value),
        }
    }
}

/// Evaluation point plus the exponent guard used by genericity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamProfile {
    pub q0: Rat,
    pub t0: Rat,
    pub guard: u32,
}

impl Default for ParamProfile {
    fn default() -> Self {
        ParamProfile { q0: crate::rat(2, 1), t0: crate::rat(3, 1), guard: 12 }
    }
}

impl ParamProfile {
    pub fn new(q0: Rat, t0: Rat, guard: u32) -> Self {
        ParamProfile { q0, t0, guard }
    }

    pub fn domain(&self) -> Domain {
        Domain::specialized(self.q0.clone(), self.t0.clone())
    }

    pub fn z0(&self) -> Rat {
        &self.q0 - self.q0.recip()
    }

    /// q0 not 0 or a root of unity (over Q: not +-1), and t0 avoiding +-q0^n
    /// for |n| <= guard.
    pub fn ensure_generic(&self) -> Result<(), RingError> {
        self.ensure_q_generic()?;
        for n in -(self.guard as i64)..=(self.guard as i64) {
            let qn = rat_pow(&self.q0, n);
            if self.t0 == qn {
                return Err(RingError::Degenerate(format!("t = q^{}", n)));
            }
            if self.t0 == -qn.clone() {
                return Err(RingError::Degenerate(format!("t = -q^{}", n)));
            }
        }
        Ok(())
    }

    /// Just the q-side clauses: q0 not in {0, 1, -1}.
    pub fn ensure_q_generic(&self) -> Result<(), RingError> {
        if self.q0.is_zero() {
            return Err(RingError::Degenerate("q = 0".into()));
        }
        if self.q0.is_one() {
            return Err(RingError::Degenerate("q = 1".into()));
        }
        if self.q0 == -Rat::one() {
            return Err(RingError::Degenerate("q = -1".into()));
        }
        Ok(())
    }
}
