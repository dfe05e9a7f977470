//! Exact arithmetic for the skein engine: two-variable Laurent polynomials,
//! fraction/specialized scalar domains, parameter profiles, and dense rational
//! matrices.

pub mod laurent;
pub mod ratmat;
pub mod scalar;

pub use laurent::LaurentPoly;
pub use ratmat::RatMat;
pub use scalar::{
    bubble_value, quantum_factorial, quantum_integer, Domain, ParamProfile, ParamTransform,
    RingError, Scalar, SpecParams, TMap,
};

pub type Rat = num::BigRational;
pub type Int = num::BigInt;

/// Shorthand rational constructor.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(Int::from(n), Int::from(d))
}

/// q^e for a rational q and signed integer e. q must be nonzero when e < 0.
pub fn rat_pow(q: &Rat, e: i64) -> Rat {
    use num::{One, Zero};
    if e == 0 {
        return Rat::one();
    }
    let base = if e < 0 {
        assert!(!q.is_zero(), "negative power of zero");
        q.recip()
    } else {
        q.clone()
    };
    let mut acc = Rat::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}
