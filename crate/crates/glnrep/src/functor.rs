//! Matrix realization of words and slices.
//!
//! A word maps to a tensor power of n-dimensional rational spaces, one
//! factor per letter with the LEFT letter outermost (slowest-varying):
//! the basis tensor with 1-based factor indices i_1 .. i_m sits at flat
//! index sum_k (i_k - 1) n^{m-k}. In the docs below v_i spans the space
//! of an up letter and w_i the space of a down letter; for a two-letter
//! word at n = 2 the basis order is (1,1), (1,2), (2,1), (2,2).
//!
//! Crossings of mixed or downward letters are not postulated separately:
//! they are the half-turn rotations of the two upward-letter crossings
//! and the mixed inverse pair, computed by bending with the same cup and
//! cap matrices the model already carries.

use std::collections::BTreeMap;

use combinatorics::Partition;
use diagram::{Diagram, DiagramError, Letter, Morphism, SliceKind};
use hecke::{iota, young_idempotent, HeckeError};
use num::{One, Zero};
use ring::{quantum_integer, rat_pow, Domain, ParamProfile, Rat, RatMat};
use skein::Skein;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GlnError {
    #[error("invalid model parameters: {0}")]
    Config(String),
    #[error("scalar domain does not match the model parameters (q0, q0^n)")]
    DomainMismatch,
    #[error("matrix identity failed: {0}")]
    Relation(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}

/// Strand dimension n and evaluation point q0. The loop parameter is not
/// free: the model only exists at t0 = q0^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    n: usize,
    q0: Rat,
}

impl OracleConfig {
    /// Requires n >= 1 and q0 outside {0, 1, -1}.
    pub fn new(n: usize, q0: Rat) -> Result<OracleConfig, GlnError> {
        if n == 0 {
            return Err(GlnError::Config("strand dimension n must be at least 1".into()));
        }
        if q0.is_zero() || q0 == Rat::one() || q0 == -Rat::one() {
            return Err(GlnError::Config(format!("q0 = {} is not generic", q0)));
        }
        Ok(OracleConfig { n, q0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q0(&self) -> &Rat {
        &self.q0
    }

    /// The induced loop parameter t0 = q0^n.
    pub fn t0(&self) -> Rat {
        rat_pow(&self.q0, self.n as i64)
    }

    /// z0 = q0 - q0^{-1}.
    pub fn z0(&self) -> Rat {
        &self.q0 - self.q0.recip()
    }

    pub fn domain(&self) -> Domain {
        Domain::specialized(self.q0.clone(), self.t0())
    }

    fn q(&self, e: i64) -> Rat {
        rat_pow(&self.q0, e)
    }

    /// (-q0)^e.
    fn neg_q(&self, e: i64) -> Rat {
        let v = self.q(e);
        if e % 2 == 0 {
            v
        } else {
            -v
        }
    }

    /// (-1)^i q0^e for a 1-based basis index i.
    fn signed_q(&self, i: usize, e: i64) -> Rat {
        let v = self.q(e);
        if i % 2 == 0 {
            v
        } else {
            -v
        }
    }
}

/// Pairs an up letter with a down letter, <v_i x w_j> = (-1)^i q^{-i}
/// when i = j and zero otherwise.
fn cap_right(cfg: &OracleConfig) -> RatMat {
    let n = cfg.n;
    let mut m = RatMat::zeros(1, n * n);
    for i in 1..=n {
        m.set(0, (i - 1) * n + (i - 1), cfg.signed_q(i, -(i as i64)));
    }
    m
}

/// Creates a (down, up) pair, 1 |-> sum_j (-1)^j q^j w_j x v_j.
fn cup_right(cfg: &OracleConfig) -> RatMat {
    let n = cfg.n;
    let mut m = RatMat::zeros(n * n, 1);
    for j in 1..=n {
        m.set((j - 1) * n + (j - 1), 0, cfg.signed_q(j, j as i64));
    }
    m
}

/// Pairs a down letter with an up letter, <w_i x v_j> = (-1)^i q^{i-n-1}
/// when i = j and zero otherwise.
fn cap_left(cfg: &OracleConfig) -> RatMat {
    let n = cfg.n;
    let mut m = RatMat::zeros(1, n * n);
    for i in 1..=n {
        m.set(0, (i - 1) * n + (i - 1), cfg.signed_q(i, i as i64 - n as i64 - 1));
    }
    m
}

/// Creates an (up, down) pair, 1 |-> sum_j (-1)^j q^{n+1-j} v_j x w_j.
fn cup_left(cfg: &OracleConfig) -> RatMat {
    let n = cfg.n;
    let mut m = RatMat::zeros(n * n, 1);
    for j in 1..=n {
        m.set((j - 1) * n + (j - 1), 0, cfg.signed_q(j, n as i64 + 1 - j as i64));
    }
    m
}

/// Positive crossing of two up letters: v_i x v_j |-> v_j x v_i, with q
/// on the diagonal and an extra z v_i x v_j when i > j.
fn up_up_pos(cfg: &OracleConfig) -> RatMat {
    let n = cfg.n;
    let z = cfg.z0();
    let mut m = RatMat::zeros(n * n, n * n);
    for i in 1..=n {
        for j in 1..=n {
            let col = (i - 1) * n + (j - 1);
            if i == j {
                m.set(col, col, cfg.q(1));
                continue;
            }
            m.set((j - 1) * n + (i - 1), col, Rat::one());
            if i > j {
                m.set(col, col, z.clone());
            }
        }
    }
    m
}

/// Negative crossing of a down letter with an up letter:
/// w_i x v_j |-> v_j x w_i off the diagonal, and
/// w_i x v_i |-> q^{-1} v_i x w_i - z sum_{k>i} (-q)^{i-k} v_k x w_k.
fn down_up_neg(cfg: &OracleConfig) -> RatMat {
    let n = cfg.n;
    let z = cfg.z0();
    let mut m = RatMat::zeros(n * n, n * n);
    for i in 1..=n {
        for j in 1..=n {
            let col = (i - 1) * n + (j - 1);
            if i != j {
                m.set((j - 1) * n + (i - 1), col, Rat::one());
                continue;
            }
            m.set(col, col, cfg.q(-1));
            for k in i + 1..=n {
                m.set((k - 1) * n + (k - 1), col, -(&z * cfg.neg_q(i as i64 - k as i64)));
            }
        }
    }
    m
}

/// Positive crossing of an up letter with a down letter, the two-sided
/// inverse of the negative mixed crossing: v_i x w_j |-> w_j x v_i off
/// the diagonal, and
/// v_i x w_i |-> q w_i x v_i + z sum_{k>i} (-q)^{k-i} w_k x v_k.
fn up_down_pos(cfg: &OracleConfig) -> RatMat {
    let n = cfg.n;
    let z = cfg.z0();
    let mut m = RatMat::zeros(n * n, n * n);
    for i in 1..=n {
        for j in 1..=n {
            let col = (i - 1) * n + (j - 1);
            if i != j {
                m.set((j - 1) * n + (i - 1), col, Rat::one());
                continue;
            }
            m.set(col, col, cfg.q(1));
            for k in i + 1..=n {
                m.set((k - 1) * n + (k - 1), col, &z * cfg.neg_q(k as i64 - i as i64));
            }
        }
    }
    m
}

/// Applies a local operator to adjacent letters of the running word.
/// `state` maps the original bottom space into the current width-`w`
/// word's space; the operator consumes `ins` letters starting at
/// left-to-right index `j` and splices its output letters in their
/// place.
fn apply_local(state: &RatMat, local: &RatMat, w: usize, j: usize, ins: usize, n: usize) -> RatMat {
    let nl = n.pow(j as u32);
    let nr = n.pow((w - j - ins) as u32);
    let in_dim = local.cols;
    let out_dim = local.rows;
    debug_assert_eq!(in_dim, n.pow(ins as u32));
    debug_assert_eq!(nl * in_dim * nr, state.rows);
    let mut out = RatMat::zeros(nl * out_dim * nr, state.cols);
    for o in 0..out_dim {
        for i in 0..in_dim {
            let v = local.get(o, i);
            if v.is_zero() {
                continue;
            }
            for l in 0..nl {
                let src = (l * in_dim + i) * nr;
                let dst = (l * out_dim + o) * nr;
                for r in 0..nr {
                    for c in 0..state.cols {
                        let a = state.get(src + r, c);
                        if a.is_zero() {
                            continue;
                        }
                        let cur = out.get(dst + r, c) + a * v;
                        out.set(dst + r, c, cur);
                    }
                }
            }
        }
    }
    out
}

/// Half-turn rotation of a two-strand operator with the given boundary
/// letters: bend both bottom letters around with nested cups on the
/// right, apply the operator in the middle, and close both top letters
/// with caps on the left. The bends compose to coefficient one, so the
/// result is the same operator seen upside down, acting on the flipped
/// and reversed boundary words.
fn rotate_two(
    local: &RatMat,
    bottom: (Letter, Letter),
    top: (Letter, Letter),
    cfg: &OracleConfig,
) -> RatMat {
    let n = cfg.n;
    let cup = |x: Letter| if x == Letter::Up { cup_left(cfg) } else { cup_right(cfg) };
    let cap = |y: Letter| if y == Letter::Down { cap_right(cfg) } else { cap_left(cfg) };
    let mut state = RatMat::identity(n * n);
    state = apply_local(&state, &cup(bottom.0), 2, 2, 0, n);
    state = apply_local(&state, &cup(bottom.1), 4, 3, 0, n);
    state = apply_local(&state, local, 6, 2, 2, n);
    state = apply_local(&state, &cap(top.0), 6, 1, 2, n);
    state = apply_local(&state, &cap(top.1), 4, 0, 2, n);
    state
}

/// The structure matrix of one slice. For crossings and caps `pair` is
/// the ordered pair of letters the slice consumes, read left to right;
/// for cups it is the pair the slice creates, which the kind already
/// fixes. Columns index the space below, rows the space above.
pub fn rep_generator(kind: SliceKind, pair: (Letter, Letter), cfg: &OracleConfig) -> RatMat {
    use Letter::{Down, Up};
    match kind {
        SliceKind::CupRight | SliceKind::CupLeft | SliceKind::CapRight | SliceKind::CapLeft => {
            assert_eq!(pair, kind.turnback_letters(), "turnback letters are fixed by the kind");
            match kind {
                SliceKind::CupRight => cup_right(cfg),
                SliceKind::CupLeft => cup_left(cfg),
                SliceKind::CapRight => cap_right(cfg),
                _ => cap_left(cfg),
            }
        }
        SliceKind::CrossPos => match pair {
            (Up, Up) => up_up_pos(cfg),
            (Up, Down) => up_down_pos(cfg),
            (Down, Up) => rotate_two(&up_down_pos(cfg), (Up, Down), (Down, Up), cfg),
            (Down, Down) => rotate_two(&up_up_pos(cfg), (Up, Up), (Up, Up), cfg),
        },
        SliceKind::CrossNeg => match pair {
            (Up, Up) => {
                let s = up_up_pos(cfg);
                let id = RatMat::identity(cfg.n * cfg.n);
                s.sub(&id.scale(&cfg.z0()))
            }
            (Down, Up) => down_up_neg(cfg),
            (Up, Down) => rotate_two(&down_up_neg(cfg), (Down, Up), (Up, Down), cfg),
            (Down, Down) => {
                let s = up_up_pos(cfg);
                let id = RatMat::identity(cfg.n * cfg.n);
                rotate_two(&s.sub(&id.scale(&cfg.z0())), (Up, Up), (Up, Up), cfg)
            }
        },
    }
}

struct LocalCache<'a> {
    cfg: &'a OracleConfig,
    mats: BTreeMap<(SliceKind, Letter, Letter), RatMat>,
}

impl<'a> LocalCache<'a> {
    fn new(cfg: &'a OracleConfig) -> LocalCache<'a> {
        LocalCache { cfg, mats: BTreeMap::new() }
    }

    fn get(&mut self, kind: SliceKind, pair: (Letter, Letter)) -> &RatMat {
        let cfg = self.cfg;
        self.mats.entry((kind, pair.0, pair.1)).or_insert_with(|| rep_generator(kind, pair, cfg))
    }
}

fn psi_diagram(d: &Diagram, cache: &mut LocalCache) -> Result<RatMat, GlnError> {
    let n = cache.cfg.n;
    let words = d.words()?;
    let mut state = RatMat::identity(n.pow(d.bottom.len() as u32));
    for (i, &s) in d.slices.iter().enumerate() {
        let below = &words[i];
        let w = below.len();
        let (j, ins, pair) = match s.kind {
            SliceKind::CupRight | SliceKind::CupLeft => {
                (w + 1 - s.pos, 0, s.kind.turnback_letters())
            }
            SliceKind::CapRight | SliceKind::CapLeft => {
                (w - s.pos - 1, 2, s.kind.turnback_letters())
            }
            SliceKind::CrossPos | SliceKind::CrossNeg => {
                let j = w - s.pos - 1;
                (j, 2, (below.0[j], below.0[j + 1]))
            }
        };
        let local = cache.get(s.kind, pair);
        state = apply_local(&state, local, w, j, ins, n);
    }
    Ok(state)
}

/// The matrix of a linear combination of diagrams. Every coefficient
/// must be Specialized with parameters exactly (q0, q0^n); rows index
/// the top word's space, columns the bottom word's.
pub fn psi_evaluate(f: &Morphism, cfg: &OracleConfig) -> Result<RatMat, GlnError> {
    let n = cfg.n;
    let rows = n.pow(f.top.len() as u32);
    let cols = n.pow(f.bottom.len() as u32);
    let mut cache = LocalCache::new(cfg);
    let mut out = RatMat::zeros(rows, cols);
    for (d, coeff) in f.terms() {
        let dom = coeff.domain();
        let params = dom.params().ok_or(GlnError::DomainMismatch)?;
        if params.q0 != cfg.q0 || params.t0 != cfg.t0() {
            return Err(GlnError::DomainMismatch);
        }
        let m = psi_diagram(d, &mut cache)?;
        out = out.add(&m.scale(coeff.rat_value()));
    }
    Ok(out)
}

/// Checks the defining matrix identities of the generating slices: the
/// quadratic and braid identities for the upward crossing, both snake
/// identities for the right turnbacks, the bent-crossing construction of
/// the positive mixed crossing together with two-sided invertibility,
/// and the loop value forced by the parameters.
pub fn verify_presentation(cfg: &OracleConfig) -> Result<(), GlnError> {
    use Letter::{Down, Up};
    let n = cfg.n;
    let id1 = RatMat::identity(n);
    let id2 = RatMat::identity(n * n);
    let s = rep_generator(SliceKind::CrossPos, (Up, Up), cfg);
    let t = rep_generator(SliceKind::CrossNeg, (Down, Up), cfg);
    let tinv = rep_generator(SliceKind::CrossPos, (Up, Down), cfg);
    let c = rep_generator(SliceKind::CupRight, (Down, Up), cfg);
    let d = rep_generator(SliceKind::CapRight, (Up, Down), cfg);
    let z = cfg.z0();

    if s.mul(&s) != s.scale(&z).add(&id2) {
        return Err(GlnError::Relation("quadratic crossing identity".into()));
    }
    let s1 = s.kron(&id1);
    let s2 = id1.kron(&s);
    if s1.mul(&s2).mul(&s1) != s2.mul(&s1).mul(&s2) {
        return Err(GlnError::Relation("braid identity".into()));
    }
    if d.kron(&id1).mul(&id1.kron(&c)) != id1 {
        return Err(GlnError::Relation("snake identity on the up strand".into()));
    }
    if id1.kron(&d).mul(&c.kron(&id1)) != id1 {
        return Err(GlnError::Relation("snake identity on the down strand".into()));
    }
    let bent = id2.kron(&d).mul(&id1.kron(&s).kron(&id1).mul(&c.kron(&id2)));
    if bent != tinv {
        return Err(GlnError::Relation("bent-crossing construction of the mixed crossing".into()));
    }
    if t.mul(&tinv) != id2 || tinv.mul(&t) != id2 {
        return Err(GlnError::Relation("mixed crossings are not mutually inverse".into()));
    }
    let loop_val = d.mul(&t).mul(&c).get(0, 0) * cfg.t0();
    if &loop_val != quantum_integer(n as i64, &cfg.domain()).rat_value() {
        return Err(GlnError::Relation("loop value".into()));
    }
    Ok(())
}

/// Compares a morphism's matrix with the matrix of its basis expansion
/// from the rewriting engine. The engine must run over the same
/// specialized domain as the model.
pub fn oracle_check(f: &Morphism, cfg: &OracleConfig, engine: &mut Skein) -> Result<bool, GlnError> {
    if engine.domain() != &cfg.domain() {
        return Err(GlnError::DomainMismatch);
    }
    let direct = psi_evaluate(f, cfg)?;
    let expanded = psi_evaluate(&engine.normal_form(f).as_morphism(), cfg)?;
    Ok(direct == expanded)
}

/// True when the alternating idempotent on n + 1 parallel up strands
/// maps to the zero matrix: one more strand than the model has
/// dimensions to separate. Requires n + 1 <= 6.
pub fn kernel_witness(cfg: &OracleConfig) -> Result<bool, GlnError> {
    let lam = Partition::new(vec![1; cfg.n + 1]);
    let profile = ParamProfile::new(cfg.q0.clone(), cfg.t0(), 12);
    let e = young_idempotent(&lam, &profile)?;
    Ok(psi_evaluate(&iota(&e), cfg)?.is_zero())
}

/// A matrix as a JSON grid of rational strings, row by row.
pub fn matrix_to_json(m: &RatMat) -> serde_json::Value {
    serde_json::Value::Array(
        (0..m.rows)
            .map(|i| {
                serde_json::Value::Array(
                    (0..m.cols)
                        .map(|j| serde_json::Value::String(m.get(i, j).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}
