//! Partition and bipartition combinatorics: Littlewood-Richardson
//! coefficients, standard tableau counts, and the transition matrices between
//! the two natural bases of the bipartition symmetric-tensor ring.

pub mod bipartition;
pub mod lr;
pub mod partition;
pub mod perm;
pub mod symtensor;

pub use bipartition::{bipartitions_of, bipartitions_up_to, Bipartition};
pub use lr::{lr_coeff, schur_multiply};
pub use partition::{partitions_of, Partition};
pub use symtensor::SymTensor;

/// M-matrix entry: multiplicity of the mu-flag inside the lambda cell module,
/// summed over a middle partition glued to both sides.
pub fn big_m(lambda: &Bipartition, mu: &Bipartition) -> i64 {
    let du = lambda.up.size() as i64 - mu.up.size() as i64;
    let dd = lambda.down.size() as i64 - mu.down.size() as i64;
    if du != dd || du < 0 {
        return 0;
    }
    let d = du as u32;
    let mut acc = 0i64;
    for nu in partitions_of(d) {
        acc += (lr_coeff(&lambda.up, &mu.up, &nu) * lr_coeff(&lambda.down, &mu.down, &nu)) as i64;
    }
    acc
}

/// N-matrix entry: inverse-transition coefficient with a conjugate twist and
/// alternating sign.
pub fn big_n(lambda: &Bipartition, mu: &Bipartition) -> i64 {
    let du = lambda.up.size() as i64 - mu.up.size() as i64;
    let dd = lambda.down.size() as i64 - mu.down.size() as i64;
    if du != dd || du < 0 {
        return 0;
    }
    let d = du as u32;
    let mut acc = 0i64;
    for nu in partitions_of(d) {
        acc += (lr_coeff(&lambda.up, &mu.up, &nu) * lr_coeff(&lambda.down, &mu.down, &nu.conjugate()))
            as i64;
    }
    if d % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// Expansion of the lambda cell class in the product basis: sum over mu of
/// N^lambda_mu (s_{mu-up} (x) s_{mu-down}).
pub fn chi(lambda: &Bipartition) -> SymTensor {
    let mut out = SymTensor::zero();
    let r = lambda.up.size();
    let s = lambda.down.size();
    let dmax = r.min(s);
    for d in 0..=dmax {
        for mu_up in partitions_of(r - d) {
            if !lambda.up.contains(&mu_up) {
                continue;
            }
            for mu_down in partitions_of(s - d) {
                if !lambda.down.contains(&mu_down) {
                    continue;
                }
                let mu = Bipartition::new(mu_up.clone(), mu_down);
                let c = big_n(lambda, &mu);
                if c != 0 {
                    out.add_term(mu, c);
                }
            }
        }
    }
    out
}

/// N and M are mutually inverse on the window of bipartitions with part sizes
/// bounded by (maxr, maxs).
pub fn verify_nm_inverse(maxr: u32, maxs: u32) -> bool {
    let mut window = Vec::new();
    for r in 0..=maxr {
        for s in 0..=maxs {
            for up in partitions_of(r) {
                for down in partitions_of(s) {
                    window.push(Bipartition::new(up.clone(), down));
                }
            }
        }
    }
    for lambda in &window {
        for mu in &window {
            let mut acc = 0i64;
            for kappa in &window {
                acc += big_n(lambda, kappa) * big_m(kappa, mu);
            }
            let expect = if lambda == mu { 1 } else { 0 };
            if acc != expect {
                return false;
            }
        }
    }
    true
}
