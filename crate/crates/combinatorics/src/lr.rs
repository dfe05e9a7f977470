//! Littlewood-Richardson coefficients.

use crate::partition::{partitions_of, Partition};
use std::collections::BTreeMap;

/// Multiplicity of s_lambda in s_mu * s_nu.
///
/// Counts skew semistandard fillings of lambda/mu with content nu whose
/// reverse reading word is a lattice word. Cells are filled row by row top
/// to bottom, right to left within a row, so the fill order is the reading
/// order and the lattice condition can be checked incrementally.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    let rows = lambda.len();
    let vals = nu.len();

    // skew cells in fill order: (row, col) top to bottom, right to left
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = mu.part(r) as usize;
        let hi = lambda.part(r) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }

    // grid[r][c] = value placed, 0 = empty (mu region or not yet filled)
    let mut grid = vec![vec![0u32; lambda.part(0) as usize]; rows];
    let mut counts = vec![0u32; vals + 1];

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        nu: &Partition,
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        let vals = counts.len() - 1;
        // row weakly increasing: cell to the right bounds from above
        let right = grid[r].get(c + 1).copied().unwrap_or(0);
        let max_v = if right > 0 { right } else { vals as u32 };
        // column strict: cell above bounds from below
        let above = if r > 0 { grid[r - 1][c] } else { 0 };
        for v in (above + 1)..=max_v {
            let vi = v as usize;
            if counts[vi] + 1 > nu.part(vi - 1) {
                continue;
            }
            if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            grid[r][c] = v;
            counts[vi] += 1;
            rec(idx + 1, cells, grid, counts, nu, total);
            counts[vi] -= 1;
            grid[r][c] = 0;
        }
    }

    let mut total = 0u64;
    rec(0, &cells, &mut grid, &mut counts, nu, &mut total);
    total
}

/// s_mu * s_nu expanded in the Schur basis.
pub fn schur_multiply(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(mu.size() + nu.size()) {
        let c = lr_coeff(&lambda, mu, nu);
        if c > 0 {
            out.insert(lambda, c);
        }
    }
    out
}
