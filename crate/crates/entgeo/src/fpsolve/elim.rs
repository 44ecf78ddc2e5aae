//! Gaussian elimination over `F_p` with an augmented right-hand column,
//! bit-packed for `p = 2` and dense `u64` rows otherwise.

use crate::laurent::{invmod, mulmod};

pub(crate) struct ElimResult {
    pub rank: usize,
    pub feasible: bool,
}

/// Rank and feasibility of `A x = b`. Rows are sparse `(col, coeff)` lists
/// with `col < ncols`; `rhs[i]` pairs with `rows[i]` (all zero when absent).
pub(crate) fn eliminate(
    p: u64,
    ncols: usize,
    rows: &[Vec<(u32, u64)>],
    rhs: Option<&[u64]>,
) -> ElimResult {
    if p == 2 {
        eliminate_gf2(ncols, rows, rhs)
    } else {
        eliminate_odd(p, ncols, rows, rhs)
    }
}

fn eliminate_gf2(ncols: usize, rows: &[Vec<(u32, u64)>], rhs: Option<&[u64]>) -> ElimResult {
    let aug = ncols; // augmented bit lives one past the real columns
    let words = (ncols + 1).div_ceil(64);
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols + 1];
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut rank = 0usize;
    let mut feasible = true;
    for (i, sparse) in rows.iter().enumerate() {
        let mut row = vec![0u64; words];
        for (c, v) in sparse {
            if v % 2 == 1 {
                row[*c as usize / 64] ^= 1u64 << (*c as usize % 64);
            }
        }
        if let Some(rhs) = rhs {
            if rhs[i] % 2 == 1 {
                row[aug / 64] ^= 1u64 << (aug % 64);
            }
        }
        loop {
            let Some(lead) = leading_bit(&row) else {
                break; // row reduced to zero
            };
            if lead == aug {
                feasible = false;
                break;
            }
            match pivot_of_col[lead] {
                Some(b) => {
                    let basis_row = &basis[b];
                    for (w, bw) in row.iter_mut().zip(basis_row.iter()) {
                        *w ^= bw;
                    }
                }
                None => {
                    pivot_of_col[lead] = Some(basis.len());
                    basis.push(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    ElimResult { rank, feasible }
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    for (wi, w) in row.iter().enumerate() {
        if *w != 0 {
            return Some(wi * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

fn eliminate_odd(p: u64, ncols: usize, rows: &[Vec<(u32, u64)>], rhs: Option<&[u64]>) -> ElimResult {
    let width = ncols + 1;
    let aug = ncols;
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; width];
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut rank = 0usize;
    let mut feasible = true;
    for (i, sparse) in rows.iter().enumerate() {
        let mut row = vec![0u64; width];
        for (c, v) in sparse {
            row[*c as usize] = (row[*c as usize] + v % p) % p;
        }
        if let Some(rhs) = rhs {
            row[aug] = rhs[i] % p;
        }
        loop {
            let Some(lead) = row.iter().position(|v| *v != 0) else {
                break;
            };
            if lead == aug {
                feasible = false;
                break;
            }
            match pivot_of_col[lead] {
                Some(b) => {
                    // basis rows are normalized to leading coefficient 1
                    let factor = row[lead];
                    let basis_row = &basis[b];
                    for (v, bv) in row.iter_mut().zip(basis_row.iter()).skip(lead) {
                        *v = (*v + p - mulmod(factor, *bv, p)) % p;
                    }
                }
                None => {
                    let inv = invmod(row[lead], p);
                    for v in row.iter_mut().skip(lead) {
                        *v = mulmod(*v, inv, p);
                    }
                    pivot_of_col[lead] = Some(basis.len());
                    basis.push(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    ElimResult { rank, feasible }
}
