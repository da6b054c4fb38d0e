//! Length-ordered construction of bar-invariant bases in a standard module.
//!
//! A standard module has a basis `{N_j}` indexed `0..size` in an order refining
//! length, and each generator `s` moves `N_j` up, down or kills it:
//!
//! ```text
//! N_j * (H_s + v) = N_{js} + v   N_j    (Up)
//!                 = N_{js} + v^-1 N_j   (Down)
//!                 = 0                   (Killed)
//! ```
//!
//! The regular module of the Hecke algebra never kills; the antispherical module
//! kills exactly when `js` leaves the set of coset representatives. For each `y`
//! the basis element `B_y = sum_x p(x, y) N_x` is the unique bar-invariant element
//! with `p(y, y) = 1` and `p(x, y) in vZ[v]` otherwise, computed from
//! `B_x * (H_s + v)` for `x = ys < y` minus `mu`-corrections.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Move {
    Up(usize),
    Down(usize),
    Killed,
}

pub(crate) trait StandardModule: Sync {
    fn size(&self) -> usize;
    fn length(&self, j: usize) -> usize;
    fn num_gens(&self) -> usize;
    /// Generators are 1-based.
    fn act(&self, j: usize, i: usize) -> Move;
}

/// One column `p(., y)` of the base change, sorted by index, zeros omitted.
pub(crate) type SparseRow = Vec<(u32, LaurentPoly)>;

pub(crate) fn lookup(row: &SparseRow, x: usize) -> Option<&LaurentPoly> {
    row.binary_search_by_key(&(x as u32), |e| e.0).ok().map(|k| &row[k].1)
}

/// Coefficient of `v` in `p`, i.e. the `mu`-value of an entry.
pub(crate) fn mu_of(p: &LaurentPoly) -> BigInt {
    p.coeff(1)
}

/// Smallest generator moving `j` down.
pub(crate) fn first_descent<M: StandardModule + ?Sized>(module: &M, j: usize) -> Option<(usize, usize)> {
    (1..=module.num_gens()).find_map(|i| match module.act(j, i) {
        Move::Down(x) => Some((i, x)),
        _ => None,
    })
}

pub(crate) fn build_rows<M: StandardModule>(module: &M) -> Vec<SparseRow> {
    let size = module.size();
    let max_len = (0..size).map(|j| module.length(j)).max().unwrap_or(0);
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); max_len + 1];
    for j in 0..size {
        levels[module.length(j)].push(j);
    }
    let mut rows: Vec<SparseRow> = vec![Vec::new(); size];
    for level in levels {
        // rows of one length depend only on strictly shorter rows
        let computed: Vec<(usize, SparseRow)> = level
            .par_iter()
            .map_init(|| vec![LaurentPoly::zero(); size], |scratch, &y| (y, build_row(module, &rows, y, scratch)))
            .collect();
        for (y, row) in computed {
            rows[y] = row;
        }
    }
    rows
}

fn build_row<M: StandardModule>(module: &M, rows: &[SparseRow], y: usize, scratch: &mut [LaurentPoly]) -> SparseRow {
    let Some((i, x)) = first_descent(module, y) else {
        return vec![(y as u32, LaurentPoly::one())];
    };
    let one = BigInt::one();
    let mut touched: Vec<usize> = Vec::new();
    let mut add = |scratch: &mut [LaurentPoly], idx: usize, p: &LaurentPoly, c: &BigInt, shift: i32| {
        if scratch[idx].is_zero() {
            touched.push(idx);
        }
        scratch[idx].add_scaled_shifted(p, c, shift);
    };
    // B_x * (H_s + v)
    for (z, p) in &rows[x] {
        let z = *z as usize;
        match module.act(z, i) {
            Move::Up(zs) => {
                add(scratch, zs, p, &one, 0);
                add(scratch, z, p, &one, 1);
            }
            Move::Down(zs) => {
                add(scratch, zs, p, &one, 0);
                add(scratch, z, p, &one, -1);
            }
            Move::Killed => {}
        }
    }
    // subtract mu(z, x) B_z for z < x with zs < z
    for (z, p) in &rows[x] {
        let z = *z as usize;
        if z == x || !matches!(module.act(z, i), Move::Down(_)) {
            continue;
        }
        let mu = mu_of(p);
        if mu.is_zero() {
            continue;
        }
        let neg = -mu;
        for (w, q) in &rows[z] {
            add(scratch, *w as usize, q, &neg, 0);
        }
    }
    touched.sort_unstable();
    touched.dedup();
    let mut row = Vec::with_capacity(touched.len());
    for idx in touched {
        let p = std::mem::take(&mut scratch[idx]);
        if !p.is_zero() {
            row.push((idx as u32, p));
        }
    }
    debug_assert!(row.iter().all(|(z, p)| if *z as usize == y { p.is_one() } else { p.in_v_z_v() }));
    row
}
