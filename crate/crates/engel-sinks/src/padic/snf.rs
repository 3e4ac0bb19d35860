//! Smith normal form over the integers, and minimal generator counts
//! for spans inside `(Z/p^k)^d`.
//!
//! Elimination runs over `Z` first; valuations are compared against the
//! precision afterwards, which sidesteps the zero divisors of `Z/p^k`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::padic::{valuation_big, Valuation};

/// Invariant factors of an integer matrix: the diagonal of its Smith
/// normal form, nonnegative, each dividing the next, zeros trailing.
pub fn smith_invariant_factors(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let rank_bound = rows.min(cols);
    let mut t = 0;

    'outer: while t < rank_bound {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if m[pi][pj].abs() <= m[i][j].abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }

        // clear the pivot column
        for i in t + 1..rows {
            if m[i][t].is_zero() {
                continue;
            }
            let q = &m[i][t] / &m[t][t];
            if !q.is_zero() {
                for j in t..cols {
                    let sub = &q * &m[t][j];
                    m[i][j] -= sub;
                }
            }
            if !m[i][t].is_zero() {
                // remainder is smaller than the pivot: restart with it
                m.swap(t, i);
                continue 'outer;
            }
        }
        // clear the pivot row
        for j in t + 1..cols {
            if m[t][j].is_zero() {
                continue;
            }
            let q = &m[t][j] / &m[t][t];
            if !q.is_zero() {
                for i in t..rows {
                    let sub = &q * &m[i][t];
                    m[i][j] -= sub;
                }
            }
            if !m[t][j].is_zero() {
                for row in m.iter_mut() {
                    row.swap(t, j);
                }
                continue 'outer;
            }
        }
        // divisibility: fold any non-divisible entry into the pivot row
        for i in t + 1..rows {
            for j in t + 1..cols {
                if (&m[i][j] % &m[t][t]).is_zero() {
                    continue;
                }
                for col in t..cols {
                    let add = m[i][col].clone();
                    m[t][col] += add;
                }
                continue 'outer;
            }
        }
        t += 1;
    }

    let mut diag: Vec<BigInt> = (0..rank_bound).map(|i| m[i][i].abs()).collect();
    // zeros last
    diag.sort_by_key(|d| d.is_zero());
    diag
}

/// A list of generator rows spanning a submodule of `(Z/p^k)^d`, with
/// coordinates kept reduced.
#[derive(Clone, Debug)]
pub struct ModuleSpan {
    pub p: u64,
    pub k: u32,
    rows: Vec<Vec<BigInt>>,
}

impl ModuleSpan {
    pub fn new(p: u64, k: u32, rows: Vec<Vec<BigInt>>) -> Self {
        let modulus = BigInt::from(p).pow(k);
        let rows = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| {
                        let mut r = c % &modulus;
                        if r.sign() == num_bigint::Sign::Minus {
                            r += &modulus;
                        }
                        r
                    })
                    .collect()
            })
            .collect();
        ModuleSpan { p, k, rows }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

/// Minimal number of generators of the spanned submodule: the count of
/// invariant factors whose p-valuation stays below the precision.
pub fn min_generators(span: &ModuleSpan) -> usize {
    let factors = smith_invariant_factors(&span.rows);
    factors
        .iter()
        .filter(|d| match valuation_big(span.p, d) {
            Valuation::Finite(v) => v < span.k as u64,
            Valuation::Infinite => false,
        })
        .count()
}
