//! Smith normal form over the integers, exact arbitrary-precision
//! arithmetic with deterministic pivoting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Invariant factors `d_1 | d_2 | ...` (nonzero diagonal of the Smith form,
/// positive) together with the rank.
pub fn smith_normal_form(m: &[Vec<i64>]) -> (Vec<BigInt>, usize) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut diag: Vec<BigInt> = Vec::new();
    let mut top = 0usize;

    while top < rows && top < cols {
        // find the nonzero entry of smallest magnitude at or below/right of top;
        // deterministic tie-break on (row, col)
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if !a[i][j].is_zero() {
                    let better = match &pivot {
                        None => true,
                        Some((pi, pj)) => a[i][j].abs() < a[*pi][*pj].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let (pi, pj) = match pivot {
            None => break,
            Some(p) => p,
        };
        a.swap(top, pi);
        for row in a.iter_mut() {
            row.swap(top, pj);
        }

        // clear the pivot row and column by division steps; restart the
        // sweep whenever a remainder strictly smaller than the pivot shows up
        loop {
            let mut clean = true;
            for i in (top + 1)..rows {
                if a[i][top].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][top], &a[top][top]);
                for j in top..cols {
                    let sub = &q * &a[top][j];
                    a[i][j] -= sub;
                }
                if !a[i][top].is_zero() {
                    // remainder became the new, smaller pivot
                    a.swap(top, i);
                    clean = false;
                }
            }
            for j in (top + 1)..cols {
                if a[top][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[top][j], &a[top][top]);
                for row in a.iter_mut().skip(top) {
                    let sub = &q * &row[top];
                    row[j] -= sub;
                }
                if !a[top][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(top, j);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        diag.push(a[top][top].abs());
        top += 1;
    }

    // enforce the divisibility chain d_1 | d_2 | ...
    let r = diag.len();
    let mut i = 0;
    while i + 1 < r {
        if (&diag[i + 1] % &diag[i]).is_zero() {
            i += 1;
            continue;
        }
        let g = diag[i].gcd(&diag[i + 1]);
        let l = (&diag[i] * &diag[i + 1]) / &g;
        diag[i] = g;
        diag[i + 1] = l;
        // a change can break earlier divisibility; rewind
        i = i.saturating_sub(1);
    }
    (diag, r)
}

/// Quotient rounding toward the nearest integer (keeps remainders small).
fn div_nearest(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    let two_r: BigInt = &r * 2;
    if two_r.abs() > d.abs() {
        if (r.is_negative()) == (d.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}
