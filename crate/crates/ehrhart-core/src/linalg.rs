//! Exact linear algebra over Q and Z: Gaussian elimination, nullspaces,
//! inverses, and the column-style Hermite normal form.
//!
//! All matrices here are tiny (at most ~17 rows), so plain rational
//! elimination is both exact and fast enough.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form in place. Returns the pivot columns; zero rows
/// are removed.
#[allow(clippy::needless_range_loop)] // two rows of one Vec, index form required
pub(crate) fn rref(rows: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return pivots;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let pv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &pv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let sub = &f * &rows[r][j];
                    rows[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn to_rational_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// Rank over Q of integer rows.
pub(crate) fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    let mut m = to_rational_rows(rows);
    rref(&mut m).len()
}

/// Clear denominators and divide by the gcd; the zero vector stays zero.
pub(crate) fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Primitive integer basis of the right nullspace of integer rows.
///
/// Derived from the reduced echelon form, so the basis is canonical for a
/// given row span.
pub(crate) fn nullspace_int(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m = to_rational_rows(rows);
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); ncols];
            v[fc] = BigRational::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[ri][fc].clone();
            }
            primitive(&v)
        })
        .collect()
}

/// Solve a square rational system; `None` when singular.
pub(crate) fn solve(a: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(aug.iter().map(|r| r[n].clone()).collect())
}

/// Exact inverse of a square rational matrix; `None` when singular.
pub(crate) fn invert(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for k in 0..n {
                r.push(if k == i {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(aug.iter().map(|r| r[n..].to_vec()).collect())
}

/// Column-style Hermite normal form: unimodular column operations produce a
/// lower-triangular matrix with positive diagonal. The half-open box below
/// the diagonal entries enumerates the cosets of the column lattice.
pub(crate) fn hnf_lower(mut m: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = m.len();
    for i in 0..n {
        for j in i + 1..n {
            // gcd-eliminate m[i][j] against the pivot column i
            while !m[i][j].is_zero() {
                if m[i][i].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(i, j);
                    }
                    continue;
                }
                let q = m[i][j].div_floor(&m[i][i]);
                for row in m.iter_mut() {
                    let sub = &q * &row[i];
                    row[j] -= sub;
                }
                if !m[i][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(i, j);
                    }
                }
            }
        }
        if m[i][i].is_negative() {
            for row in m.iter_mut() {
                row[i] = -row[i].clone();
            }
        }
    }
    m
}
