//! Small dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `cols` columns.
pub fn nullspace(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Q::zero(); cols];
            x[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// One solution of `A x = b`, if consistent.
pub fn solve(rows: &[Vec<Q>], cols: usize, b: &[Q]) -> Option<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[r][cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix given by rows.
pub fn inverse(rows: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = rows.len();
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// True iff `a` is a rational multiple of `b` (both nonzero, or both zero).
pub fn proportional(a: &[Q], b: &[Q]) -> bool {
    rank(&[a.to_vec(), b.to_vec()]) <= 1 && a.iter().any(|x| !x.is_zero()) == b.iter().any(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_nullspace() {
        let a = vec![qvec(&[1, 2, 3]), qvec(&[2, 4, 6])];
        assert_eq!(rank(&a), 1);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&a[0], v).is_zero());
        }
        let x = solve(&a, 3, &qvec(&[1, 2])).unwrap();
        assert_eq!(dot(&a[0], &x), q(1));
        assert!(solve(&a, 3, &qvec(&[1, 3])).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = vec![qvec(&[2, 1]), qvec(&[1, 1])];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![qvec(&[1, -1]), qvec(&[-1, 2])]);
        assert!(inverse(&[qvec(&[1, 1]), qvec(&[2, 2])]).is_none());
        assert!(proportional(&qvec(&[2, 4]), &qvec(&[-1, -2])));
        assert!(!proportional(&qvec(&[2, 4]), &qvec(&[1, 0])));
    }
}
