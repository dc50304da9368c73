//! Smith normal form over the integers.
//!
//! Pivoting always picks the entry of smallest absolute value in the
//! remaining block, which keeps intermediate entries small on the desk-scale
//! inputs this crate works with. Transform matrices are tracked so that
//! `left * A * right` is the diagonal form.

use crate::abelian::matrix::Matrix;
use crate::scalar::IntScalar;

#[derive(Clone, Debug)]
pub struct SnfResult<Z> {
    /// Nonzero invariant factors `d_1 | d_2 | ... | d_r`, all positive.
    pub d: Vec<Z>,
    /// Unimodular `U` (rows x rows).
    pub left: Matrix<Z>,
    /// Unimodular `V` (cols x cols).
    pub right: Matrix<Z>,
    /// Inverse of `left`, maintained alongside it.
    pub left_inv: Matrix<Z>,
    /// Inverse of `right`.
    pub right_inv: Matrix<Z>,
}

impl<Z: IntScalar> SnfResult<Z> {
    pub fn rank(&self) -> usize {
        self.d.len()
    }

    /// The diagonal matrix `U A V`, padded with zeros to the shape of `A`.
    pub fn diagonal(&self, rows: usize, cols: usize) -> Matrix<Z> {
        let mut m = Matrix::zeros(rows, cols);
        for (i, v) in self.d.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }
}

fn min_abs_entry<Z: IntScalar>(b: &Matrix<Z>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..b.rows() {
        for j in t..b.cols() {
            let v = &b[(i, j)];
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if b[(bi, bj)].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Computes the Smith normal form of `a`.
pub fn snf<Z: IntScalar>(a: &Matrix<Z>) -> SnfResult<Z> {
    let (m, n) = (a.rows(), a.cols());
    let mut b = a.clone();
    let mut u = Matrix::identity(m);
    let mut u_inv = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut v_inv = Matrix::identity(n);
    let mut d = Vec::new();

    // Row op "row_dst += k row_src" on B and U corresponds to
    // "col_src -= k col_dst" on U^{-1}; similarly for column ops.
    let row_op = |b: &mut Matrix<Z>, u: &mut Matrix<Z>, u_inv: &mut Matrix<Z>, dst: usize, src: usize, k: &Z| {
        b.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
        u_inv.add_col_multiple(src, dst, &(-k.clone()));
    };
    let col_op = |b: &mut Matrix<Z>, v: &mut Matrix<Z>, v_inv: &mut Matrix<Z>, dst: usize, src: usize, k: &Z| {
        b.add_col_multiple(dst, src, k);
        v.add_col_multiple(dst, src, k);
        v_inv.add_row_multiple(src, dst, &(-k.clone()));
    };

    let mut t = 0;
    while t < m.min(n) {
        loop {
            let Some((pi, pj)) = min_abs_entry(&b, t) else {
                return finish(d, u, v, u_inv, v_inv);
            };
            b.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            b.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let p = b[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if b[(i, t)].is_zero() {
                    continue;
                }
                let q = b[(i, t)].div_floor(&p);
                row_op(&mut b, &mut u, &mut u_inv, i, t, &(-q));
                if !b[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if b[(t, j)].is_zero() {
                    continue;
                }
                let q = b[(t, j)].div_floor(&p);
                col_op(&mut b, &mut v, &mut v_inv, j, t, &(-q));
                if !b[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Row and column are clear; enforce divisibility on the rest.
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !b[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => row_op(&mut b, &mut u, &mut u_inv, t, i, &Z::one()),
                None => break,
            }
        }
        if b[(t, t)].is_negative() {
            b.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        d.push(b[(t, t)].clone());
        t += 1;
    }
    finish(d, u, v, u_inv, v_inv)
}

fn finish<Z: IntScalar>(
    d: Vec<Z>,
    left: Matrix<Z>,
    right: Matrix<Z>,
    left_inv: Matrix<Z>,
    right_inv: Matrix<Z>,
) -> SnfResult<Z> {
    SnfResult { d, left, right, left_inv, right_inv }
}

/// Integer basis (as columns) of `{x : A x = 0}`.
pub fn integer_kernel<Z: IntScalar>(a: &Matrix<Z>) -> Matrix<Z> {
    let s = snf(a);
    let r = s.rank();
    let idx: Vec<usize> = (r..a.cols()).collect();
    s.right.select_columns(&idx)
}

/// Solves `A x = b` over the integers, returning one solution if any exists.
pub fn solve_integer<Z: IntScalar>(a: &Matrix<Z>, b: &[Z]) -> Option<Vec<Z>> {
    assert_eq!(a.rows(), b.len());
    let s = snf(a);
    let ub = s.left.mul_vec(b);
    let mut w = vec![Z::zero(); a.cols()];
    for (i, c) in ub.iter().enumerate() {
        if i < s.rank() {
            let (q, r) = c.div_rem(&s.d[i]);
            if !r.is_zero() {
                return None;
            }
            w[i] = q;
        } else if !c.is_zero() {
            return None;
        }
    }
    Some(s.right.mul_vec(&w))
}

/// Inverse of a unimodular matrix, `None` if `a` is not unimodular.
pub fn unimodular_inverse<Z: IntScalar>(a: &Matrix<Z>) -> Option<Matrix<Z>> {
    if !a.is_square() {
        return None;
    }
    let s = snf(a);
    if s.rank() != a.rows() || s.d.iter().any(|d| !d.is_one()) {
        return None;
    }
    // U A V = I  =>  A^{-1} = V U
    Some(s.right.mul(&s.left))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn check(a: &Matrix<BigInt>) -> Vec<BigInt> {
        let s = snf(a);
        assert_eq!(s.left.mul(a).mul(&s.right), s.diagonal(a.rows(), a.cols()));
        assert_eq!(s.left.mul(&s.left_inv), Matrix::identity(a.rows()));
        assert_eq!(s.right.mul(&s.right_inv), Matrix::identity(a.cols()));
        s.d
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_by_two() {
        let a = Matrix::from_i64_rows(&[vec![2, 4], vec![6, 8]], 2);
        assert_eq!(check(&a), big(&[2, 4]));
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(check(&Matrix::identity(3)), big(&[1, 1, 1]));
        let z: Matrix<BigInt> = Matrix::from_i64_rows(&[vec![0]], 1);
        assert!(check(&z).is_empty());
    }

    #[test]
    fn empty_shapes() {
        let a: Matrix<BigInt> = Matrix::zeros(2, 0);
        assert!(check(&a).is_empty());
        let b: Matrix<BigInt> = Matrix::zeros(0, 3);
        assert!(check(&b).is_empty());
    }

    #[test]
    fn kernel_and_solve() {
        let a: Matrix<i64> = Matrix::from_i64_rows(&[vec![1, 1, 0], vec![0, 2, 2]], 3);
        let k = integer_kernel(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        let x = solve_integer(&a, &[1, 2]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![1, 2]);
        assert!(solve_integer(&a, &[0, 1]).is_none());
    }
}
