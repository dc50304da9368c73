//! Independent oracles. Nothing here calls into the crate's own linear algebra.

#![allow(dead_code)]

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| *v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Nonzero invariant factors from determinantal divisors: `d_k = D_k / D_{k-1}`
/// where `D_k` is the gcd of all `k × k` minors.
pub fn invariant_factors(a: &[Vec<i64>]) -> Vec<i128> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut dk = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect()).collect();
                dk = gcd(dk, det(&minor));
            }
        }
        if dk == 0 {
            break;
        }
        out.push(dk / prev);
        prev = dk;
    }
    out
}

/// Torsion of `Z^n / (column span of a)`: the invariant factors above 1.
pub fn quotient_torsion(a: &[Vec<i64>]) -> Vec<i128> {
    invariant_factors(a).into_iter().filter(|&d| d != 1).collect()
}

pub fn seed() -> u64 {
    std::env::var("SATAKE_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0x5eed)
}

#[test]
fn oracle_on_known_matrices() {
    assert_eq!(invariant_factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
    assert_eq!(invariant_factors(&[vec![0, 0], vec![0, 0]]), Vec::<i128>::new());
    assert_eq!(quotient_torsion(&[vec![-2]]), vec![2]);
}
