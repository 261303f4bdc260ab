//! Small exact integer linear algebra used by the geometry code.

use num_bigint::BigInt;
use num_rational::BigRational;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub(crate) fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Rank of an integer matrix (rows need not be square).
pub(crate) fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..rows {
            let factor = m[i][c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                m[i][j] = m[r][c] * m[i][j] - factor * m[r][j];
            }
            let g = m[i].iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Rows `(1, p)` for each point; its determinant is the signed normalized
/// volume of the simplex spanned by `d + 1` points in dimension `d`.
pub(crate) fn homogenized(points: &[&[i64]]) -> Vec<Vec<i128>> {
    points
        .iter()
        .map(|p| {
            std::iter::once(1i128)
                .chain(p.iter().map(|&x| x as i128))
                .collect()
        })
        .collect()
}

pub(crate) fn orientation(points: &[&[i64]]) -> i128 {
    det(homogenized(points))
}

/// Affine dimension of the span of `points`.
pub(crate) fn affine_rank(points: &[&[i64]]) -> usize {
    match points.split_first() {
        None => 0,
        Some((first, rest)) => rank(
            rest.iter()
                .map(|p| {
                    p.iter()
                        .zip(first.iter())
                        .map(|(&x, &y)| x as i128 - y as i128)
                        .collect()
                })
                .collect(),
        ),
    }
}

/// Affine coordinates of `p` with respect to a full-dimensional simplex.
pub(crate) fn barycentric(simplex: &[&[i64]], p: &[i64]) -> Vec<BigRational> {
    let base = homogenized(simplex);
    let denom = det(transpose(&base));
    debug_assert!(denom != 0);
    let target: Vec<i128> = std::iter::once(1i128)
        .chain(p.iter().map(|&x| x as i128))
        .collect();
    (0..base.len())
        .map(|k| {
            let mut cols = base.clone();
            cols[k] = target.clone();
            let num = det(transpose(&cols));
            BigRational::new(BigInt::from(num), BigInt::from(denom))
        })
        .collect()
}

fn transpose(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}
