//! Exact Gaussian elimination over [`Rational`].

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Determinant by elimination with row pivoting.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut det = Rational::ONE;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::ZERO;
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det = det * p;
        for r in col + 1..n {
            let factor = a[r][col] / p;
            if factor.is_zero() {
                continue;
            }
            let (upper, lower) = a.split_at_mut(r);
            for (x, &y) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *x -= factor * y;
            }
        }
    }
    det
}

/// Sylvester's criterion for a symmetric matrix.
///
/// Elimination without pivoting produces pivots `D_k / D_{k-1}` of the leading
/// principal minors, so all minors are positive iff every pivot is.
pub fn is_positive_definite(m: &[Vec<Rational>]) -> bool {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    for k in 0..n {
        let p = a[k][k];
        if !p.is_positive() {
            return false;
        }
        for r in k + 1..n {
            let factor = a[r][k] / p;
            if factor.is_zero() {
                continue;
            }
            let (upper, lower) = a.split_at_mut(r);
            for (x, &y) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                *x -= factor * y;
            }
        }
    }
    true
}

/// Gauss-Jordan inverse; `None` for a singular matrix.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut inv: Matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::ONE
                    } else {
                        Rational::ZERO
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot, col);
        inv.swap(pivot, col);
        let p = a[col][col].recip();
        for c in 0..n {
            a[col][c] = a[col][c] * p;
            inv[col][c] = inv[col][c] * p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col];
            for c in 0..n {
                let da = factor * a[col][c];
                let di = factor * inv[col][c];
                a[r][c] -= da;
                inv[r][c] -= di;
            }
        }
    }
    Some(inv)
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(&a, &b)| a * b).sum())
        .collect()
}

pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(&a, &b)| a * b).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect()
    }

    #[test]
    fn determinant_of_a3_cartan() {
        let m = q(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(determinant(&m), Rational::from_int(4));
    }

    #[test]
    fn determinant_needs_pivot() {
        let m = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&m), Rational::from_int(-1));
    }

    #[test]
    fn positive_definiteness() {
        assert!(is_positive_definite(&q(&[&[2, -1], &[-1, 2]])));
        // affine A1: singular
        assert!(!is_positive_definite(&q(&[&[2, -2], &[-2, 2]])));
        assert!(!is_positive_definite(&q(&[&[0, 1], &[1, 0]])));
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let inv = inverse(&m).unwrap();
        for i in 0..3 {
            let col: Vec<Rational> = inv.iter().map(|row| row[i]).collect();
            let e = mat_vec(&m, &col);
            for (j, x) in e.iter().enumerate() {
                assert_eq!(
                    *x,
                    if i == j {
                        Rational::ONE
                    } else {
                        Rational::ZERO
                    }
                );
            }
        }
        assert!(inverse(&q(&[&[1, 2], &[2, 4]])).is_none());
    }
}
