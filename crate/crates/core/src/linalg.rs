//! Exact elimination over the rationals for small integer systems.

use num_rational::Ratio;

type Q = Ratio<i128>;

/// Solve `a · x = b` for an integral `x`. `a` is square, given row-major.
/// Returns `None` when the system is singular, inconsistent or only has
/// non-integral solutions.
pub fn solve_integral(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter().map(|&x| Q::from_integer(x as i128)).chain([Q::from_integer(rhs as i128)]).collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != Q::from_integer(0))?;
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && m[r][col] != Q::from_integer(0) {
                let f = m[r][col];
                for c in col..=n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    m.iter()
        .map(|row| {
            let v = row[n];
            v.is_integer().then(|| *v.numer() as i64)
        })
        .collect()
}

/// Determinant of a square integer matrix.
pub fn determinant(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    let mut m: Vec<Vec<Q>> =
        a.iter().map(|row| row.iter().map(|&x| Q::from_integer(x as i128)).collect()).collect();
    let mut det = Q::from_integer(1);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != Q::from_integer(0)) else {
            return 0;
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        for r in col + 1..n {
            let f = m[r][col] / p;
            if f != Q::from_integer(0) {
                for c in col..n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    *det.numer() as i64
}
