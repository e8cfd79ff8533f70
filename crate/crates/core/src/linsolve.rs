//! Small dense complex solvers.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Solves the square system `a·x = b` by Gaussian elimination with partial
/// pivoting.
pub fn solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let n = b.len();
    let scale = a.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm())).unwrap_or(col);
        if a[piv][col].norm() <= 1e-14 * scale {
            return Err(Error::Singular(format!("pivot {col} vanishes")));
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                let v = a[col][k];
                a[row][k] -= f * v;
            }
            let v = b[col];
            b[row] -= f * v;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for k in row + 1..n {
            s -= a[row][k] * x[k];
        }
        x[row] = s / a[row][row];
    }
    Ok(x)
}

/// Least-squares solution of the overdetermined system `a·x ≈ b` via
/// modified Gram–Schmidt QR.
pub fn least_squares(a: &[Vec<Complex64>], b: &[Complex64]) -> Result<Vec<Complex64>> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    if m < n {
        return Err(Error::Shape(format!("{m} equations for {n} unknowns")));
    }
    let mut q: Vec<Vec<Complex64>> = (0..n).map(|j| (0..m).map(|i| a[i][j]).collect()).collect();
    let mut r = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for j in 0..n {
        for k in 0..j {
            let dot: Complex64 = (0..m).map(|i| q[k][i].conj() * q[j][i]).sum();
            r[k][j] = dot;
            for i in 0..m {
                let v = q[k][i];
                q[j][i] -= dot * v;
            }
        }
        let norm = q[j].iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::Singular(format!("column {j} is dependent")));
        }
        r[j][j] = Complex64::new(norm, 0.0);
        for v in q[j].iter_mut() {
            *v /= norm;
        }
    }
    let qtb: Vec<Complex64> = (0..n).map(|k| (0..m).map(|i| q[k][i].conj() * b[i]).sum()).collect();
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut s = qtb[row];
        for k in row + 1..n {
            s -= r[row][k] * x[k];
        }
        x[row] = s / r[row][row];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn solves_small_systems() {
        let a = vec![vec![c64(0.0, 0.0), c64(2.0, 1.0)], vec![c64(1.0, 0.0), c64(1.0, -1.0)]];
        let x = solve(a.clone(), vec![c64(3.0, 0.0), c64(1.0, 2.0)]).unwrap();
        for (row, rhs) in a.iter().zip([c64(3.0, 0.0), c64(1.0, 2.0)]) {
            assert!((row[0] * x[0] + row[1] * x[1] - rhs).norm() < 1e-14);
        }
        let ls = least_squares(&a, &[c64(3.0, 0.0), c64(1.0, 2.0)]).unwrap();
        assert!((ls[0] - x[0]).norm() < 1e-14 && (ls[1] - x[1]).norm() < 1e-14);
        assert!(solve(vec![vec![c64(1.0, 0.0); 2]; 2], vec![c64(1.0, 0.0); 2]).is_err());
    }
}
