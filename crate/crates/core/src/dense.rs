//! Small dense linear algebra helpers: column-major matrices, Cholesky,
//! cyclic Jacobi eigenvalues, and least-squares line fits.
//!
//! Everything here is for small systems (element matrices, Schur pencils of a
//! few hundred rows, fits over a handful of sample points); the sparse
//! machinery in `fem::linsolve` handles the large solves.

use crate::error::{Error, Result};

/// Dense column-major matrix.
#[derive(Debug, Clone)]
pub struct DMat {
    pub nrows: usize,
    pub ncols: usize,
    data: Vec<f64>,
}

impl DMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        DMat { nrows, ncols, data: vec![0.0; nrows * ncols] }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[j * self.nrows + i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[j * self.nrows + i] = v;
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        self.data[j * self.nrows + i] += v;
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.ncols);
        let mut y = vec![0.0; self.nrows];
        for j in 0..self.ncols {
            let xj = x[j];
            if xj != 0.0 {
                let col = &self.data[j * self.nrows..(j + 1) * self.nrows];
                for i in 0..self.nrows {
                    y[i] += col[i] * xj;
                }
            }
        }
        y
    }

    /// In-place Cholesky factorization; returns the lower factor.
    pub fn cholesky(&self) -> Result<DMat> {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        let mut l = DMat::zeros(n, n);
        for j in 0..n {
            let mut d = self.get(j, j);
            for k in 0..j {
                d -= l.get(j, k) * l.get(j, k);
            }
            if d <= 0.0 {
                return Err(Error::numerical(format!(
                    "dense Cholesky breakdown at pivot {j} (value {d:.3e})"
                )));
            }
            let dj = d.sqrt();
            l.set(j, j, dj);
            for i in j + 1..n {
                let mut s = self.get(i, j);
                for k in 0..j {
                    s -= l.get(i, k) * l.get(j, k);
                }
                l.set(i, j, s / dj);
            }
        }
        Ok(l)
    }

    /// Solves `L L^T x = b` given the lower Cholesky factor `self`.
    pub fn cholesky_solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.nrows;
        let mut x = b.to_vec();
        for i in 0..n {
            let mut s = x[i];
            for k in 0..i {
                s -= self.get(i, k) * x[k];
            }
            x[i] = s / self.get(i, i);
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for k in i + 1..n {
                s -= self.get(k, i) * x[k];
            }
            x[i] = s / self.get(i, i);
        }
        x
    }
}

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method, ascending.
pub fn symmetric_eigenvalues(a: &DMat) -> Vec<f64> {
    assert_eq!(a.nrows, a.ncols);
    let n = a.nrows;
    let mut m = a.clone();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += m.get(i, j) * m.get(i, j);
            }
        }
        if off.sqrt() < 1e-14 * (1.0 + frobenius(&m)) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m.get(p, q);
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = m.get(k, p);
                    let akq = m.get(k, q);
                    m.set(k, p, c * akp - s * akq);
                    m.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = m.get(p, k);
                    let aqk = m.get(q, k);
                    m.set(p, k, c * apk - s * aqk);
                    m.set(q, k, s * apk + c * aqk);
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m.get(i, i)).collect();
    eig.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eig
}

fn frobenius(m: &DMat) -> f64 {
    let mut s = 0.0;
    for j in 0..m.ncols {
        for i in 0..m.nrows {
            s += m.get(i, j) * m.get(i, j);
        }
    }
    s.sqrt()
}

/// Smallest eigenvalue of the symmetric pencil `(A, B)` with `B` positive
/// definite: the minimum of `x^T A x / x^T B x`.
pub fn pencil_min_eigenvalue(a: &DMat, b: &DMat) -> Result<f64> {
    let n = a.nrows;
    let l = b.cholesky()?;
    // C = L^{-1} A L^{-T}, assembled column by column.
    let mut c = DMat::zeros(n, n);
    for j in 0..n {
        let mut ej = vec![0.0; n];
        ej[j] = 1.0;
        // y = L^{-T} e_j
        let mut y = ej;
        for i in (0..n).rev() {
            let mut s = y[i];
            for k in i + 1..n {
                s -= l.get(k, i) * y[k];
            }
            y[i] = s / l.get(i, i);
        }
        let ay = a.matvec(&y);
        // z = L^{-1} ay
        let mut z = ay;
        for i in 0..n {
            let mut s = z[i];
            for k in 0..i {
                s -= l.get(i, k) * z[k];
            }
            z[i] = s / l.get(i, i);
        }
        for i in 0..n {
            c.set(i, j, z[i]);
        }
    }
    // Symmetrize against roundoff before Jacobi.
    for i in 0..n {
        for j in i + 1..n {
            let v = 0.5 * (c.get(i, j) + c.get(j, i));
            c.set(i, j, v);
            c.set(j, i, v);
        }
    }
    Ok(symmetric_eigenvalues(&c)[0])
}

/// Least-squares line fit `y = slope * x + intercept`; returns
/// `(slope, intercept, r_squared)`.
pub fn line_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = my - slope * mx;
    let r2 = if syy > 0.0 { (sxy * sxy) / (sxx * syy) } else { 1.0 };
    (slope, intercept, r2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cholesky_solves_spd_system() {
        let mut a = DMat::zeros(3, 3);
        let vals = [[4.0, 1.0, 0.0], [1.0, 5.0, 2.0], [0.0, 2.0, 6.0]];
        for i in 0..3 {
            for j in 0..3 {
                a.set(i, j, vals[i][j]);
            }
        }
        let l = a.cholesky().unwrap();
        let x = l.cholesky_solve(&[1.0, 2.0, 3.0]);
        let r = a.matvec(&x);
        for (ri, bi) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((ri - bi).abs() < 1e-12);
        }
    }

    #[test]
    fn jacobi_eigenvalues_of_diagonal_matrix() {
        let mut a = DMat::zeros(3, 3);
        a.set(0, 0, 3.0);
        a.set(1, 1, 1.0);
        a.set(2, 2, 2.0);
        let e = symmetric_eigenvalues(&a);
        assert!((e[0] - 1.0).abs() < 1e-12);
        assert!((e[1] - 2.0).abs() < 1e-12);
        assert!((e[2] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn pencil_reduces_to_standard_problem_for_identity() {
        let mut a = DMat::zeros(2, 2);
        a.set(0, 0, 2.0);
        a.set(1, 1, 7.0);
        let mut b = DMat::zeros(2, 2);
        b.set(0, 0, 1.0);
        b.set(1, 1, 1.0);
        assert!((pencil_min_eigenvalue(&a, &b).unwrap() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn line_fit_recovers_exact_line() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let ys = [1.0, 3.0, 5.0, 7.0];
        let (s, b, r2) = line_fit(&xs, &ys);
        assert!((s - 2.0).abs() < 1e-12);
        assert!((b - 1.0).abs() < 1e-12);
        assert!((r2 - 1.0).abs() < 1e-12);
    }
}
