//! Smallest eigenvalues of a real symmetric tridiagonal matrix by Sturm
//! sequence bisection.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix given by its diagonal and first
/// off-diagonal.
#[derive(Debug, Clone)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::InvalidArgument("off-diagonal must be one shorter than a non-empty diagonal"));
        }
        Ok(SymTridiagonal { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.diag.len() {
            let pivot = if q == 0.0 { f64::EPSILON * (self.off[i - 1].abs() + 1.0) } else { q };
            q = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / pivot;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `count` smallest eigenvalues in ascending order.
    pub fn smallest_eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        if count > self.dim() {
            return Err(Error::InvalidArgument("requested more eigenvalues than the matrix has"));
        }
        let (lo0, hi0) = self.gershgorin();
        let mut out = Vec::with_capacity(count);
        for index in 0..count {
            let mut lo = lo0;
            let mut hi = hi0;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if self.count_below(mid) > index {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            out.push(0.5 * (lo + hi));
        }
        Ok(out)
    }
}
