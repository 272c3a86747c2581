//! Small dense matrix helpers (row-major `Vec<f64>`, side `n <= 12`).

/// `a * x` for a row-major `n x n` matrix.
pub(crate) fn mat_vec(n: usize, a: &[f64], x: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(x.len(), n);
    (0..n)
        .map(|r| (0..n).map(|c| a[r * n + c] * x[c]).sum())
        .collect()
}

/// `a * b` for row-major `n x n` matrices.
pub(crate) fn mat_mul(n: usize, a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(b.len(), n * n);
    let mut out = vec![0.0; n * n];
    for r in 0..n {
        for k in 0..n {
            let ark = a[r * n + k];
            if ark == 0.0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += ark * b[k * n + c];
            }
        }
    }
    out
}

/// Determinant by Gaussian elimination with partial pivoting.
/// Returns exactly 0.0 when a pivot column vanishes.
pub(crate) fn determinant(n: usize, a: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| {
                m[r * n + col]
                    .abs()
                    .partial_cmp(&m[s * n + col].abs())
                    .unwrap()
            })
            .unwrap();
        let pivot = m[pivot_row * n + col];
        if pivot == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            for c in 0..n {
                m.swap(col * n + c, pivot_row * n + c);
            }
            det = -det;
        }
        det *= pivot;
        for r in col + 1..n {
            let factor = m[r * n + col] / pivot;
            if factor == 0.0 {
                continue;
            }
            for c in col..n {
                m[r * n + c] -= factor * m[col * n + c];
            }
        }
    }
    det
}

/// Determinant by cofactor expansion along the first row.  Exact for
/// integer entries; intended for small matrices (`n <= 4` in practice).
pub(crate) fn det_cofactor(n: usize, a: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), n * n);
    match n {
        0 => 1.0,
        1 => a[0],
        2 => a[0] * a[3] - a[1] * a[2],
        _ => {
            let mut det = 0.0;
            let mut minor = vec![0.0; (n - 1) * (n - 1)];
            for col in 0..n {
                if a[col] == 0.0 {
                    continue;
                }
                let mut k = 0;
                for r in 1..n {
                    for c in 0..n {
                        if c != col {
                            minor[k] = a[r * n + c];
                            k += 1;
                        }
                    }
                }
                let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
                det += sign * a[col] * det_cofactor(n - 1, &minor);
            }
            det
        }
    }
}

/// Inverse by LU with partial pivoting applied to `[a | I]`.
/// Returns `None` when a pivot column vanishes exactly.
pub(crate) fn invert(n: usize, a: &[f64]) -> Option<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let mut inv = vec![0.0; n * n];
    for i in 0..n {
        inv[i * n + i] = 1.0;
    }
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| {
                m[r * n + col]
                    .abs()
                    .partial_cmp(&m[s * n + col].abs())
                    .unwrap()
            })
            .unwrap();
        if m[pivot_row * n + col] == 0.0 {
            return None;
        }
        if pivot_row != col {
            for c in 0..n {
                m.swap(col * n + c, pivot_row * n + c);
                inv.swap(col * n + c, pivot_row * n + c);
            }
        }
        let pivot = m[col * n + col];
        for c in 0..n {
            m[col * n + c] /= pivot;
            inv[col * n + c] /= pivot;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = m[r * n + col];
            if factor == 0.0 {
                continue;
            }
            for c in 0..n {
                m[r * n + c] -= factor * m[col * n + c];
                inv[r * n + c] -= factor * inv[col * n + c];
            }
        }
    }
    Some(inv)
}

/// True if the symmetric matrix admits a Cholesky factorisation with
/// strictly positive pivots, i.e. is positive definite.
pub(crate) fn is_positive_definite(n: usize, a: &[f64]) -> bool {
    debug_assert_eq!(a.len(), n * n);
    let mut l = vec![0.0; n * n];
    for r in 0..n {
        for c in 0..=r {
            let mut sum = a[r * n + c];
            for k in 0..c {
                sum -= l[r * n + k] * l[c * n + k];
            }
            if r == c {
                if sum <= 0.0 {
                    return false;
                }
                l[r * n + r] = sum.sqrt();
            } else {
                l[r * n + c] = sum / l[c * n + c];
            }
        }
    }
    true
}

/// Scale for relative singularity tests: the product over rows of the
/// largest entry magnitude (a Hadamard-style bound on the determinant).
pub(crate) fn hadamard_scale(n: usize, a: &[f64]) -> f64 {
    (0..n)
        .map(|r| (0..n).map(|c| a[r * n + c].abs()).fold(0.0, f64::max))
        .product()
}
