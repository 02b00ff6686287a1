//! Dense complex polynomials in ascending-degree coefficient order.

use num_complex::Complex64;

/// Horner evaluation of `Σ cₙ zⁿ`.
pub fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

pub fn derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    if coeffs.len() <= 1 {
        return vec![Complex64::new(0.0, 0.0)];
    }
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| c * n as f64)
        .collect()
}

/// Cauchy product.
pub fn mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (k, x) in a.iter().enumerate() {
        for (m, y) in b.iter().enumerate() {
            out[k + m] += x * y;
        }
    }
    out
}

/// Monic polynomial `Π (z − r)` with the given roots.
pub fn from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut p = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        p = mul(&p, &[-r, Complex64::new(1.0, 0.0)]);
    }
    p
}

/// Drops trailing coefficients whose modulus is at most `tol` times the
/// largest coefficient modulus. Returns an empty vector for the zero polynomial.
pub fn trim(coeffs: &[Complex64], tol: f64) -> Vec<Complex64> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Vec::new();
    }
    let mut end = coeffs.len();
    while end > 0 && coeffs[end - 1].norm() <= tol * scale {
        end -= 1;
    }
    coeffs[..end].to_vec()
}

pub fn max_abs(coeffs: &[Complex64]) -> f64 {
    coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
}
