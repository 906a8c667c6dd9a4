//! Clenshaw summation for Chebyshev series.

/// `sum c_k T_k(z)`.
pub fn clenshaw_t(coeffs: &[f64], z: f64) -> f64 {
    let (b1, b2) = backward(coeffs, z);
    // b0 - z b1 with b0 = c0 + 2 z b1 - b2
    match coeffs.first() {
        Some(c0) => c0 + z * b1 - b2,
        None => 0.0,
    }
}

/// `sum c_k U_k(z)`.
pub fn clenshaw_u(coeffs: &[f64], z: f64) -> f64 {
    let (b1, b2) = backward(coeffs, z);
    match coeffs.first() {
        Some(c0) => c0 + 2.0 * z * b1 - b2,
        None => 0.0,
    }
}

/// Runs the recurrence `b_k = c_k + 2 z b_(k+1) - b_(k+2)` down to `k = 1`
/// and returns `(b_1, b_2)`.
fn backward(coeffs: &[f64], z: f64) -> (f64, f64) {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &c in coeffs.iter().skip(1).rev() {
        let b = c + 2.0 * z * b1 - b2;
        b2 = b1;
        b1 = b;
    }
    (b1, b2)
}

fn unit(n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n + 1];
    c[n] = 1.0;
    c
}

/// `T_n(z)`.
pub fn cheb_t(n: usize, z: f64) -> f64 {
    clenshaw_t(&unit(n), z)
}

/// `U_n(z)`.
pub fn cheb_u(n: usize, z: f64) -> f64 {
    clenshaw_u(&unit(n), z)
}
