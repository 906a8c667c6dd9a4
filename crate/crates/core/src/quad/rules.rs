//! Gauss–Chebyshev rules and double-exponential (tanh-sinh) integration.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    GaussChebyshev,
    TanhSinh,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub nodes_used: usize,
    pub method: Method,
    /// False when tanh-sinh stopped at the level limit without meeting `tol`.
    pub converged: bool,
}

/// `sum f(z_k)` over the first-kind nodes `cos((2k - 1) pi / 2N)`, times `pi / N`.
/// Integrates `f(z) / sqrt(1 - z^2)` on `[-1, 1]` exactly for degree `<= 2N - 1`.
pub fn gauss_chebyshev_first(f: impl Fn(f64) -> f64, n: usize) -> f64 {
    assert!(n >= 1, "Gauss rule needs at least one node");
    let s: f64 = (1..=n).map(|k| f(((2 * k - 1) as f64 * PI / (2 * n) as f64).cos())).sum();
    s * PI / n as f64
}

/// Second-kind rule: nodes `cos(k pi / (N + 1))`, weights `pi / (N + 1) sin^2`.
/// Integrates `f(z) sqrt(1 - z^2)` exactly for degree `<= 2N - 1`.
pub fn gauss_chebyshev_second(f: impl Fn(f64) -> f64, n: usize) -> f64 {
    assert!(n >= 1, "Gauss rule needs at least one node");
    let h = PI / (n + 1) as f64;
    (1..=n)
        .map(|k| {
            let th = k as f64 * h;
            h * th.sin().powi(2) * f(th.cos())
        })
        .sum()
}

/// Largest abscissa parameter: beyond it the endpoint distance underflows.
const U_MAX: f64 = 6.5;

/// Integrates `f` over `[a, b]` by the tanh-sinh rule.
///
/// `f(x, x - a, b - x)` receives the endpoint distances computed without
/// cancellation, so integrands singular at the ends can be evaluated
/// accurately. The step is halved until successive estimates differ by less
/// than `tol` or `max_level` halvings have been done.
pub fn tanh_sinh(f: impl Fn(f64, f64, f64) -> f64, a: f64, b: f64, tol: f64, max_level: u32) -> QuadResult {
    let half = 0.5 * (b - a);
    let mut nodes = 0usize;
    // contribution of the abscissae u = k h for the given k
    let mut point = |u: f64| -> f64 {
        let v = FRAC_PI_2 * u.sinh();
        let w = FRAC_PI_2 * u.cosh() / v.cosh().powi(2);
        if w == 0.0 {
            return 0.0;
        }
        // x - a = half (1 + tanh v) = 2 half / (1 + e^(-2v))
        let dlo = 2.0 * half / (1.0 + (-2.0 * v).exp());
        let dhi = 2.0 * half / (1.0 + (2.0 * v).exp());
        if dlo <= 0.0 || dhi <= 0.0 {
            return 0.0;
        }
        nodes += 1;
        let x = if dlo < dhi { a + dlo } else { b - dhi };
        half * w * f(x, dlo, dhi)
    };

    let mut h = 1.0;
    let mut sum = point(0.0);
    let mut k = 1;
    while k as f64 * h <= U_MAX {
        let u = k as f64 * h;
        sum += point(u) + point(-u);
        k += 1;
    }
    let mut estimate = h * sum;
    let mut diff = f64::INFINITY;
    for level in 1..=max_level {
        h *= 0.5;
        // only odd multiples of the new step are new
        let mut k = 1;
        while k as f64 * h <= U_MAX {
            let u = k as f64 * h;
            sum += point(u) + point(-u);
            k += 2;
        }
        let next = h * sum;
        diff = (next - estimate).abs();
        estimate = next;
        if level >= 3 && diff < tol {
            return QuadResult { value: estimate, abs_error_estimate: diff, nodes_used: nodes, method: Method::TanhSinh, converged: true };
        }
    }
    QuadResult { value: estimate, abs_error_estimate: diff, nodes_used: nodes, method: Method::TanhSinh, converged: false }
}
