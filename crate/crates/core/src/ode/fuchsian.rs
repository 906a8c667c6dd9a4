//! Singular points of an operator and the Fuchsian test.

use num_complex::Complex64;
use serde::Serialize;

use super::operator::OdeOperator;
use crate::error::Result;
use crate::exactnum::FloatMode;
use crate::laurent::{squarefree_decomposition, LaurentPoly};

/// One squarefree factor of the leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularFactor {
    pub factor: LaurentPoly,
    pub multiplicity: usize,
    pub regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularReport {
    pub finite: Vec<SingularFactor>,
    pub infinity_regular: bool,
}

impl SingularReport {
    /// Every singular point, including infinity, is regular.
    pub fn fuchsian(&self) -> bool {
        self.infinity_regular && self.finite.iter().all(|f| f.regular)
    }
}

fn divisible_by_power(c: &LaurentPoly, f: &LaurentPoly, k: usize) -> Result<bool> {
    if k == 0 || c.is_zero() {
        return Ok(true);
    }
    Ok(c.exact_div(&f.pow(k as u32))?.is_some())
}

/// Classifies the singular points exactly.
///
/// A root of `c2` of multiplicity `m` is regular singular iff its factor
/// divides `c1` to order `m - 1` and `c0` to order `m - 2`. Infinity is
/// regular iff `deg c1 <= deg c2 - 1` and `deg c0 <= deg c2 - 2`.
pub fn classify_fuchsian(op: &OdeOperator) -> Result<SingularReport> {
    let (v, rest) = op.c2.strip_t();
    let mut finite = Vec::new();
    if v > 0 {
        // exact_div ignores powers of t, so t is handled through valuations
        let m = v as usize;
        let ok = |c: &LaurentPoly, k: usize| c.low_degree().is_none_or(|d| d >= k as i64);
        let regular = ok(&op.c1, m - 1) && ok(&op.c0, m.saturating_sub(2));
        finite.push(SingularFactor { factor: LaurentPoly::t(op.c2.ctx()), multiplicity: m, regular });
    }
    for (f, m) in squarefree_decomposition(&rest)? {
        let regular = divisible_by_power(&op.c1, &f, m - 1)? && divisible_by_power(&op.c0, &f, m.saturating_sub(2))?;
        finite.push(SingularFactor { factor: f, multiplicity: m, regular });
    }
    let d2 = op.c2.degree().unwrap_or(0);
    let below = |c: &LaurentPoly, k: i64| c.degree().is_none_or(|d| d <= d2 - k);
    Ok(SingularReport { finite, infinity_regular: below(&op.c1, 1) && below(&op.c0, 2) })
}

/// Distinct finite singular points, sorted by real then imaginary part.
pub fn singular_points_numeric(op: &OdeOperator) -> Result<Vec<Complex64>> {
    let (v, rest) = op.c2.strip_t();
    let mut out = Vec::new();
    if v > 0 {
        out.push(Complex64::new(0.0, 0.0));
    }
    for (f, _) in squarefree_decomposition(&rest)? {
        out.extend(poly_roots(&f)?);
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(out)
}

/// Roots of a polynomial with nonzero constant term.
pub fn poly_roots(f: &LaurentPoly) -> Result<Vec<Complex64>> {
    let deg = f.degree().unwrap_or(0).max(0) as usize;
    let mut coeffs = vec![0.0; deg + 1];
    for (k, c) in f.to_f64_terms(FloatMode::Accurate)? {
        coeffs[k as usize] = c;
    }
    Ok(aberth(&coeffs))
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Simultaneous root iteration; `coeffs[k]` multiplies `z^k`.
fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let lead = coeffs[deg];
    // Cauchy bound on the moduli
    let radius = 1.0 + coeffs[..deg].iter().map(|c| (c / lead).abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(0.5 * radius, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / deg as f64))
        .collect();
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for k in 0..deg {
            let (p, dp) = horner(coeffs, z[k]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..deg).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let step = ratio / (1.0 - ratio * repulsion);
            z[k] -= step;
            max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
        }
        if max_step < 1e-16 {
            break;
        }
    }
    // snap roots that are real to rounding
    for r in &mut z {
        if r.im.abs() < 1e-13 * r.norm().max(1.0) {
            r.im = 0.0;
        }
    }
    z
}

/// JSON-friendly form of a report.
#[derive(Clone, Debug, Serialize)]
pub struct FactorSummary {
    pub factor: String,
    pub multiplicity: usize,
    pub regular: bool,
}

impl SingularReport {
    pub fn summary(&self) -> Vec<FactorSummary> {
        self.finite
            .iter()
            .map(|f| FactorSummary { factor: f.factor.to_string(), multiplicity: f.multiplicity, regular: f.regular })
            .collect()
    }
}
