//! The two orthogonality integrals of the quartic family on `[t_lo, t_hi]`.
//!
//! With `z = a1(t)/t = (t - 1/t)/sqrt(2(beta - 1))` one has
//! `t^-n a_n = T_n(z)` and `t^-n b_n = b0 U_n(z)`, and the substitution maps
//! the interval onto `[-1, 1]`. Both integrals are evaluated in the raw
//! `t`-form by tanh-sinh and in the `z`-form by Gauss–Chebyshev.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use super::clenshaw::{cheb_t, cheb_u};
use super::rules::{gauss_chebyshev_first, gauss_chebyshev_second, tanh_sinh, Method, QuadResult};
use crate::error::{Error, Result};
use crate::pellfam::PellFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    /// `t^(-n-m-1) a_n a_m (t^2 + 1) sqrt((1 - beta)/(t^4 - 2 beta t^2 + 1))`.
    First,
    /// `t^(-n-m-3) b_n b_m (t^2 + 1) sqrt((t^4 - 2 beta t^2 + 1)/(1 - beta))`.
    Second,
}

impl Kernel {
    pub fn name(self) -> &'static str {
        match self {
            Kernel::First => "first",
            Kernel::Second => "second",
        }
    }
}

/// Highest tanh-sinh level used by the table and the elliptic checks.
pub const MAX_LEVEL: u32 = 9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthoProblem {
    pub beta: f64,
    pub kind: Kernel,
    pub n: usize,
    pub m: usize,
}

impl OrthoProblem {
    pub fn new(beta: f64, kind: Kernel, n: usize, m: usize) -> Result<Self> {
        if !(beta > 1.0) || !beta.is_finite() {
            return Err(Error::BetaOutOfRange(beta.to_string()));
        }
        Ok(Self { beta, kind, n, m })
    }

    /// `sqrt(2(beta - 1))`.
    pub fn s1(&self) -> f64 {
        (2.0 * (self.beta - 1.0)).sqrt()
    }

    /// `b0 = sqrt((beta + 1)/2)`.
    pub fn b0(&self) -> f64 {
        ((self.beta + 1.0) / 2.0).sqrt()
    }

    /// `(sqrt(beta + 1) - sqrt(beta - 1))/sqrt(2)`, rationalized to avoid
    /// cancellation for large `beta`.
    pub fn t_lo(&self) -> f64 {
        2f64.sqrt() / ((self.beta + 1.0).sqrt() + (self.beta - 1.0).sqrt())
    }

    pub fn t_hi(&self) -> f64 {
        ((self.beta + 1.0).sqrt() + (self.beta - 1.0).sqrt()) / 2f64.sqrt()
    }

    pub fn z_of_t(&self, t: f64) -> f64 {
        (t - 1.0 / t) / self.s1()
    }

    /// The root of `t^2 - z s1 t - 1 = 0` lying in `[t_lo, t_hi]`.
    pub fn t_of_z(&self, z: f64) -> f64 {
        let s1 = self.s1();
        let disc = (s1 * s1 * z * z + 4.0).sqrt();
        // the '+' root, written without cancellation for z < 0
        if z >= 0.0 { 0.5 * (z * s1 + disc) } else { 2.0 / (disc - z * s1) }
    }

    /// Exact value from the orthogonality theorem.
    pub fn expected(&self) -> f64 {
        let sq = (self.beta - 1.0).sqrt();
        match (self.kind, self.n == self.m) {
            (_, false) => 0.0,
            (Kernel::First, true) if self.n == 0 => PI * sq,
            (Kernel::First, true) => FRAC_PI_2 * sq,
            (Kernel::Second, true) => FRAC_PI_2 * (self.beta + 1.0) * sq,
        }
    }

    /// `t^-n a_n t^-m a_m` or `t^-n b_n t^-m b_m` at `z = z(t)`, by Clenshaw.
    fn product_at_z(&self, z: f64) -> f64 {
        match self.kind {
            Kernel::First => cheb_t(self.n, z) * cheb_t(self.m, z),
            Kernel::Second => self.b0().powi(2) * cheb_u(self.n, z) * cheb_u(self.m, z),
        }
    }

    /// `-(t^4 - 2 beta t^2 + 1) = (t - t_lo)(t + t_lo)(t_hi - t)(t_hi + t)`.
    fn neg_radicand(&self, t: f64, dlo: f64, dhi: f64) -> f64 {
        dlo * (t + self.t_lo()) * dhi * (self.t_hi() + t)
    }

    fn kernel_from_product(&self, t: f64, dlo: f64, dhi: f64, prod: f64) -> f64 {
        let rad = self.neg_radicand(t, dlo, dhi);
        let sq = (self.beta - 1.0).sqrt();
        match self.kind {
            Kernel::First => prod * (t * t + 1.0) * sq / (t * rad.sqrt()),
            Kernel::Second => prod * (t * t + 1.0) * rad.sqrt() / (t * t * t * sq),
        }
    }

    fn check_inside(&self, t: f64) -> Result<(f64, f64)> {
        let (lo, hi) = (self.t_lo(), self.t_hi());
        if !(t >= lo && t <= hi) {
            return Err(Error::OutsideInterval(t));
        }
        Ok((t - lo, hi - t))
    }

    /// The integrand at `t`, with the family evaluated by Clenshaw on the
    /// Chebyshev connection. Diverges at the endpoints for the first kernel.
    pub fn kernel(&self, t: f64) -> Result<f64> {
        let (dlo, dhi) = self.check_inside(t)?;
        Ok(self.kernel_from_product(t, dlo, dhi, self.product_at_z(self.z_of_t(t))))
    }

    /// The integrand at `t` with `a_n`, `b_n` taken from the exact family.
    /// The family must be the quartic family for this `beta`.
    pub fn kernel_exact(&self, fam: &PellFamily, t: f64) -> Result<f64> {
        let (dlo, dhi) = self.check_inside(t)?;
        let val = |p: &crate::laurent::LaurentPoly, k: usize| -> Result<f64> {
            Ok(p.shift(-(k as i64)).eval_f64(t)?)
        };
        let prod = match self.kind {
            Kernel::First => val(fam.a(self.n), self.n)? * val(fam.a(self.m), self.m)?,
            Kernel::Second => val(fam.b(self.n as i64), self.n)? * val(fam.b(self.m as i64), self.m)?,
        };
        Ok(self.kernel_from_product(t, dlo, dhi, prod))
    }

    /// Default Gauss node count: twice what exactness requires.
    pub fn default_nodes(&self) -> usize {
        (self.n + self.m + 2).max(8)
    }

    fn gauss_value(&self, nodes: usize) -> f64 {
        let sq = (self.beta - 1.0).sqrt();
        match self.kind {
            Kernel::First => sq * gauss_chebyshev_first(|z| self.product_at_z(z), nodes),
            Kernel::Second => 2.0 * sq * gauss_chebyshev_second(|z| self.product_at_z(z), nodes),
        }
    }

    /// The substituted integral by the Gauss–Chebyshev rule with `nodes` nodes.
    /// The error estimate compares against a rule with twice as many nodes.
    pub fn integrate_gauss_chebyshev(&self, nodes: usize) -> QuadResult {
        let value = self.gauss_value(nodes);
        let fine = self.gauss_value(2 * nodes);
        QuadResult {
            value,
            abs_error_estimate: (fine - value).abs(),
            nodes_used: nodes,
            method: Method::GaussChebyshev,
            converged: true,
        }
    }

    /// The raw `t`-integral by tanh-sinh.
    pub fn integrate_tanh_sinh(&self, tol: f64) -> QuadResult {
        let f = |t: f64, dlo: f64, dhi: f64| self.kernel_from_product(t, dlo, dhi, self.product_at_z(self.z_of_t(t)));
        tanh_sinh(f, self.t_lo(), self.t_hi(), tol, MAX_LEVEL)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvering::djkm_config;
    use crate::exactnum::rational::int;
    use proptest::prelude::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn kernel_point_values() {
        let p = OrthoProblem::new(3.0, Kernel::First, 0, 0).unwrap();
        assert!((p.kernel(1.0).unwrap() - SQRT2).abs() < 1e-15);
        let p = OrthoProblem::new(3.0, Kernel::First, 0, 1).unwrap();
        assert!(p.kernel(1.0).unwrap().abs() < 1e-15);
        assert!(p.kernel(p.t_lo()).unwrap().is_infinite() || p.kernel(p.t_lo()).unwrap().is_nan());
        let p = OrthoProblem::new(3.0, Kernel::Second, 2, 2).unwrap();
        assert_eq!(p.kernel(p.t_lo()).unwrap(), 0.0);
        assert_eq!(p.kernel(0.1).unwrap_err(), Error::OutsideInterval(0.1));
        assert_eq!(p.kernel(3.0).unwrap_err(), Error::OutsideInterval(3.0));
    }

    #[test]
    fn rejects_small_beta() {
        assert!(matches!(OrthoProblem::new(1.0, Kernel::First, 0, 0), Err(Error::BetaOutOfRange(_))));
        assert!(matches!(OrthoProblem::new(0.5, Kernel::First, 0, 0), Err(Error::BetaOutOfRange(_))));
        assert!(OrthoProblem::new(f64::NAN, Kernel::First, 0, 0).is_err());
    }

    #[test]
    fn endpoints_printed_form() {
        let p = OrthoProblem::new(3.0, Kernel::First, 0, 0).unwrap();
        assert!((p.t_lo() - (SQRT2 - 1.0)).abs() < 1e-15);
        assert!((p.t_hi() - (SQRT2 + 1.0)).abs() < 1e-15);
        assert!((p.t_of_z(-1.0) - p.t_lo()).abs() < 1e-15);
        assert!((p.t_of_z(1.0) - p.t_hi()).abs() < 1e-15);
    }

    #[test]
    fn gauss_examples() {
        let p = OrthoProblem::new(3.0, Kernel::First, 0, 0).unwrap();
        assert!((p.integrate_gauss_chebyshev(8).value - 4.442882938158366).abs() < 1e-13);
        let p = OrthoProblem::new(3.0, Kernel::First, 1, 1).unwrap();
        assert!((p.integrate_gauss_chebyshev(8).value - 2.221441469079183).abs() < 1e-13);
        let p = OrthoProblem::new(3.0, Kernel::First, 0, 1).unwrap();
        assert!(p.integrate_gauss_chebyshev(8).value.abs() < 1e-13);
    }

    #[test]
    fn tanh_sinh_examples() {
        let p = OrthoProblem::new(3.0, Kernel::Second, 2, 2).unwrap();
        let r = p.integrate_tanh_sinh(1e-11);
        assert!(r.converged);
        assert!((r.value - 8.885765876316732).abs() < 1e-10, "{r:?}");
        let p = OrthoProblem::new(3.0, Kernel::First, 0, 0).unwrap();
        assert!((p.integrate_tanh_sinh(1e-11).value - PI * SQRT2).abs() < 1e-10);
    }

    #[test]
    fn exact_and_clenshaw_paths_agree() {
        let c = djkm_config(&int(3)).unwrap();
        let fam = PellFamily::with_len(&c, 6);
        for kind in [Kernel::First, Kernel::Second] {
            for (n, m) in [(0, 0), (2, 3), (5, 6), (6, 6)] {
                let p = OrthoProblem::new(3.0, kind, n, m).unwrap();
                for t in [0.5, 1.0, 1.7, 2.3] {
                    let (a, b) = (p.kernel(t).unwrap(), p.kernel_exact(&fam, t).unwrap());
                    assert!((a - b).abs() < 1e-11 * (1.0 + a.abs()), "{kind:?} n={n} m={m} t={t}");
                }
            }
        }
    }

    #[test]
    fn gauss_exact_beyond_degree() {
        for (n, m) in [(0, 3), (4, 4), (7, 8)] {
            for kind in [Kernel::First, Kernel::Second] {
                let p = OrthoProblem::new(3.0, kind, n, m).unwrap();
                let base = (n + m + 2) / 2;
                let v = p.integrate_gauss_chebyshev(base).value;
                for extra in 1..6 {
                    assert!((p.integrate_gauss_chebyshev(base + extra).value - v).abs() < 1e-13);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn substitution_consistency(beta in 1.01f64..50.0, z in -0.999f64..0.999) {
            let p = OrthoProblem::new(beta, Kernel::First, 0, 0).unwrap();
            let t = p.t_of_z(z);
            // a1(t)/t = (t^2 - 1)/(t s1)
            prop_assert!(((t * t - 1.0) / (t * p.s1()) - z).abs() < 1e-13);
            prop_assert!(t >= p.t_lo() && t <= p.t_hi());
        }

        #[test]
        fn endpoint_reciprocity(beta in 1.0001f64..1e4) {
            let p = OrthoProblem::new(beta, Kernel::First, 0, 0).unwrap();
            prop_assert!((p.t_lo() * p.t_hi() - 1.0).abs() < 1e-15);
            prop_assert!(p.t_lo() > 0.0 && p.t_lo() <= 1.0 && p.t_hi() >= 1.0);
        }
    }
}
