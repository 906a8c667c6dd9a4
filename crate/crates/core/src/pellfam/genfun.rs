//! Generating-function identities, checked as truncated power series in `x`.

use num_bigint::BigInt;

use super::family::PellFamily;
use crate::curvering::Config;
use crate::error::Result;
use crate::exactnum::rational::{factorial, int};
use crate::exactnum::{Rational, TowerScalar};
use crate::laurent::{series_log_deriv_check, series_ode_check, LaurentPoly, TruncSeries};

/// Outcome of each generating-function check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFunReport {
    /// `Q * sum a_n x^n = 1 - a1 x` with `Q = 1 - 2 a1 x + N x^2`.
    pub ordinary_a: bool,
    /// `Q * sum b_n x^n = b0`.
    pub ordinary_b: bool,
    /// The same identities specialized at `x = 1` as finite partial sums.
    pub partial_sums: bool,
    /// `sum_(n>=1) a_n x^n / n = -ln(Q)/2`, both directly and after `x d/dx`.
    pub log_a: bool,
    /// `x d/dx sum_(n>=1) b_n x^n / n = b0 (2 a1 x - N x^2) / Q`.
    pub log_b: bool,
    /// `sum a_n x^n/n! = e^(a1 x) C(x)` with `C = sum (b0^2 p)^k x^(2k)/(2k)!`.
    pub exponential_a: bool,
    /// `sum b_n x^n/n! = b0 e^(a1 x) (C(x) + a1 S(x))`, `S` the odd companion of `C`.
    pub exponential_b: bool,
    /// Both exponential series solve `y'' - 2 a1 y' + N y = 0` with the right initial values.
    pub exponential_ode: bool,
}

impl GenFunReport {
    pub fn all(&self) -> bool {
        self.ordinary_a
            && self.ordinary_b
            && self.partial_sums
            && self.log_a
            && self.log_b
            && self.exponential_a
            && self.exponential_b
            && self.exponential_ode
    }
}

fn recip(k: usize) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(k))
}

/// Runs every generating-function check through order `order` (at least 2).
///
/// The family must be extended through `order`.
pub fn verify_generating_functions(fam: &PellFamily, order: usize) -> Result<GenFunReport> {
    assert!(order >= 2, "generating-function checks need order >= 2");
    let a: Vec<_> = (0..=order).map(|n| fam.a(n).clone()).collect();
    let b: Vec<_> = (0..=order).map(|n| fam.b(n as i64).clone()).collect();
    check_sequences(fam.config(), &a, &b)
}

fn check_sequences(c: &Config, a: &[LaurentPoly], b: &[LaurentPoly]) -> Result<GenFunReport> {
    let order = a.len() - 1;
    let ctx = c.ctx();
    let a1 = c.a1();
    let norm = c.pell_norm();
    let b0 = c.b0();
    let zero = LaurentPoly::zero(ctx);
    let one = LaurentPoly::one(ctx);

    let q = TruncSeries::from_coeffs(ctx, vec![one.clone(), -(a1 + a1), norm.clone()], order);
    let a_ser = TruncSeries::from_coeffs(ctx, a.to_vec(), order);
    let b_ser = TruncSeries::from_coeffs(ctx, b.to_vec(), order);

    let ordinary_a = q.mul(&a_ser)? == TruncSeries::from_coeffs(ctx, vec![one.clone(), -a1.clone()], order);
    let ordinary_b = q.mul(&b_ser)? == TruncSeries::from_coeffs(ctx, vec![b0.clone()], order);

    // (1 - 2 a1 + N) sum_(k<n) a_k = 1 - a1 - a_n + N a_(n-1), and the b analogue
    let k_at_one = &(&one - &(a1 + a1)) + norm;
    let mut partial_sums = true;
    let (mut sa, mut sb) = (zero.clone(), zero.clone());
    for n in 1..=order {
        sa = &sa + &a[n - 1];
        sb = &sb + &b[n - 1];
        if n >= 2 {
            let rhs_a = &(&(&one - a1) - &a[n]) + &(norm * &a[n - 1]);
            partial_sums &= &k_at_one * &sa == rhs_a;
        }
        let rhs_b = &(b0 - &b[n]) + &(norm * &b[n - 1]);
        partial_sums &= &k_at_one * &sb == rhs_b;
    }

    let scaled = |s: &TruncSeries, w: &dyn Fn(usize) -> Rational| {
        TruncSeries::from_coeffs(
            ctx,
            s.coeffs().iter().enumerate().map(|(n, x)| if n == 0 { zero.clone() } else { x.scale_rational(&w(n)) }).collect(),
            order,
        )
    };
    let la = scaled(&a_ser, &recip);
    let minus_half = TowerScalar::from_rational(ctx, int(-1) / int(2));
    let log_a = la == q.log()?.scale_rational(&(int(-1) / int(2))) && series_log_deriv_check(&la, &q, &minus_half)?;

    let lb = scaled(&b_ser, &recip);
    let rhs_b = TruncSeries::from_coeffs(ctx, vec![zero.clone(), b0 * &(a1 + a1), -(b0 * norm)], order);
    let log_b = lb.theta().mul(&q)? == rhs_b;

    let inv_fact = |n: usize| Rational::new(BigInt::from(1), factorial(n as u64));
    let egf = |s: &[LaurentPoly]| {
        TruncSeries::from_coeffs(ctx, s.iter().enumerate().map(|(n, x)| x.scale_rational(&inv_fact(n))).collect(), order)
    };
    let (ea, eb) = (egf(a), egf(b));
    let b0sq_p = &(b0 * b0) * c.p();
    let mut cosh = vec![zero.clone(); order + 1];
    let mut sinh = vec![zero.clone(); order + 1];
    let mut pw = one.clone();
    for k in 0..=order / 2 {
        cosh[2 * k] = pw.scale_rational(&inv_fact(2 * k));
        if 2 * k + 1 <= order {
            sinh[2 * k + 1] = pw.scale_rational(&inv_fact(2 * k + 1));
        }
        pw = &pw * &b0sq_p;
    }
    let cosh = TruncSeries::from_coeffs(ctx, cosh, order);
    let sinh = TruncSeries::from_coeffs(ctx, sinh, order);
    let exp_a1 = TruncSeries::exp_linear(a1, order);
    let exponential_a = exp_a1.mul(&cosh)? == ea;
    let exponential_b = exp_a1.mul(&cosh.add(&sinh.scale(a1)?)?)?.scale(b0)? == eb;

    let c1 = -(a1 + a1);
    let initial = |s: &TruncSeries, y0: &LaurentPoly, y1: &LaurentPoly| s.coeff(0) == y0 && s.coeff(1) == y1;
    let exponential_ode = series_ode_check(&ea, &c1, norm)?
        && series_ode_check(&eb, &c1, norm)?
        && initial(&ea, &one, a1)
        && initial(&eb, b0, &b[1]);

    Ok(GenFunReport { ordinary_a, ordinary_b, partial_sums, log_a, log_b, exponential_a, exponential_b, exponential_ode })
}
