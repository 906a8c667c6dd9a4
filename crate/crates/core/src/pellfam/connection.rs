//! Closed forms of the family through classical orthogonal polynomials,
//! evaluated at `z = a1 / t^r`.

use num_bigint::BigInt;

use super::family::{ChebFamily, PellFamily};
use crate::error::Result;
use crate::exactnum::rational::{binomial, binomial_rational, factorial, int, pochhammer};
use crate::exactnum::{Rational, Tower, TowerScalar};
use crate::laurent::LaurentPoly;

fn z_of(fam: &PellFamily) -> Result<(u32, LaurentPoly)> {
    let r = fam.config().require_r()?;
    Ok((r, fam.a1().shift(-(r as i64))))
}

fn t_rn(ctx: &Tower, r: u32, n: usize) -> LaurentPoly {
    LaurentPoly::t_pow(ctx, r as i64 * n as i64)
}

/// `a_n = t^(rn) T_n(z)` and `b_n = b0 t^(rn) U_n(z)` by substitution.
pub fn verify_chebyshev_connection(fam: &PellFamily, cheb: &ChebFamily, n: usize) -> Result<bool> {
    let (r, z) = z_of(fam)?;
    let ctx = fam.config().ctx();
    let scale = t_rn(ctx, r, n);
    let a = &scale * &cheb.t[n].compose(&z)?;
    let b = &(&scale * fam.config().b0()) * &cheb.u[n].compose(&z)?;
    Ok(&a == fam.a(n) && &b == fam.b(n as i64))
}

/// The terminating binomial sums
/// `a_n = sum C(n, 2k) (a1^2 - t^(2r))^k a1^(n-2k)` and
/// `b_n = b0 sum C(n+1, 2k+1) (a1^2 - t^(2r))^k a1^(n-2k)`.
pub fn verify_hypergeometric_sums(fam: &PellFamily, n: usize) -> Result<bool> {
    let r = fam.config().require_r()?;
    let ctx = fam.config().ctx();
    let a1 = fam.a1();
    let d = &(a1 * a1) - &LaurentPoly::t_pow(ctx, 2 * r as i64);
    let mut a = LaurentPoly::zero(ctx);
    let mut b = LaurentPoly::zero(ctx);
    let mut dk = LaurentPoly::one(ctx);
    for k in 0..=n / 2 {
        let base = &dk * &a1.pow((n - 2 * k) as u32);
        let ca = Rational::from_integer(binomial(n as u64, 2 * k as u64));
        let cb = Rational::from_integer(binomial(n as u64 + 1, 2 * k as u64 + 1));
        a = &a + &base.scale_rational(&ca);
        b = &b + &base.scale_rational(&cb);
        dk = &dk * &d;
    }
    let b = &b * fam.config().b0();
    Ok(&a == fam.a(n) && &b == fam.b(n as i64))
}

/// `T_n(z) = 2F1(-n, n; 1/2; (1 - z)/2)` as a polynomial in `z`.
pub fn chebyshev_t_hypergeometric(ctx: &Tower, n: usize) -> LaurentPoly {
    terminating_2f1(ctx, n, &int(n as i64), &(int(1) / int(2)), &int(1))
}

/// `U_n(z) = (n + 1) 2F1(-n, n + 2; 3/2; (1 - z)/2)` as a polynomial in `z`.
pub fn chebyshev_u_hypergeometric(ctx: &Tower, n: usize) -> LaurentPoly {
    terminating_2f1(ctx, n, &int(n as i64 + 2), &(int(3) / int(2)), &int(n as i64 + 1))
}

fn terminating_2f1(ctx: &Tower, n: usize, b: &Rational, c: &Rational, scale: &Rational) -> LaurentPoly {
    let minus_n = int(-(n as i64));
    // (1 - z)/2
    let x = LaurentPoly::from_rationals(ctx, &[(0, int(1) / int(2)), (1, int(-1) / int(2))]);
    let mut out = LaurentPoly::zero(ctx);
    let mut xk = LaurentPoly::one(ctx);
    for k in 0..=n as u64 {
        let coeff = pochhammer(&minus_n, k) * pochhammer(b, k)
            / (pochhammer(c, k) * Rational::from_integer(factorial(k)));
        out = &out + &xk.scale_rational(&coeff);
        xk = &xk * &x;
    }
    out.scale_rational(scale)
}

/// The hypergeometric forms of `T_n`, `U_n` substituted at `z`.
pub fn verify_2f1_route(fam: &PellFamily, n: usize) -> Result<bool> {
    let (r, z) = z_of(fam)?;
    let ctx = fam.config().ctx();
    let scale = t_rn(ctx, r, n);
    let a = &scale * &chebyshev_t_hypergeometric(ctx, n).compose(&z)?;
    let b = &(&scale * fam.config().b0()) * &chebyshev_u_hypergeometric(ctx, n).compose(&z)?;
    Ok(&a == fam.a(n) && &b == fam.b(n as i64))
}

/// Jacobi polynomials `P_k^(alpha, gamma)` for `k <= n` by the three-term recurrence.
pub fn jacobi_polys(ctx: &Tower, alpha: &Rational, gamma: &Rational, n: usize) -> Vec<LaurentPoly> {
    let z = LaurentPoly::t(ctx);
    let one = LaurentPoly::one(ctx);
    let ab = alpha + gamma;
    let two = int(2);
    // P_1 = (alpha + 1) + (alpha + gamma + 2)(z - 1)/2
    let p1 = &one.scale_rational(&(alpha + int(1)))
        + &(&z - &one).scale_rational(&((&ab + &two) / &two));
    let mut out = vec![one, p1];
    for k in 2..=n {
        let kq = int(k as i64);
        let s = &kq * &two + &ab; // 2k + alpha + gamma
        let lead = &two * &kq * (&kq + &ab) * (&s - &two);
        let c1 = (&s - int(1)) * &s * (&s - &two);
        let c0 = (&s - int(1)) * (alpha * alpha - gamma * gamma);
        let c2 = &two * (&kq + alpha - int(1)) * (&kq + gamma - int(1)) * &s;
        let next = &(&(&z * &out[k - 1]).scale_rational(&c1) + &out[k - 1].scale_rational(&c0))
            - &out[k - 2].scale_rational(&c2);
        out.push(next.scale_rational(&(int(1) / lead)));
    }
    out.truncate(n + 1);
    out
}

/// Gegenbauer polynomials `C_k^(lambda)` for `k <= n`.
pub fn gegenbauer_polys(ctx: &Tower, lambda: &Rational, n: usize) -> Vec<LaurentPoly> {
    let z = LaurentPoly::t(ctx);
    let mut out = vec![LaurentPoly::one(ctx), z.scale_rational(&(lambda * int(2)))];
    for k in 2..=n {
        let kq = int(k as i64);
        let c1 = (&kq + lambda - int(1)) * int(2) / &kq;
        let c2 = (&kq + lambda * int(2) - int(2)) / &kq;
        let next = &(&z * &out[k - 1]).scale_rational(&c1) - &out[k - 2].scale_rational(&c2);
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// Precomputed Jacobi and Gegenbauer tables for the connection checks.
#[derive(Clone, Debug)]
pub struct JacobiTables {
    pub p_minus: Vec<LaurentPoly>,
    pub p_plus: Vec<LaurentPoly>,
    pub gegenbauer1: Vec<LaurentPoly>,
}

impl JacobiTables {
    pub fn new(ctx: &Tower, n: usize) -> Self {
        let h = int(1) / int(2);
        Self {
            p_minus: jacobi_polys(ctx, &-h.clone(), &-h.clone(), n),
            p_plus: jacobi_polys(ctx, &h, &h, n),
            gegenbauer1: gegenbauer_polys(ctx, &int(1), n),
        }
    }
}

/// `C(n - 1/2, n) a_n = t^(rn) P_n^(-1/2,-1/2)(z)`,
/// `C(n + 1/2, n) b_n = (n + 1) b0 t^(rn) P_n^(1/2,1/2)(z)` and
/// `b_n = b0 t^(rn) C_n^(1)(z)`.
pub fn verify_jacobi_connection(fam: &PellFamily, tables: &JacobiTables, n: usize) -> Result<bool> {
    let (r, z) = z_of(fam)?;
    let ctx = fam.config().ctx();
    let scale = t_rn(ctx, r, n);
    let nq = int(n as i64);
    let h = int(1) / int(2);
    let ca = binomial_rational(&(&nq - &h), n as u64);
    let cb = binomial_rational(&(&nq + &h), n as u64);
    let lhs_a = fam.a(n).scale_rational(&ca);
    let rhs_a = &scale * &tables.p_minus[n].compose(&z)?;
    let b0_scaled = &scale * fam.config().b0();
    let lhs_b = fam.b(n as i64).scale_rational(&cb);
    let rhs_b = (&b0_scaled * &tables.p_plus[n].compose(&z)?).scale_rational(&(&nq + int(1)));
    let geg = &b0_scaled * &tables.gegenbauer1[n].compose(&z)?;
    Ok(lhs_a == rhs_a && lhs_b == rhs_b && &geg == fam.b(n as i64))
}

/// Determinant of the tridiagonal matrix with diagonal `d` and both
/// off-diagonals `off`, by the continuant recurrence.
pub fn tridiagonal_det(d: &[LaurentPoly], off_sq: &LaurentPoly) -> LaurentPoly {
    let ctx = off_sq.ctx();
    let mut prev = LaurentPoly::one(ctx);
    let Some(first) = d.first() else {
        return prev;
    };
    let mut cur = first.clone();
    for dk in &d[1..] {
        let next = &(dk * &cur) - &(off_sq * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `a_n = det(tridiag(a1, 2a1, ..., 2a1; t^r))` and `b_n = b0 det(tridiag(2a1, ...; t^r))`.
pub fn verify_determinant(fam: &PellFamily, n: usize) -> Result<bool> {
    let r = fam.config().require_r()?;
    let ctx = fam.config().ctx();
    let a1 = fam.a1();
    let two_a1 = a1 + a1;
    let off_sq = LaurentPoly::t_pow(ctx, 2 * r as i64);
    let mut da = vec![two_a1.clone(); n];
    if let Some(first) = da.first_mut() {
        *first = a1.clone();
    }
    let db = vec![two_a1; n];
    let a = tridiagonal_det(&da, &off_sq);
    let b = fam.config().b0() * &tridiagonal_det(&db, &off_sq);
    Ok(&a == fam.a(n) && &b == fam.b(n as i64))
}

/// `Gamma(n + 1/2) / sqrt(pi) = (2n)! / (4^n n!)`.
pub fn half_integer_gamma_ratio(n: u64) -> Rational {
    Rational::new(factorial(2 * n), BigInt::from(4).pow(n as u32) * factorial(n))
}

/// `b_n(1)` and `b_n(-1)` with the expected value `(-1)^(n/2) b0` for even
/// `n` and `0` for odd `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointValues {
    pub at_plus_one: TowerScalar,
    pub at_minus_one: TowerScalar,
    pub expected: TowerScalar,
}

impl EndpointValues {
    pub fn holds(&self) -> bool {
        self.at_plus_one == self.expected && self.at_minus_one == self.expected
    }
}

pub fn endpoint_values(fam: &PellFamily, n: usize) -> Result<EndpointValues> {
    let c = fam.config();
    if c.beta().is_none() {
        return Err(crate::error::Error::NotDjkm);
    }
    let ctx = c.ctx();
    let b = fam.b(n as i64);
    let at_plus_one = b.eval(&TowerScalar::one(ctx))?;
    let at_minus_one = b.eval(&TowerScalar::from_int(ctx, -1))?;
    let b0 = c.b0().as_constant().ok_or(crate::error::Error::NonConstantB0)?;
    let expected = match n % 4 {
        0 => b0,
        2 => -b0,
        _ => TowerScalar::zero(ctx),
    };
    Ok(EndpointValues { at_plus_one, at_minus_one, expected })
}
