//! Rodrigues-type formulas: `a_n` and `b_n` as a prefactor times the `n`-th
//! power of the derivation `D = t^(r+1) / E d/dt` applied to a weight, where
//! `E = a1' t - r a1` and `w^2 = W = t^(2r) - a1^2`.
//!
//! Two independent evaluations are provided. The factored route tracks
//! elements `N W^(k/2) E^m` with a Laurent polynomial `N`, which keeps every
//! step polynomial. The generic route works in the algebraic-function field.

use std::sync::Arc;

use num_bigint::BigInt;

use super::family::PellFamily;
use crate::error::{Error, Result};
use crate::exactnum::rational::{factorial, int};
use crate::exactnum::{Rational, TowerScalar};
use crate::laurent::{AlgFuncElem, LaurentPoly, RationalFunc, SqrtExt};

/// `E`, `W` and their derivatives for one configuration.
#[derive(Clone, Debug)]
pub struct RodriguesData {
    r: u32,
    e: LaurentPoly,
    w2: LaurentPoly,
    de: LaurentPoly,
    dw2: LaurentPoly,
}

impl RodriguesData {
    pub fn new(fam: &PellFamily) -> Result<Self> {
        let c = fam.config();
        let r = c.require_r()?;
        let a1 = c.a1();
        let ctx = c.ctx();
        let e = &(&a1.derivative() * &LaurentPoly::t(ctx)) - &a1.scale_rational(&int(r as i64));
        if e.is_zero() {
            return Err(Error::DegenerateDerivation);
        }
        let w2 = &LaurentPoly::t_pow(ctx, 2 * r as i64) - &(a1 * a1);
        if w2.is_zero() {
            return Err(Error::DegenerateDerivation);
        }
        Ok(Self { r, de: e.derivative(), dw2: w2.derivative(), e, w2 })
    }

    pub fn e(&self) -> &LaurentPoly {
        &self.e
    }

    pub fn radicand(&self) -> &LaurentPoly {
        &self.w2
    }
}

/// `num * W^(k/2) * E^m`.
#[derive(Clone, Debug)]
struct Factored {
    num: LaurentPoly,
    k: i64,
    m: i64,
}

impl Factored {
    /// Applies `D`.
    fn apply_d(&self, data: &RodriguesData) -> Factored {
        // d/dt (N W^(k/2) E^m) = [N' W E + (k/2) N W' E + m N W E'] W^(k/2 - 1) E^(m - 1)
        let n = &self.num;
        let t1 = &(&n.derivative() * &data.w2) * &data.e;
        let t2 = (&(n * &data.dw2) * &data.e).scale_rational(&Rational::new(BigInt::from(self.k), BigInt::from(2)));
        let t3 = (&(n * &data.w2) * &data.de).scale_rational(&int(self.m));
        let bracket = &(&t1 + &t2) + &t3;
        Factored { num: bracket.shift(data.r as i64 + 1), k: self.k - 2, m: self.m - 2 }
    }
}

fn coeff_a(n: u64) -> Rational {
    Rational::new(BigInt::from(2).pow(n as u32) * factorial(n), factorial(2 * n))
}

fn coeff_b(n: u64) -> Rational {
    Rational::new(BigInt::from(2).pow(n as u32 + 1) * factorial(n + 1), factorial(2 * n + 2))
}

fn sign(n: usize) -> Rational {
    if n % 2 == 0 { int(1) } else { int(-1) }
}

fn apply_n(mut f: Factored, data: &RodriguesData, n: usize) -> Factored {
    for _ in 0..n {
        f = f.apply_d(data);
    }
    f
}

/// Checks both formulas for index `n >= 1` by the factored route.
///
/// After clearing the common factor `E^(2n)` the comparison is between
/// Laurent polynomials.
pub fn verify_rodrigues(fam: &PellFamily, data: &RodriguesData, n: usize) -> Result<bool> {
    let c = fam.config();
    let b0 = c.b0_constant().ok_or(Error::NonConstantB0)?;
    let ctx = c.ctx();
    let (r, ni) = (data.r as i64, n as i64);
    let e2n = data.e.pow(2 * n as u32);

    // a side: weight t^(-2nr + r) W^(n - 1) w, i.e. W^((2n - 1)/2)
    let fa = apply_n(Factored { num: LaurentPoly::t_pow(ctx, -2 * ni * r + r), k: 2 * ni - 1, m: 0 }, data, n);
    debug_assert_eq!((fa.k, fa.m), (-1, -2 * ni));
    // w * W^(-1/2) = 1
    let lhs_a = fa.num.shift((ni - 1) * r).scale_rational(&(sign(n) * coeff_a(n as u64)));
    let ok_a = lhs_a == fam.a(n) * &e2n;

    // b side: weight t^(-2nr - r) W^n w, i.e. W^((2n + 1)/2)
    let fb = apply_n(Factored { num: LaurentPoly::t_pow(ctx, -2 * ni * r - r), k: 2 * ni + 1, m: 0 }, data, n);
    debug_assert_eq!((fb.k, fb.m), (1, -2 * ni));
    // w^(-1) * W^(1/2) = 1
    let cb = sign(n) * int(ni + 1) * coeff_b(n as u64);
    let lhs_b = fb.num.shift((ni + 1) * r).scale(&b0.scale(&cb));
    let ok_b = lhs_b == fam.b(ni) * &e2n;
    Ok(ok_a && ok_b)
}

/// `a_n` and `b_n` from the generic algebraic-function route.
pub fn rodrigues_generic(fam: &PellFamily, data: &RodriguesData, n: usize) -> Result<(AlgFuncElem, AlgFuncElem)> {
    let c = fam.config();
    let b0 = c.b0_constant().ok_or(Error::NonConstantB0)?;
    let ctx = c.ctx();
    let (r, ni) = (data.r as i64, n as i64);
    let ext: Arc<SqrtExt> = SqrtExt::new(data.w2.clone())?;
    let factor = RationalFunc::new(LaurentPoly::t_pow(ctx, r + 1), data.e.clone())?;
    let w = AlgFuncElem::w(&ext);
    let rf = |p: LaurentPoly| RationalFunc::from_poly(p);

    let mut fa = w.mul_rf(&rf(&LaurentPoly::t_pow(ctx, -2 * ni * r + r) * &data.w2.pow(n as u32 - 1)))?;
    let mut fb = w.mul_rf(&rf(&LaurentPoly::t_pow(ctx, -2 * ni * r - r) * &data.w2.pow(n as u32)))?;
    for _ in 0..n {
        fa = fa.derive_scaled(&factor)?;
        fb = fb.derive_scaled(&factor)?;
    }
    let pre_a = LaurentPoly::monomial(TowerScalar::from_rational(ctx, sign(n) * coeff_a(n as u64)), (ni - 1) * r);
    let a = w.mul(&fa)?.mul_rf(&rf(pre_a))?;
    let cb = b0.scale(&(sign(n) * int(ni + 1) * coeff_b(n as u64)));
    let pre_b = LaurentPoly::monomial(cb, (ni + 1) * r);
    let b = w.inv()?.mul(&fb)?.mul_rf(&rf(pre_b))?;
    Ok((a, b))
}

/// Whether the generic route yields pure rational functions equal to the family.
pub fn verify_rodrigues_generic(fam: &PellFamily, data: &RodriguesData, n: usize) -> Result<bool> {
    let (a, b) = rodrigues_generic(fam, data, n)?;
    let pure = a.s().is_zero() && b.s().is_zero();
    Ok(pure && a.q().as_poly() == Some(fam.a(n)) && b.q().as_poly() == Some(fam.b(n as i64)))
}
