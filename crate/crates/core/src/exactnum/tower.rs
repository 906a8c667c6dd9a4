//! The biquadratic algebra Q(s1, s2) with s1^2 = sigma1 and s2^2 = sigma2.
//!
//! Elements are stored on the basis {1, s1, s2, s1*s2}. A context records
//! which generators are rational (perfect-square radicands) or linked to the
//! other generator (square product); such generators are folded away at
//! construction so that every stored scalar is in a unique canonical form and
//! the algebra stays a field.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{rational_sqrt, sqrt_approx, to_f64, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerContext {
    sigma1: Rational,
    sigma2: Rational,
    sigma12: Rational,
    /// `s1 = root1` when sigma1 is a rational square.
    root1: Option<Rational>,
    /// `s2 = root2` when sigma2 is a rational square.
    root2: Option<Rational>,
    /// `s2 = link * s1` when neither radicand is a square but their product is.
    link: Option<Rational>,
}

pub type Tower = Arc<TowerContext>;

/// Builds the tower context for `Q(sqrt(sigma1), sqrt(sigma2))`.
pub fn tower_new(sigma1: Rational, sigma2: Rational) -> Result<Tower> {
    if sigma1.is_zero() || sigma2.is_zero() {
        return Err(Error::ZeroRadicand);
    }
    let root1 = rational_sqrt(&sigma1);
    let root2 = rational_sqrt(&sigma2);
    let sigma12 = &sigma1 * &sigma2;
    let link = match (&root1, &root2) {
        (None, None) => rational_sqrt(&sigma12).map(|q| q / &sigma1),
        _ => None,
    };
    Ok(Arc::new(TowerContext { sigma1, sigma2, sigma12, root1, root2, link }))
}

impl TowerContext {
    /// The trivial context where both generators collapse to 1.
    pub fn rational() -> Tower {
        tower_new(Rational::one(), Rational::one()).expect("nonzero radicands")
    }

    pub fn sigma1(&self) -> &Rational {
        &self.sigma1
    }

    pub fn sigma2(&self) -> &Rational {
        &self.sigma2
    }

    pub fn collapsed1(&self) -> Option<&Rational> {
        self.root1.as_ref()
    }

    pub fn collapsed2(&self) -> Option<&Rational> {
        self.root2.as_ref()
    }

    /// Factor `k` with `s2 = k * s1`, when the radicand product is a square.
    pub fn linked(&self) -> Option<&Rational> {
        self.link.as_ref()
    }

    /// Dimension of the effective field over Q.
    pub fn degree(&self) -> usize {
        match (&self.root1, &self.root2) {
            (Some(_), Some(_)) => 1,
            (None, None) if self.link.is_none() => 4,
            _ => 2,
        }
    }

    fn fold(&self, mut c: [Rational; 4]) -> [Rational; 4] {
        if let Some(q) = &self.root1 {
            let c10 = std::mem::take(&mut c[1]);
            let c11 = std::mem::take(&mut c[3]);
            if !c10.is_zero() {
                c[0] += c10 * q;
            }
            if !c11.is_zero() {
                c[2] += c11 * q;
            }
        }
        if let Some(q) = &self.root2 {
            let c01 = std::mem::take(&mut c[2]);
            let c11 = std::mem::take(&mut c[3]);
            if !c01.is_zero() {
                c[0] += c01 * q;
            }
            if !c11.is_zero() {
                c[1] += c11 * q;
            }
        }
        if let Some(k) = &self.link {
            let c01 = std::mem::take(&mut c[2]);
            let c11 = std::mem::take(&mut c[3]);
            if !c01.is_zero() {
                c[1] += c01 * k;
            }
            if !c11.is_zero() {
                c[0] += c11 * k * &self.sigma1;
            }
        }
        c
    }
}

/// An element of the tower algebra, tied to its context.
#[derive(Clone)]
pub struct TowerScalar {
    c: [Rational; 4],
    ctx: Tower,
}

pub(crate) fn same_ctx(a: &Tower, b: &Tower) -> bool {
    Arc::ptr_eq(a, b) || (a.sigma1 == b.sigma1 && a.sigma2 == b.sigma2)
}

impl TowerScalar {
    pub fn zero(ctx: &Tower) -> Self {
        Self { c: Default::default(), ctx: ctx.clone() }
    }

    pub fn one(ctx: &Tower) -> Self {
        Self::from_rational(ctx, Rational::one())
    }

    pub fn from_rational(ctx: &Tower, q: Rational) -> Self {
        let mut c: [Rational; 4] = Default::default();
        c[0] = q;
        Self { c, ctx: ctx.clone() }
    }

    pub fn from_int(ctx: &Tower, n: i64) -> Self {
        Self::from_rational(ctx, Rational::from_integer(n.into()))
    }

    /// Builds `c00 + c10 s1 + c01 s2 + c11 s1 s2`, folding collapsed generators.
    pub fn from_coords(ctx: &Tower, c: [Rational; 4]) -> Self {
        Self { c: ctx.fold(c), ctx: ctx.clone() }
    }

    pub fn s1(ctx: &Tower) -> Self {
        Self::basis(ctx, 1)
    }

    pub fn s2(ctx: &Tower) -> Self {
        Self::basis(ctx, 2)
    }

    pub fn s1s2(ctx: &Tower) -> Self {
        Self::basis(ctx, 3)
    }

    fn basis(ctx: &Tower, i: usize) -> Self {
        let mut c: [Rational; 4] = Default::default();
        c[i] = Rational::one();
        Self::from_coords(ctx, c)
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn ctx(&self) -> &Tower {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, when no irrational coordinate is present.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.c[1..].iter().all(Zero::is_zero).then_some(&self.c[0])
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let c = std::array::from_fn(|i| &self.c[i] + &other.c[i]);
        Ok(Self { c, ctx: self.ctx.clone() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let c = std::array::from_fn(|i| &self.c[i] - &other.c[i]);
        Ok(Self { c, ctx: self.ctx.clone() })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &other.c;
        let ctx = &self.ctx;
        let mut c: [Rational; 4] = Default::default();
        // s1^2 = sigma1, s2^2 = sigma2, s1*s2*s1 = sigma1 s2, s1*s2*s2 = sigma2 s1
        acc(&mut c[0], a0, b0, None);
        acc(&mut c[0], a1, b1, Some(&ctx.sigma1));
        acc(&mut c[0], a2, b2, Some(&ctx.sigma2));
        acc(&mut c[0], a3, b3, Some(&ctx.sigma12));
        acc(&mut c[1], a0, b1, None);
        acc(&mut c[1], a1, b0, None);
        acc(&mut c[1], a2, b3, Some(&ctx.sigma2));
        acc(&mut c[1], a3, b2, Some(&ctx.sigma2));
        acc(&mut c[2], a0, b2, None);
        acc(&mut c[2], a2, b0, None);
        acc(&mut c[2], a1, b3, Some(&ctx.sigma1));
        acc(&mut c[2], a3, b1, Some(&ctx.sigma1));
        acc(&mut c[3], a0, b3, None);
        acc(&mut c[3], a3, b0, None);
        acc(&mut c[3], a1, b2, None);
        acc(&mut c[3], a2, b1, None);
        Ok(Self { c: ctx.fold(c), ctx: ctx.clone() })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(&self.ctx);
        }
        let c = std::array::from_fn(|i| {
            if self.c[i].is_zero() {
                Rational::zero()
            } else {
                &self.c[i] * q
            }
        });
        Self { c, ctx: self.ctx.clone() }
    }

    /// Conjugate with respect to s2 (s2 -> -s2).
    fn conj2(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self { c: [a.clone(), b.clone(), -c, -d], ctx: self.ctx.clone() }
    }

    /// Conjugate with respect to s1 (s1 -> -s1).
    fn conj1(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self { c: [a.clone(), -b, c.clone(), -d], ctx: self.ctx.clone() }
    }

    /// Multiplicative inverse by rationalizing in s2, then in s1.
    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(&self.ctx, q.recip()));
        }
        let c2 = self.conj2();
        let n2 = self.try_mul(&c2)?;
        let c1 = n2.conj1();
        let n1 = n2.try_mul(&c1)?;
        let q = match n1.as_rational() {
            Some(q) if !q.is_zero() => q.clone(),
            _ => return Err(Error::ZeroDivisor),
        };
        Ok(c2.try_mul(&c1)?.scale(&q.recip()))
    }

    pub fn inv(&self) -> Self {
        self.try_inv().expect("tower inverse")
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Real value under the embedding s_i -> +sqrt(sigma_i).
    pub fn to_f64(&self, mode: FloatMode) -> Result<f64> {
        let ctx = &self.ctx;
        let needs = |i: usize, r: &Rational| -> Result<()> {
            if !self.c[i].is_zero() && r.is_negative() {
                Err(Error::NegativeRadicand)
            } else {
                Ok(())
            }
        };
        needs(1, &ctx.sigma1)?;
        needs(2, &ctx.sigma2)?;
        needs(3, &ctx.sigma1)?;
        needs(3, &ctx.sigma2)?;
        match mode {
            FloatMode::Fast => {
                let r1 = to_f64(&ctx.sigma1).abs().sqrt();
                let r2 = to_f64(&ctx.sigma2).abs().sqrt();
                let terms = [
                    to_f64(&self.c[0]),
                    to_f64(&self.c[1]) * r1,
                    to_f64(&self.c[2]) * r2,
                    to_f64(&self.c[3]) * r1 * r2,
                ];
                Ok(compensated_sum(&terms))
            }
            FloatMode::Accurate => {
                const BITS: u32 = 160;
                let r1 = sqrt_approx(&ctx.sigma1.abs(), BITS);
                let r2 = sqrt_approx(&ctx.sigma2.abs(), BITS);
                let v = &self.c[0] + &self.c[1] * &r1 + &self.c[2] * &r2 + &self.c[3] * &r1 * &r2;
                Ok(to_f64(&v))
            }
        }
    }
}

/// Float conversion strategy for [`TowerScalar::to_f64`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FloatMode {
    /// Double-precision square roots and a compensated four-term sum.
    #[default]
    Fast,
    /// Square roots approximated as 160-bit rationals, one final rounding.
    Accurate,
}

fn acc(out: &mut Rational, x: &Rational, y: &Rational, factor: Option<&Rational>) {
    if x.is_zero() || y.is_zero() {
        return;
    }
    let mut p = x * y;
    if let Some(f) = factor {
        p *= f;
    }
    *out += p;
}

fn compensated_sum(xs: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &x in xs {
        let y = x - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

impl PartialEq for TowerScalar {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && same_ctx(&self.ctx, &other.ctx)
    }
}

impl Eq for TowerScalar {}

impl fmt::Debug for TowerScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TowerScalar({self})")
    }
}

impl fmt::Display for TowerScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "s1", "s2", "s1*s2"];
        let mut first = true;
        for (q, name) in self.c.iter().zip(NAMES) {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let mag = q.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            match (name.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(name)?,
                (false, false) => write!(f, "{mag}*{name}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&TowerScalar> for &TowerScalar {
            type Output = TowerScalar;
            fn $m(self, rhs: &TowerScalar) -> TowerScalar {
                self.$try(rhs).expect("tower context mismatch")
            }
        }
        impl $tr<TowerScalar> for TowerScalar {
            type Output = TowerScalar;
            fn $m(self, rhs: TowerScalar) -> TowerScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TowerScalar> for TowerScalar {
            type Output = TowerScalar;
            fn $m(self, rhs: &TowerScalar) -> TowerScalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&TowerScalar> for TowerScalar {
    fn add_assign(&mut self, rhs: &TowerScalar) {
        assert!(same_ctx(&self.ctx, &rhs.ctx), "tower context mismatch");
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&TowerScalar> for TowerScalar {
    fn sub_assign(&mut self, rhs: &TowerScalar) {
        assert!(same_ctx(&self.ctx, &rhs.ctx), "tower context mismatch");
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl MulAssign<&TowerScalar> for TowerScalar {
    fn mul_assign(&mut self, rhs: &TowerScalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &TowerScalar {
    type Output = TowerScalar;
    fn neg(self) -> TowerScalar {
        let c = std::array::from_fn(|i| -&self.c[i]);
        TowerScalar { c, ctx: self.ctx.clone() }
    }
}

impl Neg for TowerScalar {
    type Output = TowerScalar;
    fn neg(self) -> TowerScalar {
        -&self
    }
}
