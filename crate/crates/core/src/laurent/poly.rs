use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::tower::same_ctx;
use crate::exactnum::{FloatMode, Rational, Tower, TowerScalar};

/// Sparse Laurent polynomial in `t` with tower coefficients.
///
/// Zero coefficients are never stored, so structural equality is value
/// equality.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, TowerScalar>,
    ctx: Tower,
}

impl LaurentPoly {
    pub fn zero(ctx: &Tower) -> Self {
        Self { terms: BTreeMap::new(), ctx: ctx.clone() }
    }

    pub fn one(ctx: &Tower) -> Self {
        Self::constant(TowerScalar::one(ctx))
    }

    pub fn constant(c: TowerScalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_rational(ctx: &Tower, q: Rational) -> Self {
        Self::constant(TowerScalar::from_rational(ctx, q))
    }

    pub fn from_int(ctx: &Tower, n: i64) -> Self {
        Self::constant(TowerScalar::from_int(ctx, n))
    }

    pub fn monomial(c: TowerScalar, k: i64) -> Self {
        let ctx = c.ctx().clone();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms, ctx }
    }

    /// `t^k`.
    pub fn t_pow(ctx: &Tower, k: i64) -> Self {
        Self::monomial(TowerScalar::one(ctx), k)
    }

    pub fn t(ctx: &Tower) -> Self {
        Self::t_pow(ctx, 1)
    }

    /// Sums the given `(exponent, coefficient)` pairs.
    pub fn from_terms(ctx: &Tower, terms: impl IntoIterator<Item = (i64, TowerScalar)>) -> Self {
        let mut out = Self::zero(ctx);
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    /// Polynomial with rational coefficients, given as `(exponent, coefficient)`.
    pub fn from_rationals(ctx: &Tower, terms: &[(i64, Rational)]) -> Self {
        Self::from_terms(
            ctx,
            terms.iter().map(|(k, q)| (*k, TowerScalar::from_rational(ctx, q.clone()))),
        )
    }

    /// Polynomial with small integer coefficients listed from `t^0` upward.
    pub fn from_ints(ctx: &Tower, coeffs: &[i64]) -> Self {
        Self::from_terms(
            ctx,
            coeffs.iter().enumerate().map(|(k, &c)| (k as i64, TowerScalar::from_int(ctx, c))),
        )
    }

    pub fn ctx(&self) -> &Tower {
        &self.ctx
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &TowerScalar)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, k: i64) -> TowerScalar {
        self.terms.get(&k).cloned().unwrap_or_else(|| TowerScalar::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(TowerScalar::is_one)
    }

    /// Highest exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&TowerScalar> {
        self.terms.values().next_back()
    }

    /// True when no negative exponent is present.
    pub fn is_polynomial(&self) -> bool {
        self.low_degree().is_none_or(|k| k >= 0)
    }

    pub fn as_constant(&self) -> Option<TowerScalar> {
        match self.terms.len() {
            0 => Some(TowerScalar::zero(&self.ctx)),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `(c, k)` when the polynomial is the single term `c t^k`.
    pub fn as_monomial(&self) -> Option<(&TowerScalar, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (c, *k))
        } else {
            None
        }
    }

    fn add_term(&mut self, k: i64, c: &TowerScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
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
        let (mut out, small) =
            if self.terms.len() >= other.terms.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (k, c) in &small.terms {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if let Some((c, k)) = other.as_monomial() {
            return Ok(self.scale(c).shift(k));
        }
        if let Some((c, k)) = self.as_monomial() {
            return Ok(other.scale(c).shift(k));
        }
        let mut out = Self::zero(&self.ctx);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out.add_term(i + j, &(a * b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &TowerScalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        if c.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(k, a)| (*k, a * c)).filter(|(_, a)| !a.is_zero()).collect();
        Self { terms, ctx: self.ctx.clone() }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(&self.ctx);
        }
        let terms = self.terms.iter().map(|(k, a)| (*k, a.scale(q))).collect();
        Self { terms, ctx: self.ctx.clone() }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(e, a)| (e + k, a.clone())).collect();
        Self { terms, ctx: self.ctx.clone() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        if let Some((c, k)) = self.as_monomial() {
            return Self::monomial(c.pow(e), k * e as i64);
        }
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

    pub fn derivative(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| **k != 0)
            .map(|(k, a)| (k - 1, a.scale(&Rational::from_integer((*k).into()))))
            .collect();
        Self { terms, ctx: self.ctx.clone() }
    }

    /// Exact evaluation at a tower scalar.
    pub fn eval(&self, x: &TowerScalar) -> Result<TowerScalar> {
        let mut acc = TowerScalar::zero(&self.ctx);
        if self.is_zero() {
            return Ok(acc);
        }
        let inv = if self.low_degree().unwrap() < 0 { Some(x.try_inv()?) } else { None };
        for (k, c) in &self.terms {
            let p = if *k >= 0 { x.pow(*k as u32) } else { inv.as_ref().unwrap().pow((-k) as u32) };
            acc = acc.try_add(&c.try_mul(&p)?)?;
        }
        Ok(acc)
    }

    /// Float coefficients `(exponent, value)` under the real embedding.
    pub fn to_f64_terms(&self, mode: FloatMode) -> Result<Vec<(i64, f64)>> {
        self.terms.iter().map(|(k, c)| Ok((*k, c.to_f64(mode)?))).collect()
    }

    /// Float evaluation at a real point.
    pub fn eval_f64(&self, x: f64) -> Result<f64> {
        Ok(eval_f64_terms(&self.to_f64_terms(FloatMode::Fast)?, x))
    }

    /// Substitutes the Laurent polynomial `z` for the variable (Horner's rule).
    ///
    /// `self` must be an ordinary polynomial.
    pub fn compose(&self, z: &LaurentPoly) -> Result<LaurentPoly> {
        self.check(z)?;
        if !self.is_polynomial() {
            return Err(Error::InvalidArgument("compose needs a polynomial outer function".into()));
        }
        let Some(deg) = self.degree() else {
            return Ok(Self::zero(&self.ctx));
        };
        let mut acc = Self::zero(&self.ctx);
        for k in (0..=deg).rev() {
            acc = &acc * z;
            if let Some(c) = self.terms.get(&k) {
                acc.add_term(0, c);
            }
        }
        Ok(acc)
    }

    /// Splits off the lowest power of `t`: `self = t^v * rest` with `rest(0) != 0`.
    pub fn strip_t(&self) -> (i64, LaurentPoly) {
        match self.low_degree() {
            Some(v) => (v, self.shift(-v)),
            None => (0, self.clone()),
        }
    }

    /// Scales to leading coefficient one.
    pub fn monic(&self) -> Result<LaurentPoly> {
        match self.leading_coeff() {
            None => Ok(self.clone()),
            Some(lc) => Ok(self.scale(&lc.try_inv()?)),
        }
    }

    /// Euclidean division of polynomials over the tower field.
    pub fn div_rem(&self, d: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        self.check(d)?;
        if !self.is_polynomial() || !d.is_polynomial() {
            return Err(Error::InvalidArgument("div_rem needs ordinary polynomials".into()));
        }
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = d.leading_coeff().unwrap().try_inv().map_err(|_| Error::ZeroDivisor)?;
        let mut q = Self::zero(&self.ctx);
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading_coeff().unwrap() * &lc_inv;
            let k = rd - dd;
            for (e, a) in &d.terms {
                r.add_term(e + k, &-(a * &c));
            }
            // guard against a leading term that failed to cancel
            r.terms.remove(&rd);
            q.add_term(k, &c);
        }
        Ok((q, r))
    }

    /// Exact quotient `self / d` when it is again a Laurent polynomial.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (vs, ps) = self.strip_t();
        let (vd, pd) = d.strip_t();
        let (q, r) = ps.div_rem(&pd)?;
        Ok(r.is_zero().then(|| q.shift(vs - vd)))
    }
}

pub(crate) fn eval_f64_terms(terms: &[(i64, f64)], x: f64) -> f64 {
    // Horner over the nonnegative part, powers of 1/x for the rest.
    let mut pos = 0.0;
    let mut neg = 0.0;
    let max = terms.iter().map(|t| t.0).max().unwrap_or(0).max(0);
    let min = terms.iter().map(|t| t.0).min().unwrap_or(0).min(0);
    let mut dense_pos = vec![0.0; (max + 1) as usize];
    let mut dense_neg = vec![0.0; (-min + 1) as usize];
    for &(k, c) in terms {
        if k >= 0 {
            dense_pos[k as usize] += c;
        } else {
            dense_neg[(-k) as usize] += c;
        }
    }
    for c in dense_pos.iter().rev() {
        pos = pos * x + c;
    }
    if min < 0 {
        let y = 1.0 / x;
        for c in dense_neg.iter().skip(1).rev() {
            neg = neg * y + c;
        }
        neg *= y;
    }
    pos + neg
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$try(rhs).expect("tower context mismatch")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(k, a)| (*k, -a)).collect();
        LaurentPoly { terms, ctx: self.ctx.clone() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    /// Panics on an empty iterator, which has no context to build zero from.
    fn sum<I: Iterator<Item = LaurentPoly>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of an empty LaurentPoly iterator");
        iter.fold(first, |acc, p| acc + p)
    }
}
