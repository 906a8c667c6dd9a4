use std::fmt;
use std::sync::Arc;

use super::poly::LaurentPoly;
use super::ratfunc::RationalFunc;
use crate::error::{Error, Result};
use crate::exactnum::rational::int;
use crate::exactnum::tower::same_ctx;

/// The quadratic extension by `w` with `w^2 = W` for a fixed Laurent polynomial `W`.
#[derive(Debug, PartialEq, Eq)]
pub struct SqrtExt {
    radicand: LaurentPoly,
    /// `W' / (2W)`, so that `w' = log_deriv * w`.
    log_deriv: RationalFunc,
}

impl SqrtExt {
    pub fn new(radicand: LaurentPoly) -> Result<Arc<Self>> {
        if radicand.is_zero() {
            return Err(Error::ZeroRadicand);
        }
        let log_deriv = RationalFunc::new(radicand.derivative(), radicand.scale_rational(&int(2)))?;
        Ok(Arc::new(Self { radicand, log_deriv }))
    }

    pub fn radicand(&self) -> &LaurentPoly {
        &self.radicand
    }
}

/// Element `q + s w` of the extension, with rational-function parts.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgFuncElem {
    q: RationalFunc,
    s: RationalFunc,
    ext: Arc<SqrtExt>,
}

impl AlgFuncElem {
    pub fn new(q: RationalFunc, s: RationalFunc, ext: &Arc<SqrtExt>) -> Result<Self> {
        if !same_ctx(q.ctx(), ext.radicand.ctx()) || !same_ctx(s.ctx(), ext.radicand.ctx()) {
            return Err(Error::ContextMismatch);
        }
        Ok(Self { q, s, ext: ext.clone() })
    }

    pub fn from_rf(q: RationalFunc, ext: &Arc<SqrtExt>) -> Result<Self> {
        let zero = RationalFunc::zero(q.ctx());
        Self::new(q, zero, ext)
    }

    /// The generator `w` itself.
    pub fn w(ext: &Arc<SqrtExt>) -> Self {
        let ctx = ext.radicand.ctx();
        Self { q: RationalFunc::zero(ctx), s: RationalFunc::one(ctx), ext: ext.clone() }
    }

    pub fn q(&self) -> &RationalFunc {
        &self.q
    }

    pub fn s(&self) -> &RationalFunc {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero() && self.s.is_zero()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ext, &o.ext) || self.ext == o.ext {
            Ok(())
        } else {
            Err(Error::ConfigMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Self { q: self.q.add(&o.q)?, s: self.s.add(&o.s)?, ext: self.ext.clone() })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Self { q: self.q.sub(&o.q)?, s: self.s.sub(&o.s)?, ext: self.ext.clone() })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let w2 = RationalFunc::from_poly(self.ext.radicand.clone());
        let q = self.q.mul(&o.q)?.add(&self.s.mul(&o.s)?.mul(&w2)?)?;
        let s = self.q.mul(&o.s)?.add(&self.s.mul(&o.q)?)?;
        Ok(Self { q, s, ext: self.ext.clone() })
    }

    pub fn mul_rf(&self, f: &RationalFunc) -> Result<Self> {
        Ok(Self { q: self.q.mul(f)?, s: self.s.mul(f)?, ext: self.ext.clone() })
    }

    pub fn conj(&self) -> Self {
        Self { q: self.q.clone(), s: self.s.neg(), ext: self.ext.clone() }
    }

    /// `(q + s w)(q - s w) = q^2 - s^2 W`.
    pub fn norm(&self) -> Result<RationalFunc> {
        let w2 = RationalFunc::from_poly(self.ext.radicand.clone());
        self.q.mul(&self.q)?.sub(&self.s.mul(&self.s)?.mul(&w2)?)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm()?;
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.conj().mul_rf(&n.inv()?)
    }

    /// `d/dt`, using `w' = W'/(2W) w`.
    pub fn derive(&self) -> Result<Self> {
        let q = self.q.derivative()?;
        let s = self.s.derivative()?.add(&self.s.mul(&self.ext.log_deriv)?)?;
        Ok(Self { q, s, ext: self.ext.clone() })
    }

    /// `factor * d/dt`.
    pub fn derive_scaled(&self, factor: &RationalFunc) -> Result<Self> {
        self.derive()?.mul_rf(factor)
    }
}

impl fmt::Debug for AlgFuncElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgFuncElem({} + ({})*w)", self.q, self.s)
    }
}
