use std::fmt;

use super::gcd::poly_gcd;
use super::poly::LaurentPoly;
use crate::error::{Error, Result};
use crate::exactnum::Tower;

/// Quotient of Laurent polynomials, kept reduced with a monic denominator
/// free of powers of `t` (those live in the numerator).
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ctx = num.ctx().clone();
        if num.is_zero() {
            return Ok(Self { num, den: LaurentPoly::one(&ctx) });
        }
        let (vd, d) = den.strip_t();
        let (vn, n) = num.strip_t();
        let g = poly_gcd(&n, &d)?;
        let n = n.exact_div(&g)?.expect("gcd divides numerator");
        let d = d.exact_div(&g)?.expect("gcd divides denominator");
        let lc = d.leading_coeff().unwrap().try_inv()?;
        Ok(Self { num: n.scale(&lc).shift(vn - vd), den: d.scale(&lc) })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.ctx());
        Self { num: p, den }
    }

    pub fn zero(ctx: &Tower) -> Self {
        Self::from_poly(LaurentPoly::zero(ctx))
    }

    pub fn one(ctx: &Tower) -> Self {
        Self::from_poly(LaurentPoly::one(ctx))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn ctx(&self) -> &Tower {
        self.num.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if any.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.den == o.den {
            return Self::new(self.num.try_add(&o.num)?, self.den.clone());
        }
        Self::new(self.num.try_mul(&o.den)?.try_add(&o.num.try_mul(&self.den)?)?, self.den.try_mul(&o.den)?)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.try_mul(&o.num)?, self.den.try_mul(&o.den)?)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self> {
        Self::new(self.num.try_mul(p)?, self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.mul(&o.inv()?)
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(Self { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn derivative(&self) -> Result<Self> {
        let top = self.num.derivative().try_mul(&self.den)?.try_sub(&self.num.try_mul(&self.den.derivative())?)?;
        Self::new(top, self.den.pow(2))
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::TowerContext;

    #[test]
    fn reduction_and_arithmetic() {
        let c = TowerContext::rational();
        let tm1 = LaurentPoly::from_ints(&c, &[-1, 1]);
        let t2m1 = LaurentPoly::from_ints(&c, &[-1, 0, 1]);
        let r = RationalFunc::new(tm1.shift(2), t2m1.scale_rational(&crate::exactnum::rational::int(2)).shift(1)).unwrap();
        assert_eq!(r.den(), &LaurentPoly::from_ints(&c, &[1, 1]));
        assert_eq!(r.num(), &LaurentPoly::t(&c).scale_rational(&crate::exactnum::rational::rat(1, 2)));

        let a = RationalFunc::new(LaurentPoly::one(&c), tm1.clone()).unwrap();
        let b = RationalFunc::new(LaurentPoly::one(&c), LaurentPoly::from_ints(&c, &[1, 1])).unwrap();
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, RationalFunc::new(LaurentPoly::from_ints(&c, &[0, 2]), t2m1.clone()).unwrap());
        assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), RationalFunc::one(&c));
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(RationalFunc::new(LaurentPoly::one(&c), LaurentPoly::zero(&c)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn quotient_rule() {
        let c = TowerContext::rational();
        // d/dt 1/(t^2 + 1) = -2t/(t^2 + 1)^2
        let q = LaurentPoly::from_ints(&c, &[1, 0, 1]);
        let r = RationalFunc::new(LaurentPoly::one(&c), q.clone()).unwrap();
        let want = RationalFunc::new(LaurentPoly::from_ints(&c, &[0, -2]), q.pow(2)).unwrap();
        assert_eq!(r.derivative().unwrap(), want);
        let tinv = RationalFunc::from_poly(LaurentPoly::t_pow(&c, -1));
        assert_eq!(tinv.derivative().unwrap(), RationalFunc::from_poly(-LaurentPoly::t_pow(&c, -2)));
    }
}
