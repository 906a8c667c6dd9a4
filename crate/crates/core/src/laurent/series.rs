use num_bigint::BigInt;
use num_traits::One;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Tower, TowerScalar};

/// Power series in `x` with Laurent-polynomial coefficients, truncated after
/// `x^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<LaurentPoly>,
    ctx: Tower,
}

impl TruncSeries {
    pub fn zero(ctx: &Tower, order: usize) -> Self {
        Self { coeffs: vec![LaurentPoly::zero(ctx); order + 1], ctx: ctx.clone() }
    }

    pub fn one(ctx: &Tower, order: usize) -> Self {
        let mut s = Self::zero(ctx, order);
        s.coeffs[0] = LaurentPoly::one(ctx);
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(ctx: &Tower, mut coeffs: Vec<LaurentPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, LaurentPoly::zero(ctx));
        Self { coeffs, ctx: ctx.clone() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &LaurentPoly {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::InvalidArgument(format!(
                "series orders differ ({} vs {})",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(&self.ctx, self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(Self { coeffs, ctx: self.ctx.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.try_sub(b)).collect::<Result<_>>()?;
        Ok(Self { coeffs, ctx: self.ctx.clone() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = Self::zero(&self.ctx, n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].try_add(&a.try_mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, p: &LaurentPoly) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|a| a.try_mul(p)).collect::<Result<_>>()?;
        Ok(Self { coeffs, ctx: self.ctx.clone() })
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.scale_rational(q)).collect();
        Self { coeffs, ctx: self.ctx.clone() }
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift_x(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![LaurentPoly::zero(&self.ctx); k.min(n + 1)];
        coeffs.extend(self.coeffs[..(n + 1).saturating_sub(k)].iter().cloned());
        Self { coeffs, ctx: self.ctx.clone() }
    }

    /// `d/dx`; the result is known one order less.
    pub fn derivative_x(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(&self.ctx, 0);
        }
        let coeffs =
            (1..=n).map(|i| self.coeffs[i].scale_rational(&Rational::from_integer(BigInt::from(i)))).collect();
        Self { coeffs, ctx: self.ctx.clone() }
    }

    /// `x d/dx`, which keeps the order.
    pub fn theta(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.scale_rational(&Rational::from_integer(BigInt::from(i))))
            .collect();
        Self { coeffs, ctx: self.ctx.clone() }
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].as_constant().filter(|c| !c.is_zero()).ok_or(Error::DivisionByZero)?;
        let inv0 = c0.try_inv()?;
        let n = self.order();
        let mut out = Self::zero(&self.ctx, n);
        out.coeffs[0] = LaurentPoly::constant(inv0.clone());
        for k in 1..=n {
            let mut acc = LaurentPoly::zero(&self.ctx);
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.try_add(&self.coeffs[j].try_mul(&out.coeffs[k - j])?)?;
                }
            }
            out.coeffs[k] = -acc.scale(&inv0);
        }
        Ok(out)
    }

    /// `ln(f)` for `f` with constant term 1, as `-sum (1 - f)^k / k`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidArgument("log needs constant term 1".into()));
        }
        let n = self.order();
        let g = Self::one(&self.ctx, n).sub(self)?;
        let mut power = g.clone();
        let mut out = Self::zero(&self.ctx, n);
        for k in 1..=n {
            out = out.sub(&power.scale_rational(&Rational::new(BigInt::one(), BigInt::from(k))))?;
            power = power.mul(&g)?;
        }
        Ok(out)
    }

    /// `exp(a x) = sum a^k x^k / k!`.
    pub fn exp_linear(a: &LaurentPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = LaurentPoly::one(a.ctx());
        for k in 0..=order {
            if k > 0 {
                term = (&term * a).scale_rational(&Rational::new(BigInt::one(), BigInt::from(k)));
            }
            coeffs.push(term.clone());
        }
        Self { coeffs, ctx: a.ctx().clone() }
    }

    pub fn ctx(&self) -> &Tower {
        &self.ctx
    }
}

/// Whether `y'' + c1 y' + c0 y` vanishes through the order the data supports.
pub fn series_ode_check(y: &TruncSeries, c1: &LaurentPoly, c0: &LaurentPoly) -> Result<bool> {
    let n = y.order();
    if n < 2 {
        return Ok(true);
    }
    let d1 = y.derivative_x().truncate(n - 2);
    let d2 = y.derivative_x().derivative_x();
    let y0 = y.truncate(n - 2);
    let total = d2.add(&d1.scale(c1)?)?.add(&y0.scale(c0)?)?;
    Ok(total.is_zero())
}

/// Whether `x d/dx L == scale * x Q'/Q`, i.e. `L` is `scale * ln Q` up to a
/// constant.
pub fn series_log_deriv_check(l: &TruncSeries, q: &TruncSeries, scale: &TowerScalar) -> Result<bool> {
    let lhs = l.theta().mul(q)?;
    let rhs = q.theta().scale(&LaurentPoly::constant(scale.clone()))?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};
    use crate::exactnum::TowerContext;

    fn geometric(ctx: &Tower, a: &LaurentPoly, n: usize) -> TruncSeries {
        TruncSeries::from_coeffs(ctx, (0..=n).map(|k| a.pow(k as u32)).collect(), n)
    }

    #[test]
    fn inverse_of_one_minus_ax() {
        let c = TowerContext::rational();
        let a = LaurentPoly::t(&c);
        let f = TruncSeries::from_coeffs(&c, vec![LaurentPoly::one(&c), -a.clone()], 6);
        assert_eq!(f.inverse().unwrap(), geometric(&c, &a, 6));
        assert_eq!(f.mul(&f.inverse().unwrap()).unwrap(), TruncSeries::one(&c, 6));
        let z = TruncSeries::zero(&c, 3);
        assert_eq!(z.inverse().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn log_and_exp() {
        let c = TowerContext::rational();
        let a = LaurentPoly::t(&c);
        // ln(1/(1 - a x)) = sum a^k x^k / k
        let f = TruncSeries::from_coeffs(&c, vec![LaurentPoly::one(&c), -a.clone()], 7);
        let l = f.inverse().unwrap().log().unwrap();
        for k in 1..=7 {
            assert_eq!(l.coeff(k), &a.pow(k as u32).scale_rational(&rat(1, k as i64)));
        }
        assert!(series_log_deriv_check(&l, &f, &TowerScalar::from_int(&c, -1)).unwrap());
        assert!(!series_log_deriv_check(&l, &f, &TowerScalar::from_int(&c, 1)).unwrap());

        // y = exp(a x) solves y'' - a^2 y = 0
        let e = TruncSeries::exp_linear(&a, 9);
        assert!(series_ode_check(&e, &LaurentPoly::zero(&c), &-(&a * &a)).unwrap());
        assert!(!series_ode_check(&e, &LaurentPoly::zero(&c), &(&a * &a)).unwrap());
    }

    #[test]
    fn shifting_and_theta() {
        let c = TowerContext::rational();
        let s = geometric(&c, &LaurentPoly::from_int(&c, 2), 4);
        let sh = s.shift_x(2);
        assert!(sh.coeff(0).is_zero() && sh.coeff(1).is_zero());
        assert_eq!(sh.coeff(4), &LaurentPoly::from_int(&c, 4));
        assert_eq!(s.theta().coeff(3), &LaurentPoly::from_rational(&c, int(24)));
        assert_eq!(s.derivative_x().order(), 3);
    }
}
