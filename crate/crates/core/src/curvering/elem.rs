use std::fmt;
use std::sync::Arc;

use super::config::Config;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Element `f + g u` of the ring with `u^2 = p`.
#[derive(Clone)]
pub struct CurveElem {
    f: LaurentPoly,
    g: LaurentPoly,
    config: Config,
}

impl CurveElem {
    pub fn new(f: LaurentPoly, g: LaurentPoly, config: &Config) -> Self {
        Self { f, g, config: config.clone() }
    }

    pub fn from_f(f: LaurentPoly, config: &Config) -> Self {
        let g = LaurentPoly::zero(config.ctx());
        Self::new(f, g, config)
    }

    pub fn one(config: &Config) -> Self {
        Self::from_f(LaurentPoly::one(config.ctx()), config)
    }

    /// The generator `u`.
    pub fn u(config: &Config) -> Self {
        Self::new(LaurentPoly::zero(config.ctx()), LaurentPoly::one(config.ctx()), config)
    }

    pub fn f(&self) -> &LaurentPoly {
        &self.f
    }

    pub fn g(&self) -> &LaurentPoly {
        &self.g
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    fn check(&self, o: &Self) -> Result<()> {
        if same_config(&self.config, &o.config) {
            Ok(())
        } else {
            Err(Error::ConfigMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Self::new(&self.f + &o.f, &self.g + &o.g, &self.config))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Self::new(&self.f - &o.f, &self.g - &o.g, &self.config))
    }

    /// `(f1 + g1 u)(f2 + g2 u) = (f1 f2 + g1 g2 p) + (f1 g2 + f2 g1) u`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let f = &(&self.f * &o.f) + &(&(&self.g * &o.g) * self.config.p());
        let g = &(&self.f * &o.g) + &(&o.f * &self.g);
        Ok(Self::new(f, g, &self.config))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::new(&self.f * c, &self.g * c, &self.config)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.f.clone(), -&self.g, &self.config)
    }

    /// `f^2 - g^2 p`.
    pub fn norm(&self) -> LaurentPoly {
        &(&self.f * &self.f) - &(&(&self.g * &self.g) * self.config.p())
    }

    /// Binary exponentiation.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::one(&self.config);
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base).expect("same config");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same config");
            }
        }
        out
    }

    /// Inverse `conj(x)/norm(x)`, defined when the norm is a monomial `c t^k`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        let (c, k) = n.as_monomial().ok_or_else(|| Error::InvalidArgument("element is not a unit".into()))?;
        let inv = LaurentPoly::monomial(c.try_inv()?, -k);
        Ok(self.conj().scale(&inv))
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }
}

pub(crate) fn same_config(a: &Config, b: &Config) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for CurveElem {
    fn eq(&self, o: &Self) -> bool {
        same_config(&self.config, &o.config) && self.f == o.f && self.g == o.g
    }
}

impl Eq for CurveElem {}

impl fmt::Debug for CurveElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CurveElem({} + ({})*u)", self.f, self.g)
    }
}

impl fmt::Display for CurveElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})*u", self.f, self.g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvering::config::{chebyshev_config, djkm_config};
    use crate::exactnum::rational::int;
    use proptest::prelude::*;

    #[test]
    fn basic_relations() {
        let c = djkm_config(&int(3)).unwrap();
        let u = CurveElem::u(&c);
        assert_eq!(u.mul(&u).unwrap(), CurveElem::from_f(c.p().clone(), &c));
        let lam2 = CurveElem::new(c.a1().clone(), c.b0().clone(), &c);
        assert_eq!(lam2.norm(), LaurentPoly::t_pow(c.ctx(), 2));
        assert_eq!(lam2.conj().conj(), lam2);
        assert_eq!(lam2.mul(&lam2.inverse().unwrap()).unwrap(), CurveElem::one(&c));
        let other = chebyshev_config();
        assert_eq!(lam2.mul(&CurveElem::one(&other)).unwrap_err(), Error::ConfigMismatch);
    }

    #[test]
    fn binary_power_matches_iterated_product() {
        let c = djkm_config(&int(17)).unwrap();
        let lam2 = CurveElem::new(c.a1().clone(), c.b0().clone(), &c);
        let mut acc = CurveElem::one(&c);
        for n in 0..=64u32 {
            assert_eq!(lam2.pow(n), acc, "n={n}");
            acc = acc.mul(&lam2).unwrap();
        }
    }

    fn arb_elem(config: Config) -> impl Strategy<Value = CurveElem> {
        let ctx = config.ctx().clone();
        (prop::collection::vec(-4i64..5, 0..4), prop::collection::vec(-4i64..5, 0..4), -2i64..3).prop_map(
            move |(f, g, s)| {
                CurveElem::new(
                    LaurentPoly::from_ints(&ctx, &f).shift(s),
                    LaurentPoly::from_ints(&ctx, &g).shift(-s),
                    &config,
                )
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn norm_is_multiplicative(x in arb_elem(djkm_config(&int(3)).unwrap()),
                                  y in arb_elem(djkm_config(&int(3)).unwrap())) {
            prop_assert_eq!(x.mul(&y).unwrap().norm(), &x.norm() * &y.norm());
            prop_assert_eq!(x.mul(&x.conj()).unwrap(), CurveElem::from_f(x.norm(), x.config()));
        }
    }
}
