use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::rational::int;
use crate::exactnum::tower::same_ctx;
use crate::exactnum::{tower_new, Rational, Tower, TowerScalar};
use crate::laurent::{squarefree_decomposition, LaurentPoly};

/// A Pell configuration `(p, a1, b0)` with its norm `a1^2 - b0^2 p`.
#[derive(Debug, PartialEq, Eq)]
pub struct PellConfig {
    p: LaurentPoly,
    a1: LaurentPoly,
    b0: LaurentPoly,
    pell_norm: LaurentPoly,
    r: Option<u32>,
    beta: Option<Rational>,
    separable: bool,
}

pub type Config = Arc<PellConfig>;

/// The quartic configuration `p = (t^4 - 2 beta t^2 + 1)/(beta^2 - 1)` with
/// `a1 = (t^2 - 1)/sqrt(2(beta - 1))` and `b0 = sqrt((beta + 1)/2)`.
pub fn djkm_config(beta: &Rational) -> Result<Config> {
    if (beta - int(1)).is_zero() || (beta + int(1)).is_zero() {
        return Err(Error::DegenerateBeta);
    }
    let sigma1 = (beta - int(1)) * int(2);
    let sigma2 = (beta + int(1)) / int(2);
    let ctx = tower_new(sigma1.clone(), sigma2)?;
    let denom = beta * beta - int(1);
    let p = LaurentPoly::from_rationals(
        &ctx,
        &[(4, int(1) / &denom), (2, -(beta * int(2)) / &denom), (0, int(1) / &denom)],
    );
    let s1_over = TowerScalar::s1(&ctx).scale(&(int(1) / sigma1));
    let a1 = LaurentPoly::from_ints(&ctx, &[-1, 0, 1]).scale(&s1_over);
    let b0 = LaurentPoly::constant(TowerScalar::s2(&ctx));
    build(p, a1, b0, Some(beta.clone()))
}

/// An arbitrary configuration; `r` is set when the norm is exactly `t^(2r)`.
pub fn custom_config(p: LaurentPoly, a1: LaurentPoly, b0: LaurentPoly) -> Result<Config> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("p must be nonzero".into()));
    }
    if !same_ctx(p.ctx(), a1.ctx()) || !same_ctx(p.ctx(), b0.ctx()) {
        return Err(Error::ContextMismatch);
    }
    build(p, a1, b0, None)
}

fn build(p: LaurentPoly, a1: LaurentPoly, b0: LaurentPoly, beta: Option<Rational>) -> Result<Config> {
    let pell_norm = &(&a1 * &a1) - &(&(&b0 * &b0) * &p);
    let r = match pell_norm.as_monomial() {
        Some((c, k)) if c.is_one() && k >= 0 && k % 2 == 0 => Some((k / 2) as u32),
        _ => None,
    };
    let (v, _) = p.strip_t();
    let separable = v.abs() < 2 && squarefree_decomposition(&p)?.iter().all(|(_, m)| *m == 1);
    Ok(Arc::new(PellConfig { p, a1, b0, pell_norm, r, beta, separable }))
}

impl PellConfig {
    pub fn p(&self) -> &LaurentPoly {
        &self.p
    }

    pub fn a1(&self) -> &LaurentPoly {
        &self.a1
    }

    pub fn b0(&self) -> &LaurentPoly {
        &self.b0
    }

    pub fn pell_norm(&self) -> &LaurentPoly {
        &self.pell_norm
    }

    pub fn r(&self) -> Option<u32> {
        self.r
    }

    pub fn beta(&self) -> Option<&Rational> {
        self.beta.as_ref()
    }

    pub fn ctx(&self) -> &Tower {
        self.p.ctx()
    }

    /// `p` has no repeated root (including at `t = 0`).
    pub fn is_separable(&self) -> bool {
        self.separable
    }

    /// The norm vanishes, so the recurrences collapse.
    pub fn is_degenerate(&self) -> bool {
        self.pell_norm.is_zero()
    }

    /// The norm is `c t^k` but not of the form `t^(2r)`: odd `k` or `c != 1`.
    pub fn is_general_monomial_norm(&self) -> bool {
        self.r.is_none() && self.pell_norm.as_monomial().is_some()
    }

    /// `b0` as a scalar, when it is constant.
    pub fn b0_constant(&self) -> Option<TowerScalar> {
        self.b0.as_constant()
    }

    /// `r`, or an error for configurations outside the `t^(2r)` hypothesis.
    pub fn require_r(&self) -> Result<u32> {
        self.r.ok_or(Error::NoPellExponent)
    }

    pub fn to_json(&self) -> Value {
        let ctx = self.ctx();
        let mut v = json!({
            "p": self.p.to_string(),
            "a1": self.a1.to_string(),
            "b0": self.b0.to_string(),
            "pell_norm": self.pell_norm.to_string(),
            "sigma1": ctx.sigma1().to_string(),
            "sigma2": ctx.sigma2().to_string(),
            "r": self.r,
            "separable": self.separable,
        });
        if let Some(beta) = &self.beta {
            v["beta"] = Value::String(beta.to_string());
        }
        v
    }
}

/// The Chebyshev configuration `p = t^2 - 1`, `a1 = t`, `b0 = 1` over `Q`.
pub fn chebyshev_config() -> Config {
    let ctx = crate::exactnum::TowerContext::rational();
    custom_config(LaurentPoly::from_ints(&ctx, &[-1, 0, 1]), LaurentPoly::t(&ctx), LaurentPoly::one(&ctx))
        .expect("chebyshev configuration is valid")
}

/// `q = (t^2 - beta)/sqrt(beta^2 - 1)`, which satisfies `q^2 - 1 = p`.
pub fn djkm_q(config: &PellConfig) -> Result<LaurentPoly> {
    let beta = config.beta.as_ref().ok_or(Error::NotDjkm)?;
    let ctx = config.ctx();
    let inv_root = TowerScalar::s1s2(ctx).scale(&(int(1) / (ctx.sigma1() * ctx.sigma2())));
    Ok(LaurentPoly::from_rationals(ctx, &[(2, Rational::one()), (0, -beta.clone())]).scale(&inv_root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;
    use crate::laurent::parse_laurent;

    #[test]
    fn djkm_beta_three() {
        let c = djkm_config(&int(3)).unwrap();
        let ctx = c.ctx();
        assert_eq!(c.p(), &parse_laurent("1/8*t^4 - 3/4*t^2 + 1/8", ctx).unwrap());
        assert_eq!(c.a1(), &parse_laurent("1/2*t^2 - 1/2", ctx).unwrap());
        assert_eq!(c.b0(), &LaurentPoly::constant(TowerScalar::s2(ctx)));
        assert_eq!(c.pell_norm(), &LaurentPoly::t_pow(ctx, 2));
        assert_eq!(c.r(), Some(1));
        assert!(c.is_separable());
        assert_eq!(djkm_config(&int(1)).unwrap_err(), Error::DegenerateBeta);
        assert_eq!(djkm_config(&int(-1)).unwrap_err(), Error::DegenerateBeta);
    }

    #[test]
    fn norm_is_t_squared_for_every_beta() {
        for beta in [int(3), rat(5, 3), int(17), rat(-1, 2), int(-4), rat(7, 5)] {
            let c = djkm_config(&beta).unwrap();
            assert_eq!(c.r(), Some(1), "beta={beta}");
            let q = djkm_q(&c).unwrap();
            assert_eq!(&(&q * &q) - &LaurentPoly::one(c.ctx()), c.p().clone(), "beta={beta}");
        }
    }

    #[test]
    fn custom_configs() {
        let cheb = chebyshev_config();
        assert_eq!(cheb.r(), Some(0));
        assert!(cheb.pell_norm().is_one());

        let ctx = crate::exactnum::TowerContext::rational();
        let sq = custom_config(LaurentPoly::t_pow(&ctx, 4), LaurentPoly::t_pow(&ctx, 2), LaurentPoly::one(&ctx))
            .unwrap();
        assert!(sq.is_degenerate());
        assert_eq!(sq.r(), None);
        assert!(!sq.is_separable());

        let odd = custom_config(LaurentPoly::from_ints(&ctx, &[0, -1, 0, 1]), LaurentPoly::t(&ctx), LaurentPoly::one(&ctx))
            .unwrap();
        // t^2 - (t^3 - t) is not a monomial
        assert!(!odd.is_general_monomial_norm());
        assert!(custom_config(LaurentPoly::zero(&ctx), LaurentPoly::t(&ctx), LaurentPoly::one(&ctx)).is_err());
    }

    #[test]
    fn json_form() {
        let v = djkm_config(&rat(5, 3)).unwrap().to_json();
        assert_eq!(v["beta"], "5/3");
        assert_eq!(v["r"], 1);
        assert_eq!(v["sigma1"], "4/3");
        assert_eq!(v["pell_norm"], "t^2");
    }
}
