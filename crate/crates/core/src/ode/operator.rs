use std::fmt;

use crate::curvering::PellConfig;
use crate::error::{Error, Result};
use crate::exactnum::rational::int;
use crate::exactnum::{tower_new, Rational, Tower};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OdeKind {
    /// Annihilates `a_n` for any configuration with norm `t^(2r)`.
    GeneralA,
    /// Annihilates `b_n` when `b0` is constant.
    GeneralB,
    /// Sextic-coefficient operator for `b_n` in the quartic family.
    DjkmB,
    /// Sextic-coefficient operator for `a_n` in the quartic family.
    DjkmA,
}

impl OdeKind {
    pub fn name(self) -> &'static str {
        match self {
            OdeKind::GeneralA => "general_a",
            OdeKind::GeneralB => "general_b",
            OdeKind::DjkmB => "djkm_b",
            OdeKind::DjkmA => "djkm_a",
        }
    }
}

impl fmt::Display for OdeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `c2 y'' + c1 y' + c0 y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeOperator {
    pub c2: LaurentPoly,
    pub c1: LaurentPoly,
    pub c0: LaurentPoly,
    pub n: usize,
    pub kind: OdeKind,
}

impl OdeOperator {
    /// Divides out the largest common power of `t`, so the lowest exponent
    /// among the nonzero coefficients is 0.
    pub fn new(c2: LaurentPoly, c1: LaurentPoly, c0: LaurentPoly, n: usize, kind: OdeKind) -> Result<Self> {
        if c2.is_zero() {
            return Err(Error::ZeroLeading);
        }
        let v = [&c2, &c1, &c0].iter().filter_map(|c| c.low_degree()).min().unwrap_or(0);
        Ok(Self { c2: c2.shift(-v), c1: c1.shift(-v), c0: c0.shift(-v), n, kind })
    }

    pub fn apply(&self, y: &LaurentPoly) -> LaurentPoly {
        let d1 = y.derivative();
        let d2 = d1.derivative();
        &(&(&self.c2 * &d2) + &(&self.c1 * &d1)) + &(&self.c0 * y)
    }

    pub fn annihilates(&self, y: &LaurentPoly) -> bool {
        self.apply(y).is_zero()
    }

    /// Multiplies all three coefficients by `g`.
    pub fn scaled(&self, g: &LaurentPoly) -> Result<Self> {
        Self::new(&self.c2 * g, &self.c1 * g, &self.c0 * g, self.n, self.kind)
    }
}

/// Ingredients of the general operators: `E = a1' t - r a1`,
/// `W = t^(2r) - a1^2` and `K = t (t a1'' - 2r a1') + r (r + 1) a1`.
struct GeneralParts {
    r: i64,
    t: LaurentPoly,
    a1: LaurentPoly,
    e: LaurentPoly,
    w: LaurentPoly,
    k: LaurentPoly,
}

impl GeneralParts {
    fn new(config: &PellConfig) -> Result<Self> {
        let r = config.require_r()? as i64;
        let ctx = config.ctx();
        let a1 = config.a1().clone();
        let t = LaurentPoly::t(ctx);
        let d1 = a1.derivative();
        let d2 = d1.derivative();
        let e = &(&d1 * &t) - &a1.scale_rational(&int(r));
        let w = &LaurentPoly::t_pow(ctx, 2 * r) - &(&a1 * &a1);
        let inner = &(&t * &d2) - &d1.scale_rational(&int(2 * r));
        let k = &(&t * &inner) + &a1.scale_rational(&int(r * (r + 1)));
        Ok(Self { r, t, a1, e, w, k })
    }
}

fn q(x: i64) -> Rational {
    int(x)
}

/// The general operator of the given kind for index `n`.
pub fn build_general(config: &PellConfig, n: usize, kind: OdeKind) -> Result<OdeOperator> {
    // a_n solves the pullback of the Chebyshev T equation along z = a1/t^r,
    // b_n the pullback of the U equation.
    let (lin, quad) = match kind {
        OdeKind::GeneralA => (1, (n * n) as i64),
        OdeKind::GeneralB => {
            config.b0_constant().ok_or(Error::NonConstantB0)?;
            (3, (n * (n + 2)) as i64)
        }
        _ => return Err(Error::InvalidArgument(format!("{kind} is not a general operator kind"))),
    };
    let GeneralParts { r, t, a1, e, w, k } = GeneralParts::new(config)?;
    let rn = r * n as i64;
    let e2 = &e * &e;
    let we = &w * &e;
    let c2 = &(&t * &t) * &we;
    let c1 = -(&(&(&(&t * &we).scale_rational(&q(2 * rn)) + &(&(&a1 * &t) * &e2).scale_rational(&q(lin)))
        + &(&(&t * &w) * &k)));
    let c0 = &(&(&(&w * &k).scale_rational(&q(rn)) + &(&a1 * &e2).scale_rational(&q(lin * rn)))
        + &(&e2 * &e).scale_rational(&q(quad)))
        + &we.scale_rational(&q((rn + 1) * rn));
    OdeOperator::new(c2, c1, c0, n, kind)
}

/// The b-side general operator with the extra factors `E` on the leading
/// coefficient and on the `W E` terms. It does not annihilate `b_n`; kept as
/// a negative control.
pub fn build_general_b_uncorrected(config: &PellConfig, n: usize) -> Result<OdeOperator> {
    config.b0_constant().ok_or(Error::NonConstantB0)?;
    let GeneralParts { r, t, a1, e, w, k } = GeneralParts::new(config)?;
    let rn = r * n as i64;
    let e2 = &e * &e;
    let we2 = &w * &e2;
    let c2 = &(&t * &t) * &we2;
    let c1 = -(&(&(&(&t * &we2).scale_rational(&q(2 * rn)) + &(&(&a1 * &t) * &e2).scale_rational(&q(3)))
        + &(&(&t * &w) * &k)));
    let c0 = &(&(&(&e2 * &e).scale_rational(&q((n * (n + 2)) as i64)) + &(&a1 * &e2).scale_rational(&q(3 * rn)))
        + &(&w * &k).scale_rational(&q(rn)))
        + &we2.scale_rational(&q(rn * (rn + 1)));
    OdeOperator::new(c2, c1, c0, n, OdeKind::GeneralB)
}

fn djkm_ctx(beta: &Rational) -> Result<Tower> {
    if (beta - int(1)) == int(0) || (beta + int(1)) == int(0) {
        return Err(Error::DegenerateBeta);
    }
    tower_new((beta - int(1)) * int(2), (beta + int(1)) / int(2))
}

/// `t (t^2 + 1)(t^4 - 2 beta t^2 + 1)`.
fn djkm_c2(ctx: &Tower, beta: &Rational) -> LaurentPoly {
    LaurentPoly::from_rationals(ctx, &[(7, int(1)), (5, int(1) - beta * int(2)), (3, int(1) - beta * int(2)), (1, int(1))])
}

/// The explicit sextic-coefficient operators of the quartic family.
pub fn build_djkm(beta: &Rational, n: usize, kind: OdeKind) -> Result<OdeOperator> {
    let ctx = djkm_ctx(beta)?;
    let b = beta.clone();
    let nq = int(n as i64);
    let c2 = djkm_c2(&ctx, beta);
    let (c1, c0) = match kind {
        OdeKind::DjkmB => {
            let c1 = [
                (6, &nq * int(2) - int(3)),
                (4, -(&b * &nq * int(4)) + &nq * int(2) - int(5)),
                (2, &b * int(4) - &b * &nq * int(4) + &nq * int(2) + int(3)),
                (0, &nq * int(2) + int(1)),
            ];
            let c0 = [
                (5, &nq * int(2)),
                (3, &nq * (&b + (&b + int(1)) * &nq + int(5))),
                (1, &nq * (-b.clone() + (&b + int(1)) * &nq + int(1))),
            ];
            (
                -LaurentPoly::from_rationals(&ctx, &c1),
                -LaurentPoly::from_rationals(&ctx, &c0).scale_rational(&int(2)),
            )
        }
        OdeKind::DjkmA => {
            let c1 = [
                (6, int(1) - &nq * int(2)),
                (4, &b * &nq * int(4) - &nq * int(2) + int(3)),
                (2, &b * &nq * int(4) - &b * int(4) - &nq * int(2) - int(1)),
                (0, int(1) - &nq * int(2)),
            ];
            // -2 (beta + 1) n t (n t^2 + n + t^2 - 1)
            let k = -(&b + int(1)) * &nq * int(2);
            let c0 = [(3, &k * (&nq + int(1))), (1, &k * (&nq - int(1)))];
            (LaurentPoly::from_rationals(&ctx, &c1), LaurentPoly::from_rationals(&ctx, &c0))
        }
        _ => return Err(Error::InvalidArgument(format!("{kind} is not a quartic-family kind"))),
    };
    OdeOperator::new(c2, c1, c0, n, kind)
}

/// The a-side sextic operator with the `y'` and `y` coefficients in their
/// uncorrected form. It does not annihilate `a_n` for `n >= 1`; kept as a
/// negative control.
pub fn build_djkm_a_uncorrected(beta: &Rational, n: usize) -> Result<OdeOperator> {
    let ctx = djkm_ctx(beta)?;
    let b = beta.clone();
    let nq = int(n as i64);
    let c1 = [
        (6, int(1) - &nq * int(2)),
        (4, &nq * int(2) + int(3)),
        (2, -(&b * int(4)) + (&b * int(4) - int(2)) * &nq - int(1)),
        (0, int(1) - &nq * int(2)),
    ];
    let k = -(&b + int(1)) * &nq;
    let c0 = [(3, &k * (&nq + int(1))), (1, &k * (&nq - int(1)))];
    OdeOperator::new(
        djkm_c2(&ctx, beta),
        -LaurentPoly::from_rationals(&ctx, &c1),
        LaurentPoly::from_rationals(&ctx, &c0),
        n,
        OdeKind::DjkmA,
    )
}
