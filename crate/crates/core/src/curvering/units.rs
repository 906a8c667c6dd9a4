use super::config::Config;
use super::elem::CurveElem;
use crate::error::{Error, Result};
use crate::exactnum::rational::int;
use crate::exactnum::TowerScalar;
use crate::laurent::LaurentPoly;

/// The four units `lambda0..lambda3` of the quartic configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DjkmUnits {
    pub lambda0: CurveElem,
    pub lambda1: CurveElem,
    pub lambda2: CurveElem,
    pub lambda3: CurveElem,
}

pub fn djkm_units(config: &Config) -> Result<DjkmUnits> {
    let beta = config.beta().ok_or(Error::NotDjkm)?.clone();
    let ctx = config.ctx();
    let (sigma1, sigma2) = (ctx.sigma1().clone(), ctx.sigma2().clone());
    // 1/sqrt(beta^2 - 1) = s1 s2 / (sigma1 sigma2)
    let inv_root = TowerScalar::s1s2(ctx).scale(&(int(1) / (&sigma1 * &sigma2)));
    let one = LaurentPoly::one(ctx);
    let t2 = LaurentPoly::t_pow(ctx, 2);
    let quad = |c2: crate::exactnum::Rational, c0: crate::exactnum::Rational| {
        LaurentPoly::from_rationals(ctx, &[(2, c2), (0, c0)])
    };

    let lambda0 = CurveElem::new(quad(int(1), -beta.clone()).scale(&inv_root), one.clone(), config);
    let lambda1 = CurveElem::new(
        (&t2 + &one).scale(&TowerScalar::s2(ctx).scale(&(int(1) / (sigma2 * int(2))))),
        LaurentPoly::constant(TowerScalar::s1(ctx).scale(&(int(1) / int(2)))),
        config,
    );
    let lambda2 = CurveElem::new(config.a1().clone(), config.b0().clone(), config);
    let lambda3 = CurveElem::new(quad(beta, int(-1)).scale(&inv_root), one, config);
    Ok(DjkmUnits { lambda0, lambda1, lambda2, lambda3 })
}

/// One named unit relation with its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// The norm values and product relations among the four units.
pub fn unit_relations(units: &DjkmUnits) -> Result<Vec<RelationCheck>> {
    let DjkmUnits { lambda0: l0, lambda1: l1, lambda2: l2, lambda3: l3 } = units;
    let ctx = l0.config().ctx();
    let t2 = LaurentPoly::t_pow(ctx, 2);
    let one = LaurentPoly::one(ctx);
    Ok(vec![
        RelationCheck { name: "lambda0*conj(lambda0) = 1", holds: l0.norm() == one },
        RelationCheck { name: "lambda1*conj(lambda1) = t^2", holds: l1.norm() == t2 },
        RelationCheck { name: "lambda2*conj(lambda2) = t^2", holds: l2.norm() == t2 },
        RelationCheck { name: "lambda1*lambda2 = t^2*lambda0", holds: l1.mul(l2)? == l0.scale(&t2) },
        RelationCheck { name: "conj(lambda1)*lambda2 = lambda3", holds: l1.conj().mul(l2)? == *l3 },
    ])
}

/// Exponents of `x = c * t^i * lambda1^j * lambda2^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitExponents {
    pub c: TowerScalar,
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

fn signed_powers(base: &CurveElem, bound: i64) -> Result<Vec<CurveElem>> {
    // index e + bound holds base^e for e in [-bound, bound]
    let inv = base.inverse()?;
    let one = CurveElem::one(base.config());
    let mut pos = vec![one.clone()];
    let mut neg = vec![one];
    for e in 1..=bound as usize {
        pos.push(pos[e - 1].mul(base)?);
        neg.push(neg[e - 1].mul(&inv)?);
    }
    neg.reverse();
    neg.pop();
    neg.extend(pos);
    Ok(neg)
}

/// Searches `|j|, |k| <= bound` for a decomposition of `x`, checked by exact
/// multiplication.
pub fn unit_exponent_form(x: &CurveElem, bound: i64) -> Result<UnitExponents> {
    let units = djkm_units(x.config())?;
    let p1 = signed_powers(&units.lambda1, bound)?;
    let p2 = signed_powers(&units.lambda2, bound)?;
    let mut order: Vec<(i64, i64)> =
        (-bound..=bound).flat_map(|j| (-bound..=bound).map(move |k| (j, k))).collect();
    order.sort_by_key(|&(j, k)| (j.abs() + k.abs(), j, k));
    for (j, k) in order {
        // x * lambda1^-j * lambda2^-k should be a scalar multiple of t^i
        let y = x.mul(&p1[(bound - j) as usize])?.mul(&p2[(bound - k) as usize])?;
        if !y.g().is_zero() {
            continue;
        }
        if let Some((c, i)) = y.f().as_monomial() {
            return Ok(UnitExponents { c: c.clone(), i, j, k });
        }
    }
    Err(Error::NotAUnit(bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvering::config::{chebyshev_config, djkm_config};
    use crate::exactnum::rational::rat;

    #[test]
    fn relations_hold_for_test_betas() {
        for beta in [int(3), rat(5, 3), int(17), rat(7, 2)] {
            let c = djkm_config(&beta).unwrap();
            let units = djkm_units(&c).unwrap();
            for rel in unit_relations(&units).unwrap() {
                assert!(rel.holds, "beta={beta}: {}", rel.name);
            }
        }
    }

    #[test]
    fn conjugate_placement_in_lambda3_relation() {
        let c = djkm_config(&rat(5, 3)).unwrap();
        let u = djkm_units(&c).unwrap();
        assert_eq!(u.lambda1.mul(&u.lambda2.conj()).unwrap(), u.lambda3.conj());
        assert_ne!(u.lambda1.mul(&u.lambda2.conj()).unwrap(), u.lambda3);
    }

    #[test]
    fn lambda1_at_beta_three() {
        let c = djkm_config(&int(3)).unwrap();
        let ctx = c.ctx();
        let units = djkm_units(&c).unwrap();
        let f = LaurentPoly::from_ints(ctx, &[1, 0, 1]).scale(&TowerScalar::s2(ctx).scale(&rat(1, 4)));
        assert_eq!(units.lambda1.f(), &f);
        assert!(units.lambda1.g().is_one());
    }

    #[test]
    fn exponent_forms() {
        let c = djkm_config(&int(3)).unwrap();
        let ctx = c.ctx();
        let u = djkm_units(&c).unwrap();
        let t2 = LaurentPoly::t_pow(ctx, 2);
        let one = TowerScalar::one(ctx);

        let got = unit_exponent_form(&u.lambda0.scale(&t2), 3).unwrap();
        assert_eq!(got, UnitExponents { c: one.clone(), i: 0, j: 1, k: 1 });
        let got = unit_exponent_form(&u.lambda0, 3).unwrap();
        assert_eq!(got, UnitExponents { c: one.clone(), i: -2, j: 1, k: 1 });
        let got = unit_exponent_form(&u.lambda2.inverse().unwrap(), 3).unwrap();
        assert_eq!(got, UnitExponents { c: one.clone(), i: 0, j: 0, k: -1 });
        let got = unit_exponent_form(&u.lambda2.conj(), 3).unwrap();
        assert_eq!(got, UnitExponents { c: one.clone(), i: 2, j: 0, k: -1 });
        let got = unit_exponent_form(&CurveElem::one(&c), 3).unwrap();
        assert_eq!(got, UnitExponents { c: one, i: 0, j: 0, k: 0 });

        let three = TowerScalar::from_int(ctx, 3);
        let x = u.lambda1.pow(2).mul(&u.lambda2.inverse().unwrap().pow(3)).unwrap().scale(&LaurentPoly::monomial(three.clone(), -5));
        assert_eq!(unit_exponent_form(&x, 3).unwrap(), UnitExponents { c: three, i: -5, j: 2, k: -3 });
        assert_eq!(unit_exponent_form(&u.lambda1.pow(4), 3).unwrap_err(), Error::NotAUnit(3));

        let not_unit = CurveElem::u(&c);
        assert!(unit_exponent_form(&not_unit, 2).is_err());
        assert_eq!(djkm_units(&chebyshev_config()).unwrap_err(), Error::NotDjkm);
    }
}
