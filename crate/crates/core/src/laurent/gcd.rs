use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Monic gcd over the tower field, with powers of `t` cleared from both inputs.
///
/// `gcd(f, 0)` is `f` made monic. Both inputs zero is an error.
pub fn poly_gcd(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
    }
    let mut a = f.strip_t().1;
    let mut b = g.strip_t().1;
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r;
    }
    a.monic()
}

/// Squarefree factorization `f = c * t^v * prod g_i^i` (Yun's algorithm).
///
/// Returns the pairs `(g_i, i)` with nonconstant monic `g_i`; the `t^v` part is
/// not included, see [`LaurentPoly::strip_t`].
pub fn squarefree_decomposition(f: &LaurentPoly) -> Result<Vec<(LaurentPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("squarefree decomposition of 0".into()));
    }
    let f = f.strip_t().1.monic()?;
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df)?;
    let exact = |p: &LaurentPoly, d: &LaurentPoly| -> Result<LaurentPoly> {
        p.exact_div(d)?.ok_or_else(|| Error::InvalidArgument("inexact division in Yun".into()))
    };
    let mut b = exact(&f, &a0)?;
    let c = exact(&df, &a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() != Some(0) {
        let a = if d.is_zero() { b.monic()? } else { poly_gcd(&b, &d)? };
        let nb = exact(&b, &a)?;
        let nc = exact(&d, &a)?;
        d = &nc - &nb.derivative();
        b = nb;
        if a.degree() != Some(0) {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;
    use crate::exactnum::{tower_new, TowerContext, TowerScalar};
    use proptest::prelude::*;

    #[test]
    fn gcd_examples() {
        let c = TowerContext::rational();
        let f = LaurentPoly::from_ints(&c, &[-1, 0, 1]);
        let g = LaurentPoly::from_ints(&c, &[-1, 1]);
        assert_eq!(poly_gcd(&f, &g).unwrap(), g);
        assert_eq!(poly_gcd(&f.scale_rational(&int(3)), &LaurentPoly::zero(&c)).unwrap(), f);
        assert_eq!(poly_gcd(&f.shift(4), &g.shift(-2)).unwrap(), g);
        assert!(poly_gcd(&LaurentPoly::zero(&c), &LaurentPoly::zero(&c)).is_err());
        let h = LaurentPoly::from_ints(&c, &[1, 0, 1]);
        assert!(poly_gcd(&f, &h).unwrap().is_one());
    }

    #[test]
    fn gcd_over_tower() {
        // t^2 - 2 splits over Q(sqrt 2)
        let k = tower_new(int(3), int(2)).unwrap();
        let f = LaurentPoly::from_ints(&k, &[-2, 0, 1]);
        let lin = LaurentPoly::t(&k) - LaurentPoly::constant(TowerScalar::s2(&k));
        let g = &lin * &LaurentPoly::from_ints(&k, &[5, 1]);
        assert_eq!(poly_gcd(&f, &g).unwrap(), lin);
    }

    #[test]
    fn yun_examples() {
        let c = TowerContext::rational();
        let a = LaurentPoly::from_ints(&c, &[-1, 1]);
        let b = LaurentPoly::from_ints(&c, &[1, 0, 1]);
        let f = (a.pow(3) * b.pow(2)).scale_rational(&int(7)).shift(3);
        let got = squarefree_decomposition(&f).unwrap();
        assert_eq!(got, vec![(b.clone(), 2), (a.clone(), 3)]);
        let sq = squarefree_decomposition(&(&a * &b)).unwrap();
        assert_eq!(sq, vec![(&a * &b, 1)]);
        assert!(squarefree_decomposition(&LaurentPoly::t_pow(&c, 5)).unwrap().is_empty());
    }

    fn arb_small(ctx: crate::exactnum::Tower) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(-5i64..6, 1..5).prop_map(move |cs| LaurentPoly::from_ints(&ctx, &cs))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(f in arb_small(TowerContext::rational()), g in arb_small(TowerContext::rational()),
                            h in arb_small(TowerContext::rational())) {
            prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
            let (ff, gg) = (&f * &h, &g * &h);
            prop_assume!(!ff.is_zero() || !gg.is_zero());
            let d = poly_gcd(&ff, &gg).unwrap();
            if !ff.is_zero() { prop_assert!(ff.exact_div(&d).unwrap().is_some()); }
            if !gg.is_zero() { prop_assert!(gg.exact_div(&d).unwrap().is_some()); }
            prop_assert!(d.exact_div(&poly_gcd(&h, &h).unwrap()).unwrap().is_some());
        }

        #[test]
        fn yun_reassembles(f in arb_small(TowerContext::rational()), g in arb_small(TowerContext::rational())) {
            let p = &f * &g.pow(2);
            prop_assume!(!p.is_zero());
            let parts = squarefree_decomposition(&p).unwrap();
            let rebuilt = parts.iter().fold(LaurentPoly::one(p.ctx()), |acc, (q, m)| acc * q.pow(*m as u32));
            prop_assert_eq!(rebuilt, p.strip_t().1.monic().unwrap());
        }
    }
}
