//! Randomized invariants across the exact layers.

use num_traits::Signed;
use pellpoly::curvering::{chebyshev_config, djkm_config};
use pellpoly::exactnum::rational::{int, rat};
use pellpoly::exactnum::{tower_new, Rational, Tower, TowerScalar};
use pellpoly::laurent::{poly_gcd, AlgFuncElem, LaurentPoly, RationalFunc, SqrtExt, TruncSeries};
use pellpoly::ode::{build_djkm, build_general, OdeKind};
use pellpoly::pellfam::{self, ChebFamily, PellFamily};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-12i64..13, 1i64..7).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    small_rat().prop_filter("nonzero", |q| *q != int(0))
}

/// Contexts of every shape: generic, one or both generators collapsed, linked.
fn tower() -> impl Strategy<Value = Tower> {
    prop_oneof![
        (nonzero_rat(), nonzero_rat()).prop_map(|(a, b)| tower_new(a, b).unwrap()),
        Just(tower_new(int(4), int(2)).unwrap()),
        Just(tower_new(rat(4, 3), rat(4, 3)).unwrap()),
        Just(tower_new(int(9), rat(1, 4)).unwrap()),
        Just(tower_new(int(3), int(-5)).unwrap()),
    ]
}

fn scalar(ctx: Tower) -> impl Strategy<Value = TowerScalar> {
    [small_rat(), small_rat(), small_rat(), small_rat()]
        .prop_map(move |c| TowerScalar::from_coords(&ctx, c))
}

fn lowest_terms(s: &TowerScalar) -> bool {
    s.coords().iter().all(|q| {
        let g = num_integer::Integer::gcd(q.numer(), q.denom());
        q.denom().is_positive() && (g == 1.into() || q.numer() == &0.into())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn tower_field_axioms((a, b, c) in tower().prop_flat_map(|t| (scalar(t.clone()), scalar(t.clone()), scalar(t)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        for x in [&a, &b, &(&a * &b)] {
            prop_assert!(lowest_terms(x));
        }
        if !a.is_zero() {
            let inv = a.try_inv().unwrap();
            prop_assert!((&a * &inv).is_one());
            prop_assert!(lowest_terms(&inv));
        }
    }
}

/// `x + y sqrt(sigma)` with the textbook product.
#[derive(Clone, Debug, PartialEq)]
struct Quad(Rational, Rational);

impl Quad {
    fn mul(&self, o: &Quad, sigma: &Rational) -> Quad {
        Quad(&self.0 * &o.0 + &self.1 * &o.1 * sigma, &self.0 * &o.1 + &self.1 * &o.0)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// With `sigma1 = q^2` the tower is `Q(sqrt(sigma2))`: `s1 -> q` is a ring map.
    #[test]
    fn collapsed_tower_is_quadratic(q in nonzero_rat(), sigma in prop::sample::select(vec![int(2), int(3), rat(5, 7), int(-1)]),
                                    a in [small_rat(), small_rat(), small_rat(), small_rat()],
                                    b in [small_rat(), small_rat(), small_rat(), small_rat()]) {
        let ctx = tower_new(&q * &q, sigma.clone()).unwrap();
        let phi = |s: &TowerScalar| {
            let c = s.coords();
            Quad(&c[0] + &c[1] * &q, &c[2] + &c[3] * &q)
        };
        let (x, y) = (TowerScalar::from_coords(&ctx, a), TowerScalar::from_coords(&ctx, b));
        prop_assert_eq!(phi(&(&x * &y)), phi(&x).mul(&phi(&y), &sigma));
        let sum = phi(&(&x + &y));
        let (px, py) = (phi(&x), phi(&y));
        prop_assert_eq!(sum, Quad(&px.0 + &py.0, &px.1 + &py.1));
    }
}

fn beta3() -> Tower {
    djkm_config(&int(3)).unwrap().ctx().clone()
}

fn laurent(ctx: Tower) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..6, -6i64..7, -3i64..4), 0..5).prop_map(move |terms| {
        let s2 = TowerScalar::s2(&ctx);
        terms.into_iter().fold(LaurentPoly::zero(&ctx), |acc, (k, c, d)| {
            let coeff = &TowerScalar::from_int(&ctx, c) + &s2.scale(&int(d));
            &acc + &LaurentPoly::monomial(coeff, k)
        })
    })
}

fn polynomial(ctx: Tower) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-5i64..6, 1..5).prop_map(move |c| LaurentPoly::from_ints(&ctx, &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn laurent_ring_and_derivation(f in laurent(beta3()), g in laurent(beta3()), h in laurent(beta3())) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!((&f * &g).derivative(), &(&f * &g.derivative()) + &(&f.derivative() * &g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gcd_divides_both(f in polynomial(beta3()), g in polynomial(beta3()), c in polynomial(beta3())) {
        let (f, g) = (&f * &c, &g * &c);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let d = poly_gcd(&f, &g).unwrap();
        prop_assert!(f.exact_div(&d).unwrap().is_some());
        prop_assert!(g.exact_div(&d).unwrap().is_some());
    }

    /// Constant-coefficient series multiply like polynomials in the series variable.
    #[test]
    fn series_embedding(a in prop::collection::vec(-6i64..7, 1..6), b in prop::collection::vec(-6i64..7, 1..6), order in 0usize..8) {
        let ctx = beta3();
        let consts = |v: &[i64]| v.iter().map(|&c| LaurentPoly::from_int(&ctx, c)).collect::<Vec<_>>();
        let prod = TruncSeries::from_coeffs(&ctx, consts(&a), order).mul(&TruncSeries::from_coeffs(&ctx, consts(&b), order)).unwrap();
        let poly = &LaurentPoly::from_ints(&ctx, &a) * &LaurentPoly::from_ints(&ctx, &b);
        for k in 0..=order {
            prop_assert_eq!(prod.coeff(k).as_constant().unwrap_or(TowerScalar::zero(&ctx)), poly.coeff(k as i64));
        }
    }

    #[test]
    fn algebraic_norm_form(q in laurent(beta3()), s in laurent(beta3())) {
        let c = djkm_config(&int(3)).unwrap();
        let ctx = c.ctx();
        let w2 = &LaurentPoly::t_pow(ctx, 2) - &(c.a1() * c.a1());
        let ext = SqrtExt::new(w2.clone()).unwrap();
        let x = AlgFuncElem::new(RationalFunc::from_poly(q.clone()), RationalFunc::from_poly(s.clone()), &ext).unwrap();
        let want = &(&q * &q) - &(&(&s * &s) * &w2);
        prop_assert_eq!(x.mul(&x.conj()).unwrap().q().clone(), RationalFunc::from_poly(want.clone()));
        prop_assert_eq!(x.norm().unwrap(), RationalFunc::from_poly(want));
    }
}

/// Rational `beta` away from the degenerate values.
fn beta() -> impl Strategy<Value = Rational> {
    (-30i64..31, 1i64..6).prop_map(|(n, d)| rat(n, d)).prop_filter("beta != +-1", |b| *b != int(1) && *b != int(-1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_beta_family(b in beta()) {
        let c = djkm_config(&b).unwrap();
        let fam = PellFamily::with_len(&c, 8);
        for n in 1..=6usize {
            prop_assert!(pellfam::verify_pell(&fam, n));
            prop_assert!(pellfam::verify_power_oracle(&fam, n as u32));
            prop_assert_eq!(fam.a(n).degree(), Some(2 * n as i64));
            prop_assert_eq!(fam.b(n as i64).degree(), Some(2 * n as i64));
        }
        for n in 0..=6usize {
            prop_assert!(build_general(&c, n, OdeKind::GeneralA).unwrap().annihilates(fam.a(n)));
            let gb = build_general(&c, n, OdeKind::GeneralB).unwrap();
            let db = build_djkm(&b, n, OdeKind::DjkmB).unwrap();
            // both b-operators accept b_n and reject its neighbour
            prop_assert!(gb.annihilates(fam.b(n as i64)) && db.annihilates(fam.b(n as i64)));
            prop_assert!(!gb.annihilates(fam.b(n as i64 + 1)) && !db.annihilates(fam.b(n as i64 + 1)));
            prop_assert!(build_djkm(&b, n, OdeKind::DjkmA).unwrap().annihilates(fam.a(n)));
        }
    }
}

#[test]
fn chebyshev_baseline_is_literal() {
    let c = chebyshev_config();
    let fam = PellFamily::with_len(&c, 24);
    let cheb = ChebFamily::new(c.ctx(), 24);
    for n in 0..=24 {
        assert_eq!(fam.a(n), &cheb.t[n], "T_{n}");
        assert_eq!(fam.b(n as i64), &cheb.u[n], "U_{n}");
    }
}

#[test]
fn oracle_agreement_to_64() {
    for c in [chebyshev_config(), djkm_config(&rat(5, 3)).unwrap()] {
        let fam = PellFamily::with_len(&c, 64);
        for n in 0..=64 {
            assert!(pellfam::verify_power_oracle(&fam, n), "n={n}");
        }
    }
}
