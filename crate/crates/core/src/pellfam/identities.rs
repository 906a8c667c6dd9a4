//! Exact identities satisfied by the family, each returning whether it holds.

use super::family::{power_oracle, PellFamily};
use crate::curvering::CurveElem;
use crate::exactnum::rational::int;
use crate::laurent::LaurentPoly;

fn norm_pow(fam: &PellFamily, k: u32) -> LaurentPoly {
    fam.config().pell_norm().pow(k)
}

fn half(p: &LaurentPoly) -> LaurentPoly {
    p.scale_rational(&(int(1) / int(2)))
}

/// `a_n^2 - b_(n-1)^2 p = N^n`.
pub fn verify_pell(fam: &PellFamily, n: usize) -> bool {
    let c = fam.config();
    let b = fam.b(n as i64 - 1);
    let lhs = &(fam.a(n) * fam.a(n)) - &(&(b * b) * c.p());
    lhs == norm_pow(fam, n as u32)
}

/// `2 a_n = X + conj X` and `2 u b_(n-1) = X - conj X` with `X = (a1 + b0 u)^n`.
pub fn verify_closed_forms(fam: &PellFamily, n: usize) -> bool {
    let c = fam.config();
    let x = power_oracle(fam, n as u32);
    let xc = x.conj();
    let sum = x.add(&xc).expect("same config");
    let diff = x.sub(&xc).expect("same config");
    let two = LaurentPoly::from_int(c.ctx(), 2);
    let two_a = CurveElem::from_f(&two * fam.a(n), c);
    let two_u_b = CurveElem::u(c).scale(&(&two * fam.b(n as i64 - 1)));
    sum == two_a && diff == two_u_b
}

/// `a_n^2 - a_(n-1) a_(n+1) = -p b0^2 N^(n-1)` and
/// `b_n^2 - b_(n-1) b_(n+1) = b0^2 N^n`; both nonzero unless the norm vanishes.
pub fn verify_turan(fam: &PellFamily, n: usize) -> bool {
    let c = fam.config();
    let b0sq = c.b0() * c.b0();
    let lhs_a = &(fam.a(n) * fam.a(n)) - &(fam.a(n - 1) * fam.a(n + 1));
    let rhs_a = -(&(c.p() * &b0sq) * &norm_pow(fam, n as u32 - 1));
    let n = n as i64;
    let lhs_b = &(fam.b(n) * fam.b(n)) - &(fam.b(n - 1) * fam.b(n + 1));
    let rhs_b = &b0sq * &norm_pow(fam, n as u32);
    let nonzero = c.is_degenerate() || c.b0().is_zero() || (!lhs_a.is_zero() && !lhs_b.is_zero());
    lhs_a == rhs_a && lhs_b == rhs_b && nonzero
}

/// The three product formulas for `m >= n`.
pub fn verify_products(fam: &PellFamily, m: usize, n: usize) -> bool {
    assert!(m >= n, "products need m >= n");
    let c = fam.config();
    let nn = norm_pow(fam, n as u32);
    let aa = fam.a(m) * fam.a(n) == half(&(fam.a(m + n) + &nn * fam.a(m - n)));
    let (mi, ni) = (m as i64, n as i64);
    let ba = fam.b(mi) * fam.a(n) == half(&(fam.b(mi + ni) + &nn * fam.b(mi - ni)));
    let nn1 = &nn * c.pell_norm();
    let bb = &(c.p() * fam.b(mi)) * fam.b(ni) == half(&(fam.a(m + n + 2) - &nn1 * fam.a(m - n)));
    aa && ba && bb
}

/// The two summation formulas relating `b` to partial sums of `a` and back.
pub fn verify_summations(fam: &PellFamily, n: usize) -> bool {
    let c = fam.config();
    let ctx = c.ctx();
    let one = LaurentPoly::one(ctx);
    let a1 = c.a1();
    let k = &(c.pell_norm() - &(a1 + a1)) + &one;
    let sum_a = (0..n).map(|i| fam.a(i).clone()).fold(LaurentPoly::zero(ctx), |s, x| s + x);
    let sum_b = (0..n.saturating_sub(1)).map(|i| fam.b(i as i64).clone()).fold(LaurentPoly::zero(ctx), |s, x| s + x);
    let lhs1 = &(c.p() * c.b0()) * fam.b(n as i64 - 1);
    let rhs1 = &(&(fam.a(n) - &one) * &(a1 - &one)) - &(&k * &sum_a);
    let lhs2 = c.b0() * fam.a(n);
    let rhs2 = &(c.b0() + &(fam.b(n as i64 - 1) * &(a1 - &one))) - &(&k * &sum_b);
    lhs1 == rhs1 && lhs2 == rhs2
}

/// `b_(2n+1) = 2 a_(n+1) b_n`.
pub fn verify_growth(fam: &PellFamily, n: usize) -> bool {
    let lhs = fam.b(2 * n as i64 + 1);
    let rhs = (fam.a(n + 1) * fam.b(n as i64)).scale_rational(&int(2));
    *lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvering::{chebyshev_config, custom_config, djkm_config};
    use crate::exactnum::rational::rat;
    use crate::exactnum::TowerContext;
    use crate::laurent::parse_laurent;

    #[test]
    fn worked_values_beta_three() {
        let c = djkm_config(&int(3)).unwrap();
        let ctx = c.ctx();
        let fam = PellFamily::with_len(&c, 8);
        let lhs = &(fam.a(2) * fam.a(2)) - &(&(fam.b(1) * fam.b(1)) * c.p());
        assert_eq!(lhs, LaurentPoly::t_pow(ctx, 4));
        let tur_a = &(fam.a(1) * fam.a(1)) - fam.a(2);
        assert_eq!(tur_a, parse_laurent("-1/4*t^4 + 3/2*t^2 - 1/4", ctx).unwrap());
        let tur_b = &(fam.b(1) * fam.b(1)) - &(fam.b(0) * fam.b(2));
        assert_eq!(tur_b, parse_laurent("2*t^2", ctx).unwrap());
        assert_eq!(fam.b(3), &(fam.b(0) * &parse_laurent("(t^2 - 1)*(t^4 - 4*t^2 + 1)", ctx).unwrap()));
    }

    #[test]
    fn all_identities_small_range() {
        for c in [djkm_config(&int(3)).unwrap(), djkm_config(&rat(5, 3)).unwrap(), chebyshev_config()] {
            let fam = PellFamily::with_len(&c, 2 * 8 + 2);
            for n in 1..=8 {
                assert!(verify_pell(&fam, n), "pell n={n}");
                assert!(verify_closed_forms(&fam, n), "closed n={n}");
                assert!(verify_turan(&fam, n), "turan n={n}");
                assert!(verify_summations(&fam, n), "sums n={n}");
            }
            for n in 0..=8 {
                assert!(verify_growth(&fam, n), "growth n={n}");
                for m in n..=8 {
                    assert!(verify_products(&fam, m, n), "products m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn degenerate_square_p() {
        let ctx = TowerContext::rational();
        let c = custom_config(LaurentPoly::t_pow(&ctx, 4), LaurentPoly::t_pow(&ctx, 2), LaurentPoly::one(&ctx)).unwrap();
        let fam = PellFamily::with_len(&c, 10);
        for n in 1..=6 {
            assert!(verify_turan(&fam, n));
            assert!(verify_products(&fam, n, 1));
        }
        // b-side Turan expression vanishes identically
        assert!((&(fam.b(2) * fam.b(2)) - &(fam.b(1) * fam.b(3))).is_zero());
    }

    #[test]
    fn shifted_index_breaks_pell() {
        let c = djkm_config(&int(3)).unwrap();
        let fam = PellFamily::with_len(&c, 4);
        assert!(verify_pell(&fam, 3));
        let b = fam.b(1);
        let lhs = &(fam.a(3) * fam.a(3)) - &(&(b * b) * c.p());
        assert_ne!(lhs, LaurentPoly::t_pow(c.ctx(), 6));
    }
}
