use crate::curvering::{Config, CurveElem};
use crate::laurent::LaurentPoly;

/// The sequences `a_n`, `b_n` with `a_n + b_(n-1) u = (a1 + b0 u)^n`.
///
/// Both are generated by the recurrence `x_(n+1) = 2 a1 x_n - N x_(n-1)`
/// with `N = a1^2 - b0^2 p`, starting from `a_0 = 1` and `b_(-1) = 0`.
#[derive(Clone, Debug)]
pub struct PellFamily {
    config: Config,
    a: Vec<LaurentPoly>,
    b: Vec<LaurentPoly>,
    zero: LaurentPoly,
    two_a1: LaurentPoly,
}

impl PellFamily {
    pub fn new(config: &Config) -> Self {
        let ctx = config.ctx();
        Self {
            config: config.clone(),
            a: vec![LaurentPoly::one(ctx), config.a1().clone()],
            b: vec![config.b0().clone()],
            zero: LaurentPoly::zero(ctx),
            two_a1: config.a1() + config.a1(),
        }
    }

    /// Builds a family already extended through index `n`.
    pub fn with_len(config: &Config, n: usize) -> Self {
        let mut fam = Self::new(config);
        fam.extend(n);
        fam
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    /// Highest index available for both sequences.
    pub fn len(&self) -> usize {
        self.b.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Populates both sequences through index `n`; earlier terms are kept.
    pub fn extend(&mut self, n: usize) {
        let norm = self.config.pell_norm().clone();
        while self.a.len() <= n {
            let k = self.a.len();
            let next = &(&self.two_a1 * &self.a[k - 1]) - &(&norm * &self.a[k - 2]);
            self.a.push(next);
        }
        while self.b.len() <= n {
            let k = self.b.len();
            let prev2 = if k >= 2 { &self.b[k - 2] } else { &self.zero };
            let next = &(&self.two_a1 * &self.b[k - 1]) - &(&norm * prev2);
            self.b.push(next);
        }
    }

    /// `a_n`; panics unless the family was extended through `n`.
    pub fn a(&self, n: usize) -> &LaurentPoly {
        self.a.get(n).unwrap_or_else(|| panic!("family not extended to index {n}"))
    }

    /// `b_n` for `n >= -1`; panics unless the family was extended through `n`.
    pub fn b(&self, n: i64) -> &LaurentPoly {
        match n {
            -1 => &self.zero,
            _ if n < -1 => panic!("b_n is undefined for n = {n}"),
            _ => self.b.get(n as usize).unwrap_or_else(|| panic!("family not extended to index {n}")),
        }
    }

    pub fn a1(&self) -> &LaurentPoly {
        self.config.a1()
    }

    /// `a1 + b0 u`.
    pub fn fundamental(&self) -> CurveElem {
        CurveElem::new(self.config.a1().clone(), self.config.b0().clone(), &self.config)
    }
}

/// `(a1 + b0 u)^n` by binary exponentiation in the curve ring.
pub fn power_oracle(fam: &PellFamily, n: u32) -> CurveElem {
    fam.fundamental().pow(n)
}

/// Whether the oracle power has components `(a_n, b_(n-1))`.
pub fn verify_power_oracle(fam: &PellFamily, n: u32) -> bool {
    let x = power_oracle(fam, n);
    x.f() == fam.a(n as usize) && x.g() == fam.b(n as i64 - 1)
}

/// Chebyshev polynomials `T_n`, `U_n` in one variable over the rationals,
/// embedded in a tower context.
#[derive(Clone, Debug)]
pub struct ChebFamily {
    pub t: Vec<LaurentPoly>,
    pub u: Vec<LaurentPoly>,
}

impl ChebFamily {
    pub fn new(ctx: &crate::exactnum::Tower, n: usize) -> Self {
        let z = LaurentPoly::t(ctx);
        let two_z = &z + &z;
        let mut t = vec![LaurentPoly::one(ctx), z.clone()];
        let mut u = vec![LaurentPoly::one(ctx), two_z.clone()];
        for k in 2..=n.max(1) {
            t.push(&(&two_z * &t[k - 1]) - &t[k - 2]);
            u.push(&(&two_z * &u[k - 1]) - &u[k - 2]);
        }
        t.truncate(n + 1);
        u.truncate(n + 1);
        Self { t, u }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvering::{chebyshev_config, djkm_config};
    use crate::exactnum::rational::{int, rat};
    use crate::exactnum::TowerScalar;
    use crate::laurent::parse_laurent;

    #[test]
    fn first_terms_beta_three() {
        let c = djkm_config(&int(3)).unwrap();
        let ctx = c.ctx();
        let fam = PellFamily::with_len(&c, 3);
        assert_eq!(fam.a(0), &LaurentPoly::one(ctx));
        assert_eq!(fam.b(0), c.b0());
        assert!(fam.b(-1).is_zero());
        assert_eq!(fam.a(2), &parse_laurent("1/2*t^4 - 2*t^2 + 1/2", ctx).unwrap());
        assert_eq!(fam.b(1), &parse_laurent("s2*t^2 - s2", ctx).unwrap());
        assert_eq!(fam.b(2), &parse_laurent("s2*(t^4 - 3*t^2 + 1)", ctx).unwrap());
        assert_eq!(fam.len(), 3);
    }

    #[test]
    fn oracle_agreement() {
        for beta in [int(3), rat(5, 3)] {
            let c = djkm_config(&beta).unwrap();
            let fam = PellFamily::with_len(&c, 16);
            for n in 0..=16 {
                assert!(verify_power_oracle(&fam, n), "beta={beta} n={n}");
            }
            let x = power_oracle(&fam, 2);
            assert_eq!(x.g(), &(fam.a1() + fam.a1()).scale(&TowerScalar::s2(c.ctx())));
        }
    }

    #[test]
    fn chebyshev_baseline_reproduces_t_and_u() {
        let c = chebyshev_config();
        let fam = PellFamily::with_len(&c, 12);
        let cheb = ChebFamily::new(c.ctx(), 12);
        for n in 0..=12 {
            assert_eq!(fam.a(n), &cheb.t[n]);
            assert_eq!(fam.b(n as i64), &cheb.u[n]);
        }
        let z2m1 = LaurentPoly::from_ints(c.ctx(), &[-1, 0, 1]);
        for n in 1..=12 {
            let lhs = &(&cheb.t[n] * &cheb.t[n]) - &(&z2m1 * &(&cheb.u[n - 1] * &cheb.u[n - 1]));
            assert!(lhs.is_one());
        }
        assert_eq!(ChebFamily::new(c.ctx(), 0).t.len(), 1);
    }

    #[test]
    fn degree_law() {
        let c = djkm_config(&int(17)).unwrap();
        let fam = PellFamily::with_len(&c, 20);
        for n in 1..=20usize {
            assert_eq!(fam.a(n).degree(), Some(2 * n as i64));
            assert_eq!(fam.b(n as i64).degree(), Some(2 * n as i64));
            assert_eq!(fam.a(n).low_degree(), Some(0));
        }
    }
}
