//! Second-order linear operators annihilating the Pell families, and their
//! singular-point structure.

mod fuchsian;
mod operator;

pub use fuchsian::{
    classify_fuchsian, poly_roots, singular_points_numeric, FactorSummary, SingularFactor, SingularReport,
};
pub use operator::{
    build_djkm, build_djkm_a_uncorrected, build_general, build_general_b_uncorrected, OdeKind, OdeOperator,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;
    use crate::laurent::LaurentPoly;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Multiplying by a polynomial coprime to the leading coefficient
        /// leaves the classification of the original points unchanged.
        #[test]
        fn classification_stable_under_coprime_scaling(c0 in 1i64..6, c1 in -4i64..5, c2 in -3i64..4, n in 0usize..6) {
            let op = build_djkm(&int(3), n, OdeKind::DjkmB).unwrap();
            let g = LaurentPoly::from_ints(op.c2.ctx(), &[c0 * 7 + 3, c1, c2]);
            prop_assume!(crate::laurent::poly_gcd(&g, &op.c2).unwrap().degree() == Some(0));
            let base = classify_fuchsian(&op).unwrap();
            let scaled = classify_fuchsian(&op.scaled(&g).unwrap()).unwrap();
            prop_assert_eq!(base.fuchsian(), scaled.fuchsian());
            prop_assert_eq!(base.infinity_regular, scaled.infinity_regular);
            for f in &base.finite {
                // poly_gcd ignores powers of t, so the factor t is matched directly
                let shares_root = |h: &SingularFactor| {
                    h.factor == f.factor || crate::laurent::poly_gcd(&h.factor, &f.factor).unwrap().degree().unwrap_or(0) > 0
                };
                let kept = scaled.finite.iter().any(|h| shares_root(h) && h.regular == f.regular);
                prop_assert!(kept);
            }
        }
    }
}
