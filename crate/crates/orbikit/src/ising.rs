//! The sixteen Ising-type modular categories.
//!
//! Each has three simple objects 1, eps, sigma with eps x eps = 1,
//! eps x sigma = sigma and sigma x sigma = 1 + eps, all self-dual. The
//! family is parametrised by a primitive 16th root of unity zeta with
//! zeta^8 = -1 (eight choices, indexed here by m in 0..=7 through
//! zeta = zeta_16^(15 - 2m)) together with a sign epsilon fixing the
//! pivotal structure, so dim(sigma) = epsilon * (zeta^2 + zeta^(-2)).
//!
//! All scalar data lives in the conductor 16 cyclotomic field.

use crate::cyclotomic::Cyclo;
use crate::fusion::{CategoryInput, FusionCategoryData, FusionDataError, Obj};
use thiserror::Error;

pub const UNIT: Obj = 0;
pub const EPS: Obj = 1;
pub const SIGMA: Obj = 2;

#[derive(Debug, Error)]
pub enum IsingError {
    #[error("m must lie in 0..=7, got {0}")]
    BadM(u8),
    #[error("epsilon must be +1 or -1, got {0}")]
    BadEpsilon(i8),
    #[error("zeta must be a primitive 16th root of unity with zeta^8 = -1")]
    BadZeta,
    #[error(transparent)]
    Data(#[from] FusionDataError),
}

/// The defining root of unity for parameter m: zeta_16^(15 - 2m).
pub fn ising_zeta(m: u8) -> Cyclo {
    Cyclo::root_of_unity(16, 15 - 2 * (m as i64))
}

/// Category for parameters (m, epsilon), m in 0..=7, epsilon = +-1.
pub fn build_ising(m: u8, epsilon: i8) -> Result<FusionCategoryData, IsingError> {
    if m > 7 {
        return Err(IsingError::BadM(m));
    }
    ising_from_zeta(&ising_zeta(m), epsilon)
}

/// Category for an explicitly given zeta. Accepts exactly the sixteen
/// admissible parameter pairs.
pub fn ising_from_zeta(zeta: &Cyclo, epsilon: i8) -> Result<FusionCategoryData, IsingError> {
    if epsilon != 1 && epsilon != -1 {
        return Err(IsingError::BadEpsilon(epsilon));
    }
    if !zeta.is_primitive_root(16) || zeta.pow(8) != Cyclo::from_int(-1) {
        return Err(IsingError::BadZeta);
    }
    let one = Cyclo::one;
    let neg = || -Cyclo::one();
    let eps_c = Cyclo::from_int(epsilon as i64);
    let lambda = zeta.pow(2) + zeta.pow(-2);
    let linv = lambda.inv();

    let fusion = vec![
        (UNIT, UNIT, UNIT),
        (UNIT, EPS, EPS),
        (UNIT, SIGMA, SIGMA),
        (EPS, UNIT, EPS),
        (SIGMA, UNIT, SIGMA),
        (EPS, EPS, UNIT),
        (EPS, SIGMA, SIGMA),
        (SIGMA, EPS, SIGMA),
        (SIGMA, SIGMA, UNIT),
        (SIGMA, SIGMA, EPS),
    ];

    // Entries with no unit leg; unit legs are filled to 1 automatically.
    let f: Vec<((Obj, Obj, Obj, Obj, Obj, Obj), Cyclo)> = vec![
        ((EPS, EPS, EPS, EPS, UNIT, UNIT), one()),
        ((EPS, EPS, SIGMA, SIGMA, SIGMA, UNIT), one()),
        ((EPS, SIGMA, EPS, SIGMA, SIGMA, SIGMA), neg()),
        ((EPS, SIGMA, SIGMA, UNIT, EPS, SIGMA), one()),
        ((EPS, SIGMA, SIGMA, EPS, UNIT, SIGMA), one()),
        ((SIGMA, EPS, EPS, SIGMA, UNIT, SIGMA), one()),
        ((SIGMA, EPS, SIGMA, UNIT, SIGMA, SIGMA), one()),
        ((SIGMA, EPS, SIGMA, EPS, SIGMA, SIGMA), neg()),
        ((SIGMA, SIGMA, EPS, UNIT, SIGMA, EPS), one()),
        ((SIGMA, SIGMA, EPS, EPS, SIGMA, UNIT), one()),
        ((SIGMA, SIGMA, SIGMA, SIGMA, UNIT, UNIT), linv.clone()),
        ((SIGMA, SIGMA, SIGMA, SIGMA, UNIT, EPS), linv.clone()),
        ((SIGMA, SIGMA, SIGMA, SIGMA, EPS, UNIT), linv.clone()),
        ((SIGMA, SIGMA, SIGMA, SIGMA, EPS, EPS), -linv),
    ];
    // G(i,j,k;l) = F(k,j,i;l) entrywise in this family.
    let g = f.iter().map(|&((i, j, k, l, a, b), ref v)| ((k, j, i, l, a, b), v.clone())).collect();

    let r = vec![
        ((EPS, EPS, UNIT), neg()),
        ((SIGMA, SIGMA, UNIT), zeta.clone()),
        ((SIGMA, SIGMA, EPS), zeta.pow(-3)),
        ((SIGMA, EPS, SIGMA), zeta.pow(4)),
        ((EPS, SIGMA, SIGMA), zeta.pow(4)),
    ];
    let rinv = r.iter().map(|&(k, ref v)| (k, v.inv())).collect();

    let input = CategoryInput {
        names: vec!["1".to_string(), "eps".to_string(), "sigma".to_string()],
        unit: UNIT,
        dual: vec![UNIT, EPS, SIGMA],
        fusion,
        f,
        g,
        r,
        rinv,
        twist: vec![one(), neg(), &eps_c * &zeta.pow(-1)],
        qdim: vec![one(), one(), &eps_c * &(zeta.pow(2) + zeta.pow(-2))],
    };
    Ok(FusionCategoryData::new(input)?)
}

/// All sixteen categories as (m, epsilon, data).
pub fn all_ising() -> Vec<(u8, i8, FusionCategoryData)> {
    let mut out = Vec::new();
    for m in 0..8u8 {
        for &e in &[1i8, -1] {
            out.push((m, e, build_ising(m, e).expect("ising family must build")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_sixteen_build() {
        assert_eq!(all_ising().len(), 16);
        assert!(build_ising(8, 1).is_err());
        assert!(build_ising(0, 0).is_err());
        assert!(ising_from_zeta(&Cyclo::root_of_unity(16, 2), 1).is_err());
        assert!(ising_from_zeta(&Cyclo::one(), 1).is_err());
    }

    #[test]
    fn structural_checks_pass_for_one_representative() {
        let cat = build_ising(0, 1).unwrap();
        assert!(cat.check_fg_inverse().passed());
        assert!(cat.check_pentagon().passed());
        assert!(cat.check_hexagon().passed());
        assert!(cat.check_twist_braiding().passed());
    }

    #[test]
    fn global_dimension_is_four_and_anomaly_matches() {
        for (m, e, cat) in all_ising() {
            assert_eq!(cat.global_dimension(), Cyclo::from_int(4));
            let zeta = ising_zeta(m);
            let want = Cyclo::from_int(e as i64) * zeta.pow(-1);
            let got = cat.anomaly().unwrap();
            assert_eq!(got, want, "anomaly mismatch at m={} eps={}", m, e);
            assert!(got.is_primitive_root(16));
            // the anomaly coincides with the twist of sigma in this family
            assert_eq!(&got, cat.twist(SIGMA));
        }
    }

    #[test]
    fn reference_points_of_the_family() {
        // m = 0, epsilon = +1: dim sigma = sqrt(2), theta_sigma = zeta_16.
        let c = build_ising(0, 1).unwrap();
        assert_eq!(c.qdim(SIGMA), &Cyclo::sqrt2());
        assert_eq!(c.twist(SIGMA), &Cyclo::root_of_unity(16, 1));
        // m = 6, epsilon = -1: zeta = zeta_16^3, theta_sigma = zeta_16^5.
        let c = build_ising(6, -1).unwrap();
        assert_eq!(ising_zeta(6), Cyclo::root_of_unity(16, 3));
        assert_eq!(c.twist(SIGMA), &Cyclo::root_of_unity(16, 5));
        assert_eq!(c.qdim(SIGMA), &Cyclo::sqrt2());
        // dim sigma squares to 2 everywhere; its sign varies over the
        // family, with exactly half the members pseudo-unitary
        let mut positive = 0;
        for (_, _, cat) in all_ising() {
            let d = cat.qdim(SIGMA).clone();
            assert_eq!(&d * &d, Cyclo::from_int(2));
            if d.embed().re > 0.0 {
                positive += 1;
            }
        }
        assert_eq!(positive, 8);
    }

    #[test]
    fn f_and_r_tables_match_reference_values() {
        let cat = build_ising(0, 1).unwrap();
        let z = ising_zeta(0);
        let lam = Cyclo::sqrt2();
        assert_eq!(cat.f_sym(SIGMA, SIGMA, SIGMA, SIGMA, EPS, EPS), -lam.inv());
        assert_eq!(cat.f_sym(SIGMA, SIGMA, SIGMA, SIGMA, UNIT, EPS), lam.inv());
        assert_eq!(cat.f_sym(EPS, SIGMA, EPS, SIGMA, SIGMA, SIGMA), -Cyclo::one());
        assert_eq!(cat.f_sym(UNIT, SIGMA, EPS, SIGMA, SIGMA, SIGMA), Cyclo::one());
        // absent key reads as zero
        assert!(cat.f_sym(EPS, EPS, EPS, UNIT, UNIT, UNIT).is_zero());
        assert_eq!(cat.r_sym(SIGMA, SIGMA, EPS), z.pow(-3));
        assert_eq!(cat.r_sym(SIGMA, SIGMA, UNIT), z);
        assert_eq!(cat.rinv_sym(SIGMA, SIGMA, UNIT), z.pow(-1));
        assert_eq!(cat.r_sym(EPS, SIGMA, SIGMA), z.pow(4));
        assert_eq!(cat.r_sym(UNIT, SIGMA, SIGMA), Cyclo::one());
        assert!(cat.r_sym(EPS, EPS, EPS).is_zero());
    }
}
