//! The two-label family of orbifold data inside the sixteen Ising
//! categories.
//!
//! Labels are B = {iota, phi}. The t-assignment sends a triple to the
//! unit object when it contains zero or two phi labels, to sigma when it
//! is all phi, and to zero otherwise. Each datum is determined by a
//! primitive 48th root of unity h whose cube is the category's root zeta,
//! together with two free nonzero parameters (a squared weight phi^2 and
//! the entry f at (phi; phi phi phi; iota phi)) that only move the datum
//! inside its gauge and rescaling orbit.
//!
//! Two construction routes are provided. [`build_fib`] uses the closed
//! forms in h directly. [`candidate_datum`] instead takes two free signs
//! (delta, nu), builds f from z = -1 + delta sqrt(3) and the weights from
//! nu, and is used by [`solve_fib`] to sweep all 12 candidates per
//! category; exactly the parameter choices matching the closed forms
//! survive the eight conditions.

use crate::cyclotomic::Cyclo;
use crate::fusion::{FusionCategoryData, Obj};
use crate::ising::{self, EPS, SIGMA, UNIT};
use crate::orbifold::{BIdx, DatumInput, OrbifoldDatum, OrbifoldError};
use thiserror::Error;

pub const IOTA: BIdx = 0;
pub const PHI: BIdx = 1;

#[derive(Debug, Error)]
pub enum FibError {
    #[error("exponent {0} must lie in 1..48 and be coprime to 48")]
    BadExponent(u64),
    #[error("epsilon must be +1 or -1, got {0}")]
    BadEpsilon(i8),
    #[error("sign parameter must be +1 or -1, got {0}")]
    BadSign(i8),
    #[error("free parameter must be nonzero")]
    ZeroParameter,
    #[error("the given root is not a primitive 16th root of unity")]
    BadZeta,
    #[error("closed form for {0} is not a sign")]
    SignNotUnit(&'static str),
    #[error(transparent)]
    Ising(#[from] ising::IsingError),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
}

/// A datum together with the category it lives in and its sign profile.
pub struct FibRealization {
    /// Exponent of h as a power of the canonical primitive 48th root.
    pub n: u64,
    pub eps: i8,
    pub delta: i8,
    pub nu: i8,
    pub cat: FusionCategoryData,
    pub datum: OrbifoldDatum,
}

/// One point of the 12-element candidate grid swept per category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    /// h = z48^h_exp; any cube root of the category's zeta, primitive
    /// or not.
    pub h_exp: u64,
    pub delta: i8,
    pub nu: i8,
}

/// Outcome of the per-category candidate sweep.
pub struct SolveOutcome {
    pub tested: usize,
    pub hits: Vec<Candidate>,
}

fn fib_t(a: BIdx, b: BIdx, c: BIdx) -> Option<Obj> {
    match [a, b, c].iter().filter(|&&x| x == PHI).count() {
        0 | 2 => Some(UNIT),
        3 => Some(SIGMA),
        _ => None,
    }
}

fn fib_t_entries() -> Vec<((BIdx, BIdx, BIdx), Obj)> {
    let mut out = Vec::new();
    for a in [IOTA, PHI] {
        for b in [IOTA, PHI] {
            for c in [IOTA, PHI] {
                if let Some(o) = fib_t(a, b, c) {
                    out.push(((a, b, c), o));
                }
            }
        }
    }
    out
}

/// The six f entries in the two blocks with (b, c, d) all phi, in the
/// fixed order: (iota; sigma), then the 2x2 block at (phi; unit) in row
/// order (iota,iota), (iota,phi), (phi,iota), (phi,phi), then
/// (phi; eps).
#[derive(Clone)]
struct SpecialFs {
    f_is: Cyclo,
    f_ii: Cyclo,
    f_ip: Cyclo,
    f_pi: Cyclo,
    f_pp1: Cyclo,
    f_ppe: Cyclo,
}

fn specials_closed_form(h: &Cyclo, f_ip: &Cyclo) -> SpecialFs {
    let lambda = h.pow(6) + h.pow(-6);
    let f_ii = (h.pow(12) * (h.pow(2) - h.pow(-2))).inv();
    SpecialFs {
        f_is: h.clone(),
        f_ii: f_ii.clone(),
        f_ip: f_ip.clone(),
        f_pi: &lambda * &f_ii / (h * f_ip),
        f_pp1: -(&f_ii / h),
        f_ppe: h.pow(5),
    }
}

fn specials_from_z(h: &Cyclo, z: &Cyclo, f_ip: &Cyclo) -> SpecialFs {
    let lambda = h.pow(6) + h.pow(-6);
    let zeta = h.pow(3);
    SpecialFs {
        f_is: h.clone(),
        f_ii: z / &lambda,
        f_ip: f_ip.clone(),
        f_pi: z / (h * f_ip),
        f_pp1: -(z / (&lambda * h)),
        f_ppe: (zeta.pow(3) / h) * (&zeta / &lambda - h) * z,
    }
}

/// Weights from the closed forms in h.
fn psi2_closed_form(h: &Cyclo, eps: i8, phi2: &Cyclo) -> (Cyclo, Cyclo) {
    let denom = Cyclo::from_int(3) - h.pow(4) - h.pow(-4);
    let scale = (phi2 * &denom).inv();
    let psi_i = scale.clone();
    let psi_p = -(Cyclo::from_int(eps as i64) * (h.pow(10) + h.pow(-10)) * scale);
    (psi_i, psi_p)
}

/// Weights from the free sign nu: psi_iota^2 = (1 - nu eps lambda /
/// sqrt6) / (2 phi^2) and psi_phi^2 = nu / (phi^2 sqrt6).
fn psi2_from_nu(nu: i8, eps: i8, lambda: &Cyclo, phi2: &Cyclo) -> (Cyclo, Cyclo) {
    let s6 = Cyclo::sqrt6();
    let psi_p = Cyclo::from_int(nu as i64) / (phi2 * &s6);
    let psi_i =
        (Cyclo::one() - Cyclo::from_int((nu * eps) as i64) * lambda / &s6) / (Cyclo::from_int(2) * phi2);
    (psi_i, psi_p)
}

/// Assembles the full f table: every t-supported key whose (b, c, d) is
/// not all phi carries 1; the two all-phi blocks carry the six specials.
fn fib_f_entries(cat: &FusionCategoryData, fs: &SpecialFs) -> Vec<((BIdx, BIdx, BIdx, BIdx, BIdx, BIdx, Obj), Cyclo)> {
    let mut out = Vec::new();
    let nn = |x: Option<Obj>, y: Option<Obj>, i: Obj| -> bool {
        matches!((x, y), (Some(x), Some(y)) if cat.n(x, y, i) == 1)
    };
    for a in [IOTA, PHI] {
        for b in [IOTA, PHI] {
            for c in [IOTA, PHI] {
                for d in [IOTA, PHI] {
                    for p in [IOTA, PHI] {
                        for q in [IOTA, PHI] {
                            for i in cat.objects() {
                                if !(nn(fib_t(a, b, p), fib_t(p, c, d), i)
                                    && nn(fib_t(a, q, d), fib_t(q, b, c), i))
                                {
                                    continue;
                                }
                                let val = if (b, c, d) == (PHI, PHI, PHI) {
                                    match (a, p, q, i) {
                                        (IOTA, PHI, PHI, SIGMA) => fs.f_is.clone(),
                                        (PHI, IOTA, IOTA, UNIT) => fs.f_ii.clone(),
                                        (PHI, IOTA, PHI, UNIT) => fs.f_ip.clone(),
                                        (PHI, PHI, IOTA, UNIT) => fs.f_pi.clone(),
                                        (PHI, PHI, PHI, UNIT) => fs.f_pp1.clone(),
                                        (PHI, PHI, PHI, e) if e == EPS => fs.f_ppe.clone(),
                                        other => unreachable!("unexpected all-phi key {:?}", other),
                                    }
                                } else {
                                    Cyclo::one()
                                };
                                out.push(((a, b, c, d, p, q, i), val));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn assemble(
    cat: &FusionCategoryData,
    fs: &SpecialFs,
    psi2: (Cyclo, Cyclo),
    phi2: &Cyclo,
) -> Result<OrbifoldDatum, FibError> {
    let input = DatumInput {
        labels: vec!["iota".to_string(), "phi".to_string()],
        iota: Some(IOTA),
        t: fib_t_entries(),
        f: fib_f_entries(cat, fs),
        g: Vec::new(),
        psi2: vec![psi2.0, psi2.1],
        phi2: phi2.clone(),
    };
    let datum = OrbifoldDatum::new(input, cat)?;
    Ok(datum.derive_g(cat)?)
}

/// Sign delta of h from the closed form (h^12 - 2 h^4) / sqrt3.
pub fn delta_of(h: &Cyclo) -> Result<i8, FibError> {
    sign_of(
        &((h.pow(12) - Cyclo::from_int(2) * h.pow(4)) / Cyclo::sqrt3()),
        "delta",
    )
}

/// Sign nu of (h, eps) from the closed form delta eps (h^6 + h^-6) / sqrt2.
pub fn nu_of(h: &Cyclo, eps: i8, delta: i8) -> Result<i8, FibError> {
    sign_of(
        &(Cyclo::from_int((delta * eps) as i64) * (h.pow(6) + h.pow(-6)) / Cyclo::sqrt2()),
        "nu",
    )
}

fn sign_of(v: &Cyclo, what: &'static str) -> Result<i8, FibError> {
    if v.is_one() {
        Ok(1)
    } else if (-v).is_one() {
        Ok(-1)
    } else {
        Err(FibError::SignNotUnit(what))
    }
}

/// The sign profile (delta, eps * nu) as a function of the exponent n of
/// h; eps * nu does not depend on eps.
pub fn sign_profile(n: u64) -> Result<(i8, i8), FibError> {
    check_exponent(n)?;
    let h = Cyclo::root_of_unity(48, n as i64);
    let delta = delta_of(&h)?;
    let eps_nu = nu_of(&h, 1, delta)?;
    Ok((delta, eps_nu))
}

fn check_exponent(n: u64) -> Result<(), FibError> {
    if n == 0 || n >= 48 || num_integer::gcd(n, 48) != 1 {
        return Err(FibError::BadExponent(n));
    }
    Ok(())
}

fn check_eps(eps: i8) -> Result<(), FibError> {
    if eps != 1 && eps != -1 {
        return Err(FibError::BadEpsilon(eps));
    }
    Ok(())
}

/// Builds the datum for h = z48^n with both free parameters set to 1.
pub fn build_fib(n: u64, eps: i8) -> Result<FibRealization, FibError> {
    build_fib_with(n, eps, &Cyclo::one(), &Cyclo::one())
}

/// Builds the datum for h = z48^n with explicit free parameters: the
/// squared weight phi^2 and the f entry at (phi; phi phi phi; iota phi).
pub fn build_fib_with(n: u64, eps: i8, phi2: &Cyclo, f_ip: &Cyclo) -> Result<FibRealization, FibError> {
    check_exponent(n)?;
    check_eps(eps)?;
    if phi2.is_zero() || f_ip.is_zero() {
        return Err(FibError::ZeroParameter);
    }
    let h = Cyclo::root_of_unity(48, n as i64);
    let cat = ising::ising_from_zeta(&h.pow(3), eps)?;
    let fs = specials_closed_form(&h, f_ip);
    let psi2 = psi2_closed_form(&h, eps, phi2);
    let datum = assemble(&cat, &fs, psi2, phi2)?;
    let delta = delta_of(&h)?;
    let nu = nu_of(&h, eps, delta)?;
    Ok(FibRealization { n, eps, delta, nu, cat, datum })
}

/// The three exponents j in 0..48 with (z48^j)^3 = zeta. Exactly one of
/// them is divisible by 3; the other two give primitive 48th roots.
pub fn cube_root_exponents(zeta: &Cyclo) -> Result<Vec<u64>, FibError> {
    if !zeta.is_primitive_root(16) {
        return Err(FibError::BadZeta);
    }
    let j0 = (0..16)
        .find(|&j| Cyclo::root_of_unity(16, j as i64) == *zeta)
        .ok_or(FibError::BadZeta)?;
    Ok(vec![j0, j0 + 16, j0 + 32])
}

/// The two primitive-h exponents for a given zeta.
pub fn primitive_h_exponents(zeta: &Cyclo) -> Result<Vec<u64>, FibError> {
    Ok(cube_root_exponents(zeta)?
        .into_iter()
        .filter(|&j| num_integer::gcd(j, 48) == 1)
        .collect())
}

/// Builds one sweep candidate in the given category. The category must
/// be the Ising category whose zeta is the cube of z48^h_exp; the two
/// free parameters are fixed to 1.
pub fn candidate_datum(cand: Candidate, eps: i8, cat: &FusionCategoryData) -> Result<OrbifoldDatum, FibError> {
    check_eps(eps)?;
    if cand.delta.abs() != 1 {
        return Err(FibError::BadSign(cand.delta));
    }
    if cand.nu.abs() != 1 {
        return Err(FibError::BadSign(cand.nu));
    }
    let h = Cyclo::root_of_unity(48, cand.h_exp as i64);
    let z = Cyclo::from_int(-1) + Cyclo::from_int(cand.delta as i64) * Cyclo::sqrt3();
    let one = Cyclo::one();
    let fs = specials_from_z(&h, &z, &one);
    let lambda = h.pow(6) + h.pow(-6);
    let psi2 = psi2_from_nu(cand.nu, eps, &lambda, &one);
    assemble(cat, &fs, psi2, &one)
}

/// Sweeps all 12 candidates (3 cube roots x 4 sign pairs) for the Ising
/// category at (m, eps) and returns those passing all eight conditions.
pub fn solve_fib(m: u8, eps: i8) -> Result<SolveOutcome, FibError> {
    let cat = ising::build_ising(m, eps)?;
    let zeta = ising::ising_zeta(m);
    let mut hits = Vec::new();
    let mut tested = 0;
    for h_exp in cube_root_exponents(&zeta)? {
        for delta in [1i8, -1] {
            for nu in [1i8, -1] {
                tested += 1;
                let cand = Candidate { h_exp, delta, nu };
                let datum = candidate_datum(cand, eps, &cat)?;
                if datum.verify_fast(&cat).is_ok() {
                    hits.push(cand);
                }
            }
        }
    }
    Ok(SolveOutcome { tested, hits })
}

/// All 32 data: for each of the 16 categories (m, eps) the two primitive
/// h exponents, in (m, eps = +1 then -1, ascending n) order.
pub fn classify_all() -> Result<Vec<FibRealization>, FibError> {
    let mut out = Vec::new();
    for m in 0..8u8 {
        for eps in [1i8, -1] {
            let zeta = ising::ising_zeta(m);
            for n in primitive_h_exponents(&zeta)? {
                out.push(build_fib(n, eps)?);
            }
        }
    }
    Ok(out)
}
