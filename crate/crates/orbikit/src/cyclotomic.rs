//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclo`] is an element of Q(zeta_n) stored as a dense coefficient
//! vector over the power basis 1, zeta, ..., zeta^(phi(n)-1), with zeta a
//! fixed primitive n-th root of unity and phi Euler's totient. All
//! arithmetic is exact over `BigRational`. Elements of different
//! conductors are combined by coercion into the least common multiple
//! conductor; results are kept there rather than descended to the minimal
//! subfield, which is sound because the power basis is a basis at every
//! conductor.
//!
//! Reduction data (the cyclotomic polynomial and the expansions of
//! zeta^e for e >= phi(n)) is computed once per conductor and cached
//! process-wide.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

/// Element of the cyclotomic field Q(zeta_n).
#[derive(Clone)]
pub struct Cyclo {
    n: u64,
    c: Vec<BigRational>,
}

/// Euler's totient by trial-division factorisation.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            phi = phi / p * (p - 1);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    phi
}

fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// Coefficients of the n-th cyclotomic polynomial, lowest power first,
/// including the leading 1. Exact integers.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom up.
    let mut memo: HashMap<u64, Vec<BigInt>> = HashMap::new();
    for d in divisors(n) {
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        for e in divisors(d) {
            if e < d {
                let den = memo[&e].clone();
                num = poly_div_exact(&num, &den);
            }
        }
        memo.insert(d, num);
    }
    memo.remove(&n).unwrap()
}

// Exact division of integer polynomials, panics on nonzero remainder.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quo = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quo[k] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[k + j] -= t;
        }
    }
    assert!(rem.iter().all(|r| r.is_zero()), "nonexact poly division");
    quo
}

struct Table {
    d: usize,
    // rows[i] = coefficients of zeta^(d+i) over the power basis, i < n - d
    rows: Vec<Vec<BigRational>>,
}

fn table(n: u64) -> Arc<Table> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Table>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return t.clone();
    }
    let phi = cyclotomic_polynomial(n);
    let d = phi.len() - 1;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    if n as usize > d {
        // zeta^d = -(phi_0 + phi_1 zeta + ...), then multiply by zeta repeatedly
        let first: Vec<BigRational> = (0..d)
            .map(|j| BigRational::from_integer(-phi[j].clone()))
            .collect();
        rows.push(first);
        for i in 1..(n as usize - d) {
            let prev = &rows[i - 1];
            let top = prev[d - 1].clone();
            let mut next = vec![BigRational::zero(); d];
            for j in 1..d {
                next[j] = prev[j - 1].clone();
            }
            if !top.is_zero() {
                let r0 = &rows[0];
                for j in 0..d {
                    if !r0[j].is_zero() {
                        next[j] += &top * &r0[j];
                    }
                }
            }
            rows.push(next);
        }
    }
    let t = Arc::new(Table { d, rows });
    guard.insert(n, t.clone());
    t
}

// low[] += q * zeta^e over conductor n, with e already < n.
fn add_monomial(low: &mut [BigRational], t: &Table, e: usize, q: &BigRational) {
    if q.is_zero() {
        return;
    }
    if e < t.d {
        low[e] += q;
    } else {
        let row = &t.rows[e - t.d];
        for j in 0..t.d {
            if !row[j].is_zero() {
                low[j] += q * &row[j];
            }
        }
    }
}

impl Cyclo {
    pub fn zero() -> Cyclo {
        Cyclo { n: 1, c: vec![BigRational::zero()] }
    }

    pub fn one() -> Cyclo {
        Cyclo { n: 1, c: vec![BigRational::one()] }
    }

    pub fn from_rational(r: BigRational) -> Cyclo {
        Cyclo { n: 1, c: vec![r] }
    }

    pub fn from_int(v: i64) -> Cyclo {
        Cyclo::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// p/q as an exact field element.
    pub fn ratio(p: i64, q: i64) -> Cyclo {
        assert!(q != 0);
        Cyclo::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// zeta_n^k. The element keeps conductor n even when k shares a
    /// factor with n.
    pub fn root_of_unity(n: u64, k: i64) -> Cyclo {
        assert!(n >= 1);
        let t = table(n);
        let e = k.rem_euclid(n as i64) as usize;
        let mut c = vec![BigRational::zero(); t.d];
        add_monomial(&mut c, &t, e, &BigRational::one());
        Cyclo { n, c }
    }

    /// The positive square root of 2, as zeta_8 + zeta_8^7.
    pub fn sqrt2() -> Cyclo {
        Cyclo::root_of_unity(8, 1) + Cyclo::root_of_unity(8, 7)
    }

    /// The positive square root of 3, as zeta_12 + zeta_12^11.
    pub fn sqrt3() -> Cyclo {
        Cyclo::root_of_unity(12, 1) + Cyclo::root_of_unity(12, 11)
    }

    /// The positive square root of 6.
    pub fn sqrt6() -> Cyclo {
        Cyclo::sqrt2() * Cyclo::sqrt3()
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    /// Rewrite over Q(zeta_m); m must be a multiple of the conductor.
    pub fn to_conductor(&self, m: u64) -> Cyclo {
        assert!(m % self.n == 0, "conductor {} does not divide {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let t = table(m);
        let scale = (m / self.n) as usize;
        let mut c = vec![BigRational::zero(); t.d];
        for (j, q) in self.c.iter().enumerate() {
            if !q.is_zero() {
                add_monomial(&mut c, &t, j * scale, q);
            }
        }
        Cyclo { n: m, c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|q| q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|q| q.is_zero())
    }

    /// Some(r) when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|q| q.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Some(k) when the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Complex conjugate, i.e. the Galois automorphism zeta -> zeta^(-1).
    pub fn conj(&self) -> Cyclo {
        let t = table(self.n);
        let mut c = vec![BigRational::zero(); t.d];
        for (j, q) in self.c.iter().enumerate() {
            if !q.is_zero() {
                let e = ((self.n as usize) - j) % (self.n as usize);
                add_monomial(&mut c, &t, e, q);
            }
        }
        Cyclo { n: self.n, c }
    }

    /// Multiplicative inverse. Panics on zero; use [`Cyclo::checked_inv`]
    /// when zero is a possible input.
    pub fn inv(&self) -> Cyclo {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn checked_inv(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        // Extended Euclid for gcd(a, Phi_n) = 1 in Q[x]; the Bezout
        // coefficient of a is the inverse mod Phi_n.
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let a: Vec<BigRational> = self.c.clone();
        let (g, u) = poly_ext_gcd(&a, &phi);
        // g is a nonzero constant for a unit mod an irreducible modulus
        debug_assert!(g.len() == 1 && !g[0].is_zero());
        let ginv = g[0].recip();
        let t = table(self.n);
        let mut c = vec![BigRational::zero(); t.d];
        for (j, q) in u.iter().enumerate() {
            if !q.is_zero() {
                let e = j % self.n as usize;
                let scaled = q * &ginv;
                add_monomial(&mut c, &t, e, &scaled);
            }
        }
        Some(Cyclo { n: self.n, c })
    }

    /// Integer power, negative exponents via the inverse.
    pub fn pow(&self, k: i64) -> Cyclo {
        if k < 0 {
            return self.inv().pow(-k);
        }
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True when self is a primitive k-th root of unity.
    pub fn is_primitive_root(&self, k: u64) -> bool {
        if !self.pow(k as i64).is_one() {
            return false;
        }
        let mut m = k;
        let mut p = 2;
        let mut primes = Vec::new();
        while p * p <= m {
            if m % p == 0 {
                primes.push(p);
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        primes.iter().all(|p| !self.pow((k / p) as i64).is_one())
    }

    /// Numeric value under zeta_n -> exp(2 pi i / n).
    pub fn embed(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let ang = 2.0 * std::f64::consts::PI * (j as f64) / (self.n as f64);
            let v = q.to_f64().unwrap_or(f64::NAN);
            acc += Complex64::from_polar(1.0, ang) * v;
        }
        acc
    }

    fn lift_pair(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        if a.n == b.n {
            (a.clone(), b.clone())
        } else {
            let m = a.n.lcm(&b.n);
            (a.to_conductor(m), b.to_conductor(m))
        }
    }
}

// Returns (gcd, u) with u*a = gcd mod m, both polynomials dense lowest-first.
fn poly_ext_gcd(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let trim = |v: &mut Vec<BigRational>| {
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
    };
    let mut r0: Vec<BigRational> = m.to_vec();
    let mut r1: Vec<BigRational> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut u0: Vec<BigRational> = vec![BigRational::zero()];
    let mut u1: Vec<BigRational> = vec![BigRational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, rem) = poly_divmod(&r0, &r1);
        let unext = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = unext;
        trim(&mut r1);
    }
    (r0, u0)
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    if num.len() < den.len() {
        return (vec![BigRational::zero()], rem);
    }
    let dn = num.len() - 1;
    let mut quo = vec![BigRational::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quo[k] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[k + j] -= t;
        }
    }
    rem.truncate(dd.max(1));
    (quo, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        let (a, b) = Cyclo::lift_pair(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclo {}

impl std::ops::Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (mut a, b) = Cyclo::lift_pair(self, rhs);
        for j in 0..a.c.len() {
            if !b.c[j].is_zero() {
                a.c[j] += &b.c[j];
            }
        }
        a
    }
}

impl std::ops::Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        let (mut a, b) = Cyclo::lift_pair(self, rhs);
        for j in 0..a.c.len() {
            if !b.c[j].is_zero() {
                a.c[j] -= &b.c[j];
            }
        }
        a
    }
}

impl std::ops::Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        // cheap exits dominate the condition-checking loops, where most
        // factors are exact 0 or 1
        if self.is_zero() || rhs.is_one() {
            return self.clone();
        }
        if rhs.is_zero() || self.is_one() {
            return rhs.clone();
        }
        let (a, b) = Cyclo::lift_pair(self, rhs);
        let t = table(a.n);
        let n = a.n as usize;
        let mut c = vec![BigRational::zero(); t.d];
        for (j, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let q = x * y;
                add_monomial(&mut c, &t, (j + k) % n, &q);
            }
        }
        Cyclo { n: a.n, c }
    }
}

impl std::ops::Div for &Cyclo {
    type Output = Cyclo;
    fn div(self, rhs: &Cyclo) -> Cyclo {
        self * &rhs.inv()
    }
}

impl std::ops::Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        let mut a = self.clone();
        for q in &mut a.c {
            if !q.is_zero() {
                *q = -q.clone();
            }
        }
        a
    }
}

macro_rules! owned_ops {
    ($($tr:ident :: $m:ident),*) => {$(
        impl std::ops::$tr for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo { std::ops::$tr::$m(&self, &rhs) }
        }
        impl std::ops::$tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo { std::ops::$tr::$m(&self, rhs) }
        }
        impl std::ops::$tr<Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo { std::ops::$tr::$m(self, &rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl std::ops::Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let sign = if q.is_negative() { "-" } else { "+" };
            let mag = q.abs();
            if first {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            if j == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "z{}^{}", self.n, j)?;
            } else {
                write!(f, "{}*z{}^{}", mag, self.n, j)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct CycloDoc {
    conductor: u64,
    coeffs: Vec<String>,
}

impl serde::Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloDoc {
            conductor: self.n,
            coeffs: self.c.iter().map(|q| q.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Cyclo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Cyclo, D::Error> {
        use serde::de::Error;
        let doc = CycloDoc::deserialize(d)?;
        if doc.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let d_expected = euler_phi(doc.conductor) as usize;
        if doc.coeffs.len() != d_expected {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for conductor {}, got {}",
                d_expected,
                doc.conductor,
                doc.coeffs.len()
            )));
        }
        let mut c = Vec::with_capacity(doc.coeffs.len());
        for s in &doc.coeffs {
            let q = BigRational::from_str(s)
                .map_err(|e| D::Error::custom(format!("bad rational {:?}: {}", s, e)))?;
            c.push(q);
        }
        Ok(Cyclo { n: doc.conductor, c })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cyclotomic_polynomials_match_known_tables() {
        let p = |v: &[i64]| v.iter().map(|&x| big(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(1), p(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), p(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(5), p(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), p(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), p(&[1, 0, -1, 0, 1]));
        // x^16 - x^8 + 1
        let mut c48 = vec![big(0); 17];
        c48[0] = big(1);
        c48[8] = big(-1);
        c48[16] = big(1);
        assert_eq!(cyclotomic_polynomial(48), c48);
        assert_eq!(euler_phi(48), 16);
    }

    #[test]
    fn roots_of_unity_have_expected_orders() {
        let z = Cyclo::root_of_unity(48, 1);
        assert!(z.is_primitive_root(48));
        assert!(!z.is_primitive_root(24));
        assert!(z.pow(48).is_one());
        assert_eq!(z.pow(24), Cyclo::from_int(-1));
        let z3 = z.pow(16);
        assert!(z3.is_primitive_root(3));
        // zeta_16 sits inside the conductor 48 field as zeta_48^3
        assert_eq!(Cyclo::root_of_unity(16, 1), z.pow(3));
    }

    #[test]
    fn square_roots_are_exact_and_positive() {
        let s2 = Cyclo::sqrt2();
        let s3 = Cyclo::sqrt3();
        let s6 = Cyclo::sqrt6();
        assert_eq!(&s2 * &s2, Cyclo::from_int(2));
        assert_eq!(&s3 * &s3, Cyclo::from_int(3));
        assert_eq!(&s6 * &s6, Cyclo::from_int(6));
        assert!((s2.embed().re - 1.4142135623730951).abs() < 1e-12);
        assert!((s3.embed().re - 1.7320508075688772).abs() < 1e-12);
        assert!((s6.embed().re - 2.449489742783178).abs() < 1e-12);
        assert!(s2.embed().im.abs() < 1e-12);
    }

    #[test]
    fn inverse_and_conjugation() {
        let z = Cyclo::root_of_unity(48, 5);
        assert!((&z * &z.inv()).is_one());
        assert!((&z * &z.conj()).is_one());
        let a = Cyclo::one() + Cyclo::root_of_unity(12, 1) + Cyclo::ratio(3, 7);
        assert!((&a * &a.inv()).is_one());
        assert_eq!(a.conj().conj(), a);
        let b = Cyclo::ratio(-2, 9) + Cyclo::root_of_unity(8, 3);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn cross_conductor_equality_and_arithmetic() {
        let m1 = Cyclo::from_int(-1);
        assert_eq!(Cyclo::root_of_unity(48, 24), m1);
        assert_eq!(Cyclo::root_of_unity(2, 1), m1);
        let z8a = Cyclo::root_of_unity(8, 1);
        let z8b = Cyclo::root_of_unity(48, 6);
        assert_eq!(z8a, z8b);
        let s = &z8a + &Cyclo::root_of_unity(12, 1);
        assert_eq!(s.conductor(), 24);
        let i_a = Cyclo::root_of_unity(4, 1);
        let i_b = Cyclo::root_of_unity(8, 2);
        assert_eq!(&i_a * &i_a, Cyclo::from_int(-1));
        assert_eq!(i_a, i_b);
    }

    #[test]
    fn rational_extraction() {
        let q = Cyclo::ratio(7, 3);
        assert_eq!(q.as_rational(), Some(BigRational::new(big(7), big(3))));
        assert_eq!(q.as_integer(), None);
        assert_eq!(Cyclo::from_int(11).as_integer(), Some(big(11)));
        let z = Cyclo::root_of_unity(48, 1);
        assert_eq!(z.as_rational(), None);
        // zeta + conj(zeta) for zeta_4 is zero, and is recognised as rational
        let w = Cyclo::root_of_unity(4, 1);
        assert_eq!((&w + &w.conj()).as_rational(), Some(BigRational::zero()));
    }

    #[test]
    fn embedding_matches_polar_form() {
        let z = Cyclo::root_of_unity(16, 15);
        let e = z.embed();
        let a = 2.0 * std::f64::consts::PI * 15.0 / 16.0;
        assert!((e.re - a.cos()).abs() < 1e-12);
        assert!((e.im - a.sin()).abs() < 1e-12);
    }

    #[test]
    fn serde_round_trip_is_exact() {
        let a = Cyclo::ratio(-5, 12) + Cyclo::root_of_unity(48, 7) * Cyclo::ratio(22, 7);
        let s = serde_json::to_string(&a).unwrap();
        let b: Cyclo = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.conductor(), b.conductor());
        assert_eq!(a.coeffs(), b.coeffs());
        let zero = Cyclo::zero();
        let s0 = serde_json::to_string(&zero).unwrap();
        assert_eq!(s0, serde_json::to_string(&Cyclo::zero()).unwrap());
    }

    #[test]
    fn division_and_pow() {
        let z = Cyclo::root_of_unity(48, 11);
        assert_eq!(z.pow(-1), z.inv());
        assert_eq!(z.pow(-3), z.inv().pow(3));
        let x = Cyclo::from_int(3) + Cyclo::root_of_unity(8, 1);
        let y = Cyclo::from_int(2) - Cyclo::root_of_unity(12, 5);
        assert_eq!(&(&x / &y) * &y, x);
    }
}
