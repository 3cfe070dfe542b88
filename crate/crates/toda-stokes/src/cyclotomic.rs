//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^(phi(N)-1)` of
//! `Q[x]/(Phi_N)`, always fully reduced, so equality is coordinate-wise and
//! rationality is decidable by inspection. Mixed moduli are merged by
//! embedding both operands into `Q(zeta_lcm)`. Floating point appears only
//! in [`CycNumber::complex_embed`]; every verdict-producing computation is
//! exact.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("denominator {den} does not divide the modulus {modulus}")]
    ModulusNotDivisible { den: u64, modulus: u64 },
    #[error("division by zero in Q(zeta_{modulus})")]
    DivisionByZero { modulus: u64 },
}

/// Euler totient by trial-division factorization; moduli here are small.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    let mut n0 = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= n0 {
        if n0 % p == 0 {
            while n0 % p == 0 {
                n0 /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if n0 > 1 {
        phi = phi / n0 * (n0 - 1);
    }
    phi
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Exact division of integer polynomials; `divisor` must be monic and divide
/// `num` exactly. Coefficients are degree-ascending.
fn int_poly_exact_div(num: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    assert!(divisor.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = divisor.len() - 1;
    if rem.len() <= dd {
        assert!(rem.iter().all(|c| c.is_zero()));
        return vec![BigInt::zero()];
    }
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            quot[k] = c.clone();
            for (i, d) in divisor.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    quot
}

/// The `N`-th cyclotomic polynomial `Phi_N`, degree-ascending integer
/// coefficients, computed by dividing `x^N - 1` by `Phi_d` over the proper
/// divisors `d | N`. Results are memoized globally.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        let mut cur = num;
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_polynomial(d);
            cur = int_poly_exact_div(&cur, &phi_d);
        }
        cur
    };
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| result.clone());
    result
}

/// Reduce a degree-ascending rational coefficient vector modulo `Phi_N`,
/// returning exactly `phi(N)` coordinates.
fn reduce_mod_phi(mut coeffs: Vec<BigRational>, n: u64) -> Vec<BigRational> {
    let phi = euler_phi(n) as usize;
    let min_poly = cyclotomic_polynomial(n);
    while coeffs.len() > phi {
        let top = coeffs.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = coeffs.len() - phi; // x^(phi+k) term
        for (i, c) in min_poly.iter().take(phi).enumerate() {
            let t = &top * BigRational::from(c.clone());
            coeffs[k + i] -= t;
        }
    }
    coeffs.resize(phi, BigRational::zero());
    coeffs
}

/// An element of `Q(zeta_N)` in canonical power-basis coordinates.
#[derive(Clone)]
pub struct CycNumber {
    modulus: u64,
    coords: Vec<BigRational>,
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc(N={}; {})", self.modulus, self)
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}*z^{}", c, k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycNumber {
    pub fn zero(modulus: u64) -> Self {
        let phi = euler_phi(modulus) as usize;
        CycNumber {
            modulus,
            coords: vec![BigRational::zero(); phi],
        }
    }

    pub fn one(modulus: u64) -> Self {
        Self::from_rational(BigRational::one(), modulus)
    }

    pub fn from_rational(value: BigRational, modulus: u64) -> Self {
        let mut x = Self::zero(modulus);
        x.coords[0] = value;
        x
    }

    pub fn from_int(value: i64, modulus: u64) -> Self {
        Self::from_rational(rat::qi(value), modulus)
    }

    /// `zeta_N^k`, reduced to canonical coordinates.
    pub fn zeta_pow(k: u64, modulus: u64) -> Self {
        let k = (k % modulus) as usize;
        let mut dense = vec![BigRational::zero(); k + 1];
        dense[k] = BigRational::one();
        CycNumber {
            modulus,
            coords: reduce_mod_phi(dense, modulus),
        }
    }

    /// Reduce a degree-ascending coefficient vector (arbitrary length) into
    /// canonical coordinates of `Q(zeta_N)`.
    pub fn from_dense(coeffs: Vec<BigRational>, modulus: u64) -> Self {
        CycNumber {
            modulus,
            coords: reduce_mod_phi(coeffs, modulus),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The rational value when every non-constant coordinate vanishes.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Embed into `Q(zeta_new)` for `modulus | new`.
    pub fn embed(&self, new_modulus: u64) -> Self {
        assert!(
            new_modulus % self.modulus == 0,
            "embedding requires {} | {}",
            self.modulus,
            new_modulus
        );
        if new_modulus == self.modulus {
            return self.clone();
        }
        let step = (new_modulus / self.modulus) as usize;
        let mut dense = vec![BigRational::zero(); (self.coords.len() - 1) * step + 1];
        for (k, c) in self.coords.iter().enumerate() {
            dense[k * step] = c.clone();
        }
        Self::from_dense(dense, new_modulus)
    }

    fn unify(a: &CycNumber, b: &CycNumber) -> (CycNumber, CycNumber) {
        if a.modulus == b.modulus {
            (a.clone(), b.clone())
        } else {
            let n = rat::lcm_u64(a.modulus, b.modulus);
            (a.embed(n), b.embed(n))
        }
    }

    pub fn add(&self, other: &CycNumber) -> CycNumber {
        let (mut a, b) = Self::unify(self, other);
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &CycNumber) -> CycNumber {
        let (mut a, b) = Self::unify(self, other);
        for (x, y) in a.coords.iter_mut().zip(b.coords.iter()) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> CycNumber {
        let mut a = self.clone();
        for x in a.coords.iter_mut() {
            *x = -x.clone();
        }
        a
    }

    pub fn mul(&self, other: &CycNumber) -> CycNumber {
        let (a, b) = Self::unify(self, other);
        if a.is_zero() || b.is_zero() {
            return Self::zero(a.modulus);
        }
        let mut dense = vec![BigRational::zero(); a.coords.len() + b.coords.len() - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                dense[i + j] += x * y;
            }
        }
        Self::from_dense(dense, a.modulus)
    }

    pub fn scale(&self, by: &BigRational) -> CycNumber {
        let mut a = self.clone();
        for x in a.coords.iter_mut() {
            *x *= by;
        }
        a
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_N`, which is irreducible over `Q`.
    pub fn invert(&self) -> Result<CycNumber, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero {
                modulus: self.modulus,
            });
        }
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.modulus)
            .into_iter()
            .map(BigRational::from)
            .collect();
        // Invariants: r0 = u0 * self (mod Phi), r1 = u1 * self (mod Phi).
        let mut r0 = phi;
        let mut r1 = trim(self.coords.clone());
        let mut u0 = vec![BigRational::zero()];
        let mut u1 = vec![BigRational::one()];
        while poly_degree(&r1) > 0 {
            let (q, rem) = poly_div_rem(&r0, &r1);
            let u2 = poly_sub(&u0, &poly_mul(&q, &u1));
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = u2;
        }
        let c = r1[0].clone();
        assert!(!c.is_zero(), "Phi_N must be irreducible");
        let inv_c = BigRational::one() / c;
        let coeffs: Vec<BigRational> = u1.into_iter().map(|x| x * &inv_c).collect();
        Ok(Self::from_dense(coeffs, self.modulus))
    }

    pub fn pow(&self, e: i64) -> Result<CycNumber, CycError> {
        if e < 0 {
            return self.invert()?.pow(-e);
        }
        let mut acc = Self::one(self.modulus);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Galois automorphism `zeta -> zeta^t` for `gcd(t, N) = 1`.
    pub fn galois(&self, t: u64) -> CycNumber {
        assert_eq!(rat::gcd_u64(t % self.modulus, self.modulus), 1);
        let n = self.modulus;
        let mut dense = vec![BigRational::zero(); n as usize];
        for (k, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                let e = ((k as u64) * t % n) as usize;
                dense[e] += c;
            }
        }
        Self::from_dense(dense, n)
    }

    /// Complex conjugation `zeta -> zeta^(-1)`.
    pub fn conj(&self) -> CycNumber {
        if self.modulus == 1 {
            return self.clone();
        }
        self.galois(self.modulus - 1)
    }

    /// Numerical evaluation at `zeta_N = exp(2*pi*i/N)` in double precision.
    pub fn complex_embed(&self) -> Complex64 {
        let zeta = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.modulus as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coords.iter().rev() {
            acc = acc * zeta + Complex64::new(rat::to_f64(c), 0.0);
        }
        acc
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::unify(self, other);
        a.coords == b.coords
    }
}

impl Eq for CycNumber {}

/// `exp(2*pi*i*num/den)` represented in `Q(zeta_N)`; requires `den | N`.
pub fn root_of_unity(num: i64, den: u64, modulus: u64) -> Result<CycNumber, CycError> {
    if den == 0 || modulus % den != 0 {
        return Err(CycError::ModulusNotDivisible { den, modulus });
    }
    let step = modulus / den;
    let k = num.rem_euclid(den as i64) as u64 * step;
    Ok(CycNumber::zeta_pow(k, modulus))
}

/// `exp(2*pi*i*c)` for a rational phase `c`, in the smallest natural modulus
/// (the denominator of the fractional part of `c`).
pub fn root_of_unity_for(c: &BigRational) -> CycNumber {
    let f = rat::frac(c);
    let den = rat::denom_u64(&f);
    let num = (&f * BigRational::from(BigInt::from(den)))
        .to_integer()
        .to_i64()
        .expect("phase numerator exceeds i64");
    root_of_unity(num, den, den).unwrap()
}

// ---- dense rational polynomial helpers (degree-ascending) ----

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

fn poly_degree(v: &[BigRational]) -> usize {
    let mut d = v.len();
    while d > 1 && v[d - 1].is_zero() {
        d -= 1;
    }
    d - 1
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
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
    trim(out)
}

fn poly_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = poly_degree(b);
    let lead = b[db].clone();
    assert!(!lead.is_zero());
    let mut rem = a.to_vec();
    let mut da = poly_degree(&rem);
    if da < db {
        return (vec![BigRational::zero()], trim(rem));
    }
    let mut quot = vec![BigRational::zero(); da - db + 1];
    while da >= db && !(da == 0 && rem[0].is_zero()) {
        let c = &rem[da] / &lead;
        if !c.is_zero() {
            quot[da - db] = c.clone();
            for i in 0..=db {
                let t = &c * &b[i];
                rem[da - db + i] -= t;
            }
        }
        if da == db {
            break;
        }
        da -= 1;
    }
    (trim(quot), trim(rem))
}

/// A monic-aware polynomial with coefficients in a single `Q(zeta_N)`,
/// degree-ascending. Houses characteristic polynomials and the products
/// `prod (T - exp(2*pi*i*c_i))`.
#[derive(Clone)]
pub struct CycPolynomial {
    modulus: u64,
    coeffs: Vec<CycNumber>,
}

impl PartialEq for CycPolynomial {
    fn eq(&self, other: &Self) -> bool {
        // value equality: coefficients are compared across moduli
        self.coeffs.len() == other.coeffs.len()
            && self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .all(|(a, b)| a == b)
    }
}

impl Eq for CycPolynomial {}

impl fmt::Debug for CycPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycPoly(N={};", self.modulus)?;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            write!(f, " [{}] T^{}", c, k)?;
        }
        write!(f, ")")
    }
}

impl CycPolynomial {
    pub fn new(coeffs: Vec<CycNumber>) -> Self {
        assert!(!coeffs.is_empty());
        let modulus = coeffs
            .iter()
            .fold(1u64, |acc, c| rat::lcm_u64(acc, c.modulus()));
        let mut coeffs: Vec<CycNumber> = coeffs.into_iter().map(|c| c.embed(modulus)).collect();
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        CycPolynomial { modulus, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> CycNumber {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| CycNumber::zero(self.modulus))
    }

    pub fn coeffs(&self) -> &[CycNumber] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().unwrap().as_rational() == Some(BigRational::one())
    }

    /// The elementary symmetric function `e_k` of the roots of a monic
    /// polynomial: `e_k = (-1)^k * coeff(deg - k)`.
    pub fn elem_symmetric(&self, k: usize) -> CycNumber {
        assert!(self.is_monic() && k <= self.degree());
        let c = self.coeff(self.degree() - k);
        if k % 2 == 0 {
            c
        } else {
            c.neg()
        }
    }

    /// Coordinate-wise complex conjugation of all coefficients.
    pub fn conj(&self) -> CycPolynomial {
        CycPolynomial::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn eval(&self, x: &CycNumber) -> CycNumber {
        let n = rat::lcm_u64(self.modulus, x.modulus());
        let x = x.embed(n);
        let mut acc = CycNumber::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&x).add(&c.embed(n));
        }
        acc
    }

    /// All-coefficient rationality: `Some(rational coefficients)` iff every
    /// coefficient is rational.
    pub fn rational_coeffs(&self) -> Option<Vec<BigRational>> {
        self.coeffs.iter().map(|c| c.as_rational()).collect()
    }

    /// Scale the variable: returns the polynomial with roots `s * root`,
    /// i.e. `s^deg * P(T/s)` for monic `P`.
    pub fn scale_roots(&self, s: &CycNumber) -> CycPolynomial {
        let n = rat::lcm_u64(self.modulus, s.modulus());
        let d = self.degree();
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut p = CycNumber::one(n); // s^(d-k)
        for k in (0..=d).rev() {
            coeffs.push((self.coeff(k).embed(n).mul(&p), k));
            p = p.mul(&s.embed(n));
        }
        coeffs.sort_by_key(|(_, k)| *k);
        CycPolynomial::new(coeffs.into_iter().map(|(c, _)| c).collect())
    }
}

/// Rationality verdict for a cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalityVerdict {
    /// Present iff every coefficient is rational.
    pub rational: Option<Vec<BigRational>>,
    /// True iff rational with all denominators 1.
    pub integral: bool,
}

pub fn poly_rationality(p: &CycPolynomial) -> RationalityVerdict {
    let rational = p.rational_coeffs();
    let integral = rational
        .as_ref()
        .map(|cs| cs.iter().all(rat::is_integer))
        .unwrap_or(false);
    RationalityVerdict { rational, integral }
}

/// Expand `prod_i (T - exp(2*pi*i*c_i))` exactly. The modulus is the lcm of
/// the phase denominators. Intermediate coefficients are accumulated in the
/// group ring `Q[Z/N]` (plain exponent vectors) and reduced once at the end,
/// which keeps the expansion cheap even for large lcm moduli.
pub fn char_poly_from_phases(phases: &[BigRational]) -> CycPolynomial {
    assert!(!phases.is_empty());
    let mut n = 1u64;
    for c in phases {
        n = rat::lcm_u64(n, rat::denom_u64(&rat::frac(c)));
    }
    let exps: Vec<u64> = phases
        .iter()
        .map(|c| {
            let f = rat::frac(c);
            let den = rat::denom_u64(&f);
            let num = (&f * BigRational::from(BigInt::from(den)))
                .to_integer()
                .to_u64()
                .unwrap();
            num * (n / den) % n
        })
        .collect();
    let r = phases.len();
    // coeff[k] is a dense exponent vector over Z/N.
    let mut acc: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n as usize]; r + 1];
    acc[0][0] = BigRational::one();
    for (step, &e) in exps.iter().enumerate() {
        // multiply by (T - zeta^e): new[k] = old[k-1] - zeta^e * old[k]
        for k in (0..=step + 1).rev() {
            let mut row = vec![BigRational::zero(); n as usize];
            if k > 0 {
                row.clone_from(&acc[k - 1]);
            }
            if k <= step {
                for (j, c) in acc[k].iter().enumerate() {
                    if !c.is_zero() {
                        let idx = (j as u64 + e) % n;
                        row[idx as usize] -= c;
                    }
                }
            }
            acc[k] = row;
        }
    }
    let coeffs: Vec<CycNumber> = acc
        .into_iter()
        .map(|dense| CycNumber::from_dense(dense, n))
        .collect();
    CycPolynomial::new(coeffs)
}
