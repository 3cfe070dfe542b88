//! Combinatorics of parabolic weight tuples.
//!
//! A tuple `(r, m, a_1..a_r)` lies in the weight simplex when
//! `a_1 >= a_2 >= ... >= a_r >= a_1 - m`; those tuples classify the radial
//! Toda solutions. This module provides the membership test, the gauge
//! normalization pushing a boundary tuple strictly inside, the stable
//! decomposition data, pairing certificates witnessing the weight symmetry,
//! and the asymptotic profiles (slopes and log-log coefficients) used as
//! boundary data by the solver.

use num::rational::BigRational;
use num::Zero;
use thiserror::Error;

use crate::cyclotomic::{char_poly_from_phases, CycPolynomial};
use crate::rat::{self, q, qi};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WeightError {
    #[error("weights are not sorted: a_{index} < a_{}", index + 1)]
    NotSorted { index: usize },
    #[error("lower bound violated: a_{r} < a_1 - m")]
    BoundViolated { r: usize },
    #[error("weight sum is {actual}, expected {expected}")]
    SumMismatch { expected: String, actual: String },
    #[error("empty weight tuple")]
    Empty,
    #[error("operation requires m = r, got m = {m}, r = {r}")]
    NotToda { r: usize, m: i64 },
    #[error("pairing certificate (k0={k0}, ell={ell}) is not valid for these weights")]
    BadCertificate { k0: usize, ell: i64 },
}

/// Parabolic weights `a_1 >= ... >= a_r >= a_1 - m` for rank `r` and pole
/// parameter `m`. Construction does not validate; call [`WeightTuple::validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTuple {
    pub r: usize,
    pub m: i64,
    pub a: Vec<BigRational>,
}

impl WeightTuple {
    pub fn new(m: i64, a: Vec<BigRational>) -> Self {
        WeightTuple { r: a.len(), m, a }
    }

    pub fn from_i64_pairs(m: i64, pairs: &[(i64, i64)]) -> Self {
        Self::new(m, pairs.iter().map(|&(p, qd)| q(p, qd)).collect())
    }

    pub fn sum(&self) -> BigRational {
        self.a.iter().sum()
    }

    /// Membership test for the weight simplex; reports the first violated
    /// inequality. When `target_sum` is given the total is checked as well.
    pub fn validate(&self, target_sum: Option<&BigRational>) -> Result<(), WeightError> {
        if self.a.is_empty() {
            return Err(WeightError::Empty);
        }
        for i in 0..self.r - 1 {
            if self.a[i] < self.a[i + 1] {
                return Err(WeightError::NotSorted { index: i + 1 });
            }
        }
        let lower = &self.a[0] - qi(self.m);
        if self.a[self.r - 1] < lower {
            return Err(WeightError::BoundViolated { r: self.r });
        }
        if let Some(t) = target_sum {
            let s = self.sum();
            if s != *t {
                return Err(WeightError::SumMismatch {
                    expected: rat::format_rational(t),
                    actual: rat::format_rational(&s),
                });
            }
        }
        Ok(())
    }

    /// Whether the tuple sits on the boundary `a_r = a_1 - m`.
    pub fn is_boundary(&self) -> bool {
        self.a[self.r - 1] == &self.a[0] - qi(self.m)
    }

    /// The tuple with every weight shifted by `nu` (used by the half-integer
    /// criterion before normalizing).
    pub fn shifted(&self, nu: &BigRational) -> WeightTuple {
        WeightTuple::new(self.m, self.a.iter().map(|x| x + nu).collect())
    }
}

/// Record of the frame change applied by [`normalize_weights`].
#[derive(Debug, Clone, PartialEq)]
pub struct Normalization {
    pub weights: WeightTuple,
    /// Rotation index `j`; `None` when the input was already interior.
    pub rotation: Option<usize>,
    /// `sum(a') - sum(a) = m (r - j)`.
    pub sum_delta: BigRational,
}

/// Push a boundary tuple strictly inside the simplex by the canonical frame
/// change: with `j` the last index where `a_j > a_{j+1} = a_r`, set
/// `a'_i = a_{j+i} + m` for `i <= r-j` and `a'_i = a_{i-r+j}` otherwise.
pub fn normalize_weights(w: &WeightTuple) -> Result<Normalization, WeightError> {
    w.validate(None)?;
    if !w.is_boundary() {
        return Ok(Normalization {
            weights: w.clone(),
            rotation: None,
            sum_delta: BigRational::zero(),
        });
    }
    let r = w.r;
    let bottom = w.a[r - 1].clone();
    let j = (0..r)
        .rev()
        .find(|&i| w.a[i] > bottom)
        .map(|i| i + 1)
        .expect("boundary tuple cannot be constant");
    let mut a = Vec::with_capacity(r);
    for i in 1..=r {
        if i <= r - j {
            a.push(&w.a[j + i - 1] + qi(w.m));
        } else {
            a.push(w.a[i + j - r - 1].clone());
        }
    }
    let out = WeightTuple::new(w.m, a);
    debug_assert!(out.validate(None).is_ok() && !out.is_boundary());
    Ok(Normalization {
        weights: out,
        rotation: Some(j),
        sum_delta: qi(w.m) * qi((r - j) as i64),
    })
}

/// Stable decomposition data of a weight tuple: the shifted values
/// `b_i = r a_i + m i`, the cyclic-invariance set `S`, and the block data
/// `(r_0, j_0, m_0, a_0)` of the stable pieces.
#[derive(Debug, Clone, PartialEq)]
pub struct StableDecomposition {
    pub b: Vec<BigRational>,
    pub r1: usize,
    pub s: Vec<usize>,
    pub r0: usize,
    pub j0: usize,
    pub m0: i64,
    pub a0: Vec<BigRational>,
    pub stable: bool,
}

pub fn stable_decomposition(w: &WeightTuple) -> Result<StableDecomposition, WeightError> {
    w.validate(None)?;
    let r = w.r;
    let b: Vec<BigRational> = (0..r)
        .map(|i| qi(r as i64) * &w.a[i] + qi(w.m) * qi((i + 1) as i64))
        .collect();
    // cyclic convention b_{i+r} = b_i
    let bc = |i: usize| -> &BigRational { &b[i % r] };
    let g = rat::gcd_u64(w.m.unsigned_abs(), r as u64) as usize;
    let r1 = r / g;
    let mut s = Vec::new();
    for j in 1..=r {
        if j % r1 != 0 {
            continue;
        }
        if (0..r).all(|i| bc(i + j) == bc(i)) {
            s.push(j);
        }
    }
    debug_assert!(s.contains(&r));
    let r0 = s[0];
    let j0 = r / r0;
    let m0 = w.m * r0 as i64 / r as i64;
    debug_assert_eq!(m0 * j0 as i64, w.m);
    let a0 = w.a[..r0].to_vec();
    let stable = s == vec![r];
    Ok(StableDecomposition {
        b,
        r1,
        s,
        r0,
        j0,
        m0,
        a0,
        stable,
    })
}

/// Witness `(k_0, ell)` of the weight symmetry
/// `a_i + a_j = -ell` for `i + j = r + 1 - k_0` and
/// `a_i + a_j = -ell - m` for `i + j = 2r + 1 - k_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingCertificate {
    pub k0: usize,
    pub ell: i64,
    /// The half-integer `nu = ell / 2`.
    pub nu: BigRational,
}

impl PairingCertificate {
    pub fn new(k0: usize, ell: i64) -> Self {
        PairingCertificate {
            k0,
            ell,
            nu: q(ell, 2),
        }
    }
}

/// Brute-force search over `k_0 in [0, r-1]` for all pairing certificates.
/// For each `k_0` the two index sets impose constant values on `a_i + a_j`;
/// a certificate exists iff those values are consistent with an integer `ell`.
pub fn find_pairing(w: &WeightTuple) -> Result<Vec<PairingCertificate>, WeightError> {
    w.validate(None)?;
    let r = w.r as i64;
    let mut out = Vec::new();
    for k0 in 0..w.r {
        let k = k0 as i64;
        let mut v1: Option<BigRational> = None;
        let mut v2: Option<BigRational> = None;
        let mut ok = true;
        for i in 1..=r {
            for j in 1..=r {
                let sum = &w.a[(i - 1) as usize] + &w.a[(j - 1) as usize];
                if i + j == r + 1 - k {
                    match &v1 {
                        None => v1 = Some(sum),
                        Some(v) if *v == sum => {}
                        _ => ok = false,
                    }
                } else if i + j == 2 * r + 1 - k {
                    match &v2 {
                        None => v2 = Some(sum),
                        Some(v) if *v == sum => {}
                        _ => ok = false,
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        // derive ell from the first nonempty constraint
        let ell = match (&v1, &v2) {
            (Some(v), _) => -v.clone(),
            (None, Some(v)) => -(v + qi(w.m)),
            (None, None) => continue,
        };
        if !rat::is_integer(&ell) {
            continue;
        }
        if let Some(v) = &v2 {
            if *v != -(&ell + qi(w.m)) {
                continue;
            }
        }
        out.push(PairingCertificate::new(k0, rat::as_i64(&ell).unwrap()));
    }
    Ok(out)
}

/// The refined per-shift form of the pairing condition: for every `s` with
/// `0 <= k0 + s r0 <= r - 1`, pairs with `i + j = r + 1 - (k0 + s r0)` must
/// satisfy `a_i + a_j = -ell + s m0`, and pairs with
/// `i + j = 2r + 1 - (k0 + s r0)` must satisfy `a_i + a_j = -ell - m + s m0`.
pub fn check_refined_pairing(w: &WeightTuple, cert: &PairingCertificate) -> bool {
    let dec = match stable_decomposition(w) {
        Ok(d) => d,
        Err(_) => return false,
    };
    let r = w.r as i64;
    let (r0, m0) = (dec.r0 as i64, dec.m0);
    for s in -2 * r..=2 * r {
        let shift = cert.k0 as i64 + s * r0;
        if !(0..=r - 1).contains(&shift) {
            continue;
        }
        for i in 1..=r {
            for j in 1..=r {
                let sum = &w.a[(i - 1) as usize] + &w.a[(j - 1) as usize];
                if i + j == r + 1 - shift && sum != qi(-cert.ell) + qi(s) * qi(m0) {
                    return false;
                }
                if i + j == 2 * r + 1 - shift && sum != qi(-cert.ell - w.m) + qi(s) * qi(m0) {
                    return false;
                }
            }
        }
    }
    true
}

/// The polynomial `prod (T - exp(2 pi i (a_i + nu)/m))` whose
/// conjugation-invariance is equivalent to the existence of a pairing.
pub fn nu_criterion_poly(w: &WeightTuple, nu: &BigRational) -> CycPolynomial {
    let phases: Vec<BigRational> = w.a.iter().map(|a| (a + nu) / qi(w.m)).collect();
    char_poly_from_phases(&phases)
}

/// Asymptotic data near both singular points: slopes of `log|e_i|` and the
/// log-log coefficients `k_i/2` (or the cyclic-order variants `k'_i/2` on the
/// boundary), plus the radial Toda slopes when `m = r`.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticProfile {
    /// Coefficient of `log|q|` near 0 for `log|e_i|`: `-a_i`.
    pub slope_zero: Vec<BigRational>,
    /// Log-log coefficients `k_i/2` (boundary case: `k'_i/2` inside the
    /// merged block).
    pub loglog: Vec<BigRational>,
    /// The integer numerators `k_i` (or `k'_i`).
    pub k: Vec<i64>,
    /// Coefficient of `log|q|` near infinity: `-(sum a + m(r+1)/2 - m i)/r`.
    pub slope_infty: Vec<BigRational>,
    pub boundary_case: bool,
    /// For `m = r`: Toda slope of `w_i` near 0, `-(a_i + i - 1)`.
    pub toda_slope_zero: Option<Vec<BigRational>>,
    /// For `m = r`: common Toda slope near infinity, `-sum a / r - (r-1)/2`.
    pub toda_slope_infty: Option<BigRational>,
}

fn interior_k(a: &[BigRational], i: usize) -> i64 {
    let same = a.iter().filter(|x| **x == a[i]).count() as i64;
    let before = a[..=i].iter().filter(|x| **x == a[i]).count() as i64;
    same - 2 * before + 1
}

pub fn asymptotic_profile(w: &WeightTuple) -> Result<AsymptoticProfile, WeightError> {
    w.validate(None)?;
    let r = w.r;
    let boundary = w.is_boundary();
    let mut k = vec![0i64; r];
    if !boundary {
        for (i, ki) in k.iter_mut().enumerate() {
            *ki = interior_k(&w.a, i);
        }
    } else {
        // merged block: indices with value a_r (= a_1 - m) then those with
        // value a_1, in the cyclic order j0+1..r, 1..j1
        let top = w.a[0].clone();
        let bottom = w.a[r - 1].clone();
        let sprime: Vec<usize> = (0..r)
            .filter(|&i| w.a[i] == bottom)
            .chain((0..r).filter(|&i| w.a[i] == top))
            .collect();
        let size = sprime.len() as i64;
        for (pos, &i) in sprime.iter().enumerate() {
            k[i] = size - 2 * (pos as i64 + 1) + 1;
        }
        for i in 0..r {
            if w.a[i] != top && w.a[i] != bottom {
                k[i] = interior_k(&w.a, i);
            }
        }
    }
    let sum = w.sum();
    let slope_zero: Vec<BigRational> = w.a.iter().map(|x| -x.clone()).collect();
    let loglog: Vec<BigRational> = k.iter().map(|&ki| q(ki, 2)).collect();
    let slope_infty: Vec<BigRational> = (1..=r as i64)
        .map(|i| -(&sum + qi(w.m) * q(r as i64 + 1, 2) - qi(w.m) * qi(i)) / qi(r as i64))
        .collect();
    let (toda_slope_zero, toda_slope_infty) = if w.m == r as i64 {
        let tz: Vec<BigRational> = (0..r).map(|i| -(&w.a[i] + qi(i as i64))).collect();
        let ti = -&sum / qi(r as i64) - q(r as i64 - 1, 2);
        (Some(tz), Some(ti))
    } else {
        (None, None)
    };
    Ok(AsymptoticProfile {
        slope_zero,
        loglog,
        k,
        slope_infty,
        boundary_case: boundary,
        toda_slope_zero,
        toda_slope_infty,
    })
}

/// One symmetry relation `w_i + w_j = slope * log|q|`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryPair {
    pub i: usize,
    pub j: usize,
    pub slope: i64,
}

/// All pairs `(i, j)`, `i <= j`, with `i + j + k0 - 1 = 0 mod r0`, each
/// carrying the slope `ell - r + 1 + k0` of `w_i + w_j` in `log|q|`.
/// Requires `m = r` and a certificate valid for `w`.
pub fn toda_symmetry(
    w: &WeightTuple,
    cert: &PairingCertificate,
) -> Result<Vec<SymmetryPair>, WeightError> {
    if w.m != w.r as i64 {
        return Err(WeightError::NotToda { r: w.r, m: w.m });
    }
    let certs = find_pairing(w)?;
    if !certs.contains(cert) {
        return Err(WeightError::BadCertificate {
            k0: cert.k0,
            ell: cert.ell,
        });
    }
    let dec = stable_decomposition(w)?;
    let r = w.r;
    let slope = cert.ell - r as i64 + 1 + cert.k0 as i64;
    let mut out = Vec::new();
    for i in 1..=r {
        for j in i..=r {
            if (i + j + cert.k0 - 1) % dec.r0 == 0 {
                out.push(SymmetryPair { i, j, slope });
            }
        }
    }
    Ok(out)
}

/// Fractional parts of `b_i = r a_i + m i` as a sorted multiset; invariant
/// under the normalization frame change.
pub fn b_fraction_multiset(w: &WeightTuple) -> Vec<BigRational> {
    let r = w.r as i64;
    let mut v: Vec<BigRational> = (0..w.r)
        .map(|i| rat::frac(&(qi(r) * &w.a[i] + qi(w.m) * qi(i as i64 + 1))))
        .collect();
    v.sort();
    v
}

/// Parse a comma separated weight list of exact rationals.
pub fn parse_weights(s: &str) -> Option<Vec<BigRational>> {
    s.split(',').map(rat::parse_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::poly_rationality;

    fn wt(m: i64, pairs: &[(i64, i64)]) -> WeightTuple {
        WeightTuple::from_i64_pairs(m, pairs)
    }

    #[test]
    fn validation_examples() {
        let w = wt(1, &[(1, 3), (0, 1), (-1, 3)]);
        assert!(w.validate(None).is_ok());
        assert!(w.validate(Some(&qi(0))).is_ok());

        let z = wt(5, &[(0, 1), (0, 1), (0, 1), (0, 1)]);
        assert!(z.validate(None).is_ok());

        let bad = wt(1, &[(0, 1), (-3, 2)]);
        assert_eq!(bad.validate(None), Err(WeightError::BoundViolated { r: 2 }));

        let unsorted = wt(1, &[(0, 1), (1, 2)]);
        assert_eq!(
            unsorted.validate(None),
            Err(WeightError::NotSorted { index: 1 })
        );
    }

    #[test]
    fn normalize_boundary_example() {
        // r=3, m=1, a=(1/2, 0, -1/2) -> a'=(1/2, 1/2, 0), j=2
        let w = wt(1, &[(1, 2), (0, 1), (-1, 2)]);
        let n = normalize_weights(&w).unwrap();
        assert_eq!(n.rotation, Some(2));
        assert_eq!(n.weights.a, vec![q(1, 2), q(1, 2), qi(0)]);
        assert_eq!(n.sum_delta, qi(1));
        assert!(!n.weights.is_boundary());

        let interior = wt(1, &[(1, 3), (0, 1), (-1, 3)]);
        let n = normalize_weights(&interior).unwrap();
        assert_eq!(n.rotation, None);
        assert_eq!(n.weights, interior);
    }

    #[test]
    fn normalize_after_half_shift() {
        // shift variant: nu = 1/2 applied before normalizing
        let w = wt(1, &[(0, 1), (-1, 2), (-1, 1)]);
        let shifted = w.shifted(&q(1, 2));
        assert_eq!(shifted.a, vec![q(1, 2), qi(0), q(-1, 2)]);
        let n = normalize_weights(&shifted).unwrap();
        assert_eq!(n.rotation, Some(2));
    }

    #[test]
    fn normalization_preserves_b_fractions() {
        for w in [
            wt(1, &[(1, 2), (0, 1), (-1, 2)]),
            wt(2, &[(1, 3), (0, 1), (-1, 3), (-5, 3)]),
            wt(3, &[(0, 1), (-1, 1), (-3, 1)]),
        ] {
            if w.validate(None).is_err() {
                continue;
            }
            let n = normalize_weights(&w).unwrap();
            assert_eq!(
                b_fraction_multiset(&w),
                b_fraction_multiset(&n.weights),
                "b-fraction multiset must survive the frame change"
            );
        }
    }

    #[test]
    fn stable_decomposition_examples() {
        // r=3, m=3, a=(0,-1,-2): b=(3,3,3), S={1,2,3}, r0=1, j0=3, m0=1
        let w = wt(3, &[(0, 1), (-1, 1), (-2, 1)]);
        let d = stable_decomposition(&w).unwrap();
        assert_eq!(d.b, vec![qi(3), qi(3), qi(3)]);
        assert_eq!(d.s, vec![1, 2, 3]);
        assert_eq!((d.r0, d.j0, d.m0), (1, 3, 1));
        assert!(!d.stable);

        // all-zero weights are stable for any r, m
        for (r, m) in [(2usize, 1i64), (3, 2), (5, 3)] {
            let w = WeightTuple::new(m, vec![qi(0); r]);
            let d = stable_decomposition(&w).unwrap();
            assert_eq!(d.s, vec![r], "zero weights r={r} m={m}");
            assert!(d.stable);
        }

        // r=4, m=2, a=(1/2, 0, -1/2, -1): direct evaluation gives b=(4,4,4,4),
        // S={2,4}, r0=2, j0=2, m0=1, a0=(1/2, 0)
        let w = wt(2, &[(1, 2), (0, 1), (-1, 2), (-1, 1)]);
        let d = stable_decomposition(&w).unwrap();
        assert_eq!(d.b, vec![qi(4); 4]);
        assert_eq!(d.s, vec![2, 4]);
        assert_eq!((d.r0, d.j0, d.m0), (2, 2, 1));
        assert_eq!(d.a0, vec![q(1, 2), qi(0)]);
        assert!(!d.stable);
    }

    #[test]
    fn stable_decomposition_invariants() {
        let samples = [
            wt(2, &[(1, 2), (0, 1), (-1, 2), (-1, 1)]),
            wt(3, &[(0, 1), (-1, 1), (-2, 1)]),
            wt(6, &[(1, 2), (0, 1), (-1, 2), (-1, 1), (-3, 2), (-2, 1)]),
            wt(1, &[(1, 5), (0, 1), (-1, 5)]),
        ];
        for w in samples {
            if w.validate(None).is_err() {
                continue;
            }
            let d = stable_decomposition(&w).unwrap();
            assert_eq!(w.r % d.r0, 0);
            assert!(d.s.iter().all(|&s| s % d.r0 == 0));
            // S mod r is closed under addition (a subgroup of Z/r)
            for &x in &d.s {
                for &y in &d.s {
                    let z = (x + y) % w.r;
                    let z = if z == 0 { w.r } else { z };
                    assert!(d.s.contains(&z), "S not closed under the group law");
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        // r=2, m=2, a=(-1/8,-7/8): certificate (0, 1)
        let w = wt(2, &[(-1, 8), (-7, 8)]);
        let certs = find_pairing(&w).unwrap();
        assert_eq!(certs, vec![PairingCertificate::new(0, 1)]);
        assert_eq!(certs[0].nu, q(1, 2));

        // zero weights: certificate (0, 0)
        for r in [2usize, 3, 5] {
            let w = WeightTuple::new(r as i64, vec![qi(0); r]);
            let certs = find_pairing(&w).unwrap();
            assert!(certs.contains(&PairingCertificate::new(0, 0)), "r={r}");
        }

        // r=2, m=1, a=(0,-1/3): no certificate
        let w = wt(1, &[(0, 1), (-1, 3)]);
        assert!(find_pairing(&w).unwrap().is_empty());
    }

    #[test]
    fn pairing_refined_and_nu_criterion() {
        let samples = [
            wt(2, &[(-1, 8), (-7, 8)]),
            wt(3, &[(0, 1), (-1, 1), (-2, 1)]),
            wt(2, &[(-1, 2), (-1, 2)]),
            wt(4, &[(0, 1), (-1, 1), (-3, 1), (-4, 1)]),
        ];
        for w in samples {
            if w.validate(None).is_err() {
                continue;
            }
            for cert in find_pairing(&w).unwrap() {
                assert!(
                    check_refined_pairing(&w, &cert),
                    "refined condition for {:?} {:?}",
                    w,
                    cert
                );
                // nu = ell/2 makes the shifted polynomial self-conjugate
                let p = nu_criterion_poly(&w, &cert.nu);
                assert_eq!(p.conj(), p, "nu-criterion reality for {:?}", w);
            }
        }
    }

    #[test]
    fn asymptotic_examples() {
        // r=3, m=1, a=(0,0,-1/2): k=(1,-1,0); slope_infty=(-1/6, 1/6, 1/2)
        let w = wt(1, &[(0, 1), (0, 1), (-1, 2)]);
        let p = asymptotic_profile(&w).unwrap();
        assert_eq!(p.k, vec![1, -1, 0]);
        assert_eq!(p.slope_infty, vec![q(-1, 6), q(1, 6), q(1, 2)]);
        assert!(!p.boundary_case);

        // all distinct, non-boundary: k = 0
        let w = wt(2, &[(1, 3), (0, 1), (-1, 3)]);
        let p = asymptotic_profile(&w).unwrap();
        assert_eq!(p.k, vec![0, 0, 0]);

        // boundary r=2, m=1, a=(1/2,-1/2): S' = {2, 1}, k'_2=1, k'_1=-1
        let w = wt(1, &[(1, 2), (-1, 2)]);
        let p = asymptotic_profile(&w).unwrap();
        assert!(p.boundary_case);
        assert_eq!(p.k, vec![-1, 1]);
    }

    #[test]
    fn asymptotic_block_sums_vanish() {
        let samples = [
            wt(1, &[(0, 1), (0, 1), (-1, 2)]),
            wt(2, &[(1, 2), (1, 2), (1, 2), (0, 1)]),
            wt(1, &[(1, 2), (-1, 2)]),
            wt(3, &[(0, 1), (0, 1), (0, 1)]),
        ];
        for w in samples {
            let p = asymptotic_profile(&w).unwrap();
            let total: i64 = p.k.iter().sum();
            assert_eq!(total, 0, "sum k_i over all blocks for {:?}", w);
        }
    }

    #[test]
    fn toda_slopes_when_m_equals_r() {
        let w = wt(2, &[(-1, 2), (-1, 2)]);
        let p = asymptotic_profile(&w).unwrap();
        assert_eq!(p.toda_slope_zero.unwrap(), vec![q(1, 2), q(-1, 2)]);
        assert_eq!(p.toda_slope_infty.unwrap(), qi(0));
    }

    #[test]
    fn toda_symmetry_examples() {
        // r=2, a=(-1/2,-1/2), cert (0,1): pair (1,2) slope 0
        let w = wt(2, &[(-1, 2), (-1, 2)]);
        let cert = PairingCertificate::new(0, 1);
        let pairs = toda_symmetry(&w, &cert).unwrap();
        assert_eq!(pairs, vec![SymmetryPair { i: 1, j: 2, slope: 0 }]);

        // zero weights, cert (0,0): pairs i+j = r+1 with slope 1-r
        for r in [3usize, 4] {
            let w = WeightTuple::new(r as i64, vec![qi(0); r]);
            let pairs = toda_symmetry(&w, &PairingCertificate::new(0, 0)).unwrap();
            for p in &pairs {
                assert_eq!(p.i + p.j, r + 1);
                assert_eq!(p.slope, 1 - r as i64);
            }
            assert_eq!(pairs.len(), r.div_ceil(2));
        }

        // no certificate for these weights: rejected
        let w = wt(2, &[(0, 1), (-1, 3)]);
        assert!(matches!(
            toda_symmetry(&w, &PairingCertificate::new(0, 0)),
            Err(WeightError::BadCertificate { .. })
        ));
    }

    #[test]
    fn trivial_solution_tuple_symmetries() {
        // a=(0,-1,-2), m=r=3: every pair has slope 0 (the w=0 solution)
        let w = wt(3, &[(0, 1), (-1, 1), (-2, 1)]);
        let certs = find_pairing(&w).unwrap();
        assert!(!certs.is_empty());
        for cert in certs {
            for p in toda_symmetry(&w, &cert).unwrap() {
                assert_eq!(p.slope, 0);
            }
        }
    }

    #[test]
    fn nu_poly_rationality_sanity() {
        // the half-shifted polynomial for (-1/8,-7/8), m=2 has real
        // (conjugation-invariant) but irrational coefficients
        let w = wt(2, &[(-1, 8), (-7, 8)]);
        let p = nu_criterion_poly(&w, &q(1, 2));
        assert_eq!(p.conj(), p);
        assert!(poly_rationality(&p).rational.is_none());
    }
}
