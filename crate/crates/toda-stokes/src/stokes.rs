//! Exact Stokes data of the rank-`r` meromorphic connection attached to a
//! weight tuple: the twist scalar `omega`, the Stokes factor `A` with its
//! unipotent factorization `A = A2 * A1`, the formal-monodromy style matrix
//! `C1`, and the monodromy `M = C1^{-1} A`.
//!
//! Conventions. `C1` carries `omega` at position `(1, r)` with ones on the
//! subdiagonal, matching the displayed block matrices rather than the
//! alternative `(r, 1)` placement; with that choice the exact identity is
//!
//! ```text
//! charpoly(C1^{-1} A) = T^r - sum_j alpha_j T^(r-2j)
//!                           - sum_j beta_j T^(r-2j+1) - omega^{-1}
//! ```
//!
//! The constant term is `-omega^{-1}` (not `-omega`): it must equal
//! `P(0) = (-1)^r exp(2 pi i sum a_i)` of `P(T) = prod (T - exp(2 pi i a_i))`,
//! and `-omega^{-1} = (-1)^r exp(2 pi i sum a_i)` holds identically while
//! `-omega` would correspond to the reversed tuple. Both statements are
//! pinned by the r=2 and r=3 hand computations in the tests and guarded by
//! the symbolic identity suite over random `alpha, beta, omega`.

use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

use crate::cyclotomic::{char_poly_from_phases, root_of_unity_for, CycNumber, CycPolynomial};
use crate::matrix::{charpoly_exact, CycMatrix};
use crate::rat::{self, q, qi};
use crate::weights::WeightTuple;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StokesError {
    #[error("constant term of P does not equal -omega^(-1); inconsistent (P, omega) pair")]
    ConventionMismatch,
    #[error("polynomial degree {got} does not match rank {want} or is not monic")]
    DegreeMismatch { got: usize, want: usize },
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(&'static str),
}

/// Exact Stokes data of the connection attached to a weight tuple.
#[derive(Debug, Clone)]
pub struct StokesSystem {
    pub r: usize,
    /// `b = -sum a_j - (r-1)/2`.
    pub b: BigRational,
    /// `omega = exp(2 pi i b)`.
    pub omega: CycNumber,
    /// `alpha_j`, `j = 1..floor((r-1)/2)`.
    pub alpha: Vec<CycNumber>,
    /// `beta_j`, `j = 1..floor(r/2)`.
    pub beta: Vec<CycNumber>,
    pub c1: CycMatrix,
    pub a: CycMatrix,
    pub a1: CycMatrix,
    pub a2: CycMatrix,
    /// Monodromy `M = C1^{-1} A`.
    pub m: CycMatrix,
    /// `prod (T - exp(2 pi i a_i))`, equal to `charpoly(M)`.
    pub char_poly: CycPolynomial,
}

/// `b = -sum a_j - (r-1)/2` and `omega = exp(2 pi i b)`.
pub fn omega_from_weights(w: &WeightTuple) -> (BigRational, CycNumber) {
    let b = -w.sum() - q(w.r as i64 - 1, 2);
    let omega = root_of_unity_for(&b);
    (b, omega)
}

/// Read `alpha_j` and `beta_j` off a monic degree-`r` polynomial known to
/// satisfy the displayed identity: `beta_j = -coeff(T^{r-2j+1})`,
/// `alpha_j = -coeff(T^{r-2j})`. The constant term must equal
/// `-omega^{-1}`, otherwise the `(P, omega)` pair mixes conventions.
pub fn extract_alpha_beta(
    p: &CycPolynomial,
    omega: &CycNumber,
) -> Result<(Vec<CycNumber>, Vec<CycNumber>), StokesError> {
    let r = p.degree();
    if !p.is_monic() {
        return Err(StokesError::DegreeMismatch { got: r, want: r });
    }
    let expect_const = omega
        .invert()
        .map_err(|_| StokesError::ConventionMismatch)?
        .neg();
    if p.coeff(0) != expect_const {
        return Err(StokesError::ConventionMismatch);
    }
    let beta: Vec<CycNumber> = (1..=r / 2).map(|j| p.coeff(r - 2 * j + 1).neg()).collect();
    let alpha: Vec<CycNumber> = (1..=(r - 1) / 2).map(|j| p.coeff(r - 2 * j).neg()).collect();
    Ok((alpha, beta))
}

/// Assemble `C1`, `A`, `A1`, `A2`, `M` from explicit `alpha`, `beta`,
/// `omega`. Entry positions (1-indexed, `h = floor(r/2)`):
/// `beta_j` at `(h+j, h-j+1)` and `alpha_j` at `(h+j+1, h-j+1)`.
pub fn assemble(
    r: usize,
    alpha: &[CycNumber],
    beta: &[CycNumber],
    omega: &CycNumber,
) -> (CycMatrix, CycMatrix, CycMatrix, CycMatrix, CycMatrix) {
    assert_eq!(beta.len(), r / 2);
    assert_eq!(alpha.len(), (r - 1) / 2);
    let n = alpha
        .iter()
        .chain(beta.iter())
        .fold(omega.modulus(), |acc, x| rat::lcm_u64(acc, x.modulus()));
    let h = r / 2;
    let mut a1 = CycMatrix::identity(r, n);
    for (j, bj) in beta.iter().enumerate() {
        let j = j + 1;
        a1.set1(h + j, h - j + 1, bj.clone());
    }
    let mut a2 = CycMatrix::identity(r, n);
    for (j, aj) in alpha.iter().enumerate() {
        let j = j + 1;
        a2.set1(h + j + 1, h - j + 1, aj.clone());
    }
    let a = a2.mul(&a1);
    let mut c1 = CycMatrix::zero(r, n);
    for i in 1..r {
        c1.set1(i + 1, i, CycNumber::one(n));
    }
    c1.set1(1, r, omega.embed(n));
    // C1^{-1}: ones at (i, i+1), omega^{-1} at (r, 1)
    let mut c1_inv = CycMatrix::zero(r, n);
    for i in 1..r {
        c1_inv.set1(i, i + 1, CycNumber::one(n));
    }
    c1_inv.set1(r, 1, omega.invert().expect("omega is a root of unity"));
    let m = c1_inv.mul(&a);
    (c1, a, a1, a2, m)
}

/// The polynomial `T^r - sum alpha_j T^(r-2j) - sum beta_j T^(r-2j+1) - omega^{-1}`.
pub fn predicted_charpoly(
    r: usize,
    alpha: &[CycNumber],
    beta: &[CycNumber],
    omega: &CycNumber,
) -> CycPolynomial {
    let n = alpha
        .iter()
        .chain(beta.iter())
        .fold(omega.modulus(), |acc, x| rat::lcm_u64(acc, x.modulus()));
    let mut coeffs = vec![CycNumber::zero(n); r + 1];
    coeffs[r] = CycNumber::one(n);
    coeffs[0] = omega.invert().expect("omega invertible").neg().embed(n);
    for (j, bj) in beta.iter().enumerate() {
        let j = j + 1;
        coeffs[r - 2 * j + 1] = coeffs[r - 2 * j + 1].add(&bj.neg());
    }
    for (j, aj) in alpha.iter().enumerate() {
        let j = j + 1;
        coeffs[r - 2 * j] = coeffs[r - 2 * j].add(&aj.neg());
    }
    CycPolynomial::new(coeffs)
}

/// Build the full Stokes system of a weight tuple and verify every
/// structural invariant before returning.
pub fn build_system(w: &WeightTuple) -> Result<StokesSystem, StokesError> {
    let r = w.r;
    let (b, omega) = omega_from_weights(w);
    let p = char_poly_from_phases(&w.a);
    let (alpha, beta) = extract_alpha_beta(&p, &omega)?;
    let (c1, a, a1, a2, m) = assemble(r, &alpha, &beta, &omega);
    // invariants
    if a2.mul(&a1) != a {
        return Err(StokesError::InternalConsistency("A != A2*A1"));
    }
    if a.det().as_rational() != Some(BigRational::one()) {
        return Err(StokesError::InternalConsistency("det A != 1"));
    }
    let want_det = if r % 2 == 0 { omega.neg() } else { omega.clone() };
    if c1.det() != want_det {
        return Err(StokesError::InternalConsistency(
            "det C1 != (-1)^(r-1) omega",
        ));
    }
    let cp = charpoly_exact(&m);
    if cp != p.scale_roots(&CycNumber::one(p.modulus())) && cp != p {
        return Err(StokesError::InternalConsistency("charpoly(M) != P"));
    }
    Ok(StokesSystem {
        r,
        b,
        omega,
        alpha,
        beta,
        c1,
        a,
        a1,
        a2,
        m,
        char_poly: p,
    })
}

/// The `2r` Stokes factors `C1^j A1 C1^{-j}`, `C1^j A2 C1^{-j}` for
/// `j = 0..r-1`, in sector order (the `A1`-type factor first within each `j`).
pub fn sector_ladder(sys: &StokesSystem) -> Vec<CycMatrix> {
    let n = sys.a.modulus();
    let r = sys.r;
    let mut out = Vec::with_capacity(2 * r);
    let mut cj = CycMatrix::identity(r, n);
    let mut cj_inv = CycMatrix::identity(r, n);
    // C1^{-1} rebuilt locally
    let mut c1_inv = CycMatrix::zero(r, n);
    for i in 1..r {
        c1_inv.set1(i, i + 1, CycNumber::one(n));
    }
    c1_inv.set1(r, 1, sys.omega.invert().expect("omega invertible"));
    for _ in 0..r {
        out.push(cj.mul(&sys.a1).mul(&cj_inv));
        out.push(cj.mul(&sys.a2).mul(&cj_inv));
        cj = cj.mul(&sys.c1);
        cj_inv = c1_inv.mul(&cj_inv);
    }
    out
}

/// Is every entry of `m` an integer?
pub fn has_integer_entries(m: &CycMatrix) -> bool {
    m.rational_entries()
        .map(|rows| rows.iter().flatten().all(rat::is_integer))
        .unwrap_or(false)
}

/// Rationality transfer: `P in Q[T]` iff all `alpha, beta` rational and
/// `omega = +-1`; `P in Z[T]` iff all integral and `omega = +-1`.
pub fn rationality_transfer(sys: &StokesSystem) -> (bool, bool) {
    let omega_pm1 = sys.omega.as_rational().map(|x| {
        x == BigRational::one() || x == -BigRational::one()
    });
    let all_rat = sys
        .alpha
        .iter()
        .chain(sys.beta.iter())
        .all(|x| x.is_rational())
        && omega_pm1 == Some(true);
    let all_int = all_rat
        && sys
            .alpha
            .iter()
            .chain(sys.beta.iter())
            .all(|x| x.as_rational().map(|v| rat::is_integer(&v)).unwrap_or(false));
    (all_rat, all_int)
}
