//! Dense matrices over `Q(zeta_N)` and an exact, division-free
//! characteristic polynomial (Berkowitz's algorithm).

use num::rational::BigRational;
use num::One;

use crate::cyclotomic::{CycNumber, CycPolynomial};
use crate::rat;

/// Row-major square matrix over a cyclotomic field. All entries share one
/// modulus; mixed inputs are embedded into the lcm on construction.
#[derive(Debug, Clone)]
pub struct CycMatrix {
    n: usize,
    modulus: u64,
    entries: Vec<CycNumber>,
}

impl PartialEq for CycMatrix {
    fn eq(&self, other: &Self) -> bool {
        // value equality across moduli
        self.n == other.n
            && self
                .entries
                .iter()
                .zip(other.entries.iter())
                .all(|(a, b)| a == b)
    }
}

impl Eq for CycMatrix {}

impl CycMatrix {
    pub fn from_entries(n: usize, entries: Vec<CycNumber>) -> Self {
        assert_eq!(entries.len(), n * n);
        let modulus = entries
            .iter()
            .fold(1u64, |acc, e| rat::lcm_u64(acc, e.modulus()));
        let entries = entries.into_iter().map(|e| e.embed(modulus)).collect();
        CycMatrix {
            n,
            modulus,
            entries,
        }
    }

    pub fn zero(n: usize, modulus: u64) -> Self {
        CycMatrix {
            n,
            modulus,
            entries: vec![CycNumber::zero(modulus); n * n],
        }
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut m = Self::zero(n, modulus);
        for i in 0..n {
            *m.at_mut(i, i) = CycNumber::one(modulus);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn at(&self, i: usize, j: usize) -> &CycNumber {
        &self.entries[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut CycNumber {
        &mut self.entries[i * self.n + j]
    }

    /// 1-indexed accessor matching the textbook matrix positions.
    pub fn entry1(&self, i: usize, j: usize) -> &CycNumber {
        self.at(i - 1, j - 1)
    }

    pub fn set1(&mut self, i: usize, j: usize, v: CycNumber) {
        let n = self.n;
        let modulus = rat::lcm_u64(self.modulus, v.modulus());
        if modulus != self.modulus {
            self.modulus = modulus;
            for e in self.entries.iter_mut() {
                *e = e.embed(modulus);
            }
        }
        self.entries[(i - 1) * n + (j - 1)] = v.embed(modulus);
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.n, other.n);
        let modulus = rat::lcm_u64(self.modulus, other.modulus);
        let n = self.n;
        let mut out = CycMatrix::zero(n, modulus);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                let a = a.embed(modulus);
                for j in 0..n {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul(&b.embed(modulus));
                    let cur = out.at(i, j).add(&t);
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        let one = CycNumber::one(self.modulus);
        let zero = CycNumber::zero(self.modulus);
        for i in 0..self.n {
            for j in 0..self.n {
                let want = if i == j { &one } else { &zero };
                if self.at(i, j) != want {
                    return false;
                }
            }
        }
        true
    }

    /// Determinant via the characteristic polynomial:
    /// `det(M) = (-1)^n * charpoly(0)`.
    pub fn det(&self) -> CycNumber {
        let c0 = charpoly_exact(self).coeff(0);
        if self.n % 2 == 0 {
            c0
        } else {
            c0.neg()
        }
    }

    /// All entries rational, row by row.
    pub fn rational_entries(&self) -> Option<Vec<Vec<BigRational>>> {
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut row = Vec::with_capacity(self.n);
            for j in 0..self.n {
                row.push(self.at(i, j).as_rational()?);
            }
            rows.push(row);
        }
        Some(rows)
    }

    /// Evaluate every entry as a complex double.
    pub fn complex_embed(&self) -> Vec<Vec<num::complex::Complex64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).complex_embed()).collect())
            .collect()
    }
}

/// Exact characteristic polynomial `det(T I - M)` by Berkowitz's
/// division-free scheme: iterate over leading principal submatrices,
/// multiplying Toeplitz matrices built from the border products
/// `R A^i S`. No inverses, no pivoting, exact in any commutative ring.
pub fn charpoly_exact(m: &CycMatrix) -> CycPolynomial {
    let n = m.size();
    let modulus = m.modulus();
    assert!(n > 0);
    // c holds the coefficients of the charpoly of the current leading block,
    // highest degree first: c[0] = 1.
    let mut c: Vec<CycNumber> = vec![CycNumber::one(modulus)];
    for k in 1..=n {
        // block A_{k-1}, row R = M[k-1][0..k-1], col S = M[0..k-1][k-1]
        let a_scalar = m.at(k - 1, k - 1).clone();
        // q_i = R * A^i * S for i = 0..k-2
        let mut qs: Vec<CycNumber> = Vec::new();
        if k >= 2 {
            let mut v: Vec<CycNumber> = (0..k - 1).map(|i| m.at(i, k - 1).clone()).collect();
            for _ in 0..k - 1 {
                let mut dot = CycNumber::zero(modulus);
                for (i, vi) in v.iter().enumerate() {
                    if !vi.is_zero() && !m.at(k - 1, i).is_zero() {
                        dot = dot.add(&m.at(k - 1, i).mul(vi));
                    }
                }
                qs.push(dot);
                // v <- A_{k-1} * v
                let mut nv = vec![CycNumber::zero(modulus); k - 1];
                for (i, slot) in nv.iter_mut().enumerate() {
                    let mut acc = CycNumber::zero(modulus);
                    for (j, vj) in v.iter().enumerate() {
                        if !vj.is_zero() && !m.at(i, j).is_zero() {
                            acc = acc.add(&m.at(i, j).mul(vj));
                        }
                    }
                    *slot = acc;
                }
                v = nv;
            }
        }
        // first column of the (k+1) x k Toeplitz: (1, -a, -q_0, ..., -q_{k-2})
        let mut col: Vec<CycNumber> = Vec::with_capacity(k + 1);
        col.push(CycNumber::one(modulus));
        col.push(a_scalar.neg());
        for qv in qs.iter().take(k - 1) {
            col.push(qv.neg());
        }
        // c_new[i] = sum_j col[i - j] * c[j]
        let mut cn: Vec<CycNumber> = vec![CycNumber::zero(modulus); k + 1];
        for (j, cj) in c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            for (d, cd) in col.iter().enumerate() {
                if j + d <= k && !cd.is_zero() {
                    let cur = cn[j + d].add(&cd.mul(cj));
                    cn[j + d] = cur;
                }
            }
        }
        c = cn;
    }
    // c is highest-degree-first; CycPolynomial wants ascending
    c.reverse();
    debug_assert_eq!(c.last().unwrap().as_rational(), Some(BigRational::one()));
    CycPolynomial::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::root_of_unity;
    use crate::rat::{q, qi};

    fn rational_matrix(n: usize, vals: &[i64]) -> CycMatrix {
        CycMatrix::from_entries(
            n,
            vals.iter().map(|&v| CycNumber::from_int(v, 1)).collect(),
        )
    }

    #[test]
    fn charpoly_identity_2x2() {
        let m = CycMatrix::identity(2, 1);
        let p = charpoly_exact(&m);
        // (T-1)^2 = T^2 - 2T + 1
        assert_eq!(p.rational_coeffs().unwrap(), vec![qi(1), qi(-2), qi(1)]);
    }

    #[test]
    fn charpoly_known_3x3() {
        // M = [[3,1,0],[-3,0,1],[1,0,0]] has charpoly (T-1)^3
        let m = rational_matrix(3, &[3, 1, 0, -3, 0, 1, 1, 0, 0]);
        let p = charpoly_exact(&m);
        assert_eq!(
            p.rational_coeffs().unwrap(),
            vec![qi(-1), qi(3), qi(-3), qi(1)]
        );
        assert_eq!(m.det().as_rational(), Some(qi(1)));
    }

    #[test]
    fn charpoly_companion() {
        // companion of T^3 - b T^2 - a T - w: [[0,0,w],[1,0,a],[0,1,b]]
        let (b, a, w) = (qi(5), q(-2, 3), qi(7));
        let mut m = CycMatrix::zero(3, 1);
        m.set1(1, 3, CycNumber::from_rational(w.clone(), 1));
        m.set1(2, 1, CycNumber::one(1));
        m.set1(2, 3, CycNumber::from_rational(a.clone(), 1));
        m.set1(3, 2, CycNumber::one(1));
        m.set1(3, 3, CycNumber::from_rational(b.clone(), 1));
        let p = charpoly_exact(&m);
        assert_eq!(p.rational_coeffs().unwrap(), vec![-w, -a, -b, qi(1)]);
    }

    #[test]
    fn charpoly_cyclotomic_entries() {
        // diag(zeta_3, zeta_3^2): charpoly T^2 + T + 1
        let z = root_of_unity(1, 3, 3).unwrap();
        let z2 = z.mul(&z);
        let mut m = CycMatrix::zero(2, 3);
        m.set1(1, 1, z);
        m.set1(2, 2, z2);
        let p = charpoly_exact(&m);
        assert_eq!(p.rational_coeffs().unwrap(), vec![qi(1), qi(1), qi(1)]);
    }

    #[test]
    fn matrix_product_and_identity() {
        let a = rational_matrix(2, &[1, 2, 3, 4]);
        let b = rational_matrix(2, &[0, 1, 1, 0]);
        let ab = a.mul(&b);
        assert_eq!(ab, rational_matrix(2, &[2, 1, 4, 3]));
        assert!(CycMatrix::identity(3, 4).is_identity());
    }
}
