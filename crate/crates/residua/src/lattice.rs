//! Exponent vectors, integer vectors, monomial terms, and exact integer
//! linear algebra (dot products, primitive forms, fraction-free
//! determinants). Everything downstream is built from these primitives.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Exponent vector of a monomial z^a: fixed-length, nonnegative entries.
///
/// Ordering is lexicographic on the coordinates, which is the canonical
/// order used for every sorted list in this crate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<BigInt>);

impl ExponentVector {
    /// Builds an exponent vector, rejecting negative entries.
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.iter().any(|c| c.is_negative()) {
            return Err(Error::NegativeExponent);
        }
        Ok(ExponentVector(coords))
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero vector (the monomial 1).
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![BigInt::zero(); n])
    }

    /// The all-ones vector (the monomial z_1 ... z_n).
    pub fn ones(n: usize) -> Self {
        ExponentVector(vec![BigInt::one(); n])
    }

    /// The i-th unit vector (the variable z_i).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        ExponentVector(v)
    }

    /// Number of coordinates.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty vector (ambient dimension 0, never valid input).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate slice.
    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    /// Single coordinate.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    /// True if every coordinate is zero (the monomial 1).
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other.len())?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Componentwise difference; errors if any coordinate would go negative.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other.len())?;
        Self::new(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Componentwise difference clamped at zero, as in ideal quotients.
    pub fn saturating_sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other.len())?;
        Ok(ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if a >= b { a - b } else { BigInt::zero() })
                .collect(),
        ))
    }

    /// Componentwise maximum (the lcm of the two monomials).
    pub fn max(&self, other: &Self) -> Result<Self> {
        self.check_len(other.len())?;
        Ok(ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        ))
    }

    /// Scalar multiple k * a.
    pub fn scaled(&self, k: u64) -> Self {
        let k = BigInt::from(k);
        ExponentVector(self.0.iter().map(|c| c * &k).collect())
    }

    /// Divisibility of monomials: z^self divides z^other.
    pub fn divides(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Reinterprets the exponents as a signed integer vector.
    pub fn to_integer_vector(&self) -> IntegerVector {
        IntegerVector(self.0.clone())
    }

    fn check_len(&self, other: usize) -> Result<()> {
        if self.len() == other {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other,
            })
        }
    }
}

/// Signed integer vector, used for facet normals and valuation weights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerVector(Vec<BigInt>);

impl IntegerVector {
    /// Builds an integer vector; any signs are allowed.
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntegerVector(coords)
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(coords: &[i64]) -> Self {
        IntegerVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Number of coordinates.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty vector.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate slice.
    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    /// Single coordinate.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    /// True if every coordinate is zero.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Exact scalar product with an exponent vector.
    pub fn dot(&self, w: &ExponentVector) -> Result<BigInt> {
        if self.len() != w.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: w.len(),
            });
        }
        Ok(self.0.iter().zip(w.coords()).map(|(a, b)| a * b).sum())
    }

    /// Divides by the gcd of the entries; errors on the zero vector.
    pub fn make_primitive(&self) -> Result<Self> {
        let g = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(IntegerVector(self.0.iter().map(|c| c / &g).collect()))
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        IntegerVector(self.0.iter().map(|c| -c).collect())
    }
}

/// A single monomial term c * z^a of a polynomial, or the zero polynomial.
///
/// The zero polynomial is its own variant; a nonzero term never carries a
/// zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Zero,
    Monomial {
        coeff: BigInt,
        exponent: ExponentVector,
    },
}

impl Term {
    /// Builds a nonzero term; rejects a zero coefficient.
    pub fn monomial(coeff: BigInt, exponent: ExponentVector) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        Ok(Term::Monomial { coeff, exponent })
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        matches!(self, Term::Zero)
    }

    /// Coefficient and exponent of a nonzero term.
    pub fn as_monomial(&self) -> Option<(&BigInt, &ExponentVector)> {
        match self {
            Term::Zero => None,
            Term::Monomial { coeff, exponent } => Some((coeff, exponent)),
        }
    }
}

/// Exact determinant of a square integer matrix given as rows, by
/// fraction-free Bareiss elimination with row pivoting.
pub fn exact_determinant(rows: &[IntegerVector]) -> Result<BigInt> {
    let n = rows.len();
    for row in rows {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.0.clone()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // Bareiss guarantees this division is exact.
                debug_assert!((&t % &prev).is_zero());
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Rank over the rationals of an integer matrix given as rows, by
/// fraction-free elimination (no divisions; only the pivot count matters).
pub(crate) fn rank_rows(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let a = rows[r][col].clone();
        let pivot_tail = rows[r][col..].to_vec();
        for row in rows.iter_mut().skip(r + 1) {
            if !row[col].is_zero() {
                let b = row[col].clone();
                for (cell, p) in row[col..].iter_mut().zip(&pivot_tail) {
                    *cell = &*cell * &a - p * &b;
                }
            }
        }
        r += 1;
    }
    r
}
