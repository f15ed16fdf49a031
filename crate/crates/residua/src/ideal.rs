//! Monomial ideals in the local ring at the origin, represented by their
//! unique minimal generator antichain. Membership is componentwise
//! divisibility; all staircase enumerations are exact.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::lattice::ExponentVector;
use crate::polyhedron::{
    advance, box_volume_guard, membership_mask, point_from_indices, NewtonPolyhedron,
};
use crate::Result;

/// A monomial ideal, stored as its sorted minimal generator antichain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

/// The monomials outside an m-primary ideal: a basis of the Artinian
/// quotient ring, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis {
    monomials: Vec<ExponentVector>,
}

impl StandardBasis {
    /// The standard monomials.
    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    /// Vector-space dimension of the quotient ring.
    pub fn count(&self) -> usize {
        self.monomials.len()
    }
}

impl MonomialIdeal {
    /// Builds the ideal generated by the given exponents: deduplicates,
    /// drops divisible generators, sorts. The input order is forgotten.
    pub fn new(gens: Vec<ExponentVector>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroAmbientDimension);
        }
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            if g.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.len(),
                });
            }
        }
        let mut sorted = gens;
        sorted.sort();
        sorted.dedup();
        let minimal: Vec<ExponentVector> = sorted
            .iter()
            .filter(|g| !sorted.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        Ok(MonomialIdeal { n, gens: minimal })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(gens: &[&[i64]], n: usize) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| ExponentVector::from_ints(g))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens, n)
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// The minimal generators, sorted lexicographically.
    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    /// Membership of a monomial: some generator divides it.
    pub fn contains_monomial(&self, q: &ExponentVector) -> Result<bool> {
        if q.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: q.len(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides(q)))
    }

    /// True iff the variety of the ideal is the origin alone, i.e. every
    /// variable has a positive pure-power generator.
    pub fn is_m_primary(&self) -> bool {
        (0..self.n).all(|i| self.pure_power_exponent(i).is_some())
    }

    /// The first variable with no pure-power generator, if any.
    pub fn uncovered_variable(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.pure_power_exponent(i).is_none())
    }

    /// Exponent b of a generator z_i^b, if one exists (unique in an
    /// antichain).
    pub fn pure_power_exponent(&self, i: usize) -> Option<&BigInt> {
        self.gens
            .iter()
            .find(|g| !g.get(i).is_zero() && (0..self.n).all(|j| j == i || g.get(j).is_zero()))
            .map(|g| g.get(i))
    }

    /// Product ideal, generated by all pairwise sums.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                sums.push(g.add(h)?);
            }
        }
        Self::new(sums, self.n)
    }

    /// k-th power for k >= 1, by repeated products.
    pub fn power(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositiveExponent { got: 0 });
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection, generated by pairwise componentwise maxima (lcms).
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.max(h)?);
            }
        }
        Self::new(lcms, self.n)
    }

    /// Ideal quotient by a single monomial: generated by the clamped
    /// differences max(g - q, 0).
    pub fn colon(&self, q: &ExponentVector) -> Result<Self> {
        if q.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: q.len(),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.saturating_sub(q))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens, self.n)
    }

    /// Side lengths of the staircase box: the pure-power exponents. Every
    /// standard monomial has its i-th exponent below the i-th entry.
    fn staircase_box(&self) -> Result<Vec<u64>> {
        let mut sides = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let b = self
                .pure_power_exponent(i)
                .ok_or(Error::NotMPrimary { variable: i })?;
            sides.push(u64::try_from(b).map_err(|_| Error::BoxTooLarge {
                volume: u128::MAX,
                limit: crate::polyhedron::BOX_LIMIT,
            })?);
        }
        box_volume_guard(&sides)?;
        Ok(sides)
    }

    /// All monomials outside the ideal; requires m-primary.
    pub fn standard_monomials(&self) -> Result<StandardBasis> {
        let sides = self.staircase_box()?;
        let mask = membership_mask(&sides, |q| Ok(!self.contains_monomial(q)?))?;
        let mut monomials = Vec::new();
        let mut idx = vec![0u64; self.n];
        for &outside in &mask {
            if outside {
                monomials.push(point_from_indices(&idx));
            }
            advance(&mut idx, &sides);
        }
        monomials.sort();
        Ok(StandardBasis { monomials })
    }

    /// Colength: the vector-space dimension of the quotient ring.
    pub fn colength(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.count())
    }

    /// Socle of the quotient: standard monomials that every variable
    /// pushes into the ideal. These are the staircase corners.
    pub fn socle(&self) -> Result<Vec<ExponentVector>> {
        let basis = self.standard_monomials()?;
        let mut out = Vec::new();
        for s in basis.monomials() {
            let mut corner = true;
            for i in 0..self.n {
                if !self.contains_monomial(&s.add(&ExponentVector::unit(self.n, i))?)? {
                    corner = false;
                    break;
                }
            }
            if corner {
                out.push(s.clone());
            }
        }
        Ok(out)
    }

    /// Irredundant irreducible decomposition of an m-primary ideal: each
    /// component is generated by pure powers, the intersection of the
    /// components is the ideal, and no component can be dropped.
    ///
    /// A generator with mixed support factors into coprime parts, which
    /// splits the ideal into an intersection; recursing until every
    /// component is pure-power and pruning components that contain another
    /// leaves exactly the irredundant ones.
    pub fn irreducible_decomposition(&self) -> Result<Vec<MonomialIdeal>> {
        if let Some(v) = self.uncovered_variable() {
            return Err(Error::NotMPrimary { variable: v });
        }
        let mut leaves: BTreeSet<MonomialIdeal> = BTreeSet::new();
        let mut seen: BTreeSet<MonomialIdeal> = BTreeSet::new();
        let mut work = vec![self.clone()];
        while let Some(cur) = work.pop() {
            let mixed = cur
                .gens
                .iter()
                .position(|g| g.coords().iter().filter(|c| !c.is_zero()).count() >= 2);
            let Some(gi) = mixed else {
                leaves.insert(cur);
                continue;
            };
            let g = cur.gens[gi].clone();
            let i = g
                .coords()
                .iter()
                .position(|c| !c.is_zero())
                .expect("mixed generator has a nonzero entry");
            let mut pure = vec![BigInt::zero(); self.n];
            pure[i] = g.get(i).clone();
            let mut rest = g.coords().to_vec();
            rest[i] = BigInt::zero();
            for part in [pure, rest] {
                let mut gens = cur.gens.clone();
                gens[gi] = ExponentVector::new(part)?;
                let next = MonomialIdeal::new(gens, self.n)?;
                if seen.insert(next.clone()) {
                    work.push(next);
                }
            }
        }
        let components: Vec<MonomialIdeal> = leaves.into_iter().collect();
        let mut kept = Vec::new();
        for c in &components {
            let mut redundant = false;
            for d in &components {
                if d != c && c.contains_ideal(d)? {
                    redundant = true;
                    break;
                }
            }
            if !redundant {
                kept.push(c.clone());
            }
        }
        Ok(kept)
    }

    /// Reverse inclusion test: self contains other as sets of monomials.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        for g in &other.gens {
            if !self.contains_monomial(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The Newton polyhedron of the generators.
    pub fn newton_polyhedron(&self) -> NewtonPolyhedron {
        NewtonPolyhedron::from_points(&self.gens, self.n)
            .expect("ideal invariants guarantee a valid point set")
    }

    /// Integral closure of an m-primary ideal: generated by the minimal
    /// lattice points of the Newton polyhedron.
    pub fn integral_closure(&self) -> Result<Self> {
        if let Some(v) = self.uncovered_variable() {
            return Err(Error::NotMPrimary { variable: v });
        }
        let pts = self.newton_polyhedron().minimal_lattice_points()?;
        Self::new(pts, self.n)
    }

    /// True iff the minimal generators form a regular sequence, which for
    /// an m-primary monomial ideal means exactly n pure-power generators.
    pub fn is_complete_intersection(&self) -> Result<bool> {
        if let Some(v) = self.uncovered_variable() {
            return Err(Error::NotMPrimary { variable: v });
        }
        if self.gens.len() != self.n {
            return Ok(false);
        }
        assert!(
            self.gens
                .iter()
                .all(|g| g.coords().iter().filter(|c| !c.is_zero()).count() == 1),
            "n generators of an m-primary ideal in n variables must be pure powers"
        );
        Ok(true)
    }
}
