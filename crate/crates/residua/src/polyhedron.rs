//! Newton polyhedra of monomial generator sets: conv(points) + R^n_{>=0},
//! held as a complete, exact facet description.
//!
//! Facets are found by brute-force candidate enumeration: every normal of a
//! facet is (up to scale) the integer cross vector of n-1 directions drawn
//! from pairwise point differences and unit vectors. This is exponential in
//! n and perfectly exact; the crate targets n <= 6 and a couple dozen
//! points, where it is fast.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::Error;
use crate::lattice::{exact_determinant, rank_rows, ExponentVector, IntegerVector};
use crate::Result;

/// Upper bound on staircase box enumerations, to fail cleanly instead of
/// grinding on absurdly large exponents.
pub(crate) const BOX_LIMIT: u128 = 4_000_000;

/// Rejects boxes whose lattice point count exceeds the enumeration limit.
pub(crate) fn box_volume_guard(sides: &[u64]) -> Result<()> {
    let volume: u128 = sides
        .iter()
        .fold(1u128, |acc, &s| acc.saturating_mul(s as u128));
    if volume > BOX_LIMIT {
        return Err(Error::BoxTooLarge {
            volume,
            limit: BOX_LIMIT,
        });
    }
    Ok(())
}

/// One supporting halfspace { x : normal . x >= offset } whose boundary
/// meets the polyhedron in a face of dimension n-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive inward normal; entries are nonnegative, not all zero.
    pub normal: IntegerVector,
    /// min over generators of normal . a, hence nonnegative.
    pub offset: BigInt,
    /// True iff every normal entry is positive (the facet is bounded).
    pub compact: bool,
    /// Sorted indices of the input points lying on the facet.
    pub touching: Vec<usize>,
}

/// conv(points) + R^n_{>=0} with its full facet list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    n: usize,
    points: Vec<ExponentVector>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    /// Builds the polyhedron of a nonempty point set in dimension n.
    /// Duplicate points are tolerated; facet touching lists refer to the
    /// input positions.
    pub fn from_points(points: &[ExponentVector], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroAmbientDimension);
        }
        if points.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for p in points {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.len(),
                });
            }
        }
        let facets = enumerate_facets(points, n)?;
        Ok(NewtonPolyhedron {
            n,
            points: points.to_vec(),
            facets,
        })
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// The generator points the polyhedron was built from.
    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    /// All facets, sorted lexicographically by normal.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// The bounded facets only, in the same order.
    pub fn compact_facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter().filter(|f| f.compact)
    }

    /// Exact membership test: q satisfies every facet inequality.
    pub fn contains(&self, q: &ExponentVector) -> Result<bool> {
        if q.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: q.len(),
            });
        }
        for f in &self.facets {
            if f.normal.dot(q)? < f.offset {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minkowski sum, built from all pairwise sums of generators.
    pub fn minkowski(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut sums = Vec::with_capacity(self.points.len() * other.points.len());
        for p in &self.points {
            for q in &other.points {
                sums.push(p.add(q)?);
            }
        }
        Self::from_points(&sums, self.n)
    }

    /// k-fold dilation kP for k >= 1: same normals, offsets and points
    /// scaled by k. Equal to the k-fold Minkowski sum of P with itself.
    pub fn dilate(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositiveExponent { got: 0 });
        }
        let kb = BigInt::from(k);
        Ok(NewtonPolyhedron {
            n: self.n,
            points: self.points.iter().map(|p| p.scaled(k)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: &f.offset * &kb,
                    compact: f.compact,
                    touching: f.touching.clone(),
                })
                .collect(),
        })
    }

    /// The divisibility-minimal lattice points of the polyhedron, i.e. the
    /// minimal generators of the integral closure of the generated ideal.
    /// Requires a finite complement staircase (every variable covered by a
    /// pure-power point); output is lexicographically sorted.
    pub fn minimal_lattice_points(&self) -> Result<Vec<ExponentVector>> {
        for i in 0..self.n {
            let covered = self
                .points
                .iter()
                .any(|p| !p.get(i).is_zero() && (0..self.n).all(|j| j == i || p.get(j).is_zero()));
            if !covered {
                return Err(Error::NotMPrimary { variable: i });
            }
        }
        // Minimal points live in the box bounded by the componentwise
        // maxima of the generators: past the maximum in coordinate i one
        // can always step back down along e_i and stay inside.
        let bounds = box_bounds(&self.points)?;
        let mask = membership_mask(&bounds, |q| self.contains(q))?;
        let s = strides(&bounds);
        let mut out = Vec::new();
        let mut idx = vec![0u64; self.n];
        for (rank, &inside) in mask.iter().enumerate() {
            // Membership is upward closed, so a point is minimal iff every
            // downward unit step leaves the set.
            if inside
                && idx
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || !mask[rank - s[i]])
            {
                out.push(point_from_indices(&idx));
            }
            advance(&mut idx, &bounds);
        }
        out.sort();
        Ok(out)
    }
}

/// Componentwise maxima of a point set, as box side lengths (max + 1),
/// guarded against absurd enumeration sizes.
pub(crate) fn box_bounds(points: &[ExponentVector]) -> Result<Vec<u64>> {
    let n = points[0].len();
    let mut bounds = Vec::with_capacity(n);
    for i in 0..n {
        let max = points
            .iter()
            .map(|p| p.get(i))
            .max()
            .expect("nonempty point set");
        let side: u64 = u64::try_from(max)
            .map_err(|_| Error::BoxTooLarge {
                volume: u128::MAX,
                limit: BOX_LIMIT,
            })?
            .saturating_add(1);
        bounds.push(side);
    }
    box_volume_guard(&bounds)?;
    Ok(bounds)
}

/// Evaluates a membership predicate over every lattice point of the box,
/// in mixed-radix order with the last coordinate fastest.
pub(crate) fn membership_mask(
    bounds: &[u64],
    mut inside: impl FnMut(&ExponentVector) -> Result<bool>,
) -> Result<Vec<bool>> {
    let volume: u128 = bounds.iter().map(|&b| b as u128).product();
    let mut mask = Vec::with_capacity(volume as usize);
    let mut idx = vec![0u64; bounds.len()];
    loop {
        mask.push(inside(&point_from_indices(&idx))?);
        if !advance(&mut idx, bounds) {
            break;
        }
    }
    Ok(mask)
}

/// Mixed-radix increment; false once the box is exhausted.
pub(crate) fn advance(idx: &mut [u64], bounds: &[u64]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < bounds[i] {
            return true;
        }
        idx[i] = 0;
    }
    false
}

pub(crate) fn point_from_indices(idx: &[u64]) -> ExponentVector {
    ExponentVector::new(idx.iter().map(|&c| BigInt::from(c)).collect())
        .expect("box indices are nonnegative")
}

/// Strides of the mixed-radix ranking used by membership_mask.
fn strides(bounds: &[u64]) -> Vec<usize> {
    let mut s = vec![1usize; bounds.len()];
    for i in (0..bounds.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * bounds[i + 1] as usize;
    }
    s
}

/// Full facet enumeration: candidate normals from all (n-1)-subsets of the
/// pooled directions, then exact support and dimension checks.
fn enumerate_facets(points: &[ExponentVector], n: usize) -> Result<Vec<Facet>> {
    let directions = direction_pool(points, n)?;
    let candidates = candidate_normals(&directions, n)?;
    let mut facets: Vec<Facet> = candidates
        .into_par_iter()
        .map(|normal| facet_for_normal(points, n, normal))
        .collect::<Result<Vec<Option<Facet>>>>()?
        .into_iter()
        .flatten()
        .collect();
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));
    if facets.is_empty() {
        return Err(Error::Inconsistency(
            "facet enumeration produced no facets".into(),
        ));
    }
    Ok(facets)
}

/// Pairwise point differences and unit vectors, deduplicated up to sign
/// and scale. Every facet's direction space is spanned by n-1 of these.
fn direction_pool(points: &[ExponentVector], n: usize) -> Result<Vec<IntegerVector>> {
    let mut pool: BTreeSet<IntegerVector> = BTreeSet::new();
    for i in 0..n {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::from(1);
        pool.insert(IntegerVector::new(v));
    }
    let mut distinct = points.to_vec();
    distinct.sort();
    distinct.dedup();
    for (i, p) in distinct.iter().enumerate() {
        for q in distinct.iter().skip(i + 1) {
            let d: Vec<BigInt> = p
                .coords()
                .iter()
                .zip(q.coords())
                .map(|(a, b)| a - b)
                .collect();
            let d = IntegerVector::new(d);
            if d.is_zero() {
                continue;
            }
            pool.insert(canonical_sign(d.make_primitive()?));
        }
    }
    Ok(pool.into_iter().collect())
}

/// Flips the sign so the first nonzero entry is positive.
fn canonical_sign(v: IntegerVector) -> IntegerVector {
    match v.coords().iter().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => v.neg(),
        _ => v,
    }
}

/// Cross vectors of all (n-1)-subsets of the direction pool that are
/// nonzero and sign-fixable to the nonnegative orthant, in primitive form.
fn candidate_normals(directions: &[IntegerVector], n: usize) -> Result<Vec<IntegerVector>> {
    if n == 1 {
        return Ok(vec![IntegerVector::from_ints(&[1])]);
    }
    let normals: Vec<BTreeSet<IntegerVector>> = (0..directions.len())
        .into_par_iter()
        .map(|first| {
            let mut found = BTreeSet::new();
            let mut subset = Vec::with_capacity(n - 1);
            subset.push(directions[first].clone());
            collect_cross_normals(directions, first + 1, n - 1, &mut subset, &mut found)?;
            Ok(found)
        })
        .collect::<Result<_>>()?;
    let mut merged = BTreeSet::new();
    for s in normals {
        merged.extend(s);
    }
    Ok(merged.into_iter().collect())
}

fn collect_cross_normals(
    directions: &[IntegerVector],
    start: usize,
    want: usize,
    subset: &mut Vec<IntegerVector>,
    found: &mut BTreeSet<IntegerVector>,
) -> Result<()> {
    if subset.len() == want {
        if let Some(normal) = orthant_normal(subset)? {
            found.insert(normal);
        }
        return Ok(());
    }
    let needed = want - subset.len();
    for i in start..=directions.len().saturating_sub(needed) {
        subset.push(directions[i].clone());
        collect_cross_normals(directions, i + 1, want, subset, found)?;
        subset.pop();
    }
    Ok(())
}

/// Generalized cross product of n-1 rows in Z^n (the vector of signed
/// maximal minors), sign-fixed into the nonnegative orthant and made
/// primitive. None if the rows are dependent or the signs are mixed.
fn orthant_normal(rows: &[IntegerVector]) -> Result<Option<IntegerVector>> {
    let n = rows.len() + 1;
    let mut v = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<IntegerVector> = rows
            .iter()
            .map(|r| {
                IntegerVector::new(
                    r.coords()
                        .iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect(),
                )
            })
            .collect();
        let mut d = exact_determinant(&minor)?;
        if j % 2 == 1 {
            d = -d;
        }
        v.push(d);
    }
    if v.iter().all(|c| c.is_zero()) {
        return Ok(None);
    }
    if v.iter().any(|c| c.is_positive()) && v.iter().any(|c| c.is_negative()) {
        return Ok(None);
    }
    let iv = IntegerVector::new(v);
    let iv = if iv.coords().iter().any(|c| c.is_negative()) {
        iv.neg()
    } else {
        iv
    };
    Ok(Some(iv.make_primitive()?))
}

/// Evaluates a candidate normal against the points: computes the offset
/// and touching set, then keeps the supporting hyperplane only if its face
/// has dimension exactly n-1.
fn facet_for_normal(
    points: &[ExponentVector],
    n: usize,
    normal: IntegerVector,
) -> Result<Option<Facet>> {
    let values: Vec<BigInt> = points
        .iter()
        .map(|p| normal.dot(p))
        .collect::<Result<_>>()?;
    let offset = values.iter().min().expect("nonempty point set").clone();
    let touching: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| **v == offset)
        .map(|(i, _)| i)
        .collect();

    // Face dimension: affine span of the touching points together with the
    // unit recession directions orthogonal to the normal.
    let base = points[touching[0]].coords();
    let mut rows: Vec<Vec<BigInt>> = touching[1..]
        .iter()
        .map(|&t| {
            points[t]
                .coords()
                .iter()
                .zip(base)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    for (i, c) in normal.coords().iter().enumerate() {
        if c.is_zero() {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::from(1);
            rows.push(e);
        }
    }
    if rank_rows(rows) != n - 1 {
        return Ok(None);
    }
    let compact = normal.coords().iter().all(|c| c.is_positive());
    Ok(Some(Facet {
        normal,
        offset,
        compact,
        touching,
    }))
}
