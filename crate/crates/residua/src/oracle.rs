//! Independent brute-force reference implementations used to cross-check
//! the main computational path. Nothing here shares code with the
//! polyhedron, ideal, or residue modules; only the lattice primitives are
//! common. Clarity wins over speed throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::lattice::{ExponentVector, IntegerVector, Term};
use crate::Result;

/// Compact facet normals of the Newton polyhedron of a 2D point set,
/// computed by an exact lower-hull sweep. Returns primitive inward
/// normals of the bounded edges, sorted lexicographically.
pub fn hull2d_oracle(points: &[ExponentVector]) -> Result<Vec<IntegerVector>> {
    if points.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for p in points {
        if p.len() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.len(),
            });
        }
    }
    let mut pts: Vec<(BigInt, BigInt)> = points
        .iter()
        .map(|p| (p.get(0).clone(), p.get(1).clone()))
        .collect();
    pts.sort();
    pts.dedup();

    // Monotone-chain lower hull; collinear middle points are dropped.
    let cross = |o: &(BigInt, BigInt), a: &(BigInt, BigInt), b: &(BigInt, BigInt)| -> BigInt {
        (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
    };
    let mut hull: Vec<(BigInt, BigInt)> = Vec::new();
    for p in pts {
        while hull.len() >= 2
            && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &p).is_positive()
        {
            hull.pop();
        }
        hull.push(p);
    }

    let mut normals = Vec::new();
    for w in hull.windows(2) {
        let dx = &w[1].0 - &w[0].0;
        let dy = &w[1].1 - &w[0].1;
        // A bounded edge of the staircase hull goes right and down; its
        // inward normal (-dy, dx) then has both entries positive.
        if dx.is_positive() && dy.is_negative() {
            normals.push(IntegerVector::new(vec![-dy, dx]).make_primitive()?);
        }
    }
    normals.sort();
    Ok(normals)
}

/// Membership of q in the Newton polyhedron of a point set, decided from
/// first principles: q lies in conv(points) + R^n_{>=0} iff some exact
/// rational convex combination of at most n+1 points, padded with
/// nonnegative multiples of unit vectors, equals q. Every column subset of
/// size at most n+1 is tried and its linear system solved exactly.
pub fn caratheodory_membership(points: &[ExponentVector], q: &ExponentVector) -> Result<bool> {
    if points.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let n = q.len();
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.len(),
            });
        }
    }
    let m = points.len();
    let mut point_subset = Vec::new();
    let mut unit_subset = Vec::new();
    for asize in 1..=(n + 1).min(m) {
        let mut found = false;
        for_each_combination(m, asize, &mut |a| {
            if found {
                return;
            }
            point_subset.clear();
            point_subset.extend_from_slice(a);
            for csize in 0..=(n + 1 - asize).min(n) {
                if found {
                    break;
                }
                for_each_combination(n, csize, &mut |c| {
                    if found {
                        return;
                    }
                    unit_subset.clear();
                    unit_subset.extend_from_slice(c);
                    if solves_nonnegatively(points, q, &point_subset, &unit_subset) {
                        found = true;
                    }
                });
            }
        });
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Builds the (n+1) x (k+1) augmented system for the chosen point and unit
/// columns and solves it exactly over the rationals. True iff the columns
/// are independent, the system is consistent, and the unique solution is
/// componentwise nonnegative.
fn solves_nonnegatively(
    points: &[ExponentVector],
    q: &ExponentVector,
    point_cols: &[usize],
    unit_cols: &[usize],
) -> bool {
    let n = q.len();
    let k = point_cols.len() + unit_cols.len();
    let rat = |b: &BigInt| BigRational::from_integer(b.clone());
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
    for r in 0..n {
        let mut row = Vec::with_capacity(k + 1);
        for &pi in point_cols {
            row.push(rat(points[pi].get(r)));
        }
        for &ui in unit_cols {
            row.push(if ui == r {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        row.push(rat(q.get(r)));
        rows.push(row);
    }
    // Convexity row: the point coefficients sum to one.
    let mut last = vec![BigRational::one(); point_cols.len()];
    last.extend(vec![BigRational::zero(); unit_cols.len()]);
    last.push(BigRational::one());
    rows.push(last);

    // Gauss-Jordan to reduced row echelon form; after the first col
    // columns the pivot row of the next column is the column index itself.
    for col in 0..k {
        let Some(p) = (col..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            // Dependent columns; this support is covered by a smaller subset.
            return false;
        };
        rows.swap(col, p);
        let inv = rows[col][col].clone();
        for e in rows[col].iter_mut() {
            *e /= inv.clone();
        }
        let pivot_tail = rows[col][col..].to_vec();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (cell, p) in row[col..].iter_mut().zip(&pivot_tail) {
                    *cell -= p * &f;
                }
            }
        }
    }
    for row in rows.iter().skip(k) {
        if !row[k].is_zero() {
            return false;
        }
    }
    (0..k).all(|c| !rows[c][k].is_negative())
}

/// Jacobian determinant of a tuple of n monomials in n variables, expanded
/// symbolically: the matrix of partial derivatives is formed term by term
/// and the determinant taken by signed permutation expansion. Like terms
/// are collected; for monomial tuples at most one survives.
pub fn jacobian_symbolic_oracle(tuple: &[ExponentVector]) -> Result<Term> {
    let n = tuple.len();
    if n == 0 {
        return Err(Error::EmptyGenerators);
    }
    for t in tuple {
        if t.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: t.len(),
            });
        }
    }
    // entry[i][j] = d(z^{a_i})/dz_j as coefficient and exponent, or None.
    type Derivative = Option<(BigInt, Vec<BigInt>)>;
    let mut entry: Vec<Vec<Derivative>> = Vec::with_capacity(n);
    for a in tuple {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            if a.get(j).is_zero() {
                row.push(None);
            } else {
                let mut e: Vec<BigInt> = a.coords().to_vec();
                e[j] -= 1;
                row.push(Some((a.get(j).clone(), e)));
            }
        }
        entry.push(row);
    }

    let mut collected: std::collections::BTreeMap<Vec<BigInt>, BigInt> =
        std::collections::BTreeMap::new();
    for perm in permutations(n) {
        let mut coeff = BigInt::one();
        let mut exponent = vec![BigInt::zero(); n];
        let mut vanished = false;
        for (i, &j) in perm.iter().enumerate() {
            match &entry[i][j] {
                None => {
                    vanished = true;
                    break;
                }
                Some((c, e)) => {
                    coeff *= c;
                    for (acc, x) in exponent.iter_mut().zip(e) {
                        *acc += x;
                    }
                }
            }
        }
        if vanished {
            continue;
        }
        if parity_odd(&perm) {
            coeff = -coeff;
        }
        *collected.entry(exponent).or_insert_with(BigInt::zero) += coeff;
    }
    collected.retain(|_, c| !c.is_zero());

    match collected.len() {
        0 => Ok(Term::Zero),
        1 => {
            let (e, c) = collected.into_iter().next().unwrap();
            Term::monomial(c, ExponentVector::new(e)?)
        }
        more => Err(Error::Inconsistency(format!(
            "monomial Jacobian expanded to {more} distinct terms"
        ))),
    }
}

/// Calls f on every k-element ascending index combination from 0..n.
fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let needed = k - buf.len();
        for i in start..=n.saturating_sub(needed) {
            buf.push(i);
            rec(i + 1, n, k, buf, f);
            buf.pop();
        }
    }
    if k > n {
        return;
    }
    let mut buf = Vec::with_capacity(k);
    rec(0, n, k, &mut buf, f);
}

/// All permutations of 0..n, built by recursive insertion.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = vec![vec![]];
    for x in 0..n {
        let mut next = Vec::with_capacity(perms.len() * (x + 1));
        for p in perms {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, x);
                next.push(q);
            }
        }
        perms = next;
    }
    perms
}

/// Sign of a permutation by inversion count.
fn parity_odd(perm: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(coords: &[i64]) -> ExponentVector {
        ExponentVector::from_ints(coords).unwrap()
    }

    fn evs(coords: &[&[i64]]) -> Vec<ExponentVector> {
        coords.iter().map(|c| ev(c)).collect()
    }

    #[test]
    fn hull2d_two_compact_edges() {
        let normals = hull2d_oracle(&evs(&[&[3, 0], &[1, 1], &[0, 3]])).unwrap();
        assert_eq!(
            normals,
            vec![
                IntegerVector::from_ints(&[1, 2]),
                IntegerVector::from_ints(&[2, 1])
            ]
        );
    }

    #[test]
    fn hull2d_collinear_points_give_one_edge() {
        let normals = hull2d_oracle(&evs(&[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(normals, vec![IntegerVector::from_ints(&[1, 1])]);
    }

    #[test]
    fn hull2d_single_point_has_no_compact_edge() {
        assert!(hull2d_oracle(&evs(&[&[3, 4]])).unwrap().is_empty());
    }

    #[test]
    fn hull2d_staircase_example() {
        let pts = evs(&[&[8, 0], &[6, 2], &[2, 3], &[1, 5], &[0, 6]]);
        let normals = hull2d_oracle(&pts).unwrap();
        assert_eq!(
            normals,
            vec![
                IntegerVector::from_ints(&[1, 2]),
                IntegerVector::from_ints(&[3, 2])
            ]
        );
    }

    #[test]
    fn caratheodory_on_staircase_points() {
        let pts = evs(&[&[8, 0], &[6, 2], &[2, 3], &[1, 5], &[0, 6]]);
        // (2/3)(8,0) + (1/3)(2,3) = (6,1) <= (6,2).
        assert!(caratheodory_membership(&pts, &ev(&[6, 2])).unwrap());
        assert!(caratheodory_membership(&pts, &ev(&[6, 1])).unwrap());
        assert!(!caratheodory_membership(&pts, &ev(&[5, 1])).unwrap());
        assert!(!caratheodory_membership(&pts, &ev(&[0, 0])).unwrap());
        assert!(caratheodory_membership(&pts, &ev(&[8, 0])).unwrap());
        assert!(caratheodory_membership(&pts, &ev(&[100, 100])).unwrap());
    }

    #[test]
    fn caratheodory_needs_matching_dimensions() {
        let pts = evs(&[&[1, 0], &[0, 1]]);
        assert!(caratheodory_membership(&pts, &ev(&[1, 1, 1])).is_err());
    }

    #[test]
    fn symbolic_jacobians() {
        let t = jacobian_symbolic_oracle(&evs(&[&[6, 2], &[2, 3]])).unwrap();
        let (c, e) = t.as_monomial().unwrap();
        assert_eq!(c, &BigInt::from(14));
        assert_eq!(e, &ev(&[7, 4]));

        let t = jacobian_symbolic_oracle(&evs(&[&[2, 0], &[1, 1]])).unwrap();
        let (c, e) = t.as_monomial().unwrap();
        assert_eq!(c, &BigInt::from(2));
        assert_eq!(e, &ev(&[2, 0]));

        assert!(jacobian_symbolic_oracle(&evs(&[&[1, 1], &[2, 2]]))
            .unwrap()
            .is_zero());

        let t = jacobian_symbolic_oracle(&evs(&[&[1, 0], &[0, 1]])).unwrap();
        let (c, e) = t.as_monomial().unwrap();
        assert_eq!(c, &BigInt::one());
        assert_eq!(e, &ev(&[0, 0]));

        let t = jacobian_symbolic_oracle(&evs(&[&[2, 1, 0], &[0, 2, 1], &[1, 0, 2]])).unwrap();
        let (c, e) = t.as_monomial().unwrap();
        // Permutation expansion: 2*2*2 + 1*1*1 = 9.
        assert_eq!(c, &BigInt::from(9));
        assert_eq!(e, &ev(&[2, 2, 2]));
    }

    #[test]
    fn permutation_machinery() {
        assert_eq!(permutations(3).len(), 6);
        assert!(!parity_odd(&[0, 1, 2]));
        assert!(parity_odd(&[1, 0, 2]));
        assert!(!parity_odd(&[1, 2, 0]));
    }
}
