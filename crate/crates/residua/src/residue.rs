//! Rees valuations, essential generator sets, monomial Jacobians, and the
//! verification predicates built on them: socle generation by the
//! Jacobian, the integral-closure power containment, its strictness
//! witnesses, and the essential-iff-generating equivalence for complete
//! intersections.
//!
//! Generator order and multiplicity matter here: a tuple (f_1, ..., f_m)
//! is data beyond the ideal it generates, and essential-set indices refer
//! to tuple positions. Ideal-level operations minimalize internally.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::lattice::{exact_determinant, ExponentVector, IntegerVector, Term};
use crate::polyhedron::{Facet, NewtonPolyhedron};
use crate::Result;

/// An ordered list of monomials, possibly with repetitions. The tuple
/// analogue of a MonomialIdeal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialTuple {
    n: usize,
    entries: Vec<ExponentVector>,
}

impl MonomialTuple {
    /// Builds a tuple of monomials in n variables; order is kept.
    pub fn new(entries: Vec<ExponentVector>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroAmbientDimension);
        }
        if entries.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for e in &entries {
            if e.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: e.len(),
                });
            }
        }
        Ok(MonomialTuple { n, entries })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(entries: &[&[i64]], n: usize) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|e| ExponentVector::from_ints(e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries, n)
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// The entries in input order.
    pub fn entries(&self) -> &[ExponentVector] {
        &self.entries
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True iff the tuple has no entries (never constructible).
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The ideal generated by the entries.
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.entries.clone(), self.n)
            .expect("tuple invariants guarantee a valid generator list")
    }

    /// Newton polyhedron of the entries; facet touching lists refer to
    /// tuple positions.
    pub fn newton_polyhedron(&self) -> NewtonPolyhedron {
        NewtonPolyhedron::from_points(&self.entries, self.n)
            .expect("tuple invariants guarantee a valid point set")
    }
}

/// A monomial valuation ord_rho together with its value on the ideal:
/// ord(z^a) = rho . a and c = min over generators. One per compact facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesValuation {
    /// Primitive weight vector with positive entries.
    pub rho: IntegerVector,
    /// The valuation of the ideal: min over generators of rho . a.
    pub c: BigInt,
}

impl ReesValuation {
    /// Value of the valuation on a single monomial.
    pub fn ord(&self, q: &ExponentVector) -> Result<BigInt> {
        self.rho.dot(q)
    }

    /// Value on an ideal: the minimum over its generators.
    pub fn ord_ideal(&self, a: &MonomialIdeal) -> Result<BigInt> {
        a.gens()
            .iter()
            .map(|g| self.rho.dot(g))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min()
            .ok_or(Error::EmptyGenerators)
    }
}

/// The Rees valuations of an m-primary monomial ideal: one per compact
/// facet of the Newton polyhedron, in facet order.
pub fn rees_valuations(a: &MonomialIdeal) -> Result<Vec<ReesValuation>> {
    if let Some(v) = a.uncovered_variable() {
        return Err(Error::NotMPrimary { variable: v });
    }
    let np = a.newton_polyhedron();
    Ok(np
        .compact_facets()
        .map(|f| ReesValuation {
            rho: f.normal.clone(),
            c: f.offset.clone(),
        })
        .collect())
}

/// n tuple positions whose exponents lie on one compact facet and form a
/// nonsingular exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialSet {
    /// Ascending tuple positions, n of them.
    pub indices: Vec<usize>,
    /// The unique compact facet containing all chosen exponents.
    pub facet: Facet,
    /// Determinant of the exponent matrix in index order; nonzero.
    pub determinant: BigInt,
}

impl EssentialSet {
    /// The Rees valuation attached to the facet.
    pub fn valuation(&self) -> ReesValuation {
        ReesValuation {
            rho: self.facet.normal.clone(),
            c: self.facet.offset.clone(),
        }
    }
}

/// All essential index sets of a tuple generating an m-primary ideal:
/// n-subsets of positions on a common compact facet with nonzero exponent
/// determinant. Sorted by index vector; each set lies on exactly one
/// facet, which is verified during construction.
pub fn essential_sets(t: &MonomialTuple) -> Result<Vec<EssentialSet>> {
    let n = t.dim();
    if let Some(v) = t.ideal().uncovered_variable() {
        return Err(Error::NotMPrimary { variable: v });
    }
    let np = t.newton_polyhedron();
    let mut found: Vec<EssentialSet> = Vec::new();
    for facet in np.compact_facets() {
        for_each_combination(facet.touching.len(), n, &mut |pick| -> Result<()> {
            let indices: Vec<usize> = pick.iter().map(|&k| facet.touching[k]).collect();
            let rows: Vec<IntegerVector> = indices
                .iter()
                .map(|&i| t.entries()[i].to_integer_vector())
                .collect();
            let det = exact_determinant(&rows)?;
            if !det.is_zero() {
                found.push(EssentialSet {
                    indices,
                    facet: facet.clone(),
                    determinant: det,
                });
            }
            Ok(())
        })?;
    }
    found.sort_by(|a, b| a.indices.cmp(&b.indices));
    for w in found.windows(2) {
        if w[0].indices == w[1].indices {
            return Err(Error::Inconsistency(format!(
                "essential set {:?} lies on two distinct compact facets",
                w[0].indices
            )));
        }
    }
    Ok(found)
}

/// The Jacobian determinant of a tuple of n monomials in n variables. For
/// monomials this collapses to a single term: the determinant of the
/// exponent matrix times z^(sum of exponents - (1,...,1)), or zero.
pub fn jacobian_term(t: &MonomialTuple) -> Result<Term> {
    let n = t.dim();
    if t.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: t.len(),
        });
    }
    let rows: Vec<IntegerVector> = t.entries().iter().map(|e| e.to_integer_vector()).collect();
    let det = exact_determinant(&rows)?;
    if det.is_zero() {
        return Ok(Term::Zero);
    }
    let mut sum = ExponentVector::zeros(n);
    for e in t.entries() {
        sum = sum.add(e)?;
    }
    let exponent = sum.sub(&ExponentVector::ones(n)).map_err(|_| {
        Error::Inconsistency("nonzero exponent determinant with an all-zero column".into())
    })?;
    Term::monomial(det, exponent)
}

/// Outcome of the Jacobian membership test for a tuple of n monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HickelVerdict {
    /// The Jacobian term of the tuple.
    pub jac: Term,
    /// Whether the Jacobian lies in the generated ideal (zero counts as
    /// inside).
    pub jac_in_ideal: bool,
    /// Whether the generated ideal is m-primary.
    pub m_primary: bool,
    /// The expected equivalence: the Jacobian is in the ideal iff the
    /// ideal is not m-primary; for m-primary tuples the Jacobian exponent
    /// must additionally be the unique socle generator.
    pub consistent: bool,
}

/// Evaluates the Jacobian membership dichotomy on one tuple.
pub fn hickel_verdict(t: &MonomialTuple) -> Result<HickelVerdict> {
    let jac = jacobian_term(t)?;
    let ideal = t.ideal();
    let m_primary = ideal.is_m_primary();
    let jac_in_ideal = match &jac {
        Term::Zero => true,
        Term::Monomial { exponent, .. } => ideal.contains_monomial(exponent)?,
    };
    let mut consistent = jac_in_ideal == !m_primary;
    if m_primary {
        consistent = consistent
            && match &jac {
                Term::Zero => false,
                Term::Monomial { exponent, .. } => ideal.socle()? == vec![exponent.clone()],
            };
    }
    Ok(HickelVerdict {
        jac,
        jac_in_ideal,
        m_primary,
        consistent,
    })
}

/// The power containment: every minimal generator of the integral closure
/// of a^n lies in a. A false return signals an implementation bug.
pub fn briancon_skoda_verify(a: &MonomialIdeal) -> Result<bool> {
    if let Some(v) = a.uncovered_variable() {
        return Err(Error::NotMPrimary { variable: v });
    }
    let n = a.dim() as u64;
    let lower = a.power(n)?.integral_closure()?;
    a.contains_ideal(&lower)
}

/// A monomial certifying that the closure of a^n is strictly smaller than
/// the annihilator-side bound: z_k times the Jacobian of an essential
/// subtuple, together with the valuation it violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictnessWitness {
    /// The witness exponent: e_k + (sum of essential exponents) - (1,..,1).
    pub monomial: ExponentVector,
    /// The Rees valuation of a on whose facet the witness falls short.
    pub failing_valuation: ReesValuation,
}

/// Produces the strictness witness for one essential set of a tuple in
/// dimension n >= 2. The variable index k minimizing rho_k is chosen, so
/// ord(q) = n c - (|rho| - rho_k) <= n c - n + 1 < n c, and exclusion from
/// the closure of a^n is re-checked against the dilated polyhedron.
pub fn strictness_witness(t: &MonomialTuple, e: &EssentialSet) -> Result<StrictnessWitness> {
    let n = t.dim();
    if n < 2 {
        return Err(Error::AmbientDimensionTooSmall {
            required: 2,
            found: n,
        });
    }
    if e.indices.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: e.indices.len(),
        });
    }
    for &i in &e.indices {
        if i >= t.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: t.len(),
            });
        }
    }
    let mut sum = ExponentVector::zeros(n);
    for &i in &e.indices {
        sum = sum.add(&t.entries()[i])?;
    }
    let jac_exponent = sum.sub(&ExponentVector::ones(n)).map_err(|_| {
        Error::Inconsistency("essential set with an all-zero exponent column".into())
    })?;
    let rho = &e.facet.normal;
    let k = (0..n)
        .min_by_key(|&i| rho.get(i))
        .expect("positive ambient dimension");
    let monomial = jac_exponent.add(&ExponentVector::unit(n, k))?;

    let c = &e.facet.offset;
    let nc = c * BigInt::from(n as u64);
    let ord = rho.dot(&monomial)?;
    let bound = &nc - BigInt::from(n as u64) + BigInt::one();
    if ord > bound {
        return Err(Error::Inconsistency(format!(
            "witness valuation {ord} exceeds the bound {bound}"
        )));
    }
    // Explicit membership re-check: the closure of a^n has Newton
    // polyhedron n * NP(a), and the witness must fall outside it.
    let dilated = t.newton_polyhedron().dilate(n as u64)?;
    if dilated.contains(&monomial)? {
        return Err(Error::Inconsistency(
            "strictness witness unexpectedly lies in the closure of a^n".into(),
        ));
    }
    Ok(StrictnessWitness {
        monomial,
        failing_valuation: ReesValuation {
            rho: rho.clone(),
            c: c.clone(),
        },
    })
}

/// For a tuple generating a complete intersection ideal: the essential
/// n-subsets coincide with the n-subsets that generate the full ideal.
pub fn theorem_c_check(t: &MonomialTuple) -> Result<bool> {
    let ideal = t.ideal();
    if !ideal.is_complete_intersection()? {
        return Err(Error::NotCompleteIntersection);
    }
    let n = t.dim();
    let essential: std::collections::BTreeSet<Vec<usize>> =
        essential_sets(t)?.into_iter().map(|e| e.indices).collect();
    let mut generating = std::collections::BTreeSet::new();
    for_each_combination(t.len(), n, &mut |pick| -> Result<()> {
        let sub = MonomialIdeal::new(pick.iter().map(|&i| t.entries()[i].clone()).collect(), n)?;
        if sub == ideal {
            generating.insert(pick.to_vec());
        }
        Ok(())
    })?;
    Ok(essential == generating)
}

/// The two computable bounds sandwiching the residue-current annihilator:
/// closure(a^n) below, a itself above, plus the essential-set count and
/// the complete-intersection flag that decide sharpness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorBounds {
    /// closure(a^n), always contained in a.
    pub lower: MonomialIdeal,
    /// The ideal a itself.
    pub upper: MonomialIdeal,
    /// Number of essential sets of the tuple.
    pub essential_count: usize,
    /// Whether a is a complete intersection (the upper bound is attained).
    pub is_ci: bool,
}

/// Computes both annihilator bounds for a tuple; fails loudly if the
/// containment between them does not hold.
pub fn annihilator_bounds(t: &MonomialTuple) -> Result<AnnihilatorBounds> {
    let ideal = t.ideal();
    if let Some(v) = ideal.uncovered_variable() {
        return Err(Error::NotMPrimary { variable: v });
    }
    let n = ideal.dim() as u64;
    let lower = ideal.power(n)?.integral_closure()?;
    if !ideal.contains_ideal(&lower)? {
        return Err(Error::Inconsistency(
            "closure of a^n is not contained in a".into(),
        ));
    }
    let essential_count = essential_sets(t)?.len();
    let is_ci = ideal.is_complete_intersection()?;
    Ok(AnnihilatorBounds {
        lower,
        upper: ideal,
        essential_count,
        is_ci,
    })
}

/// Calls f on every k-element ascending index combination from 0..n,
/// propagating errors.
fn for_each_combination<E>(
    n: usize,
    k: usize,
    f: &mut impl FnMut(&[usize]) -> std::result::Result<(), E>,
) -> std::result::Result<(), E> {
    fn rec<E>(
        start: usize,
        n: usize,
        k: usize,
        buf: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> std::result::Result<(), E>,
    ) -> std::result::Result<(), E> {
        if buf.len() == k {
            return f(buf);
        }
        let needed = k - buf.len();
        for i in start..=n.saturating_sub(needed) {
            buf.push(i);
            rec(i + 1, n, k, buf, f)?;
            buf.pop();
        }
        Ok(())
    }
    if k > n {
        return Ok(());
    }
    let mut buf = Vec::with_capacity(k);
    rec(0, n, k, &mut buf, f)
}
