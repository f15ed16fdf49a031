//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Seeds are fixed so every run sees the same instances.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use residua::oracle::{caratheodory_membership, hull2d_oracle, jacobian_symbolic_oracle};
use residua::random::{
    random_ci_tuple_with_redundant, random_m_primary_ideal, random_monomial_tuple,
};
use residua::{
    briancon_skoda_verify, essential_sets, hickel_verdict, jacobian_term, rees_valuations,
    strictness_witness, theorem_c_check, ExponentVector, IntegerVector, MonomialIdeal,
    MonomialTuple, Term,
};

macro_rules! ensure {
    ($cond:expr, $($why:tt)+) => {
        if !$cond {
            return Err(format!($($why)+));
        }
    };
}

fn check(label: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {label}: PASS"),
        Err(why) => {
            println!("criterion {label}: FAIL ({why})");
            panic!("criterion {label} failed: {why}");
        }
    }
}

/// The five-generator ideal with exactly two Rees valuations, (1,2) and
/// (3,2); the recurring worked input of the whole suite.
fn two_valuation_ideal() -> MonomialIdeal {
    MonomialIdeal::from_ints(&[&[8, 0], &[6, 2], &[2, 3], &[1, 5], &[0, 6]], 2).unwrap()
}

fn ev(coords: &[i64]) -> ExponentVector {
    ExponentVector::from_ints(coords).unwrap()
}

fn binomial(a: u64, b: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b.min(a - b) {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

#[test]
fn criterion_01_two_valuation_pipeline() {
    check("01 two-valuation pipeline", || {
        let start = Instant::now();
        let a = two_valuation_ideal();
        let vals = rees_valuations(&a).map_err(|e| e.to_string())?;
        ensure!(vals.len() == 2, "expected 2 valuations, got {}", vals.len());
        ensure!(
            vals[0].rho == IntegerVector::from_ints(&[1, 2]) && vals[0].c == BigInt::from(8),
            "first valuation is {:?} with c = {}",
            vals[0].rho,
            vals[0].c
        );
        ensure!(
            vals[1].rho == IntegerVector::from_ints(&[3, 2]) && vals[1].c == BigInt::from(12),
            "second valuation is {:?} with c = {}",
            vals[1].rho,
            vals[1].c
        );
        let (two, three) = (BigInt::from(2), BigInt::from(3));
        for g in a.gens() {
            let (x, y) = (g.get(0), g.get(1));
            let ord1 = vals[0].ord(g).map_err(|e| e.to_string())?;
            let ord2 = vals[1].ord(g).map_err(|e| e.to_string())?;
            ensure!(ord1 == x + &two * y, "ord_(1,2) of {g:?} is {ord1}");
            ensure!(
                ord2 == &three * x + &two * y,
                "ord_(3,2) of {g:?} is {ord2}"
            );
        }
        let elapsed = start.elapsed();
        ensure!(
            elapsed < Duration::from_secs(1),
            "pipeline took {elapsed:?}"
        );
        Ok(())
    });
}

#[test]
fn criterion_02_jacobian_closed_form() {
    check("02 jacobian closed form", || {
        let t = MonomialTuple::from_ints(&[&[6, 2], &[2, 3]], 2).unwrap();
        let jac = jacobian_term(&t).map_err(|e| e.to_string())?;
        let expected = Term::monomial(BigInt::from(14), ev(&[7, 4])).unwrap();
        ensure!(jac == expected, "jacobian is {jac:?}");
        let a = two_valuation_ideal();
        let inside = a
            .contains_monomial(&ev(&[7, 4]))
            .map_err(|e| e.to_string())?;
        ensure!(inside, "(7,4) should be a member");
        Ok(())
    });
}

#[test]
fn criterion_03_dilated_membership() {
    check("03 dilated membership", || {
        let np = two_valuation_ideal().newton_polyhedron();
        let doubled = np.dilate(2).map_err(|e| e.to_string())?;
        let inside = doubled.contains(&ev(&[8, 4])).map_err(|e| e.to_string())?;
        ensure!(inside, "(8,4) should lie in the doubled polyhedron");
        Ok(())
    });
}

/// The shared 500-instance pool for criteria 04 and 08: alternating
/// n = 2 / n = 3, at most 6 generators, exponents at most 8.
fn briancon_skoda_pool() -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0004);
    (0..500)
        .map(|i| {
            let n = if i % 2 == 0 { 2 } else { 3 };
            random_m_primary_ideal(&mut rng, n, 8, 6 - n)
        })
        .collect()
}

#[test]
fn criterion_04_briancon_skoda_suite() {
    check("04 Briancon-Skoda suite", || {
        let pool = briancon_skoda_pool();
        let start = Instant::now();
        let failures: Vec<String> = pool
            .par_iter()
            .filter_map(|a| match briancon_skoda_verify(a) {
                Ok(true) => None,
                Ok(false) => Some(format!("containment fails for {:?}", a.gens())),
                Err(e) => Some(format!("error on {:?}: {e}", a.gens())),
            })
            .collect();
        ensure!(
            failures.is_empty(),
            "{} of 500 failed; first: {}",
            failures.len(),
            failures[0]
        );
        let elapsed = start.elapsed();
        ensure!(elapsed < Duration::from_secs(60), "suite took {elapsed:?}");
        Ok(())
    });
}

fn hickel_case(t: &MonomialTuple) -> Result<(), String> {
    let verdict = hickel_verdict(t).map_err(|e| e.to_string())?;
    ensure!(
        verdict.consistent,
        "inconsistent verdict for {:?}",
        t.entries()
    );
    if verdict.m_primary {
        let (_, exponent) = verdict
            .jac
            .as_monomial()
            .ok_or_else(|| format!("m-primary tuple {:?} with zero jacobian", t.entries()))?;
        let socle = t.ideal().socle().map_err(|e| e.to_string())?;
        ensure!(
            socle == vec![exponent.clone()],
            "socle of {:?} is {socle:?}, jacobian exponent {exponent:?}",
            t.entries()
        );
    }
    Ok(())
}

#[test]
fn criterion_05_hickel_suite() {
    check("05 Hickel suite", || {
        let mut vectors = Vec::new();
        for x in 0..=5i64 {
            for y in 0..=5i64 {
                vectors.push(ev(&[x, y]));
            }
        }
        for v in &vectors {
            for w in &vectors {
                let t = MonomialTuple::new(vec![v.clone(), w.clone()], 2).unwrap();
                hickel_case(&t)?;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x0005);
        for _ in 0..500 {
            hickel_case(&random_monomial_tuple(&mut rng, 3, 3, 8))?;
        }
        // Uniform triples are rarely m-primary, so feed the socle sub-check
        // pure-power triples as well.
        for _ in 0..60 {
            hickel_case(&random_ci_tuple_with_redundant(&mut rng, 3, 8, 0))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_06_product_valuation_union() {
    check("06 product valuation union", || {
        let normals = |x: &MonomialIdeal| -> Result<BTreeSet<IntegerVector>, String> {
            Ok(rees_valuations(x)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|v| v.rho)
                .collect())
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0x0006);
        for _ in 0..100 {
            let a = random_m_primary_ideal(&mut rng, 2, 8, 4);
            let b = random_m_primary_ideal(&mut rng, 2, 8, 4);
            let product = a.product(&b).map_err(|e| e.to_string())?;
            let mut expected = normals(&a)?;
            expected.extend(normals(&b)?);
            let got = normals(&product)?;
            ensure!(
                got == expected,
                "normals of {:?} * {:?}: got {got:?}, expected {expected:?}",
                a.gens(),
                b.gens()
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_07_generation_equals_essentiality() {
    check("07 generation equals essentiality", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0007);
        for i in 0..50 {
            let n = if i % 2 == 0 { 2 } else { 3 };
            let t = random_ci_tuple_with_redundant(&mut rng, n, 8, 3);
            let ok = theorem_c_check(&t).map_err(|e| e.to_string())?;
            ensure!(
                ok,
                "essential and generating subsets differ for {:?}",
                t.entries()
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_08_strictness_witness_suite() {
    check("08 strictness witness suite", || {
        let pool = briancon_skoda_pool();
        let failures: Vec<String> = pool
            .par_iter()
            .filter_map(|a| {
                let run = || -> Result<(), String> {
                    let n = a.dim();
                    let t = MonomialTuple::new(a.gens().to_vec(), n).unwrap();
                    let sets = essential_sets(&t).map_err(|e| e.to_string())?;
                    let closure_n = a
                        .power(n as u64)
                        .and_then(|p| p.integral_closure())
                        .map_err(|e| e.to_string())?;
                    for e in &sets {
                        let w = strictness_witness(&t, e).map_err(|e| e.to_string())?;
                        let inside = closure_n
                            .contains_monomial(&w.monomial)
                            .map_err(|e| e.to_string())?;
                        ensure!(
                            !inside,
                            "witness {:?} of {:?} lies in the closed power",
                            w.monomial,
                            a.gens()
                        );
                    }
                    Ok(())
                };
                run().err()
            })
            .collect();
        ensure!(
            failures.is_empty(),
            "{} of 500 failed; first: {}",
            failures.len(),
            failures[0]
        );
        Ok(())
    });
}

#[test]
fn criterion_09_oracle_equivalence() {
    check("09 oracle equivalence", || {
        // Facet enumeration against the 2D lower-hull sweep.
        let mut rng = ChaCha8Rng::seed_from_u64(0x0009);
        for _ in 0..200 {
            let a = random_m_primary_ideal(&mut rng, 2, 8, 4);
            let got: Vec<IntegerVector> = a
                .newton_polyhedron()
                .compact_facets()
                .map(|f| f.normal.clone())
                .collect();
            let expected = hull2d_oracle(a.gens()).map_err(|e| e.to_string())?;
            ensure!(
                got == expected,
                "compact normals of {:?}: got {got:?}, hull oracle {expected:?}",
                a.gens()
            );
        }

        // Halfspace membership against the convex-combination search, on
        // every lattice point of the generator bounding box.
        let ideals: Vec<MonomialIdeal> = (0..100)
            .map(|i| {
                let n = if i % 2 == 0 { 2 } else { 3 };
                random_m_primary_ideal(&mut rng, n, 8, 6 - n)
            })
            .collect();
        let failures: Vec<String> = ideals
            .par_iter()
            .filter_map(|a| {
                let run = || -> Result<(), String> {
                    let n = a.dim();
                    let np = a.newton_polyhedron();
                    let bounds: Vec<i64> = (0..n)
                        .map(|i| {
                            a.gens()
                                .iter()
                                .map(|g| i64::try_from(g.get(i)).unwrap())
                                .max()
                                .unwrap()
                        })
                        .collect();
                    let mut q = vec![0i64; n];
                    loop {
                        let point = ev(&q);
                        let fast = np.contains(&point).map_err(|e| e.to_string())?;
                        let slow =
                            caratheodory_membership(a.gens(), &point).map_err(|e| e.to_string())?;
                        ensure!(
                            fast == slow,
                            "membership of {point:?} in {:?}: facets say {fast}, oracle {slow}",
                            a.gens()
                        );
                        let mut i = n;
                        loop {
                            if i == 0 {
                                return Ok(());
                            }
                            i -= 1;
                            if q[i] < bounds[i] {
                                q[i] += 1;
                                break;
                            }
                            q[i] = 0;
                        }
                    }
                };
                run().err()
            })
            .collect();
        ensure!(
            failures.is_empty(),
            "{} of 100 membership scans failed; first: {}",
            failures.len(),
            failures[0]
        );

        // Closed-form Jacobian against symbolic differentiation, on the
        // exhaustive n = 2 scan of criterion 05.
        let mut vectors = Vec::new();
        for x in 0..=5i64 {
            for y in 0..=5i64 {
                vectors.push(ev(&[x, y]));
            }
        }
        for v in &vectors {
            for w in &vectors {
                let entries = vec![v.clone(), w.clone()];
                let t = MonomialTuple::new(entries.clone(), 2).unwrap();
                let fast = jacobian_term(&t).map_err(|e| e.to_string())?;
                let slow = jacobian_symbolic_oracle(&entries).map_err(|e| e.to_string())?;
                ensure!(
                    fast == slow,
                    "jacobian of {entries:?}: {fast:?} vs {slow:?}"
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_structure_identities() {
    check("10 structure identities", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0010);
        let ideals: Vec<MonomialIdeal> = (0..200)
            .map(|i| {
                let n = if i % 2 == 0 { 2 } else { 3 };
                random_m_primary_ideal(&mut rng, n, 8, 6 - n)
            })
            .collect();
        for a in &ideals {
            let components = a.irreducible_decomposition().map_err(|e| e.to_string())?;
            let socle = a.socle().map_err(|e| e.to_string())?;
            ensure!(
                components.len() == socle.len(),
                "{:?}: {} components vs {} socle elements",
                a.gens(),
                components.len(),
                socle.len()
            );
        }
        for n in 1..=4usize {
            let units: Vec<ExponentVector> = (0..n).map(|i| ExponentVector::unit(n, i)).collect();
            let m = MonomialIdeal::new(units, n).unwrap();
            for k in 1..=6u64 {
                let colength = m
                    .power(k)
                    .and_then(|p| p.colength())
                    .map_err(|e| e.to_string())?;
                let expected = binomial(k + n as u64 - 1, n as u64) as usize;
                ensure!(
                    colength == expected,
                    "colength of the {k}-th power in {n} variables: {colength} vs {expected}"
                );
            }
        }
        for a in &ideals {
            let closed = a.integral_closure().map_err(|e| e.to_string())?;
            let again = closed.integral_closure().map_err(|e| e.to_string())?;
            ensure!(
                again == closed,
                "closure of {:?} is not idempotent",
                a.gens()
            );
        }
        Ok(())
    });
}
