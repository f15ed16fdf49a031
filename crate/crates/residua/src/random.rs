//! Seeded random instance generators for property suites and the CLI
//! check command. All randomness flows through the caller's RNG, so runs
//! are reproducible from a seed.

use rand::Rng;

use crate::ideal::MonomialIdeal;
use crate::lattice::ExponentVector;
use crate::residue::MonomialTuple;

/// A random m-primary ideal: one pure power per variable plus up to
/// max_extra random monomials, minimalized.
pub fn random_m_primary_ideal(
    rng: &mut impl Rng,
    n: usize,
    max_exp: u64,
    max_extra: usize,
) -> MonomialIdeal {
    let mut gens = Vec::new();
    for i in 0..n {
        let b = rng.gen_range(1..=max_exp) as i64;
        let mut coords = vec![0i64; n];
        coords[i] = b;
        gens.push(ExponentVector::from_ints(&coords).expect("nonnegative"));
    }
    let extras = rng.gen_range(0..=max_extra);
    for _ in 0..extras {
        let coords: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max_exp) as i64).collect();
        if coords.iter().all(|&c| c == 0) {
            continue;
        }
        gens.push(ExponentVector::from_ints(&coords).expect("nonnegative"));
    }
    MonomialIdeal::new(gens, n).expect("generated a valid ideal")
}

/// A random tuple of monomials with entries up to max_exp; the zero
/// exponent (the constant monomial) is allowed.
pub fn random_monomial_tuple(
    rng: &mut impl Rng,
    n: usize,
    len: usize,
    max_exp: u64,
) -> MonomialTuple {
    let entries: Vec<ExponentVector> = (0..len)
        .map(|_| {
            let coords: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max_exp) as i64).collect();
            ExponentVector::from_ints(&coords).expect("nonnegative")
        })
        .collect();
    MonomialTuple::new(entries, n).expect("generated a valid tuple")
}

/// A random pure-power complete intersection tuple with up to max_extra
/// redundant generators appended (each a multiple of one of the pure
/// powers, so the ideal is unchanged).
pub fn random_ci_tuple_with_redundant(
    rng: &mut impl Rng,
    n: usize,
    max_exp: u64,
    max_extra: usize,
) -> MonomialTuple {
    let mut powers = vec![0i64; n];
    let mut entries = Vec::new();
    for (i, p) in powers.iter_mut().enumerate() {
        *p = rng.gen_range(1..=max_exp) as i64;
        let mut coords = vec![0i64; n];
        coords[i] = *p;
        entries.push(ExponentVector::from_ints(&coords).expect("nonnegative"));
    }
    let extras = rng.gen_range(0..=max_extra);
    for _ in 0..extras {
        let base = rng.gen_range(0..n);
        let coords: Vec<i64> = (0..n)
            .map(|j| {
                let pad = rng.gen_range(0..=2) as i64;
                if j == base {
                    powers[base] + pad
                } else {
                    pad
                }
            })
            .collect();
        entries.push(ExponentVector::from_ints(&coords).expect("nonnegative"));
    }
    MonomialTuple::new(entries, n).expect("generated a valid tuple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generators_are_reproducible_and_valid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let a = random_m_primary_ideal(&mut rng, 3, 8, 3);
        assert!(a.is_m_primary());
        let mut rng2 = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let b = random_m_primary_ideal(&mut rng2, 3, 8, 3);
        assert_eq!(a, b);

        let t = random_ci_tuple_with_redundant(&mut rng, 2, 6, 3);
        assert!(t.ideal().is_complete_intersection().unwrap());

        let t = random_monomial_tuple(&mut rng, 2, 2, 5);
        assert_eq!(t.len(), 2);
    }
}
