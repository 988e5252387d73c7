//! Seeded random elements for fuzzing.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{add_term, Element, Monomial, Presentation, Terms};
use crate::scalar::frac;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An element with up to `max_terms` monomials of total degree at most
/// `max_degree` and small rational coefficients.
pub fn random_element<R: Rng>(
    pres: &Arc<Presentation>,
    rng: &mut R,
    max_terms: usize,
    max_degree: u32,
) -> Element {
    let n = pres.ngens();
    let mut t = Terms::new();
    let count = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..count {
        let deg = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        let p = rng.gen_range(-5i64..=5);
        let q = rng.gen_range(1i64..=3);
        add_term(&mut t, Monomial::from_exps(exps), frac(p, q));
    }
    Element::from_terms(pres.clone(), t)
}

/// Number of random triples violating `(ab)c = a(bc)`.
pub fn associativity_failures(
    pres: &Arc<Presentation>,
    triples: usize,
    seed: u64,
    max_terms: usize,
    max_degree: u32,
) -> crate::error::Result<usize> {
    let mut rng = seeded_rng(seed);
    let mut bad = 0;
    for _ in 0..triples {
        let a = random_element(pres, &mut rng, max_terms, max_degree);
        let b = random_element(pres, &mut rng, max_terms, max_degree);
        let c = random_element(pres, &mut rng, max_terms, max_degree);
        if a.try_mul(&b)?.try_mul(&c)? != a.try_mul(&b.try_mul(&c)?)? {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Number of random pairs violating `j(ab) = j(b) j(a)` or `j(j(a)) = a`.
pub fn antiinvolution_failures(
    pres: &Arc<Presentation>,
    pairs: usize,
    seed: u64,
    max_terms: usize,
    max_degree: u32,
) -> crate::error::Result<usize> {
    let mut rng = seeded_rng(seed);
    let mut bad = 0;
    for _ in 0..pairs {
        let a = random_element(pres, &mut rng, max_terms, max_degree);
        let b = random_element(pres, &mut rng, max_terms, max_degree);
        let ja = a.apply_antiinvolution()?;
        let jb = b.apply_antiinvolution()?;
        let reversed = a.try_mul(&b)?.apply_antiinvolution()? == jb.try_mul(&ja)?;
        if !reversed || ja.apply_antiinvolution()? != a {
            bad += 1;
        }
    }
    Ok(bad)
}
