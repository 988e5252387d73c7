//! Randomized invariants of the engine and the sl2 constructions.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use infhecke_core::abelian::{lfilt_decompose, CommutatorSpan};
use infhecke_core::engine::random::{random_element, seeded_rng};
use infhecke_core::families::{build_presentation, Family, FamilySpec};
use infhecke_core::scalar::{frac, int};
use infhecke_core::sl2::center::{check_alpha_beta, tz};
use infhecke_core::sl2::centralizer::{maximal_vectors_ug, monomials_up_to};
use infhecke_core::sl2::{solve_alpha_beta, ug, Hz, X, Y};
use infhecke_core::verma::{alpha_partial_sum, alpha_rm, depth_basis, ModuleVector, VermaModule};
use infhecke_core::{Element, Poly, Presentation, Scalar};

fn presentations() -> &'static Vec<Arc<Presentation>> {
    static ALL: OnceLock<Vec<Arc<Presentation>>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut v = vec![ug()];
        for z in [Poly::zero(), Poly::one(), Poly::var(), Poly::from_ints(&[-3, 0, 1])] {
            v.push(Hz::new(&z).presentation().clone());
        }
        v.push(build_presentation(&FamilySpec::new(Family::Sp2n, 2, int(1), int(0)).unwrap()).unwrap());
        v.push(build_presentation(&FamilySpec::new(Family::Gln, 2, int(1), int(1)).unwrap()).unwrap());
        v
    })
}

fn triple(which: usize, seed: u64, terms: usize, degree: u32) -> (Element, Element, Element) {
    let p = &presentations()[which % presentations().len()];
    let mut rng = seeded_rng(seed);
    (
        random_element(p, &mut rng, terms, degree),
        random_element(p, &mut rng, terms, degree),
        random_element(p, &mut rng, terms, degree),
    )
}

fn small_poly(coeffs: Vec<(i64, i64)>) -> Poly {
    Poly::new(coeffs.into_iter().map(|(p, q)| frac(p, q)).collect())
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn associativity(which in 0usize..7, seed in any::<u64>()) {
        let (a, b, c) = triple(which, seed, 3, 3);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributivity(which in 0usize..7, seed in any::<u64>()) {
        let (a, b, c) = triple(which, seed, 3, 3);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn anti_involution(which in 0usize..7, seed in any::<u64>()) {
        let (a, b, _) = triple(which, seed, 3, 3);
        let j = |e: &Element| e.apply_antiinvolution().unwrap();
        prop_assert_eq!(j(&(&a * &b)), &j(&b) * &j(&a));
        prop_assert_eq!(j(&j(&a)), a);
    }

    #[test]
    fn normal_forms_have_no_zero_coefficients(which in 0usize..7, seed in any::<u64>()) {
        let (a, b, _) = triple(which, seed, 4, 3);
        prop_assert!((&a * &b).terms().values().all(|c| c != &Scalar::from_integer(0.into())));
    }

    #[test]
    fn module_filtration(which in 0usize..7, seed in any::<u64>()) {
        let (a, b, _) = triple(which, seed, 3, 4);
        prop_assert!((&a * &b).module_degree() <= a.module_degree() + b.module_degree());
    }

    #[test]
    fn weight_additivity(which in 0usize..7, seed in any::<u64>()) {
        let (a, b, _) = triple(which, seed, 4, 3);
        for (wa, pa) in a.weight_components() {
            for (wb, pb) in b.weight_components() {
                let prod = &pa * &pb;
                if !prod.is_zero() {
                    prop_assert_eq!(prod.weight_of(), Some(&wa + &wb));
                }
            }
        }
    }

    #[test]
    fn serialization_round_trip(which in 0usize..7, seed in any::<u64>()) {
        let (a, _, _) = triple(which, seed, 6, 4);
        let p = a.presentation().clone();
        prop_assert_eq!(&Element::deserialize(&p, &a.serialize()).unwrap(), &a);
        prop_assert_eq!(&infhecke_core::expr::parse_element(&a.to_string(), &p).unwrap(), &a);
    }

    #[test]
    fn poly_json_round_trip(c in coeffs(7)) {
        let p = small_poly(c);
        prop_assert_eq!(Poly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn alpha_beta_round_trip(psi in coeffs(6), eta in coeffs(6)) {
        let (psi, eta) = (small_poly(psi), small_poly(eta));
        let (alpha, beta) = solve_alpha_beta(&psi, &eta).unwrap();
        let h1 = Hz::new(&Poly::one());
        prop_assert!(check_alpha_beta(&h1, &psi, &eta, &alpha, &beta).unwrap());
    }

    #[test]
    fn alpha_telescoping(z in coeffs(4), r in 0i64..8, dm in 0i64..8) {
        let z = small_poly(z);
        let m = 2 + dm.min(r);
        prop_assert_eq!(
            alpha_rm(r, m, &z).unwrap(),
            alpha_partial_sum(r + 1, &z) - alpha_partial_sum(r + 2 - m, &z)
        );
    }

    #[test]
    fn verma_weight_bookkeeping(p in -12i64..12, q in 1i64..5, seed in any::<u64>()) {
        let lambda = frac(p, q);
        let m = VermaModule::new(lambda, &Poly::one(), 12);
        let pres = m.hz().presentation().clone();
        let mut rng = seeded_rng(seed);
        let a = random_element(&pres, &mut rng, 4, 3);
        for (w, part) in a.weight_components() {
            for k in 0..=4 {
                for b in depth_basis(k) {
                    let img = m.act(&part, &ModuleVector::basis(b)).unwrap();
                    let target = k as i64 - infhecke_core::scalar::to_i64(&w).unwrap();
                    prop_assert!(img.terms.keys().all(|&(i, j)| (2 * i + j) as i64 == target));
                }
            }
        }
    }

    #[test]
    fn lfilt_degree_discipline(which in 0usize..3, seed in any::<u64>()) {
        let hz = Hz::new(&[Poly::zero(), Poly::one(), Poly::var()][which]);
        let mut rng = seeded_rng(seed);
        let u = random_element(&ug(), &mut rng, 4, 4);
        for v in [X, Y] {
            let cert = lfilt_decompose(&hz, &u, v).unwrap();
            prop_assert!(cert.verify().unwrap());
            prop_assert!(cert.max_left_degree() <= u.total_degree() + 1);
        }
    }
}

#[test]
fn alpha_beta_zero_solution() {
    let (a, b) = solve_alpha_beta(&Poly::zero(), &Poly::zero()).unwrap();
    assert!(a.is_zero() && b.is_zero());
}

#[test]
fn tz_fixed_by_involution() {
    for z in [
        Poly::zero(),
        Poly::one(),
        Poly::var(),
        Poly::from_ints(&[5, 1]),
        Poly::from_ints(&[0, 0, 1]),
        Poly::from_ints(&[1, -2, 0, 1]),
    ] {
        let t = tz(&z).unwrap();
        assert_eq!(t.apply_antiinvolution().unwrap(), t, "z = {z}");
    }
}

#[test]
fn maximal_vector_counts() {
    for w in [0, 2, 4, 6] {
        for bound in 0..=6 {
            let r = maximal_vectors_ug(w, bound).unwrap();
            assert!(r.agree, "weight {w}, bound {bound}");
        }
    }
}

#[test]
fn ordered_products_concatenate_in_h0() {
    let hz = Hz::new(&Poly::zero());
    let p = hz.presentation();
    // e^a f^b times h^c x^d y^k needs no straightening
    for m in monomials_up_to(5, 3) {
        let e = m.exps();
        let left = p.monomial(&[e[0], e[1], 0, 0, 0]);
        let right = p.monomial(&[0, 0, e[2], e[3], e[4]]);
        assert_eq!(&left * &right, p.monomial(e));
    }
}

#[test]
fn span_monotone_in_the_bound() {
    let hz = Hz::new(&Poly::var());
    let small = CommutatorSpan::new(hz.z(), 3, false);
    let big = CommutatorSpan::new(hz.z(), 4, false);
    for w in -4..=4 {
        let w = int(w);
        assert!(small.rank(&w).unwrap() <= big.rank(&w).unwrap());
    }
    let u = ug();
    for a in monomials_up_to(3, 2) {
        for g in 0..5 {
            let left = u.monomial(a.exps()).embed_into(hz.presentation());
            let c = left.commutator(&hz.presentation().gen(g)).unwrap();
            assert!(small.contains(&c).unwrap());
            assert!(big.contains(&c).unwrap());
        }
    }
}

#[test]
fn commutator_quotient_at_z_zero() {
    let span = CommutatorSpan::new(&Poly::zero(), 4, false);
    let hz = span.hz();
    assert!(span.contains(&hz.t()).unwrap());
    let u = ug();
    for a in monomials_up_to(3, 1) {
        let left = u.monomial(a.exps()).embed_into(hz.presentation());
        for (v1, v2) in [(hz.x(), hz.x()), (hz.x(), hz.y()), (hz.y(), hz.y())] {
            assert!(span.contains(&(&(&left * &v1) * &v2)).unwrap());
        }
    }
    let span8 = CommutatorSpan::new(&Poly::zero(), 8, false);
    let d = span8.hz().casimir();
    let residues: Vec<_> = (0..3).map(|k| span8.residue(&d.pow(k)).unwrap()).collect();
    assert!(infhecke_core::linalg::nullspace(&residues).is_empty());
}
