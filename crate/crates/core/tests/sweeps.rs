//! Exhaustive sweeps over the small parameter grids.

use num_traits::Zero;
use rand::Rng;

use infhecke_core::abelian::pstep_certificate;
use infhecke_core::engine::random::seeded_rng;
use infhecke_core::scalar::{frac, int};
use infhecke_core::sl2::center::tz;
use infhecke_core::sl2::{z0, CenterData};
use infhecke_core::verma::{depth_basis, phi_z, ModuleVector, VermaModule};
use infhecke_core::{Poly, Scalar};

#[test]
fn pstep_degrees() {
    for z in [Poly::var(), Poly::from_ints(&[0, 0, 1]), Poly::from_ints(&[5, 1])] {
        let data = CenterData::new(&z).unwrap();
        let m = data.m() as u32;
        for a in 0..=3 {
            for b in 0..=3 {
                let (p, cert) = pstep_certificate(&data, a, b).unwrap();
                assert_eq!(p.degree(), Some((a * (m + 1) + b) as usize), "z={z} a={a} b={b}");
                assert!(!p.leading().is_zero());
                assert!(cert.verify().unwrap());
            }
        }
    }
}

#[test]
fn central_character_on_every_basis_vector() {
    let mut rng = seeded_rng(7);
    for z in [
        Poly::zero(),
        Poly::one(),
        Poly::var(),
        Poly::from_ints(&[5, 1]),
        Poly::from_ints(&[0, 0, 1]),
        Poly::from_ints(&[1, -2, 0, 1]),
    ] {
        let t = tz(&z).unwrap();
        let reach = t.total_degree() as usize;
        for _ in 0..20 {
            let lambda = frac(rng.gen_range(-20i64..=20), rng.gen_range(1i64..=7));
            let d = 8 + reach;
            let m = VermaModule::new(lambda.clone(), &z, d);
            let phi = phi_z(&lambda, &z).unwrap();
            for k in 0..=(d - reach) {
                for b in depth_basis(k) {
                    let w = ModuleVector::basis(b);
                    assert_eq!(m.act(&t, &w).unwrap(), w.scale(&phi), "z={z} lambda={lambda} {b:?}");
                }
            }
        }
    }
}

fn dp(k: usize) -> Poly {
    Poly::monomial(int(1), k)
}

#[test]
fn z0_grid() {
    for m in 0..=6 {
        for n in 0..=6 {
            let v = z0(&dp(m), &dp(n)).unwrap();
            assert_eq!(v, -z0(&dp(n), &dp(m)).unwrap(), "antisymmetry m={m} n={n}");
            if m + n > 0 {
                let lead = if m == n { Scalar::zero() } else { frac(m as i64 - n as i64, (m + n) as i64) };
                assert_eq!(v.coeff(m + n), lead, "leading m={m} n={n}");
                assert!(v.degree().is_none_or(|d| d <= m + n));
            }
            let c = frac(-3, 5);
            let sum = &dp(m) + &dp(n).scale(&c);
            for k in 0..=3 {
                let lhs = z0(&sum, &dp(k)).unwrap();
                let rhs = &z0(&dp(m), &dp(k)).unwrap() + &z0(&dp(n), &dp(k)).unwrap().scale(&c);
                assert_eq!(lhs, rhs, "bilinearity m={m} n={n} k={k}");
            }
        }
    }
}
