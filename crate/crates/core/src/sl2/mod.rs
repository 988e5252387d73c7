//! `U(sl2)` and the algebras `H_z` generated by `e, f, h` and the module
//! generators `x, y` with `[x, y] = z(Delta)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use crate::engine::{Element, GenKind, Monomial, Presentation, PresentationBuilder, Terms};
use crate::poly::Poly;
use crate::scalar::{int, Scalar};

pub mod center;
pub mod centralizer;
pub mod fg;

pub use center::{qz, solve_alpha_beta, z0, CenterData};
pub use fg::{delta_power_commutator, fg_pair, FgMethod};

pub const E: usize = 0;
pub const F: usize = 1;
pub const H: usize = 2;
pub const X: usize = 3;
pub const Y: usize = 4;

fn lin(ngens: usize, parts: &[(usize, i64)]) -> Terms {
    parts
        .iter()
        .map(|&(g, c)| (Monomial::generator(ngens, g), int(c)))
        .collect()
}

fn sl2_builder(id: String, ngens: usize) -> PresentationBuilder {
    PresentationBuilder::new(id)
        .generator("e", GenKind::Lie, int(2))
        .generator("f", GenKind::Lie, int(-2))
        .generator("h", GenKind::Lie, int(0))
        .bracket(E, F, lin(ngens, &[(H, 1)]))
        .bracket(H, E, lin(ngens, &[(E, 2)]))
        .bracket(H, F, lin(ngens, &[(F, -2)]))
        .grading(H)
}

fn delta_terms(ngens: usize) -> Terms {
    let mut t = Terms::new();
    let mono = |e: u32, f: u32, h: u32| {
        let mut v = vec![0; ngens];
        v[E] = e;
        v[F] = f;
        v[H] = h;
        Monomial::from_exps(v)
    };
    t.insert(mono(0, 0, 2), int(1));
    t.insert(mono(1, 1, 0), int(4));
    t.insert(mono(0, 0, 1), int(-2));
    t
}

/// The universal enveloping algebra of `sl2` on `e, f, h`.
pub fn ug() -> Arc<Presentation> {
    static UG: OnceLock<Arc<Presentation>> = OnceLock::new();
    UG.get_or_init(|| {
        sl2_builder("U(sl2)".into(), 3)
            .involution(vec![lin(3, &[(F, -1)]), lin(3, &[(E, -1)]), lin(3, &[(H, 1)])])
            .alias("Delta", delta_terms(3))
            .build()
    })
    .clone()
}

/// `Delta = h^2 + 4ef - 2h` in `U(sl2)`.
pub fn casimir_ug() -> Element {
    Element::from_terms(ug(), delta_terms(3))
}

/// Evaluates a polynomial at `Delta` inside `U(sl2)`.
pub fn eval_ug(p: &Poly) -> Element {
    let d = casimir_ug();
    let u = ug();
    p.coeffs()
        .iter()
        .rev()
        .fold(u.zero(), |acc, c| &(&acc * &d) + &u.scalar(c.clone()))
}

pub fn hz_id(z: &Poly) -> String {
    format!("H_z[z={z}]")
}

fn build_hz(z: &Poly) -> Arc<Presentation> {
    let n = 5;
    let zdelta = eval_ug(z);
    let neg_z: Terms = zdelta
        .terms()
        .iter()
        .map(|(m, c)| (m.embed(n), -c))
        .collect();
    let t_terms = {
        let mut t = Terms::new();
        t.insert(Monomial::from_exps(vec![1, 0, 0, 0, 2]), int(1));
        t.insert(Monomial::from_exps(vec![0, 0, 1, 1, 1]), int(1));
        t.insert(Monomial::from_exps(vec![0, 1, 0, 2, 0]), int(-1));
        t
    };
    sl2_builder(hz_id(z), n)
        .generator("x", GenKind::Module, int(1))
        .generator("y", GenKind::Module, int(-1))
        .bracket(X, E, Terms::new())
        .bracket(X, F, lin(n, &[(Y, -1)]))
        .bracket(X, H, lin(n, &[(X, -1)]))
        .bracket(Y, E, lin(n, &[(X, -1)]))
        .bracket(Y, F, Terms::new())
        .bracket(Y, H, lin(n, &[(Y, 1)]))
        .bracket(Y, X, neg_z)
        .involution(vec![
            lin(n, &[(F, -1)]),
            lin(n, &[(E, -1)]),
            lin(n, &[(H, 1)]),
            lin(n, &[(Y, 1)]),
            lin(n, &[(X, 1)]),
        ])
        .alias("Delta", delta_terms(n))
        .alias("t", t_terms)
        .build()
}

/// The presentation of `H_z`, shared per `z` so straightening caches are reused.
pub fn hz_presentation(z: &Poly) -> Arc<Presentation> {
    static REGISTRY: OnceLock<Mutex<HashMap<Poly, Arc<Presentation>>>> = OnceLock::new();
    let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = reg.lock().expect("registry poisoned");
    map.entry(z.clone()).or_insert_with(|| build_hz(z)).clone()
}

/// `H_z` together with handles for its distinguished elements.
#[derive(Clone, Debug)]
pub struct Hz {
    z: Poly,
    pres: Arc<Presentation>,
    delta: Element,
}

impl Hz {
    pub fn new(z: &Poly) -> Self {
        let pres = hz_presentation(z);
        let delta = Element::from_terms(pres.clone(), delta_terms(5));
        Hz {
            z: z.clone(),
            pres,
            delta,
        }
    }

    pub fn z(&self) -> &Poly {
        &self.z
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn e(&self) -> Element {
        self.pres.gen(E)
    }
    pub fn f(&self) -> Element {
        self.pres.gen(F)
    }
    pub fn h(&self) -> Element {
        self.pres.gen(H)
    }
    pub fn x(&self) -> Element {
        self.pres.gen(X)
    }
    pub fn y(&self) -> Element {
        self.pres.gen(Y)
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..5).map(|g| self.pres.gen(g)).collect()
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        self.pres.scalar(c)
    }

    pub fn one(&self) -> Element {
        self.pres.scalar(Scalar::one())
    }

    /// `Delta = h^2 + 4ef - 2h`.
    pub fn casimir(&self) -> Element {
        self.delta.clone()
    }

    /// `t = e y^2 + h x y - f x^2`.
    pub fn t(&self) -> Element {
        let (e, f, h, x, y) = (self.e(), self.f(), self.h(), self.x(), self.y());
        &(&(&e * &y) * &y) + &(&(&(&h * &x) * &y) - &(&(&f * &x) * &x))
    }

    /// `p(Delta)`.
    pub fn eval(&self, p: &Poly) -> Element {
        eval_ug(p).embed_into(&self.pres)
    }

    /// `z(Delta)`.
    pub fn z_element(&self) -> Element {
        self.eval(&self.z)
    }

    /// True iff `a` commutes with all five generators.
    pub fn verify_central(&self, a: &Element) -> bool {
        self.generators()
            .iter()
            .all(|g| a.commutator(g).map(|c| c.is_zero()).unwrap_or(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h1() -> Hz {
        Hz::new(&Poly::one())
    }

    #[test]
    fn normal_form_examples() {
        let hz = Hz::new(&Poly::zero());
        let p = hz.presentation();
        assert_eq!(
            p.normal_form(&[F, E]).unwrap(),
            &p.monomial(&[1, 1, 0, 0, 0]) - &hz.h()
        );
        assert_eq!(p.normal_form(&[X, H]).unwrap(), &(&hz.h() * &hz.x()) - &hz.x());
        let h1 = h1();
        assert_eq!(
            h1.presentation().normal_form(&[Y, X]).unwrap(),
            &(&h1.x() * &h1.y()) - &h1.one()
        );
        assert!(p.normal_form(&[7]).is_err());
    }

    #[test]
    fn yx_with_casimir_z() {
        let hz = Hz::new(&Poly::var());
        let yx = &hz.y() * &hz.x();
        assert_eq!(yx, &(&hz.x() * &hz.y()) - &hz.casimir());
    }

    #[test]
    fn casimir_brackets() {
        let hz = Hz::new(&Poly::zero());
        let d = hz.casimir();
        for g in [hz.e(), hz.f(), hz.h()] {
            assert!(d.commutator(&g).unwrap().is_zero());
        }
        let two_h = hz.h().scale(&int(2));
        let dx = &(&(&two_h - &hz.scalar(int(3))) * &hz.x())
            + &(&hz.e() * &hz.y()).scale(&int(4));
        assert_eq!(d.commutator(&hz.x()).unwrap(), dx);
        let dy = &(&(&(-&two_h) - &hz.scalar(int(3))) * &hz.y())
            + &(&hz.f() * &hz.x()).scale(&int(4));
        assert_eq!(d.commutator(&hz.y()).unwrap(), dy);
    }

    #[test]
    fn ad_power_examples() {
        let hz = Hz::new(&Poly::zero());
        let d = hz.casimir();
        assert!(hz.x().ad_power(3, &d).unwrap().is_zero());
        assert!(hz.y().ad_power(3, &d).unwrap().is_zero());
        assert_eq!(hz.e().ad_power(2, &hz.f()).unwrap(), hz.e().scale(&int(-2)));
        let t = hz.t();
        assert_eq!(hz.e().ad_power(0, &t).unwrap(), t);
        assert!(hz.e().ad_power(-1, &t).is_err());
    }

    #[test]
    fn weights_and_degrees() {
        let hz = Hz::new(&Poly::zero());
        assert_eq!(hz.x().weight_of(), Some(int(1)));
        assert_eq!((&(&hz.e() * &hz.y()) * &hz.y()).weight_of(), Some(int(0)));
        assert_eq!((&hz.e() + &hz.x()).weight_of(), None);
        assert_eq!(hz.t().filtration_degrees().unwrap(), (2, 3));
        assert_eq!(hz.casimir().filtration_degrees().unwrap(), (0, 2));
        assert_eq!(hz.x().filtration_degrees().unwrap(), (1, 1));
        assert!(hz.presentation().zero().filtration_degrees().is_err());
    }

    #[test]
    fn antiinvolution_examples() {
        let hz = Hz::new(&Poly::from_ints(&[0, 0, 1]));
        assert_eq!(hz.t().apply_antiinvolution().unwrap(), hz.t());
        assert_eq!(hz.casimir().apply_antiinvolution().unwrap(), hz.casimir());
        let ef = &hz.e() * &hz.f();
        assert_eq!(ef.apply_antiinvolution().unwrap(), ef);
    }

    #[test]
    fn t_fails_centrality_for_nonzero_z() {
        let h0 = Hz::new(&Poly::zero());
        assert!(h0.verify_central(&h0.t()));
        let h1 = h1();
        assert!(!h1.verify_central(&h1.t()));
        assert_eq!(h1.e().commutator(&h1.t()).unwrap(), -h1.e());
        assert!(h1.verify_central(&h1.one()));
    }

    #[test]
    fn serialization() {
        let hz = Hz::new(&Poly::zero());
        let two_e = hz.e().scale(&int(2));
        let j = two_e.serialize();
        assert!(j.contains(r#""terms":[{"exp":{"e":1},"coeff":"2"}]"#), "{j}");
        let t = hz.t();
        assert_eq!(Element::deserialize(hz.presentation(), &t.serialize()).unwrap(), t);
        let bad = r#"{"terms":[{"exp":{"e":1},"coeff":"1/0"}]}"#;
        assert!(Element::deserialize(hz.presentation(), bad).is_err());
        let unknown = r#"{"terms":[{"exp":{"q":1},"coeff":"1"}]}"#;
        assert!(Element::deserialize(hz.presentation(), unknown).is_err());
        assert!(Element::deserialize(hz.presentation(), "{").is_err());
    }
}
