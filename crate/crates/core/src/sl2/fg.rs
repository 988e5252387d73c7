//! The polynomials `f_n, g_n` with
//! `[Delta^n, x] = (f_n(Delta) h + g_n(Delta)) x + 2 f_n(Delta) e y`,
//! computed three independent ways.

use std::ops::{Add, Mul, Sub};
use std::str::FromStr;


use super::{Hz, E, F, H, X, Y};
use crate::engine::Element;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{frac, int};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FgMethod {
    FirstOrder,
    ThreeTerm,
    ClosedForm,
}

impl FromStr for FgMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first-order" => Ok(FgMethod::FirstOrder),
            "three-term" => Ok(FgMethod::ThreeTerm),
            "closed-form" => Ok(FgMethod::ClosedForm),
            _ => Err(Error::Usage(format!("unknown method {s:?}"))),
        }
    }
}

/// `(f_k, g_k)` for `k = 1..=n` from the first-order recursion
/// `f_{k+1} = 2T^k + (T-1) f_k - 2 g_k`, `g_{k+1} = -3T^k + (T+3) g_k - 2T f_k`.
pub fn fg_first_order(n: usize) -> Vec<(Poly, Poly)> {
    let t = Poly::var();
    let mut out = vec![(Poly::from_ints(&[2]), Poly::from_ints(&[-3]))];
    while out.len() < n {
        let k = out.len();
        let (f, g) = &out[k - 1];
        let tk = Poly::monomial(int(1), k);
        let f1 = &(&tk.scale(&int(2)) + &(&(&t - &Poly::one()) * f)) - &g.scale(&int(2));
        let g1 = &(&tk.scale(&int(-3)) + &(&(&t + &Poly::from_ints(&[3])) * g))
            - &(&t * f).scale(&int(2));
        out.push((f1, g1));
    }
    out.truncate(n);
    out
}

/// Same list from the three-term recursions seeded with `f_0 = g_0 = 0` and
/// `(f_1, g_1) = (2, -3)`.
pub fn fg_three_term(n: usize) -> Vec<(Poly, Poly)> {
    let a = Poly::from_ints(&[2, 2]);
    let b = Poly::from_ints(&[-3, -2, 1]);
    let mut fs = vec![Poly::zero(), Poly::from_ints(&[2])];
    let mut gs = vec![Poly::zero(), Poly::from_ints(&[-3])];
    while fs.len() <= n {
        let k = fs.len() - 2;
        let f = &(&a * &fs[k + 1]) - &(&b * &fs[k]);
        let inhom = &Poly::monomial(int(4), k + 1) + &Poly::monomial(int(3), k);
        let g = &(&(&a * &gs[k + 1]) - &inhom) - &(&b * &gs[k]);
        fs.push(f);
        gs.push(g);
    }
    fs.into_iter().zip(gs).skip(1).take(n).collect()
}

/// `p + q s` in `Q[T][s] / (s^2 - (T + 1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtRingElement {
    pub p: Poly,
    pub q: Poly,
}

impl SqrtRingElement {
    pub fn new(p: Poly, q: Poly) -> Self {
        SqrtRingElement { p, q }
    }

    pub fn s() -> Self {
        Self::new(Poly::zero(), Poly::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::new(Poly::from_ints(&[c]), Poly::zero())
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::constant(1), |acc, _| &acc * self)
    }
}

impl Add for &SqrtRingElement {
    type Output = SqrtRingElement;
    fn add(self, o: &SqrtRingElement) -> SqrtRingElement {
        SqrtRingElement::new(&self.p + &o.p, &self.q + &o.q)
    }
}

impl Sub for &SqrtRingElement {
    type Output = SqrtRingElement;
    fn sub(self, o: &SqrtRingElement) -> SqrtRingElement {
        SqrtRingElement::new(&self.p - &o.p, &self.q - &o.q)
    }
}

impl Mul for &SqrtRingElement {
    type Output = SqrtRingElement;
    fn mul(self, o: &SqrtRingElement) -> SqrtRingElement {
        let s2 = Poly::from_ints(&[1, 1]);
        SqrtRingElement::new(
            &(&self.p * &o.p) + &(&(&self.q * &o.q) * &s2),
            &(&self.p * &o.q) + &(&self.q * &o.p),
        )
    }
}

/// Closed forms with `s = sqrt(T+1)`:
/// `f_n = 1/2 s^{n-1} ((s+2)^n - (s-2)^n)` and
/// `g_n = T^n - 1/2 s^{n-1} ((s+1)(s+2)^n + (s-1)(s-2)^n)`.
pub fn fg_closed_form(n: usize) -> Result<(Poly, Poly)> {
    let s = SqrtRingElement::s();
    let c = SqrtRingElement::constant;
    let plus2 = (&s + &c(2)).pow(n);
    let minus2 = (&s - &c(2)).pow(n);
    let lead = s.pow(n - 1);
    let half = frac(1, 2);
    let f = &lead * &(&plus2 - &minus2);
    let g_inner = &lead * &(&(&(&s + &c(1)) * &plus2) + &(&(&s - &c(1)) * &minus2));
    if !f.q.is_zero() || !g_inner.q.is_zero() {
        return Err(Error::Invariant(format!(
            "odd part in s did not cancel for n = {n}"
        )));
    }
    let g = &Poly::monomial(int(1), n) - &g_inner.p.scale(&half);
    Ok((f.p.scale(&half), g))
}

pub fn fg_pair(n: usize, method: FgMethod) -> Result<(Poly, Poly)> {
    if n < 1 {
        return Err(Error::Usage("fg_pair needs n >= 1".into()));
    }
    match method {
        FgMethod::FirstOrder => Ok(fg_first_order(n).pop().expect("n >= 1")),
        FgMethod::ThreeTerm => Ok(fg_three_term(n).pop().expect("n >= 1")),
        FgMethod::ClosedForm => fg_closed_form(n),
    }
}

/// Right-hand side of the `[Delta^n, x]` formula, or its image under the
/// anti-involution for `y`: `-y (h f_n + g_n) + 2 x f f_n`.
pub fn delta_power_formula(hz: &Hz, n: usize, gen: usize) -> Result<Element> {
    let (f_n, g_n) = fg_pair(n, FgMethod::FirstOrder)?;
    let p = hz.presentation();
    let (fe, ge) = (hz.eval(&f_n), hz.eval(&g_n));
    let (e, f, h, x, y) = (p.gen(E), p.gen(F), p.gen(H), p.gen(X), p.gen(Y));
    match gen {
        X => Ok(&(&(&(&fe * &h) + &ge) * &x) + &(&(&fe * &e) * &y).scale(&int(2))),
        Y => Ok(&(&(&x * &f) * &fe).scale(&int(2)) - &(&y * &(&(&h * &fe) + &ge))),
        _ => Err(Error::Usage("generator must be x or y".into())),
    }
}

/// Engine value of `[Delta^n, gen]`, checked against the closed formula.
pub fn delta_power_commutator(hz: &Hz, n: usize, gen: usize) -> Result<Element> {
    if n < 1 {
        return Err(Error::Usage("n must be positive".into()));
    }
    let target = hz.presentation().gen(gen);
    let lhs = hz.casimir().pow(n as u32).commutator(&target)?;
    let rhs = delta_power_formula(hz, n, gen)?;
    if lhs != rhs {
        return Err(Error::Invariant(format!(
            "[Delta^{n}, {}] differs from the f_n/g_n formula",
            hz.presentation().generators()[gen].name
        )));
    }
    Ok(lhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        for m in [FgMethod::FirstOrder, FgMethod::ThreeTerm, FgMethod::ClosedForm] {
            assert_eq!(
                fg_pair(1, m).unwrap(),
                (Poly::from_ints(&[2]), Poly::from_ints(&[-3]))
            );
            assert_eq!(
                fg_pair(2, m).unwrap(),
                (Poly::from_ints(&[4, 4]), Poly::from_ints(&[-9, -10]))
            );
            assert_eq!(
                fg_pair(3, m).unwrap(),
                (Poly::from_ints(&[14, 20, 6]), Poly::from_ints(&[-27, -47, -21]))
            );
        }
        assert!(fg_pair(0, FgMethod::FirstOrder).is_err());
    }

    #[test]
    fn methods_agree_with_leading_data() {
        let a = fg_first_order(20);
        let b = fg_three_term(20);
        for (k, (fo, tt)) in a.iter().zip(&b).enumerate() {
            let n = k + 1;
            assert_eq!(fo, tt);
            assert_eq!(*fo, fg_closed_form(n).unwrap());
            assert_eq!(fo.0.degree(), Some(n - 1));
            assert_eq!(fo.0.leading(), int(2 * n as i64));
            assert_eq!(fo.1.degree(), Some(n - 1));
            assert_eq!(fo.1.leading(), int(-(n as i64) * (2 * n as i64 + 1)));
        }
    }

    #[test]
    fn engine_matches_formula() {
        let hz = Hz::new(&Poly::zero());
        for n in 1..=3 {
            delta_power_commutator(&hz, n, X).unwrap();
            delta_power_commutator(&hz, n, Y).unwrap();
        }
    }
}
