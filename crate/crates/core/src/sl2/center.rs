//! The central element `t_z = t - h z(Delta)/2 - q_z(Delta)` and the
//! polynomial solvers behind it.

use num_traits::Zero;

use super::fg::{fg_first_order, FgMethod};
use super::{fg_pair, Hz};
use crate::engine::Element;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{frac, int};

/// Expands `psi` in the basis `f_1, f_2, ...` (the change of basis is
/// unipotent up to the leading coefficients `2n`). Returns `a_1, a_2, ...`.
fn expand_in_f(psi: &Poly) -> Vec<crate::scalar::Scalar> {
    let Some(d) = psi.degree() else {
        return Vec::new();
    };
    let fg = fg_first_order(d + 1);
    let mut a = vec![crate::scalar::Scalar::zero(); d + 1];
    let mut rest = psi.clone();
    while let Some(k) = rest.degree() {
        let coef = rest.leading() / int(2 * (k as i64 + 1));
        rest = &rest - &fg[k].0.scale(&coef);
        a[k] = coef;
    }
    a
}

fn solve_unchecked(psi: &Poly, eta: &Poly) -> (Poly, Poly) {
    let a = expand_in_f(psi);
    let fg = fg_first_order(a.len());
    let mut alpha = Poly::zero();
    let mut beta = eta.clone();
    for (k, c) in a.iter().enumerate() {
        alpha = &alpha + &Poly::monomial(c.clone(), k + 1);
        beta = &beta - &fg[k].1.scale(c);
    }
    (alpha, beta)
}

/// Checks `2 psi e y + (h psi + eta) x = [alpha, x] + beta x` and
/// `2 psi f x + (eta - h psi) y = [alpha, y] + beta y`.
pub fn check_alpha_beta(hz: &Hz, psi: &Poly, eta: &Poly, alpha: &Poly, beta: &Poly) -> Result<bool> {
    let (e, f, h, x, y) = (hz.e(), hz.f(), hz.h(), hz.x(), hz.y());
    let (ps, et, al, be) = (hz.eval(psi), hz.eval(eta), hz.eval(alpha), hz.eval(beta));
    let two = int(2);
    let lhs_x = &(&(&ps * &e) * &y).scale(&two) + &(&(&(&h * &ps) + &et) * &x);
    let rhs_x = &al.commutator(&x)? + &(&be * &x);
    let lhs_y = &(&(&ps * &f) * &x).scale(&two) + &(&(&et - &(&h * &ps)) * &y);
    let rhs_y = &al.commutator(&y)? + &(&be * &y);
    Ok(lhs_x == rhs_x && lhs_y == rhs_y)
}

/// The unique `(alpha, beta)` (with `alpha(0) = 0`) solving both identities of
/// [`check_alpha_beta`]; the solution is verified by the engine in `H_0`.
pub fn solve_alpha_beta(psi: &Poly, eta: &Poly) -> Result<(Poly, Poly)> {
    let (alpha, beta) = solve_unchecked(psi, eta);
    let h0 = Hz::new(&Poly::zero());
    if !check_alpha_beta(&h0, psi, eta, &alpha, &beta)? {
        return Err(Error::Invariant("alpha/beta identity failed".into()));
    }
    Ok((alpha, beta))
}

/// `z0(Delta^m, Delta^n)` before verification.
fn z0_monomial(m: usize, n: usize) -> Result<Poly> {
    if m == n {
        return Ok(Poly::zero());
    }
    let top = m.max(n);
    let fg = fg_first_order(top.max(1));
    let get = |k: usize| {
        if k == 0 {
            (Poly::zero(), Poly::zero())
        } else {
            fg[k - 1].clone()
        }
    };
    let (fm, gm) = get(m);
    let (fn_, gn) = get(n);
    let dm = Poly::monomial(int(1), m);
    let dn = Poly::monomial(int(1), n);
    let psi = &(&dn * &fm) - &(&dm * &fn_);
    let eta = &(&dn * &gm) - &(&dm * &gn);
    let (alpha, beta) = solve_unchecked(&psi, &eta);
    if !beta.is_zero() {
        return Err(Error::Invariant(format!("z0(Delta^{m}, Delta^{n}): beta = {beta}")));
    }
    Ok(alpha)
}

/// The polynomial `z0` with zero constant term and
/// `[z0(Delta), x] = z x z' - z' x z`, verified by the engine.
pub fn z0(z: &Poly, zprime: &Poly) -> Result<Poly> {
    let mut out = Poly::zero();
    for (m, a) in z.coeffs().iter().enumerate() {
        for (n, b) in zprime.coeffs().iter().enumerate() {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            out = &out + &z0_monomial(m, n)?.scale(&(a * b));
        }
    }
    let hz = Hz::new(&Poly::zero());
    let (ze, zpe, x) = (hz.eval(z), hz.eval(zprime), hz.x());
    let lhs = hz.eval(&out).commutator(&x)?;
    let rhs = &(&(&ze * &x) * &zpe) - &(&(&zpe * &x) * &ze);
    if lhs != rhs {
        return Err(Error::Invariant("z0 bracket identity failed".into()));
    }
    Ok(out)
}

/// `q_z = z/4 - Delta z/4 - z0(Delta, z)/4`, with `[x, t - h z/2 - q_z] = 0`
/// verified in `H_z`.
pub fn qz(z: &Poly) -> Result<Poly> {
    let q = qz_unchecked(z)?;
    let hz = Hz::new(z);
    let c = hz.x().commutator(&candidate_tz(&hz, &q))?;
    if !c.is_zero() {
        return Err(Error::Invariant(format!("[x, t - hz/2 - q_z] = {c}")));
    }
    Ok(q)
}

fn qz_unchecked(z: &Poly) -> Result<Poly> {
    let quarter = frac(1, 4);
    let zz = z0(&Poly::var(), z)?;
    Ok((&(z - &(&Poly::var() * z)) - &zz).scale(&quarter))
}

fn candidate_tz(hz: &Hz, q: &Poly) -> Element {
    let half_hz = (&hz.h() * &hz.z_element()).scale(&frac(1, 2));
    &(&hz.t() - &half_hz) - &hz.eval(q)
}

/// Everything attached to the center of `H_z` for a fixed `z`.
#[derive(Clone, Debug)]
pub struct CenterData {
    hz: Hz,
    fg: Vec<(Poly, Poly)>,
    q: Poly,
    tz: Element,
}

impl CenterData {
    /// Builds `q_z` and `t_z` and verifies centrality of `t_z`.
    pub fn new(z: &Poly) -> Result<Self> {
        let hz = Hz::new(z);
        let m = z.degree().unwrap_or(0);
        let fg = fg_first_order((m + 2).max(20));
        let q = qz_unchecked(z)?;
        let tz = candidate_tz(&hz, &q);
        if !hz.verify_central(&tz) {
            return Err(Error::Invariant(format!("t_z is not central for z = {z}")));
        }
        Ok(CenterData { hz, fg, q, tz })
    }

    pub fn hz(&self) -> &Hz {
        &self.hz
    }

    pub fn z(&self) -> &Poly {
        self.hz.z()
    }

    /// Degree of `z` (0 for the zero polynomial).
    pub fn m(&self) -> usize {
        self.z().degree().unwrap_or(0)
    }

    pub fn fg(&self) -> &[(Poly, Poly)] {
        &self.fg
    }

    pub fn qz(&self) -> &Poly {
        &self.q
    }

    pub fn tz(&self) -> &Element {
        &self.tz
    }
}

/// The central element `t_z` of `H_z`.
pub fn tz(z: &Poly) -> Result<Element> {
    Ok(CenterData::new(z)?.tz)
}

/// Closed form for linear `z = a Delta + b`:
/// `t - h(a Delta + b)/2 + (a Delta^2 + (2b - a) Delta)/4`.
pub fn tz_linear_closed_form(a: &crate::scalar::Scalar, b: &crate::scalar::Scalar) -> Element {
    let z = Poly::new(vec![b.clone(), a.clone()]);
    let hz = Hz::new(&z);
    let quarter = Poly::new(vec![
        int(0),
        &(b * int(2)) - a,
        a.clone(),
    ])
    .scale(&frac(1, 4));
    let half_hz = (&hz.h() * &hz.z_element()).scale(&frac(1, 2));
    &(&hz.t() - &half_hz) + &hz.eval(&quarter)
}

/// Convenience for callers that only need `(f_n, g_n)` from the cache.
pub fn fg_cached(data: &CenterData, n: usize) -> Result<(Poly, Poly)> {
    match data.fg.get(n.wrapping_sub(1)) {
        Some(p) => Ok(p.clone()),
        None => fg_pair(n, FgMethod::FirstOrder),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn solver_examples() {
        assert_eq!(
            solve_alpha_beta(&Poly::zero(), &Poly::zero()).unwrap(),
            (Poly::zero(), Poly::zero())
        );
        assert_eq!(
            solve_alpha_beta(&Poly::from_ints(&[2]), &Poly::zero()).unwrap(),
            (Poly::var(), Poly::from_ints(&[3]))
        );
        let f2 = Poly::from_ints(&[4, 4]);
        let g2 = Poly::from_ints(&[-9, -10]);
        assert_eq!(
            solve_alpha_beta(&f2.scale(&int(2)), &Poly::zero()).unwrap(),
            (Poly::monomial(int(2), 2), g2.scale(&int(-2)))
        );
    }

    #[test]
    fn z0_examples() {
        let d = Poly::var();
        assert!(z0(&d, &d).unwrap().is_zero());
        let v = z0(&Poly::monomial(int(1), 2), &d).unwrap();
        assert_eq!(v.degree(), Some(3));
        assert_eq!(v.leading(), frac(1, 3));
        assert_eq!(z0(&d, &Poly::one()).unwrap(), d);
        assert_eq!(z0(&Poly::one(), &d).unwrap(), -&d);
    }

    #[test]
    fn qz_examples() {
        assert_eq!(qz(&Poly::one()).unwrap(), Poly::new(vec![frac(1, 4), frac(-1, 2)]));
        assert!(qz(&Poly::zero()).unwrap().is_zero());
    }

    #[test]
    fn tz_examples() {
        let h0 = Hz::new(&Poly::zero());
        assert_eq!(tz(&Poly::zero()).unwrap(), h0.t());
        for (a, b) in [(1, 0), (0, 1), (2, -3)] {
            let z = Poly::from_ints(&[b, a]);
            let diff = &tz(&z).unwrap() - &tz_linear_closed_form(&int(a), &int(b));
            assert!(diff.is_zero() || diff.total_degree() == 0, "{diff}");
        }
        let data = CenterData::new(&Poly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(data.tz().apply_antiinvolution().unwrap(), *data.tz());
        assert_eq!(data.m(), 2);
        let _: Scalar = data.qz().leading();
    }
}
