//! The undeformed (or scalar-deformed) algebra over `sp(2n)` and the
//! algebras `H_beta(gl_n)` with `beta` at most linear.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::engine::{Element, GenKind, Monomial, Presentation, PresentationBuilder, Terms};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve, SparseVec};
use crate::scalar::{format_scalar, frac, int, parse_scalar, Scalar};
use crate::sl2::centralizer::monomials_up_to;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Sp2n,
    Gln,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sp2n" => Ok(Family::Sp2n),
            "gln" => Ok(Family::Gln),
            _ => Err(Error::Usage(format!("unknown family {s:?}"))),
        }
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Sp2n => "sp2n",
            Family::Gln => "gln",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub beta0: Scalar,
    pub beta1: Scalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilySpecJson {
    pub family: String,
    pub n: usize,
    #[serde(default = "zero_string")]
    pub beta0: String,
    #[serde(default = "zero_string")]
    pub beta1: String,
}

fn zero_string() -> String {
    "0".into()
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, beta0: Scalar, beta1: Scalar) -> Result<Self> {
        let spec = FamilySpec {
            family,
            n,
            beta0,
            beta1,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn undeformed(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            beta0: Scalar::zero(),
            beta1: Scalar::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::Usage("n must be at least 1".into()));
        }
        if self.family == Family::Sp2n && !self.beta1.is_zero() {
            return Err(Error::Usage("sp2n supports only a scalar deformation beta0".into()));
        }
        Ok(())
    }

    pub fn is_undeformed(&self) -> bool {
        self.beta0.is_zero() && self.beta1.is_zero()
    }

    pub fn id(&self) -> String {
        format!(
            "{}[n={},beta0={},beta1={}]",
            self.family.name(),
            self.n,
            format_scalar(&self.beta0),
            format_scalar(&self.beta1)
        )
    }

    pub fn to_json(&self) -> FamilySpecJson {
        FamilySpecJson {
            family: self.family.name().into(),
            n: self.n,
            beta0: format_scalar(&self.beta0),
            beta1: format_scalar(&self.beta1),
        }
    }

    /// Parses `{"family":"gln","n":2,"beta0":"1","beta1":"0"}`.
    pub fn parse_json(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }

    pub fn from_json(j: &FamilySpecJson) -> Result<Self> {
        FamilySpec::new(
            j.family.parse()?,
            j.n,
            parse_scalar(&j.beta0)?,
            parse_scalar(&j.beta1)?,
        )
    }
}

type Matrix = Vec<Vec<Scalar>>;

fn zeros(d: usize) -> Matrix {
    vec![vec![Scalar::zero(); d]; d]
}

fn unit(d: usize, r: usize, c: usize) -> Matrix {
    let mut m = zeros(d);
    m[r][c] = Scalar::one();
    m
}

fn lincomb(parts: &[(i64, &Matrix)]) -> Matrix {
    let d = parts[0].1.len();
    let mut m = zeros(d);
    for (c, a) in parts {
        for r in 0..d {
            for k in 0..d {
                m[r][k] += int(*c) * &a[r][k];
            }
        }
    }
    m
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    let mut m = zeros(d);
    for r in 0..d {
        for k in 0..d {
            if a[r][k].is_zero() {
                continue;
            }
            for c in 0..d {
                m[r][c] += &a[r][k] * &b[k][c];
            }
        }
    }
    m
}

fn flatten(m: &Matrix) -> SparseVec<(usize, usize)> {
    let mut v = SparseVec::new();
    for (r, row) in m.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            if !x.is_zero() {
                v.insert((r, c), x.clone());
            }
        }
    }
    v
}

/// A Lie algebra realized faithfully by matrices on the module `V`, plus the
/// names of the module basis vectors.
struct MatrixRealization {
    lie_names: Vec<String>,
    lie: Vec<Matrix>,
    module_names: Vec<String>,
}

impl MatrixRealization {
    fn decompose(&self, m: &Matrix) -> Vec<Scalar> {
        let cols: Vec<_> = self.lie.iter().map(flatten).collect();
        solve(&cols, &flatten(m)).expect("bracket leaves the Lie algebra")
    }
}

fn sp_realization(n: usize) -> MatrixRealization {
    let d = 2 * n;
    let mut lie_names = Vec::new();
    let mut lie = Vec::new();
    for j in 0..n {
        for k in 0..n {
            lie_names.push(format!("u_{}{}", j + 1, k + 1));
            lie.push(lincomb(&[(1, &unit(d, j, k)), (-1, &unit(d, k + n, j + n))]));
        }
    }
    for j in 0..n {
        for k in j..n {
            lie_names.push(format!("v_{}{}", j + 1, k + 1));
            lie.push(lincomb(&[(1, &unit(d, j, k + n)), (1, &unit(d, k, j + n))]));
        }
    }
    for j in 0..n {
        for k in j..n {
            lie_names.push(format!("w_{}{}", j + 1, k + 1));
            lie.push(lincomb(&[(1, &unit(d, j + n, k)), (1, &unit(d, k + n, j))]));
        }
    }
    MatrixRealization {
        lie_names,
        lie,
        module_names: (1..=d).map(|i| format!("e_{i}")).collect(),
    }
}

fn gl_realization(n: usize) -> MatrixRealization {
    let d = 2 * n;
    let mut lie_names = Vec::new();
    let mut lie = Vec::new();
    for i in 0..n {
        for j in 0..n {
            lie_names.push(format!("E_{}{}", i + 1, j + 1));
            lie.push(lincomb(&[(1, &unit(d, i, j)), (-1, &unit(d, j + n, i + n))]));
        }
    }
    let mut module_names: Vec<String> = (1..=n).map(|i| format!("v_{i}")).collect();
    module_names.extend((1..=n).map(|i| format!("vs_{i}")));
    MatrixRealization {
        lie_names,
        lie,
        module_names,
    }
}

fn sparse_terms(ngens: usize, coeffs: &[(usize, Scalar)]) -> Terms {
    let mut t = Terms::new();
    for (g, c) in coeffs {
        if !c.is_zero() {
            t.insert(Monomial::generator(ngens, *g), c.clone());
        }
    }
    t
}

pub fn build_presentation(spec: &FamilySpec) -> Result<Arc<Presentation>> {
    spec.validate()?;
    let n = spec.n;
    let real = match spec.family {
        Family::Sp2n => sp_realization(n),
        Family::Gln => gl_realization(n),
    };
    let nl = real.lie.len();
    let d = real.module_names.len();
    let ngens = nl + d;

    let grading = real.lie[0].clone();
    let mut weights = Vec::new();
    for (i, x) in real.lie.iter().enumerate() {
        let br = lincomb(&[(1, &matmul(&grading, x)), (-1, &matmul(x, &grading))]);
        let mut c = real.decompose(&br);
        let w = std::mem::take(&mut c[i]);
        assert!(c.iter().all(Zero::is_zero), "basis is not ad-diagonal for the grading");
        weights.push(w);
    }
    let mut b = PresentationBuilder::new(spec.id());
    for (name, w) in real.lie_names.iter().zip(&weights) {
        b = b.generator(name, GenKind::Lie, w.clone());
    }
    for (i, name) in real.module_names.iter().enumerate() {
        b = b.generator(name, GenKind::Module, grading[i][i].clone());
    }
    for i in 0..nl {
        for j in 0..i {
            let (x, y) = (&real.lie[i], &real.lie[j]);
            let br = lincomb(&[(1, &matmul(x, y)), (-1, &matmul(y, x))]);
            let c = real.decompose(&br);
            let coeffs: Vec<_> = c.into_iter().enumerate().collect();
            b = b.bracket(i, j, sparse_terms(ngens, &coeffs));
        }
    }
    for (i, x) in real.lie.iter().enumerate() {
        // [X, e_m] = sum_l X[l][m] e_l
        for m in 0..d {
            let coeffs: Vec<_> = x.iter().enumerate().map(|(l, row)| (nl + l, -&row[m])).collect();
            b = b.bracket(nl + m, i, sparse_terms(ngens, &coeffs));
        }
    }
    match spec.family {
        Family::Sp2n => {
            for i in 0..d {
                for k in (i + 1)..d {
                    if k - i == n {
                        let c = &spec.beta0 * frac(i as i64 - k as i64, n as i64);
                        let mut t = Terms::new();
                        if !c.is_zero() {
                            t.insert(Monomial::unit(ngens), c);
                        }
                        b = b.bracket(nl + i, nl + k, t);
                    }
                }
            }
        }
        Family::Gln => {
            for i in 0..n {
                for j in 0..n {
                    let mut coeffs = Vec::new();
                    if !spec.beta1.is_zero() {
                        coeffs.push((i * n + j, spec.beta1.clone()));
                        if i == j {
                            for k in 0..n {
                                coeffs.push((k * n + k, spec.beta1.clone()));
                            }
                        }
                    }
                    let mut t = Terms::new();
                    for (g, c) in coeffs {
                        crate::engine::add_term(&mut t, Monomial::generator(ngens, g), c);
                    }
                    if i == j {
                        crate::engine::add_term(&mut t, Monomial::unit(ngens), spec.beta0.clone());
                    }
                    b = b.bracket(nl + i, nl + n + j, t);
                }
            }
        }
    }
    let index = |name: &str| {
        real.lie_names
            .iter()
            .chain(&real.module_names)
            .position(|x| x == name)
            .expect("generator name")
    };
    let images: Vec<Terms> = match spec.family {
        Family::Sp2n => {
            let mut v = Vec::new();
            for j in 1..=n {
                for k in 1..=n {
                    v.push(sparse_terms(ngens, &[(index(&format!("u_{k}{j}")), int(1))]));
                }
            }
            for j in 1..=n {
                for k in j..=n {
                    v.push(sparse_terms(ngens, &[(index(&format!("w_{j}{k}")), int(-1))]));
                }
            }
            for j in 1..=n {
                for k in j..=n {
                    v.push(sparse_terms(ngens, &[(index(&format!("v_{j}{k}")), int(-1))]));
                }
            }
            for i in 0..d {
                v.push(sparse_terms(ngens, &[(nl + (i + n) % d, int(1))]));
            }
            v
        }
        Family::Gln => {
            let mut v = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    v.push(sparse_terms(ngens, &[(j * n + i, int(1))]));
                }
            }
            for i in 0..n {
                v.push(sparse_terms(ngens, &[(nl + n + i, int(-1))]));
            }
            for i in 0..n {
                v.push(sparse_terms(ngens, &[(nl + i, int(-1))]));
            }
            v
        }
    };
    b = b.involution(images).grading(0);
    if spec.family == Family::Gln {
        let tau: Vec<_> = (0..n).map(|k| (k * n + k, int(1))).collect();
        b = b.alias("tau", sparse_terms(ngens, &tau));
    }
    Ok(b.build())
}

fn named(p: &Arc<Presentation>, name: &str) -> Element {
    p.gen_named(name).expect("generator exists")
}

/// `t_n = sum_{r,s} (v_rs e_{r+n} e_{s+n} + u_rs e_s e_{r+n} + u_sr e_r e_{s+n} - w_rs e_r e_s)`.
pub fn sp_central_element(spec: &FamilySpec) -> Result<Element> {
    if spec.family != Family::Sp2n || !spec.is_undeformed() {
        return Err(Error::Usage("t_n is defined for the undeformed sp2n algebra".into()));
    }
    let p = build_presentation(spec)?;
    let n = spec.n;
    let sym = |kind: &str, r: usize, s: usize| {
        let (a, b) = (r.min(s), r.max(s));
        named(&p, &format!("{kind}_{a}{b}"))
    };
    let e = |i: usize| named(&p, &format!("e_{i}"));
    let mut t = p.zero();
    for r in 1..=n {
        for s in 1..=n {
            let u_rs = named(&p, &format!("u_{r}{s}"));
            let u_sr = named(&p, &format!("u_{s}{r}"));
            t = &t + &(&(&sym("v", r, s) * &e(r + n)) * &e(s + n));
            t = &t + &(&(&u_rs * &e(s)) * &e(r + n));
            t = &t + &(&(&u_sr * &e(r)) * &e(s + n));
            t = &t - &(&(&sym("w", r, s) * &e(r)) * &e(s));
        }
    }
    Ok(t)
}

/// `r_n = sum v_i vs_i` and
/// `s_n = sum_{p<q} (E_pq v_q vs_p + E_qp v_p vs_q) - (E_pp v_q vs_q + E_qq v_p vs_p)`.
pub fn gl_central_elements(spec: &FamilySpec) -> Result<(Element, Element)> {
    if spec.family != Family::Gln || !spec.is_undeformed() {
        return Err(Error::Usage("r_n, s_n are defined for the undeformed gl_n algebra".into()));
    }
    let p = build_presentation(spec)?;
    Ok((gl_r(&p, spec.n), gl_s(&p, spec.n)))
}

fn gl_r(p: &Arc<Presentation>, n: usize) -> Element {
    (1..=n).fold(p.zero(), |acc, i| {
        &acc + &(&named(p, &format!("v_{i}")) * &named(p, &format!("vs_{i}")))
    })
}

fn gl_s(p: &Arc<Presentation>, n: usize) -> Element {
    let e = |a: usize, b: usize| named(p, &format!("E_{a}{b}"));
    let v = |a: usize| named(p, &format!("v_{a}"));
    let vs = |a: usize| named(p, &format!("vs_{a}"));
    let mut s = p.zero();
    for a in 1..=n {
        for b in (a + 1)..=n {
            s = &s + &(&(&e(a, b) * &v(b)) * &vs(a));
            s = &s + &(&(&e(b, a) * &v(a)) * &vs(b));
            s = &s - &(&(&e(a, a) * &v(b)) * &vs(b));
            s = &s - &(&(&e(b, b) * &v(a)) * &vs(a));
        }
    }
    s
}

/// `r_n` in an arbitrary `gl_n` presentation (deformed or not).
pub fn gl_seed(spec: &FamilySpec) -> Result<Element> {
    if spec.family != Family::Gln {
        return Err(Error::Usage("seed r_n needs the gln family".into()));
    }
    Ok(gl_r(&build_presentation(spec)?, spec.n))
}

/// Looks for `c` in `U(gl_n)` of degree at most `bound` with `seed + c`
/// central.
pub fn central_lift_search(spec: &FamilySpec, seed: &Element, bound: u32) -> Result<Option<Element>> {
    if spec.family != Family::Gln {
        return Err(Error::Usage("central lifts are searched in the gln family".into()));
    }
    let p = seed.presentation().clone();
    let nl = spec.n * spec.n;
    let monos: Vec<Element> = monomials_up_to(nl, bound)
        .into_iter()
        .map(|m| {
            let mut exps = m.exps().to_vec();
            exps.resize(p.ngens(), 0);
            p.monomial(&exps)
        })
        .collect();
    let gens: Vec<Element> = (0..p.ngens()).map(|g| p.gen(g)).collect();
    let column = |a: &Element| -> Result<SparseVec<(usize, Monomial)>> {
        let mut col = BTreeMap::new();
        for (i, g) in gens.iter().enumerate() {
            for (m, c) in a.commutator(g)?.into_terms() {
                col.insert((i, m), c);
            }
        }
        Ok(col)
    };
    let cols: Vec<_> = monos.iter().map(&column).collect::<Result<_>>()?;
    let rhs: SparseVec<_> = column(seed)?.into_iter().map(|(k, c)| (k, -c)).collect();
    let Some(x) = solve(&cols, &rhs) else {
        return Ok(None);
    };
    let mut lift = seed.clone();
    for (m, c) in monos.iter().zip(&x) {
        lift = &lift + &m.scale(c);
    }
    if !lift.is_central()? {
        return Err(Error::Invariant("lift solution is not central".into()));
    }
    Ok(Some(lift))
}

/// True when `1, r, s, r^2, rs, s^2` are linearly independent.
pub fn gl_low_degree_independence(n: usize) -> Result<bool> {
    let spec = FamilySpec::undeformed(Family::Gln, n);
    let (r, s) = gl_central_elements(&spec)?;
    let one = r.presentation().one();
    let elems = [one, r.clone(), s.clone(), &r * &r, &r * &s, &s * &s];
    let vecs: Vec<Terms> = elems.iter().map(|e| e.terms().clone()).collect();
    Ok(nullspace(&vecs).is_empty())
}

/// The algebra map from the `n = 1` symplectic presentation to `H_0`:
/// `u_11 -> h, v_11 -> 2e, w_11 -> 2f, e_1 -> x, e_2 -> y`.
pub fn sp1_to_h0_images() -> Vec<Element> {
    let h0 = crate::sl2::Hz::new(&crate::poly::Poly::zero());
    vec![
        h0.h(),
        h0.e().scale(&int(2)),
        h0.f().scale(&int(2)),
        h0.x(),
        h0.y(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp1_matches_sl2() {
        let spec = FamilySpec::undeformed(Family::Sp2n, 1);
        let p = build_presentation(&spec).unwrap();
        let img = sp1_to_h0_images();
        for i in 0..5 {
            for j in 0..5 {
                let br = p.gen(i).commutator(&p.gen(j)).unwrap();
                assert_eq!(
                    br.substitute(&img).unwrap(),
                    img[i].commutator(&img[j]).unwrap()
                );
            }
        }
        let t1 = sp_central_element(&spec).unwrap();
        let h0 = crate::sl2::Hz::new(&crate::poly::Poly::zero());
        assert_eq!(t1.substitute(&img).unwrap(), h0.t().scale(&int(2)));
    }

    #[test]
    fn gl_relations() {
        let p = build_presentation(&FamilySpec::undeformed(Family::Gln, 2)).unwrap();
        let v1 = p.gen_named("v_1").unwrap();
        let vs1 = p.gen_named("vs_1").unwrap();
        assert!(v1.commutator(&vs1).unwrap().is_zero());
        let spec = FamilySpec::new(Family::Gln, 2, int(1), int(1)).unwrap();
        let p = build_presentation(&spec).unwrap();
        let v1 = p.gen_named("v_1").unwrap();
        let vs1 = p.gen_named("vs_1").unwrap();
        let tau = Element::from_terms(p.clone(), p.alias("tau").unwrap().clone());
        let expected = &(&p.one() + &tau) + &p.gen_named("E_11").unwrap();
        assert_eq!(v1.commutator(&vs1).unwrap(), expected);
        let e12 = p.gen_named("E_12").unwrap();
        assert_eq!(e12.commutator(&p.gen_named("v_2").unwrap()).unwrap(), v1);
        assert_eq!(
            e12.commutator(&p.gen_named("vs_1").unwrap()).unwrap(),
            -p.gen_named("vs_2").unwrap()
        );
    }

    #[test]
    fn central_elements() {
        let sp2 = FamilySpec::undeformed(Family::Sp2n, 2);
        let t2 = sp_central_element(&sp2).unwrap();
        assert!(t2.is_central().unwrap());
        assert_eq!(t2.apply_antiinvolution().unwrap(), t2);
        let gl2 = FamilySpec::undeformed(Family::Gln, 2);
        let (r, s) = gl_central_elements(&gl2).unwrap();
        assert!(r.is_central().unwrap() && s.is_central().unwrap());
        assert_eq!(r.apply_antiinvolution().unwrap(), r);
        assert_eq!(s.apply_antiinvolution().unwrap(), s);
        let (r1, s1) = gl_central_elements(&FamilySpec::undeformed(Family::Gln, 1)).unwrap();
        assert!(s1.is_zero() && r1.is_central().unwrap());
        assert!(gl_low_degree_independence(2).unwrap());
    }

    #[test]
    fn lifts() {
        let gl2 = FamilySpec::undeformed(Family::Gln, 2);
        let seed = gl_seed(&gl2).unwrap();
        assert_eq!(central_lift_search(&gl2, &seed, 2).unwrap().unwrap(), seed);
        for (b0, b1) in [(1, 0), (0, 1), (1, 1)] {
            let spec = FamilySpec::new(Family::Gln, 2, int(b0), int(b1)).unwrap();
            let seed = gl_seed(&spec).unwrap();
            let lift = central_lift_search(&spec, &seed, 2).unwrap();
            assert!(lift.is_some(), "beta = ({b0}, {b1})");
        }
    }

    #[test]
    fn spec_validation() {
        assert!(FamilySpec::new(Family::Sp2n, 1, int(0), int(1)).is_err());
        assert!(FamilySpec::new(Family::Gln, 0, int(0), int(0)).is_err());
        let spec = FamilySpec::new(Family::Gln, 3, frac(1, 2), int(0)).unwrap();
        assert_eq!(FamilySpec::from_json(&spec.to_json()).unwrap(), spec);
    }
}
