//! Reductions modulo the commutator subspace `[H_z, H_z]`.
//!
//! Positive results come with a [`CommutatorCertificate`], an exact identity
//! re-checked by the engine. Non-membership is only ever reported relative to
//! a degree truncation.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::engine::{split_monomial, Element, ElementJson, Monomial, Terms};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve, Echelon, SparseVec};
use crate::poly::Poly;
use crate::scalar::{frac, int, Scalar};
use crate::sl2::center::CenterData;
use crate::sl2::centralizer::monomials_up_to;
use crate::sl2::{Hz, E, F, H, X, Y};

/// `target = sum [a_i, b_i] + remainder`.
#[derive(Clone, Debug)]
pub struct CommutatorCertificate {
    pub target: Element,
    pub pairs: Vec<(Element, Element)>,
    pub remainder: Element,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub target: ElementJson,
    pub pairs: Vec<(ElementJson, ElementJson)>,
    pub remainder: ElementJson,
}

impl CommutatorCertificate {
    pub fn verify(&self) -> Result<bool> {
        let mut acc = self.remainder.clone();
        for (a, b) in &self.pairs {
            acc = &acc + &a.commutator(b)?;
        }
        Ok(acc == self.target)
    }

    /// Largest total degree among the left entries `a_i`.
    pub fn max_left_degree(&self) -> u32 {
        self.pairs.iter().map(|(a, _)| a.total_degree()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            target: self.target.to_json(),
            pairs: self
                .pairs
                .iter()
                .map(|(a, b)| (a.to_json(), b.to_json()))
                .collect(),
            remainder: self.remainder.to_json(),
        }
    }

    /// Merges pairs with equal right entries, using `sum [r_i, s] = [sum r_i, s]`.
    pub fn compact(mut self) -> Self {
        self.pairs = compact_pairs(self.pairs);
        self
    }

    fn verified(self) -> Result<Self> {
        if !self.verify()? {
            return Err(Error::Invariant(format!(
                "certificate for {} does not verify",
                self.target
            )));
        }
        Ok(self)
    }
}

fn compact_pairs(pairs: Vec<(Element, Element)>) -> Vec<(Element, Element)> {
    let mut out: Vec<(Element, Element)> = Vec::new();
    let mut index: BTreeMap<Terms, usize> = BTreeMap::new();
    for (a, b) in pairs {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        match index.get(b.terms()) {
            Some(&i) => out[i].0 = &out[i].0 + &a,
            None => {
                index.insert(b.terms().clone(), out.len());
                out.push((a, b));
            }
        }
    }
    out.retain(|(a, _)| !a.is_zero());
    out
}

fn monomial_element(hz: &Hz, m: Monomial, c: Scalar) -> Element {
    Element::from_terms(hz.presentation().clone(), [(m, c)].into())
}

fn lfilt_pairs(hz: &Hz, target: &Element) -> Result<Vec<(Element, Element)>> {
    let pres = hz.presentation();
    let mut rest = target.clone();
    let mut pairs = Vec::new();
    let mut guard = 0usize;
    while !rest.is_zero() {
        guard += 1;
        if guard > 100_000 {
            return Err(Error::ResourceGuard("Lfilt reduction did not terminate".into()));
        }
        let (m, c) = rest
            .terms()
            .iter()
            .max_by_key(|(m, _)| {
                let (lie, _) = split_monomial(pres, m);
                (lie.degree(), lie.exp(E) + lie.exp(F))
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero");
        let (lie, module) = split_monomial(pres, &m);
        if module.degree() != 1 {
            return Err(Error::Invariant("Lfilt input left U(g)·V".into()));
        }
        let v = if module.exp(X) == 1 { X } else { Y };
        let j = lie.exp(H);
        let sign = if v == X { int(1) } else { int(-1) };
        let a = monomial_element(hz, lie.with_inc(H), c * sign / int(j as i64 + 1));
        let vg = pres.gen(v);
        rest = &rest - &a.commutator(&vg)?;
        pairs.push((a, vg));
    }
    Ok(pairs)
}

/// Writes `c v` (with `c` in `U(g)` of degree `n`) as `sum [a_i, v_i]`
/// with `a_i` of degree at most `n + 1`.
pub fn lfilt_decompose(hz: &Hz, c: &Element, v: usize) -> Result<CommutatorCertificate> {
    if !c.is_lie_only() {
        return Err(Error::Usage("lfilt expects an element of U(g)".into()));
    }
    if v != X && v != Y {
        return Err(Error::Usage("lfilt expects v = x or y".into()));
    }
    let c = c.embed_into(hz.presentation());
    let target = &c * &hz.presentation().gen(v);
    let pairs = lfilt_pairs(hz, &target)?;
    CommutatorCertificate {
        target,
        pairs,
        remainder: hz.presentation().zero(),
    }
    .verified()
}

/// `([alpha,x] + [beta,y]) x + beta z` and `([alpha,x] + [beta,y]) y - alpha z`
/// as commutator sums.
pub fn lstar_kind1(hz: &Hz, alpha: &Element, beta: &Element) -> Result<[CommutatorCertificate; 2]> {
    if !alpha.is_lie_only() || !beta.is_lie_only() {
        return Err(Error::Usage("alpha and beta must lie in U(g)".into()));
    }
    let (al, be) = (alpha.embed_into(hz.presentation()), beta.embed_into(hz.presentation()));
    let (x, y, z) = (hz.x(), hz.y(), hz.z_element());
    let d = &al.commutator(&x)? + &be.commutator(&y)?;
    let zero = hz.presentation().zero();
    let first = CommutatorCertificate {
        target: &(&d * &x) + &(&be * &z),
        pairs: vec![(&al * &x, x.clone()), (&be * &x, y.clone())],
        remainder: zero.clone(),
    }
    .verified()?;
    let second = CommutatorCertificate {
        target: &(&d * &y) - &(&al * &z),
        pairs: vec![(&al * &y, x), (&be * &y, y)],
        remainder: zero,
    }
    .verified()?;
    Ok([first, second])
}

/// `z' e y^2 - z' h x y` and `z' h x y + z' f x^2` as commutator sums, for
/// `z'` central in `U(g)`.
pub fn lstar_kind2(hz: &Hz, zprime: &Element) -> Result<[CommutatorCertificate; 2]> {
    if !zprime.is_lie_only() {
        return Err(Error::Usage("z' must lie in U(g)".into()));
    }
    let zp = zprime.embed_into(hz.presentation());
    let (e, f, h, x, y) = (hz.e(), hz.f(), hz.h(), hz.x(), hz.y());
    for g in [&e, &f, &h] {
        if !zp.commutator(g)?.is_zero() {
            return Err(Error::Usage("z' is not central in U(g)".into()));
        }
    }
    let zero = hz.presentation().zero();
    let xy = &x * &y;
    let exy = &(&zp * &e) * &xy;
    let first = CommutatorCertificate {
        target: &(&(&(&zp * &e) * &y) * &y) - &(&(&zp * &h) * &xy),
        pairs: vec![(f.clone(), exy)],
        remainder: zero.clone(),
    }
    .verified()?;
    let second = CommutatorCertificate {
        target: &(&(&zp * &h) * &xy) + &(&(&(&zp * &f) * &x) * &x),
        pairs: vec![
            (e, &(&xy * &f) * &zp),
            (&zp * &h, xy),
            (&zp * &f, &x * &x),
        ],
        remainder: zero,
    }
    .verified()?;
    Ok([first, second])
}

/// `[Delta^n, x] y - [Delta^n, y] x = 2 f_n(Delta)(t - hz/2) + g_n(Delta) z`.
pub fn l5_identity(hz: &Hz, n: usize) -> Result<bool> {
    if n < 1 {
        return Err(Error::Usage("n must be positive".into()));
    }
    let (f_n, g_n) = crate::sl2::fg_pair(n, crate::sl2::FgMethod::FirstOrder)?;
    let (x, y) = (hz.x(), hz.y());
    let dn = hz.casimir().pow(n as u32);
    let lhs = &(&dn.commutator(&x)? * &y) - &(&dn.commutator(&y)? * &x);
    let z = hz.z_element();
    let inner = &hz.t() - &(&hz.h() * &z).scale(&frac(1, 2));
    let rhs = &(&hz.eval(&f_n) * &inner).scale(&int(2)) + &(&hz.eval(&g_n) * &z);
    Ok(lhs == rhs)
}

/// Reduces a weight-zero element of `U(g)` of degree `n` to a polynomial in
/// `Delta` by solving `u = sum c_Y [e, Y] + sum d_k Delta^k` over the
/// weight `-2` monomials `Y` of degree `<= n`.
fn reduce_ug_weight_zero(hz: &Hz, u: &Element) -> Result<(Poly, Vec<(Element, Element)>)> {
    if u.is_zero() {
        return Ok((Poly::zero(), Vec::new()));
    }
    let n = u.total_degree();
    let pres = hz.presentation();
    let e = hz.e();
    let mut cols: Vec<Terms> = Vec::new();
    let mut sources = Vec::new();
    for m in monomials_up_to(3, n) {
        let (a, b) = (m.exp(0), m.exp(1));
        if b == a + 1 {
            let y = pres.monomial(&[a, b, m.exp(2), 0, 0]);
            cols.push(e.commutator(&y)?.into_terms());
            sources.push(y);
        }
    }
    let nsrc = cols.len();
    let d = hz.casimir();
    for k in 0..=n / 2 {
        cols.push(d.pow(k).into_terms());
    }
    let sol = solve(&cols, u.terms())
        .ok_or_else(|| Error::Invariant(format!("{u} is not a polynomial in Delta modulo [e, U(g)]")))?;
    let pairs = sources
        .into_iter()
        .zip(&sol[..nsrc])
        .filter(|(_, c)| !c.is_zero())
        .map(|(y, c)| (e.scale(c), y))
        .collect();
    Ok((Poly::new(sol[nsrc..].to_vec()), pairs))
}

/// Reduces `target` modulo `[H_z, H_z]` to a polynomial in `Delta`.
pub fn reduce_to_casimir(hz: &Hz, target: &Element) -> Result<(Poly, CommutatorCertificate)> {
    let pres = hz.presentation();
    let h = hz.h();
    let mut rest = target.clone();
    let mut pairs: Vec<(Element, Element)> = Vec::new();
    loop {
        for (w, part) in rest.clone().weight_components() {
            if !w.is_zero() {
                let a = h.scale(&(Scalar::one() / &w));
                rest = &rest - &part;
                pairs.push((a, part));
            }
        }
        let k = rest.module_degree();
        if k == 0 {
            break;
        }
        let top = rest.module_degree_part(k);
        for (m, c) in top.terms() {
            let (lie, module) = split_monomial(pres, m);
            let v = if module.exp(X) > 0 { X } else { Y };
            let tail = pres.monomial(module.with_dec(v).exps());
            let coeff = monomial_element(hz, lie, c.clone());
            let inner = lfilt_decompose(hz, &coeff, v)?;
            for (a, vg) in inner.pairs {
                let am = &a * &tail;
                rest = &rest - &am.commutator(&vg)?;
                pairs.push((am, vg));
            }
        }
        if rest.module_degree() >= k && !rest.module_degree_part(k).is_zero() {
            return Err(Error::Invariant("module degree did not drop".into()));
        }
    }
    let (p, more) = reduce_ug_weight_zero(hz, &rest)?;
    pairs.extend(more);
    let cert = CommutatorCertificate {
        target: target.clone(),
        pairs: compact_pairs(pairs),
        remainder: hz.eval(&p),
    }
    .verified()?;
    Ok((p, cert))
}

/// `t_z^a Delta^b = p(Delta)` modulo commutators, with a certificate.
pub fn pstep_certificate(data: &CenterData, a: u32, b: u32) -> Result<(Poly, CommutatorCertificate)> {
    if data.z().degree().unwrap_or(0) == 0 {
        return Err(Error::Usage("pstep needs deg z >= 1".into()));
    }
    let mut base = BTreeMap::new();
    let (p, pairs) = pstep_inner(data, a, b, &mut base)?;
    let hz = data.hz();
    let target = &data.tz().pow(a) * &hz.casimir().pow(b);
    let cert = CommutatorCertificate {
        target,
        pairs: compact_pairs(pairs),
        remainder: hz.eval(&p),
    }
    .verified()?;
    Ok((p, cert))
}

type Base = BTreeMap<usize, (Poly, Vec<(Element, Element)>)>;

fn pstep_base(data: &CenterData, b: usize, base: &mut Base) -> Result<(Poly, Vec<(Element, Element)>)> {
    if let Some(hit) = base.get(&b) {
        return Ok(hit.clone());
    }
    let hz = data.hz();
    let target = data.tz() * &hz.casimir().pow(b as u32);
    let (p, cert) = reduce_to_casimir(hz, &target)?;
    base.insert(b, (p.clone(), cert.pairs.clone()));
    Ok((p, cert.pairs))
}

fn pstep_inner(
    data: &CenterData,
    a: u32,
    b: u32,
    base: &mut Base,
) -> Result<(Poly, Vec<(Element, Element)>)> {
    if a == 0 {
        return Ok((Poly::monomial(Scalar::one(), b as usize), Vec::new()));
    }
    if a == 1 {
        return pstep_base(data, b as usize, base);
    }
    // t^a D^b = t (t^{a-1} D^b) = t p(D) + sum [t r_i, s_i]
    let (prev, prev_pairs) = pstep_inner(data, a - 1, b, base)?;
    let t = data.tz();
    let mut pairs: Vec<(Element, Element)> =
        prev_pairs.iter().map(|(r, s)| (t * r, s.clone())).collect();
    let mut p = Poly::zero();
    for (k, c) in prev.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (pk, pk_pairs) = pstep_base(data, k, base)?;
        p = &p + &pk.scale(c);
        pairs.extend(pk_pairs.into_iter().map(|(r, s)| (r.scale(c), s)));
    }
    Ok((p, compact_pairs(pairs)))
}

/// Span of `[u, v]` over PBW monomials with `deg u + deg v <= N`, built one
/// weight space at a time on demand. Commutators of monomials are weight
/// homogeneous, so membership splits by weight.
pub struct CommutatorSpan {
    hz: Hz,
    bound: u32,
    track: bool,
    spaces: Mutex<BTreeMap<Scalar, Arc<WeightSpace>>>,
}

struct WeightSpace {
    echelon: Echelon<Monomial>,
    pairs: Vec<(Monomial, Monomial)>,
}

pub const PAIR_GUARD: usize = 250_000;

impl CommutatorSpan {
    pub fn new(z: &Poly, bound: u32, track: bool) -> Self {
        CommutatorSpan {
            hz: Hz::new(z),
            bound,
            track,
            spaces: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn hz(&self) -> &Hz {
        &self.hz
    }

    fn space(&self, w: &Scalar) -> Result<Arc<WeightSpace>> {
        if let Some(s) = self.spaces.lock().expect("poisoned").get(w) {
            return Ok(s.clone());
        }
        let pres = self.hz.presentation();
        let monos: Vec<Monomial> = monomials_up_to(5, self.bound)
            .into_iter()
            .filter(|m| !m.is_unit())
            .collect();
        let mut pairs = Vec::new();
        for (i, u) in monos.iter().enumerate() {
            let wu = pres.monomial_weight(u);
            for v in &monos[i + 1..] {
                if u.degree() + v.degree() <= self.bound && &wu + pres.monomial_weight(v) == *w {
                    pairs.push((u.clone(), v.clone()));
                }
            }
        }
        if pairs.len() > PAIR_GUARD {
            return Err(Error::ResourceGuard(format!(
                "{} monomial pairs at degree {}",
                pairs.len(),
                self.bound
            )));
        }
        let mut echelon = Echelon::new(self.track);
        for (tag, (u, v)) in pairs.iter().enumerate() {
            let a = pres.monomial(u.exps());
            let b = pres.monomial(v.exps());
            let c = a.commutator(&b)?;
            if !c.is_zero() {
                echelon.insert(c.terms(), tag);
            }
        }
        let space = Arc::new(WeightSpace { echelon, pairs });
        self.spaces
            .lock()
            .expect("poisoned")
            .insert(w.clone(), space.clone());
        Ok(space)
    }

    /// Dimension of the weight-`w` part of the span.
    pub fn rank(&self, w: &Scalar) -> Result<usize> {
        Ok(self.space(w)?.echelon.rank())
    }

    pub fn contains(&self, target: &Element) -> Result<bool> {
        for (w, part) in target.weight_components() {
            if !self.space(&w)?.echelon.contains(part.terms()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical representative of `target` modulo the span (per weight).
    pub fn residue(&self, target: &Element) -> Result<Terms> {
        let mut out = Terms::new();
        for (w, part) in target.weight_components() {
            out.extend(self.space(&w)?.echelon.reduce(part.terms()).remainder);
        }
        Ok(out)
    }

    /// Membership certificate; needs an oracle built with tracking.
    pub fn certify(&self, target: &Element) -> Result<Option<CommutatorCertificate>> {
        if !self.track {
            return Err(Error::Usage("oracle was built without tracking".into()));
        }
        let pres = self.hz.presentation();
        let mut pairs = Vec::new();
        for (w, part) in target.weight_components() {
            let space = self.space(&w)?;
            let red = space.echelon.reduce(part.terms());
            if !red.remainder.is_empty() {
                return Ok(None);
            }
            for (tag, c) in red.combo {
                let (u, v) = &space.pairs[tag];
                pairs.push((pres.monomial(u.exps()).scale(&c), pres.monomial(v.exps())));
            }
        }
        Ok(Some(
            CommutatorCertificate {
                target: target.clone(),
                pairs,
                remainder: pres.zero(),
            }
            .verified()?,
        ))
    }
}

#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub m: usize,
    pub bound: u32,
    /// Nontrivial `c` with `sum c_k Delta^k` in the truncated span.
    pub dependency: Option<Vec<Scalar>>,
    /// For constant `z`: whether 1 lies in the span.
    pub one_in_span: Option<bool>,
}

impl IndependenceReport {
    pub fn summary(&self) -> String {
        match (&self.one_in_span, &self.dependency) {
            (Some(b), _) => format!(
                "deg z = 0: the set is empty; 1 in commutator span at N={}: {b}",
                self.bound
            ),
            (None, None) => format!(
                "no dependency among 1..Delta^{} found at truncation N={}",
                self.m - 1,
                self.bound
            ),
            (None, Some(c)) => format!("dependency found at N={}: {c:?}", self.bound),
        }
    }
}

/// Looks for a linear relation among `1, Delta, ..., Delta^{m-1}` modulo the
/// truncated commutator span.
pub fn tzz_independence_falsifier(z: &Poly, bound: u32) -> Result<IndependenceReport> {
    let m = z.degree().unwrap_or(0);
    let span = CommutatorSpan::new(z, bound, false);
    if m == 0 {
        let one = span.hz().one();
        return Ok(IndependenceReport {
            m,
            bound,
            dependency: None,
            one_in_span: Some(span.contains(&one)?),
        });
    }
    let d = span.hz().casimir();
    let residues: Vec<SparseVec<Monomial>> = (0..m)
        .map(|k| span.residue(&d.pow(k as u32)))
        .collect::<Result<_>>()?;
    let dependency = nullspace(&residues).into_iter().next();
    Ok(IndependenceReport {
        m,
        bound,
        dependency,
        one_in_span: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::ug;

    #[test]
    fn lfilt_examples() {
        let hz = Hz::new(&Poly::zero());
        let one = hz.one();
        let c = lfilt_decompose(&hz, &one, X).unwrap();
        assert_eq!(c.pairs, vec![(hz.h(), hz.x())]);
        let c = lfilt_decompose(&hz, &hz.h(), X).unwrap();
        assert_eq!(c.pairs[0].0, (&hz.h() * &hz.h()).scale(&frac(1, 2)));
        let u = ug();
        let e2f = u.monomial(&[2, 1, 0]);
        let c = lfilt_decompose(&hz, &e2f, Y).unwrap();
        assert!(c.max_left_degree() <= 4);
        assert!(lfilt_decompose(&hz, &hz.x(), X).is_err());
    }

    #[test]
    fn lstar_examples() {
        let hz = Hz::new(&Poly::one());
        let [a, b] = lstar_kind2(&hz, &hz.one()).unwrap();
        assert_eq!(a.pairs.len(), 1);
        assert!(b.verify().unwrap());
        let hz2 = Hz::new(&Poly::from_ints(&[0, 0, 1]));
        lstar_kind2(&hz2, &hz2.casimir()).unwrap();
        assert!(lstar_kind2(&hz2, &hz2.e()).is_err());
        let [c1, c2] = lstar_kind1(&hz, &hz.one(), &hz.presentation().zero()).unwrap();
        assert!(c1.target.is_zero() || c1.verify().unwrap());
        assert!(c2.verify().unwrap());
        lstar_kind1(&hz2, &hz2.h(), &(&hz2.e() * &hz2.f())).unwrap();
    }

    #[test]
    fn l5_small() {
        let h0 = Hz::new(&Poly::zero());
        assert!(l5_identity(&h0, 1).unwrap());
        assert!(l5_identity(&Hz::new(&Poly::one()), 1).unwrap());
        assert!(l5_identity(&Hz::new(&Poly::from_ints(&[0, 0, 1])), 2).unwrap());
    }

    #[test]
    fn pstep_small() {
        let data = CenterData::new(&Poly::var()).unwrap();
        let (p, cert) = pstep_certificate(&data, 1, 0).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert!(cert.verify().unwrap());
        let (p, _) = pstep_certificate(&data, 0, 3).unwrap();
        assert_eq!(p, Poly::monomial(int(1), 3));
        assert!(pstep_certificate(&CenterData::new(&Poly::one()).unwrap(), 1, 0).is_err());
    }

    #[test]
    fn span_examples() {
        let span = CommutatorSpan::new(&Poly::var(), 4, true);
        let d = span.hz().casimir();
        assert!(span.contains(&d).unwrap());
        assert!(span.certify(&d).unwrap().is_some());
        let span0 = CommutatorSpan::new(&Poly::zero(), 4, false);
        assert!(span0.contains(&span0.hz().t()).unwrap());
        assert!(!span0.contains(&span0.hz().one()).unwrap());
        let r = tzz_independence_falsifier(&Poly::from_ints(&[5]), 2).unwrap();
        assert_eq!(r.one_in_span, Some(true));
    }

    #[test]
    fn reducer_on_t_squared_in_h0() {
        let hz = Hz::new(&Poly::zero());
        let (p, cert) = reduce_to_casimir(&hz, &hz.t()).unwrap();
        assert!(p.is_zero());
        assert!(cert.verify().unwrap());
    }
}
