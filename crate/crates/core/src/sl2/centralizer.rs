//! Degree-truncated centralizer computations by exact linear algebra.

use std::collections::BTreeMap;
use std::str::FromStr;

use super::center::CenterData;
use super::{casimir_ug, ug, Hz, E};
use crate::engine::{Element, Monomial, Terms};
use crate::error::{Error, Result};
use crate::linalg::{canonical_basis, nullspace, SparseVec};
use crate::poly::Poly;
use crate::scalar::Scalar;

fn combine(elems: &[Element], coeffs: &[Scalar]) -> Terms {
    let mut out = SparseVec::new();
    for (el, c) in elems.iter().zip(coeffs) {
        crate::engine::add_scaled(&mut out, el.terms(), c);
    }
    out
}

fn canonical_elements(pres: &std::sync::Arc<crate::Presentation>, vecs: &[Terms]) -> Vec<Element> {
    canonical_basis(vecs)
        .into_iter()
        .map(|t| Element::from_terms(pres.clone(), t))
        .collect()
}

/// All exponent vectors of length `n` with total degree at most `bound`.
pub fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial::from_exps(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct MaximalVectors {
    pub weight: i64,
    pub degree_bound: u32,
    /// Canonical basis of the computed nullspace of `ad e`.
    pub computed: Vec<Element>,
    /// The elements `Delta^a e^(w/2)` inside the bound.
    pub expected: Vec<Element>,
    pub agree: bool,
}

/// Maximal vectors of weight `w` in `U(sl2)` up to total degree `bound`.
pub fn maximal_vectors_ug(w: i64, bound: u32) -> Result<MaximalVectors> {
    let u = ug();
    let e = u.gen(E);
    let mut computed = Vec::new();
    let mut expected = Vec::new();
    if w >= 0 && w % 2 == 0 {
        let monos: Vec<Element> = monomials_up_to(3, bound)
            .into_iter()
            .filter(|m| 2 * m.exp(0) as i64 - 2 * m.exp(1) as i64 == w)
            .map(|m| Element::from_terms(u.clone(), [(m, Scalar::from_integer(1.into()))].into()))
            .collect();
        let cols: Vec<Terms> = monos
            .iter()
            .map(|m| e.commutator(m).map(Element::into_terms))
            .collect::<Result<_>>()?;
        let kernel: Vec<Terms> = nullspace(&cols)
            .iter()
            .map(|c| combine(&monos, c))
            .collect();
        computed = canonical_elements(&u, &kernel);
        let k = (w / 2) as u32;
        let d = casimir_ug();
        let mut a = 0;
        while 2 * a + k <= bound {
            expected.push(&d.pow(a) * &e.pow(k));
            a += 1;
        }
    }
    let lhs: Vec<Terms> = computed.iter().map(|x| x.terms().clone()).collect();
    let rhs: Vec<Terms> = expected.iter().map(|x| x.terms().clone()).collect();
    let agree = canonical_basis(&lhs) == canonical_basis(&rhs);
    Ok(MaximalVectors {
        weight: w,
        degree_bound: bound,
        computed,
        expected,
        agree,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subject {
    Ug,
    E,
    EAndX,
    V,
}

impl FromStr for Subject {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ug" => Ok(Subject::Ug),
            "e" => Ok(Subject::E),
            "e-and-x" => Ok(Subject::EAndX),
            "v" => Ok(Subject::V),
            _ => Err(Error::Usage(format!("unknown centralizer subject {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CentralizerReport {
    pub subject: Subject,
    pub degree_bound: u32,
    /// Extra degree allowed for products of the claimed generators before
    /// intersecting with the truncation.
    pub slack: u32,
    pub centralizer: Vec<Element>,
    pub claimed_generators: Vec<Element>,
    pub claimed_span: Vec<Element>,
    pub agree: bool,
}

/// Compares the centralizer of `subject` inside `{deg <= bound}` with the
/// truncated algebra generated by the expected generators.
pub fn centralizer_check(z: &Poly, subject: Subject, bound: u32) -> Result<CentralizerReport> {
    if subject == Subject::V && !z.is_zero() {
        return Err(Error::Usage("the centralizer of V is only described for z = 0".into()));
    }
    let data = CenterData::new(z)?;
    let hz: &Hz = data.hz();
    let pres = hz.presentation().clone();
    let (acting, claimed) = match subject {
        Subject::Ug => (
            vec![hz.e(), hz.f(), hz.h()],
            vec![hz.casimir(), data.tz().clone()],
        ),
        Subject::E => (
            vec![hz.e()],
            vec![hz.casimir(), data.tz().clone(), hz.e(), hz.x()],
        ),
        Subject::EAndX => (vec![hz.e(), hz.x()], vec![data.tz().clone(), hz.e(), hz.x()]),
        Subject::V => (vec![hz.x(), hz.y()], vec![hz.t(), hz.x(), hz.y()]),
    };
    let min_deg = claimed.iter().map(Element::total_degree).min().unwrap_or(0);
    if bound < min_deg {
        return Err(Error::Usage(format!(
            "degree bound {bound} is below every claimed generator (minimum {min_deg})"
        )));
    }

    let monos: Vec<Element> = monomials_up_to(5, bound)
        .into_iter()
        .map(|m| Element::from_terms(pres.clone(), [(m, Scalar::from_integer(1.into()))].into()))
        .collect();
    let mut cols = Vec::with_capacity(monos.len());
    for m in &monos {
        let mut col: BTreeMap<(usize, Monomial), Scalar> = BTreeMap::new();
        for (i, g) in acting.iter().enumerate() {
            for (mono, c) in m.commutator(g)?.into_terms() {
                col.insert((i, mono), c);
            }
        }
        cols.push(col);
    }
    let kernel: Vec<Terms> = nullspace(&cols).iter().map(|c| combine(&monos, c)).collect();

    // Words in the claimed generators, then the part of their span that lives
    // in degree <= bound.
    let slack = 2 * z.degree().unwrap_or(0) as u32;
    let degs: Vec<u32> = claimed.iter().map(Element::total_degree).collect();
    let mut words = vec![(pres.one(), 0u32)];
    let mut frontier = words.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, d) in &frontier {
            for (g, &dg) in claimed.iter().zip(&degs) {
                if d + dg <= bound + slack {
                    next.push((w * g, d + dg));
                }
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let word_elems: Vec<Element> = words.into_iter().map(|(w, _)| w).collect();
    let high_cols: Vec<Terms> = word_elems
        .iter()
        .map(|w| {
            w.terms()
                .iter()
                .filter(|(m, _)| m.degree() > bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect()
        })
        .collect();
    let claimed_vecs: Vec<Terms> = if slack == 0 {
        word_elems.iter().map(|w| w.terms().clone()).collect()
    } else {
        nullspace(&high_cols)
            .iter()
            .map(|c| combine(&word_elems, c))
            .collect()
    };
    let centralizer = canonical_elements(&pres, &kernel);
    let claimed_span = canonical_elements(&pres, &claimed_vecs);
    let agree = centralizer == claimed_span;
    Ok(CentralizerReport {
        subject,
        degree_bound: bound,
        slack,
        centralizer,
        claimed_generators: claimed,
        claimed_span,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn maximal_vector_examples() {
        let r = maximal_vectors_ug(0, 2).unwrap();
        assert!(r.agree);
        assert_eq!(r.computed.len(), 2);
        let r = maximal_vectors_ug(2, 3).unwrap();
        assert!(r.agree);
        assert_eq!(r.computed.len(), 2);
        assert!(maximal_vectors_ug(-2, 4).unwrap().computed.is_empty());
        assert!(maximal_vectors_ug(3, 4).unwrap().computed.is_empty());
        for (w, b) in [(0, 4), (2, 5), (4, 6)] {
            let r = maximal_vectors_ug(w, b).unwrap();
            assert!(r.agree, "w={w} b={b}");
            let count = (0..).take_while(|a| 2 * a + (w as u32) / 2 <= b).count();
            assert_eq!(r.computed.len(), count);
        }
    }

    #[test]
    fn centralizer_examples() {
        let z = Poly::zero();
        let r = centralizer_check(&z, Subject::Ug, 3).unwrap();
        assert!(r.agree);
        assert_eq!(r.centralizer.len(), 3);
        let r = centralizer_check(&z, Subject::EAndX, 2).unwrap();
        assert!(r.agree);
        assert_eq!(r.centralizer.len(), 6);
        let r = centralizer_check(&z, Subject::V, 2).unwrap();
        assert!(r.agree);
        assert_eq!(r.centralizer.len(), 6);
        assert!(centralizer_check(&Poly::one(), Subject::V, 2).is_err());
        assert!(centralizer_check(&z, Subject::Ug, 1).is_err());
        let _ = int(0);
    }
}
