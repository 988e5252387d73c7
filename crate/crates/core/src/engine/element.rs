use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::{add_scaled, add_term, Monomial, Terms};
use super::presentation::{GenKind, Presentation};
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, parse_scalar, Scalar};

/// A normal-form element of a presented algebra.
#[derive(Clone)]
pub struct Element {
    pres: Arc<Presentation>,
    terms: Terms,
}

impl Element {
    pub fn from_terms(pres: Arc<Presentation>, mut terms: Terms) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Element { pres, terms }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Constant term.
    pub fn scalar_part(&self) -> Scalar {
        self.coeff(&Monomial::unit(self.pres.ngens()))
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if Arc::ptr_eq(&self.pres, &other.pres) || self.pres.id() == other.pres.id() {
            Ok(())
        } else {
            Err(Error::PresentationMismatch(
                self.pres.id().into(),
                other.pres.id().into(),
            ))
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let mut t = self.terms.clone();
        add_scaled(&mut t, &other.terms, &Scalar::one());
        Ok(Element::from_terms(self.pres.clone(), t))
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let mut t = self.terms.clone();
        add_scaled(&mut t, &other.terms, &-Scalar::one());
        Ok(Element::from_terms(self.pres.clone(), t))
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let t = self.pres.multiply_terms(&self.terms, &other.terms);
        Ok(Element::from_terms(self.pres.clone(), t))
    }

    pub fn commutator(&self, other: &Element) -> Result<Element> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// `[a, [a, ... [a, target]]]` with `n` brackets.
    pub fn ad_power(&self, n: i64, target: &Element) -> Result<Element> {
        if n < 0 {
            return Err(Error::Usage(format!("negative ad power {n}")));
        }
        let mut acc = target.clone();
        for _ in 0..n {
            acc = self.commutator(&acc)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let t = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Element::from_terms(self.pres.clone(), t)
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut acc = self.pres.one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Common h-weight of all monomials; `None` if mixed. The zero element
    /// reports weight 0.
    pub fn weight_of(&self) -> Option<Scalar> {
        let mut it = self.terms.keys().map(|m| self.pres.monomial_weight(m));
        let first = match it.next() {
            Some(w) => w,
            None => return Some(Scalar::zero()),
        };
        it.all(|w| w == first).then_some(first)
    }

    /// Splits into pure-weight parts.
    pub fn weight_components(&self) -> BTreeMap<Scalar, Element> {
        let mut parts: BTreeMap<Scalar, Terms> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(self.pres.monomial_weight(m))
                .or_default()
                .insert(m.clone(), c.clone());
        }
        parts
            .into_iter()
            .map(|(w, t)| (w, Element::from_terms(self.pres.clone(), t)))
            .collect()
    }

    /// `(module degree, total degree)`, maxima over monomials.
    pub fn filtration_degrees(&self) -> Result<(u32, u32)> {
        if self.is_zero() {
            return Err(Error::Usage("filtration degree of zero".into()));
        }
        let v = self.terms.keys().map(|m| self.pres.module_degree(m)).max();
        let t = self.terms.keys().map(Monomial::degree).max();
        Ok((v.unwrap_or(0), t.unwrap_or(0)))
    }

    pub fn module_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| self.pres.module_degree(m))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms whose module degree equals `d`.
    pub fn module_degree_part(&self, d: u32) -> Element {
        let t = self
            .terms
            .iter()
            .filter(|(m, _)| self.pres.module_degree(m) == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Element::from_terms(self.pres.clone(), t)
    }

    /// True when no monomial involves a module generator.
    pub fn is_lie_only(&self) -> bool {
        self.module_degree() == 0
    }

    pub fn apply_antiinvolution(&self) -> Result<Element> {
        let images = self
            .pres
            .involution_images()
            .ok_or_else(|| Error::Usage(format!("{} has no anti-involution", self.pres.id())))?;
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            let mut acc = Terms::new();
            acc.insert(Monomial::unit(self.pres.ngens()), Scalar::one());
            for g in m.word().into_iter().rev() {
                acc = self.pres.multiply_terms(&acc, &images[g]);
            }
            add_scaled(&mut out, &acc, c);
        }
        Ok(Element::from_terms(self.pres.clone(), out))
    }

    /// Replaces the presentation, keeping monomials; used to move elements of
    /// a subalgebra with the same leading generators into a larger one.
    pub fn embed_into(&self, pres: &Arc<Presentation>) -> Element {
        let n = pres.ngens();
        let t = self
            .terms
            .iter()
            .map(|(m, c)| (m.embed(n), c.clone()))
            .collect();
        Element::from_terms(pres.clone(), t)
    }

    /// True iff the element commutes with every generator.
    pub fn is_central(&self) -> Result<bool> {
        for g in 0..self.pres.ngens() {
            if !self.commutator(&self.pres.gen(g))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under the algebra map sending generator `g` to `images[g]`.
    pub fn substitute(&self, images: &[Element]) -> Result<Element> {
        if images.len() != self.pres.ngens() {
            return Err(Error::Usage("one image per generator required".into()));
        }
        let target = images
            .first()
            .map(|e| e.pres.clone())
            .unwrap_or_else(|| self.pres.clone());
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut acc = target.one();
            for g in m.word() {
                acc = acc.try_mul(&images[g])?;
            }
            out = out.try_add(&acc.scale(c))?;
        }
        Ok(out)
    }

    /// Monomials sorted for display: higher total degree first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        v
    }

    pub fn monomial_string(pres: &Presentation, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| {
                let name = &pres.generators()[g].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join("*")
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            algebra: Some(self.pres.id().into()),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| TermJson {
                    exp: m
                        .exps()
                        .iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(g, &e)| (self.pres.generators()[g].name.clone(), e))
                        .collect(),
                    coeff: format_scalar(c),
                })
                .collect(),
        }
    }

    pub fn serialize(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("element JSON")
    }

    pub fn from_json(pres: &Arc<Presentation>, j: &ElementJson) -> Result<Element> {
        if let Some(a) = &j.algebra {
            if a != pres.id() {
                return Err(Error::PresentationMismatch(a.clone(), pres.id().into()));
            }
        }
        let mut t = Terms::new();
        for term in &j.terms {
            let mut exps = vec![0u32; pres.ngens()];
            for (name, &e) in &term.exp {
                let g = pres
                    .generator_index(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                exps[g] += e;
            }
            add_term(&mut t, Monomial::from_exps(exps), parse_scalar(&term.coeff)?);
        }
        Ok(Element::from_terms(pres.clone(), t))
    }

    pub fn deserialize(pres: &Arc<Presentation>, text: &str) -> Result<Element> {
        let j: ElementJson = serde_json::from_str(text)?;
        Element::from_json(pres, &j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: BTreeMap<String, u32>,
    pub coeff: String,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.pres.id() == other.pres.id() && self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let mono = Element::monomial_string(&self.pres, m);
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => f.write_str(&format_scalar(&mag))?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{}*{mono}", format_scalar(&mag))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({self})", self.pres.id())
    }
}

// Operator forms panic on mismatched presentations; use the `try_` methods
// when mixing algebras is possible.
impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).unwrap()
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).unwrap()
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).unwrap()
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Scalar::one())
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element { (&self).$m(&rhs) }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element { (&self).$m(rhs) }
        }
        impl $tr<Element> for &Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element { self.$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Mul<&Scalar> for &Element {
    type Output = Element;
    fn mul(self, rhs: &Scalar) -> Element {
        self.scale(rhs)
    }
}

impl Mul<&Scalar> for Element {
    type Output = Element;
    fn mul(self, rhs: &Scalar) -> Element {
        self.scale(rhs)
    }
}

/// Generator kind of the monomial's generators, for callers that need to
/// split a monomial into its Lie and module parts.
pub fn split_monomial(pres: &Presentation, m: &Monomial) -> (Monomial, Monomial) {
    let mut lie = vec![0; pres.ngens()];
    let mut module = vec![0; pres.ngens()];
    for (g, (&e, gen)) in m.exps().iter().zip(pres.generators()).enumerate() {
        match gen.kind {
            GenKind::Lie => lie[g] = e,
            GenKind::Module => module[g] = e,
        }
    }
    (Monomial::from_exps(lie), Monomial::from_exps(module))
}
