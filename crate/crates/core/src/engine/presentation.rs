use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::One;

use super::element::Element;
use super::monomial::{add_scaled, add_term, Monomial, Terms};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Lie,
    Module,
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub kind: GenKind,
    /// Eigenvalue of ad of the grading generator.
    pub weight: Scalar,
}

/// An algebra given by ordered generators and commutation corrections
/// `g_i g_j = g_j g_i + r(i,j)` for `i > j`, every `r(i,j)` in normal form.
pub struct Presentation {
    id: String,
    gens: Vec<Generator>,
    corrections: Vec<Vec<Terms>>,
    grading: usize,
    involution: Option<Vec<Terms>>,
    aliases: Vec<(String, Terms)>,
    cache: RwLock<HashMap<(Monomial, usize), Arc<Terms>>>,
}

impl std::fmt::Debug for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("id", &self.id)
            .field("generators", &self.gens.iter().map(|g| &g.name).collect::<Vec<_>>())
            .finish()
    }
}

pub struct PresentationBuilder {
    id: String,
    gens: Vec<Generator>,
    corrections: HashMap<(usize, usize), Terms>,
    grading: usize,
    involution: Option<Vec<Terms>>,
    aliases: Vec<(String, Terms)>,
}

impl PresentationBuilder {
    pub fn new(id: impl Into<String>) -> Self {
        PresentationBuilder {
            id: id.into(),
            gens: Vec::new(),
            corrections: HashMap::new(),
            grading: 0,
            involution: None,
            aliases: Vec::new(),
        }
    }

    pub fn generator(mut self, name: &str, kind: GenKind, weight: Scalar) -> Self {
        self.gens.push(Generator {
            name: name.into(),
            kind,
            weight,
        });
        self
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    /// Sets `[g_i, g_j]`; the opposite order is filled in by antisymmetry.
    pub fn bracket(mut self, i: usize, j: usize, value: Terms) -> Self {
        assert!(i != j, "bracket of a generator with itself");
        if i > j {
            self.corrections.insert((i, j), value);
        } else {
            let neg = value.into_iter().map(|(m, c)| (m, -c)).collect();
            self.corrections.insert((j, i), neg);
        }
        self
    }

    pub fn grading(mut self, g: usize) -> Self {
        self.grading = g;
        self
    }

    /// Images of the generators under an anti-involution.
    pub fn involution(mut self, images: Vec<Terms>) -> Self {
        self.involution = Some(images);
        self
    }

    /// A named element accepted by the expression parser.
    pub fn alias(mut self, name: &str, value: Terms) -> Self {
        self.aliases.push((name.into(), value));
        self
    }

    pub fn build(self) -> Arc<Presentation> {
        let n = self.gens.len();
        let mut corrections = vec![Vec::new(); n];
        for (i, row) in corrections.iter_mut().enumerate() {
            *row = (0..i)
                .map(|j| self.corrections.get(&(i, j)).cloned().unwrap_or_default())
                .collect();
        }
        Arc::new(Presentation {
            id: self.id,
            gens: self.gens,
            corrections,
            grading: self.grading,
            involution: self.involution,
            aliases: self.aliases,
            cache: RwLock::new(HashMap::new()),
        })
    }
}

impl Presentation {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn grading_generator(&self) -> usize {
        self.grading
    }

    pub fn has_involution(&self) -> bool {
        self.involution.is_some()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn alias(&self, name: &str) -> Option<&Terms> {
        self.aliases.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    /// The stored correction `r(i,j)` for `i > j`.
    pub fn correction(&self, i: usize, j: usize) -> &Terms {
        &self.corrections[i][j]
    }

    pub fn one(self: &Arc<Self>) -> Element {
        self.scalar(Scalar::one())
    }

    pub fn zero(self: &Arc<Self>) -> Element {
        Element::from_terms(self.clone(), Terms::new())
    }

    pub fn scalar(self: &Arc<Self>, c: Scalar) -> Element {
        let mut t = Terms::new();
        add_term(&mut t, Monomial::unit(self.ngens()), c);
        Element::from_terms(self.clone(), t)
    }

    pub fn gen(self: &Arc<Self>, g: usize) -> Element {
        let mut t = Terms::new();
        t.insert(Monomial::generator(self.ngens(), g), Scalar::one());
        Element::from_terms(self.clone(), t)
    }

    pub fn gen_named(self: &Arc<Self>, name: &str) -> Result<Element> {
        self.generator_index(name)
            .map(|g| self.gen(g))
            .ok_or_else(|| Error::UnknownGenerator(name.into()))
    }

    pub fn monomial(self: &Arc<Self>, exps: &[u32]) -> Element {
        assert_eq!(exps.len(), self.ngens());
        let mut t = Terms::new();
        t.insert(Monomial::from_exps(exps.to_vec()), Scalar::one());
        Element::from_terms(self.clone(), t)
    }

    /// Normal form of the product of a generator word.
    pub fn normal_form(self: &Arc<Self>, word: &[usize]) -> Result<Element> {
        if let Some(&g) = word.iter().find(|&&g| g >= self.ngens()) {
            return Err(Error::Usage(format!("generator index {g} out of range")));
        }
        let mut t = Terms::new();
        t.insert(Monomial::unit(self.ngens()), Scalar::one());
        for &g in word {
            t = self.terms_times_gen(&t, g);
        }
        Ok(Element::from_terms(self.clone(), t))
    }

    pub fn normal_form_named(self: &Arc<Self>, word: &[&str]) -> Result<Element> {
        let idx = word
            .iter()
            .map(|n| {
                self.generator_index(n)
                    .ok_or_else(|| Error::UnknownGenerator(n.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.normal_form(&idx)
    }

    pub fn monomial_weight(&self, m: &Monomial) -> Scalar {
        m.exps()
            .iter()
            .zip(&self.gens)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, g)| &g.weight * Scalar::from_integer(e.into()))
            .sum()
    }

    pub fn module_degree(&self, m: &Monomial) -> u32 {
        m.exps()
            .iter()
            .zip(&self.gens)
            .filter(|(_, g)| g.kind == GenKind::Module)
            .map(|(&e, _)| e)
            .sum()
    }

    pub(crate) fn involution_images(&self) -> Option<&[Terms]> {
        self.involution.as_deref()
    }

    /// Number of memoized straightening results.
    pub fn cache_len(&self) -> usize {
        self.cache.read().map(|c| c.len()).unwrap_or(0)
    }

    pub(crate) fn mono_times_gen(&self, m: &Monomial, g: usize) -> Arc<Terms> {
        let l = match m.last_index() {
            Some(l) if l > g => l,
            _ => {
                let mut t = Terms::new();
                t.insert(m.with_inc(g), Scalar::one());
                return Arc::new(t);
            }
        };
        let key = (m.clone(), g);
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        // m = p * g_l with g < l, so m * g = (p * g) * g_l + p * r(l, g).
        let p = m.with_dec(l);
        let left = self.mono_times_gen(&p, g);
        let mut out = self.terms_times_gen(&left, l);
        for (rm, rc) in &self.corrections[l][g] {
            let prod = self.mono_times_mono(&p, rm);
            add_scaled(&mut out, &prod, rc);
        }
        let out = Arc::new(out);
        self.cache
            .write()
            .expect("cache poisoned")
            .insert(key, out.clone());
        out
    }

    pub(crate) fn terms_times_gen(&self, t: &Terms, g: usize) -> Terms {
        let mut out = Terms::new();
        for (m, c) in t {
            let prod = self.mono_times_gen(m, g);
            add_scaled(&mut out, &prod, c);
        }
        out
    }

    pub(crate) fn mono_times_mono(&self, a: &Monomial, b: &Monomial) -> Terms {
        let ordered = match (a.last_index(), b.first_index()) {
            (Some(l), Some(f)) => l <= f,
            _ => true,
        };
        if ordered {
            let mut t = Terms::new();
            t.insert(a.concat(b), Scalar::one());
            return t;
        }
        let mut t = Terms::new();
        t.insert(a.clone(), Scalar::one());
        for g in b.word() {
            t = self.terms_times_gen(&t, g);
        }
        t
    }

    pub(crate) fn multiply_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let mut out = Terms::new();
        for (mb, cb) in b {
            for (ma, ca) in a {
                let prod = self.mono_times_mono(ma, mb);
                add_scaled(&mut out, &prod, &(ca * cb));
            }
        }
        out
    }
}
