use std::collections::BTreeMap;

use num_traits::Zero;

use crate::scalar::Scalar;

/// Exponent vector over the generators of a presentation, read as the ordered
/// product in generator order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

/// Sparse linear combination of monomials.
pub type Terms = BTreeMap<Monomial, Scalar>;

impl Monomial {
    pub fn unit(ngens: usize) -> Self {
        Monomial(vec![0; ngens])
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn generator(ngens: usize, g: usize) -> Self {
        let mut v = vec![0; ngens];
        v[g] = 1;
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, g: usize) -> u32 {
        self.0[g]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Largest generator index with positive exponent.
    pub fn last_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn first_index(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    pub fn with_inc(&self, g: usize) -> Self {
        let mut v = self.0.clone();
        v[g] += 1;
        Monomial(v)
    }

    pub fn with_dec(&self, g: usize) -> Self {
        let mut v = self.0.clone();
        v[g] -= 1;
        Monomial(v)
    }

    /// Concatenation, valid only when every generator of `self` precedes every
    /// generator of `other`.
    pub fn concat(&self, other: &Monomial) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Generator indices of the ordered word, with repetition.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize))
            .collect()
    }

    /// Pads with zero exponents for generators appended after the existing ones.
    pub fn embed(&self, ngens: usize) -> Self {
        let mut v = self.0.clone();
        v.resize(ngens, 0);
        Monomial(v)
    }
}

pub(crate) fn add_term(t: &mut Terms, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn add_scaled(t: &mut Terms, other: &Terms, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (m, a) in other {
        add_term(t, m.clone(), a * c);
    }
}
