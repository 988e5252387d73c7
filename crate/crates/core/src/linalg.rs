//! Exact sparse row echelon forms over the rationals.
//!
//! Vectors are sparse maps from an ordered key type to scalars. A row's pivot
//! is its largest key. Optionally every row remembers which inserted vectors
//! it is a combination of, which yields solutions and nullspace vectors.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Scalar, x: &SparseVec<K>) {
    for (k, v) in x {
        let e = y.entry(k.clone()).or_insert_with(Scalar::zero);
        *e += a * v;
        if e.is_zero() {
            y.remove(k);
        }
    }
}

struct Row<K> {
    vec: SparseVec<K>,
    combo: SparseVec<usize>,
}

pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, Row<K>>,
    track: bool,
}

/// Outcome of reducing a vector against the current rows.
pub struct Reduced<K> {
    pub remainder: SparseVec<K>,
    /// Coefficients `c_t` with `v - remainder = sum c_t * inserted_t`
    /// (only with tracking).
    pub combo: SparseVec<usize>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new(track: bool) -> Self {
        Echelon {
            rows: BTreeMap::new(),
            track,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Fully reduces `v`: the remainder has no pivot keys, so it is a
    /// canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> Reduced<K> {
        let mut cur = v.clone();
        let mut combo = SparseVec::new();
        let mut upper: Option<K> = None;
        loop {
            let next = match &upper {
                None => cur.keys().next_back().cloned(),
                Some(u) => cur.range(..u.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                let c = cur[&k].clone();
                axpy(&mut cur, &-c.clone(), &row.vec);
                if self.track {
                    axpy(&mut combo, &c, &row.combo);
                }
            }
            upper = Some(k);
        }
        Reduced {
            remainder: cur,
            combo,
        }
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).remainder.is_empty()
    }

    /// Inserts `v` under `tag`. Returns `None` if it was independent,
    /// otherwise the dependency `v_tag - sum c_t v_t = 0` as a combination
    /// over tags (meaningful only with tracking).
    pub fn insert(&mut self, v: &SparseVec<K>, tag: usize) -> Option<SparseVec<usize>> {
        let red = self.reduce(v);
        let mut combo = SparseVec::new();
        if self.track {
            combo.insert(tag, Scalar::one());
            axpy(&mut combo, &-Scalar::one(), &red.combo);
        }
        let Some((pivot, lead)) = red.remainder.iter().next_back() else {
            return Some(combo);
        };
        let pivot = pivot.clone();
        let inv = Scalar::one() / lead;
        let vec = red
            .remainder
            .into_iter()
            .map(|(k, c)| (k, c * &inv))
            .collect();
        let combo = combo.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        self.rows.insert(pivot, Row { vec, combo });
        None
    }
}

/// Basis of `{c : sum_j c_j cols[j] = 0}`.
pub fn nullspace<K: Ord + Clone>(cols: &[SparseVec<K>]) -> Vec<Vec<Scalar>> {
    let mut ech = Echelon::new(true);
    let mut out = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if let Some(dep) = ech.insert(c, j) {
            let mut v = vec![Scalar::zero(); cols.len()];
            for (t, a) in dep {
                v[t] = a;
            }
            out.push(v);
        }
    }
    out
}

/// Some `c` with `sum_j c_j cols[j] = b`, or `None`.
pub fn solve<K: Ord + Clone>(cols: &[SparseVec<K>], b: &SparseVec<K>) -> Option<Vec<Scalar>> {
    let mut ech = Echelon::new(true);
    for (j, c) in cols.iter().enumerate() {
        ech.insert(c, j);
    }
    let red = ech.reduce(b);
    if !red.remainder.is_empty() {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols.len()];
    for (t, a) in red.combo {
        x[t] = a;
    }
    Some(x)
}

pub fn rank<K: Ord + Clone>(vecs: &[SparseVec<K>]) -> usize {
    let mut ech = Echelon::new(false);
    for (j, v) in vecs.iter().enumerate() {
        ech.insert(v, j);
    }
    ech.rank()
}

/// Puts a basis of a subspace into reduced echelon form, making it canonical.
pub fn canonical_basis<K: Ord + Clone>(vecs: &[SparseVec<K>]) -> Vec<SparseVec<K>> {
    let mut ech = Echelon::new(false);
    for (j, v) in vecs.iter().enumerate() {
        ech.insert(v, j);
    }
    let pivots: Vec<K> = ech.pivots().cloned().collect();
    let mut out = Vec::new();
    for p in pivots {
        let row = ech.rows[&p].vec.clone();
        // reduce everything except the pivot itself
        let mut rest = row.clone();
        rest.remove(&p);
        let mut red = ech.reduce(&rest).remainder;
        red.insert(p.clone(), Scalar::one());
        out.push(red);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(pairs: &[(usize, i64)]) -> SparseVec<usize> {
        pairs.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    #[test]
    fn nullspace_small() {
        let cols = vec![v(&[(0, 1), (1, 2)]), v(&[(0, 2), (1, 4)]), v(&[(2, 1)])];
        let ns = nullspace(&cols);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![int(-2), int(1), int(0)]);
    }

    #[test]
    fn solve_and_membership() {
        let cols = vec![v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)])];
        let x = solve(&cols, &v(&[(0, 1), (2, -1)])).unwrap();
        assert_eq!(x, vec![int(1), int(-1)]);
        assert!(solve(&cols, &v(&[(0, 1)])).is_none());
        assert_eq!(rank(&cols), 2);
    }

    #[test]
    fn canonical_forms_agree() {
        let a = canonical_basis(&[v(&[(0, 1), (1, 1)]), v(&[(1, 1)])]);
        let b = canonical_basis(&[v(&[(0, 3)]), v(&[(0, 1), (1, 2)])]);
        assert_eq!(a, b);
    }
}
