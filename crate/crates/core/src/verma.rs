//! Verma modules `M(lambda)` of `H_z` with basis `f^i y^j v`, simple
//! quotients, central characters and the finite-dimensionality criterion.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::engine::Element;
use crate::error::{Error, Result};
use crate::linalg::{canonical_basis, nullspace, rank, SparseVec};
use crate::poly::Poly;
use crate::scalar::{format_scalar, frac, int, Scalar};
use crate::sl2::{qz, Hz, E, F, H, X, Y};

/// Basis index `(i, j)` standing for `f^i y^j v`.
pub type BasisIndex = (u32, u32);

pub fn depth_of((i, j): BasisIndex) -> usize {
    (2 * i + j) as usize
}

/// Basis of the weight space at depth `k`.
pub fn depth_basis(k: usize) -> Vec<BasisIndex> {
    (0..=k / 2).map(|i| (i as u32, (k - 2 * i) as u32)).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleVector {
    pub terms: BTreeMap<BasisIndex, Scalar>,
}

impl ModuleVector {
    pub fn basis(b: BasisIndex) -> Self {
        ModuleVector {
            terms: [(b, Scalar::one())].into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.terms.keys().map(|&b| depth_of(b)).max().unwrap_or(0)
    }

    pub fn coeff(&self, b: BasisIndex) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_scaled(&mut self, other: &ModuleVector, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (b, a) in &other.terms {
            let e = self.terms.entry(*b).or_insert_with(Scalar::zero);
            *e += a * c;
            if e.is_zero() {
                self.terms.remove(b);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = ModuleVector::default();
        out.add_scaled(self, c);
        out
    }

    /// Rescales so that the pure `y` power has coefficient 1 when present,
    /// otherwise the term with the largest `i`.
    pub fn normalized(&self) -> Self {
        let pivot = self
            .terms
            .iter()
            .find(|((i, _), _)| *i == 0)
            .or_else(|| self.terms.iter().next_back())
            .map(|(_, c)| c.clone());
        match pivot {
            Some(c) => self.scale(&(Scalar::one() / c)),
            None => self.clone(),
        }
    }

    pub fn is_proportional(&self, other: &ModuleVector) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn to_json(&self, lambda: &Scalar) -> ModuleVectorJson {
        ModuleVectorJson {
            lambda: format_scalar(lambda),
            terms: self
                .terms
                .iter()
                .map(|(&(f, y), c)| ModuleTermJson {
                    f,
                    y,
                    coeff: format_scalar(c),
                })
                .collect(),
        }
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            match i {
                0 => {}
                1 => mono.push("f".to_string()),
                _ => mono.push(format!("f^{i}")),
            }
            match j {
                0 => {}
                1 => mono.push("y".to_string()),
                _ => mono.push(format!("y^{j}")),
            }
            mono.push("v".into());
            parts.push(format!("({})*{}", format_scalar(c), mono.join("*")));
        }
        parts.join(" + ")
    }

    fn as_sparse(&self) -> SparseVec<BasisIndex> {
        self.terms.clone()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleVectorJson {
    pub lambda: String,
    pub terms: Vec<ModuleTermJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleTermJson {
    pub f: u32,
    pub y: u32,
    pub coeff: String,
}

/// `M(lambda)` truncated at depth `D`. Actions are computed exactly on the
/// full module; any result reaching beyond `D` is an error.
pub struct VermaModule {
    lambda: Scalar,
    hz: Hz,
    depth: usize,
    cache: Mutex<HashMap<(usize, BasisIndex), Arc<ModuleVector>>>,
}

pub type VermaTruncation = VermaModule;

impl VermaModule {
    pub fn new(lambda: Scalar, z: &Poly, depth: usize) -> Self {
        VermaModule {
            lambda,
            hz: Hz::new(z),
            depth,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn hz(&self) -> &Hz {
        &self.hz
    }

    pub fn highest_weight_vector(&self) -> ModuleVector {
        ModuleVector::basis((0, 0))
    }

    fn gen_on_vector(&self, g: usize, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::default();
        for (&b, c) in &v.terms {
            out.add_scaled(&self.gen_on_basis(g, b), c);
        }
        out
    }

    fn casimir_on_vector(&self, v: &ModuleVector) -> ModuleVector {
        let hv = self.gen_on_vector(H, v);
        let mut out = self.gen_on_vector(H, &hv);
        out.add_scaled(&self.gen_on_vector(E, &self.gen_on_vector(F, v)), &int(4));
        out.add_scaled(&hv, &int(-2));
        out
    }

    fn z_on_vector(&self, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::default();
        for c in self.hz.z().coeffs().iter().rev() {
            out = self.casimir_on_vector(&out);
            out.add_scaled(v, c);
        }
        out
    }

    fn gen_on_basis(&self, g: usize, b: BasisIndex) -> Arc<ModuleVector> {
        let (i, j) = b;
        match g {
            F => return Arc::new(ModuleVector::basis((i + 1, j))),
            Y => return Arc::new(ModuleVector::basis((i, j + 1))),
            H => {
                let w = &self.lambda - int(2 * i as i64 + j as i64);
                return Arc::new(ModuleVector::basis(b).scale(&w));
            }
            _ => {}
        }
        if i == 0 && j == 0 {
            return Arc::new(ModuleVector::default());
        }
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(&(g, b)) {
            return hit.clone();
        }
        let out = if i > 0 {
            let w = ModuleVector::basis((i - 1, j));
            let inner = self.gen_on_vector(g, &w);
            let mut out = self.gen_on_vector(F, &inner);
            if g == E {
                // e f w = f e w + h w
                out.add_scaled(&self.gen_on_vector(H, &w), &Scalar::one());
            } else {
                // x f w = f x w - y w
                out.add_scaled(&self.gen_on_vector(Y, &w), &-Scalar::one());
            }
            out
        } else {
            let w = ModuleVector::basis((0, j - 1));
            let inner = self.gen_on_vector(g, &w);
            let mut out = self.gen_on_vector(Y, &inner);
            if g == E {
                // e y w = y e w + x w
                out.add_scaled(&self.gen_on_vector(X, &w), &Scalar::one());
            } else {
                // x y w = y x w + z(Delta) w
                out.add_scaled(&self.z_on_vector(&w), &Scalar::one());
            }
            out
        };
        let out = Arc::new(out);
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert((g, b), out.clone());
        out
    }

    fn check_depth(&self, v: ModuleVector) -> Result<ModuleVector> {
        let d = v.depth();
        if d > self.depth {
            return Err(Error::TruncationOverflow {
                needed: d,
                depth: self.depth,
            });
        }
        Ok(v)
    }

    /// Action of a generator index on a vector.
    pub fn act_gen(&self, g: usize, v: &ModuleVector) -> Result<ModuleVector> {
        self.check_depth(self.gen_on_vector(g, v))
    }

    /// Action of an element of `H_z` (rightmost generators act first).
    pub fn act(&self, a: &Element, v: &ModuleVector) -> Result<ModuleVector> {
        if a.presentation().id() != self.hz.presentation().id() {
            return Err(Error::PresentationMismatch(
                a.presentation().id().into(),
                self.hz.presentation().id().into(),
            ));
        }
        let mut out = ModuleVector::default();
        for (m, c) in a.terms() {
            let mut cur = v.clone();
            for g in m.word().into_iter().rev() {
                cur = self.gen_on_vector(g, &cur);
            }
            out.add_scaled(&cur, c);
        }
        self.check_depth(out)
    }

    /// Exact basis of the maximal vectors (killed by `e` and `x`) at each
    /// depth `k <= up_to`.
    pub fn maximal_vectors(&self, up_to: usize) -> Result<Vec<(usize, ModuleVector)>> {
        if up_to + 2 > self.depth {
            return Err(Error::Usage(format!(
                "search depth {up_to} needs truncation depth at least {}",
                up_to + 2
            )));
        }
        let mut out = Vec::new();
        for k in 0..=up_to {
            let basis = depth_basis(k);
            let cols: Vec<SparseVec<(usize, BasisIndex)>> = basis
                .iter()
                .map(|&b| {
                    let v = ModuleVector::basis(b);
                    let mut col = BTreeMap::new();
                    for (tag, g) in [(0, E), (1, X)] {
                        for (k2, c) in self.gen_on_vector(g, &v).terms {
                            col.insert((tag, k2), c);
                        }
                    }
                    col
                })
                .collect();
            let vecs: Vec<SparseVec<BasisIndex>> = nullspace(&cols)
                .into_iter()
                .map(|coef| {
                    basis
                        .iter()
                        .zip(coef)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(&b, c)| (b, c))
                        .collect()
                })
                .collect();
            for t in canonical_basis(&vecs) {
                out.push((k, ModuleVector { terms: t }.normalized()));
            }
        }
        Ok(out)
    }

    /// Weight-space dimensions of the full Verma module.
    pub fn character(&self, depth: usize) -> Vec<(Scalar, usize)> {
        (0..=depth)
            .map(|k| (&self.lambda - int(k as i64), k / 2 + 1))
            .collect()
    }

    /// True iff `w` (homogeneous of depth `k`) lies in the maximal proper
    /// submodule, i.e. every `e^a x^b` with `2a + b = k` sends it to 0.
    pub fn in_radical(&self, w: &ModuleVector) -> bool {
        let k = w.depth();
        (0..=k / 2).all(|a| {
            let mut cur = w.clone();
            for _ in 0..(k - 2 * a) {
                cur = self.gen_on_vector(X, &cur);
            }
            for _ in 0..a {
                cur = self.gen_on_vector(E, &cur);
            }
            cur.is_zero()
        })
    }

    /// Dimensions of the simple quotient `V(lambda)` at depths `0..=depth`,
    /// computed as ranks of the maps `e^a x^b : M_k -> M_0`.
    pub fn simple_character(&self, depth: usize) -> Vec<(Scalar, usize)> {
        (0..=depth)
            .map(|k| {
                let images: Vec<SparseVec<usize>> = depth_basis(k)
                    .into_iter()
                    .map(|b| {
                        let mut row = SparseVec::new();
                        for a in 0..=k / 2 {
                            let mut cur = ModuleVector::basis(b);
                            for _ in 0..(k - 2 * a) {
                                cur = self.gen_on_vector(X, &cur);
                            }
                            for _ in 0..a {
                                cur = self.gen_on_vector(E, &cur);
                            }
                            let c = cur.coeff((0, 0));
                            if !c.is_zero() {
                                row.insert(a, c);
                            }
                        }
                        row
                    })
                    .collect();
                (&self.lambda - int(k as i64), rank(&images))
            })
            .collect()
    }

    /// Dimensions of `M(lambda) / sum k[f, y] w` over the given maximal vectors.
    pub fn quotient_character(
        &self,
        maximal: &[(usize, ModuleVector)],
        depth: usize,
    ) -> Vec<(Scalar, usize)> {
        (0..=depth)
            .map(|k| {
                let mut gens = Vec::new();
                for (d, w) in maximal.iter().filter(|(d, _)| *d > 0 && *d <= k) {
                    for (a, b) in depth_basis(k - d) {
                        let mut cur = w.clone();
                        for _ in 0..b {
                            cur = self.gen_on_vector(Y, &cur);
                        }
                        for _ in 0..a {
                            cur = self.gen_on_vector(F, &cur);
                        }
                        gens.push(cur.as_sparse());
                    }
                }
                (&self.lambda - int(k as i64), k / 2 + 1 - rank(&gens))
            })
            .collect()
    }
}

/// `phi_z` as a polynomial in the weight:
/// `(t/2 + 1) z(t^2 + 2t) - q_z(t^2 + 2t)`.
pub fn phi_poly(z: &Poly) -> Result<Poly> {
    let inner = Poly::from_ints(&[0, 2, 1]);
    let lin = Poly::new(vec![int(1), frac(1, 2)]);
    Ok(&(&lin * &z.compose(&inner)) - &qz(z)?.compose(&inner))
}

/// The scalar by which `t_z` acts on `M(lambda)`.
pub fn phi_z(lambda: &Scalar, z: &Poly) -> Result<Scalar> {
    Ok(phi_poly(z)?.eval(lambda))
}

/// `alpha_{rm} = sum_{j = r+3-m}^{r+1} j z(j^2 - 1)`.
pub fn alpha_rm(r: i64, m: i64, z: &Poly) -> Result<Scalar> {
    if m < 2 || r < 0 {
        return Err(Error::Usage("alpha_rm needs m >= 2 and r >= 0".into()));
    }
    Ok((r + 3 - m..=r + 1)
        .map(|j| int(j) * z.eval(&int(j * j - 1)))
        .sum())
}

/// `F(j) = sum_{i=1}^{j} i z(i^2 - 1)`.
pub fn alpha_partial_sum(j: i64, z: &Poly) -> Scalar {
    (1..=j).map(|i| int(i) * z.eval(&int(i * i - 1))).sum()
}

#[derive(Clone, Debug)]
pub struct FiniteReport {
    pub r: i64,
    pub finite: bool,
    /// Smallest `s` with `alpha_{r, r-s+2} = 0`.
    pub witness: Option<i64>,
    /// Simple-module dimensions by depth, when the module was computed.
    pub simple_dims: Option<Vec<usize>>,
    /// Total dimension if two consecutive zero depths were found.
    pub dimension: Option<usize>,
}

/// Whether `V(r)` is finite dimensional; positive answers are cross-checked
/// by computing the simple quotient of `M(r)` until it vanishes.
pub fn finite_dimensional_test(r: i64, z: &Poly) -> Result<FiniteReport> {
    let mut witness = None;
    for s in 0..=r {
        if alpha_rm(r, r - s + 2, z)?.is_zero() {
            witness = Some(s);
            break;
        }
    }
    let mut report = FiniteReport {
        r,
        finite: witness.is_some(),
        witness,
        simple_dims: None,
        dimension: None,
    };
    if report.finite {
        let limit = (4 * r as usize + 8).max(12);
        let m = VermaModule::new(int(r), z, limit + 2);
        let dims: Vec<usize> = m.simple_character(limit).into_iter().map(|(_, d)| d).collect();
        report.dimension = dims
            .windows(2)
            .position(|w| w[0] == 0 && w[1] == 0)
            .map(|p| dims[..p].iter().sum());
        report.simple_dims = Some(dims);
        if report.dimension.is_none() {
            return Err(Error::Invariant(format!(
                "alpha criterion says V({r}) is finite but no vanishing found to depth {limit}"
            )));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct BlockReport {
    pub same_block: bool,
    pub phi_lambda: Scalar,
    pub phi_mu: Scalar,
    /// Rational weights with the same central character as `lambda`.
    pub rational_fiber: Option<Vec<Scalar>>,
    /// Upper bound `2(deg z + 1)` on the fiber size.
    pub fiber_bound: usize,
}

pub fn block_report(lambda: &Scalar, mu: &Scalar, z: &Poly) -> Result<BlockReport> {
    let phi = phi_poly(z)?;
    let (pl, pm) = (phi.eval(lambda), phi.eval(mu));
    let shifted = &phi - &Poly::constant(pl.clone());
    Ok(BlockReport {
        same_block: pl == pm,
        phi_lambda: pl,
        phi_mu: pm,
        rational_fiber: rational_roots(&shifted),
        fiber_bound: 2 * (z.degree().unwrap_or(0) + 1),
    })
}

fn divisors(n: &num_bigint::BigInt) -> Option<Vec<num_bigint::BigInt>> {
    let n = n.abs();
    let limit = num_bigint::BigInt::from(1_000_000_000_000i64);
    if n > limit {
        return None;
    }
    let n: i64 = i64::try_from(&n).ok()?;
    let mut out = Vec::new();
    let mut d = 1i64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d.into());
            if d * d != n {
                out.push((n / d).into());
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots by the rational root theorem; `None` when the polynomial
/// is zero or its coefficients are too large to factor cheaply.
pub fn rational_roots(p: &Poly) -> Option<Vec<Scalar>> {
    if p.is_zero() {
        return None;
    }
    let mut roots = Vec::new();
    let mut coeffs = p.coeffs().to_vec();
    while coeffs.first().is_some_and(Zero::is_zero) {
        coeffs.remove(0);
        if !roots.contains(&Scalar::zero()) {
            roots.push(Scalar::zero());
        }
    }
    if coeffs.len() <= 1 {
        return Some(roots);
    }
    let lcm = coeffs
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<num_bigint::BigInt> = coeffs
        .iter()
        .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    let ps = divisors(&ints[0])?;
    let qs = divisors(ints.last().expect("nonempty"))?;
    let q = Poly::new(coeffs);
    for a in &ps {
        for b in &qs {
            for sign in [1, -1] {
                let cand = Scalar::new(a * sign, b.clone());
                if !roots.contains(&cand) && q.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

#[derive(Clone, Debug)]
pub struct AnnihilatorWitness {
    pub n: u32,
    pub lambda: Scalar,
    pub mu: Scalar,
    pub depth: usize,
    /// Basis vectors `b` of `M(lambda)` for which `(y^2+2f)^n b` was shown to
    /// lie in the maximal submodule.
    pub checked_vectors: usize,
    pub kills_simple_lambda: bool,
    /// `(y^2+2f)^n v_mu` in `M(mu)`.
    pub image_on_mu: ModuleVector,
    pub nonzero_on_simple_mu: bool,
}

/// For `z = 1` and `lambda = n - 3/2`: `(y^2+2f)^n` kills `V(lambda)` but
/// not `V(-3-lambda)`.
pub fn annihilator_inclusion_witness(lambda: &Scalar, depth: usize) -> Result<AnnihilatorWitness> {
    let n_s = lambda + frac(3, 2);
    if !n_s.is_integer() || !n_s.is_positive() {
        return Err(Error::Usage(format!(
            "weight {} is not of the form n - 3/2 with n >= 1",
            format_scalar(lambda)
        )));
    }
    let n = crate::scalar::to_i64(&n_s).expect("integer") as u32;
    if 2 * n as usize + 2 > depth {
        return Err(Error::Usage(format!("depth must be at least {}", 2 * n + 2)));
    }
    let z = Poly::one();
    let m = VermaModule::new(lambda.clone(), &z, depth);
    let hz = m.hz();
    let u = (&(&hz.y() * &hz.y()) + &hz.f().scale(&int(2))).pow(n);
    let mut checked = 0;
    let mut kills = true;
    for k in 0..=(depth - 2 * n as usize) {
        for b in depth_basis(k) {
            let img = m.act(&u, &ModuleVector::basis(b))?;
            kills &= m.in_radical(&img);
            checked += 1;
        }
    }
    let mu = -int(3) - lambda;
    let m_mu = VermaModule::new(mu.clone(), &z, depth);
    let u_mu = (&(&m_mu.hz().y() * &m_mu.hz().y()) + &m_mu.hz().f().scale(&int(2))).pow(n);
    let image = m_mu.act(&u_mu, &m_mu.highest_weight_vector())?;
    let nonzero = !image.is_zero() && !m_mu.in_radical(&image);
    Ok(AnnihilatorWitness {
        n,
        lambda: lambda.clone(),
        mu,
        depth,
        checked_vectors: checked,
        kills_simple_lambda: kills,
        image_on_mu: image,
        nonzero_on_simple_mu: nonzero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y2_2f(m: &VermaModule, n: u32) -> Element {
        let hz = m.hz();
        (&(&hz.y() * &hz.y()) + &hz.f().scale(&int(2))).pow(n)
    }

    #[test]
    fn action_examples() {
        let lam = frac(2, 3);
        let m = VermaModule::new(lam.clone(), &Poly::one(), 8);
        let v = m.highest_weight_vector();
        let d = m.act(&m.hz().casimir(), &v).unwrap();
        assert_eq!(d, v.scale(&(&lam * &lam + &lam * int(2))));
        let yv = ModuleVector::basis((0, 1));
        assert!(m.act(&m.hz().e(), &yv).unwrap().is_zero());
        let w = m.act(&y2_2f(&m, 1), &v).unwrap();
        assert_eq!(
            m.act(&m.hz().e(), &w).unwrap(),
            v.scale(&(&lam * int(2) + int(1)))
        );
    }

    #[test]
    fn overflow_is_an_error() {
        let m = VermaModule::new(int(0), &Poly::one(), 3);
        let y4 = m.hz().y().pow(4);
        assert!(matches!(
            m.act(&y4, &m.highest_weight_vector()),
            Err(Error::TruncationOverflow { .. })
        ));
    }

    #[test]
    fn maximal_vector_examples() {
        let m = VermaModule::new(frac(-1, 2), &Poly::one(), 10);
        let found = m.maximal_vectors(8).unwrap();
        assert_eq!(found.len(), 2);
        assert_eq!(found[0], (0, m.highest_weight_vector()));
        let expected = m.act(&y2_2f(&m, 1), &m.highest_weight_vector()).unwrap();
        assert_eq!(found[1].0, 2);
        assert!(found[1].1.is_proportional(&expected));

        let m = VermaModule::new(frac(1, 3), &Poly::one(), 10);
        assert_eq!(m.maximal_vectors(8).unwrap().len(), 1);

        let m = VermaModule::new(frac(5, 2), &Poly::one(), 12);
        let found = m.maximal_vectors(10).unwrap();
        assert_eq!(found.len(), 2);
        let expected = m.act(&y2_2f(&m, 4), &m.highest_weight_vector()).unwrap();
        assert_eq!(found[1].0, 8);
        assert!(found[1].1.is_proportional(&expected));
        assert!(m.maximal_vectors(11).is_err());
    }

    #[test]
    fn characters() {
        let m = VermaModule::new(frac(-1, 2), &Poly::one(), 12);
        assert_eq!(m.character(5)[5].1, 3);
        let simple: Vec<usize> = m.simple_character(3).into_iter().map(|(_, d)| d).collect();
        assert_eq!(simple, vec![1, 1, 1, 1]);
        let maxv = m.maximal_vectors(10).unwrap();
        let quot: Vec<usize> = m.quotient_character(&maxv, 10).into_iter().map(|(_, d)| d).collect();
        let simple: Vec<usize> = m.simple_character(10).into_iter().map(|(_, d)| d).collect();
        assert_eq!(quot, simple);
    }

    #[test]
    fn phi_examples() {
        assert!(phi_poly(&Poly::zero()).unwrap().is_zero());
        let p = phi_poly(&Poly::one()).unwrap();
        assert_eq!(p, Poly::new(vec![frac(3, 4), frac(3, 2), frac(1, 2)]));
        let sym = p.compose(&Poly::from_ints(&[-3, -1]));
        assert_eq!(sym, p);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_rm(1, 3, &Poly::one()).unwrap(), int(3));
        let z = Poly::from_ints(&[-2, 1]);
        assert_eq!(alpha_rm(1, 3, &z).unwrap(), int(0));
        assert_eq!(alpha_rm(0, 2, &z).unwrap(), int(-2));
        assert!(alpha_rm(1, 1, &z).is_err());
        for r in 0..6 {
            for m in 2..=r + 2 {
                assert_eq!(
                    alpha_rm(r, m, &z).unwrap(),
                    alpha_partial_sum(r + 1, &z) - alpha_partial_sum(r + 2 - m, &z)
                );
            }
        }
    }

    #[test]
    fn block_examples() {
        let one = Poly::one();
        assert!(block_report(&int(0), &int(-3), &one).unwrap().same_block);
        assert!(!block_report(&int(0), &int(1), &one).unwrap().same_block);
        assert!(block_report(&frac(1, 7), &int(5), &Poly::zero()).unwrap().same_block);
        let fiber = block_report(&int(0), &int(0), &one).unwrap().rational_fiber.unwrap();
        assert_eq!(fiber, vec![int(-3), int(0)]);
    }

    #[test]
    fn annihilator_witness_small() {
        let w = annihilator_inclusion_witness(&frac(-1, 2), 6).unwrap();
        assert!(w.kills_simple_lambda && w.nonzero_on_simple_mu);
        assert!(annihilator_inclusion_witness(&int(0), 6).is_err());
    }
}
