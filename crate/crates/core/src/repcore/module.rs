use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::algebra::{bracket, Gen, Parity, Weight};
use crate::error::{Error, Result};
use crate::exactla::{LinearOp, SparseMatrix, SparseVec, Q};
use crate::pbw::{CurrentGen, Element};

/// Monic polynomial in `t`, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Q>);

impl Poly {
    /// `t - z`.
    pub fn linear(z: &Q) -> Poly {
        Poly(vec![-z.clone(), Q::one()])
    }

    /// `t^n`.
    pub fn monomial(n: usize) -> Poly {
        let mut c = vec![Q::zero(); n + 1];
        c[n] = Q::one();
        Poly(c)
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut c = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        Poly(c)
    }

    /// `p(t + z)`.
    pub fn translate(&self, z: &Q) -> Poly {
        let n = self.degree();
        let mut c = vec![Q::zero(); n + 1];
        for (k, a) in self.0.iter().enumerate() {
            // a (t+z)^k = a Σ_j C(k,j) z^(k-j) t^j
            for (j, cj) in c.iter_mut().enumerate().take(k + 1) {
                *cj += &(&(a * &Q::binomial(k as u32, j as u32)) * &z.pow((k - j) as u32));
            }
        }
        Poly(c)
    }

    /// Coefficients of `t^m mod p`, of length `deg p`.
    pub fn power_mod(&self, m: u32) -> Vec<Q> {
        let d = self.degree();
        let mut r = vec![Q::zero(); d];
        if (m as usize) < d {
            r[m as usize] = Q::one();
            return r;
        }
        r[d - 1] = Q::one();
        for _ in d..=m as usize {
            // r <- t * r mod p
            let top = r[d - 1].clone();
            for j in (1..d).rev() {
                r[j] = &r[j - 1] - &(&top * &self.0[j]);
            }
            r[0] = -&(&top * &self.0[0]);
        }
        r
    }
}

type ActionTable = Vec<[Arc<SparseMatrix>; 8]>;

/// A finite-dimensional representation of sl(1|2)[t] on a weight basis.
///
/// The action factors through `g ⊗ C[t]/(p)` for the stored annihilator `p`,
/// so the matrices of `x(j)` for `j < deg p` determine every other degree.
#[derive(Debug)]
pub struct FiniteModule {
    labels: Vec<String>,
    weights: Vec<Weight>,
    parities: Vec<Parity>,
    annihilator: Poly,
    actions: ActionTable,
    higher: Mutex<HashMap<CurrentGen, Arc<SparseMatrix>>>,
}

impl FiniteModule {
    /// `actions[j][g.index()]` is the matrix of `g(j)`; one table per degree below `deg p`.
    pub fn new(
        labels: Vec<String>,
        weights: Vec<Weight>,
        parities: Vec<Parity>,
        annihilator: Poly,
        actions: Vec<[SparseMatrix; 8]>,
    ) -> Result<FiniteModule> {
        let n = labels.len();
        if weights.len() != n || parities.len() != n {
            return Err(Error::Internal("basis data lengths disagree".into()));
        }
        if actions.len() != annihilator.degree() {
            return Err(Error::Internal("one action table is needed per degree below deg p".into()));
        }
        if actions.iter().flatten().any(|m| m.rows() != n || m.ncols() != n) {
            return Err(Error::Internal("action matrix has the wrong shape".into()));
        }
        let actions = actions.into_iter().map(|t| t.map(Arc::new)).collect();
        Ok(FiniteModule { labels, weights, parities, annihilator, actions, higher: Mutex::new(HashMap::new()) })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn annihilator(&self) -> &Poly {
        &self.annihilator
    }

    /// Largest degree with a stored matrix; higher degrees are reduced modulo the annihilator.
    pub fn degree_cap_hint(&self) -> u32 {
        self.annihilator.degree() as u32 - 1
    }

    /// Matrix of `x(m)`.
    pub fn action(&self, x: CurrentGen) -> Arc<SparseMatrix> {
        let d = x.degree as usize;
        if d < self.actions.len() {
            return self.actions[d][x.gen.index()].clone();
        }
        if let Some(m) = self.higher.lock().unwrap().get(&x) {
            return m.clone();
        }
        let coeffs = self.annihilator.power_mod(x.degree);
        let mut m = SparseMatrix::zeros(self.dim(), self.dim());
        for (j, c) in coeffs.iter().enumerate() {
            m.axpy(c, &self.actions[j][x.gen.index()]);
        }
        let m = Arc::new(m);
        self.higher.lock().unwrap().insert(x, m.clone());
        m
    }

    pub fn apply(&self, x: CurrentGen, v: &SparseVec) -> SparseVec {
        self.action(x).apply(v)
    }

    /// Acts by an element of the enveloping algebra (words act right to left).
    pub fn apply_element(&self, e: &Element, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (word, c) in e.terms() {
            let mut w = v.clone();
            for g in word.iter().rev() {
                if w.is_zero() {
                    break;
                }
                w = self.apply(*g, &w);
            }
            out.axpy(c, &w);
        }
        out
    }

    /// Weight of a weight vector, or `None` for the zero vector or a mixed vector.
    pub fn weight_of(&self, v: &SparseVec) -> Option<Weight> {
        let mut it = v.support().map(|i| &self.weights[i]);
        let first = it.next()?;
        it.all(|w| w == first).then(|| first.clone())
    }

    pub fn parity_of(&self, v: &SparseVec) -> Option<Parity> {
        let mut it = v.support().map(|i| self.parities[i]);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Basis indices carrying weight `w`.
    pub fn weight_space(&self, w: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&i| &self.weights[i] == w).collect()
    }

    /// Distinct weights in increasing order.
    pub fn distinct_weights(&self) -> Vec<Weight> {
        let mut ws = self.weights.clone();
        ws.sort();
        ws.dedup();
        ws
    }

    /// Same module with every basis vector's parity flipped.
    pub fn parity_flipped(&self) -> FiniteModule {
        FiniteModule {
            labels: self.labels.clone(),
            weights: self.weights.clone(),
            parities: self.parities.iter().map(|p| p.flip()).collect(),
            annihilator: self.annihilator.clone(),
            actions: self.actions.clone(),
            higher: Mutex::new(HashMap::new()),
        }
    }

    /// First failure of the representation axioms for degrees up to `max_degree`.
    ///
    /// Checks the bracket relation for every ordered pair of current generators,
    /// that `h1(0)`, `h2(0)` are diagonal with the stored weights, and that odd
    /// generators shift parity.
    pub fn check_representation(&self, max_degree: u32) -> std::result::Result<(), String> {
        let n = self.dim();
        for (i, w) in self.weights.iter().enumerate() {
            for (g, val) in [(Gen::H1, &w.h1), (Gen::H2, &w.h2)] {
                let col = self.action(CurrentGen::new(g, 0)).column(i).clone();
                if col != SparseVec::unit(i).scaled(val) {
                    return Err(format!("{g}(0) is not diagonal with the weight at basis vector {i}"));
                }
            }
        }
        for g in Gen::ALL {
            for m in 0..=max_degree {
                let a = self.action(CurrentGen::new(g, m));
                for j in 0..n {
                    for (i, _) in a.column(j).entries() {
                        if self.parities[*i] != self.parities[j].add(g.parity()) {
                            return Err(format!("{g}({m}) breaks parity at column {j}"));
                        }
                    }
                }
            }
        }
        for a in Gen::ALL {
            for b in Gen::ALL {
                for m in 0..=max_degree {
                    for k in 0..=max_degree {
                        let ma = self.action(CurrentGen::new(a, m));
                        let mb = self.action(CurrentGen::new(b, k));
                        let sign = if a.parity().is_odd() && b.parity().is_odd() { -Q::one() } else { Q::one() };
                        let lhs = ma.mul(&mb).sub(&mb.mul(&ma).scaled(&sign));
                        let mut rhs = SparseMatrix::zeros(n, n);
                        for (g, c) in bracket(a, b) {
                            rhs.axpy(c, &self.action(CurrentGen::new(*g, m + k)));
                        }
                        if lhs != rhs {
                            return Err(format!("[{a}({m}), {b}({k})] is not represented correctly"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Action {
            gen: String,
            degree: u32,
            entries: Vec<(usize, usize, Q)>,
        }
        #[derive(Serialize)]
        struct Dump<'a> {
            dim: usize,
            labels: &'a [String],
            weights: &'a [Weight],
            parities: &'a [Parity],
            annihilator: &'a [Q],
            actions: Vec<Action>,
        }
        let mut actions = Vec::new();
        for (d, table) in self.actions.iter().enumerate() {
            for g in Gen::ALL {
                let m = &table[g.index()];
                let mut entries = Vec::new();
                for j in 0..m.ncols() {
                    for (i, c) in m.column(j).entries() {
                        entries.push((*i, j, c.clone()));
                    }
                }
                actions.push(Action { gen: g.name().to_string(), degree: d as u32, entries });
            }
        }
        serde_json::to_value(Dump {
            dim: self.dim(),
            labels: &self.labels,
            weights: &self.weights,
            parities: &self.parities,
            annihilator: self.annihilator.coeffs(),
            actions,
        })
        .expect("module dump serializes")
    }
}

/// A module together with a distinguished even cyclic vector.
#[derive(Clone, Debug)]
pub struct CyclicModule {
    pub module: Arc<FiniteModule>,
    pub cyclic: SparseVec,
}

impl CyclicModule {
    pub fn new(module: FiniteModule, cyclic: SparseVec) -> CyclicModule {
        CyclicModule { module: Arc::new(module), cyclic }
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn cyclic_weight(&self) -> Option<Weight> {
        self.module.weight_of(&self.cyclic)
    }

    /// Basis index of the cyclic vector, when it is a basis vector.
    pub fn cyclic_index(&self) -> Option<usize> {
        match self.cyclic.entries() {
            [(i, c)] if c.is_one() => Some(*i),
            _ => None,
        }
    }
}

/// Matrix of zeros in every slot; handy when building tables.
pub(crate) fn zero_table(n: usize) -> [SparseMatrix; 8] {
    std::array::from_fn(|_| SparseMatrix::zeros(n, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_mod_reduces() {
        // p = (t-1)(t-2) = t^2 - 3t + 2; t^2 ≡ 3t - 2, t^3 ≡ 7t - 6.
        let p = Poly::linear(&Q::one()).mul(&Poly::linear(&Q::from_int(2)));
        assert_eq!(p.power_mod(2), vec![Q::from_int(-2), Q::from_int(3)]);
        assert_eq!(p.power_mod(3), vec![Q::from_int(-6), Q::from_int(7)]);
        assert_eq!(p.power_mod(1), vec![Q::zero(), Q::one()]);
    }

    #[test]
    fn translate_matches_roots() {
        // (t-3) translated by 1 is (t-2).
        assert_eq!(Poly::linear(&Q::from_int(3)).translate(&Q::one()), Poly::linear(&Q::from_int(2)));
        let p = Poly::monomial(2).translate(&Q::from_int(-1));
        assert_eq!(p.coeffs(), &[Q::one(), Q::from_int(-2), Q::one()]);
    }
}
