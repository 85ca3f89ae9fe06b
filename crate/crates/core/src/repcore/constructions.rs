use std::sync::Arc;

use crate::algebra::Gen;
use crate::error::{Error, Result};
use crate::exactla::{SparseMatrix, SparseVec, Q};
use crate::pbw::cg;

use super::module::{zero_table, CyclicModule, FiniteModule, Poly};

/// The g[t]-module on which `x(m)` acts as `z^m x(0)`.
pub fn evaluation(m: &CyclicModule, z: &Q) -> CyclicModule {
    let base = &m.module;
    let table: [SparseMatrix; 8] = std::array::from_fn(|k| base.action(cg(Gen::ALL[k], 0)).as_ref().clone());
    let module = FiniteModule::new(
        base.labels().to_vec(),
        base.weights().to_vec(),
        base.parities().to_vec(),
        Poly::linear(z),
        vec![table],
    )
    .expect("evaluation keeps the shape of the base module");
    CyclicModule { module: Arc::new(module), cyclic: m.cyclic.clone() }
}

/// Graded tensor product of two modules with Koszul signs.
fn tensor_pair(a: &CyclicModule, b: &CyclicModule) -> CyclicModule {
    let (ma, mb) = (&a.module, &b.module);
    let (da, db) = (ma.dim(), mb.dim());
    let dim = da * db;
    let p = ma.annihilator().mul(mb.annihilator());
    let mut tables = Vec::with_capacity(p.degree());
    for j in 0..p.degree() as u32 {
        let mut table = zero_table(dim);
        for g in Gen::ALL {
            let xa = ma.action(cg(g, j));
            let xb = mb.action(cg(g, j));
            let mut cols = Vec::with_capacity(dim);
            for ia in 0..da {
                let sign = if g.parity().is_odd() && ma.parities()[ia].is_odd() { -Q::one() } else { Q::one() };
                for ib in 0..db {
                    let mut pairs: Vec<(usize, Q)> = xa.column(ia).entries().iter().map(|(i, c)| (i * db + ib, c.clone())).collect();
                    pairs.extend(xb.column(ib).entries().iter().map(|(k, c)| (ia * db + k, c * &sign)));
                    cols.push(SparseVec::from_pairs(pairs));
                }
            }
            table[g.index()] = SparseMatrix::from_columns(dim, cols);
        }
        tables.push(table);
    }
    let mut labels = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    let mut parities = Vec::with_capacity(dim);
    for ia in 0..da {
        for ib in 0..db {
            labels.push(format!("{}⊗{}", bracketed(&ma.labels()[ia]), bracketed(&mb.labels()[ib])));
            weights.push(ma.weights()[ia].add(&mb.weights()[ib]));
            parities.push(ma.parities()[ia].add(mb.parities()[ib]));
        }
    }
    let module = FiniteModule::new(labels, weights, parities, p, tables).expect("tensor tables have matching shapes");
    let mut pairs = Vec::new();
    for (i, c) in a.cyclic.entries() {
        for (k, d) in b.cyclic.entries() {
            pairs.push((i * db + k, c * d));
        }
    }
    CyclicModule { module: Arc::new(module), cyclic: SparseVec::from_pairs(pairs) }
}

fn bracketed(label: &str) -> String {
    if label.contains('⊗') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

/// Tensor product of the factors in order; the cyclic vector is the tensor of cyclic vectors.
pub fn tensor(ms: &[CyclicModule]) -> Result<CyclicModule> {
    let (first, rest) = ms.split_first().ok_or_else(|| Error::InvalidParameter("tensor of no factors".into()))?;
    Ok(rest.iter().fold(first.clone(), |acc, m| tensor_pair(&acc, m)))
}

/// Pullback along `t ↦ t - z`: `x(m)` acts as `Σ_j C(m,j) (-z)^(m-j) x(j)`.
pub fn shift(m: &CyclicModule, z: &Q) -> CyclicModule {
    if z.is_zero() {
        return m.clone();
    }
    let base = &m.module;
    let p = base.annihilator().translate(z);
    let minus_z = -z;
    let tables = (0..p.degree() as u32)
        .map(|j| {
            std::array::from_fn(|k| {
                let g = Gen::ALL[k];
                let mut acc = SparseMatrix::zeros(base.dim(), base.dim());
                for i in 0..=j {
                    let c = &Q::binomial(j, i) * &minus_z.pow(j - i);
                    acc.axpy(&c, &base.action(cg(g, i)));
                }
                acc
            })
        })
        .collect();
    let module = FiniteModule::new(base.labels().to_vec(), base.weights().to_vec(), base.parities().to_vec(), p, tables)
        .expect("shift keeps the shape of the base module");
    CyclicModule { module: Arc::new(module), cyclic: m.cyclic.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CartanElement, Weight};
    use crate::exactla::LinearOp;
    use crate::repcore::kac_b2;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn evaluation_scales_by_powers() {
        let k = kac_b2(&Weight::new(1, 1)).unwrap();
        let e0 = evaluation(&k, &q(0));
        assert!(e0.module.action(cg(Gen::Y2, 2)).is_zero() || k.dim() == 1);
        let e1 = evaluation(&k, &q(1));
        assert_eq!(e1.module.action(cg(Gen::X1, 3)), e1.module.action(cg(Gen::X1, 0)));
        let e2 = evaluation(&kac_b2(&Weight::new(3, 2)).unwrap(), &q(2));
        let h0 = e2.module.action(cg(Gen::H2, 0));
        assert_eq!(*e2.module.action(cg(Gen::H2, 3)), h0.scaled(&q(8)));
        e2.module.check_representation(2).unwrap();
    }

    #[test]
    fn tensor_of_evaluations() {
        let mu1 = Weight::new(1, 1);
        let mu2 = Weight::new(2, 1);
        let (z1, z2) = (q(0), q(3));
        let a = evaluation(&kac_b2(&mu1).unwrap(), &z1);
        let b = evaluation(&kac_b2(&mu2).unwrap(), &z2);
        let t = tensor(&[a.clone(), b]).unwrap();
        assert_eq!(t.dim(), 16);
        t.module.check_representation(2).unwrap();
        let h1 = CartanElement::h1();
        let expect = &(&z1 * &mu1.eval(&h1)) + &(&z2 * &mu2.eval(&h1));
        assert_eq!(t.module.apply(cg(Gen::H1, 1), &t.cyclic), t.cyclic.scaled(&expect));
        assert_eq!(tensor(&[a.clone()]).unwrap().module.action(cg(Gen::X1, 0)), a.module.action(cg(Gen::X1, 0)));
        assert!(tensor(&[]).is_err());
    }

    #[test]
    fn shift_is_invertible() {
        let a = evaluation(&kac_b2(&Weight::new(1, 1)).unwrap(), &q(1));
        let b = evaluation(&kac_b2(&Weight::new(0, 1)).unwrap(), &q(2));
        let t = tensor(&[a, b]).unwrap();
        let s = shift(&t, &Q::new(1, 2));
        s.module.check_representation(2).unwrap();
        let x1 = s.module.action(cg(Gen::X2, 1));
        let expect = t.module.action(cg(Gen::X2, 1)).sub(&t.module.action(cg(Gen::X2, 0)).scaled(&Q::new(1, 2)));
        assert_eq!(*x1, expect);
        let back = shift(&s, &Q::new(-1, 2));
        for g in Gen::ALL {
            for d in 0..4 {
                assert_eq!(back.module.action(cg(g, d)), t.module.action(cg(g, d)));
            }
        }
        assert_eq!(shift(&t, &q(0)).module.action(cg(Gen::Y3, 2)), t.module.action(cg(Gen::Y3, 2)));
        let v = s.module.apply(cg(Gen::Y3, 0), &s.cyclic);
        assert_eq!(v, t.module.action(cg(Gen::Y3, 0)).apply(&t.cyclic));
    }
}
