use crate::algebra::{check_dominant, Borel, Gen, Parity, Weight};
use crate::error::{Error, Result};
use crate::exactla::{SparseMatrix, SparseVec, Q};
use crate::pbw::{cg, normal_form, CurrentGen, Element, RankOrder};

use super::analysis::joint_kernel_in;
use super::module::{zero_table, CyclicModule, FiniteModule, Poly};

fn nonneg_int(x: &Q, what: &str) -> Result<u32> {
    match x.to_i64() {
        Some(n) if x.is_integer() && n >= 0 => Ok(n as u32),
        _ => Err(Error::InvalidParameter(format!("{what} must be a nonnegative integer, got {x}"))),
    }
}

/// The irreducible gl(2)-module with highest weight `(λ1, λ2)`, basis `y2^i v`.
///
/// Odd generators act by zero, so this is only a g0-module.
pub fn irreducible_gl2(lambda1: &Q, lambda2: &Q) -> Result<CyclicModule> {
    let n = nonneg_int(lambda2, "λ2")? as usize;
    let dim = n + 1;
    let mut t = zero_table(dim);
    let mut y2 = Vec::with_capacity(dim);
    let mut x2 = Vec::with_capacity(dim);
    let mut h1 = Vec::with_capacity(dim);
    let mut h2 = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for i in 0..dim {
        let w = Weight::new(lambda1 - &Q::from_int(i as i64), Q::from_int(n as i64 - 2 * i as i64));
        y2.push(if i < n { SparseVec::unit(i + 1) } else { SparseVec::new() });
        x2.push(if i > 0 { SparseVec::unit(i - 1).scaled(&Q::from_int((i * (n - i + 1)) as i64)) } else { SparseVec::new() });
        h1.push(SparseVec::unit(i).scaled(&w.h1));
        h2.push(SparseVec::unit(i).scaled(&w.h2));
        weights.push(w);
    }
    t[Gen::Y2.index()] = SparseMatrix::from_columns(dim, y2);
    t[Gen::X2.index()] = SparseMatrix::from_columns(dim, x2);
    t[Gen::H1.index()] = SparseMatrix::from_columns(dim, h1);
    t[Gen::H2.index()] = SparseMatrix::from_columns(dim, h2);
    let labels = (0..dim).map(gl2_label).collect();
    let m = FiniteModule::new(labels, weights, vec![Parity::Even; dim], Poly::monomial(1), vec![t])?;
    Ok(CyclicModule::new(m, SparseVec::unit(0)))
}

fn gl2_label(i: usize) -> String {
    match i {
        0 => "v".to_string(),
        1 => "y2·v".to_string(),
        _ => format!("y2^{i}·v"),
    }
}

/// The one-dimensional trivial module.
pub fn trivial_module() -> CyclicModule {
    let m = FiniteModule::new(vec!["v".into()], vec![Weight::zero()], vec![Parity::Even], Poly::monomial(1), vec![zero_table(1)])
        .expect("trivial module is well formed");
    CyclicModule::new(m, SparseVec::unit(0))
}

/// Exterior generators `(u, w)` and the block order used to normal order `g·e`.
fn induction_data(borel: Borel) -> Result<([Gen; 2], RankOrder)> {
    match borel {
        Borel::B1 => Ok((
            [Gen::Y1, Gen::Y3],
            RankOrder::from_sequence([Gen::Y1, Gen::Y3, Gen::Y2, Gen::X2, Gen::H1, Gen::H2, Gen::X1, Gen::X3]),
        )),
        Borel::B3 => Ok((
            [Gen::X1, Gen::X3],
            RankOrder::from_sequence([Gen::X1, Gen::X3, Gen::Y2, Gen::X2, Gen::H1, Gen::H2, Gen::Y1, Gen::Y3]),
        )),
        Borel::B2 => Err(Error::InvalidParameter("induced construction needs b(1) or b(3); use kac_b2".into())),
    }
}

/// The Kac module `Λ(g_{∓1}) ⊗ L_gl(λ)` induced from `g0 ⊕ g_{±1}`.
///
/// Basis is `e ⊗ y2^i v` with `e` running over `1, u, w, u∧w` and `i` over `0..=λ2`,
/// index `e * (λ2 + 1) + i`.
pub fn kac_induced(borel: Borel, lambda: &Weight) -> Result<CyclicModule> {
    let ([u, w], order) = induction_data(borel)?;
    let l = irreducible_gl2(&lambda.h1, &lambda.h2)?;
    let lmod = &l.module;
    let ld = lmod.dim();
    let exterior: [Vec<Gen>; 4] = [vec![], vec![u], vec![w], vec![u, w]];
    let ext_index = |word: &[Gen]| exterior.iter().position(|e| e.as_slice() == word);
    let dim = 4 * ld;
    let mut table = zero_table(dim);
    for g in Gen::ALL {
        let mut cols = vec![SparseVec::new(); dim];
        for (ei, e) in exterior.iter().enumerate() {
            let mut word: Vec<CurrentGen> = vec![cg(g, 0)];
            word.extend(e.iter().map(|&x| cg(x, 0)));
            let nf = normal_form(&Element::word(word), &order);
            for (term, c) in nf.terms() {
                let split = term.iter().take_while(|x| x.gen == u || x.gen == w).count();
                let prefix: Vec<Gen> = term[..split].iter().map(|x| x.gen).collect();
                let rest = &term[split..];
                if rest.iter().any(|x| x.gen.parity().is_odd()) {
                    // A raising (resp. lowering) odd letter reaches L and kills it.
                    continue;
                }
                let target = ext_index(&prefix).ok_or_else(|| Error::Internal(format!("unexpected prefix {prefix:?}")))?;
                let mid = Element::word(rest.to_vec());
                for i in 0..ld {
                    let image = lmod.apply_element(&mid, &SparseVec::unit(i));
                    for (k, a) in image.entries() {
                        let col = &mut cols[ei * ld + i];
                        col.axpy(&(c * a), &SparseVec::unit(target * ld + k));
                    }
                }
            }
        }
        table[g.index()] = SparseMatrix::from_columns(dim, cols);
    }
    let mut labels = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    let mut parities = Vec::with_capacity(dim);
    for e in &exterior {
        let ew = e.iter().fold(Weight::zero(), |acc, g| acc.add(&g.weight()));
        let ep = e.iter().fold(Parity::Even, |acc, g| acc.add(g.parity()));
        let ename = if e.is_empty() { "1".to_string() } else { e.iter().map(|g| g.name()).collect::<Vec<_>>().join("∧") };
        for i in 0..ld {
            labels.push(format!("{ename}⊗{}", lmod.labels()[i]));
            weights.push(ew.add(&lmod.weights()[i]));
            parities.push(ep);
        }
    }
    let m = FiniteModule::new(labels, weights, parities, Poly::monomial(1), vec![table])?;
    Ok(CyclicModule::new(m, SparseVec::unit(0)))
}

/// Which induced module realizes `K_{b(2)}(λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KacRoute {
    /// `K_{b(1)}(λ + α1)`, available when `λ1 ≠ 0`.
    ViaB1,
    /// `K_{b(3)}(λ - α3)`, available when `λ1 ≠ λ2`.
    ViaB3,
}

impl KacRoute {
    /// The default route: b(1) whenever it applies.
    pub fn default_for(lambda: &Weight) -> KacRoute {
        if lambda.h1.is_zero() {
            KacRoute::ViaB3
        } else {
            KacRoute::ViaB1
        }
    }

    pub fn applies(self, lambda: &Weight) -> bool {
        match self {
            KacRoute::ViaB1 => !lambda.h1.is_zero(),
            KacRoute::ViaB3 => lambda.h1 != lambda.h2,
        }
    }
}

/// The Kac module for `b(2)` with its highest-weight vector as cyclic vector.
pub fn kac_b2(lambda: &Weight) -> Result<CyclicModule> {
    kac_b2_via(lambda, KacRoute::default_for(lambda))
}

/// `kac_b2` through a chosen route, for cross-checking the two realizations.
pub fn kac_b2_via(lambda: &Weight, route: KacRoute) -> Result<CyclicModule> {
    check_dominant(lambda)?;
    if lambda.is_zero() {
        return Ok(trivial_module());
    }
    if !route.applies(lambda) {
        return Err(Error::InvalidParameter(format!("route {route:?} does not apply to {lambda}")));
    }
    let one = Q::one();
    let induced = match route {
        KacRoute::ViaB1 => kac_induced(Borel::B1, &Weight::new(lambda.h1.clone(), &lambda.h2 - &one))?,
        KacRoute::ViaB3 => kac_induced(Borel::B3, &Weight::new(&lambda.h1 - &one, &lambda.h2 - &one))?,
    };
    // The b(2) highest-weight vector is odd in the induced grading; flip so it is even.
    let module = induced.module.parity_flipped();
    let raising: Vec<CurrentGen> = Borel::B2.raising().into_iter().map(|g| cg(g, 0)).collect();
    let space = module.weight_space(lambda);
    let kernel = joint_kernel_in(&module, &raising, &space);
    if kernel.len() != 1 {
        return Err(Error::SingularVector { weight: lambda.clone(), found: kernel.len() });
    }
    let v = kernel[0].normalized();
    if module.parity_of(&v) != Some(Parity::Even) {
        return Err(Error::Internal("b(2) highest-weight vector is not even".into()));
    }
    Ok(CyclicModule::new(module, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::closure;
    use crate::exactla::LinearOp;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn gl2_ladder() {
        let l = irreducible_gl2(&q(3), &q(2)).unwrap();
        assert_eq!(l.dim(), 3);
        let x2 = l.module.action(cg(Gen::X2, 0));
        assert_eq!(x2.get(1, 2), q(2));
        let l1 = irreducible_gl2(&q(5), &q(1)).unwrap();
        assert_eq!(l1.module.weights(), &[Weight::new(5, 1), Weight::new(4, -1)]);
        assert_eq!(irreducible_gl2(&q(0), &q(0)).unwrap().dim(), 1);
        assert!(irreducible_gl2(&q(0), &Q::new(1, 2)).is_err());
        assert!(irreducible_gl2(&q(0), &q(-1)).is_err());
    }

    #[test]
    fn induced_modules_are_representations() {
        for borel in [Borel::B1, Borel::B3] {
            for lambda in [Weight::new(3, 1), Weight::new(0, 0), Weight::new(Q::new(7, 3), 2)] {
                let k = kac_induced(borel, &lambda).unwrap();
                assert_eq!(k.dim(), 4 * (lambda.h2_int().unwrap() as usize + 1));
                k.module.check_representation(0).unwrap();
            }
        }
        assert!(kac_induced(Borel::B2, &Weight::new(1, 1)).is_err());
    }

    #[test]
    fn b2_dimensions_and_cyclicity() {
        for (l1, l2) in [(q(3), 2), (q(0), 2), (q(2), 2), (Q::new(7, 3), 3), (q(-2), 1)] {
            let lambda = Weight::new(l1, l2);
            let k = kac_b2(&lambda).unwrap();
            assert_eq!(k.dim(), 4 * l2 as usize);
            assert_eq!(k.cyclic_weight(), Some(lambda.clone()));
            let mats: Vec<_> = Gen::ALL.iter().map(|g| k.module.action(cg(*g, 0))).collect();
            let ops: Vec<&dyn LinearOp> = mats.iter().map(|m| m.as_ref() as &dyn LinearOp).collect();
            assert_eq!(closure(&k.cyclic, k.dim(), &ops).dim(), k.dim());
            k.module.check_representation(1).unwrap();
        }
        assert_eq!(kac_b2(&Weight::zero()).unwrap().dim(), 1);
        assert!(kac_b2(&Weight::new(1, 0)).is_err());
    }

    #[test]
    fn routes_agree_on_weights() {
        let lambda = Weight::new(3, 2);
        let a = kac_b2_via(&lambda, KacRoute::ViaB1).unwrap();
        let b = kac_b2_via(&lambda, KacRoute::ViaB3).unwrap();
        let mut wa = a.module.weights().to_vec();
        let mut wb = b.module.weights().to_vec();
        wa.sort();
        wb.sort();
        assert_eq!(wa, wb);
        assert!(kac_b2_via(&Weight::new(0, 2), KacRoute::ViaB1).is_err());
        assert!(kac_b2_via(&Weight::new(2, 2), KacRoute::ViaB3).is_err());
    }
}
