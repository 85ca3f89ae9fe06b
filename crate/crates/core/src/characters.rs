//! Formal characters over weights `(λ(h1), λ(h2))` and closed-form evaluators.
//!
//! In `(h1, h2)` coordinates the weights of a gl(2) string `y2^i v` are
//! `(μ1 - i, μ2 - 2i)`, so the sl(2) direction is `X = e^{(1/2, 1)}`. The
//! quotient formulas below are written in that variable: the factor that
//! counts an sl(2) string of length `k` is `(X^k - X^{-k}) / (X - X^{-1})`,
//! with an `h1`-shift so that the top weight of the string sits at `h1 = 0`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{check_dominant, Weight};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactla::Q;
use crate::repcore::FiniteModule;

/// Finite integer combination of formal exponentials `e^w`.
///
/// Characters of modules have positive coefficients; intermediate values in
/// the quotient formulas may not.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, i64>,
}

impl FormalCharacter {
    pub fn zero() -> FormalCharacter {
        FormalCharacter::default()
    }

    pub fn one() -> FormalCharacter {
        FormalCharacter::monomial(Weight::zero())
    }

    pub fn monomial(w: Weight) -> FormalCharacter {
        FormalCharacter::term(w, 1)
    }

    pub fn term(w: Weight, c: i64) -> FormalCharacter {
        let mut out = FormalCharacter::zero();
        out.add_term(w, c);
        out
    }

    /// `e^{(a, b)}`.
    pub fn e(a: impl Into<Q>, b: impl Into<Q>) -> FormalCharacter {
        FormalCharacter::monomial(Weight::new(a, b))
    }

    pub fn from_weights<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> FormalCharacter {
        let mut out = FormalCharacter::zero();
        for w in ws {
            out.add_term(w.clone(), 1);
        }
        out
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients, i.e. the dimension for a module character.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn add(&self, o: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn sub(&self, o: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, o: &FormalCharacter) -> FormalCharacter {
        let mut out = FormalCharacter::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.add(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> FormalCharacter {
        (0..n).fold(FormalCharacter::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies by `e^w`.
    pub fn shifted(&self, w: &Weight) -> FormalCharacter {
        FormalCharacter { terms: self.terms.iter().map(|(a, c)| (a.add(w), *c)).collect() }
    }

    /// Exact quotient by `X - X^{-1}`, `X = e^{(1/2, 1)}`.
    ///
    /// Works one line `h1 - h2/2 = const` at a time by long division from the
    /// top `h2`-exponent; a nonzero remainder is an error.
    pub fn div_sl2(&self) -> Result<FormalCharacter> {
        let half = Q::new(1, 2);
        let mut lines: BTreeMap<Q, BTreeMap<Q, i64>> = BTreeMap::new();
        for (w, c) in &self.terms {
            let key = &w.h1 - &(&w.h2 * &half);
            lines.entry(key).or_default().insert(w.h2.clone(), *c);
        }
        let two = Q::from_int(2);
        let one = Q::one();
        let mut out = FormalCharacter::zero();
        for (key, mut line) in lines {
            let lowest = line.keys().next().cloned().expect("lines are nonempty");
            while let Some((top, a)) = line.iter().next_back().map(|(k, a)| (k.clone(), *a)) {
                let below = &top - &two;
                if below < lowest {
                    return Err(Error::InexactDivision);
                }
                // a X^top = a X^(top-1) (X - X^-1) + a X^(top-2)
                let qexp = &top - &one;
                out.add_term(Weight::new(&key + &(&qexp * &half), qexp), a);
                line.remove(&top);
                let e = line.entry(below.clone()).or_insert(0);
                *e += a;
                if *e == 0 {
                    line.remove(&below);
                }
            }
        }
        Ok(out)
    }

    /// Sorted list of `{h1, h2, mult}` records.
    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<CharRecord> =
            self.terms.iter().map(|(w, c)| CharRecord { h1: w.h1.clone(), h2: w.h2.clone(), mult: *c, deg: None }).collect();
        serde_json::to_value(records).expect("characters serialize")
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(w, c)| if *c == 1 { format!("e^({}, {})", w.h1, w.h2) } else { format!("{c}·e^({}, {})", w.h1, w.h2) })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize)]
struct CharRecord {
    h1: Q,
    h2: Q,
    mult: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    deg: Option<u32>,
}

/// Multiset of `(weight, t-degree)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedCharacter {
    terms: BTreeMap<(Weight, u32), u64>,
}

impl GradedCharacter {
    pub fn add_term(&mut self, w: Weight, degree: u32, c: u64) {
        if c > 0 {
            *self.terms.entry((w, degree)).or_insert(0) += c;
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, u32, u64)> {
        self.terms.iter().map(|((w, d), c)| (w, *d, *c))
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Dimension of each graded piece.
    pub fn graded_dims(&self) -> Vec<u64> {
        let top = self.terms.keys().map(|(_, d)| *d).max();
        let mut dims = vec![0; top.map_or(0, |t| t as usize + 1)];
        for ((_, d), c) in &self.terms {
            dims[*d as usize] += c;
        }
        dims
    }

    pub fn forget_degree(&self) -> FormalCharacter {
        let mut out = FormalCharacter::zero();
        for ((w, _), c) in &self.terms {
            out.add_term(w.clone(), *c as i64);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<CharRecord> = self
            .terms
            .iter()
            .map(|((w, d), c)| CharRecord { h1: w.h1.clone(), h2: w.h2.clone(), mult: *c as i64, deg: Some(*d) })
            .collect();
        serde_json::to_value(records).expect("characters serialize")
    }
}

/// Multiset of basis weights.
pub fn char_of(m: &FiniteModule) -> FormalCharacter {
    FormalCharacter::from_weights(m.weights())
}

/// `ch Λ(g_{-1}) = e^{(0,0)} + e^{(0,1)} + e^{(-1,-1)} + e^{(-1,0)}`.
pub fn exterior_character() -> FormalCharacter {
    FormalCharacter::e(0, 0).add(&FormalCharacter::e(0, 1)).add(&FormalCharacter::e(-1, -1)).add(&FormalCharacter::e(-1, 0))
}

/// `X^k - X^{-k}` shifted by `e^{(-(k-1)/2, 0)}`, so that dividing by `X - X^{-1}`
/// gives `Σ_{j<k} e^{(-j, k-1-2j)}`, the character of `L_gl(0, k-1)`.
pub fn sl2_numerator(k: u32) -> FormalCharacter {
    let k = Q::from_int(k as i64);
    let half = Q::new(1, 2);
    FormalCharacter::e(half.clone(), k.clone()).sub(&FormalCharacter::e(&half - &k, -&k))
}

/// `ch L_gl(μ) = e^{(μ1, 0)} · e^{(0, μ2)}·Σ ...`, computed as a quotient.
pub fn gl2_character(mu: &Weight) -> Result<FormalCharacter> {
    let n = mu.h2_int().filter(|n| *n >= 0 && mu.h2.is_integer()).ok_or_else(|| Error::NotDominant(mu.clone()))?;
    sl2_numerator(n as u32 + 1).div_sl2().map(|c| c.shifted(&Weight::new(mu.h1.clone(), 0)))
}

fn divide_n(mut c: FormalCharacter, n: u32) -> Result<FormalCharacter> {
    for _ in 0..n {
        c = c.div_sl2()?;
    }
    Ok(c)
}

/// `e^{(λ1, 0)} (ch Λ(g_{-1}))^{λ2}`.
pub fn weyl_char_formula(lambda1: &Q, lambda2: u32) -> FormalCharacter {
    exterior_character().pow(lambda2).shifted(&Weight::new(lambda1.clone(), 0))
}

/// `e^{(λ1,0)} (ch Λ(g_{-1}))^{d+1} Π_i (X^{ξ_i} - X^{-ξ_i}) / (X - X^{-1})^{d+1}`.
pub fn cv_char_formula(lambda1: &Q, xi: &Partition) -> Result<FormalCharacter> {
    let n = xi.len() as u32;
    let mut num = exterior_character().pow(n);
    for &p in xi.parts() {
        num = num.mul(&sl2_numerator(p));
    }
    Ok(divide_n(num, n)?.shifted(&Weight::new(lambda1.clone(), 0)))
}

/// Character of `D(ℓ, λ)` with `λ2 = (q-1)ℓ + m`, `0 < m ≤ ℓ`.
pub fn demazure_char_formula(ell: u32, lambda: &Weight) -> Result<FormalCharacter> {
    let l2 = check_dominant(lambda)?;
    if ell == 0 {
        return Err(Error::InvalidParameter("ℓ must be positive".into()));
    }
    if l2 == 0 {
        return Ok(FormalCharacter::one());
    }
    let q = l2.div_ceil(ell);
    let m = l2 - (q - 1) * ell;
    let num = exterior_character().pow(q).mul(&sl2_numerator(ell).pow(q - 1)).mul(&sl2_numerator(m));
    Ok(divide_n(num, q)?.shifted(&Weight::new(lambda.h1.clone(), 0)))
}

/// Character of `W(λ, N)` with `λ2 = qN + m`, `0 ≤ m < N`, for `N < λ2`.
pub fn truncated_char_formula(n: u32, lambda: &Weight) -> Result<FormalCharacter> {
    let l2 = check_dominant(lambda)?;
    if n == 0 || n >= l2 {
        return Err(Error::InvalidParameter(format!("the truncated formula needs 0 < N < λ2, got N = {n}, λ2 = {l2}")));
    }
    let (q, m) = (l2 / n, l2 % n);
    let num = exterior_character().pow(n).mul(&sl2_numerator(q).pow(n - m)).mul(&sl2_numerator(q + 1).pow(m));
    Ok(divide_n(num, n)?.shifted(&Weight::new(lambda.h1.clone(), 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::{irreducible_gl2, kac_b2, kac_b2_via, tensor, evaluation, KacRoute};
    use proptest::prelude::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn module_characters() {
        assert_eq!(char_of(&crate::repcore::trivial_module().module), FormalCharacter::one());
        let mu = Weight::new(Q::new(5, 2), 3);
        let l = irreducible_gl2(&mu.h1, &mu.h2).unwrap();
        assert_eq!(char_of(&l.module), gl2_character(&mu).unwrap());
        let mut expect = FormalCharacter::zero();
        for i in 0..=3 {
            expect.add_term(Weight::new(&mu.h1 - &Q::from_int(i), 3 - 2 * i), 1);
        }
        assert_eq!(gl2_character(&mu).unwrap(), expect);
        let l1 = Q::from_int(4);
        let k = kac_b2(&Weight::new(l1.clone(), 1)).unwrap();
        assert_eq!(char_of(&k.module), exterior_character().shifted(&Weight::new(l1, 0)));
    }

    #[test]
    fn weyl_examples() {
        let l1 = Q::from_int(2);
        assert_eq!(weyl_char_formula(&l1, 0), FormalCharacter::e(2, 0));
        assert_eq!(weyl_char_formula(&l1, 1).mass(), 4);
        let w2 = weyl_char_formula(&l1, 2);
        assert_eq!(w2.mass(), 16);
        assert_eq!(w2.coefficient(&Weight::new(1, 0)), 4);
    }

    #[test]
    fn cv_examples() {
        let l1 = Q::from_int(3);
        assert_eq!(cv_char_formula(&l1, &part(&[1, 1, 1])).unwrap(), weyl_char_formula(&l1, 3));
        assert_eq!(cv_char_formula(&l1, &part(&[2, 1])).unwrap().mass(), 32);
        for l2 in 1..=4 {
            let lambda = Weight::new(l1.clone(), l2);
            assert_eq!(cv_char_formula(&l1, &part(&[l2 as u32])).unwrap(), char_of(&kac_b2(&lambda).unwrap().module));
        }
    }

    #[test]
    fn demazure_and_truncated_examples() {
        let lambda = Weight::new(1, 5);
        assert_eq!(demazure_char_formula(2, &lambda).unwrap().mass(), 256);
        assert_eq!(demazure_char_formula(1, &lambda).unwrap(), weyl_char_formula(&Q::one(), 5));
        assert_eq!(truncated_char_formula(2, &lambda).unwrap().mass(), 96);
        assert!(truncated_char_formula(5, &lambda).is_err());
        assert!(truncated_char_formula(0, &lambda).is_err());
    }

    #[test]
    fn inexact_division_is_reported() {
        assert!(matches!(FormalCharacter::e(0, 0).div_sl2(), Err(Error::InexactDivision)));
        assert!(exterior_character().div_sl2().is_err());
    }

    #[test]
    fn kac_routes_have_equal_characters() {
        for lambda in [Weight::new(3, 2), Weight::new(Q::new(7, 3), 3), Weight::new(-2, 4)] {
            let a = kac_b2_via(&lambda, KacRoute::ViaB1).unwrap();
            let b = kac_b2_via(&lambda, KacRoute::ViaB3).unwrap();
            assert_eq!(char_of(&a.module), char_of(&b.module));
        }
    }

    #[test]
    fn tensor_is_multiplicative() {
        let a = evaluation(&kac_b2(&Weight::new(1, 2)).unwrap(), &Q::zero());
        let b = evaluation(&kac_b2(&Weight::new(0, 1)).unwrap(), &Q::one());
        let t = tensor(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(char_of(&t.module), char_of(&a.module).mul(&char_of(&b.module)));
    }

    proptest! {
        #[test]
        fn division_inverts_multiplication(coeffs in proptest::collection::vec((-3i64..=3, -2i64..=2, -4i64..=4), 1..6)) {
            let mut c = FormalCharacter::zero();
            for (k, a, b) in coeffs {
                c.add_term(Weight::new(a, b), k);
            }
            let denom = FormalCharacter::e(Q::new(1, 2), 1).sub(&FormalCharacter::e(Q::new(-1, 2), -1));
            prop_assert_eq!(c.mul(&denom).div_sl2().unwrap(), c);
        }
    }
}
