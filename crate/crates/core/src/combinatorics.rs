//! Partitions and the index sets attached to them: the maps `φ_c`, the sets
//! `J(ξ)` and `I(ξ)`, the `ξ♯`/`ξ♭` splits, the dimension identity, the
//! Chari-Venkatesh basis indices and the Weyl spanning monomials.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::Gen;
use crate::error::{Error, Result};
use crate::pbw::{cg, divided_power, CurrentGen, Element, Word};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are dropped; any other violation is an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    /// Sorts arbitrary parts into a partition, dropping zeros.
    pub fn from_multiset(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|ξ|`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn product(&self) -> u128 {
        self.parts.iter().map(|&p| p as u128).product()
    }

    /// `φ_c`: decrement the last part of the equal block that starts at `c`.
    pub fn phi(&self, c: usize) -> Result<Partition> {
        if c >= self.len() {
            return Err(Error::IndexOutOfRange { index: c, len: self.len() });
        }
        let mut end = c;
        while end + 1 < self.len() && self.parts[end + 1] == self.parts[c] {
            end += 1;
        }
        let mut parts = self.parts.clone();
        parts[end] -= 1;
        if parts[end] == 0 {
            parts.remove(end);
        }
        Ok(Partition { parts })
    }

    /// `c(ξ) = φ_{c_1} ∘ … ∘ φ_{c_ℓ}(ξ)`; the last index is applied first.
    pub fn apply(&self, c: &[usize]) -> Result<Partition> {
        c.iter().rev().try_fold(self.clone(), |acc, &i| acc.phi(i))
    }

    /// `ξ♯_t = (ξ_0, …, ξ_{t-1})`.
    pub fn sharp(&self, t: usize) -> Result<Partition> {
        self.check_split(t)?;
        Ok(Partition { parts: self.parts[..t].to_vec() })
    }

    /// `ξ♭_t = (ξ_t, …, ξ_d)`.
    pub fn flat(&self, t: usize) -> Result<Partition> {
        self.check_split(t)?;
        Ok(Partition { parts: self.parts[t..].to_vec() })
    }

    fn check_split(&self, t: usize) -> Result<()> {
        if t == 0 || t >= self.len() {
            return Err(Error::IndexOutOfRange { index: t, len: self.len() });
        }
        Ok(())
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1`, `(2,1)` or an empty string for the empty partition.
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::InvalidParameter(format!("bad partition part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `J(ξ)`: strictly increasing tuples in `{0, …, |ξ|-1}`, ordered by length
/// and then lexicographically.
pub fn j_set(xi: &Partition) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for l in 0..=xi.len() {
        rec(0, xi.len(), l, &mut Vec::new(), &mut out);
    }
    out
}

/// An element `(b; c)` of `I(ξ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IndexPair {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[usize]| {
            if v.is_empty() {
                "∅".to_string()
            } else {
                format!("({})", v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
            }
        };
        write!(f, "{};{}", show(&self.b), show(&self.c))
    }
}

/// A pair of `I(ξ)` together with `b(c(ξ))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IndexEntry {
    pub pair: IndexPair,
    pub result: Partition,
}

/// `I(ξ)` in lexicographic order on `(ℓ, c, k, b)`.
pub fn enumerate_i(xi: &Partition) -> Vec<IndexEntry> {
    let mut out = Vec::new();
    for c in j_set(xi) {
        let cx = xi.apply(&c).expect("indices of J(ξ) are in range");
        for b in j_set(&cx) {
            let result = cx.apply(&b).expect("indices of J(c(ξ)) are in range");
            out.push(IndexEntry { pair: IndexPair { b, c: c.clone() }, result });
        }
    }
    out
}

/// The right-hand side of the decomposition of `I(ξ)` along a split point
/// `t` with `ξ_{t-1} > ξ_t`: pairs `(b^u; c^z)`, with `b(c(ξ))` assembled
/// from the two halves.
pub fn decomposed_i(xi: &Partition, t: usize) -> Result<Vec<IndexEntry>> {
    let (sharp, flat) = (xi.sharp(t)?, xi.flat(t)?);
    if xi.parts()[t - 1] <= xi.parts()[t] {
        return Err(Error::InvalidParameter(format!("{xi} has no strict descent at {t}")));
    }
    let shifted = |a: &[usize], z: &[usize]| a.iter().copied().chain(z.iter().map(|i| i + t)).collect::<Vec<_>>();
    let mut out = Vec::new();
    for c in j_set(&sharp) {
        let cs = sharp.apply(&c)?;
        for z in j_set(&flat) {
            let zf = flat.apply(&z)?;
            for b in j_set(&cs) {
                let top = cs.apply(&b)?;
                for u in j_set(&zf) {
                    let bottom = zf.apply(&u)?;
                    let mut parts = top.parts().to_vec();
                    parts.extend_from_slice(bottom.parts());
                    out.push(IndexEntry {
                        pair: IndexPair { b: shifted(&b, &u), c: shifted(&c, &z) },
                        result: Partition::from_multiset(parts),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Multiset equality of `I(ξ)` and its decomposition at `t`.
pub fn dec_i_holds(xi: &Partition, t: usize) -> Result<bool> {
    let mut lhs = enumerate_i(xi);
    let mut rhs = decomposed_i(xi, t)?;
    lhs.sort();
    rhs.sort();
    Ok(lhs == rhs)
}

/// Split points `t` with `ξ_{t-1} > ξ_t`.
pub fn descents(xi: &Partition) -> Vec<usize> {
    (1..xi.len()).filter(|&t| xi.parts()[t - 1] > xi.parts()[t]).collect()
}

/// Both sides of the dimension identity
/// `Σ_{I(ξ)} Π (b(c(ξ))_j + 1) = Π 4 ξ_j`.
pub fn dim_identity(xi: &Partition) -> (u128, u128) {
    let lhs = enumerate_i(xi).iter().map(|e| e.result.parts().iter().map(|&p| p as u128 + 1).product::<u128>()).sum();
    let rhs = xi.parts().iter().map(|&p| 4 * p as u128).product();
    (lhs, rhs)
}

pub fn dim_identity_check(xi: &Partition) -> bool {
    let (l, r) = dim_identity(xi);
    l == r
}

/// `y2(a_1)…y2(a_j) x1(b_1)…x1(b_k) y3(c_1)…y3(c_ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeylMonomial {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: Vec<u32>,
}

impl WeylMonomial {
    pub fn word(&self) -> Word {
        let part = |g: Gen, ds: &[u32]| ds.iter().map(move |&d| cg(g, d)).collect::<Vec<CurrentGen>>();
        let mut w = part(Gen::Y2, &self.a);
        w.extend(part(Gen::X1, &self.b));
        w.extend(part(Gen::Y3, &self.c));
        w
    }

    /// Total `t`-degree.
    pub fn degree(&self) -> u32 {
        self.a.iter().chain(&self.b).chain(&self.c).sum()
    }
}

impl fmt::Display for WeylMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        if w.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = w.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

fn strict_tuples(len: usize, max: i64) -> Vec<Vec<u32>> {
    fn rec(start: i64, max: i64, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=max {
            cur.push(v as u32);
            rec(v + 1, max, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, max, len, &mut Vec::new(), &mut out);
    out
}

fn weak_tuples(len: usize, max: i64) -> Vec<Vec<u32>> {
    fn rec(start: i64, max: i64, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=max {
            cur.push(v as u32);
            rec(v, max, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, max, len, &mut Vec::new(), &mut out);
    out
}

/// Spanning monomials of the graded local Weyl module with `λ(h2) = λ2`:
/// `c_ℓ ≤ λ2-1`, `b_k ≤ λ2-ℓ-1`, `a_j ≤ λ2-ℓ-k-j`.
pub fn weyl_monomial_pool(lambda2: u32) -> Vec<WeylMonomial> {
    let n = lambda2 as i64;
    let mut out = Vec::new();
    for l in 0..=lambda2 as usize {
        for c in strict_tuples(l, n - 1) {
            for k in 0..=(lambda2 as usize - l) {
                for b in strict_tuples(k, n - l as i64 - 1) {
                    for j in 0..=(lambda2 as usize - l - k) {
                        for a in weak_tuples(j, n - (l + k + j) as i64) {
                            out.push(WeylMonomial { a, b: b.clone(), c: c.clone() });
                        }
                    }
                }
            }
        }
    }
    out
}

/// One Chari-Venkatesh basis element
/// `y2(0)^{(i_1)}…y2(e-1)^{(i_e)} x1(b_1)…x1(b_k) y3(c_1)…y3(c_ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CvBasisIndex {
    pub pair: IndexPair,
    pub eta: Partition,
    pub exponents: Vec<u32>,
}

impl CvBasisIndex {
    pub fn element(&self) -> Element {
        let mut factors: Vec<Element> = self
            .exponents
            .iter()
            .enumerate()
            .map(|(s, &i)| divided_power(cg(Gen::Y2, s as u32), i))
            .collect();
        factors.extend(self.pair.b.iter().map(|&b| Element::gen(cg(Gen::X1, b as u32))));
        factors.extend(self.pair.c.iter().map(|&c| Element::gen(cg(Gen::Y3, c as u32))));
        Element::product(factors)
    }
}

/// Whether `(i_1, …, i_e)` satisfies
/// `p i_{q-1} + (p+1) i_q + 2 Σ_{t>q} i_t ≤ Σ_{t ≥ q-p} η_t`
/// for `2 ≤ q ≤ e+1`, `1 ≤ p ≤ q-1`, with `η` indexed from 1 and `i_{e+1} = 0`.
pub fn cv_exponents_admissible(eta: &Partition, i: &[u32]) -> bool {
    let e = eta.len();
    let at = |t: usize| if t >= 1 && t <= i.len() { i[t - 1] as u64 } else { 0 };
    let tail_eta = |from: usize| eta.parts()[from - 1..].iter().map(|&p| p as u64).sum::<u64>();
    for q in 2..=e + 1 {
        let tail_i: u64 = (q + 1..=e).map(at).sum();
        for p in 1..q {
            let lhs = p as u64 * at(q - 1) + (p as u64 + 1) * at(q) + 2 * tail_i;
            if lhs > tail_eta(q - p) {
                return false;
            }
        }
    }
    true
}

/// Admissible exponent tuples for one partition `η = b(c(ξ))`.
pub fn cv_exponent_tuples(eta: &Partition) -> Vec<Vec<u32>> {
    let e = eta.len();
    let cap = eta.n();
    let mut out = Vec::new();
    let mut cur = vec![0u32; e];
    // Every coefficient is nonnegative, so a violated prefix (rest zero) can be pruned.
    fn rec(pos: usize, cap: u32, eta: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=cap {
            cur[pos] = v;
            if !cv_exponents_admissible(eta, cur) {
                break;
            }
            rec(pos + 1, cap, eta, cur, out);
        }
        cur[pos] = 0;
    }
    rec(0, cap, eta, &mut cur, &mut out);
    out
}

/// Index set of the Chari-Venkatesh basis attached to `ξ`.
pub fn cv_basis_index_set(xi: &Partition) -> Vec<CvBasisIndex> {
    let mut out = Vec::new();
    for entry in enumerate_i(xi) {
        for exponents in cv_exponent_tuples(&entry.result) {
            out.push(CvBasisIndex { pair: entry.pair.clone(), eta: entry.result.clone(), exponents });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_parsing_and_validation() {
        assert_eq!(p("2,1").parts(), &[2, 1]);
        assert_eq!(p("(3,3,1)").to_string(), "(3,3,1)");
        assert!(p("").is_empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap(), p("2,1"));
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(7).len(), 15);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn phi_cases() {
        assert_eq!(p("3,1").phi(0).unwrap(), p("2,1"));
        assert_eq!(p("2,2,1").phi(0).unwrap(), p("2,1,1"));
        assert_eq!(p("1").phi(0).unwrap(), Partition::empty());
        assert_eq!(p("2,2,2").phi(1).unwrap(), p("2,2,1"));
        assert_eq!(p("1,1").phi(0).unwrap(), p("1"));
        assert!(p("2,1").phi(2).is_err());
    }

    #[test]
    fn index_set_of_two() {
        let got: Vec<(String, String)> =
            enumerate_i(&p("2")).iter().map(|e| (e.pair.to_string(), e.result.to_string())).collect();
        let want = [("∅;∅", "(2)"), ("(0);∅", "(1)"), ("∅;(0)", "(1)"), ("(0);(0)", "()")];
        assert_eq!(got, want.map(|(a, b)| (a.to_string(), b.to_string())).to_vec());
        assert_eq!(enumerate_i(&Partition::empty()).len(), 1);
    }

    #[test]
    fn dimension_identity() {
        assert_eq!(dim_identity(&p("1,1")), (16, 16));
        assert_eq!(dim_identity(&p("2")), (8, 8));
        assert_eq!(dim_identity(&p("3,3,3")), (12u128.pow(3), 12u128.pow(3)));
        for n in 0..=8 {
            for xi in Partition::all(n) {
                assert!(dim_identity_check(&xi), "{xi}");
            }
        }
    }

    #[test]
    fn decomposition_of_index_sets() {
        for n in 0..=7 {
            for xi in Partition::all(n) {
                for t in descents(&xi) {
                    assert!(dec_i_holds(&xi, t).unwrap(), "{xi} at {t}");
                }
            }
        }
        assert!(decomposed_i(&p("2,2"), 1).is_err());
    }

    #[test]
    fn weyl_pool_counts() {
        assert_eq!(weyl_monomial_pool(0), vec![WeylMonomial { a: vec![], b: vec![], c: vec![] }]);
        let one: Vec<String> = weyl_monomial_pool(1).iter().map(|m| m.to_string()).collect();
        let mut sorted = one.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["1", "x1(0)", "y2(0)", "y3(0)"]);
        for n in 0..=6 {
            assert_eq!(weyl_monomial_pool(n).len(), 4usize.pow(n));
        }
    }

    #[test]
    fn cv_basis_counts() {
        assert_eq!(cv_basis_index_set(&p("1")).len(), 4);
        assert_eq!(cv_basis_index_set(&p("1,1")).len(), 16);
        assert_eq!(cv_basis_index_set(&p("2,1")).len(), 32);
        assert_eq!(cv_exponent_tuples(&p("3")).len(), 4);
        for n in 0..=5 {
            for xi in Partition::all(n) {
                let want = 4u128.pow(xi.len() as u32) * xi.product();
                assert_eq!(cv_basis_index_set(&xi).len() as u128, want, "{xi}");
            }
        }
    }

    #[test]
    fn cv_basis_element_shape() {
        let idx = CvBasisIndex { pair: IndexPair { b: vec![0], c: vec![1] }, eta: p("1"), exponents: vec![1] };
        let e = idx.element();
        assert_eq!(e.len(), 1);
        assert_eq!(e.terms().next().unwrap().0, &vec![cg(Gen::Y2, 0), cg(Gen::X1, 0), cg(Gen::Y3, 1)]);
    }

    proptest! {
        #[test]
        fn phi_yields_partition_of_n_minus_one(parts in proptest::collection::vec(1u32..6, 0..6), c in 0usize..6) {
            let xi = Partition::from_multiset(parts);
            prop_assume!(c < xi.len());
            let out = xi.phi(c).unwrap();
            prop_assert_eq!(out.n() + 1, xi.n());
            prop_assert!(Partition::new(out.parts().to_vec()).is_ok());
        }
    }
}
