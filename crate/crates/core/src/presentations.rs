//! Relation suites for presented modules, checked on graded realizations.
//!
//! Families indexed by all `r ≥ 0` or all `s` are cut off at the top degree
//! `G` of the realization: an operator of degree above `G` is zero on the
//! associated graded module.

use std::fmt;

use serde::Serialize;

use crate::algebra::{check_dominant, CartanElement, Gen, Weight};
use crate::combinatorics::{weyl_monomial_pool, CvBasisIndex, Partition};
use crate::error::{Error, Result};
use crate::exactla::{EchelonBasis, SparseVec, Q};
use crate::fusion::{filtrate_fused, fuse, FusionSpec, GradedRealization};
use crate::pbw::{cg, divided_power, y2rs_element, y2rs_from, CurrentGen, Element};
use crate::repcore::{shift, tensor, CyclicModule};

/// A pair `(λ1, ξ)` indexing a Chari-Venkatesh module; `λ2 = Σ ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CvDatum {
    pub lambda1: Q,
    pub xi: Partition,
}

impl CvDatum {
    pub fn new(lambda1: Q, xi: Partition) -> CvDatum {
        CvDatum { lambda1, xi }
    }

    pub fn weight(&self) -> Weight {
        Weight::new(self.lambda1.clone(), self.xi.n() as i64)
    }

    /// Triples `(k, r, s)` with `ξ_{k+1} ≤ r < ξ_k`, `r > 0` and
    /// `k r + ξ_{k+1} + … + ξ_d < s ≤ s_max`.
    pub fn relation_grid(&self, s_max: u32) -> Vec<(usize, u32, u32)> {
        let parts = self.xi.parts();
        let at = |i: usize| parts.get(i).copied().unwrap_or(0);
        let mut out = Vec::new();
        for k in 0..parts.len() {
            let tail: u32 = parts[k + 1..].iter().sum();
            for r in at(k + 1).max(1)..at(k) {
                for s in k as u32 * r + tail + 1..=s_max {
                    out.push((k, r, s));
                }
            }
        }
        out
    }
}

impl fmt::Display for CvDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.lambda1, self.xi)
    }
}

/// Evidence attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Vector(Vec<(usize, Q)>),
    Mismatch { expected: String, found: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationEntry {
    pub relation: String,
    pub params: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Outcome of one relation suite on one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub suite: String,
    pub case: String,
    pub entries: Vec<RelationEntry>,
}

impl RelationReport {
    pub fn new(suite: &str, case: impl Into<String>) -> RelationReport {
        RelationReport { suite: suite.to_string(), case: case.into(), entries: Vec::new() }
    }

    /// Records a relation that holds when `v` is zero.
    pub fn zero(&mut self, relation: &str, params: impl Into<String>, v: &SparseVec) {
        let pass = v.is_zero();
        let witness = (!pass).then(|| Witness::Vector(v.entries().to_vec()));
        self.entries.push(RelationEntry { relation: relation.to_string(), params: params.into(), pass, witness });
    }

    /// Records an equality of two displayable values.
    pub fn equal<T: PartialEq + fmt::Display>(&mut self, relation: &str, params: impl Into<String>, expected: T, found: T) {
        let pass = expected == found;
        let witness = (!pass).then(|| Witness::Mismatch { expected: expected.to_string(), found: found.to_string() });
        self.entries.push(RelationEntry { relation: relation.to_string(), params: params.into(), pass, witness });
    }

    pub fn holds(&mut self, relation: &str, params: impl Into<String>, pass: bool) {
        self.equal(relation, params, "true", if pass { "true" } else { "false" });
    }

    pub fn extend(&mut self, other: RelationReport) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn pass_count(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

fn power(x: CurrentGen, p: u32) -> Element {
    Element::word(vec![x; p as usize])
}

fn eigen_defect(g: &GradedRealization, h: Gen, value: &Q, v: &SparseVec) -> SparseVec {
    g.apply_gr(cg(h, 0), v).sub(&v.scaled(value))
}

/// `b(2)` raising operators `y1, x2, x3` and `h(a) = 0` for `a > 0`, at a vector of `Gr`.
fn highest_weight_relations(g: &GradedRealization, v: &SparseVec, lambda: &Weight, report: &mut RelationReport) {
    let top = g.top_degree();
    for a in 0..=top {
        for x in [Gen::Y1, Gen::X2, Gen::X3] {
            report.zero("n+[t] v = 0", format!("{x}({a})"), &g.apply_gr(cg(x, a), v));
        }
    }
    report.zero("h1(0) v = λ1 v", format!("λ1={}", lambda.h1), &eigen_defect(g, Gen::H1, &lambda.h1, v));
    report.zero("h2(0) v = λ2 v", format!("λ2={}", lambda.h2), &eigen_defect(g, Gen::H2, &lambda.h2, v));
    for a in 1..=top {
        for h in [Gen::H1, Gen::H2] {
            report.zero("h(a) v = 0", format!("{h}({a})"), &g.apply_gr(cg(h, a), v));
        }
    }
}

/// Defining relations of the graded local Weyl module at a vector of `Gr`.
pub fn weyl_relations_at(g: &GradedRealization, v: &SparseVec, lambda: &Weight, report: &mut RelationReport) -> Result<()> {
    let l2 = check_dominant(lambda)?;
    report.holds("v ≠ 0", "", !v.is_zero());
    highest_weight_relations(g, v, lambda, report);
    report.zero("y2(0)^(λ2+1) v = 0", format!("λ2={l2}"), &g.apply_gr_element(&power(cg(Gen::Y2, 0), l2 + 1), v));
    Ok(())
}

pub fn check_weyl_relations(g: &GradedRealization, lambda: &Weight) -> Result<RelationReport> {
    let mut report = RelationReport::new("weyl", format!("λ={lambda}"));
    weyl_relations_at(g, &g.gr_cyclic(), lambda, &mut report)?;
    Ok(report)
}

/// `x2(1)^(s) y2(0)^(r+s)`.
fn garland_lhs(r: u32, s: u32) -> Element {
    divided_power(cg(Gen::X2, 1), s).mul(&divided_power(cg(Gen::Y2, 0), r + s))
}

/// Form (a) of the extra relations at an arbitrary vector of `Gr`:
/// `x2(1)^s y2(0)^{r+s} w = 0` on the reduced grid.
pub fn cv_form_a_at(g: &GradedRealization, w: &SparseVec, datum: &CvDatum, report: &mut RelationReport) {
    let s_max = g.top_degree().max(datum.xi.n());
    for (k, r, s) in datum.relation_grid(s_max) {
        let e = power(cg(Gen::X2, 1), s).mul(&power(cg(Gen::Y2, 0), r + s));
        report.zero("x2(1)^s y2^(r+s) w = 0", format!("k={k} r={r} s={s}"), &g.apply_gr_element(&e, w));
    }
}

/// Extra relations of `V(ξ)` in the forms `𝐲₂(r,s) v = 0` and
/// `Σ y2(k)^(b_k)⋯y2(s)^(b_s) v = 0` on `Gr`, and `x2(1)^(s) y2^(r+s) v ∈ F(s-1)`
/// on the filtered module when `r + s ≤ λ2`.
pub fn check_cv_relations(g: &GradedRealization, datum: &CvDatum) -> Result<RelationReport> {
    let mut report = RelationReport::new("cv", format!("ξ={datum}"));
    let v = g.gr_cyclic();
    let l2 = datum.xi.n();
    let s_max = g.top_degree().max(l2);
    for (k, r, s) in datum.relation_grid(s_max) {
        let params = format!("k={k} r={r} s={s}");
        report.zero("y2(r,s) v = 0", params.clone(), &g.apply_gr_element(&y2rs_element(r as i64, s), &v));
        report.zero("Σ y2(k)^(b_k)…y2(s)^(b_s) v = 0", params.clone(), &g.apply_gr_element(&y2rs_from(r as i64, s, k as u32), &v));
        if r + s <= l2 {
            let lifted = g.base().module.apply_element(&garland_lhs(r, s), &g.base().cyclic);
            report.holds("x2(1)^(s) y2^(r+s) v ∈ F(s-1)", params, g.in_filtration(&lifted, s as i64 - 1));
        }
    }
    Ok(report)
}

/// `y2(r)^{max(0, λ2 - ℓr) + 1} v = 0` for `0 ≤ r ≤ G`, with `n+[t] v = 0` and `h(r) v = δ_{r,0} λ(h) v`.
pub fn check_demazure(g: &GradedRealization, ell: u32, lambda: &Weight) -> Result<RelationReport> {
    let l2 = check_dominant(lambda)?;
    let mut report = RelationReport::new("demazure", format!("ℓ={ell} λ={lambda}"));
    let v = g.gr_cyclic();
    highest_weight_relations(g, &v, lambda, &mut report);
    for r in 0..=g.top_degree() {
        let p = l2.saturating_sub(ell * r) + 1;
        report.zero("y2(r)^(max(0,λ2-ℓr)+1) v = 0", format!("r={r} p={p}"), &g.apply_gr_element(&power(cg(Gen::Y2, r), p), &v));
    }
    Ok(report)
}

/// Lowest-weight presentation of `D(ℓ, λ)` at `v₋ = y2(0)^{λ2} v`.
pub fn check_demazure_lowest_weight(g: &GradedRealization, ell: u32, lambda: &Weight) -> Result<RelationReport> {
    let l2 = check_dominant(lambda)?;
    let mut report = RelationReport::new("demazure-lowest-weight", format!("ℓ={ell} λ={lambda}"));
    let v = g.gr_cyclic();
    let vm = g.apply_gr_element(&power(cg(Gen::Y2, 0), l2), &v);
    report.holds("v₋ ≠ 0", "", !vm.is_zero());
    if vm.is_zero() {
        return Ok(report);
    }
    let mu = Weight::new(&lambda.h1 - &lambda.h2, -(l2 as i64));
    let top = g.top_degree();
    for r in 0..=top {
        for x in [Gen::X1, Gen::Y2, Gen::Y3] {
            report.zero("n-[t] v₋ = 0", format!("{x}({r})"), &g.apply_gr(cg(x, r), &vm));
        }
        let p = l2.saturating_sub(ell * r) + 1;
        report.zero("x2(r)^(max(0,λ2-ℓr)+1) v₋ = 0", format!("r={r} p={p}"), &g.apply_gr_element(&power(cg(Gen::X2, r), p), &vm));
    }
    report.zero("h1(0) v₋ = μ1 v₋", format!("μ={mu}"), &eigen_defect(g, Gen::H1, &mu.h1, &vm));
    report.zero("h2(0) v₋ = μ2 v₋", format!("μ={mu}"), &eigen_defect(g, Gen::H2, &mu.h2, &vm));
    for r in 1..=top {
        for h in [Gen::H1, Gen::H2] {
            report.zero("h(r) v₋ = 0", format!("{h}({r})"), &g.apply_gr(cg(h, r), &vm));
        }
    }
    report.equal("v₋ generates", "", g.dim(), g.gr_closure_dim(&vm));
    let back = g.apply_gr_element(&power(cg(Gen::X2, 0), l2), &vm);
    report.holds("x2(0)^λ2 v₋ ≠ 0", "", !back.is_zero());
    for x in [Gen::Y1, Gen::X2, Gen::X3] {
        report.zero("x2(0)^λ2 v₋ is singular", format!("{x}(0)"), &g.apply_gr(cg(x, 0), &back));
    }
    let weights: Vec<&Weight> = back.support().map(|k| g.gr_weight(k)).collect();
    report.holds("x2(0)^λ2 v₋ has weight λ", "", weights.iter().all(|w| *w == lambda));
    Ok(report)
}

/// `g ⊗ t^N C[t]` acts as zero on all of `Gr`, and the cyclic vector satisfies the Weyl relations.
pub fn check_truncated(g: &GradedRealization, n: u32, lambda: &Weight) -> Result<RelationReport> {
    let mut report = RelationReport::new("truncated", format!("N={n} λ={lambda}"));
    weyl_relations_at(g, &g.gr_cyclic(), lambda, &mut report)?;
    for m in n..=g.top_degree() {
        for x in Gen::ALL {
            let nonzero = (0..g.dim()).map(|k| g.apply_gr(cg(x, m), &SparseVec::unit(k))).find(|w| !w.is_zero());
            report.zero("x(m) = 0 on Gr", format!("{x}({m})"), &nonzero.unwrap_or_default());
        }
    }
    Ok(report)
}

/// `x2(1)^(s) y2(0)^(r+s) v = (-1)^s 𝐲₂(r,s) v` on `Gr` for `r, s > 0`, `r + s ≤ λ2`.
pub fn check_garland_action(g: &GradedRealization, lambda2: u32) -> RelationReport {
    let mut report = RelationReport::new("garland", format!("λ2={lambda2}"));
    let v = g.gr_cyclic();
    for r in 1..lambda2 {
        for s in 1..=lambda2 - r {
            let lhs = g.apply_gr_element(&garland_lhs(r, s), &v);
            let sign = if s % 2 == 0 { Q::one() } else { -Q::one() };
            let rhs = g.apply_gr_element(&y2rs_element(r as i64, s), &v).scaled(&sign);
            report.zero("x2(1)^(s) y2^(r+s) v - (-1)^s y2(r,s) v = 0", format!("r={r} s={s}"), &lhs.sub(&rhs));
        }
    }
    report
}

/// Rank of `{e·v}` on the underlying filtered module.
pub fn check_basis_independence(m: &CyclicModule, pool: &[Element]) -> (usize, bool) {
    let mut e = EchelonBasis::new(m.dim());
    for u in pool {
        e.insert(&m.module.apply_element(u, &m.cyclic));
        if e.dim() == m.dim() {
            break;
        }
    }
    (e.dim(), e.dim() == m.dim())
}

/// Spanning monomials of `W(λ)` as enveloping-algebra elements.
pub fn weyl_pool_elements(lambda2: u32) -> Vec<Element> {
    weyl_monomial_pool(lambda2).iter().map(|m| Element::word(m.word())).collect()
}

pub fn cv_basis_elements(indices: &[CvBasisIndex]) -> Vec<Element> {
    indices.iter().map(|i| i.element()).collect()
}

/// Which generator carries `W(λ)` into a larger Weyl module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EmbeddingKind {
    /// `w_λ ↦ y3(λ2) w` in `W(λ1+1, λ2+1)`.
    Y3,
    /// `w_λ ↦ x1(λ2) w` in `W(λ1, λ2+1)`.
    X1,
}

impl fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmbeddingKind::Y3 => "y3",
            EmbeddingKind::X1 => "x1",
        })
    }
}

pub fn check_embedding(lambda: &Weight, kind: EmbeddingKind) -> Result<RelationReport> {
    let l2 = check_dominant(lambda)?;
    let (target, gen) = match kind {
        EmbeddingKind::Y3 => (Weight::new(&lambda.h1 + &Q::one(), l2 as i64 + 1), Gen::Y3),
        EmbeddingKind::X1 => (Weight::new(lambda.h1.clone(), l2 as i64 + 1), Gen::X1),
    };
    let g = fuse(&FusionSpec::weyl(&target)?)?;
    let vp = g.apply_gr(cg(gen, l2), &g.gr_cyclic());
    let mut report = RelationReport::new("embedding", format!("{kind}-type λ={lambda} in W({target})"));
    weyl_relations_at(&g, &vp, lambda, &mut report)?;
    if !vp.is_zero() {
        report.equal("dim U(g[t]) v′ = 4^λ2", "", 4usize.pow(l2), g.gr_closure_dim(&vp));
    }
    Ok(report)
}

/// `W(ψ)` for `ψ = Σ μ_i ⊗ ev_{z_i}`, as a tensor product of shifted graded Weyl modules.
pub fn nongraded_weyl(points: &[(Weight, Q)]) -> Result<CyclicModule> {
    if points.is_empty() {
        return Err(Error::InvalidParameter("ψ needs at least one point".into()));
    }
    for (i, (_, z)) in points.iter().enumerate() {
        if points[..i].iter().any(|(_, y)| y == z) {
            return Err(Error::RepeatedParameter);
        }
    }
    let factors = points
        .iter()
        .map(|(mu, z)| Ok(shift(&fuse(&FusionSpec::weyl(mu)?)?.as_module(), &-z)))
        .collect::<Result<Vec<_>>>()?;
    tensor(&factors)
}

/// `Gr W(ψ)` against the graded Weyl module `W(Σ μ_i)`.
pub fn check_gr_of_nongraded(points: &[(Weight, Q)]) -> Result<RelationReport> {
    let lambda = points.iter().fold(Weight::zero(), |acc, (mu, _)| acc.add(mu));
    let l2 = check_dominant(&lambda)?;
    let case: Vec<String> = points.iter().map(|(mu, z)| format!("{mu}@{z}")).collect();
    let mut report = RelationReport::new("gr-nongraded", case.join(" "));
    let w = nongraded_weyl(points)?;
    report.equal("dim W(ψ) = 4^ψ(h2)", "", 4usize.pow(l2), w.dim());
    let h = CartanElement::h1();
    let expect = points.iter().fold(Q::zero(), |acc, (mu, z)| &acc + &(&mu.eval(&h) * z));
    let got = w.module.apply(cg(Gen::H1, 1), &w.cyclic);
    report.zero("h1(1) w_ψ = ψ(h1 ⊗ t) w_ψ", "", &got.sub(&w.cyclic.scaled(&expect)));
    let g = filtrate_fused(&w, points.len())?;
    weyl_relations_at(&g, &g.gr_cyclic(), &lambda, &mut report)?;
    let graded = fuse(&FusionSpec::weyl(&lambda)?)?;
    report.holds("graded character of Gr W(ψ) = graded character of W(λ)", "", g.graded_character() == graded.graded_character());
    Ok(report)
}

/// Which generator the reduction lemma moves the cyclic vector by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    Y3,
    X1,
}

/// The reduction lemma at `c`: if `u(c) v` satisfies the boundary relations
/// `x2(1)^s y2^{r+s} u(c) v = 0` for `s = k r + η_{k+1} + … + η_e`, `k < c`,
/// then `u(c) v` satisfies the extra relations of `(λ1 - 1, φ_c(η))` (or
/// `(λ1, φ_c(η))` for `x1`). Returns `None` when the hypothesis fails.
pub fn reduction_step(g: &GradedRealization, datum: &CvDatum, c: usize, kind: ReductionKind) -> Result<Option<RelationReport>> {
    let (gen, lambda1) = match kind {
        ReductionKind::Y3 => (Gen::Y3, &datum.lambda1 - &Q::one()),
        ReductionKind::X1 => (Gen::X1, datum.lambda1.clone()),
    };
    let w = g.apply_gr(cg(gen, c as u32), &g.gr_cyclic());
    let parts = datum.xi.parts();
    let at = |i: usize| parts.get(i).copied().unwrap_or(0);
    for k in 0..c {
        let tail: u32 = parts[k + 1..].iter().sum();
        for r in at(k + 1).max(1)..at(k) {
            let s = k as u32 * r + tail;
            let e = power(cg(Gen::X2, 1), s).mul(&power(cg(Gen::Y2, 0), r + s));
            if !g.apply_gr_element(&e, &w).is_zero() {
                return Ok(None);
            }
        }
    }
    let target = CvDatum::new(lambda1, datum.xi.phi(c)?);
    let mut report = RelationReport::new("reduction", format!("{gen}({c}) on {datum} → {target}"));
    cv_form_a_at(g, &w, &target, &mut report);
    Ok(Some(report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{filtrate, FusionFactor};
    use crate::repcore::trivial_module;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cv(l1: i64, xi: &str) -> (CvDatum, GradedRealization) {
        let d = CvDatum::new(q(l1), part(xi));
        let g = fuse(&FusionSpec::for_partition(&d.lambda1, &d.xi, None, None).unwrap()).unwrap();
        (d, g)
    }

    #[test]
    fn weyl_relations() {
        for l2 in 1..=3 {
            let lambda = Weight::new(2, l2);
            let g = fuse(&FusionSpec::weyl(&lambda).unwrap()).unwrap();
            assert!(check_weyl_relations(&g, &lambda).unwrap().passed());
        }
        let t = filtrate(&trivial_module()).unwrap();
        assert!(check_weyl_relations(&t, &Weight::zero()).unwrap().passed());
        let k = fuse(&FusionSpec::new(vec![FusionFactor { kappa: q(3), size: 2, z: q(0) }]).unwrap()).unwrap();
        assert!(check_weyl_relations(&k, &Weight::new(3, 2)).unwrap().passed());
        assert_eq!(k.dim(), 8);
        let wrong = check_weyl_relations(&k, &Weight::new(3, 1)).unwrap();
        assert!(!wrong.passed());
        assert!(wrong.failures().all(|f| f.witness.is_some()));
    }

    #[test]
    fn cv_relations_and_forms_agree() {
        for (l1, xi) in [(1, "2"), (0, "1,1,1"), (2, "2,1"), (1, "3,1"), (0, "2,2")] {
            let (d, g) = cv(l1, xi);
            let report = check_cv_relations(&g, &d).unwrap();
            assert!(report.passed(), "{xi}: {:?}", report.failures().next());
            let b: Vec<bool> = report.entries.iter().filter(|e| e.relation.starts_with("y2(r,s)")).map(|e| e.pass).collect();
            let c: Vec<bool> = report.entries.iter().filter(|e| e.relation.starts_with('Σ')).map(|e| e.pass).collect();
            assert_eq!(b, c);
        }
        // The Weyl module does not satisfy the relations of a coarser partition.
        let (_, g) = cv(0, "1,1");
        assert!(!check_cv_relations(&g, &CvDatum::new(q(0), part("2"))).unwrap().passed());
    }

    #[test]
    fn garland_examples() {
        for l2 in 2..=3 {
            let g = fuse(&FusionSpec::weyl(&Weight::new(1, l2)).unwrap()).unwrap();
            assert!(check_garland_action(&g, l2 as u32).passed());
        }
        let g = fuse(&FusionSpec::weyl(&Weight::new(1, 2)).unwrap()).unwrap();
        let v = g.gr_cyclic();
        let lhs = g.apply_gr_element(&garland_lhs(1, 1), &v);
        assert_eq!(lhs, g.apply_gr(cg(Gen::Y2, 1), &v).scaled(&q(-1)));
        assert!(!lhs.is_zero());
    }

    #[test]
    fn demazure_suites() {
        let lambda = Weight::new(1, 3);
        let g = fuse(&FusionSpec::demazure(2, &lambda).unwrap()).unwrap();
        assert_eq!(g.dim(), 4usize.pow(2) * 2);
        assert!(check_demazure(&g, 2, &lambda).unwrap().passed());
        assert!(check_demazure_lowest_weight(&g, 2, &lambda).unwrap().passed());
        let w = fuse(&FusionSpec::weyl(&lambda).unwrap()).unwrap();
        assert!(!check_demazure(&w, 2, &lambda).unwrap().passed());
        let t = filtrate(&trivial_module()).unwrap();
        assert!(check_demazure_lowest_weight(&t, 1, &Weight::zero()).unwrap().passed());
    }

    #[test]
    fn truncated_suite() {
        let lambda = Weight::new(0, 3);
        let g = fuse(&FusionSpec::truncated(2, &lambda).unwrap()).unwrap();
        assert_eq!(g.dim(), 16 * 2);
        assert!(check_truncated(&g, 2, &lambda).unwrap().passed());
        let w = fuse(&FusionSpec::weyl(&lambda).unwrap()).unwrap();
        assert!(!check_truncated(&w, 2, &lambda).unwrap().passed());
        assert!(check_truncated(&w, 3, &lambda).unwrap().passed());
    }

    #[test]
    fn spanning_sets() {
        let g = fuse(&FusionSpec::weyl(&Weight::new(1, 2)).unwrap()).unwrap();
        assert_eq!(check_basis_independence(g.base(), &weyl_pool_elements(2)), (16, true));
        let (_, g) = cv(0, "2,1");
        let idx = crate::combinatorics::cv_basis_index_set(&part("2,1"));
        assert_eq!(check_basis_independence(g.base(), &cv_basis_elements(&idx)), (32, true));
    }

    #[test]
    fn embeddings() {
        for kind in [EmbeddingKind::Y3, EmbeddingKind::X1] {
            for (a, b) in [(0, 0), (1, 1), (2, 2)] {
                let r = check_embedding(&Weight::new(a, b), kind).unwrap();
                assert!(r.passed(), "{kind} {a},{b}: {:?}", r.failures().next());
            }
        }
    }

    #[test]
    fn nongraded_weyl_modules() {
        let pts = vec![(Weight::new(1, 1), q(0)), (Weight::new(0, 1), q(1))];
        let r = check_gr_of_nongraded(&pts).unwrap();
        assert!(r.passed(), "{:?}", r.failures().next());
        assert!(nongraded_weyl(&[(Weight::new(1, 1), q(2)), (Weight::new(1, 1), q(2))]).is_err());
    }

    #[test]
    fn reduction_lemma() {
        let (d, g) = cv(2, "2,1");
        let mut applied = 0;
        for c in 0..d.xi.len() {
            for kind in [ReductionKind::Y3, ReductionKind::X1] {
                if let Some(r) = reduction_step(&g, &d, c, kind).unwrap() {
                    applied += 1;
                    assert!(r.passed(), "{:?}", r.failures().next());
                }
            }
        }
        assert!(applied > 0);
    }

    #[test]
    fn cv_grid() {
        let d = CvDatum::new(q(0), part("2,1"));
        let grid = d.relation_grid(4);
        assert!(grid.contains(&(0, 1, 2)));
        assert!(!grid.contains(&(0, 1, 1)));
        assert!(CvDatum::new(q(0), part("1,1,1")).relation_grid(5).iter().all(|&(_, _, s)| s >= 3));
    }
}
