//! Normal ordering in the enveloping algebra of sl(1|2)[t].
//!
//! Elements are finite linear combinations of words in the current
//! generators `x(m) = x ⊗ t^m`. Rewriting swaps adjacent letters with
//! `g(a)h(b) = (-1)^{|g||h|} h(b)g(a) + [g,h](a+b)` until every word is
//! nondecreasing for the chosen order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{bracket, CartanElement, Gen, Parity, Root, Weight};
use crate::error::Error;
use crate::exactla::Q;

/// `gen ⊗ t^degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurrentGen {
    pub gen: Gen,
    pub degree: u32,
}

impl CurrentGen {
    pub fn new(gen: Gen, degree: u32) -> CurrentGen {
        CurrentGen { gen, degree }
    }

    pub fn parity(self) -> Parity {
        self.gen.parity()
    }

    pub fn weight(self) -> Weight {
        self.gen.weight()
    }
}

impl fmt::Display for CurrentGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.gen, self.degree)
    }
}

impl FromStr for CurrentGen {
    type Err = Error;

    /// Parses `x1(3)`; a bare `x1` means degree 0.
    fn from_str(s: &str) -> Result<CurrentGen, Error> {
        let s = s.trim();
        match s.split_once('(') {
            None => Ok(CurrentGen::new(s.parse()?, 0)),
            Some((g, rest)) => {
                let d = rest
                    .strip_suffix(')')
                    .and_then(|d| d.trim().parse().ok())
                    .ok_or_else(|| Error::InvalidParameter(format!("bad current generator `{s}`")))?;
                Ok(CurrentGen::new(g.parse()?, d))
            }
        }
    }
}

/// Shorthand for `CurrentGen::new`.
pub fn cg(gen: Gen, degree: u32) -> CurrentGen {
    CurrentGen::new(gen, degree)
}

/// `[g(a), h(b)] = [g,h](a+b)`.
pub fn current_bracket(a: CurrentGen, b: CurrentGen) -> Vec<(CurrentGen, Q)> {
    bracket(a.gen, b.gen).iter().map(|(g, c)| (cg(*g, a.degree + b.degree), c.clone())).collect()
}

pub type Word = Vec<CurrentGen>;

/// Linear combination of words with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Word, Q>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn one() -> Element {
        Element::word(Vec::new())
    }

    pub fn word(w: Word) -> Element {
        Element::term(w, Q::one())
    }

    pub fn term(w: Word, c: Q) -> Element {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn gen(g: CurrentGen) -> Element {
        Element::word(vec![g])
    }

    /// `h ⊗ t^degree` for a Cartan element `h`.
    pub fn cartan(h: &CartanElement, degree: u32) -> Element {
        let mut e = Element::zero();
        for (g, c) in h.terms() {
            e.add_term(vec![cg(g, degree)], c);
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry += &c;
        if entry.is_zero() {
            // Remove the cancelled word; re-lookup is fine, this path is rare.
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn product(factors: impl IntoIterator<Item = Element>) -> Element {
        factors.into_iter().fold(Element::one(), |acc, f| acc.mul(&f))
    }

    /// Parity of every term, if all terms agree.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|w| word_parity(w));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = if w.is_empty() { "1".to_string() } else { w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("·") };
                if c.is_one() {
                    word
                } else {
                    format!("({c})·{word}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

pub fn word_parity(w: &[CurrentGen]) -> Parity {
    w.iter().fold(Parity::Even, |p, g| p.add(g.parity()))
}

/// A total order on current generators, given by an injective sort key.
pub trait GeneratorOrder {
    fn key(&self, g: CurrentGen) -> (u32, u32, u32);
}

/// Position of each generator in the fixed index order `y1, y2, y3, x1, x2, x3, h1, h2`.
fn index_rank(g: Gen) -> u32 {
    match g {
        Gen::Y1 => 0,
        Gen::Y2 => 1,
        Gen::Y3 => 2,
        Gen::X1 => 3,
        Gen::X2 => 4,
        Gen::X3 => 5,
        Gen::H1 => 6,
        Gen::H2 => 7,
    }
}

/// Higher t-degree first, then the index order `y1, y2, y3, x1, x2, x3, h1, h2`.
#[derive(Clone, Copy, Debug, Default)]
pub struct StandardOrder;

impl GeneratorOrder for StandardOrder {
    fn key(&self, g: CurrentGen) -> (u32, u32, u32) {
        (u32::MAX - g.degree, index_rank(g.gen), 0)
    }
}

/// Orders by a caller-supplied rank per base generator, then by degree.
#[derive(Clone, Copy, Debug)]
pub struct RankOrder {
    pub ranks: [u32; 8],
}

impl RankOrder {
    /// Ranks in the sequence given; generators listed earlier sort first.
    pub fn from_sequence(seq: [Gen; 8]) -> RankOrder {
        let mut ranks = [0; 8];
        for (r, g) in seq.iter().enumerate() {
            ranks[g.index()] = r as u32;
        }
        RankOrder { ranks }
    }
}

impl GeneratorOrder for RankOrder {
    fn key(&self, g: CurrentGen) -> (u32, u32, u32) {
        (self.ranks[g.gen.index()], g.degree, 0)
    }
}

enum Step {
    Normal,
    Swap(usize),
    Square(usize),
}

fn first_violation(w: &[CurrentGen], order: &dyn GeneratorOrder) -> Step {
    for i in 0..w.len().saturating_sub(1) {
        let (a, b) = (order.key(w[i]), order.key(w[i + 1]));
        if a > b {
            return Step::Swap(i);
        }
        if w[i] == w[i + 1] && w[i].parity().is_odd() {
            return Step::Square(i);
        }
    }
    Step::Normal
}

fn splice(w: &[CurrentGen], i: usize, mid: &[CurrentGen]) -> Word {
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[..i]);
    out.extend_from_slice(mid);
    out.extend_from_slice(&w[i + 2..]);
    out
}

/// Rewrites every word to be nondecreasing for `order`, with no repeated odd letters.
pub fn normal_form(e: &Element, order: &dyn GeneratorOrder) -> Element {
    let mut done = Element::zero();
    let mut pending: HashMap<Word, Q> = e.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
    while !pending.is_empty() {
        let mut next: HashMap<Word, Q> = HashMap::new();
        let mut push = |w: Word, c: Q| {
            let entry = next.entry(w).or_default();
            *entry += &c;
        };
        for (w, c) in pending {
            if c.is_zero() {
                continue;
            }
            match first_violation(&w, order) {
                Step::Normal => done.add_term(w, c),
                Step::Swap(i) => {
                    let (a, b) = (w[i], w[i + 1]);
                    let sign = if a.parity().is_odd() && b.parity().is_odd() { -Q::one() } else { Q::one() };
                    push(splice(&w, i, &[b, a]), &c * &sign);
                    for (g, k) in current_bracket(a, b) {
                        push(splice(&w, i, &[g]), &c * &k);
                    }
                }
                Step::Square(i) => {
                    // For odd u: u·u = (1/2)[u, u].
                    let half = Q::new(1, 2);
                    for (g, k) in current_bracket(w[i], w[i]) {
                        push(splice(&w, i, &[g]), &(&c * &k) * &half);
                    }
                }
            }
        }
        pending = next;
    }
    done
}

/// Divided power `u^(p) = u^p / p!`.
pub fn divided_power(g: CurrentGen, p: u32) -> Element {
    Element::term(vec![g; p as usize], Q::factorial(p).recip())
}

/// Solutions `(b_k, …, b_s)` of `Σ b_i = r` and `Σ i·b_i = s` with `i` ranging over `k..=s`.
fn garland_exponents(r: u32, s: u32, k: u32) -> Vec<Vec<u32>> {
    fn rec(i: u32, s_max: u32, r_left: u32, s_left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i > s_max {
            if r_left == 0 && s_left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = s_left.checked_div(i).map_or(r_left, |q| r_left.min(q));
        for b in 0..=cap {
            cur.push(b);
            rec(i + 1, s_max, r_left - b, s_left - i * b, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > s && !(r == 0 && s == 0) {
        return out;
    }
    rec(k, s, r, s, &mut Vec::new(), &mut out);
    out
}

/// `Σ y2(k)^(b_k) ⋯ y2(s)^(b_s)` over `b_k + … + b_s = r`, `k·b_k + … + s·b_s = s`.
///
/// With `k = 0` this is the Garland element `𝐲₂(r, s)`; negative `r` gives 0.
pub fn y2rs_from(r: i64, s: u32, k: u32) -> Element {
    if r < 0 {
        return Element::zero();
    }
    let mut out = Element::zero();
    for bs in garland_exponents(r as u32, s, k) {
        let factors = bs.iter().enumerate().map(|(i, &b)| divided_power(cg(Gen::Y2, k + i as u32), b));
        out = out.add(&Element::product(factors));
    }
    out
}

/// The Garland element `𝐲₂(r, s)`.
pub fn y2rs_element(r: i64, s: u32) -> Element {
    y2rs_from(r, s, 0)
}

/// One instance of the commutation identities, with concrete degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CommIdentity {
    /// `x2(a) y3(c1)⋯y3(cℓ)`.
    X2Y3 { a: u32, c: Vec<u32> },
    /// `h(a) y3(c1)⋯y3(cℓ)`.
    HY3 { h: CartanElement, a: u32, c: Vec<u32> },
    /// `x2(a) x1(b1)⋯x1(bk)`.
    X2X1 { a: u32, b: Vec<u32> },
    /// `h(a) x1(b1)⋯x1(bk)`.
    HX1 { h: CartanElement, a: u32, b: Vec<u32> },
    /// `x3(b) y3(c1)⋯y3(cℓ)`.
    X3Y3 { b: u32, c: Vec<u32> },
    /// `y1(c) y2(a1)⋯y2(aj)`.
    Y1Y2 { c: u32, a: Vec<u32> },
    /// `x3(b) y2(a1)⋯y2(aj)`.
    X3Y2 { b: u32, a: Vec<u32> },
    /// `y1(c) 𝐲₂(r,s)`.
    Y1Garland { r: u32, s: u32, c: u32 },
    /// `x3(b) 𝐲₂(r,s)`.
    X3Garland { r: u32, s: u32, b: u32 },
}

impl CommIdentity {
    pub fn label(&self) -> &'static str {
        match self {
            CommIdentity::X2Y3 { .. } => "x2·y3^l",
            CommIdentity::HY3 { .. } => "h·y3^l",
            CommIdentity::X2X1 { .. } => "x2·x1^k",
            CommIdentity::HX1 { .. } => "h·x1^k",
            CommIdentity::X3Y3 { .. } => "x3·y3^l",
            CommIdentity::Y1Y2 { .. } => "y1·y2^j",
            CommIdentity::X3Y2 { .. } => "x3·y2^j",
            CommIdentity::Y1Garland { .. } => "y1·Y2(r,s)",
            CommIdentity::X3Garland { .. } => "x3·Y2(r,s)",
        }
    }
}

impl fmt::Display for CommIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommIdentity::X2Y3 { a, c } => write!(f, "{} a={a} c={c:?}", self.label()),
            CommIdentity::HY3 { h, a, c } => write!(f, "{} h=({},{}) a={a} c={c:?}", self.label(), h.c1, h.c2),
            CommIdentity::X2X1 { a, b } => write!(f, "{} a={a} b={b:?}", self.label()),
            CommIdentity::HX1 { h, a, b } => write!(f, "{} h=({},{}) a={a} b={b:?}", self.label(), h.c1, h.c2),
            CommIdentity::X3Y3 { b, c } => write!(f, "{} b={b} c={c:?}", self.label()),
            CommIdentity::Y1Y2 { c, a } => write!(f, "{} c={c} a={a:?}", self.label()),
            CommIdentity::X3Y2 { b, a } => write!(f, "{} b={b} a={a:?}", self.label()),
            CommIdentity::Y1Garland { r, s, c } => write!(f, "{} r={r} s={s} c={c}", self.label()),
            CommIdentity::X3Garland { r, s, b } => write!(f, "{} r={r} s={s} b={b}", self.label()),
        }
    }
}

fn letters(g: Gen, degrees: &[u32]) -> Element {
    Element::word(degrees.iter().map(|&d| cg(g, d)).collect())
}

/// `Σ_j sign(j) · Π_{i≠j} g(d_i) · last(d_j + shift)`, the product kept in index order.
fn replace_one(g: Gen, degrees: &[u32], last: Gen, shift: u32, sign: impl Fn(usize) -> Q) -> Element {
    let mut out = Element::zero();
    for j in 0..degrees.len() {
        let mut w: Word = degrees.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, &d)| cg(g, d)).collect();
        w.push(cg(last, degrees[j] + shift));
        out.add_term(w, sign(j + 1));
    }
    out
}

fn pm(e: usize) -> Q {
    if e.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Left and right sides of an identity instance, before normal ordering.
pub fn identity_sides(id: &CommIdentity) -> (Element, Element) {
    match id {
        CommIdentity::X2Y3 { a, c } => {
            let l = c.len();
            let lhs = Element::gen(cg(Gen::X2, *a)).mul(&letters(Gen::Y3, c));
            let rhs = replace_one(Gen::Y3, c, Gen::Y1, *a, |j| pm(l - j))
                .add(&letters(Gen::Y3, c).mul(&Element::gen(cg(Gen::X2, *a))));
            (lhs, rhs)
        }
        CommIdentity::HY3 { h, a, c } => {
            let l = c.len();
            let alpha = Root::ALPHA3.eval(h);
            let lhs = Element::cartan(h, *a).mul(&letters(Gen::Y3, c));
            let rhs = replace_one(Gen::Y3, c, Gen::Y3, *a, |j| &alpha * &pm(l - j + 1))
                .add(&letters(Gen::Y3, c).mul(&Element::cartan(h, *a)));
            (lhs, rhs)
        }
        CommIdentity::X2X1 { a, b } => {
            let k = b.len();
            let lhs = Element::gen(cg(Gen::X2, *a)).mul(&letters(Gen::X1, b));
            let rhs = replace_one(Gen::X1, b, Gen::X3, *a, |j| pm(k - j + 1))
                .add(&letters(Gen::X1, b).mul(&Element::gen(cg(Gen::X2, *a))));
            (lhs, rhs)
        }
        CommIdentity::HX1 { h, a, b } => {
            let k = b.len();
            let alpha = Root::ALPHA1.eval(h);
            let lhs = Element::cartan(h, *a).mul(&letters(Gen::X1, b));
            let rhs = replace_one(Gen::X1, b, Gen::X1, *a, |j| &alpha * &pm(k - j))
                .add(&letters(Gen::X1, b).mul(&Element::cartan(h, *a)));
            (lhs, rhs)
        }
        CommIdentity::X3Y3 { b, c } => {
            let l = c.len();
            let lhs = Element::gen(cg(Gen::X3, *b)).mul(&letters(Gen::Y3, c));
            let mut sum = Element::zero();
            for j in 0..l {
                let rest: Word = c.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, &d)| cg(Gen::Y3, d)).collect();
                let tail = Element::cartan(&CartanElement::h3(), c[j] + b);
                sum = sum.add(&Element::word(rest).mul(&tail).scale(&pm(j + 2)));
            }
            let rhs = sum.add(&letters(Gen::Y3, c).mul(&Element::gen(cg(Gen::X3, *b))).scale(&pm(l)));
            (lhs, rhs)
        }
        CommIdentity::Y1Y2 { c, a } => {
            let lhs = Element::gen(cg(Gen::Y1, *c)).mul(&letters(Gen::Y2, a));
            let rhs = replace_one(Gen::Y2, a, Gen::Y3, *c, |_| -Q::one())
                .add(&letters(Gen::Y2, a).mul(&Element::gen(cg(Gen::Y1, *c))));
            (lhs, rhs)
        }
        CommIdentity::X3Y2 { b, a } => {
            let lhs = Element::gen(cg(Gen::X3, *b)).mul(&letters(Gen::Y2, a));
            let rhs = replace_one(Gen::Y2, a, Gen::X1, *b, |_| Q::one())
                .add(&letters(Gen::Y2, a).mul(&Element::gen(cg(Gen::X3, *b))));
            (lhs, rhs)
        }
        CommIdentity::Y1Garland { r, s, c } => {
            let y = y2rs_element(*r as i64, *s);
            let lhs = Element::gen(cg(Gen::Y1, *c)).mul(&y);
            let mut rhs = y.mul(&Element::gen(cg(Gen::Y1, *c)));
            for q in 0..=*s {
                rhs = rhs.sub(&y2rs_element(*r as i64 - 1, s - q).mul(&Element::gen(cg(Gen::Y3, c + q))));
            }
            (lhs, rhs)
        }
        CommIdentity::X3Garland { r, s, b } => {
            let y = y2rs_element(*r as i64, *s);
            let lhs = Element::gen(cg(Gen::X3, *b)).mul(&y);
            let mut rhs = y.mul(&Element::gen(cg(Gen::X3, *b)));
            for q in 0..=*s {
                rhs = rhs.add(&y2rs_element(*r as i64 - 1, s - q).mul(&Element::gen(cg(Gen::X1, b + q))));
            }
            (lhs, rhs)
        }
    }
}

/// Outcome of comparing both sides of an identity after normal ordering.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub holds: bool,
    pub lhs: Element,
    pub rhs: Element,
}

pub fn verify_comm_identity(id: &CommIdentity) -> IdentityCheck {
    let (l, r) = identity_sides(id);
    let lhs = normal_form(&l, &StandardOrder);
    let rhs = normal_form(&r, &StandardOrder);
    IdentityCheck { holds: lhs == rhs, lhs, rhs }
}

/// Every instance with factor counts and degrees bounded as given.
pub fn identity_grid(max_factors: usize, max_degree: u32) -> Vec<CommIdentity> {
    let tuples = |strict: bool| -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        for _ in 0..max_factors {
            let mut next = Vec::new();
            for t in &frontier {
                let lo = match t.last() {
                    Some(&l) if strict => l + 1,
                    _ => 0,
                };
                for d in lo..=max_degree {
                    let mut u: Vec<u32> = t.clone();
                    u.push(d);
                    next.push(u);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    };
    let all = tuples(false);
    let hs = [CartanElement::h1(), CartanElement::h2(), CartanElement::h3()];
    let mut ids = Vec::new();
    for d in 0..=max_degree {
        for t in &all {
            ids.push(CommIdentity::X2Y3 { a: d, c: t.clone() });
            ids.push(CommIdentity::X2X1 { a: d, b: t.clone() });
            ids.push(CommIdentity::X3Y3 { b: d, c: t.clone() });
            ids.push(CommIdentity::Y1Y2 { c: d, a: t.clone() });
            ids.push(CommIdentity::X3Y2 { b: d, a: t.clone() });
            for h in &hs {
                ids.push(CommIdentity::HY3 { h: h.clone(), a: d, c: t.clone() });
                ids.push(CommIdentity::HX1 { h: h.clone(), a: d, b: t.clone() });
            }
        }
        for r in 0..=max_degree {
            for s in 0..=max_degree {
                ids.push(CommIdentity::Y1Garland { r, s, c: d });
                ids.push(CommIdentity::X3Garland { r, s, b: d });
            }
        }
    }
    ids
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nf(e: &Element) -> Element {
        normal_form(e, &StandardOrder)
    }

    fn w(gs: &[(Gen, u32)]) -> Element {
        Element::word(gs.iter().map(|&(g, d)| cg(g, d)).collect())
    }

    #[test]
    fn single_swap() {
        let got = nf(&w(&[(Gen::X2, 0), (Gen::Y2, 1)]));
        let want = w(&[(Gen::Y2, 1), (Gen::X2, 0)]).add(&w(&[(Gen::H2, 1)]));
        assert_eq!(got, want);
    }

    #[test]
    fn odd_square_vanishes() {
        assert!(nf(&w(&[(Gen::Y3, 0), (Gen::Y3, 0)])).is_zero());
        let e = w(&[(Gen::X1, 0), (Gen::X1, 0)]);
        assert!(nf(&e).is_zero());
    }

    #[test]
    fn commuting_cartans() {
        assert_eq!(nf(&w(&[(Gen::H1, 0), (Gen::H2, 3)])), w(&[(Gen::H2, 3), (Gen::H1, 0)]));
    }

    #[test]
    fn garland_elements() {
        assert_eq!(y2rs_element(1, 1), w(&[(Gen::Y2, 1)]));
        assert_eq!(y2rs_element(2, 1), w(&[(Gen::Y2, 0), (Gen::Y2, 1)]));
        assert_eq!(y2rs_element(1, 2), w(&[(Gen::Y2, 2)]));
        assert_eq!(y2rs_element(0, 0), Element::one());
        assert!(y2rs_element(0, 1).is_zero());
        assert!(y2rs_element(-1, 0).is_zero());
        // y2(2,2) = y2(1)^(2) + y2(0) y2(2)
        let want = w(&[(Gen::Y2, 1), (Gen::Y2, 1)]).scale(&Q::new(1, 2)).add(&w(&[(Gen::Y2, 0), (Gen::Y2, 2)]));
        assert_eq!(y2rs_element(2, 2), want);
    }

    #[test]
    fn identity_examples() {
        let id = CommIdentity::X2Y3 { a: 1, c: vec![0] };
        let (l, r) = identity_sides(&id);
        assert_eq!(l, w(&[(Gen::X2, 1), (Gen::Y3, 0)]));
        assert_eq!(r, w(&[(Gen::Y1, 1)]).add(&w(&[(Gen::Y3, 0), (Gen::X2, 1)])));
        assert!(verify_comm_identity(&id).holds);
        let trivial = CommIdentity::Y1Y2 { c: 2, a: vec![] };
        let (l, r) = identity_sides(&trivial);
        assert_eq!(l, r);
        let g = CommIdentity::Y1Garland { r: 1, s: 1, c: 0 };
        let (_, r) = identity_sides(&g);
        let want = w(&[(Gen::Y2, 1), (Gen::Y1, 0)]).sub(&w(&[(Gen::Y3, 1)]));
        assert_eq!(r, want);
        assert!(verify_comm_identity(&g).holds);
    }

    #[test]
    fn identity_grid_holds() {
        let failures: Vec<String> =
            identity_grid(3, 3).iter().filter(|id| !verify_comm_identity(id).holds).map(|id| id.to_string()).collect();
        assert!(failures.is_empty(), "{failures:?}");
    }

    #[test]
    fn wrong_sign_is_detected() {
        let (l, r) = identity_sides(&CommIdentity::X2X1 { a: 0, b: vec![0] });
        let bad = r.sub(&w(&[(Gen::X3, 0)])).sub(&w(&[(Gen::X3, 0)]));
        assert_ne!(nf(&l), nf(&bad));
    }

    #[test]
    fn parse_current_generators() {
        assert_eq!("y3(4)".parse::<CurrentGen>().unwrap(), cg(Gen::Y3, 4));
        assert_eq!("h1".parse::<CurrentGen>().unwrap(), cg(Gen::H1, 0));
        assert!("q(1)".parse::<CurrentGen>().is_err());
    }

    fn arb_letter() -> impl Strategy<Value = CurrentGen> {
        (proptest::sample::select(Gen::ALL.to_vec()), 0u32..3).prop_map(|(g, d)| cg(g, d))
    }

    fn arb_element() -> impl Strategy<Value = Element> {
        proptest::collection::vec((proptest::collection::vec(arb_letter(), 0..=4), -3i64..=3), 1..3).prop_map(|ts| {
            let mut e = Element::zero();
            for (word, c) in ts {
                e.add_term(word, Q::from_int(c));
            }
            e
        })
    }

    fn arb_homogeneous() -> impl Strategy<Value = Element> {
        proptest::collection::vec(arb_letter(), 0..=4).prop_map(Element::word)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn idempotent(e in arb_element()) {
            let once = nf(&e);
            prop_assert_eq!(nf(&once), once);
        }

        #[test]
        fn multiplicative(a in arb_element(), b in arb_element()) {
            prop_assert_eq!(nf(&a.mul(&b)), nf(&nf(&a).mul(&nf(&b))));
        }

        #[test]
        fn parity_preserved(e in arb_homogeneous()) {
            let p = e.parity().unwrap();
            let out = nf(&e);
            if !out.is_zero() {
                prop_assert_eq!(out.parity(), Some(p));
            }
        }

        #[test]
        fn words_are_sorted(e in arb_element()) {
            for (word, _) in nf(&e).terms() {
                for pair in word.windows(2) {
                    let (a, b) = (StandardOrder.key(pair[0]), StandardOrder.key(pair[1]));
                    prop_assert!(a < b || (a == b && pair[0].parity() == Parity::Even));
                }
            }
        }
    }
}
