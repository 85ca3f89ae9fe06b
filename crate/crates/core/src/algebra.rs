//! The Lie superalgebra sl(1|2) realized inside 3x3 supermatrices.
//!
//! Rows and columns are graded `(0 | 1 2)`: index 0 is even, indices 1 and 2
//! are odd. All structure constants are computed from the matrices, never
//! typed in by hand.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactla::{RationalMatrix, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Basis element of sl(1|2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    X1,
    X2,
    X3,
    Y1,
    Y2,
    Y3,
    H1,
    H2,
}

impl Gen {
    pub const ALL: [Gen; 8] = [Gen::X1, Gen::X2, Gen::X3, Gen::Y1, Gen::Y2, Gen::Y3, Gen::H1, Gen::H2];
    /// Root vectors, i.e. everything except the Cartan elements.
    pub const ROOT_VECTORS: [Gen; 6] = [Gen::X1, Gen::X2, Gen::X3, Gen::Y1, Gen::Y2, Gen::Y3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::X1 => "x1",
            Gen::X2 => "x2",
            Gen::X3 => "x3",
            Gen::Y1 => "y1",
            Gen::Y2 => "y2",
            Gen::Y3 => "y3",
            Gen::H1 => "h1",
            Gen::H2 => "h2",
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Gen::X1 | Gen::X3 | Gen::Y1 | Gen::Y3 => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Position `(row, col)` of the matrix unit, or `None` for Cartan elements.
    fn unit(self) -> Option<(usize, usize)> {
        match self {
            Gen::X1 => Some((0, 1)),
            Gen::X2 => Some((1, 2)),
            Gen::X3 => Some((0, 2)),
            Gen::Y1 => Some((1, 0)),
            Gen::Y2 => Some((2, 1)),
            Gen::Y3 => Some((2, 0)),
            Gen::H1 | Gen::H2 => None,
        }
    }

    pub fn matrix(self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(3, 3);
        match self {
            Gen::H1 => {
                m.set(0, 0, Q::one());
                m.set(1, 1, Q::one());
            }
            Gen::H2 => {
                m.set(1, 1, Q::one());
                m.set(2, 2, -Q::one());
            }
            g => {
                let (i, j) = g.unit().unwrap();
                m.set(i, j, Q::one());
            }
        }
        m
    }

    /// Weight under `(h1, h2)`: zero for Cartan elements, the root otherwise.
    pub fn weight(self) -> Weight {
        let diag = |h: Gen, i: usize| h.matrix().get(i, i).clone();
        match self.unit() {
            None => Weight::zero(),
            Some((i, j)) => Weight::new(diag(Gen::H1, i) - diag(Gen::H1, j), diag(Gen::H2, i) - diag(Gen::H2, j)),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Gen, Error> {
        Gen::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown generator `{s}`")))
    }
}

fn parity_of_index(i: usize) -> Parity {
    if i == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Supercommutator `AB - (-1)^{|A||B|} BA` of homogeneous supermatrices.
pub fn supercommutator(a: &RationalMatrix, pa: Parity, b: &RationalMatrix, pb: Parity) -> RationalMatrix {
    let sign = if pa.is_odd() && pb.is_odd() { Q::one() } else { -Q::one() };
    a.mul(b).add(&b.mul(a).scale(&sign))
}

/// Supertrace `m_00 - m_11 - m_22`.
pub fn supertrace(m: &RationalMatrix) -> Q {
    (0..3).map(|i| if parity_of_index(i).is_odd() { -m.get(i, i) } else { m.get(i, i).clone() }).sum()
}

/// Coordinates of a supertraceless matrix in the basis `Gen::ALL`.
pub fn decompose(m: &RationalMatrix) -> Result<Vec<(Gen, Q)>, Error> {
    if !supertrace(m).is_zero() {
        return Err(Error::InvalidParameter("matrix is not supertraceless".into()));
    }
    let mut out = Vec::new();
    for g in Gen::ROOT_VECTORS {
        let (i, j) = g.unit().unwrap();
        let c = m.get(i, j).clone();
        if !c.is_zero() {
            out.push((g, c));
        }
    }
    // diag(d0, d1, d2) = d0*h1 + (d1 - d0)*h2 when d0 = d1 + d2.
    let c1 = m.get(0, 0).clone();
    let c2 = m.get(1, 1) - m.get(0, 0);
    if !c1.is_zero() {
        out.push((Gen::H1, c1));
    }
    if !c2.is_zero() {
        out.push((Gen::H2, c2));
    }
    Ok(out)
}

fn bracket_table() -> &'static Vec<Vec<Vec<(Gen, Q)>>> {
    static TABLE: OnceLock<Vec<Vec<Vec<(Gen, Q)>>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        Gen::ALL
            .iter()
            .map(|&a| {
                Gen::ALL
                    .iter()
                    .map(|&b| {
                        let m = supercommutator(&a.matrix(), a.parity(), &b.matrix(), b.parity());
                        decompose(&m).expect("bracket leaves sl(1|2)")
                    })
                    .collect()
            })
            .collect()
    })
}

/// `[a, b]` expanded in the basis.
pub fn bracket(a: Gen, b: Gen) -> &'static [(Gen, Q)] {
    &bracket_table()[a.index()][b.index()]
}

/// Element `c1*h1 + c2*h2` of the Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanElement {
    pub c1: Q,
    pub c2: Q,
}

impl CartanElement {
    pub fn h1() -> CartanElement {
        CartanElement { c1: Q::one(), c2: Q::zero() }
    }

    pub fn h2() -> CartanElement {
        CartanElement { c1: Q::zero(), c2: Q::one() }
    }

    /// `h3 = E11 + E33 = h1 - h2`.
    pub fn h3() -> CartanElement {
        CartanElement { c1: Q::one(), c2: -Q::one() }
    }

    pub fn terms(&self) -> Vec<(Gen, Q)> {
        [(Gen::H1, self.c1.clone()), (Gen::H2, self.c2.clone())].into_iter().filter(|t| !t.1.is_zero()).collect()
    }

    pub fn matrix(&self) -> RationalMatrix {
        Gen::H1.matrix().scale(&self.c1).add(&Gen::H2.matrix().scale(&self.c2))
    }
}

/// A weight, recorded by its values on `h1` and `h2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub h1: Q,
    pub h2: Q,
}

impl Weight {
    pub fn new(h1: impl Into<Q>, h2: impl Into<Q>) -> Weight {
        Weight { h1: h1.into(), h2: h2.into() }
    }

    pub fn zero() -> Weight {
        Weight::new(Q::zero(), Q::zero())
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight::new(&self.h1 + &o.h1, &self.h2 + &o.h2)
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight::new(&self.h1 - &o.h1, &self.h2 - &o.h2)
    }

    pub fn neg(&self) -> Weight {
        Weight::new(-&self.h1, -&self.h2)
    }

    pub fn eval(&self, h: &CartanElement) -> Q {
        &(&self.h1 * &h.c1) + &(&self.h2 * &h.c2)
    }

    pub fn is_zero(&self) -> bool {
        self.h1.is_zero() && self.h2.is_zero()
    }

    /// Whether the weight lies in `{λ : λ(h2) ∈ Z>0} ∪ {0}`.
    pub fn is_dominant(&self) -> bool {
        self.is_zero() || (self.h2.is_integer() && !self.h2.is_negative() && !self.h2.is_zero())
    }

    /// `λ(h2)` as an integer, when it is one.
    pub fn h2_int(&self) -> Option<i64> {
        self.h2.to_i64()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.h1, self.h2)
    }
}

/// Rejects weights outside the dominant set.
pub fn check_dominant(lambda: &Weight) -> Result<u32, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(lambda.h2_int().unwrap_or(0) as u32)
}

/// Typicality of `λ` with respect to the Borel `b(2)`.
pub fn is_typical(lambda: &Weight) -> Result<bool, Error> {
    check_dominant(lambda)?;
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("typicality is defined for nonzero weights".into()));
    }
    Ok(!lambda.h1.is_zero() && lambda.h1 != lambda.h2)
}

/// A root `a*α1 + b*α2` (so `α3 = α1 + α2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub a: i32,
    pub b: i32,
}

impl Root {
    pub const ALPHA1: Root = Root { a: 1, b: 0 };
    pub const ALPHA2: Root = Root { a: 0, b: 1 };
    pub const ALPHA3: Root = Root { a: 1, b: 1 };

    pub fn all() -> [Root; 6] {
        [Root::ALPHA1, Root::ALPHA2, Root::ALPHA3, -Root::ALPHA1, -Root::ALPHA2, -Root::ALPHA3]
    }

    pub fn parity(self) -> Parity {
        if self.a.rem_euclid(2) == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn weight(self) -> Weight {
        let a1 = Gen::X1.weight();
        let a2 = Gen::X2.weight();
        Weight::new(
            &(&a1.h1 * &Q::from_int(self.a as i64)) + &(&a2.h1 * &Q::from_int(self.b as i64)),
            &(&a1.h2 * &Q::from_int(self.a as i64)) + &(&a2.h2 * &Q::from_int(self.b as i64)),
        )
    }

    /// Root vector spanning the root space.
    pub fn root_vector(self) -> Gen {
        match (self.a, self.b) {
            (1, 0) => Gen::X1,
            (0, 1) => Gen::X2,
            (1, 1) => Gen::X3,
            (-1, 0) => Gen::Y1,
            (0, -1) => Gen::Y2,
            (-1, -1) => Gen::Y3,
            _ => panic!("{self:?} is not a root"),
        }
    }

    /// Coroot `h_α = [e_α, e_{-α}]`.
    pub fn coroot(self) -> CartanElement {
        let terms = bracket(self.root_vector(), (-self).root_vector());
        let mut h = CartanElement { c1: Q::zero(), c2: Q::zero() };
        for (g, c) in terms {
            match g {
                Gen::H1 => h.c1 = c.clone(),
                Gen::H2 => h.c2 = c.clone(),
                _ => unreachable!("bracket of opposite root vectors is Cartan"),
            }
        }
        h
    }

    pub fn eval(self, h: &CartanElement) -> Q {
        self.weight().eval(h)
    }

    pub fn is_isotropic(self) -> bool {
        self.parity().is_odd() && self.eval(&self.coroot()).is_zero()
    }
}

impl std::ops::Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root { a: -self.a, b: -self.b }
    }
}

impl std::ops::Add for Root {
    type Output = Root;
    fn add(self, o: Root) -> Root {
        Root { a: self.a + o.a, b: self.b + o.b }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.a < 0 || self.b < 0 { "-" } else { "" };
        let idx = match (self.a.abs(), self.b.abs()) {
            (1, 0) => 1,
            (0, 1) => 2,
            (1, 1) => 3,
            _ => return write!(f, "{}a1+{}a2", self.a, self.b),
        };
        write!(f, "{sign}a{idx}")
    }
}

/// The three Borel subalgebras containing the even Borel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Borel {
    B1,
    B2,
    B3,
}

impl Borel {
    pub fn simple_roots(self) -> [Root; 2] {
        match self {
            Borel::B1 => [Root::ALPHA1, Root::ALPHA2],
            Borel::B2 => [-Root::ALPHA1, Root::ALPHA3],
            Borel::B3 => [Root::ALPHA2, -Root::ALPHA3],
        }
    }

    /// Roots that are nonnegative integer combinations of the simple roots.
    pub fn positive_roots(self) -> Vec<Root> {
        let [s, t] = self.simple_roots();
        Root::all()
            .into_iter()
            .filter(|r| {
                // Solve r = p*s + q*t over the (α1, α2) coordinates.
                let det = s.a * t.b - s.b * t.a;
                let p = (r.a * t.b - r.b * t.a) / det;
                let q = (s.a * r.b - s.b * r.a) / det;
                p >= 0 && q >= 0
            })
            .collect()
    }

    /// Raising operators (root vectors of positive roots).
    pub fn raising(self) -> Vec<Gen> {
        self.positive_roots().into_iter().map(Root::root_vector).collect()
    }
}

/// Odd reflection of a simple system at an isotropic simple root.
pub fn odd_reflection(simple: &[Root], alpha: Root) -> Result<Vec<Root>, Error> {
    if !simple.contains(&alpha) {
        return Err(Error::InvalidParameter(format!("{alpha} is not in the simple system")));
    }
    if !alpha.is_isotropic() {
        return Err(Error::InvalidParameter(format!("{alpha} is not an isotropic odd root")));
    }
    Ok(simple
        .iter()
        .map(|&beta| {
            if beta == alpha {
                -alpha
            } else if alpha.eval(&beta.coroot()).is_zero() && beta.eval(&alpha.coroot()).is_zero() {
                beta
            } else {
                beta + alpha
            }
        })
        .collect())
}

#[derive(Serialize)]
struct GeneratorRecord {
    name: &'static str,
    parity: Parity,
    matrix: Vec<Vec<Q>>,
}

#[derive(Serialize)]
struct BracketRecord {
    left: &'static str,
    right: &'static str,
    result: Vec<(String, Q)>,
}

#[derive(Serialize)]
struct StructureTable {
    generators: Vec<GeneratorRecord>,
    brackets: Vec<BracketRecord>,
}

/// `[a, Σ c_g g]` in coordinates indexed by `Gen::index`.
fn bracket_with(a: Gen, v: &[Q; 8]) -> [Q; 8] {
    let mut out: [Q; 8] = std::array::from_fn(|_| Q::zero());
    for g in Gen::ALL {
        let c = &v[g.index()];
        if c.is_zero() {
            continue;
        }
        for (h, d) in bracket(a, g) {
            out[h.index()] += &(c * d);
        }
    }
    out
}

fn coords(terms: &[(Gen, Q)]) -> [Q; 8] {
    let mut out: [Q; 8] = std::array::from_fn(|_| Q::zero());
    for (g, c) in terms {
        out[g.index()] += c;
    }
    out
}

/// `(-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]` from the bracket table.
pub fn jacobi_defect(a: Gen, b: Gen, c: Gen) -> [Q; 8] {
    let sign = |x: Gen, y: Gen| if x.parity().is_odd() && y.parity().is_odd() { -Q::one() } else { Q::one() };
    let terms = [
        (sign(a, c), bracket_with(a, &coords(bracket(b, c)))),
        (sign(b, a), bracket_with(b, &coords(bracket(c, a)))),
        (sign(c, b), bracket_with(c, &coords(bracket(a, b)))),
    ];
    std::array::from_fn(|i| terms.iter().map(|(s, v)| s * &v[i]).sum())
}

pub fn jacobi_holds(a: Gen, b: Gen, c: Gen) -> bool {
    jacobi_defect(a, b, c).iter().all(Q::is_zero)
}

/// Whether the stored bracket equals the supercommutator of the matrices.
pub fn bracket_matches_matrices(a: Gen, b: Gen) -> bool {
    let m = supercommutator(&a.matrix(), a.parity(), &b.matrix(), b.parity());
    let table = bracket(a, b).iter().fold(RationalMatrix::zeros(3, 3), |acc, (g, c)| acc.add(&g.matrix().scale(c)));
    m == table
}

/// Deterministic JSON dump of the basis and all brackets.
pub fn structure_table_json() -> String {
    let generators = Gen::ALL
        .iter()
        .map(|g| {
            let m = g.matrix();
            GeneratorRecord { name: g.name(), parity: g.parity(), matrix: (0..3).map(|i| m.row(i).to_vec()).collect() }
        })
        .collect();
    let mut brackets = Vec::new();
    for a in Gen::ALL {
        for b in Gen::ALL {
            brackets.push(BracketRecord {
                left: a.name(),
                right: b.name(),
                result: bracket(a, b).iter().map(|(g, c)| (g.name().to_string(), c.clone())).collect(),
            });
        }
    }
    serde_json::to_string_pretty(&StructureTable { generators, brackets }).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn single(g: Gen, c: i64) -> Vec<(Gen, Q)> {
        vec![(g, q(c))]
    }

    fn combo(terms: &[(Gen, Q)]) -> RationalMatrix {
        terms.iter().fold(RationalMatrix::zeros(3, 3), |acc, (g, c)| acc.add(&g.matrix().scale(c)))
    }

    #[test]
    fn known_brackets() {
        assert_eq!(bracket(Gen::X1, Gen::Y1), single(Gen::H1, 1));
        assert_eq!(bracket(Gen::Y1, Gen::X1), single(Gen::H1, 1));
        assert_eq!(bracket(Gen::X2, Gen::Y2), single(Gen::H2, 1));
        assert_eq!(bracket(Gen::X3, Gen::Y3), vec![(Gen::H1, q(1)), (Gen::H2, q(-1))]);
        assert_eq!(bracket(Gen::X2, Gen::Y3), single(Gen::Y1, 1));
        assert_eq!(bracket(Gen::X2, Gen::X1), single(Gen::X3, -1));
        assert_eq!(bracket(Gen::Y1, Gen::Y2), single(Gen::Y3, -1));
        assert_eq!(bracket(Gen::X3, Gen::Y2), single(Gen::X1, 1));
        assert_eq!(bracket(Gen::Y3, Gen::X1), single(Gen::Y2, 1));
        for g in [Gen::X1, Gen::X3, Gen::Y1, Gen::Y3] {
            assert!(bracket(g, g).is_empty(), "{g} squares to zero");
        }
    }

    #[test]
    fn derived_cartan_elements() {
        let z = Gen::H1.matrix().scale(&q(2)).add(&Gen::H2.matrix().scale(&q(-1)));
        let expected = RationalMatrix::from_rows(vec![
            vec![q(2), q(0), q(0)],
            vec![q(0), q(1), q(0)],
            vec![q(0), q(0), q(1)],
        ]);
        assert_eq!(z, expected);
        // z spans the centre of the even part.
        for g in Gen::ALL {
            let c = supercommutator(&z, Parity::Even, &g.matrix(), g.parity());
            assert_eq!(c.is_zero(), g.parity() == Parity::Even, "{g}");
        }
        assert_eq!(decompose(&CartanElement::h3().matrix()).unwrap(), vec![(Gen::H1, q(1)), (Gen::H2, q(-1))]);
    }

    #[test]
    fn root_weights() {
        assert_eq!(Root::ALPHA1.weight(), Weight::new(0, -1));
        assert_eq!(Root::ALPHA2.weight(), Weight::new(1, 2));
        assert_eq!(Root::ALPHA3.weight(), Weight::new(1, 1));
        for g in Gen::ROOT_VECTORS {
            // [h, g] = weight(h) g
            for (h, val) in [(Gen::H1, g.weight().h1), (Gen::H2, g.weight().h2)] {
                let lhs = supercommutator(&h.matrix(), Parity::Even, &g.matrix(), g.parity());
                assert_eq!(lhs, g.matrix().scale(&val));
            }
        }
        assert!(Root::ALPHA1.is_isotropic() && Root::ALPHA3.is_isotropic());
        assert!(!Root::ALPHA2.is_isotropic());
    }

    #[test]
    fn odd_reflections_chain() {
        let p1 = Borel::B1.simple_roots().to_vec();
        let p2 = odd_reflection(&p1, Root::ALPHA1).unwrap();
        assert_eq!(p2, Borel::B2.simple_roots().to_vec());
        let p3 = odd_reflection(&p2, Root::ALPHA3).unwrap();
        assert_eq!(p3, Borel::B3.simple_roots().to_vec());
        assert!(odd_reflection(&p1, Root::ALPHA2).is_err());
        assert!(odd_reflection(&p1, Root::ALPHA3).is_err());
    }

    #[test]
    fn borel_two_positive_part() {
        let mut raising = Borel::B2.raising();
        raising.sort();
        assert_eq!(raising, vec![Gen::X2, Gen::X3, Gen::Y1]);
    }

    #[test]
    fn typicality() {
        assert!(!is_typical(&Weight::new(0, 1)).unwrap());
        assert!(!is_typical(&Weight::new(2, 2)).unwrap());
        assert!(is_typical(&Weight::new(Q::new(1, 2), 1)).unwrap());
        assert!(is_typical(&Weight::new(3, 1)).unwrap());
        assert!(is_typical(&Weight::new(1, Q::new(1, 2))).is_err());
        assert!(is_typical(&Weight::new(1, 0)).is_err());
        assert!(is_typical(&Weight::new(1, -1)).is_err());
    }

    #[test]
    fn table_identities_exhaustive() {
        for a in Gen::ALL {
            for b in Gen::ALL {
                assert!(bracket_matches_matrices(a, b));
                for c in Gen::ALL {
                    assert!(jacobi_holds(a, b, c), "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn structure_table_is_deterministic() {
        let a = structure_table_json();
        assert_eq!(a, structure_table_json());
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["brackets"].as_array().unwrap().len(), 64);
    }

    fn arb_gen() -> impl Strategy<Value = Gen> {
        proptest::sample::select(Gen::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn super_jacobi(a in arb_gen(), b in arb_gen(), c in arb_gen()) {
            // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
            let br = |x: &RationalMatrix, px: Parity, y: &RationalMatrix, py: Parity| supercommutator(x, px, y, py);
            let (ma, mb, mc) = (a.matrix(), b.matrix(), c.matrix());
            let (pa, pb, pc) = (a.parity(), b.parity(), c.parity());
            let lhs = br(&ma, pa, &br(&mb, pb, &mc, pc), pb.add(pc));
            let sign = if pa.is_odd() && pb.is_odd() { -Q::one() } else { Q::one() };
            let rhs = br(&br(&ma, pa, &mb, pb), pa.add(pb), &mc, pc)
                .add(&br(&mb, pb, &br(&ma, pa, &mc, pc), pa.add(pc)).scale(&sign));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn table_matches_matrices(a in arb_gen(), b in arb_gen()) {
            let m = supercommutator(&a.matrix(), a.parity(), &b.matrix(), b.parity());
            prop_assert_eq!(combo(bracket(a, b)), m);
        }

        #[test]
        fn supersymmetry(a in arb_gen(), b in arb_gen()) {
            let sign = if a.parity().is_odd() && b.parity().is_odd() { Q::one() } else { -Q::one() };
            prop_assert_eq!(combo(bracket(a, b)), combo(bracket(b, a)).scale(&sign));
        }
    }
}
