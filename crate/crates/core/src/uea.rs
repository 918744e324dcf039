//! The universal enveloping algebra `U(gl(n))` over the integers, stored in
//! PBW normal form with respect to the row-major order on generators
//! `e_11 < e_12 < ... < e_1n < e_21 < ... < e_nn`.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{parse_factors, split_signed_terms, write_signed_term, Poly};
use crate::tableau::Letter;

/// The generator `e_ij` of `gl(n)`. The derived order is row-major lexicographic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub row: Letter,
    pub col: Letter,
}

impl Generator {
    pub const fn new(row: Letter, col: Letter) -> Self {
        Self { row, col }
    }

    /// `[e_ij, e_st] = δ_js e_it - δ_it e_sj` as a list of signed generators.
    fn bracket(self, other: Generator) -> [(i8, Option<Generator>); 2] {
        let first = (self.col == other.row).then(|| Generator::new(self.row, other.col));
        let second = (self.row == other.col).then(|| Generator::new(other.row, self.col));
        [(1, first), (-1, second)]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{}]", self.row, self.col)
    }
}

/// A PBW monomial: strictly increasing generators with positive exponents.
///
/// Ordered by filtration degree first, then lexicographically on the expanded word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PbwMonomial(Vec<(Generator, u32)>);

impl PbwMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// Sorts an arbitrary multiset of generators into a PBW monomial.
    pub fn from_sorted_word(word: &[Generator]) -> Self {
        let mut sorted = word.to_vec();
        sorted.sort();
        let mut out: Vec<(Generator, u32)> = Vec::new();
        for g in sorted {
            match out.last_mut() {
                Some((h, e)) if *h == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        Self(out)
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&(_, e)| e as usize).sum()
    }

    /// The generators with multiplicity, left to right.
    pub fn word(&self) -> Vec<Generator> {
        self.0
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat(g).take(e as usize))
            .collect()
    }

    fn letters(&self) -> impl Iterator<Item = Generator> + '_ {
        self.0.iter().flat_map(|&(g, e)| std::iter::repeat(g).take(e as usize))
    }

    fn first(&self) -> Option<Generator> {
        self.0.first().map(|&(g, _)| g)
    }

    fn without_first(&self) -> PbwMonomial {
        let mut rest = self.0.clone();
        if rest[0].1 == 1 {
            rest.remove(0);
        } else {
            rest[0].1 -= 1;
        }
        PbwMonomial(rest)
    }

    fn with_prepended(&self, g: Generator) -> PbwMonomial {
        let mut out = self.0.clone();
        match out.first_mut() {
            Some((h, e)) if *h == g => *e += 1,
            _ => out.insert(0, (g, 1)),
        }
        PbwMonomial(out)
    }

    /// All PBW monomials of degree exactly `d` in `gl(n)`.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<PbwMonomial> {
        let gens = all_generators(n);
        let mut out = Vec::new();
        fn go(gens: &[Generator], start: usize, left: usize, cur: &mut Vec<Generator>, out: &mut Vec<PbwMonomial>) {
            if left == 0 {
                out.push(PbwMonomial::from_sorted_word(cur));
                return;
            }
            for k in start..gens.len() {
                cur.push(gens[k]);
                go(gens, k, left - 1, cur, out);
                cur.pop();
            }
        }
        go(&gens, 0, d, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(g, e) in &self.0 {
            write!(f, "{g}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The `n²` generators in row-major order.
pub fn all_generators(n: usize) -> Vec<Generator> {
    (1..=n as Letter)
        .flat_map(|i| (1..=n as Letter).map(move |j| Generator::new(i, j)))
        .collect()
}

/// An element of `U(gl(n))` with integer coefficients, in PBW normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, BigInt>,
}

type LeftMulCache = HashMap<(Generator, PbwMonomial), UeaElement>;

thread_local! {
    // g · m for a generator g and a PBW monomial m; shared by every product
    // computed on this thread.
    static LEFT_MUL: RefCell<LeftMulCache> = RefCell::new(HashMap::new());
}

/// Drops the per-thread multiplication memo table.
pub fn clear_cache() {
    LEFT_MUL.with(|c| c.borrow_mut().clear());
}

/// Normal form of `g · m`.
///
/// If `g` does not exceed the first letter `f` of `m` it is simply prepended.
/// Otherwise the out-of-order pair is rewritten as `g f = f g + [g, f]`; the
/// bracket term has lower filtration degree, so the recursion terminates.
fn left_mul_generator(g: Generator, m: &PbwMonomial) -> UeaElement {
    match m.first() {
        None => return UeaElement::from_monomial(m.with_prepended(g)),
        Some(f) if g <= f => return UeaElement::from_monomial(m.with_prepended(g)),
        _ => {}
    }
    let key = (g, m.clone());
    if let Some(hit) = LEFT_MUL.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let f = m.first().expect("non-empty");
    let rest = m.without_first();
    let mut out = UeaElement::zero();
    for (t, c) in &left_mul_generator(g, &rest).terms {
        out.add_scaled(&left_mul_generator(f, t), c);
    }
    for (sign, h) in g.bracket(f) {
        if let Some(h) = h {
            out.add_scaled(&left_mul_generator(h, &rest), &BigInt::from(sign));
        }
    }
    LEFT_MUL.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(PbwMonomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(PbwMonomial::one(), c.into());
        out
    }

    /// The generator `e_ij` without a bound check; see [`gen`] for the checked form.
    pub fn generator(i: Letter, j: Letter) -> Self {
        Self::from_monomial(PbwMonomial(vec![(Generator::new(i, j), 1)]))
    }

    pub fn from_monomial(m: PbwMonomial) -> Self {
        let mut out = Self::zero();
        out.terms.insert(m, BigInt::from(1));
        out
    }

    /// The ordered product `g_1 g_2 ⋯ g_k`, brought to normal form.
    pub fn from_word(word: &[Generator]) -> Self {
        let mut cur = UeaElement::one();
        for &g in word.iter().rev() {
            cur = cur.left_mul(g);
        }
        cur
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: &BigInt) {
        for (m, k) in &other.terms {
            self.add_term(m.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// Maximal filtration degree; the zero element has none.
    pub fn degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(PbwMonomial::degree)
            .max()
            .ok_or(Error::ZeroElement)
    }

    /// `g · self`.
    pub fn left_mul(&self, g: Generator) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&left_mul_generator(g, m), c);
        }
        out
    }

    /// The associative product in normal form.
    pub fn multiply(&self, other: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, c) in &self.terms {
            let mut cur = other.clone();
            for g in m.word().into_iter().rev() {
                cur = cur.left_mul(g);
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &UeaElement) -> UeaElement {
        &self.multiply(other) - &other.multiply(self)
    }

    /// `T_hk(m) = e_hk m - m e_hk`.
    pub fn adjoint_t(&self, h: Letter, k: Letter) -> UeaElement {
        UeaElement::generator(h, k).commutator(self)
    }

    /// Action through the left polarization representation `e_ij ↦ D^l_ij`.
    /// Within a PBW monomial the rightmost generator acts first.
    pub fn act_on_poly(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut cur = p.clone();
            for g in m.word().into_iter().rev() {
                cur = cur.polarize_left(g.row, g.col);
                if cur.is_zero() {
                    break;
                }
            }
            out += &cur.scale(c);
        }
        out
    }

    /// Largest index appearing in any generator, 0 for scalars.
    pub fn max_index(&self) -> Letter {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(g, _)| g.row.max(g.col)))
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> UeaJson {
        UeaJson(
            self.terms
                .iter()
                .map(|(m, c)| UeaTermJson {
                    coeff: c.to_string(),
                    factors: m.0.iter().map(|&(g, e)| [g.row as u32, g.col as u32, e]).collect(),
                })
                .collect(),
        )
    }

    /// Reads the JSON mirror. Factor lists need not be normal-ordered; each
    /// term is read as the ordered product of its factors.
    pub fn from_json(json: &UeaJson) -> Result<UeaElement> {
        let mut out = UeaElement::zero();
        for t in &json.0 {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            let mut word = Vec::new();
            for &[i, j, e] in &t.factors {
                if i == 0 || j == 0 || i > 255 || j > 255 || e == 0 {
                    return Err(Error::Parse(format!("bad factor [{i},{j},{e}]")));
                }
                word.extend(std::iter::repeat(Generator::new(i as Letter, j as Letter)).take(e as usize));
            }
            out.add_scaled(&UeaElement::from_word(&word), &c);
        }
        Ok(out)
    }
}

/// The generator `e_ij` of `gl(n)`, rejecting indices outside `1..=n`.
pub fn gen(i: usize, j: usize, n: usize) -> Result<UeaElement> {
    for x in [i, j] {
        if x == 0 || x > n {
            return Err(Error::IndexOutOfRange { index: x, n });
        }
    }
    Ok(UeaElement::generator(i as Letter, j as Letter))
}

/// JSON mirror: `[{"coeff": "2", "factors": [[1,4,1],[2,3,1]]}, ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UeaJson(pub Vec<UeaTermJson>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UeaTermJson {
    pub coeff: String,
    pub factors: Vec<[u32; 3]>,
}

impl fmt::Display for UeaElement {
    /// `+e[1,1] -e[1,2]e[2,1] +e[1,1]e[2,2]`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            write_signed_term(f, k == 0, c, &m.to_string())?;
        }
        Ok(())
    }
}

impl FromStr for UeaElement {
    type Err = Error;

    /// Parses printed elements; factors of a term are multiplied in the order
    /// written, so non-normal-ordered input such as `e[2,1]e[1,2]` is accepted.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = UeaElement::zero();
        for (c, body) in split_signed_terms(s)? {
            let mut word = Vec::new();
            for (a, b, e) in parse_factors(&body.replace('e', ""), '[', ',', ']')? {
                word.extend(std::iter::repeat(Generator::new(a, b)).take(e as usize));
            }
            out.add_scaled(&UeaElement::from_word(&word), &c);
        }
        Ok(out)
    }
}

impl Add for &UeaElement {
    type Output = UeaElement;
    fn add(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&UeaElement> for UeaElement {
    fn add_assign(&mut self, rhs: &UeaElement) {
        self.add_scaled(rhs, &BigInt::from(1));
    }
}

impl Sub for &UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::from(-1));
        out
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &UeaElement {
    type Output = UeaElement;
    fn mul(self, rhs: &UeaElement) -> UeaElement {
        self.multiply(rhs)
    }
}

impl Sum for UeaElement {
    fn sum<I: Iterator<Item = UeaElement>>(iter: I) -> UeaElement {
        iter.fold(UeaElement::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}
