//! The commutative polynomial algebra in the `n²` entries `(i|j)` of a
//! generic square matrix, with integer coefficients.
//!
//! Polynomials are sparse maps from monomials to non-zero [`BigInt`]s and are
//! always kept canonical: two equal polynomials have identical term maps.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm;
use crate::tableau::{Letter, Tableau};

/// The variable `(row|col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub row: Letter,
    pub col: Letter,
}

impl Var {
    pub const fn new(row: Letter, col: Letter) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.row, self.col)
    }
}

/// A product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// Builds a monomial from a list of variables, repeats allowed.
    pub fn from_vars(vars: impl IntoIterator<Item = Var>) -> Self {
        let mut m = Self::one();
        for v in vars {
            m.bump(v, 1);
        }
        m
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&(_, e)| e as usize).sum()
    }

    /// The variables with multiplicity, in canonical order.
    pub fn expanded(&self) -> Vec<Var> {
        self.0
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat(v).take(e as usize))
            .collect()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(pos) => self.0[pos].1,
            Err(_) => 0,
        }
    }

    fn bump(&mut self, v: Var, by: u32) {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(pos) => self.0[pos].1 += by,
            Err(pos) => self.0.insert(pos, (v, by)),
        }
    }

    fn drop_one(&mut self, pos: usize) {
        if self.0[pos].1 == 1 {
            self.0.remove(pos);
        } else {
            self.0[pos].1 -= 1;
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for &(v, e) in &other.0 {
            m.bump(v, e);
        }
        m
    }

    /// Largest row or column index appearing, 0 for the unit.
    pub fn max_index(&self) -> Letter {
        self.0
            .iter()
            .map(|(v, _)| v.row.max(v.col))
            .max()
            .unwrap_or(0)
    }

    /// All monomials of total degree `d` in the `n²` variables, in canonical order.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<Monomial> {
        let vars: Vec<Var> = (1..=n as Letter)
            .flat_map(|i| (1..=n as Letter).map(move |j| Var::new(i, j)))
            .collect();
        let mut out = Vec::new();
        fn go(vars: &[Var], start: usize, left: usize, cur: &mut Vec<Var>, out: &mut Vec<Monomial>) {
            if left == 0 {
                out.push(Monomial::from_vars(cur.iter().copied()));
                return;
            }
            for k in start..vars.len() {
                cur.push(vars[k]);
                go(vars, k, left - 1, cur, out);
                cur.pop();
            }
        }
        go(&vars, 0, d, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(v, e) in &self.0 {
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of `Z[(i|j)]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    /// The single variable `(i|j)`.
    pub fn var(i: Letter, j: Letter) -> Self {
        Self::term(1, Monomial::from_vars([Var::new(i, j)]))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree; `None` stands for the degree of the zero polynomial,
    /// which sits below every other degree.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Applies a linear operator defined on monomials.
    pub fn map_linear(&self, mut f: impl FnMut(&Monomial, &BigInt, &mut Poly)) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            f(m, c, &mut out);
        }
        out
    }

    /// Left polarization `D^l_ij`: the derivation with `(h|k) ↦ δ_jh (i|k)`.
    pub fn polarize_left(&self, i: Letter, j: Letter) -> Poly {
        self.map_linear(|m, c, out| polarize_left_monomial(i, j, m, c, out))
    }

    /// Right polarization `D^r_ji`: the derivation with `(h|k) ↦ δ_ik (h|j)`.
    pub fn polarize_right(&self, j: Letter, i: Letter) -> Poly {
        self.map_linear(|m, c, out| {
            for (pos, &(v, e)) in m.0.iter().enumerate() {
                if v.col != i {
                    continue;
                }
                let mut next = m.clone();
                next.drop_one(pos);
                next.bump(Var::new(v.row, j), 1);
                out.add_term(next, c * BigInt::from(e));
            }
        })
    }

    /// The adjoint action of `e_ij`: `D^l_ij - D^r_ji`.
    pub fn rep_adjoint(&self, i: Letter, j: Letter) -> Poly {
        &self.polarize_left(i, j) - &self.polarize_right(j, i)
    }

    /// `ρ_ij(p) = D^l_ij(p) + (i|j)·p`.
    pub fn rho(&self, i: Letter, j: Letter) -> Poly {
        let shift = Monomial::from_vars([Var::new(i, j)]);
        let mut out = self.polarize_left(i, j);
        for (m, c) in &self.terms {
            out.add_term(m.mul(&shift), c.clone());
        }
        out
    }

    /// Largest index appearing in any variable, 0 for constants.
    pub fn max_index(&self) -> Letter {
        self.terms.keys().map(Monomial::max_index).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson(
            self.terms
                .iter()
                .map(|(m, c)| PolyTermJson {
                    coeff: c.to_string(),
                    vars: m.0.iter().map(|&(v, e)| [v.row as u32, v.col as u32, e]).collect(),
                })
                .collect(),
        )
    }

    pub fn from_json(json: &PolyJson) -> Result<Poly> {
        let mut p = Poly::zero();
        for t in &json.0 {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            let mut m = Monomial::one();
            for &[i, j, e] in &t.vars {
                if i == 0 || j == 0 || i > 255 || j > 255 || e == 0 {
                    return Err(Error::Parse(format!("bad variable [{i},{j},{e}]")));
                }
                m.bump(Var::new(i as Letter, j as Letter), e);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

pub(crate) fn polarize_left_monomial(i: Letter, j: Letter, m: &Monomial, c: &BigInt, out: &mut Poly) {
    for (pos, &(v, e)) in m.0.iter().enumerate() {
        if v.row != j {
            continue;
        }
        let mut next = m.clone();
        next.drop_one(pos);
        next.bump(Var::new(i, v.col), 1);
        out.add_term(next, c * BigInt::from(e));
    }
}

/// JSON mirror of a polynomial: `[{"coeff": "-2", "vars": [[1,2,1],[2,1,1]]}, ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyJson(pub Vec<PolyTermJson>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTermJson {
    pub coeff: String,
    pub vars: Vec<[u32; 3]>,
}

pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    body: &str,
) -> fmt::Result {
    if !first {
        f.write_str(" ")?;
    }
    f.write_str(if c.is_negative() { "-" } else { "+" })?;
    let a = c.abs();
    if body.is_empty() || !a.is_one() {
        write!(f, "{a}")?;
    }
    f.write_str(body)
}

impl fmt::Display for Poly {
    /// `+(1|1)(2|2) -(1|2)(2|1)`; the zero polynomial prints as `0`.
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

/// Splits canonical text into signed terms `(coefficient, rest)`.
pub(crate) fn split_signed_terms(s: &str) -> Result<Vec<(BigInt, String)>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        let (neg, rest) = match tok.as_bytes().first() {
            Some(b'+') => (false, &tok[1..]),
            Some(b'-') => (true, &tok[1..]),
            _ => (false, tok),
        };
        let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
        let body = rest[digits.len()..].to_string();
        let mut c: BigInt = if digits.is_empty() {
            BigInt::one()
        } else {
            digits.parse().expect("ascii digits")
        };
        if neg {
            c = -c;
        }
        out.push((c, body));
    }
    Ok(out)
}

/// Parses `(a|b)` or `[a,b]`-style index pairs followed by an optional `^e`.
pub(crate) fn parse_factors(body: &str, open: char, sep: char, close: char) -> Result<Vec<(Letter, Letter, u32)>> {
    let bad = || Error::Parse(format!("cannot parse factor list {body:?}"));
    let mut out = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        rest = rest.strip_prefix(open).ok_or_else(bad)?;
        let end = rest.find(close).ok_or_else(bad)?;
        let (inside, tail) = (&rest[..end], &rest[end + 1..]);
        let (a, b) = inside.split_once(sep).ok_or_else(bad)?;
        let a: Letter = a.trim().parse().map_err(|_| bad())?;
        let b: Letter = b.trim().parse().map_err(|_| bad())?;
        rest = tail;
        let mut e = 1;
        if let Some(t) = rest.strip_prefix('^') {
            let digits: String = t.chars().take_while(char::is_ascii_digit).collect();
            e = digits.parse().map_err(|_| bad())?;
            rest = &t[digits.len()..];
        }
        if a == 0 || b == 0 || e == 0 {
            return Err(bad());
        }
        out.push((a, b, e));
    }
    Ok(out)
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Poly::zero();
        for (c, body) in split_signed_terms(s)? {
            let mut m = Monomial::one();
            for (a, b, e) in parse_factors(&body, '(', '|', ')')? {
                m.bump(Var::new(a, b), e);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}


/// A word over the proper alphabet.
pub type Word = [Letter];

fn matrix_expansion(omega: &Word, varpi: &Word, signed: bool) -> Result<Poly> {
    if omega.len() != varpi.len() {
        return Err(Error::LengthMismatch { left: omega.len(), right: varpi.len() });
    }
    let p = omega.len();
    let mut out = Poly::zero();
    for (sigma, sign) in perm::permutations(p) {
        let m = Monomial::from_vars((0..p).map(|r| Var::new(omega[r], varpi[sigma[r]])));
        let c = if signed { sign as i32 } else { 1 };
        out.add_term(m, BigInt::from(c));
    }
    Ok(out)
}

fn has_repeat(w: &Word) -> bool {
    (0..w.len()).any(|a| w[a + 1..].contains(&w[a]))
}

/// The biproduct `(ω|ϖ) = (-1)^{C(p,2)} det[(i_r|j_s)]`.
pub fn biproduct(omega: &Word, varpi: &Word) -> Result<Poly> {
    if omega.len() != varpi.len() {
        return Err(Error::LengthMismatch { left: omega.len(), right: varpi.len() });
    }
    if has_repeat(omega) || has_repeat(varpi) {
        return Ok(Poly::zero());
    }
    let det = matrix_expansion(omega, varpi, true)?;
    Ok(det.scale(&BigInt::from(perm::binomial_sign(omega.len()))))
}

/// The *-biproduct `(ω|ϖ)* = per[(i_r|j_s)]`.
pub fn star_biproduct(omega: &Word, varpi: &Word) -> Result<Poly> {
    matrix_expansion(omega, varpi, false)
}

/// Sign of an equal-shape bitableau: `(-1)^{Σ_{k≥2} λ_k(λ_1+⋯+λ_{k-1})}`.
pub fn crossing_sign(shape: &crate::tableau::Partition) -> i8 {
    let mut prefix = 0usize;
    let mut exponent = 0usize;
    for &part in shape.parts() {
        exponent += part * prefix;
        prefix += part;
    }
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn check_same_shape(s: &Tableau, t: &Tableau) -> Result<()> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch { left: s.shape().to_string(), right: t.shape().to_string() });
    }
    Ok(())
}

/// The determinantal bitableau `(S|T)`: signed product of the row biproducts.
pub fn bitableau(s: &Tableau, t: &Tableau) -> Result<Poly> {
    check_same_shape(s, t)?;
    let mut out = Poly::constant(crossing_sign(&s.shape()));
    for (ws, wt) in s.rows().iter().zip(t.rows()) {
        out = &out * &biproduct(ws, wt)?;
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// The permanental *-bitableau `(S|T)*`.
pub fn star_bitableau(s: &Tableau, t: &Tableau) -> Result<Poly> {
    check_same_shape(s, t)?;
    let mut out = Poly::one();
    for (ws, wt) in s.rows().iter().zip(t.rows()) {
        out = &out * &star_biproduct(ws, wt)?;
    }
    Ok(out)
}

/// The right symmetrized bitableau `(S|⎕T) = Σ_{T̄} (S|T̄)` over all column
/// permutations of `T`, with multiplicity.
pub fn symmetrized_bitableau(s: &Tableau, t: &Tableau) -> Result<Poly> {
    check_same_shape(s, t)?;
    t.column_permutations()
        .iter()
        .map(|tbar| bitableau(s, tbar))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Partition;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn ring_basics() {
        let q = p("+2(1|1)^2 -(1|2)(2|1) +3");
        assert!((&q + &(-&q)).is_zero());
        assert_eq!(&Poly::one() * &q, q);
        assert_eq!(&Poly::var(1, 1) * &Poly::var(1, 1), p("+(1|1)^2"));
        assert_eq!(q.degree(), Some(2));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
    }

    #[test]
    fn text_and_json_round_trip() {
        let q = p("-(1|2)(2|1)(3|1) +2(1|1)^2 -7");
        assert_eq!(q.to_string().parse::<Poly>().unwrap(), q);
        assert_eq!(q.to_string(), "-7 +2(1|1)^2 -(1|2)(2|1)(3|1)");
        let json = serde_json::to_string(&q.to_json()).unwrap();
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Poly::from_json(&back).unwrap(), q);
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn biproducts() {
        assert_eq!(biproduct(&[1], &[2]).unwrap(), Poly::var(1, 2));
        assert_eq!(biproduct(&[1, 2], &[1, 2]).unwrap(), p("-(1|1)(2|2) +(1|2)(2|1)"));
        assert!(biproduct(&[1, 1], &[1, 2]).unwrap().is_zero());
        assert!(matches!(biproduct(&[1], &[1, 2]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn star_biproducts() {
        assert_eq!(star_biproduct(&[1], &[2]).unwrap(), Poly::var(1, 2));
        assert_eq!(star_biproduct(&[1, 2], &[1, 2]).unwrap(), p("+(1|1)(2|2) +(1|2)(2|1)"));
        assert_eq!(star_biproduct(&[1, 1], &[1, 1]).unwrap(), p("+2(1|1)^2"));
    }

    #[test]
    fn crossing_signs() {
        let sign = |parts: &[usize]| crossing_sign(&Partition::new(parts.to_vec()).unwrap());
        assert_eq!(sign(&[1, 1]), -1);
        assert_eq!(sign(&[2]), 1);
        for h in 0..8 {
            assert_eq!(sign(&vec![1; h]), perm::binomial_sign(h), "column depth {h}");
        }
    }

    #[test]
    fn bitableaux() {
        // A column bitableau is (-1)^{C(h,2)} times the diagonal monomial.
        let col = bitableau(&t("1 / 2 / 3"), &t("2 / 1 / 1")).unwrap();
        assert_eq!(col, p("-(1|2)(2|1)(3|1)"));
        assert_eq!(bitableau(&t("1 2"), &t("1 2")).unwrap(), p("-(1|1)(2|2) +(1|2)(2|1)"));
        assert!(bitableau(&t("1 1 / 2"), &t("1 2 / 3")).unwrap().is_zero());
        assert!(bitableau(&t("1 2"), &t("1 / 2")).is_err());
    }

    #[test]
    fn star_bitableaux() {
        let col = star_bitableau(&t("1 / 2 / 3"), &t("2 / 1 / 1")).unwrap();
        assert_eq!(col, p("+(1|2)(2|1)(3|1)"));
        assert_eq!(star_bitableau(&t("1 2"), &t("1 2")).unwrap(), p("+(1|1)(2|2) +(1|2)(2|1)"));
        assert_eq!(star_bitableau(&Tableau::default(), &Tableau::default()).unwrap(), Poly::one());
        assert_eq!(star_bitableau(&t("1 1"), &t("2 2")).unwrap(), p("+2(1|2)^2"));
    }

    #[test]
    fn symmetrized_bitableaux() {
        let s = t("1 3 / 2 4");
        let expected = &bitableau(&s, &t("1 2 / 1 3")).unwrap().scale(&2.into())
            + &bitableau(&s, &t("1 3 / 1 2")).unwrap().scale(&2.into());
        assert_eq!(symmetrized_bitableau(&s, &t("1 2 / 1 3")).unwrap(), expected);
        assert_eq!(
            symmetrized_bitableau(&t("1 2"), &t("2 3")).unwrap(),
            bitableau(&t("1 2"), &t("2 3")).unwrap()
        );
        let col = symmetrized_bitableau(&t("1 / 2"), &t("1 / 2")).unwrap();
        let by_hand = &bitableau(&t("1 / 2"), &t("1 / 2")).unwrap() + &bitableau(&t("1 / 2"), &t("2 / 1")).unwrap();
        assert_eq!(col, by_hand);
    }

    #[test]
    fn polarizations() {
        assert_eq!(Poly::var(2, 3).polarize_left(1, 2), Poly::var(1, 3));
        assert!(Poly::var(1, 3).polarize_left(1, 2).is_zero());
        assert_eq!(p("+(1|1)^2").polarize_left(1, 1), p("+2(1|1)^2"));
        assert_eq!(Poly::var(3, 1).polarize_right(2, 1), Poly::var(3, 2));
        assert!(Poly::var(3, 2).polarize_right(2, 1).is_zero());
        assert_eq!(p("+(1|1)(2|1)").polarize_right(1, 1), p("+2(1|1)(2|1)"));
    }

    #[test]
    fn adjoint_and_rho() {
        assert_eq!(Poly::var(2, 2).rep_adjoint(1, 2), Poly::var(1, 2));
        assert!(Poly::one().rep_adjoint(1, 2).is_zero());
        assert!(Poly::var(1, 1).rep_adjoint(1, 1).is_zero());
        assert_eq!(Poly::one().rho(1, 2), Poly::var(1, 2));
        assert_eq!(Poly::var(1, 1).rho(1, 1), p("+(1|1) +(1|1)^2"));
        assert_eq!(Poly::var(2, 3).rho(1, 2), p("+(1|3) +(1|2)(2|3)"));
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(n²+d-1, d)
        assert_eq!(Monomial::all_of_degree(2, 2).len(), 10);
        assert_eq!(Monomial::all_of_degree(3, 3).len(), 165);
        assert_eq!(Monomial::all_of_degree(3, 0), vec![Monomial::one()]);
    }
}
