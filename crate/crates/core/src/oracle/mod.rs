//! A brute-force oracle: the supersymmetric algebra generated by proper
//! variables `(i|j)` and virtual variables `(α_s|j)`, `(β_t|j)`, acted on by
//! signed superpolarizations.
//!
//! Gradings: `|α| = 0`, `|β| = 1`, `|i| = 1`, and a variable `(a|j)` has
//! parity `|a| + 1`. So `(α|j)` is odd while `(β|j)` and `(i|j)` are even.
//!
//! Capelli bitableaux are *defined* as images of balanced monomials such as
//! `e_{S,C} e_{C,T}`. Acting with those words on proper polynomials gives an
//! answer that does not depend on the column expansions in [`crate::capelli`].

mod sweep;
mod word;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{check_same_shape, Monomial, Poly, Var};
use crate::tableau::{Letter, Tableau};

pub use sweep::{direct_agrees, Mismatch, Sweep, SweepReport};
pub use word::{is_irregular, OperatorWord};

/// A letter of the super alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuperSymbol {
    /// Positive virtual symbol `α_s`, even.
    Alpha(Letter),
    /// Negative virtual symbol `β_t`, odd.
    Beta(Letter),
    /// Proper symbol `i`, odd.
    Proper(Letter),
}

impl SuperSymbol {
    pub fn parity(self) -> u8 {
        match self {
            SuperSymbol::Alpha(_) => 0,
            SuperSymbol::Beta(_) | SuperSymbol::Proper(_) => 1,
        }
    }

    pub fn is_virtual(self) -> bool {
        !matches!(self, SuperSymbol::Proper(_))
    }
}

impl fmt::Display for SuperSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuperSymbol::Alpha(s) => write!(f, "a{s}"),
            SuperSymbol::Beta(t) => write!(f, "b{t}"),
            SuperSymbol::Proper(i) => write!(f, "{i}"),
        }
    }
}

/// The variable `(symbol|col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperVariable {
    pub symbol: SuperSymbol,
    pub col: Letter,
}

impl SuperVariable {
    pub fn new(symbol: SuperSymbol, col: Letter) -> Self {
        Self { symbol, col }
    }

    pub fn is_odd(self) -> bool {
        self.symbol.parity() == 0
    }
}

impl fmt::Display for SuperVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.symbol, self.col)
    }
}

/// Odd variables in increasing order, then the even ones with exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMonomial {
    odd: Vec<SuperVariable>,
    even: Vec<(SuperVariable, u32)>,
}

impl SuperMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn odd(&self) -> &[SuperVariable] {
        &self.odd
    }

    pub fn even(&self) -> &[(SuperVariable, u32)] {
        &self.even
    }

    pub fn degree(&self) -> usize {
        self.odd.len() + self.even.iter().map(|&(_, e)| e as usize).sum::<usize>()
    }

    fn bump_even(&mut self, v: SuperVariable, by: u32) {
        match self.even.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(k) => self.even[k].1 += by,
            Err(k) => self.even.insert(k, (v, by)),
        }
    }

    fn drop_even(&mut self, pos: usize) {
        if self.even[pos].1 == 1 {
            self.even.remove(pos);
        } else {
            self.even[pos].1 -= 1;
        }
    }

    /// Puts the odd variable `v` at position `at` of the odd block and sorts
    /// it into place. Returns the sign of the reordering, or `None` if `v`
    /// is already present.
    fn insert_odd_at(&mut self, at: usize, v: SuperVariable) -> Option<i64> {
        let target = match self.odd.binary_search(&v) {
            Ok(_) => return None,
            Err(k) => k,
        };
        self.odd.insert(target, v);
        Some(if at.abs_diff(target) % 2 == 0 { 1 } else { -1 })
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.odd.is_empty() && self.even.is_empty() {
            return write!(f, "1");
        }
        for v in &self.odd {
            write!(f, "{v}")?;
        }
        for (v, e) in &self.even {
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of the supersymmetric algebra with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperPoly {
    terms: BTreeMap<SuperMonomial, i64>,
}

impl SuperPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(SuperMonomial::one(), 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &i64)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(c).expect("oracle coefficient overflow");
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SuperPoly, scale: i64) -> SuperPoly {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c.checked_mul(scale).expect("oracle coefficient overflow"));
        }
        out
    }

    /// Embeds a polynomial in the proper variables.
    pub fn from_poly(p: &Poly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in p.terms() {
            let mut sm = SuperMonomial::one();
            for &(v, e) in m.factors() {
                sm.bump_even(SuperVariable::new(SuperSymbol::Proper(v.row), v.col), e);
            }
            let c = i64::try_from(c).expect("coefficient fits in i64");
            out.add_term(sm, c);
        }
        out
    }

    /// Projects back onto the proper variables. Fails if any virtual variable survives.
    pub fn to_poly(&self) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, &c) in &self.terms {
            if !m.odd.is_empty() {
                return Err(Error::NonProperResidue);
            }
            let mut vars = Vec::new();
            for &(v, e) in &m.even {
                let SuperSymbol::Proper(row) = v.symbol else {
                    return Err(Error::NonProperResidue);
                };
                vars.extend(std::iter::repeat(Var::new(row, v.col)).take(e as usize));
            }
            out.add_term(Monomial::from_vars(vars), c.into());
        }
        Ok(out)
    }

    /// Right multiplication by a single variable.
    pub fn mul_var(&self, v: SuperVariable) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, &c) in &self.terms {
            let mut next = m.clone();
            if v.is_odd() {
                let at = next.odd.len();
                if let Some(sign) = next.insert_odd_at(at, v) {
                    out.add_term(next, c * sign);
                }
            } else {
                next.bump_even(v, 1);
                out.add_term(next, c);
            }
        }
        out
    }
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}{m}")?;
        }
        Ok(())
    }
}

fn push_image(out: &mut SuperPoly, mut m: SuperMonomial, at: usize, y: SuperVariable, c: i64) {
    if y.is_odd() {
        if let Some(sign) = m.insert_odd_at(at, y) {
            out.add_term(m, c * sign);
        }
    } else {
        m.bump_even(y, 1);
        out.add_term(m, c);
    }
}

/// The left superpolarization `D_{a,b}`: the superderivation of degree
/// `|a| + |b|` sending `(c|j)` to `δ_bc (a|j)`.
pub fn superpolarize(a: SuperSymbol, b: SuperSymbol, p: &SuperPoly) -> SuperPoly {
    let degree = (a.parity() + b.parity()) % 2;
    let flip = |skipped_odd: usize| if degree == 1 && skipped_odd % 2 == 1 { -1 } else { 1 };
    let mut out = SuperPoly::zero();
    for (m, &c) in &p.terms {
        for (t, v) in m.odd.iter().enumerate() {
            if v.symbol != b {
                continue;
            }
            let mut next = m.clone();
            next.odd.remove(t);
            push_image(&mut out, next, t, SuperVariable::new(a, v.col), c * flip(t));
        }
        let skipped = m.odd.len();
        for (pos, &(v, e)) in m.even.iter().enumerate() {
            if v.symbol != b {
                continue;
            }
            let mut next = m.clone();
            next.drop_even(pos);
            let c = c.checked_mul(i64::from(e) * flip(skipped)).expect("oracle coefficient overflow");
            // An odd image lands right after the existing odd block.
            push_image(&mut out, next, skipped, SuperVariable::new(a, v.col), c);
        }
    }
    out
}

/// Applies a word of superpolarizations, rightmost pair first.
pub fn apply_word(w: &OperatorWord, p: &SuperPoly) -> SuperPoly {
    let mut cur = p.clone();
    for &(a, b) in w.pairs().iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = superpolarize(a, b, &cur);
    }
    cur
}

fn proper_cells(t: &Tableau) -> Vec<(usize, usize, SuperSymbol)> {
    t.rows()
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &x)| (r, c, SuperSymbol::Proper(x))))
        .collect()
}

/// `e_{X,Y}` for same-shape fillings, factors in row-major reading order.
fn bitableau_word(x: &[(usize, usize, SuperSymbol)], y: &[(usize, usize, SuperSymbol)]) -> Vec<(SuperSymbol, SuperSymbol)> {
    x.iter().zip(y).map(|(&(_, _, a), &(_, _, b))| (a, b)).collect()
}

fn virtual_filling(t: &Tableau, f: impl Fn(usize, usize) -> SuperSymbol) -> Vec<(usize, usize, SuperSymbol)> {
    proper_cells(t).into_iter().map(|(r, c, _)| (r, c, f(r, c))).collect()
}

// Row k of the Coderuyts tableau is α_k repeated.
fn coderuyts(t: &Tableau) -> Vec<(usize, usize, SuperSymbol)> {
    virtual_filling(t, |r, _| SuperSymbol::Alpha(r as Letter + 1))
}

// Row k of the Deruyts tableau is β_1 … β_{λ_k}.
fn deruyts(t: &Tableau) -> Vec<(usize, usize, SuperSymbol)> {
    virtual_filling(t, |_, c| SuperSymbol::Beta(c as Letter + 1))
}

// Conjugate of the Deruyts tableau of the conjugate shape: row k is β_k repeated.
fn deruyts_conjugate(t: &Tableau) -> Vec<(usize, usize, SuperSymbol)> {
    virtual_filling(t, |r, _| SuperSymbol::Beta(r as Letter + 1))
}

/// Which balanced monomial defines the element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `[S|T]`, from `e_{S,C} e_{C,T}`.
    Determinantal,
    /// `[S|T]*`, from `e_{S,D̃} e_{D̃,T}`.
    Star,
    /// `[S|⎕T]`, from `e_{S,C} e_{C,D} e_{D,T}`.
    Young,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Determinantal, Flavor::Star, Flavor::Young];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Determinantal => "capelli",
            Flavor::Star => "star",
            Flavor::Young => "young",
        }
    }
}

/// The leftmost factor, which annihilates virtual symbols and creates `S`.
pub fn left_word(flavor: Flavor, s: &Tableau) -> OperatorWord {
    let virt = match flavor {
        Flavor::Determinantal | Flavor::Young => coderuyts(s),
        Flavor::Star => deruyts_conjugate(s),
    };
    OperatorWord::new(bitableau_word(&proper_cells(s), &virt))
}

/// Everything to the right of [`left_word`]; annihilates `T`.
pub fn right_word(flavor: Flavor, t: &Tableau) -> OperatorWord {
    let cells = proper_cells(t);
    let pairs = match flavor {
        Flavor::Determinantal => bitableau_word(&coderuyts(t), &cells),
        Flavor::Star => bitableau_word(&deruyts_conjugate(t), &cells),
        Flavor::Young => {
            let d = deruyts(t);
            let mut pairs = bitableau_word(&coderuyts(t), &d);
            pairs.extend(bitableau_word(&d, &cells));
            pairs
        }
    };
    OperatorWord::new(pairs)
}

/// The full balanced word for `(S, T)`.
pub fn balanced_word(flavor: Flavor, s: &Tableau, t: &Tableau) -> Result<OperatorWord> {
    check_same_shape(s, t)?;
    let mut pairs = left_word(flavor, s).pairs().to_vec();
    pairs.extend_from_slice(right_word(flavor, t).pairs());
    Ok(OperatorWord::new(pairs))
}

/// Acts with a balanced word on a proper polynomial.
pub fn act_with_word(w: &OperatorWord, p: &Poly) -> Result<Poly> {
    apply_word(w, &SuperPoly::from_poly(p)).to_poly()
}

/// Action of `[S|T]` computed from its definition.
pub fn oracle_capelli_action(s: &Tableau, t: &Tableau, p: &Poly) -> Result<Poly> {
    act_with_word(&balanced_word(Flavor::Determinantal, s, t)?, p)
}

/// Action of `[S|T]*` computed from its definition.
pub fn oracle_star_action(s: &Tableau, t: &Tableau, p: &Poly) -> Result<Poly> {
    act_with_word(&balanced_word(Flavor::Star, s, t)?, p)
}

/// Action of `[S|⎕T]` computed from its definition.
pub fn oracle_young_action(s: &Tableau, t: &Tableau, p: &Poly) -> Result<Poly> {
    act_with_word(&balanced_word(Flavor::Young, s, t)?, p)
}

#[cfg(test)]
mod tests;
