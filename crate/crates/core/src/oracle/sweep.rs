//! Exhaustive comparison of the oracle with the Laplace expansions.
//!
//! Both sides commute with the column action of `GL(n)`, so they agree on
//! every monomial of degree `d ≤ n` once they agree on the column-multilinear
//! monomials `(a_1|1)(a_2|2)⋯(a_d|d)`: the coefficient of `Π_k g_{c_k k}` in
//! `g·(a_1|1)⋯(a_d|d)` is `(a_1|c_1)⋯(a_d|c_d)`. Only those inputs are used,
//! and each operator is stored as a sparse matrix on them.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use super::{apply_word, left_word, right_word, Flavor, OperatorWord, SuperMonomial, SuperPoly, SuperSymbol};
use crate::capelli::{capelli_bitableau, right_young_capelli, star_capelli_bitableau};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Var};
use crate::tableau::{all_words, Letter, Partition, Tableau};
use crate::uea::{Generator, PbwMonomial, UeaElement};

type Entries = Vec<(u32, i64)>;

/// One disagreement, with both actions on the offending monomial.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub flavor: Flavor,
    pub left: Tableau,
    pub right: Tableau,
    pub input: Monomial,
    pub laplace: Poly,
    pub oracle: Poly,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} S=[{}] T=[{}] on {}: laplace {} oracle {}",
            self.flavor.name(),
            self.left,
            self.right,
            self.input,
            self.laplace,
            self.oracle
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub pairs: usize,
    pub inputs_per_pair: usize,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn absorb(&mut self, other: SweepReport) {
        self.pairs += other.pairs;
        self.inputs_per_pair = other.inputs_per_pair;
        self.mismatches.extend(other.mismatches);
    }
}

/// Operator matrices on the multilinear monomials of degree `≤ max_degree`.
pub struct Sweep {
    n: usize,
    words: Vec<Vec<Letter>>,
    index: HashMap<Vec<Letter>, u32>,
    pbw: HashMap<PbwMonomial, Rc<Entries>>,
    right: HashMap<(Flavor, Vec<Vec<Letter>>), Rc<Vec<Vec<(SuperMonomial, i64)>>>>,
    left: HashMap<(OperatorWord, SuperMonomial), Rc<Entries>>,
    acc: Vec<i64>,
    touched: Vec<usize>,
    /// Stop collecting after this many mismatches.
    pub max_mismatches: usize,
}

impl Sweep {
    /// Panics unless `max_degree ≤ n`; beyond that the multilinear inputs no longer suffice.
    pub fn new(n: usize, max_degree: usize) -> Self {
        assert!(max_degree <= n, "multilinear reduction needs degree <= n");
        let words: Vec<_> = (0..=max_degree).flat_map(|d| all_words(d, n)).collect();
        let index = words.iter().enumerate().map(|(k, w)| (w.clone(), k as u32)).collect();
        let dim = words.len();
        Self {
            n,
            words,
            index,
            pbw: HashMap::new(),
            right: HashMap::new(),
            left: HashMap::new(),
            acc: vec![0; dim * dim],
            touched: Vec::new(),
            max_mismatches: 5,
        }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    fn monomial(word: &[Letter]) -> Monomial {
        Monomial::from_vars(word.iter().enumerate().map(|(k, &r)| Var::new(r, k as Letter + 1)))
    }

    fn word_of(&self, m: &SuperMonomial) -> Result<u32> {
        if !m.odd().is_empty() {
            return Err(Error::NonProperResidue);
        }
        let d = m.degree();
        let mut word = vec![0; d];
        for &(v, e) in m.even() {
            let SuperSymbol::Proper(r) = v.symbol else {
                return Err(Error::NonProperResidue);
            };
            assert!(e == 1 && (v.col as usize) <= d, "column action must keep inputs multilinear");
            word[v.col as usize - 1] = r;
        }
        Ok(self.index[&word])
    }

    fn pbw_entries(&mut self, m: &PbwMonomial) -> Rc<Entries> {
        if let Some(hit) = self.pbw.get(m) {
            return hit.clone();
        }
        let gens: Vec<Generator> = m.word();
        let dim = self.dim();
        let mut out = Vec::new();
        for (input, w) in self.words.iter().enumerate() {
            let mut cur: HashMap<Vec<Letter>, i64> = HashMap::from([(w.clone(), 1)]);
            for g in gens.iter().rev() {
                let mut next = HashMap::new();
                for (word, c) in cur {
                    for k in 0..word.len() {
                        if word[k] == g.col {
                            let mut moved = word.clone();
                            moved[k] = g.row;
                            *next.entry(moved).or_insert(0) += c;
                        }
                    }
                }
                cur = next;
            }
            for (word, c) in cur {
                if c != 0 {
                    out.push(((input * dim) as u32 + self.index[&word], c));
                }
            }
        }
        let out = Rc::new(out);
        self.pbw.insert(m.clone(), out.clone());
        out
    }

    fn bump(&mut self, flat: usize, c: i64) {
        if self.acc[flat] == 0 {
            self.touched.push(flat);
        }
        self.acc[flat] += c;
    }

    fn add_element(&mut self, e: &UeaElement, sign: i64) {
        for (m, c) in e.terms() {
            let c = i64::try_from(c).expect("coefficient fits in i64") * sign;
            for &(flat, v) in self.pbw_entries(m).iter() {
                self.bump(flat as usize, c * v);
            }
        }
    }

    fn right_images(&mut self, flavor: Flavor, t: &Tableau) -> Rc<Vec<Vec<(SuperMonomial, i64)>>> {
        let key = (flavor, t.rows().to_vec());
        if let Some(hit) = self.right.get(&key) {
            return hit.clone();
        }
        let w = right_word(flavor, t);
        let images: Vec<Vec<(SuperMonomial, i64)>> = self
            .words
            .iter()
            .map(|word| {
                let p = SuperPoly::from_poly(&Poly::from_monomial(Self::monomial(word)));
                apply_word(&w, &p).terms().map(|(m, &c)| (m.clone(), c)).collect()
            })
            .collect();
        let images = Rc::new(images);
        self.right.insert(key, images.clone());
        images
    }

    fn left_image(&mut self, w: &OperatorWord, v: &SuperMonomial) -> Result<Rc<Entries>> {
        let key = (w.clone(), v.clone());
        if let Some(hit) = self.left.get(&key) {
            return Ok(hit.clone());
        }
        let mut p = SuperPoly::zero();
        p.add_term(v.clone(), 1);
        let mut out = Vec::new();
        for (m, &c) in apply_word(w, &p).terms() {
            out.push((self.word_of(m)?, c));
        }
        let out = Rc::new(out);
        self.left.insert(key, out.clone());
        Ok(out)
    }

    fn add_oracle(&mut self, flavor: Flavor, s: &Tableau, t: &Tableau, sign: i64) -> Result<()> {
        let right = self.right_images(flavor, t);
        let left = left_word(flavor, s);
        let dim = self.dim();
        for (input, image) in right.iter().enumerate() {
            for (v, c) in image {
                for &(out, k) in self.left_image(&left, v)?.iter() {
                    self.bump(input * dim + out as usize, sign * c * k);
                }
            }
        }
        Ok(())
    }

    /// The Laplace-expansion element for a flavor.
    pub fn element(flavor: Flavor, s: &Tableau, t: &Tableau) -> Result<UeaElement> {
        match flavor {
            Flavor::Determinantal => capelli_bitableau(s, t),
            Flavor::Star => star_capelli_bitableau(s, t),
            Flavor::Young => right_young_capelli(s, t),
        }
    }

    /// Compares one pair on every multilinear input; returns the first bad input.
    pub fn compare(&mut self, flavor: Flavor, s: &Tableau, t: &Tableau) -> Result<Option<Mismatch>> {
        let e = Self::element(flavor, s, t)?;
        self.compare_element(flavor, s, t, &e)
    }

    /// Compares an arbitrary element against the oracle for `(S, T)`.
    pub fn compare_element(
        &mut self,
        flavor: Flavor,
        s: &Tableau,
        t: &Tableau,
        e: &UeaElement,
    ) -> Result<Option<Mismatch>> {
        self.add_element(e, 1);
        self.add_oracle(flavor, s, t, -1)?;
        let dim = self.dim();
        let mut bad = None;
        for &flat in &self.touched {
            if self.acc[flat] != 0 {
                bad = Some(bad.map_or(flat / dim, |b: usize| b.min(flat / dim)));
            }
            self.acc[flat] = 0;
        }
        self.touched.clear();
        let Some(input) = bad else {
            return Ok(None);
        };
        let input = Self::monomial(&self.words[input]);
        let p = Poly::from_monomial(input.clone());
        let oracle = super::act_with_word(&super::balanced_word(flavor, s, t)?, &p)?;
        Ok(Some(Mismatch {
            flavor,
            left: s.clone(),
            right: t.clone(),
            laplace: e.act_on_poly(&p),
            oracle,
            input,
        }))
    }

    /// Checks the given pairs.
    pub fn run_pairs<'a>(
        &mut self,
        flavor: Flavor,
        pairs: impl IntoIterator<Item = (&'a Tableau, &'a Tableau)>,
    ) -> Result<SweepReport> {
        let mut report = SweepReport { inputs_per_pair: self.dim(), ..Default::default() };
        for (s, t) in pairs {
            report.pairs += 1;
            if let Some(m) = self.compare(flavor, s, t)? {
                if report.mismatches.len() < self.max_mismatches {
                    report.mismatches.push(m);
                }
            }
        }
        Ok(report)
    }

    /// Every pair of same-shape fillings with entries in `1..=n`, for one shape.
    pub fn run_shape(&mut self, flavor: Flavor, shape: &Partition) -> Result<SweepReport> {
        let fillings = Tableau::enumerate_all(shape, self.n);
        let pairs = fillings.iter().flat_map(|s| fillings.iter().map(move |t| (s, t)));
        self.run_pairs(flavor, pairs)
    }

    /// Every shape of weight `1..=max_weight`.
    pub fn run_all(&mut self, flavor: Flavor, max_weight: usize) -> Result<SweepReport> {
        let mut report = SweepReport { inputs_per_pair: self.dim(), ..Default::default() };
        for d in 1..=max_weight {
            for shape in Partition::all_of(d) {
                report.absorb(self.run_shape(flavor, &shape)?);
            }
        }
        Ok(report)
    }
}

/// Direct comparison on one polynomial, without the multilinear shortcut.
pub fn direct_agrees(flavor: Flavor, s: &Tableau, t: &Tableau, p: &Poly) -> Result<bool> {
    let e = Sweep::element(flavor, s, t)?;
    let oracle = super::act_with_word(&super::balanced_word(flavor, s, t)?, p)?;
    Ok(e.act_on_poly(p) == oracle)
}
