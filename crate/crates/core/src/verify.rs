//! Named verification suites. Each runs an exhaustive check up to a size
//! bound and reports the first counterexample it finds.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::capelli::{
    capelli_bitableau, capelli_h, capelli_k, char_poly_check, column_capelli, column_capelli_as_given,
    column_capelli_star, is_central, poly_h, right_young_capelli, star_capelli_bitableau, ColumnPair,
};
use crate::error::{Error, Result};
use crate::koszul::{check_equivariance, inverse_koszul, koszul};
use crate::oracle::{Flavor, Sweep};
use crate::perm::{binomial_sign, permutations};
use crate::poly::{bitableau, star_bitableau, symmetrized_bitableau, Monomial, Poly};
use crate::rank::{determinant, poly_coordinates, rank, uea_coordinates};
use crate::tableau::{all_words, Letter, Partition, Tableau};
use crate::uea::{PbwMonomial, UeaElement};

pub const SUITES: [&str; 7] = ["roundtrip", "centrality", "equivariance", "oracle", "bases", "signs", "action"];

/// Size bounds shared by all suites.
#[derive(Clone, Copy, Debug)]
pub struct Params {
    pub n: usize,
    pub max_degree: usize,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub suite: String,
    pub checks: usize,
    pub counterexample: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} checks)", self.suite, self.checks),
            Some(c) => write!(f, "FAIL {} after {} checks\n  counterexample: {c}", self.suite, self.checks),
        }
    }
}

/// Counts checks and keeps the first failure.
struct Tally {
    checks: usize,
    bad: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checks: 0, bad: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.bad.is_none() {
            self.bad = Some(what());
        }
    }

    fn done(&self) -> bool {
        self.bad.is_some()
    }

    fn finish(self, suite: &str) -> Outcome {
        Outcome { suite: suite.to_string(), checks: self.checks, counterexample: self.bad }
    }
}

pub fn run(name: &str, p: Params) -> Result<Outcome> {
    match name {
        "roundtrip" => Ok(roundtrip(p)),
        "centrality" => centrality(p),
        "equivariance" => Ok(equivariance(p)),
        "oracle" => oracle(p),
        "bases" => bases(p),
        "signs" => Ok(signs(p)),
        "action" => action(p),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Runs a comma-separated list of suites; `all` expands to every suite.
pub fn run_list(list: &str, p: Params) -> Result<Vec<Outcome>> {
    let mut names = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            names.extend(SUITES);
        } else if let Some(&known) = SUITES.iter().find(|&&s| s == name) {
            names.push(known);
        } else {
            return Err(Error::UnknownSuite(name.to_string()));
        }
    }
    names.into_iter().map(|n| run(n, p)).collect()
}

fn monomials_up_to(n: usize, d: usize) -> impl Iterator<Item = Monomial> {
    (0..=d).flat_map(move |k| Monomial::all_of_degree(n, k))
}

fn pbw_up_to(n: usize, d: usize) -> impl Iterator<Item = PbwMonomial> {
    (0..=d).flat_map(move |k| PbwMonomial::all_of_degree(n, k))
}

fn shapes_up_to(d: usize, max_first: usize) -> impl Iterator<Item = Partition> {
    (1..=d).flat_map(Partition::all_of).filter(move |l| l.first_part() <= max_first)
}

/// `K∘B = id` on monomials and `B∘K = id` on PBW monomials.
pub fn roundtrip(p: Params) -> Outcome {
    let mut t = Tally::new();
    for m in monomials_up_to(p.n, p.max_degree) {
        let back = koszul(&inverse_koszul(&Poly::from_monomial(m.clone())));
        t.check(back == Poly::from_monomial(m.clone()), || format!("K(B({m})) = {back}"));
    }
    for m in pbw_up_to(p.n, p.max_degree) {
        let e = UeaElement::from_monomial(m.clone());
        let back = inverse_koszul(&koszul(&e));
        t.check(back == e, || format!("B(K({m})) = {back}"));
    }
    t.finish("roundtrip")
}

/// `K(T_hk(m)) = (D^l_hk - D^r_kh)(K(m))` on PBW monomials.
pub fn equivariance(p: Params) -> Outcome {
    let mut t = Tally::new();
    for m in pbw_up_to(p.n, p.max_degree) {
        let e = UeaElement::from_monomial(m.clone());
        for h in 1..=p.n as Letter {
            for k in 1..=p.n as Letter {
                t.check(check_equivariance(h, k, &e), || format!("h={h} k={k} m={m}"));
            }
        }
    }
    t.finish("equivariance")
}

/// `H_k(n)` and `K_λ(n)` are central, with the expected Koszul images.
pub fn centrality(p: Params) -> Result<Outcome> {
    let mut t = Tally::new();
    for k in 1..=p.n {
        let h = capelli_h(k, p.n)?;
        t.check(is_central(&h, p.n), || format!("H_{k}({}) not central", p.n));
        let image = koszul(&h);
        let expected = poly_h(k, p.n)?;
        t.check(image == expected, || format!("K(H_{k}({})) = {image}, expected {expected}", p.n));
    }
    for shape in shapes_up_to(p.max_degree, p.n) {
        let k = capelli_k(&shape, p.n)?;
        t.check(is_central(&k, p.n), || format!("K_{shape}({}) not central", p.n));
        let mut expected = Poly::constant(binomial_sign(shape.weight()));
        for &part in shape.parts() {
            expected = &expected * &poly_h(part, p.n)?;
        }
        let image = koszul(&k);
        t.check(image == expected, || format!("K(K_{shape}({})) = {image}, expected {expected}", p.n));
    }
    t.check(char_poly_check(p.n), || format!("characteristic polynomial, n={}", p.n));
    Ok(t.finish("centrality"))
}

/// Oracle sweep over every tableau pair of weight `≤ min(max_degree, n)`.
pub fn oracle(p: Params) -> Result<Outcome> {
    let d = p.max_degree.min(p.n);
    let mut sweep = Sweep::new(p.n, d);
    let mut t = Tally::new();
    for flavor in Flavor::ALL {
        let report = sweep.run_all(flavor, d)?;
        t.checks += report.pairs * report.inputs_per_pair;
        if let Some(m) = report.mismatches.first() {
            t.bad.get_or_insert_with(|| m.to_string());
        }
    }
    Ok(t.finish("oracle"))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Standard (co)standard pairs give bases, counted and checked by exact rank.
pub fn bases(p: Params) -> Result<Outcome> {
    let mut t = Tally::new();
    let n2 = p.n * p.n;
    let mut capelli = Vec::new();
    let mut star = Vec::new();
    let mut young = Vec::new();
    for d in 1..=p.max_degree {
        let dim = binomial(n2 + d - 1, d);
        let mut polys = Vec::new();
        let mut star_polys = Vec::new();
        let mut sym_polys = Vec::new();
        for shape in Partition::all_of(d) {
            if shape.first_part() <= p.n {
                let std = Tableau::enumerate_standard(&shape, p.n);
                for s in &std {
                    for u in &std {
                        polys.push(bitableau(s, u)?);
                        sym_polys.push(symmetrized_bitableau(s, u)?);
                        capelli.push(capelli_bitableau(s, u)?);
                        young.push(right_young_capelli(s, u)?);
                    }
                }
            }
            if shape.len() <= p.n {
                let costd = Tableau::enumerate_costandard(&shape, p.n);
                for s in &costd {
                    for u in &costd {
                        star_polys.push(star_bitableau(s, u)?);
                        star.push(star_capelli_bitableau(s, u)?);
                    }
                }
            }
        }
        t.check(polys.len() == dim, || format!("d={d}: {} standard pairs, expected {dim}", polys.len()));
        t.check(star_polys.len() == dim, || format!("d={d}: {} costandard pairs, expected {dim}", star_polys.len()));
        for (what, set) in [("bitableaux", &polys), ("*-bitableaux", &star_polys), ("symmetrized", &sym_polys)] {
            let r = rank(&poly_coordinates(set));
            t.check(r == dim, || format!("d={d}: rank of {what} is {r}, expected {dim}"));
        }
    }
    // Filtered pieces: everything of degree ≤ D together, plus the unit.
    let dim = binomial(n2 + p.max_degree, p.max_degree);
    for (what, mut set) in [("Capelli", capelli), ("*-Capelli", star), ("Young-Capelli", young)] {
        set.push(UeaElement::one());
        let r = rank(&uea_coordinates(&set));
        t.check(r == dim, || format!("rank of {what} bitableaux is {r}, expected {dim}"));
    }
    Ok(t.finish("bases"))
}

/// The column sign relation `[c] = (-1)^{C(h,2)} [c]*` and row commutativity.
pub fn signs(p: Params) -> Outcome {
    let mut t = Tally::new();
    let max_h = p.max_degree.min(4);
    for h in 1..=max_h {
        let sign = BigInt::from(binomial_sign(h));
        for left in all_words(h, p.n) {
            for right in all_words(h, p.n) {
                let c = ColumnPair::new(left.clone(), right.clone()).expect("equal lengths");
                let det = column_capelli(&c);
                let star = column_capelli_star(&c);
                t.check(det == star.scale(&sign), || format!("[{left:?}|{right:?}]: {det} vs {star}"));
                if t.done() {
                    return t.finish("signs");
                }
            }
        }
    }
    // Row commutativity, without the memo table that assumes it.
    for h in 2..=max_h.min(3) {
        for left in all_words(h, p.n) {
            for right in all_words(h, p.n) {
                let given = ColumnPair::new(left.clone(), right.clone()).expect("equal lengths");
                let reference = column_capelli_as_given(&given, false);
                for (sigma, _) in permutations(h).into_iter().skip(1) {
                    let l: Vec<Letter> = sigma.iter().map(|&k| left[k]).collect();
                    let r: Vec<Letter> = sigma.iter().map(|&k| right[k]).collect();
                    let moved = column_capelli_as_given(&ColumnPair::new(l.clone(), r.clone()).expect("equal lengths"), false);
                    t.check(moved == reference, || format!("rows of [{left:?}|{right:?}] do not commute: {l:?}|{r:?}"));
                }
            }
        }
    }
    t.finish("signs")
}

/// Writes `q` as `c · p` for a rational `c = num/den`, if possible.
fn ratio(q: &Poly, p: &Poly) -> Option<(BigInt, BigInt)> {
    let (m, lead) = p.terms().next()?;
    let num = q.coeff(m);
    let den = lead.clone();
    (&q.scale(&den) == &p.scale(&num)).then_some((num, den))
}

/// Standard right Young-Capelli bitableaux acting on symmetrized bitableaux.
pub fn action(p: Params) -> Result<Outcome> {
    let mut t = Tally::new();
    let shapes: Vec<Partition> = shapes_up_to(p.max_degree, p.n).collect();
    let standard = |l: &Partition| Tableau::enumerate_standard(l, p.n);
    for lambda in &shapes {
        let st = standard(lambda);
        let ops: Vec<Vec<UeaElement>> = st
            .iter()
            .map(|s| st.iter().map(|u| right_young_capelli(s, u)).collect())
            .collect::<Result<_>>()?;
        for mu in shapes.iter().filter(|mu| mu.weight() <= lambda.weight()) {
            let su = standard(mu);
            if mu != lambda {
                for (i, row) in ops.iter().enumerate() {
                    for (j, op) in row.iter().enumerate() {
                        for u in &su {
                            for v in &su {
                                let out = op.act_on_poly(&symmetrized_bitableau(u, v)?);
                                t.check(out.is_zero(), || {
                                    format!("[{}|#{}] on ({u}|#{v}) = {out}", st[i], st[j])
                                });
                            }
                        }
                    }
                }
                continue;
            }
            // Same shape: the action is c(T,U)·(S|#V); collect c and demand det ≠ 0.
            let k = st.len();
            let mut c: Vec<Vec<Option<(BigInt, BigInt)>>> = vec![vec![None; k]; k];
            for (i, row) in ops.iter().enumerate() {
                for (j, op) in row.iter().enumerate() {
                    for (a, u) in st.iter().enumerate() {
                        for v in &st {
                            let out = op.act_on_poly(&symmetrized_bitableau(u, v)?);
                            let target = symmetrized_bitableau(&st[i], v)?;
                            let r = ratio(&out, &target);
                            let consistent = match (&r, &c[j][a]) {
                                (None, _) => false,
                                (Some(x), None) => {
                                    c[j][a] = Some(x.clone());
                                    true
                                }
                                (Some((n1, d1)), Some((n0, d0))) => n1 * d0 == n0 * d1,
                            };
                            t.check(consistent, || {
                                format!("[{}|#{}] on ({u}|#{v}) = {out}, not a fixed multiple of {target}", st[i], st[j])
                            });
                        }
                    }
                }
            }
            let matrix: Vec<Vec<BigInt>> = c
                .iter()
                .map(|row| {
                    let lcm = row.iter().flatten().fold(BigInt::one(), |l, (_, d)| l.lcm(d));
                    row.iter()
                        .map(|e| e.as_ref().map_or(BigInt::zero(), |(n, d)| n * (&lcm / d)))
                        .collect()
                })
                .collect();
            let det = determinant(&matrix);
            t.check(!det.is_zero(), || format!("shape {lambda}: singular action matrix {matrix:?}"));
        }
    }
    Ok(t.finish("action"))
}
