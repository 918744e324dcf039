//! Capelli bitableaux in `U(gl(n))`.
//!
//! Column Capelli bitableaux `[i_1 … i_h | j_1 … j_h]` and their
//! *-counterparts are expanded by peeling off the first row:
//!
//! ```text
//! [c]  = (-1)^{h-1} e_{i1 j1} [rest] + (-1)^{h-2} Σ_{k≥2} δ(i_k, j_1) [rest, i_k := i_1]
//! [c]* =            e_{i1 j1} [rest]* -           Σ_{k≥2} δ(i_k, j_1) [rest, i_k := i_1]*
//! ```
//!
//! Shaped Capelli bitableaux are then sums of column ones over row
//! permutations of the left tableau (Laplace expansion).

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::perm;
use crate::poly::{check_same_shape, Monomial, Poly, Var};
use crate::tableau::{Letter, Partition, Tableau};
use crate::uea::{Generator, UeaElement};

/// The two columns `i_1 … i_h` and `j_1 … j_h` of a column bitableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColumnPair {
    left: Vec<Letter>,
    right: Vec<Letter>,
}

impl ColumnPair {
    pub fn new(left: Vec<Letter>, right: Vec<Letter>) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::LengthMismatch { left: left.len(), right: right.len() });
        }
        Ok(Self { left, right })
    }

    pub fn left(&self) -> &[Letter] {
        &self.left
    }

    pub fn right(&self) -> &[Letter] {
        &self.right
    }

    pub fn depth(&self) -> usize {
        self.left.len()
    }

    fn rows(&self) -> Vec<(Letter, Letter)> {
        self.left.iter().copied().zip(self.right.iter().copied()).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Flavor {
    Determinantal,
    Permanental,
}

type ColumnCache = HashMap<(Flavor, Vec<(Letter, Letter)>), UeaElement>;

thread_local! {
    static COLUMNS: RefCell<ColumnCache> = RefCell::new(HashMap::new());
}

/// Drops the per-thread column memo table.
pub fn clear_cache() {
    COLUMNS.with(|c| c.borrow_mut().clear());
}

/// One step of the first-row recursion. `sub` evaluates the smaller columns.
fn peel_first_row(
    rows: &[(Letter, Letter)],
    flavor: Flavor,
    sub: &mut dyn FnMut(&[(Letter, Letter)]) -> UeaElement,
) -> UeaElement {
    let h = rows.len();
    match h {
        0 => return UeaElement::one(),
        1 => return UeaElement::generator(rows[0].0, rows[0].1),
        _ => {}
    }
    let (i1, j1) = rows[0];
    let rest = &rows[1..];
    let (lead_sign, swap_sign) = match flavor {
        // (-1)^{h-1}, (-1)^{h-2}
        Flavor::Determinantal if h % 2 == 0 => (-1, 1),
        Flavor::Determinantal => (1, -1),
        Flavor::Permanental => (1, -1),
    };
    let mut out = sub(rest)
        .left_mul(Generator::new(i1, j1))
        .scale(&BigInt::from(lead_sign));
    for k in 0..rest.len() {
        if rest[k].0 != j1 {
            continue;
        }
        let mut swapped = rest.to_vec();
        swapped[k].0 = i1;
        out.add_scaled(&sub(&swapped), &BigInt::from(swap_sign));
    }
    out
}

fn column_memoized(rows: &[(Letter, Letter)], flavor: Flavor) -> UeaElement {
    let mut key = rows.to_vec();
    key.sort_unstable();
    if key.len() <= 1 {
        return peel_first_row(&key, flavor, &mut |_| unreachable!());
    }
    let key = (flavor, key);
    if let Some(hit) = COLUMNS.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let out = peel_first_row(&key.1, flavor, &mut |r| column_memoized(r, flavor));
    COLUMNS.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

fn column_as_given(rows: &[(Letter, Letter)], flavor: Flavor) -> UeaElement {
    peel_first_row(rows, flavor, &mut |r| column_as_given(r, flavor))
}

/// The column Capelli bitableau `[i_1 … i_h | j_1 … j_h]` in normal form.
///
/// Results are memoized on the sorted list of row pairs, which relies on
/// row-commutativity; [`column_capelli_as_given`] skips that shortcut.
pub fn column_capelli(c: &ColumnPair) -> UeaElement {
    column_memoized(&c.rows(), Flavor::Determinantal)
}

/// The column Capelli *-bitableau `[i_1 … i_h | j_1 … j_h]*` in normal form.
pub fn column_capelli_star(c: &ColumnPair) -> UeaElement {
    column_memoized(&c.rows(), Flavor::Permanental)
}

/// Runs the determinantal recursion in the row order given, without any
/// sorting or caching. `star` selects the permanental recursion.
pub fn column_capelli_as_given(c: &ColumnPair, star: bool) -> UeaElement {
    let flavor = if star { Flavor::Permanental } else { Flavor::Determinantal };
    column_as_given(&c.rows(), flavor)
}

/// Every choice of one permutation per row of `s`, paired with the product of their signs.
fn row_permutation_tuples(s: &Tableau) -> Vec<(Vec<Letter>, i8)> {
    let mut out = vec![(Vec::new(), 1i8)];
    for row in s.rows() {
        let perms = perm::permutations(row.len());
        out = out
            .into_iter()
            .flat_map(|(prefix, sign)| {
                perms.iter().map(move |(p, sg)| {
                    let mut word = prefix.clone();
                    word.extend(p.iter().map(|&k| row[k]));
                    (word, sign * sg)
                })
            })
            .collect();
    }
    out
}

fn laplace(s: &Tableau, t: &Tableau, star: bool) -> Result<UeaElement> {
    check_same_shape(s, t)?;
    let right = t.reading_word();
    let mut out = UeaElement::zero();
    for (left, sign) in row_permutation_tuples(s) {
        let col = ColumnPair { left, right: right.clone() };
        if star {
            out += &column_capelli_star(&col);
        } else {
            out.add_scaled(&column_capelli(&col), &BigInt::from(sign));
        }
    }
    Ok(out)
}

/// The Capelli bitableau `[S|T]`, expanded as a signed sum of column Capelli
/// bitableaux over per-row permutations of `S`.
pub fn capelli_bitableau(s: &Tableau, t: &Tableau) -> Result<UeaElement> {
    laplace(s, t, false)
}

/// The Capelli *-bitableau `[S|T]*`: unsigned sum over per-row permutations of `S`.
pub fn star_capelli_bitableau(s: &Tableau, t: &Tableau) -> Result<UeaElement> {
    laplace(s, t, true)
}

/// The right Young-Capelli bitableau `[S|⎕T] = Σ_{T̄} [S|T̄]` over column
/// permutations of `T`, with multiplicity.
pub fn right_young_capelli(s: &Tableau, t: &Tableau) -> Result<UeaElement> {
    check_same_shape(s, t)?;
    let mut out = UeaElement::zero();
    for tbar in t.column_permutations() {
        out += &capelli_bitableau(s, &tbar)?;
    }
    Ok(out)
}

/// The Capelli column determinant
/// `Σ_τ sgn(τ) (e_{τ(1)1} + (n-1)δ) (e_{τ(2)2} + (n-2)δ) ⋯ e_{τ(n)n}`.
pub fn capelli_cdet(n: usize) -> UeaElement {
    let mut out = UeaElement::zero();
    for (tau, sign) in perm::permutations(n) {
        let mut prod = UeaElement::constant(sign);
        for (c, &r) in tau.iter().enumerate() {
            let mut entry = UeaElement::generator(r as Letter + 1, c as Letter + 1);
            if r == c {
                entry += &UeaElement::constant((n - 1 - c) as i64);
            }
            prod = prod.multiply(&entry);
        }
        out += &prod;
    }
    out
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(())
}

/// All `k`-subsets of `{1, ..., n}` as increasing words.
fn subsets(k: usize, n: usize) -> Vec<Vec<Letter>> {
    crate::tableau::all_words(k, n)
        .into_iter()
        .filter(|w| w.windows(2).all(|p| p[0] < p[1]))
        .collect()
}

/// The `k`-th Capelli element `H_k(n) = Σ_{i_1<⋯<i_k} [i_k ⋯ i_1 | i_1 ⋯ i_k]`.
pub fn capelli_h(k: usize, n: usize) -> Result<UeaElement> {
    check_k(k, n)?;
    let mut out = UeaElement::zero();
    for inc in subsets(k, n) {
        let dec: Vec<Letter> = inc.iter().rev().copied().collect();
        out += &capelli_bitableau(&Tableau::row(&dec)?, &Tableau::row(&inc)?)?;
    }
    Ok(out)
}

/// `h_k(n)`, the sum of the principal `k × k` minors of the generic matrix.
pub fn poly_h(k: usize, n: usize) -> Result<Poly> {
    check_k(k, n)?;
    let mut out = Poly::zero();
    for idx in subsets(k, n) {
        for (sigma, sign) in perm::permutations(k) {
            let m = Monomial::from_vars((0..k).map(|r| Var::new(idx[r], idx[sigma[r]])));
            out.add_term(m, BigInt::from(sign));
        }
    }
    Ok(out)
}

/// The shaped Capelli element `K_λ(n) = Σ_S [S|S]` over row-increasing `S` of shape `λ`.
pub fn capelli_k(shape: &Partition, n: usize) -> Result<UeaElement> {
    let mut out = UeaElement::zero();
    for s in Tableau::enumerate_row_increasing(shape, n)? {
        out += &capelli_bitableau(&s, &s)?;
    }
    Ok(out)
}

/// Expands `det(tI - M)` with a central indeterminate `t` and checks that the
/// coefficient of `t^{n-i}` is `(-1)^i h_i(n)`.
pub fn char_poly_check(n: usize) -> bool {
    char_poly_coefficients(n)
        .iter()
        .enumerate()
        .all(|(power, coeff)| {
            let i = n - power;
            let expected = if i == 0 {
                Poly::one()
            } else {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                poly_h(i, n).expect("1 <= i <= n").scale(&BigInt::from(sign))
            };
            *coeff == expected
        })
}

/// Coefficients of `det(tI - M)` by powers of `t`, lowest first.
pub fn char_poly_coefficients(n: usize) -> Vec<Poly> {
    let mut coeffs = vec![Poly::zero(); n + 1];
    for (sigma, sign) in perm::permutations(n) {
        // Π_r (t δ_{r,σ(r)} - (r|σ(r))) as a polynomial in t.
        let mut prod: Vec<Poly> = vec![Poly::constant(sign)];
        for (r, &c) in sigma.iter().enumerate() {
            let entry = Poly::var(r as Letter + 1, c as Letter + 1).scale(&BigInt::from(-1));
            let mut next = vec![Poly::zero(); prod.len() + 1];
            for (power, p) in prod.iter().enumerate() {
                next[power] += &(p * &entry);
                if r == c {
                    next[power + 1] += p;
                }
            }
            prod = next;
        }
        for (power, p) in prod.into_iter().enumerate() {
            coeffs[power] += &p;
        }
    }
    coeffs
}

/// True iff `T_hk(m) = 0` for every `h, k` in `1..=n`.
pub fn is_central(m: &UeaElement, n: usize) -> bool {
    (1..=n as Letter).all(|h| (1..=n as Letter).all(|k| m.adjoint_t(h, k).is_zero()))
}
