//! The Koszul map `K : U(gl(n)) → Z[M_{n,n}]` and its inverse.
//!
//! `K` sends `e_{i1 j1} ⋯ e_{ih jh}` to `ρ_{i1 j1}(⋯ ρ_{ih jh}(1))`, where
//! `ρ_ij = D^l_ij + (i|j)·`. The inverse sends a monomial
//! `(i_1|j_1) ⋯ (i_h|j_h)` to `(-1)^{C(h,2)} [i_1 … i_h | j_1 … j_h]`.

use num_bigint::BigInt;

use crate::capelli::{column_capelli, ColumnPair};
use crate::perm::binomial_sign;
use crate::poly::{Monomial, Poly};
use crate::tableau::Letter;
use crate::uea::{PbwMonomial, UeaElement};

fn koszul_monomial(m: &PbwMonomial) -> Poly {
    let mut cur = Poly::one();
    for g in m.word().into_iter().rev() {
        cur = cur.rho(g.row, g.col);
    }
    cur
}

/// `K = ε_1 ∘ τ`: apply the `ρ` operators to `1`, rightmost generator first.
pub fn koszul(m: &UeaElement) -> Poly {
    let mut out = Poly::zero();
    for (mono, c) in m.terms() {
        out += &koszul_monomial(mono).scale(c);
    }
    out
}

/// Image of a single monomial under the inverse map.
pub fn inverse_koszul_monomial(m: &Monomial) -> UeaElement {
    let vars = m.expanded();
    let left = vars.iter().map(|v| v.row).collect();
    let right = vars.iter().map(|v| v.col).collect();
    let col = ColumnPair::new(left, right).expect("equal lengths");
    column_capelli(&col).scale(&BigInt::from(binomial_sign(vars.len())))
}

/// The inverse Koszul map, built monomial by monomial from column Capelli bitableaux.
pub fn inverse_koszul(p: &Poly) -> UeaElement {
    let mut out = UeaElement::zero();
    for (m, c) in p.terms() {
        out.add_scaled(&inverse_koszul_monomial(m), c);
    }
    out
}

/// Checks `K(T_hk(m)) = (D^l_hk - D^r_kh)(K(m))`.
pub fn check_equivariance(h: Letter, k: Letter, m: &UeaElement) -> bool {
    koszul(&m.adjoint_t(h, k)) == koszul(m).rep_adjoint(h, k)
}
