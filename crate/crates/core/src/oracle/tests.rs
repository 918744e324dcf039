use super::*;
use crate::capelli::{capelli_bitableau, right_young_capelli, star_capelli_bitableau};
use crate::uea::UeaElement;

use SuperSymbol::{Alpha, Beta, Proper};

fn t(s: &str) -> Tableau {
    s.parse().unwrap()
}

fn var(a: SuperSymbol, j: Letter) -> SuperVariable {
    SuperVariable::new(a, j)
}

fn product(vars: &[SuperVariable]) -> SuperPoly {
    vars.iter().fold(SuperPoly::one(), |p, &v| p.mul_var(v))
}

const SYMBOLS: [SuperSymbol; 5] = [Alpha(1), Alpha(2), Beta(1), Proper(1), Proper(2)];

fn sample_polys() -> Vec<SuperPoly> {
    let vars: Vec<_> = SYMBOLS.iter().flat_map(|&a| [var(a, 1), var(a, 2)]).collect();
    let mut out = vec![SuperPoly::one()];
    for &x in &vars {
        out.push(product(&[x]));
        for &y in &vars {
            out.push(product(&[x, y]));
            for &z in vars.iter().step_by(3) {
                out.push(product(&[x, y, z]));
            }
        }
    }
    out
}

#[test]
fn defining_relation() {
    let p = product(&[var(Proper(1), 1)]);
    assert_eq!(superpolarize(Alpha(1), Proper(1), &p), product(&[var(Alpha(1), 1)]));
    assert!(superpolarize(Alpha(1), Proper(1), &SuperPoly::one()).is_zero());
}

#[test]
fn leibniz_sign_through_odd_variable() {
    let p = product(&[var(Alpha(1), 1), var(Proper(1), 2)]);
    let expected = SuperPoly::zero().add(&product(&[var(Alpha(1), 1), var(Alpha(1), 2)]), -1);
    assert_eq!(superpolarize(Alpha(1), Proper(1), &p), expected);
}

#[test]
fn odd_squares_vanish() {
    for a in [Alpha(1), Alpha(2)] {
        for j in 1..=2 {
            for p in sample_polys() {
                assert!(p.mul_var(var(a, j)).mul_var(var(a, j)).is_zero());
            }
        }
    }
}

#[test]
fn odd_variables_anticommute() {
    let x = var(Alpha(1), 1);
    let y = var(Alpha(2), 2);
    assert_eq!(product(&[x, y]), SuperPoly::zero().add(&product(&[y, x]), -1));
    let e = var(Beta(1), 1);
    assert_eq!(product(&[x, e, y]), product(&[e, x, y]));
}

fn parity(a: SuperSymbol, b: SuperSymbol) -> u8 {
    (a.parity() + b.parity()) % 2
}

#[test]
fn super_commutator_law() {
    let polys = sample_polys();
    for &a in &SYMBOLS {
        for &b in &SYMBOLS {
            for &c in &SYMBOLS {
                for &d in &SYMBOLS {
                    let s = if parity(a, b) * parity(c, d) == 1 { -1 } else { 1 };
                    for p in &polys {
                        let lhs = superpolarize(a, b, &superpolarize(c, d, p))
                            .add(&superpolarize(c, d, &superpolarize(a, b, p)), -s);
                        let mut rhs = SuperPoly::zero();
                        if b == c {
                            rhs = rhs.add(&superpolarize(a, d, p), 1);
                        }
                        if a == d {
                            rhs = rhs.add(&superpolarize(c, b, p), -s);
                        }
                        assert_eq!(lhs, rhs, "a={a} b={b} c={c} d={d} p={p}");
                    }
                }
            }
        }
    }
}

#[test]
fn word_application() {
    assert_eq!(apply_word(&OperatorWord::default(), &SuperPoly::one()), SuperPoly::one());
    let w = OperatorWord::new(vec![(Proper(3), Alpha(1)), (Alpha(1), Proper(2))]);
    let p = SuperPoly::from_poly(&Poly::var(2, 1));
    assert_eq!(apply_word(&w, &p).to_poly().unwrap(), Poly::var(3, 1));
}

#[test]
fn irregularity() {
    let g = Alpha(1);
    let (x, y) = (Proper(1), Proper(2));
    assert!(is_irregular(&OperatorWord::new(vec![(x, g)])));
    assert!(!is_irregular(&OperatorWord::new(vec![(g, x)])));
    assert!(!is_irregular(&OperatorWord::new(vec![(x, g), (g, y)])));
    let example = OperatorWord::new(vec![(g, y), (x, g), (y, g), (g, x)]);
    assert!(is_irregular(&example));
}

fn words(len: usize) -> Vec<OperatorWord> {
    let letters = [Alpha(1), Beta(1), Proper(1), Proper(2)];
    let pairs: Vec<_> = letters.iter().flat_map(|&a| letters.iter().map(move |&b| (a, b))).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<_>| {
                pairs.iter().map(move |&p| {
                    let mut w = w.clone();
                    w.push(p);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(OperatorWord::new).collect()
}

#[test]
fn irregular_words_kill_proper_polynomials() {
    let mut monos = Vec::new();
    for d in 0..=3 {
        monos.extend(Monomial::all_of_degree(2, d));
    }
    let mut seen = 0;
    for len in 1..=3 {
        for w in words(len).into_iter().filter(is_irregular) {
            seen += 1;
            for m in &monos {
                let p = SuperPoly::from_poly(&Poly::from_monomial(m.clone()));
                assert!(apply_word(&w, &p).is_zero(), "{w} on {m}");
            }
        }
    }
    assert!(seen > 100);
}

#[test]
fn single_box_is_a_polarization() {
    let p = Poly::var(2, 1);
    let expected = Poly::var(1, 1);
    let (s, tt) = (t("1"), t("2"));
    assert_eq!(oracle_capelli_action(&s, &tt, &p).unwrap(), expected);
    assert_eq!(oracle_star_action(&s, &tt, &p).unwrap(), expected);
    assert_eq!(oracle_young_action(&s, &tt, &p).unwrap(), expected);
}

fn agree_on_small_monomials(shape_fill: &[&str], n: usize) {
    let mut monos = Vec::new();
    for d in 0..=3 {
        monos.extend(Monomial::all_of_degree(n, d));
    }
    for s in shape_fill {
        for tt in shape_fill {
            let (s, tt) = (t(s), t(tt));
            let det = capelli_bitableau(&s, &tt).unwrap();
            let star = star_capelli_bitableau(&s, &tt).unwrap();
            let young = right_young_capelli(&s, &tt).unwrap();
            for m in &monos {
                let p = Poly::from_monomial(m.clone());
                assert_eq!(oracle_capelli_action(&s, &tt, &p).unwrap(), det.act_on_poly(&p), "[{s}|{tt}] on {m}");
                assert_eq!(oracle_star_action(&s, &tt, &p).unwrap(), star.act_on_poly(&p), "[{s}|{tt}]* on {m}");
                assert_eq!(oracle_young_action(&s, &tt, &p).unwrap(), young.act_on_poly(&p), "[{s}|#{tt}] on {m}");
            }
        }
    }
}

#[test]
fn columns_of_height_two_agree() {
    agree_on_small_monomials(&["1 / 2", "2 / 1", "1 / 1", "3 / 2", "2 / 3", "3 / 3"], 3);
}

#[test]
fn rows_of_length_two_agree() {
    agree_on_small_monomials(&["1 2", "2 1", "1 1", "2 2", "1 3", "3 3"], 3);
}

#[test]
fn sweep_agrees_and_catches_faults() {
    let mut sweep = Sweep::new(3, 3);
    for flavor in Flavor::ALL {
        let report = sweep.run_all(flavor, 2).unwrap();
        assert!(report.passed(), "{}", report.mismatches[0]);
        assert_eq!(report.pairs, 9 + 81 + 81);
    }
    let (s, tt) = (t("1 2"), t("2 1"));
    let wrong = star_capelli_bitableau(&s, &tt).unwrap();
    let m = sweep.compare_element(Flavor::Determinantal, &s, &tt, &wrong).unwrap();
    assert!(m.is_some());
    let right = capelli_bitableau(&s, &tt).unwrap();
    let flipped = &right + &UeaElement::generator(1, 1);
    assert!(sweep.compare_element(Flavor::Determinantal, &s, &tt, &flipped).unwrap().is_some());
    assert!(sweep.compare_element(Flavor::Determinantal, &s, &tt, &right).unwrap().is_none());
}

#[test]
fn multilinear_inputs_suffice_on_a_sample() {
    let (s, tt) = (t("1 2 / 3 1"), t("2 3 / 1 1"));
    for d in 0..=4 {
        for m in Monomial::all_of_degree(3, d).into_iter().step_by(7) {
            let p = Poly::from_monomial(m);
            for flavor in Flavor::ALL {
                assert!(direct_agrees(flavor, &s, &tt, &p).unwrap());
            }
        }
    }
}
