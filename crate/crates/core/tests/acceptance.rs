//! The acceptance criteria, one PASS/FAIL line each. Exact equality throughout.

use std::process::ExitCode;
use std::time::Instant;

use capelli::capelli::{
    capelli_bitableau, capelli_cdet, column_capelli, poly_h, star_capelli_bitableau, ColumnPair,
};
use capelli::koszul::koszul;
use capelli::oracle::{Flavor, Sweep};
use capelli::perm::binomial_sign;
use capelli::verify::{self, Outcome, Params};
use capelli::{Letter, Poly, Tableau, UeaElement};

type Check = Result<String, String>;

fn u(s: &str) -> UeaElement {
    s.parse().expect("element literal")
}

fn p(s: &str) -> Poly {
    s.parse().expect("polynomial literal")
}

fn t(s: &str) -> Tableau {
    s.parse().expect("tableau literal")
}

fn col(l: &[Letter], r: &[Letter]) -> ColumnPair {
    ColumnPair::new(l.to_vec(), r.to_vec()).expect("equal lengths")
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: &T, want: &T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn suites(name: &str, ps: &[Params]) -> Check {
    let mut checks = 0;
    for &params in ps {
        let o: Outcome = verify::run(name, params).map_err(|e| e.to_string())?;
        if !o.passed() {
            return Err(format!("n={} d={}: {o}", params.n, params.max_degree));
        }
        checks += o.checks;
    }
    Ok(format!("{checks} checks"))
}

fn golden_depth_four() -> Check {
    let got = column_capelli(&col(&[1, 2, 3, 2], &[2, 3, 4, 3]));
    let printed = u("+e[1,2]e[2,3]e[3,4]e[2,3] -e[1,2]e[2,4]e[2,3] -2e[1,3]e[3,4]e[2,3] +2e[1,4]e[2,3]");
    expect_eq("[1232|2343]", &got, &printed)?;
    Ok(got.to_string())
}

fn golden_depth_three() -> Check {
    let got = column_capelli(&col(&[1, 2, 3], &[2, 1, 1]));
    expect_eq("[123|211]", &got, &u("-e[1,2]e[2,1]e[3,1] +e[1,1]e[3,1]"))?;
    expect_eq("K[123|211]", &koszul(&got), &p("-(1|2)(2|1)(3|1)"))?;
    Ok(format!("{got}  ->  {}", koszul(&got)))
}

fn golden_example_two_by_two() -> Check {
    let (s, tt) = (t("1 2 / 2 4"), t("2 3 / 3 4"));
    // Right-permutation form, as printed, with each column's printed expansion.
    let printed = [
        (1, [2, 3, 3, 4], "+e[1,2]e[2,3]e[2,3]e[4,4] -2e[1,3]e[2,3]e[4,4]"),
        (-1, [3, 2, 3, 4], "+e[1,3]e[2,2]e[2,3]e[4,4] -e[1,3]e[2,3]e[4,4]"),
        (-1, [2, 3, 4, 3], "+e[1,2]e[2,3]e[2,4]e[4,3] -e[1,2]e[2,3]e[2,3] -e[1,3]e[2,4]e[4,3] +e[1,3]e[2,3] -e[2,3]e[1,4]e[4,3] +e[2,3]e[1,3]"),
        (1, [3, 2, 4, 3], "+e[1,3]e[2,2]e[2,4]e[4,3] -e[1,3]e[2,2]e[2,3] -e[1,3]e[2,4]e[4,3] +e[1,3]e[2,3]"),
    ];
    let mut sum = UeaElement::zero();
    for (sign, right, expansion) in printed {
        let c = column_capelli(&col(&[1, 2, 2, 4], &right));
        expect_eq(&format!("[1224|{right:?}]"), &c, &u(expansion))?;
        sum.add_scaled(&c, &sign.into());
    }
    let whole = capelli_bitableau(&s, &tt).map_err(|e| e.to_string())?;
    expect_eq("[S|T] vs printed column sum", &whole, &sum)?;
    let dets = &p("+(1|2)(2|3) -(1|3)(2|2)") * &p("+(2|3)(4|4) -(2|4)(4|3)");
    expect_eq("K[S|T]", &koszul(&whole), &dets)?;
    let star = star_capelli_bitableau(&s, &tt).map_err(|e| e.to_string())?;
    let pers = &p("+(1|2)(2|3) +(1|3)(2|2)") * &p("+(2|3)(4|4) +(2|4)(4|3)");
    expect_eq("K[S|T]*", &koszul(&star), &pers)?;
    Ok(format!("{} PBW terms, K = det*det, K* = per*per", whole.num_terms()))
}

fn capelli_determinant() -> Check {
    for n in 2..=4usize {
        let inc: Vec<Letter> = (1..=n as Letter).collect();
        let dec: Vec<Letter> = inc.iter().rev().copied().collect();
        let row = |w: &[Letter]| Tableau::row(w).map_err(|e| e.to_string());
        let e = capelli_bitableau(&row(&dec)?, &row(&inc)?).map_err(|e| e.to_string())?;
        expect_eq(&format!("cdet({n})"), &e, &capelli_cdet(n))?;
        let det = poly_h(n, n).map_err(|e| e.to_string())?;
        expect_eq(&format!("K cdet({n})"), &koszul(&e), &det)?;
    }
    Ok("n = 2, 3, 4".into())
}

fn oracle_sweep() -> Check {
    let mut sweep = Sweep::new(4, 4);
    let mut pairs = 0;
    for flavor in Flavor::ALL {
        let report = sweep.run_all(flavor, 4).map_err(|e| e.to_string())?;
        if let Some(m) = report.mismatches.first() {
            return Err(m.to_string());
        }
        pairs += report.pairs;
    }
    Ok(format!(
        "{pairs} (flavor, S, T) triples, each on {} multilinear monomials of degree <= 4",
        sweep.dim()
    ))
}

fn sign_resolution() -> Check {
    suites("signs", &[Params { n: 1, max_degree: 4 }, Params { n: 2, max_degree: 4 }, Params { n: 3, max_degree: 4 }])?;
    // The competing reading (-1)^h is already wrong for a single box.
    let one = column_capelli(&col(&[1], &[2]));
    let star = capelli::capelli::column_capelli_star(&col(&[1], &[2]));
    if one != star {
        return Err("h = 1 column and *-column differ".into());
    }
    let signs: Vec<i8> = (1..=4).map(binomial_sign).collect();
    Ok(format!("exponent C(h,2) confirmed for h <= 4, n <= 3; signs h=1..4: {signs:?}; (-1)^h rejected at h=1"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        ("golden column [1232|2343]", Box::new(golden_depth_four)),
        ("golden column [123|211] and its Koszul image", Box::new(golden_depth_three)),
        ("golden shape (2,2) Laplace expansion", Box::new(golden_example_two_by_two)),
        ("Capelli column determinant", Box::new(capelli_determinant)),
        (
            "round trips, degree <= 4, n <= 3",
            Box::new(|| suites("roundtrip", &(1..=3).map(|n| Params { n, max_degree: 4 }).collect::<Vec<_>>())),
        ),
        (
            "equivariance, degree <= 3, n <= 3",
            Box::new(|| suites("equivariance", &(1..=3).map(|n| Params { n, max_degree: 3 }).collect::<Vec<_>>())),
        ),
        (
            "centrality and Koszul images of H_k, K_lambda",
            Box::new(|| suites("centrality", &(1..=3).map(|n| Params { n, max_degree: 4 }).collect::<Vec<_>>())),
        ),
        ("basis counts and ranks, n = 2, degree <= 4", Box::new(|| suites("bases", &[Params { n: 2, max_degree: 4 }]))),
        ("oracle equivalence, full sweep", Box::new(oracle_sweep)),
        ("column sign relation", Box::new(sign_resolution)),
        ("Young-Capelli action, n = 2", Box::new(|| suites("action", &[Params { n: 2, max_degree: 4 }]))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
