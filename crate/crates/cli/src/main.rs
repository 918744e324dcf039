use std::fs;
use std::process::ExitCode;

use capelli::capelli::{
    capelli_bitableau, capelli_h, capelli_k, column_capelli, column_capelli_star, right_young_capelli,
    star_capelli_bitableau, ColumnPair,
};
use capelli::koszul::{inverse_koszul, koszul};
use capelli::oracle::{direct_agrees, Flavor, Sweep};
use capelli::poly::PolyJson;
use capelli::uea::UeaJson;
use capelli::verify::{self, Params};
use capelli::{Monomial, Partition, Poly, Tableau, UeaElement};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

const MAX_N: usize = 5;
const MAX_DEGREE: usize = 6;

#[derive(Parser)]
#[command(name = "capelli", version, about = "Capelli bitableaux and the Koszul map, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Size of the alphabet, i.e. the n of gl(n).
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Lift the size guards (n <= 5, degree <= 6, |shape| <= 6).
    #[arg(long)]
    unsafe_sizes: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Capelli,
    Star,
    Young,
    Column,
    ColumnStar,
}

#[derive(Subcommand)]
enum Verb {
    /// PBW expansion of a Capelli bitableau.
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long = "type", value_enum, default_value_t = Kind::Capelli)]
        kind: Kind,
        /// Left tableau, rows separated by '/', e.g. "1 2 / 2 4". Columns use the reading word.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Apply the Koszul map to an element of U(gl(n)).
    Koszul {
        #[command(flatten)]
        common: Common,
        /// JSON or text element, e.g. "-e[1,2]e[2,1]e[3,1] +e[1,1]e[3,1]".
        #[arg(long, conflicts_with = "element_file")]
        element: Option<String>,
        #[arg(long)]
        element_file: Option<String>,
    },
    /// Apply the inverse Koszul map to a polynomial.
    InverseKoszul {
        #[command(flatten)]
        common: Common,
        /// Text polynomial, e.g. "+(1|2)(2|1)".
        #[arg(long, conflicts_with = "element_file")]
        poly: Option<String>,
        #[arg(long)]
        element_file: Option<String>,
    },
    /// The central elements H_k(n) or K_shape(n).
    Central {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "shape")]
        k: Option<usize>,
        #[arg(long)]
        shape: Option<String>,
    },
    /// Run named verification suites, comma separated, or "all".
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Compare the superpolarization oracle with the Laplace expansions.
    OracleCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long = "type", value_enum, default_value_t = Kind::Capelli)]
        kind: Kind,
        /// Without --left/--right, every pair of weight <= min(max-degree, n) is swept.
        #[arg(long, requires = "right")]
        left: Option<String>,
        #[arg(long, requires = "left")]
        right: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Count standard pairs per degree against the PBW dimension.
    BasisCount {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

/// A failure, carrying its exit code.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(2, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn guard(common: &Common, degree: usize, weight: usize) -> Result<(), Failure> {
    if common.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if common.unsafe_sizes {
        return Ok(());
    }
    if common.n > MAX_N {
        return Err(usage(format!("n = {} exceeds {MAX_N}; pass --unsafe-sizes to proceed", common.n)));
    }
    if degree > MAX_DEGREE {
        return Err(usage(format!("degree {degree} exceeds {MAX_DEGREE}; pass --unsafe-sizes to proceed")));
    }
    if weight > MAX_DEGREE {
        return Err(usage(format!("shape of size {weight} exceeds {MAX_DEGREE}; pass --unsafe-sizes to proceed")));
    }
    Ok(())
}

fn tableau(text: &str, n: usize) -> Result<Tableau, Failure> {
    let t: Tableau = text.parse()?;
    t.check_alphabet(n)?;
    Ok(t)
}

fn element_out(e: &UeaElement, f: Format) -> String {
    match f {
        Format::Text => e.to_string(),
        Format::Json => serde_json::to_string(&e.to_json()).expect("serializable"),
    }
}

fn poly_out(p: &Poly, f: Format) -> String {
    match f {
        Format::Text => p.to_string(),
        Format::Json => serde_json::to_string(&p.to_json()).expect("serializable"),
    }
}

fn read_input(inline: Option<String>, file: Option<String>) -> Result<String, Failure> {
    match (inline, file) {
        (Some(s), None) => Ok(s),
        (None, Some(path)) => fs::read_to_string(&path).map_err(|e| usage(format!("{path}: {e}"))),
        _ => Err(usage("give the input inline or with --element-file")),
    }
}

fn parse_element(text: &str) -> Result<UeaElement, Failure> {
    if text.trim_start().starts_with('[') {
        let json: UeaJson = serde_json::from_str(text)?;
        Ok(UeaElement::from_json(&json)?)
    } else {
        Ok(text.trim().parse()?)
    }
}

fn parse_poly(text: &str) -> Result<Poly, Failure> {
    if text.trim_start().starts_with('[') {
        let json: PolyJson = serde_json::from_str(text)?;
        Ok(Poly::from_json(&json)?)
    } else {
        Ok(text.trim().parse()?)
    }
}

fn check_indices(max_index: u8, n: usize) -> Result<(), Failure> {
    if max_index as usize > n {
        return Err(usage(format!("index {max_index} outside 1..={n}")));
    }
    Ok(())
}

fn flavor(kind: Kind) -> Result<Flavor, Failure> {
    match kind {
        Kind::Capelli => Ok(Flavor::Determinantal),
        Kind::Star => Ok(Flavor::Star),
        Kind::Young => Ok(Flavor::Young),
        Kind::Column | Kind::ColumnStar => Err(usage("oracle-check takes --type capelli, star or young")),
    }
}

fn expand(common: Common, kind: Kind, left: &str, right: &str) -> Outcome {
    let (s, t) = (tableau(left, common.n)?, tableau(right, common.n)?);
    let weight = s.shape().weight();
    guard(&common, weight, weight)?;
    let e = match kind {
        Kind::Capelli => capelli_bitableau(&s, &t)?,
        Kind::Star => star_capelli_bitableau(&s, &t)?,
        Kind::Young => right_young_capelli(&s, &t)?,
        Kind::Column | Kind::ColumnStar => {
            let c = ColumnPair::new(s.reading_word(), t.reading_word())?;
            if kind == Kind::Column {
                column_capelli(&c)
            } else {
                column_capelli_star(&c)
            }
        }
    };
    Ok(element_out(&e, common.format))
}

fn central(common: Common, k: Option<usize>, shape: Option<String>) -> Outcome {
    let e = match (k, shape) {
        (Some(k), None) => {
            guard(&common, k, k)?;
            capelli_h(k, common.n)?
        }
        (None, Some(shape)) => {
            let shape: Partition = shape.parse()?;
            guard(&common, shape.weight(), shape.weight())?;
            capelli_k(&shape, common.n)?
        }
        _ => return Err(usage("give exactly one of --k or --shape")),
    };
    Ok(element_out(&e, common.format))
}

fn run_verify(common: Common, suite: &str, max_degree: usize) -> Outcome {
    guard(&common, max_degree, max_degree)?;
    let outcomes = verify::run_list(suite, Params { n: common.n, max_degree })?;
    let failed = outcomes.iter().any(|o| !o.passed());
    let text = match common.format {
        Format::Text => outcomes.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
        Format::Json => serde_json::to_string(
            &outcomes
                .iter()
                .map(|o| {
                    json!({"suite": o.suite, "passed": o.passed(), "checks": o.checks, "counterexample": o.counterexample})
                })
                .collect::<Vec<_>>(),
        )?,
    };
    if failed {
        Err(Failure(1, text))
    } else {
        Ok(text)
    }
}

fn oracle_check(common: Common, kind: Kind, left: Option<String>, right: Option<String>, max_degree: usize) -> Outcome {
    guard(&common, max_degree, max_degree)?;
    let flavor = flavor(kind)?;
    let (pairs, inputs, bad) = match (left, right) {
        (Some(l), Some(r)) => {
            let (s, t) = (tableau(&l, common.n)?, tableau(&r, common.n)?);
            let mut inputs = 0;
            let mut bad = None;
            for d in 0..=max_degree {
                for m in Monomial::all_of_degree(common.n, d) {
                    inputs += 1;
                    let p = Poly::from_monomial(m.clone());
                    if bad.is_none() && !direct_agrees(flavor, &s, &t, &p)? {
                        bad = Some(format!("{} S=[{s}] T=[{t}] on {m}", flavor.name()));
                    }
                }
            }
            (1, inputs, bad)
        }
        _ => {
            let d = max_degree.min(common.n);
            let mut sweep = Sweep::new(common.n, d);
            let report = sweep.run_all(flavor, d)?;
            (report.pairs, report.inputs_per_pair, report.mismatches.first().map(ToString::to_string))
        }
    };
    let text = match common.format {
        Format::Text => match &bad {
            None => format!("PASS oracle {} ({pairs} pairs, {inputs} inputs each)", flavor.name()),
            Some(b) => format!("FAIL oracle {}\n  counterexample: {b}", flavor.name()),
        },
        Format::Json => serde_json::to_string(
            &json!({"flavor": flavor.name(), "pairs": pairs, "inputs": inputs, "passed": bad.is_none(), "counterexample": bad}),
        )?,
    };
    match bad {
        None => Ok(text),
        Some(_) => Err(Failure(1, text)),
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn basis_count(common: Common, max_degree: usize) -> Outcome {
    guard(&common, max_degree, max_degree)?;
    let n = common.n;
    let mut rows = Vec::new();
    for d in 0..=max_degree {
        let (mut standard, mut costandard) = (0, 0);
        for shape in Partition::all_of(d) {
            if shape.first_part() <= n {
                standard += Tableau::enumerate_standard(&shape, n).len().pow(2);
            }
            if shape.len() <= n {
                costandard += Tableau::enumerate_costandard(&shape, n).len().pow(2);
            }
        }
        rows.push((d, standard, costandard, binomial(n * n + d - 1, d)));
    }
    let ok = rows.iter().all(|&(_, s, c, dim)| s == dim && c == dim);
    let text = match common.format {
        Format::Text => rows
            .iter()
            .map(|(d, s, c, dim)| format!("degree {d}: standard {s} costandard {c} dimension {dim}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => serde_json::to_string(
            &rows
                .iter()
                .map(|(d, s, c, dim)| json!({"degree": d, "standard": s, "costandard": c, "dimension": dim}))
                .collect::<Vec<_>>(),
        )?,
    };
    if ok {
        Ok(text)
    } else {
        Err(Failure(1, text))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.verb {
        Verb::Expand { common, kind, left, right } => expand(common, kind, &left, &right),
        Verb::Koszul { common, element, element_file } => {
            let e = parse_element(&read_input(element, element_file)?)?;
            check_indices(e.max_index(), common.n)?;
            Ok(poly_out(&koszul(&e), common.format))
        }
        Verb::InverseKoszul { common, poly, element_file } => {
            let p = parse_poly(&read_input(poly, element_file)?)?;
            check_indices(p.max_index(), common.n)?;
            guard(&common, p.degree().unwrap_or(0), 0)?;
            Ok(element_out(&inverse_koszul(&p), common.format))
        }
        Verb::Central { common, k, shape } => central(common, k, shape),
        Verb::Verify { common, suite, max_degree } => run_verify(common, &suite, max_degree),
        Verb::OracleCheck { common, kind, left, right, max_degree } => {
            oracle_check(common, kind, left, right, max_degree)
        }
        Verb::BasisCount { common, max_degree } => basis_count(common, max_degree),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure(code, text)) => {
            if code == 1 {
                println!("{text}");
            } else {
                eprintln!("error: {text}");
            }
            ExitCode::from(code)
        }
    }
}
