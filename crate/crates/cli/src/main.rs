mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use idempart::action::{BruteForce, DEFAULT_BRUTE_FORCE_MAX, PERMUTATION_ENUMERATION_MAX};
use idempart::monoid::BRUTE_FORCE_IDEMPOTENT_MAX;
use idempart::stabilizer::stabilizer_order_formula;
use idempart::verify::{self, VerifyConfig};
use idempart::{
    count_idempotents_of_type, enumerate_idempotents, enumerate_type_vectors, factorial,
    p_pentagonal, type_vector_of, BigNat,
};

use report::{table, ReportRecord};

/// Overrides the size limit for brute-force orbit, stabilizer and Burnside computations.
const BRUTE_FORCE_ENV: &str = "IDEMPART_BRUTE_FORCE_MAX";
const PENTAGONAL_CAP: usize = 200;
const FORMULA_CAP: usize = 60;
const TYPES_CAP: usize = 60;

#[derive(Parser)]
#[command(
    name = "idempart",
    version,
    about = "Partition numbers via Burnside's lemma on idempotent maps"
)]
struct Cli {
    /// Emit one JSON record per line instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Parallelize the type-vector sum and the Burnside stabilizer sum.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute p(n).
    Pn {
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Count (and optionally list) idempotent self-maps of [n].
    Idempotents {
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// One row per conjugation orbit of idempotents on [n].
    Orbits { n: usize },
    /// Per-type idempotent counts and stabilizer orders over V_n.
    Types { n: usize },
    /// Run every cross-check between closed forms and brute-force oracles.
    Verify {
        #[arg(long, default_value_t = 5)]
        exhaustive: usize,
        #[arg(long, default_value_t = 50)]
        formula: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Pentagonal,
    Burnside,
}

enum Failure {
    /// Bad arguments; exit code 2.
    Usage(String),
    /// An identity did not hold; exit code 1.
    Verification(String, Vec<ReportRecord>),
}

fn brute_force_limit() -> Result<usize, Failure> {
    match std::env::var(BRUTE_FORCE_ENV) {
        Err(_) => Ok(DEFAULT_BRUTE_FORCE_MAX),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(v) if v <= PERMUTATION_ENUMERATION_MAX => Ok(v),
            _ => Err(Failure::Usage(format!(
                "{BRUTE_FORCE_ENV} must be an integer in 0..={PERMUTATION_ENUMERATION_MAX}, got {s:?}"
            ))),
        },
    }
}

fn require(n: usize, max: usize, what: &str) -> Result<(), Failure> {
    if n > max {
        return Err(Failure::Usage(format!(
            "{what}: n = {n} exceeds the limit {max}"
        )));
    }
    Ok(())
}

fn usage(e: idempart::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn cmd_pn(n: usize, method: Method, parallel: bool) -> Result<Vec<ReportRecord>, Failure> {
    let (tag, value) = match method {
        Method::Pentagonal => {
            require(n, PENTAGONAL_CAP, "pentagonal recurrence")?;
            ("pentagonal", p_pentagonal(n))
        }
        Method::Formula => {
            require(n, FORMULA_CAP, "type-vector formula")?;
            if n == 0 {
                return Err(Failure::Usage("the formula needs n >= 1".into()));
            }
            let v = idempart::formula::p_via_formula_with(n, parallel).map_err(usage)?;
            ("formula", v)
        }
        Method::Burnside => {
            let max = brute_force_limit()?;
            require(n, max, "Burnside brute force")?;
            if n == 0 {
                return Err(Failure::Usage("Burnside counting needs n >= 1".into()));
            }
            let v = BruteForce::new(max)
                .parallel(parallel)
                .count_orbits(n)
                .map_err(usage)?;
            ("burnside", v)
        }
    };
    Ok(vec![ReportRecord::new("pn", "result", tag)
        .param("n", n)
        .value("p", value)])
}

fn cmd_idempotents(n: usize, list: bool) -> Result<Vec<ReportRecord>, Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if !list {
        require(n, TYPES_CAP, "idempotent count")?;
        let total = idempart::total_idempotents(n);
        return Ok(vec![ReportRecord::new(
            "idempotents",
            "summary",
            "type-sum",
        )
        .param("n", n)
        .value("count", total)]);
    }
    require(n, BRUTE_FORCE_IDEMPOTENT_MAX, "idempotent listing")?;
    let all = enumerate_idempotents(n);
    let mut out: Vec<ReportRecord> = all
        .iter()
        .map(|f| {
            ReportRecord::new("idempotents", "row", "constructive")
                .param("n", n)
                .list("map", f.map().values())
                .list("type", type_vector_of(f).counts())
        })
        .collect();
    out.push(
        ReportRecord::new("idempotents", "summary", "constructive")
            .param("n", n)
            .value("count", all.len()),
    );
    Ok(out)
}

fn cmd_orbits(n: usize, parallel: bool) -> Result<Vec<ReportRecord>, Failure> {
    let max = brute_force_limit()?;
    require(n, max, "orbit enumeration")?;
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let brute = BruteForce::new(max).parallel(parallel);
    let nf = factorial(n as u64);
    let order: Vec<_> = enumerate_type_vectors(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for f in enumerate_idempotents(n) {
        if seen.contains(&f) {
            continue;
        }
        let orbit = brute.orbit_of(&f).map_err(usage)?;
        let stab = brute.stabilizer(&f).map_err(usage)?;
        let product = BigNat::from(orbit.len()) * BigNat::from(stab.len());
        out.push(
            ReportRecord::new("orbits", "row", "bruteforce")
                .param("n", n)
                .list("type", type_vector_of(&f).counts())
                .list("representative", f.map().values())
                .value("orbit_size", orbit.len())
                .value("stabilizer_order", stab.len())
                .flag("product_is_n_factorial", product == nf),
        );
        seen.extend(orbit);
    }
    // rows follow the V_n order used by `types`
    out.sort_by_key(|r| {
        let t = r.get("type");
        order.iter().position(|g| {
            g.counts()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
                == t
        })
    });
    out.push(
        ReportRecord::new("orbits", "summary", "bruteforce")
            .param("n", n)
            .value("orbits", out.len())
            .value("idempotents", seen.len())
            .value("n_factorial", nf),
    );
    Ok(out)
}

fn cmd_types(n: usize) -> Result<Vec<ReportRecord>, Failure> {
    require(n, TYPES_CAP, "type-vector listing")?;
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut sum = BigNat::zero();
    for g in enumerate_type_vectors(n) {
        let count = count_idempotents_of_type(n, &g).map_err(usage)?;
        let stab = stabilizer_order_formula(&g);
        let term = &count * &stab;
        sum += &term;
        out.push(
            ReportRecord::new("types", "row", "formula")
                .param("n", n)
                .list("type", g.counts())
                .value("idempotents", count)
                .value("stabilizer_order", stab)
                .value("summand", term),
        );
    }
    let nf = factorial(n as u64);
    let quotient = sum.div_exact(&nf).ok_or_else(|| {
        Failure::Verification("type-vector sum not divisible by n!".into(), Vec::new())
    })?;
    out.push(
        ReportRecord::new("types", "summary", "formula")
            .param("n", n)
            .value("types", out.len())
            .value("sum", sum)
            .value("n_factorial", nf)
            .value("quotient", quotient),
    );
    Ok(out)
}

fn cmd_verify(
    exhaustive: usize,
    formula: usize,
    parallel: bool,
) -> Result<Vec<ReportRecord>, Failure> {
    let max = brute_force_limit()?;
    require(exhaustive, max, "--exhaustive")?;
    require(formula, FORMULA_CAP, "--formula")?;
    let cfg = VerifyConfig {
        exhaustive,
        formula,
        parallel,
        ..VerifyConfig::default()
    };
    let outcomes = verify::run(&cfg, BruteForce::new(max)).map_err(usage)?;
    let mut first_failure = None;
    let mut out: Vec<ReportRecord> = outcomes
        .iter()
        .map(|o| {
            if !o.passed && first_failure.is_none() {
                first_failure = Some(format!("{} (n = {}): {}", o.name, o.n, o.detail));
            }
            ReportRecord::new("verify", "check", o.name)
                .param("n", o.n)
                .flag("passed", o.passed)
                .value("detail", &o.detail)
        })
        .collect();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    out.push(
        ReportRecord::new("verify", "summary", "all")
            .param("exhaustive", exhaustive)
            .param("formula", formula)
            .value("checks", outcomes.len())
            .value("failed", failed),
    );
    match first_failure {
        None => Ok(out),
        Some(msg) => Err(Failure::Verification(msg, out)),
    }
}

fn render_human(records: &[ReportRecord]) -> String {
    let Some(first) = records.first() else {
        return String::new();
    };
    let rows = |keys: &[&str]| -> Vec<Vec<String>> {
        records
            .iter()
            .filter(|r| r.record == "row")
            .map(|r| keys.iter().map(|k| r.get(k)).collect())
            .collect()
    };
    let summary = records.iter().find(|r| r.record == "summary");
    match first.command {
        "pn" => format!(
            "p({}) = {}  [{}]",
            first.params["n"],
            first.get("p"),
            first.method
        ),
        "idempotents" => {
            let s = summary.expect("summary record");
            let mut out = String::new();
            if records.len() > 1 {
                out.push_str(&table(&["map", "type"], &rows(&["map", "type"])));
                out.push('\n');
            }
            out.push_str(&format!("count = {}  [{}]", s.get("count"), s.method));
            out
        }
        "orbits" => {
            let s = summary.expect("summary record");
            let keys = [
                "type",
                "representative",
                "orbit_size",
                "stabilizer_order",
                "product_is_n_factorial",
            ];
            format!(
                "{}\norbits = {}, idempotents = {}, n! = {}",
                table(
                    &[
                        "type",
                        "representative",
                        "orbit",
                        "stabilizer",
                        "orbit*stab=n!"
                    ],
                    &rows(&keys)
                ),
                s.get("orbits"),
                s.get("idempotents"),
                s.get("n_factorial")
            )
        }
        "types" => {
            let s = summary.expect("summary record");
            let keys = ["type", "idempotents", "stabilizer_order", "summand"];
            format!(
                "{}\nsum = {}\nn! = {}\np(n) = {}",
                table(
                    &["type", "idempotents", "stabilizer", "summand"],
                    &rows(&keys)
                ),
                s.get("sum"),
                s.get("n_factorial"),
                s.get("quotient")
            )
        }
        "verify" => {
            let checks: Vec<Vec<String>> = records
                .iter()
                .filter(|r| r.record == "check")
                .map(|r| {
                    let ok = r.get("passed") == "true";
                    vec![
                        if ok { "ok" } else { "FAIL" }.to_string(),
                        r.method.to_string(),
                        r.params["n"].clone(),
                        r.get("detail"),
                    ]
                })
                .collect();
            let s = summary.expect("summary record");
            format!(
                "{}\n{} checks, {} failed",
                table(&["status", "check", "n", "detail"], &checks),
                s.get("checks"),
                s.get("failed")
            )
        }
        _ => String::new(),
    }
}

fn emit(records: &mut [ReportRecord], json: bool, started: Instant) {
    let ms = started.elapsed().as_millis().to_string();
    for r in records.iter_mut() {
        r.elapsed_ms = ms.clone();
    }
    if json {
        for r in records.iter() {
            println!("{}", serde_json::to_string(r).expect("records serialize"));
        }
    } else {
        println!("{}", render_human(records));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = match cli.command {
        Command::Pn { n, method } => cmd_pn(n, method, cli.parallel),
        Command::Idempotents { n, list } => cmd_idempotents(n, list),
        Command::Orbits { n } => cmd_orbits(n, cli.parallel),
        Command::Types { n } => cmd_types(n),
        Command::Verify {
            exhaustive,
            formula,
        } => cmd_verify(exhaustive, formula, cli.parallel),
    };
    match result {
        Ok(mut records) => {
            emit(&mut records, cli.json, started);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg, mut records)) => {
            emit(&mut records, cli.json, started);
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
